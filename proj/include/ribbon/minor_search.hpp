#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/arrow_presentation.hpp"
#include "ribbon/minor_ops.hpp"

namespace ribbon {

/// The five move systems.
///   Eulerian                proper contractions, component deletions, vertex splits
///   EvenFace                proper deletions, component deletions, face splits
///   CheckerboardColourable  contractions, component deletions, vertex splits
///   Bipartite               deletions, component deletions, face splits
///   BipartiteJoin           permissible joins, vertex deletions, edge deletions
enum class MinorFamily { Eulerian, EvenFace, CheckerboardColourable, Bipartite, BipartiteJoin };

std::string_view to_string(MinorFamily f);
/// Accepts "eulerian", "even-face", "cc", "bipartite", "bipartite-join".
MinorFamily parse_family(std::string_view name);

/// Every legal move of the family on g, ordered deletions, contractions,
/// splits, joins, then by parameters.
std::vector<MinorMove> applicable_moves(const ArrowPresentation& g, MinorFamily family);

/// Equivalence used to recognise a target: ribbon equivalence, except for
/// BipartiteJoin where the underlying abstract graphs are compared.
bool matches(const ArrowPresentation& g, const ArrowPresentation& target, MinorFamily family);

struct SearchOptions {
  /// Discard states with more than |V(g)| + |E(g)| + max |V(h)| circles.
  bool vertex_cap = true;
};

struct MinorSearchResult {
  bool found = false;
  std::size_t target = 0;  ///< index into the target list when found
  std::vector<MinorMove> witness;
  std::size_t states = 0;  ///< distinct states visited
};

/**
 * Breadth-first search over family moves from g for any of `targets`.
 *
 * States are deduplicated by equivalence class. Besides the optional vertex
 * cap, two reductions keep the space finite: states with fewer edges than
 * every target are dropped, and surplus isolated circles (beyond the most any
 * target has) are deleted right away, as part of the move that made them.
 * The witness replays exactly from g with apply_move.
 */
MinorSearchResult find_minor(const ArrowPresentation& g, std::span<const ArrowPresentation> targets,
                             MinorFamily family, SearchOptions options = {});

bool contains_minor(const ArrowPresentation& g, const ArrowPresentation& h, MinorFamily family,
                    SearchOptions options = {});

/// Named excluded minors. The B3 family entries are pinned by the properties
/// checked in catalog_violations.
struct TargetCatalog {
  ArrowPresentation b1;                       // (e+ e+)
  ArrowPresentation b1_twisted;               // (e+ e-)
  ArrowPresentation b1_dual;                  // (e+)(e+)
  ArrowPresentation b3;                       // (a+ b+ c+ a+ b+ c+)
  ArrowPresentation b3_minus_e;               // (a+ b+ a+ b+)
  ArrowPresentation b3_twisted_minus_e;       // (a+ b+ a- b-)
  ArrowPresentation b3_dual;                  // geometric dual of b3
  ArrowPresentation b3_twisted_minus_e_dual;  // geometric dual of b3_twisted_minus_e
};

TargetCatalog build_catalog();
/// Human-readable list of failed catalog invariants; empty when all hold.
std::vector<std::string> catalog_violations(const TargetCatalog& catalog);
/// The validated catalog. Aborts the process if an invariant fails.
const TargetCatalog& catalog();

// Excluded-minor characterisations. Each returns true iff g contains none of
// the listed minors in the given family.

/// Targets B1*, B1-bar; checkerboard colourable minors.
bool cc_by_excluded_minors(const ArrowPresentation& g);
/// Targets B1*, B1-bar, B3-e; Eulerian minors.
bool cc_by_excluded_eulerian_minors(const ArrowPresentation& g);
/// Targets B1, B1-bar; bipartite minors.
bool bipartite_by_excluded_minors(const ArrowPresentation& g);
/// Targets B1, B1-bar; bipartite join minors.
bool bipartite_by_join_minors(const ArrowPresentation& g);
/// Targets B1, B1-bar, B3-e; even-face minors.
bool bipartite_by_even_face_minors(const ArrowPresentation& g);

/// Targets B3, B3-bar-e. For checkerboard colourable g. `family` is
/// CheckerboardColourable or Eulerian.
bool plane_cc_by_excluded_minors(const ArrowPresentation& g,
                                 MinorFamily family = MinorFamily::CheckerboardColourable);
/// Targets B3*, (B3-bar-e)*. For bipartite g. `family` is Bipartite or EvenFace.
bool plane_bipartite_by_excluded_minors(const ArrowPresentation& g,
                                        MinorFamily family = MinorFamily::Bipartite);

/// Checkerboard colourable and plane, without a class precondition:
/// Eulerian minors B1*, B1-bar, B3, B3-e, B3-bar-e.
bool cc_plane_by_excluded_eulerian_minors(const ArrowPresentation& g);
/// Checkerboard colourable minors B1*, B1-bar, B3, B3-bar-e.
bool cc_plane_by_excluded_minors(const ArrowPresentation& g);
/// Bipartite and plane: even-face minors B1, B1-bar, B3*, B3-e, (B3-bar-e)*.
bool bipartite_plane_by_excluded_even_face_minors(const ArrowPresentation& g);
/// Bipartite minors B1, B1-bar, B3*, (B3-bar-e)*.
bool bipartite_plane_by_excluded_minors(const ArrowPresentation& g);

}  // namespace ribbon
