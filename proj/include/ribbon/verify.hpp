#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon {

struct EnumerationSpec {
  std::size_t min_edges = 1;
  std::size_t max_edges = 3;  ///< at most kMaxEnumeratedEdges
  std::size_t max_circles = 4;
  bool connected_only = true;
};

inline constexpr std::size_t kMaxEnumeratedEdges = 4;

/// One canonical representative per equivalence class with edge count in
/// [min_edges, max_edges] and at most max_circles circles, sorted by canonical
/// form. Throws std::invalid_argument for out-of-range bounds.
std::vector<ArrowPresentation> enumerate(const EnumerationSpec& spec);

struct ReportLine {
  std::string check;  ///< e.g. "T6/cc"
  std::string form;   ///< canonical form of the graph
  bool predicate = false;
  bool excluded = false;  ///< excluded-minor side (or: property held, for lemmas)
  bool agree = false;
  std::string detail;
};

struct Report {
  std::string id;
  std::size_t examined = 0;  ///< graphs in the sweep after any class restriction
  std::size_t predicate_true = 0;
  std::vector<ReportLine> lines;

  std::size_t counterexamples() const;
  bool ok() const { return counterexamples() == 0; }
  /// One tab-separated record per line, then '#' summary lines.
  std::string to_text() const;
};

/// "T1".."T7", "C1".."C4".
std::vector<std::string> theorem_ids();
/// "L-cc-closed", "L-bipartite-closed", "L-genus", "L-dual-eulerian", "L-dual-cc".
std::vector<std::string> lemma_ids();

/// Compares the class predicate with its excluded-minor characterisation on
/// every enumerated graph. `jobs` worker threads; output does not depend on it.
Report verify_theorem(const std::string& id, const EnumerationSpec& spec, unsigned jobs = 1);

/// Closure, genus monotonicity and move-duality checks over the sweep.
Report verify_lemma(const std::string& id, const EnumerationSpec& spec, unsigned jobs = 1);

/// Dispatches to verify_theorem or verify_lemma; throws std::invalid_argument
/// for an unknown id.
Report verify(const std::string& id, const EnumerationSpec& spec, unsigned jobs = 1);

}  // namespace ribbon
