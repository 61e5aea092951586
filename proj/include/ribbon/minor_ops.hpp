#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon {

// Gaps: gap p of a circle is the vertex line segment between its arrows p and
// p+1 (cyclically). A degree-d circle has d gaps; an empty circle has gap 0.
//
// All operations are pure and throw std::invalid_argument for bad parameters.
// Precondition failures of the splitting moves use the messages
// "dual distance is odd" and "distance is odd".

ArrowPresentation delete_edge(const ArrowPresentation& g, const Label& e);

/// G/e = G^e - e.
ArrowPresentation contract_edge(const ArrowPresentation& g, const Label& e);

/// Removes connected component `comp` (ids as in UnderlyingGraph::component).
ArrowPresentation delete_component(const ArrowPresentation& g, std::size_t comp);

/// Removes circle `c` and every edge with an arrow on it.
ArrowPresentation delete_vertex(const ArrowPresentation& g, std::size_t c);

/// Fewest other arrows between the two arrows of loop `e`, either way round.
std::size_t dual_distance(const ArrowPresentation& g, const Label& e);

/// Fewest arrows strictly between gaps p and q of circle `c`, either way round.
std::size_t vls_dual_distance(const ArrowPresentation& g, std::size_t c, std::size_t p, std::size_t q);

/// Fewest edge line segments strictly between segments s and t of face `b`,
/// either way round. s and t index BoundaryComponent::segments.
std::size_t boundary_distance(const ArrowPresentation& g, std::size_t b, std::size_t s, std::size_t t);

/// Gaps p and q of circle c admit an even split: at least one of the two arcs
/// between them holds an even number of arrows. On even-degree circles this is
/// the same as an even vls_dual_distance.
bool is_even_vertex_split(const ArrowPresentation& g, std::size_t c, std::size_t p, std::size_t q);

/// Face counterpart of is_even_vertex_split, with p and q indexing the face's
/// vertex line segments and edge line segments counted along each side.
bool is_even_face_split(const ArrowPresentation& g, std::size_t b, std::size_t p, std::size_t q);

bool is_proper_contraction(const ArrowPresentation& g, const Label& e);

/// Computed as is_proper_contraction on the geometric dual.
bool is_proper_deletion(const ArrowPresentation& g, const Label& e);

/// The same predicate from the three face conditions: both edge line segments
/// of e on one face, at odd distance, and consistently oriented on that face.
bool is_proper_deletion_direct(const ArrowPresentation& g, const Label& e);

/// Evenly splits circle c at gaps p and q: inserts a consistent loop at the two
/// gaps and contracts it.
ArrowPresentation split_vertex(const ArrowPresentation& g, std::size_t c, std::size_t p, std::size_t q);

/// Cut-and-close form of split_vertex: the two arcs between the gaps each close
/// into a circle.
ArrowPresentation split_vertex_direct(const ArrowPresentation& g, std::size_t c, std::size_t p,
                                      std::size_t q);

/// Evenly splits face b at its vertex line segments p and q (indices into the
/// face's vertex line segments, in walk order).
ArrowPresentation split_face(const ArrowPresentation& g, std::size_t b, std::size_t p, std::size_t q);

/// Identifies circles c1 and c2: c2's arrows are appended after c1's, the
/// result takes c1's place.
ArrowPresentation join_vertices(const ArrowPresentation& g, std::size_t c1, std::size_t c2);

/// True iff some third circle is adjacent to both c1 and c2.
bool is_permissible_join(const ArrowPresentation& g, std::size_t c1, std::size_t c2);

enum class MoveKind {
  DeleteEdge,
  DeleteComponent,
  DeleteVertex,
  ContractEdge,
  SplitVertex,
  SplitFace,
  JoinVertices,
};

/**
 * One atomic minor move.
 *
 * Parameter use by kind:
 *   DeleteEdge, ContractEdge  edge
 *   DeleteComponent           element = component id
 *   DeleteVertex              element = circle
 *   SplitVertex               element = circle, p, q = gaps
 *   SplitFace                 element = face, p, q = vertex line segment indices
 *   JoinVertices              element = first circle, other = second circle
 */
struct MinorMove {
  MoveKind kind = MoveKind::DeleteEdge;
  Label edge;
  std::size_t element = 0;
  std::size_t other = 0;
  std::size_t p = 0;
  std::size_t q = 0;

  friend bool operator==(const MinorMove&, const MinorMove&) = default;
};

ArrowPresentation apply_move(const ArrowPresentation& g, const MinorMove& m);

/// Line form matching the CLI subcommands, e.g. "contract a", "split-vertex 0 1 3".
std::string to_string(const MinorMove& m);
MinorMove parse_move(const std::string& line);

}  // namespace ribbon
