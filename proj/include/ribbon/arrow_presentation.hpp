#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ribbon {

using Label = std::string;

/// Direction of a marking arrow relative to the stored traversal order of its circle.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// One marking arrow on a circle.
struct Arrow {
  Label label;
  Sign sign = Sign::Plus;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A vertex boundary, read cyclically. An empty circle is an isolated vertex.
using Circle = std::vector<Arrow>;

struct Location {
  std::size_t circle = 0;
  std::size_t position = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

/**
 * A ribbon graph encoded as a set of circles carrying labelled marking arrows.
 *
 * Every label occurs exactly twice. The two occurrences are ordered by
 * (circle, position); the first is called copy 0, the second copy 1.
 * Construction validates the label-pair invariant and throws
 * std::invalid_argument on violation.
 */
class ArrowPresentation {
 public:
  ArrowPresentation() = default;
  explicit ArrowPresentation(std::vector<Circle> circles);

  const std::vector<Circle>& circles() const { return circles_; }
  const Circle& circle(std::size_t c) const;

  std::size_t num_vertices() const { return circles_.size(); }
  std::size_t num_edges() const { return num_occurrences() / 2; }
  std::size_t num_occurrences() const;

  /// Edge labels in order of first occurrence.
  std::vector<Label> labels() const;
  bool has_edge(const Label& label) const;

  /// Both occurrences of `label`, copy 0 first. Throws std::invalid_argument for unknown labels.
  std::pair<Location, Location> occurrences(const Label& label) const;

  const Arrow& at(Location loc) const { return circles_[loc.circle][loc.position]; }

  friend bool operator==(const ArrowPresentation&, const ArrowPresentation&) = default;

 private:
  std::vector<Circle> circles_;
};

/// A vertex line segment: the gap on `circle` after the arrow at `gap`.
/// `forward` is true when the boundary walk passes it in stored circle order.
struct VertexSegment {
  std::size_t circle = 0;
  std::size_t gap = 0;
  bool forward = true;

  friend bool operator==(const VertexSegment&, const VertexSegment&) = default;
};

/// An edge line segment. Side 1 joins the head of copy 0 to the tail of copy 1,
/// side 2 joins the head of copy 1 to the tail of copy 0. `forward` is true when
/// the boundary walk passes it from the head end to the tail end.
struct EdgeSegment {
  Label label;
  int side = 1;
  bool forward = true;

  friend bool operator==(const EdgeSegment&, const EdgeSegment&) = default;
};

using Segment = std::variant<VertexSegment, EdgeSegment>;

/// A face: the closed walk of alternating vertex and edge line segments.
struct BoundaryComponent {
  std::vector<Segment> segments;

  std::size_t edge_segment_count() const;
  /// Indices into `segments` of the vertex line segments, in walk order.
  std::vector<std::size_t> vertex_segment_indices() const;
};

std::vector<BoundaryComponent> trace_boundaries(const ArrowPresentation& g);

struct UnderlyingEdge {
  Label label;
  std::size_t u = 0;
  std::size_t v = 0;
};

/// The abstract multigraph: one vertex per circle, one edge per label.
struct UnderlyingGraph {
  std::size_t num_vertices = 0;
  std::vector<UnderlyingEdge> edges;
  std::vector<std::size_t> degrees;
  /// Connected component id per vertex; ids ordered by smallest member vertex.
  std::vector<std::size_t> component;
  std::size_t num_components = 0;

  bool adjacent(std::size_t a, std::size_t b) const;
};

UnderlyingGraph underlying_graph(const ArrowPresentation& g);
std::size_t degree(const ArrowPresentation& g, std::size_t circle);
std::size_t num_components(const ArrowPresentation& g);
std::size_t num_faces(const ArrowPresentation& g);

/// 2c - |V| + |E| - |F|.
int euler_genus(const ArrowPresentation& g);

/// Both occurrences on one circle.
bool is_loop(const ArrowPresentation& g, const Label& e);
/// A loop whose arrows agree with one direction of travel around its circle.
bool is_orientable_loop(const ArrowPresentation& g, const Label& e);

/// Reserved label for auxiliary edges; it cannot be produced by the .arp parser.
inline const Label kFreshLabel = "~x";

}  // namespace ribbon
