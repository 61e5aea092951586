#pragma once

#include <span>
#include <vector>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon {

/// Partial dual with respect to `edges` (duplicates ignored). Labels carry over
/// unchanged, so e in g corresponds to e in the result. Throws
/// std::invalid_argument if a label is not an edge of g.
ArrowPresentation partial_dual(const ArrowPresentation& g, std::span<const Label> edges);
ArrowPresentation partial_dual(const ArrowPresentation& g, const Label& edge);

ArrowPresentation geometric_dual(const ArrowPresentation& g);

/// Partial dual plus the vertex line segment of g that each gap of the result
/// came from: origin[c][p] is the old gap behind gap p of new circle c.
/// Vertex line segments are shared by G and G^A, which is what makes this
/// correspondence well defined.
struct TrackedDual {
  ArrowPresentation graph;
  std::vector<std::vector<VertexSegment>> origin;
};

TrackedDual partial_dual_tracked(const ArrowPresentation& g, std::span<const Label> edges);

}  // namespace ribbon
