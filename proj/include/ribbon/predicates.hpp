#pragma once

#include <optional>
#include <vector>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon {

/// Every circle carries an even number of arrows.
bool is_eulerian(const ArrowPresentation& g);

/// Every face carries an even number of edge line segments.
bool is_even_face(const ArrowPresentation& g);

/// A 2-colouring of the faces (indexed as by trace_boundaries) in which the two
/// edge line segments of every edge get different colours, if one exists.
std::optional<std::vector<int>> checkerboard_colouring(const ArrowPresentation& g);
bool is_checkerboard_colourable(const ArrowPresentation& g);

/// The underlying multigraph has no odd cycle (a loop is an odd cycle).
bool is_bipartite(const ArrowPresentation& g);

/// Euler genus zero.
bool is_plane(const ArrowPresentation& g);

/// For a bouquet: no other loop interleaves with loop e. Throws
/// std::invalid_argument when g has more than one circle.
bool is_trivial_loop(const ArrowPresentation& g, const Label& e);

}  // namespace ribbon
