#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the ArrowPresentation container.

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/arrow_presentation.hpp"

namespace oracle {

/// Flag model: every arrow occurrence h owns flags 2h and 2h+1 (its two
/// corners in circle order). tau0 crosses a vertex line segment, tau1 runs
/// along an edge side, tau2 crosses the arrow itself. An edge is twisted when
/// its two arrows carry different signs.
struct FlagModel {
  std::size_t isolated = 0;
  std::vector<std::size_t> tau0, tau1, tau2;
  std::vector<std::size_t> edge_of_flag;
  std::size_t num_edges = 0;
};

FlagModel flag_model(const ribbon::ArrowPresentation& g);

struct FaceInfo {
  std::size_t count = 0;
  std::vector<std::size_t> sizes;          ///< edge line segments per face, walk faces only
  std::vector<std::vector<std::size_t>> edge_sides;  ///< per edge: the faces of its two sides
};

FaceInfo faces(const ribbon::ArrowPresentation& g);
std::size_t components(const ribbon::ArrowPresentation& g);
int genus(const ribbon::ArrowPresentation& g);

bool eulerian(const ribbon::ArrowPresentation& g);
bool even_face(const ribbon::ArrowPresentation& g);
/// Tries every 2-colouring of the faces.
bool checkerboard(const ribbon::ArrowPresentation& g);
/// Tries every 2-colouring of the circles.
bool bipartite(const ribbon::ArrowPresentation& g);

/// Smallest spelling over the closure of g under circle rotation, circle
/// reversal, circle transposition and reversing both arrows of one label,
/// with labels renamed by first occurrence.
std::string orbit_key(const ribbon::ArrowPresentation& g);

/// Every arrangement of `edges` labels over exactly `circles` non-empty
/// circles with all sign choices (heavily redundant). Optionally connected.
std::vector<ribbon::ArrowPresentation> raw_presentations(std::size_t edges, std::size_t circles,
                                                         bool connected);

ribbon::ArrowPresentation parse(const std::string& inline_form);

}  // namespace oracle
