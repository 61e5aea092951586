#pragma once

// Endpoint kernel shared by boundary tracing and partial duality.
//
// Every arrow occurrence k owns two nodes: 2k is the endpoint met first when
// walking its circle in stored order, 2k+1 the one met second. Three perfect
// matchings live on the nodes:
//   arrow arcs   2k <-> 2k+1 (common line segments),
//   vertex arcs  out-node of one occurrence <-> in-node of the next one,
//   edge arcs    head(copy 0) <-> tail(copy 1), head(copy 1) <-> tail(copy 0).
// Circles are the cycles of arrow + vertex arcs, faces the cycles of
// vertex + edge arcs.

#include <cstddef>
#include <vector>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon::detail {

struct Occurrence {
  std::size_t circle = 0;
  std::size_t position = 0;
  Sign sign = Sign::Plus;
  int copy = 0;
  std::size_t partner = 0;  // occurrence index of the other copy
};

struct EndpointGraph {
  std::vector<Occurrence> occurrences;
  std::vector<std::size_t> circle_offset;  // first occurrence index per circle
  std::vector<std::size_t> vertex_arc;
  std::vector<std::size_t> edge_arc;

  std::size_t num_nodes() const { return vertex_arc.size(); }

  std::size_t tail(std::size_t k) const {
    return 2 * k + (occurrences[k].sign == Sign::Plus ? 0 : 1);
  }
  std::size_t head(std::size_t k) const {
    return 2 * k + (occurrences[k].sign == Sign::Plus ? 1 : 0);
  }
  bool is_tail(std::size_t node) const { return tail(node / 2) == node; }

  std::size_t degree(std::size_t c) const { return circle_offset[c + 1] - circle_offset[c]; }

  /// The vertex line segment reached from `node` along its vertex arc.
  VertexSegment gap_of(std::size_t node) const;
};

EndpointGraph build_endpoint_graph(const ArrowPresentation& g);

}  // namespace ribbon::detail
