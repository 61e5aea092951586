#include "ribbon/predicates.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace ribbon {

namespace {

// 2-colours a multigraph given as an edge list; nullopt on an odd cycle.
std::optional<std::vector<int>> two_colour(std::size_t n,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a == b) return std::nullopt;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace

bool is_eulerian(const ArrowPresentation& g) {
  for (const Circle& c : g.circles()) {
    if (c.size() % 2 != 0) return false;
  }
  return true;
}

bool is_even_face(const ArrowPresentation& g) {
  for (const BoundaryComponent& f : trace_boundaries(g)) {
    if (f.edge_segment_count() % 2 != 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> checkerboard_colouring(const ArrowPresentation& g) {
  const auto faces = trace_boundaries(g);
  std::unordered_map<Label, std::vector<std::size_t>> faces_of;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const Segment& s : faces[f].segments) {
      if (const auto* es = std::get_if<EdgeSegment>(&s)) faces_of[es->label].push_back(f);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> constraints;
  for (const Label& l : g.labels()) {
    const auto& fs = faces_of.at(l);
    constraints.emplace_back(fs[0], fs[1]);
  }
  return two_colour(faces.size(), constraints);
}

bool is_checkerboard_colourable(const ArrowPresentation& g) {
  return checkerboard_colouring(g).has_value();
}

bool is_bipartite(const ArrowPresentation& g) {
  const UnderlyingGraph ug = underlying_graph(g);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(ug.edges.size());
  for (const UnderlyingEdge& e : ug.edges) edges.emplace_back(e.u, e.v);
  return two_colour(ug.num_vertices, edges).has_value();
}

bool is_plane(const ArrowPresentation& g) { return euler_genus(g) == 0; }

bool is_trivial_loop(const ArrowPresentation& g, const Label& e) {
  if (g.num_vertices() != 1) throw std::invalid_argument("trivial loops are only decided for bouquets");
  const auto [a, b] = g.occurrences(e);
  const Circle& c = g.circles()[0];
  std::unordered_map<Label, int> inside;
  for (std::size_t i = a.position + 1; i < b.position; ++i) ++inside[c[i].label];
  for (const auto& [label, n] : inside) {
    if (n == 1) return false;
  }
  return true;
}

}  // namespace ribbon
