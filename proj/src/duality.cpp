#include "ribbon/duality.hpp"

#include <stdexcept>
#include <unordered_set>

#include "endpoint_graph.hpp"

namespace ribbon {

TrackedDual partial_dual_tracked(const ArrowPresentation& g, std::span<const Label> edges) {
  const std::unordered_set<Label> chosen(edges.begin(), edges.end());
  for (const Label& l : chosen) {
    if (!g.has_edge(l)) throw std::invalid_argument("unknown edge '" + l + "'");
  }

  const detail::EndpointGraph eg = detail::build_endpoint_graph(g);
  const std::size_t num_occ = eg.occurrences.size();
  auto label_of = [&](std::size_t k) -> const Label& {
    const auto& o = eg.occurrences[k];
    return g.circles()[o.circle][o.position].label;
  };

  // For a dualised edge the new arrows run head(e') -> tail(e'') and
  // head(e'') -> tail(e'); the old arrow arcs become its edge line segments.
  std::vector<std::size_t> arrow_arc(2 * num_occ);
  std::vector<std::size_t> owner(2 * num_occ);
  std::vector<char> is_new_tail(2 * num_occ);
  for (std::size_t k = 0; k < num_occ; ++k) {
    std::size_t t = eg.tail(k);
    std::size_t h = eg.head(k);
    if (chosen.contains(label_of(k))) {
      t = eg.head(k);
      h = eg.tail(eg.occurrences[k].partner);
    }
    arrow_arc[t] = h;
    arrow_arc[h] = t;
    owner[t] = owner[h] = k;
    is_new_tail[t] = 1;
    is_new_tail[h] = 0;
  }

  std::vector<Circle> circles;
  std::vector<std::vector<VertexSegment>> origin;
  std::vector<char> visited(2 * num_occ, 0);
  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    if (eg.degree(c) == 0) {
      circles.emplace_back();
      origin.push_back({VertexSegment{c, 0, true}});
      continue;
    }
    for (std::size_t start = 2 * eg.circle_offset[c]; start < 2 * eg.circle_offset[c + 1]; ++start) {
      if (visited[start]) continue;
      Circle circle;
      std::vector<VertexSegment> gaps;
      std::size_t n = start;
      do {
        const std::size_t m = arrow_arc[n];
        visited[n] = visited[m] = 1;
        circle.push_back({label_of(owner[n]), is_new_tail[n] ? Sign::Plus : Sign::Minus});
        gaps.push_back(eg.gap_of(m));
        n = eg.vertex_arc[m];
      } while (n != start);
      circles.push_back(std::move(circle));
      origin.push_back(std::move(gaps));
    }
  }
  return {ArrowPresentation(std::move(circles)), std::move(origin)};
}

ArrowPresentation partial_dual(const ArrowPresentation& g, std::span<const Label> edges) {
  return partial_dual_tracked(g, edges).graph;
}

ArrowPresentation partial_dual(const ArrowPresentation& g, const Label& edge) {
  return partial_dual(g, std::span<const Label>(&edge, 1));
}

ArrowPresentation geometric_dual(const ArrowPresentation& g) {
  const std::vector<Label> all = g.labels();
  return partial_dual(g, all);
}

}  // namespace ribbon
