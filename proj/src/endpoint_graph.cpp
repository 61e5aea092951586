#include "endpoint_graph.hpp"

#include <unordered_map>

namespace ribbon::detail {

VertexSegment EndpointGraph::gap_of(std::size_t node) const {
  const Occurrence& o = occurrences[node / 2];
  if (node % 2 == 1) {
    return {o.circle, o.position, true};
  }
  const std::size_t d = degree(o.circle);
  return {o.circle, (o.position + d - 1) % d, false};
}

EndpointGraph build_endpoint_graph(const ArrowPresentation& g) {
  EndpointGraph eg;
  const auto& circles = g.circles();
  eg.circle_offset.reserve(circles.size() + 1);

  std::unordered_map<Label, std::size_t> first_seen;
  for (std::size_t c = 0; c < circles.size(); ++c) {
    eg.circle_offset.push_back(eg.occurrences.size());
    for (std::size_t p = 0; p < circles[c].size(); ++p) {
      const Arrow& a = circles[c][p];
      Occurrence occ{c, p, a.sign, 0, 0};
      const std::size_t k = eg.occurrences.size();
      if (auto it = first_seen.find(a.label); it != first_seen.end()) {
        occ.copy = 1;
        occ.partner = it->second;
        eg.occurrences[it->second].partner = k;
      } else {
        first_seen.emplace(a.label, k);
      }
      eg.occurrences.push_back(occ);
    }
  }
  eg.circle_offset.push_back(eg.occurrences.size());

  const std::size_t n = 2 * eg.occurrences.size();
  eg.vertex_arc.assign(n, 0);
  eg.edge_arc.assign(n, 0);

  for (std::size_t c = 0; c < circles.size(); ++c) {
    const std::size_t begin = eg.circle_offset[c];
    const std::size_t d = eg.degree(c);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t out = 2 * (begin + i) + 1;
      const std::size_t in = 2 * (begin + (i + 1) % d);
      eg.vertex_arc[out] = in;
      eg.vertex_arc[in] = out;
    }
  }

  for (std::size_t k = 0; k < eg.occurrences.size(); ++k) {
    const std::size_t j = eg.occurrences[k].partner;
    const std::size_t h = eg.head(k);
    const std::size_t t = eg.tail(j);
    eg.edge_arc[h] = t;
    eg.edge_arc[t] = h;
  }
  return eg;
}

}  // namespace ribbon::detail
