#include "ribbon/arrow_presentation.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "endpoint_graph.hpp"

namespace ribbon {

ArrowPresentation::ArrowPresentation(std::vector<Circle> circles) : circles_(std::move(circles)) {
  std::unordered_map<Label, int> count;
  for (const Circle& c : circles_) {
    for (const Arrow& a : c) {
      if (a.label.empty()) {
        throw std::invalid_argument("empty edge label");
      }
      ++count[a.label];
    }
  }
  for (const auto& [label, n] : count) {
    if (n != 2) {
      throw std::invalid_argument("label '" + label + "' occurs " + std::to_string(n) +
                                  " times; every label must mark exactly two arrows");
    }
  }
}

const Circle& ArrowPresentation::circle(std::size_t c) const {
  if (c >= circles_.size()) {
    throw std::out_of_range("no circle " + std::to_string(c));
  }
  return circles_[c];
}

std::size_t ArrowPresentation::num_occurrences() const {
  std::size_t n = 0;
  for (const Circle& c : circles_) n += c.size();
  return n;
}

std::vector<Label> ArrowPresentation::labels() const {
  std::vector<Label> out;
  std::unordered_map<Label, bool> seen;
  for (const Circle& c : circles_) {
    for (const Arrow& a : c) {
      if (seen.emplace(a.label, true).second) out.push_back(a.label);
    }
  }
  return out;
}

bool ArrowPresentation::has_edge(const Label& label) const {
  for (const Circle& c : circles_) {
    for (const Arrow& a : c) {
      if (a.label == label) return true;
    }
  }
  return false;
}

std::pair<Location, Location> ArrowPresentation::occurrences(const Label& label) const {
  Location found[2];
  int n = 0;
  for (std::size_t c = 0; c < circles_.size() && n < 2; ++c) {
    for (std::size_t p = 0; p < circles_[c].size() && n < 2; ++p) {
      if (circles_[c][p].label == label) found[n++] = {c, p};
    }
  }
  if (n != 2) {
    throw std::invalid_argument("unknown edge '" + label + "'");
  }
  return {found[0], found[1]};
}

std::size_t BoundaryComponent::edge_segment_count() const {
  std::size_t n = 0;
  for (const Segment& s : segments) n += std::holds_alternative<EdgeSegment>(s) ? 1 : 0;
  return n;
}

std::vector<std::size_t> BoundaryComponent::vertex_segment_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (std::holds_alternative<VertexSegment>(segments[i])) out.push_back(i);
  }
  return out;
}

std::vector<BoundaryComponent> trace_boundaries(const ArrowPresentation& g) {
  const detail::EndpointGraph eg = detail::build_endpoint_graph(g);
  std::vector<bool> visited(eg.num_nodes(), false);
  std::vector<BoundaryComponent> faces;

  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    if (eg.degree(c) == 0) {
      faces.push_back({{VertexSegment{c, 0, true}}});
      continue;
    }
    for (std::size_t node = 2 * eg.circle_offset[c]; node < 2 * eg.circle_offset[c + 1]; ++node) {
      if (visited[node]) continue;
      BoundaryComponent face;
      std::size_t cur = node;
      do {
        visited[cur] = true;
        face.segments.emplace_back(eg.gap_of(cur));
        const std::size_t m = eg.vertex_arc[cur];
        visited[m] = true;
        const detail::Occurrence& o = eg.occurrences[m / 2];
        const bool at_head = !eg.is_tail(m);
        const int side = (at_head == (o.copy == 0)) ? 1 : 2;
        face.segments.emplace_back(EdgeSegment{g.circles()[o.circle][o.position].label, side, at_head});
        cur = eg.edge_arc[m];
      } while (cur != node);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool UnderlyingGraph::adjacent(std::size_t a, std::size_t b) const {
  for (const UnderlyingEdge& e : edges) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  }
  return false;
}

UnderlyingGraph underlying_graph(const ArrowPresentation& g) {
  UnderlyingGraph ug;
  ug.num_vertices = g.num_vertices();
  ug.degrees.resize(ug.num_vertices);
  for (std::size_t c = 0; c < ug.num_vertices; ++c) ug.degrees[c] = g.circles()[c].size();

  std::vector<std::size_t> parent(ug.num_vertices);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::unordered_map<Label, std::size_t> pending;
  for (std::size_t c = 0; c < ug.num_vertices; ++c) {
    for (const Arrow& a : g.circles()[c]) {
      if (auto it = pending.find(a.label); it != pending.end()) {
        ug.edges[it->second].v = c;
        const std::size_t ra = find(ug.edges[it->second].u), rb = find(c);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        pending.erase(it);
      } else {
        pending.emplace(a.label, ug.edges.size());
        ug.edges.push_back({a.label, c, c});
      }
    }
  }

  ug.component.assign(ug.num_vertices, 0);
  std::unordered_map<std::size_t, std::size_t> id_of_root;
  for (std::size_t c = 0; c < ug.num_vertices; ++c) {
    auto [it, inserted] = id_of_root.emplace(find(c), ug.num_components);
    if (inserted) ++ug.num_components;
    ug.component[c] = it->second;
  }
  return ug;
}

std::size_t degree(const ArrowPresentation& g, std::size_t circle) {
  return g.circle(circle).size();
}

std::size_t num_components(const ArrowPresentation& g) { return underlying_graph(g).num_components; }

std::size_t num_faces(const ArrowPresentation& g) { return trace_boundaries(g).size(); }

int euler_genus(const ArrowPresentation& g) {
  const auto c = static_cast<int>(num_components(g));
  const auto v = static_cast<int>(g.num_vertices());
  const auto e = static_cast<int>(g.num_edges());
  const auto f = static_cast<int>(num_faces(g));
  return 2 * c - v + e - f;
}

bool is_loop(const ArrowPresentation& g, const Label& e) {
  const auto [a, b] = g.occurrences(e);
  return a.circle == b.circle;
}

bool is_orientable_loop(const ArrowPresentation& g, const Label& e) {
  const auto [a, b] = g.occurrences(e);
  return a.circle == b.circle && g.at(a).sign == g.at(b).sign;
}

}  // namespace ribbon
