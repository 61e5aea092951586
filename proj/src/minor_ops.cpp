#include "ribbon/minor_ops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ribbon/duality.hpp"

namespace ribbon {

namespace {

void require_edge(const ArrowPresentation& g, const Label& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("unknown edge '" + e + "'");
}

void require_circle(const ArrowPresentation& g, std::size_t c) {
  if (c >= g.num_vertices()) throw std::invalid_argument("no circle " + std::to_string(c));
}

void require_gap(const ArrowPresentation& g, std::size_t c, std::size_t gap) {
  const std::size_t gaps = std::max<std::size_t>(g.circles()[c].size(), 1);
  if (gap >= gaps) {
    throw std::invalid_argument("circle " + std::to_string(c) + " has no gap " + std::to_string(gap));
  }
}

struct Insertion {
  std::size_t circle;
  std::size_t gap;
  Sign sign;
};

// Places the two arrows of kFreshLabel after arrow `gap` of the given circles.
ArrowPresentation with_fresh_edge(const ArrowPresentation& g, Insertion a, Insertion b) {
  if (g.has_edge(kFreshLabel)) throw std::invalid_argument("reserved label already present");
  std::vector<Circle> circles = g.circles();
  for (std::size_t c = 0; c < circles.size(); ++c) {
    if (c != a.circle && c != b.circle) continue;
    const Circle& old = g.circles()[c];
    Circle next;
    auto insert_here = [&](std::size_t gap) {
      if (a.circle == c && a.gap == gap) next.push_back({kFreshLabel, a.sign});
      if (b.circle == c && b.gap == gap) next.push_back({kFreshLabel, b.sign});
    };
    if (old.empty()) {
      insert_here(0);
    }
    for (std::size_t i = 0; i < old.size(); ++i) {
      next.push_back(old[i]);
      insert_here(i);
    }
    circles[c] = std::move(next);
  }
  return ArrowPresentation(std::move(circles));
}

std::vector<Circle> without_labels(const ArrowPresentation& g, const std::unordered_set<Label>& drop) {
  std::vector<Circle> circles;
  circles.reserve(g.num_vertices());
  for (const Circle& c : g.circles()) {
    Circle kept;
    for (const Arrow& a : c) {
      if (!drop.contains(a.label)) kept.push_back(a);
    }
    circles.push_back(std::move(kept));
  }
  return circles;
}

}  // namespace

ArrowPresentation delete_edge(const ArrowPresentation& g, const Label& e) {
  require_edge(g, e);
  return ArrowPresentation(without_labels(g, {e}));
}

ArrowPresentation contract_edge(const ArrowPresentation& g, const Label& e) {
  require_edge(g, e);
  return delete_edge(partial_dual(g, e), e);
}

ArrowPresentation delete_component(const ArrowPresentation& g, std::size_t comp) {
  const UnderlyingGraph ug = underlying_graph(g);
  if (comp >= ug.num_components) throw std::invalid_argument("no component " + std::to_string(comp));
  std::vector<Circle> circles;
  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    if (ug.component[c] != comp) circles.push_back(g.circles()[c]);
  }
  return ArrowPresentation(std::move(circles));
}

ArrowPresentation delete_vertex(const ArrowPresentation& g, std::size_t c) {
  require_circle(g, c);
  std::unordered_set<Label> incident;
  for (const Arrow& a : g.circles()[c]) incident.insert(a.label);
  std::vector<Circle> circles = without_labels(g, incident);
  circles.erase(circles.begin() + static_cast<std::ptrdiff_t>(c));
  return ArrowPresentation(std::move(circles));
}

std::size_t dual_distance(const ArrowPresentation& g, const Label& e) {
  const auto [a, b] = g.occurrences(e);
  if (a.circle != b.circle) throw std::invalid_argument("edge '" + e + "' is not a loop");
  const std::size_t d = g.circles()[a.circle].size();
  const std::size_t inside = b.position - a.position - 1;
  return std::min(inside, d - 2 - inside);
}

std::size_t vls_dual_distance(const ArrowPresentation& g, std::size_t c, std::size_t p, std::size_t q) {
  require_circle(g, c);
  require_gap(g, c, p);
  require_gap(g, c, q);
  const std::size_t d = g.circles()[c].size();
  if (d == 0) return 0;
  const std::size_t forward = (q + d - p) % d;
  return std::min(forward, d - forward);
}

std::size_t boundary_distance(const ArrowPresentation& g, std::size_t b, std::size_t s, std::size_t t) {
  const auto faces = trace_boundaries(g);
  if (b >= faces.size()) throw std::invalid_argument("no face " + std::to_string(b));
  const auto& segs = faces[b].segments;
  const std::size_t n = segs.size();
  if (s >= n || t >= n) throw std::invalid_argument("segment not on face " + std::to_string(b));
  if (s == t) return 0;
  auto count_between = [&](std::size_t from, std::size_t to) {
    std::size_t count = 0;
    for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
      count += std::holds_alternative<EdgeSegment>(segs[i]) ? 1 : 0;
    }
    return count;
  };
  return std::min(count_between(s, t), count_between(t, s));
}

bool is_even_vertex_split(const ArrowPresentation& g, std::size_t c, std::size_t p, std::size_t q) {
  vls_dual_distance(g, c, p, q);
  const std::size_t d = g.circles()[c].size();
  if (d == 0) return true;
  const std::size_t forward = (q + d - p) % d;
  return forward % 2 == 0 || (d - forward) % 2 == 0;
}

bool is_even_face_split(const ArrowPresentation& g, std::size_t b, std::size_t p, std::size_t q) {
  const auto faces = trace_boundaries(g);
  if (b >= faces.size()) throw std::invalid_argument("no face " + std::to_string(b));
  const auto vs = faces[b].vertex_segment_indices();
  if (p >= vs.size() || q >= vs.size()) {
    throw std::invalid_argument("face " + std::to_string(b) + " has " + std::to_string(vs.size()) +
                                " vertex line segments");
  }
  const std::size_t m = faces[b].edge_segment_count();
  if (m == 0) return true;
  const std::size_t forward = (q + vs.size() - p) % vs.size();
  return forward % 2 == 0 || (m - forward) % 2 == 0;
}

bool is_proper_contraction(const ArrowPresentation& g, const Label& e) {
  require_edge(g, e);
  return !(is_orientable_loop(g, e) && dual_distance(g, e) % 2 == 1);
}

bool is_proper_deletion(const ArrowPresentation& g, const Label& e) {
  require_edge(g, e);
  return is_proper_contraction(geometric_dual(g), e);
}

bool is_proper_deletion_direct(const ArrowPresentation& g, const Label& e) {
  require_edge(g, e);
  const auto faces = trace_boundaries(g);
  struct Hit {
    std::size_t face, index;
    bool forward;
  };
  std::vector<Hit> hits;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& segs = faces[f].segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (const auto* es = std::get_if<EdgeSegment>(&segs[i]); es && es->label == e) {
        hits.push_back({f, i, es->forward});
      }
    }
  }
  if (hits[0].face != hits[1].face) return true;
  if (boundary_distance(g, hits[0].face, hits[0].index, hits[1].index) % 2 == 0) return true;
  return hits[0].forward != hits[1].forward;
}

ArrowPresentation split_vertex(const ArrowPresentation& g, std::size_t c, std::size_t p, std::size_t q) {
  if (!is_even_vertex_split(g, c, p, q)) throw std::invalid_argument("dual distance is odd");
  const ArrowPresentation with_loop = with_fresh_edge(g, {c, p, Sign::Plus}, {c, q, Sign::Plus});
  return contract_edge(with_loop, kFreshLabel);
}

ArrowPresentation split_vertex_direct(const ArrowPresentation& g, std::size_t c, std::size_t p,
                                      std::size_t q) {
  if (!is_even_vertex_split(g, c, p, q)) throw std::invalid_argument("dual distance is odd");
  const Circle& old = g.circles()[c];
  const std::size_t d = old.size();
  Circle first, second;
  if (d > 0) {
    const std::size_t span = (q + d - p) % d;
    for (std::size_t i = 1; i <= span; ++i) second.push_back(old[(p + i) % d]);
    for (std::size_t i = 1; i <= d - span; ++i) first.push_back(old[(q + i) % d]);
  }
  std::vector<Circle> circles = g.circles();
  circles[c] = std::move(first);
  circles.push_back(std::move(second));
  return ArrowPresentation(std::move(circles));
}

ArrowPresentation split_face(const ArrowPresentation& g, std::size_t b, std::size_t p, std::size_t q) {
  const auto faces = trace_boundaries(g);
  if (b >= faces.size()) throw std::invalid_argument("no face " + std::to_string(b));
  const auto vs = faces[b].vertex_segment_indices();
  if (p >= vs.size() || q >= vs.size()) {
    throw std::invalid_argument("face " + std::to_string(b) + " has " + std::to_string(vs.size()) +
                                " vertex line segments");
  }
  if (!is_even_face_split(g, b, p, q)) throw std::invalid_argument("distance is odd");

  const auto& sp = std::get<VertexSegment>(faces[b].segments[vs[p]]);
  const auto& sq = std::get<VertexSegment>(faces[b].segments[vs[q]]);
  const ArrowPresentation with_edge =
      with_fresh_edge(g, {sp.circle, sp.gap, sp.forward ? Sign::Plus : Sign::Minus},
                      {sq.circle, sq.gap, sq.forward ? Sign::Plus : Sign::Minus});
  return contract_edge(with_edge, kFreshLabel);
}

ArrowPresentation join_vertices(const ArrowPresentation& g, std::size_t c1, std::size_t c2) {
  require_circle(g, c1);
  require_circle(g, c2);
  if (c1 == c2) throw std::invalid_argument("cannot join a circle with itself");
  std::vector<Circle> circles = g.circles();
  circles[c1].insert(circles[c1].end(), circles[c2].begin(), circles[c2].end());
  circles.erase(circles.begin() + static_cast<std::ptrdiff_t>(c2));
  return ArrowPresentation(std::move(circles));
}

bool is_permissible_join(const ArrowPresentation& g, std::size_t c1, std::size_t c2) {
  require_circle(g, c1);
  require_circle(g, c2);
  if (c1 == c2) throw std::invalid_argument("cannot join a circle with itself");
  const UnderlyingGraph ug = underlying_graph(g);
  for (std::size_t w = 0; w < ug.num_vertices; ++w) {
    if (w != c1 && w != c2 && ug.adjacent(w, c1) && ug.adjacent(w, c2)) return true;
  }
  return false;
}

ArrowPresentation apply_move(const ArrowPresentation& g, const MinorMove& m) {
  switch (m.kind) {
    case MoveKind::DeleteEdge:
      return delete_edge(g, m.edge);
    case MoveKind::DeleteComponent:
      return delete_component(g, m.element);
    case MoveKind::DeleteVertex:
      return delete_vertex(g, m.element);
    case MoveKind::ContractEdge:
      return contract_edge(g, m.edge);
    case MoveKind::SplitVertex:
      return split_vertex(g, m.element, m.p, m.q);
    case MoveKind::SplitFace:
      return split_face(g, m.element, m.p, m.q);
    case MoveKind::JoinVertices:
      return join_vertices(g, m.element, m.other);
  }
  throw std::logic_error("unhandled move kind");
}

std::string to_string(const MinorMove& m) {
  const auto n = [](std::size_t v) { return std::to_string(v); };
  switch (m.kind) {
    case MoveKind::DeleteEdge:
      return "delete " + m.edge;
    case MoveKind::DeleteComponent:
      return "delete-component " + n(m.element);
    case MoveKind::DeleteVertex:
      return "delete-vertex " + n(m.element);
    case MoveKind::ContractEdge:
      return "contract " + m.edge;
    case MoveKind::SplitVertex:
      return "split-vertex " + n(m.element) + " " + n(m.p) + " " + n(m.q);
    case MoveKind::SplitFace:
      return "split-face " + n(m.element) + " " + n(m.p) + " " + n(m.q);
    case MoveKind::JoinVertices:
      return "join " + n(m.element) + " " + n(m.other);
  }
  return {};
}

MinorMove parse_move(const std::string& line) {
  std::istringstream in(line);
  std::string verb;
  in >> verb;
  MinorMove m;
  auto need = [&](auto& value) {
    if (!(in >> value)) throw std::invalid_argument("malformed move '" + line + "'");
  };
  if (verb == "delete") {
    m.kind = MoveKind::DeleteEdge;
    need(m.edge);
  } else if (verb == "contract") {
    m.kind = MoveKind::ContractEdge;
    need(m.edge);
  } else if (verb == "delete-component") {
    m.kind = MoveKind::DeleteComponent;
    need(m.element);
  } else if (verb == "delete-vertex") {
    m.kind = MoveKind::DeleteVertex;
    need(m.element);
  } else if (verb == "split-vertex" || verb == "split-face") {
    m.kind = verb == "split-vertex" ? MoveKind::SplitVertex : MoveKind::SplitFace;
    need(m.element);
    need(m.p);
    need(m.q);
  } else if (verb == "join") {
    m.kind = MoveKind::JoinVertices;
    need(m.element);
    need(m.other);
  } else {
    throw std::invalid_argument("unknown move '" + verb + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing text in move '" + line + "'");
  return m;
}

}  // namespace ribbon
