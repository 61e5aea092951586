#include "ribbon/minor_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ribbon/arp_io.hpp"
#include "ribbon/canonical.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/predicates.hpp"

namespace ribbon {

std::string_view to_string(MinorFamily f) {
  switch (f) {
    case MinorFamily::Eulerian:
      return "eulerian";
    case MinorFamily::EvenFace:
      return "even-face";
    case MinorFamily::CheckerboardColourable:
      return "cc";
    case MinorFamily::Bipartite:
      return "bipartite";
    case MinorFamily::BipartiteJoin:
      return "bipartite-join";
  }
  return "?";
}

MinorFamily parse_family(std::string_view name) {
  for (MinorFamily f : {MinorFamily::Eulerian, MinorFamily::EvenFace, MinorFamily::CheckerboardColourable,
                        MinorFamily::Bipartite, MinorFamily::BipartiteJoin}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown minor family '" + std::string(name) + "'");
}

std::vector<MinorMove> applicable_moves(const ArrowPresentation& g, MinorFamily family) {
  const bool contractions = family == MinorFamily::Eulerian || family == MinorFamily::CheckerboardColourable;
  const bool deletions = family == MinorFamily::EvenFace || family == MinorFamily::Bipartite ||
                         family == MinorFamily::BipartiteJoin;
  const bool proper_only = family == MinorFamily::Eulerian || family == MinorFamily::EvenFace;
  const bool joins = family == MinorFamily::BipartiteJoin;

  std::vector<MinorMove> moves;
  const std::vector<Label> labels = g.labels();

  if (deletions) {
    const ArrowPresentation dual = proper_only ? geometric_dual(g) : ArrowPresentation{};
    for (const Label& e : labels) {
      if (!proper_only || is_proper_contraction(dual, e)) {
        moves.push_back({MoveKind::DeleteEdge, e});
      }
    }
  }
  if (joins) {
    for (std::size_t c = 0; c < g.num_vertices(); ++c) {
      moves.push_back({MoveKind::DeleteVertex, {}, c});
    }
  } else {
    const std::size_t comps = num_components(g);
    for (std::size_t c = 0; c < comps; ++c) moves.push_back({MoveKind::DeleteComponent, {}, c});
  }
  if (contractions) {
    for (const Label& e : labels) {
      if (!proper_only || is_proper_contraction(g, e)) moves.push_back({MoveKind::ContractEdge, e});
    }
    for (std::size_t c = 0; c < g.num_vertices(); ++c) {
      const std::size_t gaps = std::max<std::size_t>(g.circles()[c].size(), 1);
      for (std::size_t p = 0; p < gaps; ++p) {
        for (std::size_t q = p; q < gaps; ++q) {
          if (is_even_vertex_split(g, c, p, q)) {
            moves.push_back({MoveKind::SplitVertex, {}, c, 0, p, q});
          }
        }
      }
    }
  }
  if (deletions && !joins) {
    const auto faces = trace_boundaries(g);
    for (std::size_t b = 0; b < faces.size(); ++b) {
      const auto vs = faces[b].vertex_segment_indices();
      for (std::size_t p = 0; p < vs.size(); ++p) {
        for (std::size_t q = p; q < vs.size(); ++q) {
          if (is_even_face_split(g, b, p, q)) {
            moves.push_back({MoveKind::SplitFace, {}, b, 0, p, q});
          }
        }
      }
    }
  }
  if (joins) {
    for (std::size_t a = 0; a < g.num_vertices(); ++a) {
      for (std::size_t b = a + 1; b < g.num_vertices(); ++b) {
        if (is_permissible_join(g, a, b)) moves.push_back({MoveKind::JoinVertices, {}, a, b});
      }
    }
  }
  return moves;
}

namespace {

std::string state_key(const ArrowPresentation& g, MinorFamily family) {
  if (family == MinorFamily::BipartiteJoin) return graph_key(underlying_graph(g));
  return canonicalize(g).str();
}

std::size_t isolated_count(const ArrowPresentation& g) {
  return static_cast<std::size_t>(
      std::count_if(g.circles().begin(), g.circles().end(), [](const Circle& c) { return c.empty(); }));
}

}  // namespace

bool matches(const ArrowPresentation& g, const ArrowPresentation& target, MinorFamily family) {
  return state_key(g, family) == state_key(target, family);
}

MinorSearchResult find_minor(const ArrowPresentation& g, std::span<const ArrowPresentation> targets,
                             MinorFamily family, SearchOptions options) {
  MinorSearchResult result;
  if (targets.empty()) return result;

  std::unordered_map<std::string, std::size_t> target_index;
  std::size_t min_edges = SIZE_MAX, max_isolated = 0, max_vertices = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    target_index.emplace(state_key(targets[i], family), i);
    min_edges = std::min(min_edges, targets[i].num_edges());
    max_isolated = std::max(max_isolated, isolated_count(targets[i]));
    max_vertices = std::max(max_vertices, targets[i].num_vertices());
  }
  const std::size_t vertex_cap = g.num_vertices() + g.num_edges() + max_vertices;

  struct Node {
    ArrowPresentation graph;
    std::size_t parent;
    std::vector<MinorMove> moves;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> visited;

  auto finish = [&](std::size_t node, std::size_t target) {
    result.found = true;
    result.target = target;
    std::vector<std::size_t> path;
    for (std::size_t n = node; n != 0; n = nodes[n].parent) path.push_back(n);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const auto& ms = nodes[*it].moves;
      result.witness.insert(result.witness.end(), ms.begin(), ms.end());
    }
    result.states = visited.size();
    return result;
  };

  const std::string start_key = state_key(g, family);
  nodes.push_back({g, 0, {}});
  visited.insert(start_key);
  if (auto it = target_index.find(start_key); it != target_index.end()) return finish(0, it->second);

  const MoveKind drop_isolated =
      family == MinorFamily::BipartiteJoin ? MoveKind::DeleteVertex : MoveKind::DeleteComponent;

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    for (const MinorMove& m : applicable_moves(nodes[current].graph, family)) {
      ArrowPresentation next = apply_move(nodes[current].graph, m);
      if (next.num_edges() < min_edges) continue;
      std::vector<MinorMove> moves{m};
      while (isolated_count(next) > max_isolated) {
        std::size_t last = next.num_vertices();
        while (!next.circles()[--last].empty()) {
        }
        MinorMove drop{drop_isolated, {}, last};
        if (drop_isolated == MoveKind::DeleteComponent) drop.element = underlying_graph(next).component[last];
        next = apply_move(next, drop);
        moves.push_back(drop);
      }
      if (options.vertex_cap && next.num_vertices() > vertex_cap) continue;
      std::string key = state_key(next, family);
      if (!visited.insert(key).second) continue;
      nodes.push_back({std::move(next), current, std::move(moves)});
      if (auto it = target_index.find(key); it != target_index.end()) return finish(nodes.size() - 1, it->second);
      queue.push_back(nodes.size() - 1);
    }
  }
  result.states = visited.size();
  return result;
}

bool contains_minor(const ArrowPresentation& g, const ArrowPresentation& h, MinorFamily family,
                    SearchOptions options) {
  return find_minor(g, std::span<const ArrowPresentation>(&h, 1), family, options).found;
}

TargetCatalog build_catalog() {
  TargetCatalog c;
  c.b1 = parse_arp("e+ e+");
  c.b1_twisted = parse_arp("e+ e-");
  c.b1_dual = parse_arp("e+\ne+");
  c.b3 = parse_arp("a+ b+ c+ a+ b+ c+");
  c.b3_minus_e = parse_arp("a+ b+ a+ b+");
  c.b3_twisted_minus_e = parse_arp("a+ b+ a- b-");
  c.b3_dual = geometric_dual(c.b3);
  c.b3_twisted_minus_e_dual = geometric_dual(c.b3_twisted_minus_e);
  return c;
}

std::vector<std::string> catalog_violations(const TargetCatalog& c) {
  std::vector<std::string> out;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  require(is_equivalent(c.b1_dual, geometric_dual(c.b1)), "B1* is not the dual of B1");
  require(!is_checkerboard_colourable(c.b1_dual), "B1* is checkerboard colourable");
  require(!is_checkerboard_colourable(c.b1_twisted), "B1-bar is checkerboard colourable");
  require(!is_checkerboard_colourable(c.b3_minus_e), "B3-e is checkerboard colourable");
  require(!is_bipartite(c.b1), "B1 is bipartite");
  require(!is_bipartite(c.b1_twisted), "B1-bar is bipartite");
  require(is_checkerboard_colourable(c.b3), "B3 is not checkerboard colourable");
  require(!is_plane(c.b3), "B3 is plane");
  require(is_checkerboard_colourable(c.b3_twisted_minus_e), "B3-bar-e is not checkerboard colourable");
  require(!is_plane(c.b3_twisted_minus_e), "B3-bar-e is plane");
  require(euler_genus(c.b3) == 2, "genus of B3 is not 2");
  require(euler_genus(c.b3_twisted_minus_e) == 1, "genus of B3-bar-e is not 1");
  return out;
}

const TargetCatalog& catalog() {
  static const TargetCatalog instance = [] {
    TargetCatalog c = build_catalog();
    const auto bad = catalog_violations(c);
    if (!bad.empty()) {
      for (const auto& msg : bad) std::cerr << "catalog invariant failed: " << msg << '\n';
      std::abort();
    }
    return c;
  }();
  return instance;
}

namespace {

bool excludes(const ArrowPresentation& g, std::initializer_list<ArrowPresentation> targets, MinorFamily family) {
  const std::vector<ArrowPresentation> list(targets);
  return !find_minor(g, list, family).found;
}

}  // namespace

bool cc_by_excluded_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1_dual, c.b1_twisted}, MinorFamily::CheckerboardColourable);
}

bool cc_by_excluded_eulerian_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1_dual, c.b1_twisted, c.b3_minus_e}, MinorFamily::Eulerian);
}

bool bipartite_by_excluded_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1, c.b1_twisted}, MinorFamily::Bipartite);
}

bool bipartite_by_join_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1, c.b1_twisted}, MinorFamily::BipartiteJoin);
}

bool bipartite_by_even_face_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1, c.b1_twisted, c.b3_minus_e}, MinorFamily::EvenFace);
}

bool plane_cc_by_excluded_minors(const ArrowPresentation& g, MinorFamily family) {
  if (family != MinorFamily::CheckerboardColourable && family != MinorFamily::Eulerian) {
    throw std::invalid_argument("family must be cc or eulerian");
  }
  const auto& c = catalog();
  return excludes(g, {c.b3, c.b3_twisted_minus_e}, family);
}

bool plane_bipartite_by_excluded_minors(const ArrowPresentation& g, MinorFamily family) {
  if (family != MinorFamily::Bipartite && family != MinorFamily::EvenFace) {
    throw std::invalid_argument("family must be bipartite or even-face");
  }
  const auto& c = catalog();
  return excludes(g, {c.b3_dual, c.b3_twisted_minus_e_dual}, family);
}

bool cc_plane_by_excluded_eulerian_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1_dual, c.b1_twisted, c.b3, c.b3_minus_e, c.b3_twisted_minus_e}, MinorFamily::Eulerian);
}

bool cc_plane_by_excluded_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1_dual, c.b1_twisted, c.b3, c.b3_twisted_minus_e}, MinorFamily::CheckerboardColourable);
}

bool bipartite_plane_by_excluded_even_face_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1, c.b1_twisted, c.b3_dual, c.b3_minus_e, c.b3_twisted_minus_e_dual},
                  MinorFamily::EvenFace);
}

bool bipartite_plane_by_excluded_minors(const ArrowPresentation& g) {
  const auto& c = catalog();
  return excludes(g, {c.b1, c.b1_twisted, c.b3_dual, c.b3_twisted_minus_e_dual}, MinorFamily::Bipartite);
}

}  // namespace ribbon
