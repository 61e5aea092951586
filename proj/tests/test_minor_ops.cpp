#include <doctest.h>

#include "oracles.hpp"
#include "ribbon/ribbon.hpp"

using namespace ribbon;
using oracle::parse;

namespace {

std::vector<ArrowPresentation> sweep(std::size_t max_edges, bool connected = true) {
  EnumerationSpec spec;
  spec.max_edges = max_edges;
  spec.connected_only = connected;
  return enumerate(spec);
}

std::size_t gaps(const ArrowPresentation& g, std::size_t c) {
  return std::max<std::size_t>(g.circles()[c].size(), 1);
}

}  // namespace

TEST_CASE("edge deletion") {
  CHECK(delete_edge(parse("(a+ b+ a+ b+)"), "b") == parse("(a+ a+)"));
  CHECK(delete_edge(parse("(a+)(a+)"), "a") == parse("()()"));
  CHECK(delete_edge(parse("(a+ b+ c+ a+ b+ c+)"), "a") == parse("(b+ c+ b+ c+)"));
  CHECK_THROWS_AS(delete_edge(parse("(a+ a+)"), "b"), std::invalid_argument);
}

TEST_CASE("edge contraction") {
  CHECK(is_equivalent(contract_edge(parse("(a+)(a+)"), "a"), parse("()")));
  CHECK(is_equivalent(contract_edge(parse("(e+ e+)"), "e"), parse("()()")));
  CHECK(is_equivalent(contract_edge(parse("(e+ e-)"), "e"), parse("()")));
  CHECK(is_equivalent(contract_edge(parse("(a+ b+)(a+ b+)"), "a"), parse("(b+ b+)")));
  CHECK_THROWS_AS(contract_edge(parse("(a+ a+)"), "b"), std::invalid_argument);
}

TEST_CASE("contracting a non-loop keeps faces and genus") {
  for (const auto& g : sweep(3)) {
    for (const Label& e : g.labels()) {
      if (is_loop(g, e)) continue;
      const auto h = contract_edge(g, e);
      CHECK(h.num_vertices() + 1 == g.num_vertices());
      CHECK(oracle::faces(h).count == oracle::faces(g).count);
      CHECK(oracle::genus(h) == oracle::genus(g));
    }
  }
}

TEST_CASE("component and vertex deletion") {
  CHECK(delete_component(parse("()(e+ e+)"), 0) == parse("(e+ e+)"));
  CHECK(delete_component(parse("(a+ a+)(b+ b-)"), 1) == parse("(a+ a+)"));
  CHECK(delete_component(parse("(a+ a+)"), 0) == ArrowPresentation{});
  CHECK_THROWS_AS(delete_component(parse("(a+ a+)"), 1), std::invalid_argument);

  CHECK(delete_vertex(parse("(a+)(a+)"), 0) == parse("()"));
  CHECK(delete_vertex(parse("(a+)(a+)"), 1) == parse("()"));
  CHECK(delete_vertex(parse("(e+ e+)"), 0) == ArrowPresentation{});
  CHECK(delete_vertex(parse("(a+ b+)(a+)(b+)"), 0) == parse("()()"));
  CHECK_THROWS_AS(delete_vertex(parse("()"), 1), std::invalid_argument);
}

TEST_CASE("distances") {
  CHECK(dual_distance(parse("(a+ a+)"), "a") == 0);
  CHECK(dual_distance(parse("(a+ b+ a+ b+)"), "a") == 1);
  CHECK(dual_distance(parse("(a+ b+ c+ a+ b- c-)"), "a") == 2);
  CHECK(dual_distance(parse("(a+ b+ c+ a+)(b+)(c+)"), "a") == 0);
  CHECK_THROWS_AS(dual_distance(parse("(a+)(a+)"), "a"), std::invalid_argument);

  CHECK(vls_dual_distance(parse("(a+ a+)"), 0, 0, 1) == 1);
  CHECK(vls_dual_distance(parse("(a+ a+)"), 0, 1, 1) == 0);
  CHECK(vls_dual_distance(parse("(a+ b+ a+ b+)"), 0, 0, 2) == 2);
  CHECK(vls_dual_distance(parse("()"), 0, 0, 0) == 0);
  CHECK_THROWS_AS(vls_dual_distance(parse("(a+ a+)"), 0, 0, 2), std::invalid_argument);

  SUBCASE("edge segments of a twisted loop") {
    const auto g = parse("(e+ e-)");
    const auto faces = trace_boundaries(g);
    REQUIRE(faces.size() == 1);
    std::vector<std::size_t> es;
    for (std::size_t i = 0; i < faces[0].segments.size(); ++i) {
      if (std::holds_alternative<EdgeSegment>(faces[0].segments[i])) es.push_back(i);
    }
    REQUIRE(es.size() == 2);
    CHECK(boundary_distance(g, 0, es[0], es[1]) == 0);
    CHECK(boundary_distance(g, 0, es[0], es[0]) == 0);
  }
}

TEST_CASE("even splits") {
  CHECK_FALSE(is_even_vertex_split(parse("(a+ a+)"), 0, 0, 1));
  CHECK(is_even_vertex_split(parse("(a+ b+ a+ b+)"), 0, 0, 2));
  CHECK(is_even_vertex_split(parse("(a+ b+ c+)(a+ c+ b+)"), 0, 2, 0));
  CHECK_FALSE(is_even_vertex_split(parse("(a+ b+ a+ b+)"), 0, 0, 1));
}

TEST_CASE("proper contraction and deletion") {
  CHECK_FALSE(is_proper_contraction(parse("(a+ b+ a+ b+)"), "a"));
  CHECK(is_proper_contraction(parse("(a+)(a+)"), "a"));
  CHECK(is_proper_contraction(parse("(e+ e-)"), "e"));
  CHECK(is_proper_contraction(parse("(e+ e+)"), "e"));
  CHECK(is_proper_deletion(parse("(e+ e+)"), "e"));
  CHECK(is_proper_deletion(parse("(e+ e-)"), "e"));
  CHECK(is_proper_deletion(parse("(a+ b+ a+ b+)"), "a") ==
        is_proper_contraction(geometric_dual(parse("(a+ b+ a+ b+)")), "a"));
}

TEST_CASE("proper deletion via the dual matches the face conditions") {
  for (const auto& g : sweep(3)) {
    for (const Label& e : g.labels()) CHECK(is_proper_deletion(g, e) == is_proper_deletion_direct(g, e));
  }
}

TEST_CASE("vertex split examples") {
  CHECK_THROWS_WITH_AS(split_vertex(parse("(a+ a+)"), 0, 0, 1), "dual distance is odd", std::invalid_argument);
  CHECK(is_equivalent(split_vertex(parse("(a+ b+ a+ b+)"), 0, 0, 2), parse("(a+ b+)(a+ b+)")));
  CHECK(is_equivalent(split_vertex(parse("(a+ b+ a+ b+)"), 0, 1, 1), parse("(a+ b+ a+ b+)()")));
  CHECK(is_equivalent(split_vertex(parse("()"), 0, 0, 0), parse("()()")));
  CHECK(is_equivalent(split_vertex(parse("(a+ b+ c+)(a+ c+ b+)"), 0, 2, 0), parse("(a+)(b+ c+)(a+ c+ b+)")));
  CHECK_THROWS_AS(split_vertex(parse("(a+ a+)"), 0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(split_vertex(parse("(a+ a+)"), 1, 0, 0), std::invalid_argument);
}

TEST_CASE("vertex split: insert-then-contract equals cut-and-close") {
  for (const auto& g : sweep(3)) {
    for (std::size_t c = 0; c < g.num_vertices(); ++c) {
      for (std::size_t p = 0; p < gaps(g, c); ++p) {
        for (std::size_t q = 0; q < gaps(g, c); ++q) {
          if (!is_even_vertex_split(g, c, p, q)) {
            CHECK_THROWS(split_vertex(g, c, p, q));
            CHECK_THROWS(split_vertex_direct(g, c, p, q));
            continue;
          }
          const auto a = split_vertex(g, c, p, q);
          CHECK(is_equivalent(a, split_vertex_direct(g, c, p, q)));
          CHECK(a.num_vertices() == g.num_vertices() + 1);
          CHECK_FALSE(a.has_edge(kFreshLabel));
        }
      }
    }
  }
}

TEST_CASE("face split is the dual of a vertex split") {
  for (const auto& g : sweep(3)) {
    const std::vector<Label> all = g.labels();
    const TrackedDual star = partial_dual_tracked(g, all);
    const auto faces = trace_boundaries(g);
    for (std::size_t b = 0; b < faces.size(); ++b) {
      const auto vs = faces[b].vertex_segment_indices();
      auto locate = [&](std::size_t i) {
        const auto& seg = std::get<VertexSegment>(faces[b].segments[vs[i]]);
        for (std::size_t c = 0; c < star.origin.size(); ++c) {
          for (std::size_t p = 0; p < star.origin[c].size(); ++p) {
            if (star.origin[c][p].circle == seg.circle && star.origin[c][p].gap == seg.gap) {
              return std::pair{c, p};
            }
          }
        }
        FAIL("vertex line segment missing from the dual");
        return std::pair<std::size_t, std::size_t>{};
      };
      for (std::size_t p = 0; p < vs.size(); ++p) {
        for (std::size_t q = 0; q < vs.size(); ++q) {
          const auto [cp, gp] = locate(p);
          const auto [cq, gq] = locate(q);
          REQUIRE(cp == cq);
          const bool even = is_even_face_split(g, b, p, q);
          CHECK(even == is_even_vertex_split(star.graph, cp, gp, gq));
          if (!even) {
            CHECK_THROWS_WITH_AS(split_face(g, b, p, q), "distance is odd", std::invalid_argument);
            continue;
          }
          const auto direct = split_face(g, b, p, q);
          const auto via_dual = geometric_dual(split_vertex(star.graph, cp, gp, gq));
          CHECK(is_equivalent(direct, via_dual));
          CHECK(oracle::faces(direct).count == oracle::faces(g).count + 1);
        }
      }
    }
  }
}

TEST_CASE("face split on an isolated vertex and at equal segments") {
  CHECK(is_equivalent(split_face(parse("()"), 0, 0, 0), parse("()()")));
  const auto g = parse("(a+ b+)(a+ b+)");
  for (std::size_t b = 0; b < num_faces(g); ++b) {
    const auto h = split_face(g, b, 0, 0);
    CHECK(num_faces(h) == num_faces(g) + 1);
    CHECK(h.num_edges() == g.num_edges());
  }
}

TEST_CASE("joins") {
  const auto g = parse("(a+)(b+)(a+ b+)");
  CHECK(is_permissible_join(g, 0, 1));
  CHECK(join_vertices(g, 0, 1) == parse("(a+ b+)(a+ b+)"));
  CHECK_FALSE(is_permissible_join(parse("(a+)(a+)"), 0, 1));
  CHECK_FALSE(is_permissible_join(parse("()()"), 0, 1));
  CHECK(join_vertices(parse("()()"), 0, 1) == parse("()"));
  CHECK_FALSE(is_permissible_join(parse("(a+ a+ b+)(b+)()"), 1, 2));
  CHECK_THROWS_AS(join_vertices(g, 1, 1), std::invalid_argument);
}

TEST_CASE("move text round trip") {
  const std::vector<MinorMove> moves{
      {MoveKind::DeleteEdge, "a"},
      {MoveKind::ContractEdge, "b_2"},
      {MoveKind::DeleteComponent, {}, 3},
      {MoveKind::DeleteVertex, {}, 1},
      {MoveKind::SplitVertex, {}, 0, 0, 1, 3},
      {MoveKind::SplitFace, {}, 2, 0, 0, 4},
      {MoveKind::JoinVertices, {}, 1, 2},
  };
  for (const auto& m : moves) CHECK(parse_move(to_string(m)) == m);
  CHECK(to_string(moves[4]) == "split-vertex 0 1 3");
  CHECK_THROWS_AS(parse_move("split-vertex 0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("explode 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("delete a b"), std::invalid_argument);
}

TEST_CASE("apply_move dispatches") {
  const auto g = parse("(a+ b+ a+ b+)");
  CHECK(apply_move(g, {MoveKind::DeleteEdge, "b"}) == delete_edge(g, "b"));
  CHECK(apply_move(g, {MoveKind::ContractEdge, "b"}) == contract_edge(g, "b"));
  CHECK(apply_move(g, {MoveKind::SplitVertex, {}, 0, 0, 0, 2}) == split_vertex(g, 0, 0, 2));
}
