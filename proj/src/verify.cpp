#include "ribbon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ribbon/canonical.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/minor_search.hpp"
#include "ribbon/predicates.hpp"

namespace ribbon {

namespace {

// Words over labels 0..E-1, each used twice, first uses in increasing order.
void pairings(std::size_t edges, std::vector<int>& word, std::vector<int>& used, int next,
              const std::function<void(const std::vector<int>&)>& emit) {
  if (word.size() == 2 * edges) {
    emit(word);
    return;
  }
  for (int l = 0; l < next; ++l) {
    if (used[l] == 1) {
      used[l] = 2;
      word.push_back(l);
      pairings(edges, word, used, next, emit);
      word.pop_back();
      used[l] = 1;
    }
  }
  if (static_cast<std::size_t>(next) < edges) {
    used[next] = 1;
    word.push_back(next);
    pairings(edges, word, used, next + 1, emit);
    word.pop_back();
    used[next] = 0;
  }
}

// Ordered compositions of n into exactly k positive parts.
void compositions(std::size_t n, std::size_t k, std::vector<std::size_t>& parts,
                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (k == 0) {
    if (n == 0) emit(parts);
    return;
  }
  for (std::size_t first = 1; first + (k - 1) <= n; ++first) {
    parts.push_back(first);
    compositions(n - first, k - 1, parts, emit);
    parts.pop_back();
  }
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

using Predicate = std::function<bool(const ArrowPresentation&)>;

struct TheoremCheck {
  std::string name;
  Predicate excluded;
};

struct TheoremDef {
  Predicate domain;  // class restriction; null for all graphs
  Predicate predicate;
  std::vector<TheoremCheck> checks;
};

bool cc_and_plane(const ArrowPresentation& g) { return is_checkerboard_colourable(g) && is_plane(g); }
bool bipartite_and_plane(const ArrowPresentation& g) { return is_bipartite(g) && is_plane(g); }

TheoremDef theorem(const std::string& id) {
  using F = MinorFamily;
  if (id == "T1") return {nullptr, is_checkerboard_colourable, {{"T1", cc_by_excluded_eulerian_minors}}};
  if (id == "T2") return {nullptr, is_checkerboard_colourable, {{"T2", cc_by_excluded_minors}}};
  if (id == "T3") return {nullptr, is_bipartite, {{"T3", bipartite_by_even_face_minors}}};
  if (id == "T4") return {nullptr, is_bipartite, {{"T4", bipartite_by_excluded_minors}}};
  if (id == "T5") return {nullptr, is_bipartite, {{"T5", bipartite_by_join_minors}}};
  if (id == "T6") {
    return {is_checkerboard_colourable,
            is_plane,
            {{"T6/cc", [](const auto& g) { return plane_cc_by_excluded_minors(g, F::CheckerboardColourable); }},
             {"T6/eulerian", [](const auto& g) { return plane_cc_by_excluded_minors(g, F::Eulerian); }}}};
  }
  if (id == "T7") {
    return {is_bipartite,
            is_plane,
            {{"T7/bipartite", [](const auto& g) { return plane_bipartite_by_excluded_minors(g, F::Bipartite); }},
             {"T7/even-face", [](const auto& g) { return plane_bipartite_by_excluded_minors(g, F::EvenFace); }}}};
  }
  if (id == "C1") return {nullptr, cc_and_plane, {{"C1", cc_plane_by_excluded_eulerian_minors}}};
  if (id == "C2") return {nullptr, cc_and_plane, {{"C2", cc_plane_by_excluded_minors}}};
  if (id == "C3") return {nullptr, bipartite_and_plane, {{"C3", bipartite_plane_by_excluded_even_face_minors}}};
  if (id == "C4") return {nullptr, bipartite_and_plane, {{"C4", bipartite_plane_by_excluded_minors}}};
  throw std::invalid_argument("unknown theorem '" + id + "'");
}

std::string join_moves(const std::vector<std::string>& moves) {
  std::string out;
  for (const auto& m : moves) {
    if (!out.empty()) out += "; ";
    out += m;
  }
  return out;
}

std::vector<ReportLine> closure_lines(const ArrowPresentation& g, const std::string& form, const Predicate& cls,
                                      std::initializer_list<MinorFamily> families) {
  std::vector<ReportLine> lines;
  for (MinorFamily f : families) {
    std::vector<std::string> failed;
    for (const MinorMove& m : applicable_moves(g, f)) {
      if (!cls(apply_move(g, m))) failed.push_back(to_string(m));
    }
    const bool held = failed.empty();
    lines.push_back({std::string(to_string(f)), form, true, held, held, join_moves(failed)});
  }
  return lines;
}

std::vector<ReportLine> genus_lines(const ArrowPresentation& g, const std::string& form) {
  std::vector<MinorMove> moves = applicable_moves(g, MinorFamily::Eulerian);
  for (const Label& e : g.labels()) {
    moves.push_back({MoveKind::ContractEdge, e});
    moves.push_back({MoveKind::DeleteEdge, e});
  }
  for (std::size_t c = 0; c < g.num_vertices(); ++c) moves.push_back({MoveKind::DeleteVertex, {}, c});

  const int genus = euler_genus(g);
  std::vector<std::string> failed;
  for (const MinorMove& m : moves) {
    if (euler_genus(apply_move(g, m)) > genus) failed.push_back(to_string(m));
  }
  const bool held = failed.empty();
  return {{"genus", form, true, held, held, join_moves(failed)}};
}

std::vector<ReportLine> duality_lines(const ArrowPresentation& g, const std::string& form, MinorFamily primal,
                                      MinorFamily dual_family) {
  std::set<CanonicalForm> via_primal, via_dual;
  for (const MinorMove& m : applicable_moves(g, primal)) {
    via_primal.insert(canonicalize(geometric_dual(apply_move(g, m))));
  }
  const ArrowPresentation gd = geometric_dual(g);
  for (const MinorMove& m : applicable_moves(gd, dual_family)) {
    via_dual.insert(canonicalize(apply_move(gd, m)));
  }
  const bool held = via_primal == via_dual;
  std::string detail;
  if (!held) {
    detail = std::to_string(via_primal.size()) + " primal vs " + std::to_string(via_dual.size()) + " dual classes";
  }
  const std::string name = std::string(to_string(primal)) + "~" + std::string(to_string(dual_family));
  return {{name, form, true, held, held, detail}};
}

}  // namespace

std::vector<ArrowPresentation> enumerate(const EnumerationSpec& spec) {
  if (spec.max_edges > kMaxEnumeratedEdges) {
    throw std::invalid_argument("max_edges above " + std::to_string(kMaxEnumeratedEdges) + " is not supported");
  }
  if (spec.max_circles == 0) throw std::invalid_argument("max_circles must be positive");
  if (spec.min_edges > spec.max_edges) throw std::invalid_argument("min_edges exceeds max_edges");

  std::set<CanonicalForm> classes;
  auto add = [&](std::vector<Circle> circles) {
    ArrowPresentation g(std::move(circles));
    if (spec.connected_only && num_components(g) != 1) return;
    classes.insert(canonicalize(g));
  };

  for (std::size_t edges = spec.min_edges; edges <= spec.max_edges; ++edges) {
    if (edges == 0) {
      const std::size_t most = spec.connected_only ? 1 : spec.max_circles;
      for (std::size_t k = 1; k <= most; ++k) add(std::vector<Circle>(k));
      continue;
    }
    std::vector<int> word, used(edges, 0);
    pairings(edges, word, used, 0, [&](const std::vector<int>& w) {
      for (std::size_t k = 1; k <= std::min(spec.max_circles, w.size()); ++k) {
        std::vector<std::size_t> parts;
        compositions(w.size(), k, parts, [&](const std::vector<std::size_t>& cut) {
          for (std::size_t mask = 0; mask < (std::size_t{1} << edges); ++mask) {
            std::vector<Circle> circles;
            std::vector<int> seen(edges, 0);
            std::size_t pos = 0;
            for (std::size_t len : cut) {
              Circle c;
              for (std::size_t i = 0; i < len; ++i, ++pos) {
                const int l = w[pos];
                const bool second = seen[l]++ > 0;
                const bool minus = second && ((mask >> l) & 1U);
                c.push_back({std::to_string(l), minus ? Sign::Minus : Sign::Plus});
              }
              circles.push_back(std::move(c));
            }
            const std::size_t spare = spec.connected_only ? 0 : spec.max_circles - k;
            for (std::size_t extra = 0; extra <= spare; ++extra) {
              std::vector<Circle> with_isolated = circles;
              with_isolated.resize(circles.size() + extra);
              add(std::move(with_isolated));
            }
          }
        });
      }
    });
  }

  std::vector<ArrowPresentation> out;
  out.reserve(classes.size());
  for (const CanonicalForm& f : classes) out.push_back(from_canonical(f));
  return out;
}

std::size_t Report::counterexamples() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const ReportLine& l) { return !l.agree; }));
}

std::string Report::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const ReportLine& l : lines) {
    out << l.check << '\t' << l.form << "\tpredicate=" << yn(l.predicate) << "\texcluded=" << yn(l.excluded)
        << "\tagree=" << yn(l.agree);
    if (!l.detail.empty()) out << '\t' << l.detail;
    out << '\n';
  }
  out << "# " << id << ": " << examined << " classes examined, predicate true for " << predicate_true << ", "
      << lines.size() << " checks, " << counterexamples() << " counterexamples\n";
  out << "# " << id << ": " << (ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::vector<std::string> theorem_ids() { return {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "C1", "C2", "C3", "C4"}; }

std::vector<std::string> lemma_ids() {
  return {"L-cc-closed", "L-bipartite-closed", "L-genus", "L-dual-eulerian", "L-dual-cc"};
}

Report verify_theorem(const std::string& id, const EnumerationSpec& spec, unsigned jobs) {
  const TheoremDef def = theorem(id);
  std::vector<ArrowPresentation> graphs = enumerate(spec);
  if (def.domain) {
    std::erase_if(graphs, [&](const ArrowPresentation& g) { return !def.domain(g); });
  }

  std::vector<std::vector<ReportLine>> per_graph(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const ArrowPresentation& g = graphs[i];
    const std::string form = canonicalize(g).str();
    const bool pred = def.predicate(g);
    for (const TheoremCheck& check : def.checks) {
      const bool excl = check.excluded(g);
      per_graph[i].push_back({check.name, form, pred, excl, pred == excl, {}});
    }
  });

  Report report;
  report.id = id;
  report.examined = graphs.size();
  for (auto& lines : per_graph) {
    if (!lines.empty() && lines.front().predicate) ++report.predicate_true;
    report.lines.insert(report.lines.end(), lines.begin(), lines.end());
  }
  return report;
}

Report verify_lemma(const std::string& id, const EnumerationSpec& spec, unsigned jobs) {
  using F = MinorFamily;
  Predicate domain;
  std::function<std::vector<ReportLine>(const ArrowPresentation&, const std::string&)> check;
  if (id == "L-cc-closed") {
    domain = is_checkerboard_colourable;
    check = [](const auto& g, const auto& form) {
      return closure_lines(g, form, is_checkerboard_colourable, {F::CheckerboardColourable, F::Eulerian});
    };
  } else if (id == "L-bipartite-closed") {
    domain = is_bipartite;
    check = [](const auto& g, const auto& form) {
      return closure_lines(g, form, is_bipartite, {F::Bipartite, F::EvenFace, F::BipartiteJoin});
    };
  } else if (id == "L-genus") {
    check = genus_lines;
  } else if (id == "L-dual-eulerian") {
    check = [](const auto& g, const auto& form) { return duality_lines(g, form, F::Eulerian, F::EvenFace); };
  } else if (id == "L-dual-cc") {
    check = [](const auto& g, const auto& form) {
      return duality_lines(g, form, F::CheckerboardColourable, F::Bipartite);
    };
  } else {
    throw std::invalid_argument("unknown lemma '" + id + "'");
  }

  std::vector<ArrowPresentation> graphs = enumerate(spec);
  if (domain) std::erase_if(graphs, [&](const ArrowPresentation& g) { return !domain(g); });

  std::vector<std::vector<ReportLine>> per_graph(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    per_graph[i] = check(graphs[i], canonicalize(graphs[i]).str());
  });

  Report report;
  report.id = id;
  report.examined = graphs.size();
  report.predicate_true = graphs.size();
  for (auto& lines : per_graph) report.lines.insert(report.lines.end(), lines.begin(), lines.end());
  return report;
}

Report verify(const std::string& id, const EnumerationSpec& spec, unsigned jobs) {
  const auto theorems = theorem_ids();
  if (std::find(theorems.begin(), theorems.end(), id) != theorems.end()) return verify_theorem(id, spec, jobs);
  return verify_lemma(id, spec, jobs);
}

}  // namespace ribbon
