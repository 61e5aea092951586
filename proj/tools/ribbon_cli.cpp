#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ribbon/ribbon.hpp"

namespace {

using namespace ribbon;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

int cmd_info(const ArrowPresentation& g) {
  std::cout << "V=" << g.num_vertices() << " E=" << g.num_edges() << " F=" << num_faces(g)
            << " genus=" << euler_genus(g) << " eulerian=" << yes_no(is_eulerian(g))
            << " even-face=" << yes_no(is_even_face(g)) << " cc=" << yes_no(is_checkerboard_colourable(g))
            << " bipartite=" << yes_no(is_bipartite(g)) << " plane=" << yes_no(is_plane(g)) << '\n';
  std::vector<std::size_t> degrees;
  for (std::size_t c = 0; c < g.num_vertices(); ++c) degrees.push_back(degree(g, c));
  std::vector<std::size_t> face_sizes;
  for (const auto& f : trace_boundaries(g)) face_sizes.push_back(f.edge_segment_count());
  std::cout << "components=" << num_components(g) << " degrees=" << join_sizes(degrees)
            << " face-sizes=" << join_sizes(face_sizes) << '\n';
  std::cout << "canonical=" << canonicalize(g).str() << '\n';
  return 0;
}

std::vector<Label> split_labels(const std::string& list) {
  std::vector<Label> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  catalog();

  CLI::App app{"Ribbon graphs as arrow presentations: duals, minors, excluded-minor checks"};
  app.require_subcommand(1);

  std::string file = "-";
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input .arp file, '-' for standard input")->capture_default_str();
  };

  std::function<int(const ArrowPresentation&)> action;

  auto* info = app.add_subcommand("info", "summary of sizes, genus and class membership");
  add_file(info);
  info->callback([&] { action = cmd_info; });

  auto emit = [](const ArrowPresentation& g) {
    std::cout << format_arp(g);
    return 0;
  };

  auto* dual = app.add_subcommand("dual", "geometric dual");
  add_file(dual);
  dual->callback([&] { action = [&](const ArrowPresentation& g) { return emit(geometric_dual(g)); }; });

  std::string edge_list;
  auto* pdual = app.add_subcommand("pdual", "partial dual with respect to a set of edges");
  pdual->add_option("--edges", edge_list, "comma-separated edge labels")->required();
  add_file(pdual);
  pdual->callback([&] {
    action = [&](const ArrowPresentation& g) {
      const auto edges = split_labels(edge_list);
      return emit(partial_dual(g, edges));
    };
  });

  std::string edge;
  auto* contract = app.add_subcommand("contract", "contract an edge");
  contract->add_option("edge", edge)->required();
  add_file(contract);
  contract->callback([&] { action = [&](const ArrowPresentation& g) { return emit(contract_edge(g, edge)); }; });

  auto* del = app.add_subcommand("delete", "delete an edge");
  del->add_option("edge", edge)->required();
  add_file(del);
  del->callback([&] { action = [&](const ArrowPresentation& g) { return emit(delete_edge(g, edge)); }; });

  std::size_t n1 = 0, n2 = 0, n3 = 0;
  auto* delc = app.add_subcommand("delete-component", "delete a connected component");
  delc->add_option("component", n1)->required();
  add_file(delc);
  delc->callback([&] { action = [&](const ArrowPresentation& g) { return emit(delete_component(g, n1)); }; });

  auto* delv = app.add_subcommand("delete-vertex", "delete a vertex and its edges");
  delv->add_option("circle", n1)->required();
  add_file(delv);
  delv->callback([&] { action = [&](const ArrowPresentation& g) { return emit(delete_vertex(g, n1)); }; });

  auto* splitv = app.add_subcommand("split-vertex", "evenly split a vertex at two gaps");
  splitv->add_option("circle", n1)->required();
  splitv->add_option("p", n2)->required();
  splitv->add_option("q", n3)->required();
  add_file(splitv);
  splitv->callback([&] { action = [&](const ArrowPresentation& g) { return emit(split_vertex(g, n1, n2, n3)); }; });

  auto* splitf = app.add_subcommand("split-face", "evenly split a face at two vertex line segments");
  splitf->add_option("face", n1)->required();
  splitf->add_option("p", n2)->required();
  splitf->add_option("q", n3)->required();
  add_file(splitf);
  splitf->callback([&] { action = [&](const ArrowPresentation& g) { return emit(split_face(g, n1, n2, n3)); }; });

  auto* join = app.add_subcommand("join", "identify two vertices");
  join->add_option("c1", n1)->required();
  join->add_option("c2", n2)->required();
  add_file(join);
  join->callback([&] { action = [&](const ArrowPresentation& g) { return emit(join_vertices(g, n1, n2)); }; });

  std::string family_name, target_file;
  bool no_cap = false;
  auto* minor = app.add_subcommand("minor", "search for a minor; exit 0 if contained, 1 if not");
  minor->add_option("--family", family_name, "eulerian, even-face, cc, bipartite or bipartite-join")->required();
  minor->add_option("--target", target_file, "target .arp file")->required();
  minor->add_flag("--no-vertex-cap", no_cap, "search without the circle-count bound");
  add_file(minor);
  minor->callback([&] {
    action = [&](const ArrowPresentation& g) {
      const MinorFamily family = parse_family(family_name);
      const ArrowPresentation h = load_arp(target_file);
      const auto r = find_minor(g, std::span<const ArrowPresentation>(&h, 1), family, SearchOptions{!no_cap});
      if (!r.found) {
        std::cout << "not contained\n";
        return 1;
      }
      std::cout << "contained\n";
      for (const MinorMove& m : r.witness) std::cout << to_string(m) << '\n';
      return 0;
    };
  });

  std::string id, report_file;
  std::size_t max_edges = 3;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of a theorem or lemma; exit 0 iff it holds");
  verify_cmd->add_option("id", id, "T1..T7, C1..C4, L-cc-closed, L-bipartite-closed, L-genus, L-dual-eulerian, L-dual-cc")
      ->required();
  verify_cmd->add_option("--max-edges", max_edges)->capture_default_str()->check(CLI::Range(1, 4));
  verify_cmd->add_option("--report", report_file, "write the full report here");
  verify_cmd->add_option("--jobs", jobs)->capture_default_str()->check(CLI::PositiveNumber);

  std::size_t enum_max = 3;
  bool all_components = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list connected classes by canonical form");
  enumerate_cmd->add_option("--max-edges", enum_max)->capture_default_str()->check(CLI::Range(0, 4));
  enumerate_cmd->add_flag("--disconnected", all_components, "include disconnected presentations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (verify_cmd->parsed()) {
      EnumerationSpec spec;
      spec.max_edges = max_edges;
      const Report r = verify(id, spec, jobs);
      const std::string text = r.to_text();
      if (!report_file.empty()) {
        std::ofstream out(report_file);
        if (!out) throw std::runtime_error("cannot write " + report_file);
        out << text;
      }
      std::cout << id << ": " << r.examined << " classes examined, " << r.counterexamples()
                << " counterexamples\n";
      for (const ReportLine& line : r.lines) {
        if (!line.agree) std::cout << "counterexample " << line.check << ' ' << line.form << '\n';
      }
      return r.ok() ? 0 : 1;
    }
    if (enumerate_cmd->parsed()) {
      EnumerationSpec spec;
      spec.min_edges = 0;
      spec.max_edges = enum_max;
      spec.connected_only = !all_components;
      for (const ArrowPresentation& g : enumerate(spec)) std::cout << canonicalize(g).str() << '\n';
      return 0;
    }
    return action(load_arp(file));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
