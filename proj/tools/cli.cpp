#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "fairrep/error.hpp"
#include "fairrep/json_io.hpp"

namespace fairrep::cli {

namespace {

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw InputError("bad id '" + tok + "' in --x");
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Either {"degree", "generators"} JSON acting on ids directly, or a graph
// whose automorphism group acts on its edge ids (or vertices).
PermGroup load_group(const std::string& path, const std::string& action) {
  std::string text = slurp(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return group_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  Graph g = parse_graph(text);
  PermGroup aut = automorphism_group(g);
  return action == "vertices" ? aut : edge_action(g, aut);
}

std::string edge_text(const EdgeSet& x) {
  std::string s;
  for (const Edge& e : x) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s.empty() ? "(none)" : s;
}

std::string ids_text(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s.empty() ? "(none)" : s;
}

// Text mode drops the "/1" of integers.
std::string num_text(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : to_string(r);
}

void print_checks(std::ostream& out, const std::vector<BoundCheck>& checks) {
  for (const auto& c : checks)
    out << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name << ": " << num_text(c.lhs) << " vs " << num_text(c.rhs)
        << "\n";
}

void flag_checks(std::ostream& err, const std::vector<BoundCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds) err << "flagged: " << c.name << " (" << num_text(c.lhs) << " > " << num_text(c.rhs) << ")\n";
}

void print_report_text(std::ostream& out, const SymmetrizationReport& r) {
  out << "Y: " << ids_text(r.y) << " (" << r.y.size() << " elements)\n";
  out << "bound: " << (r.bound ? num_text(*r.bound) : "undefined") << ", k = " << r.k << "\n";
  if (r.lift) out << "lifting set |E| = " << r.lift->e_size << "\n";
  for (const auto& e : r.ledger)
    if (e.hits > 0 || e.admitted)
      out << "  orbit " << e.orbit << ": size " << e.size << ", hits " << e.hits << (e.admitted ? ", admitted" : "")
          << "\n";
  print_checks(out, r.checks);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism-invariant systems of representatives"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  app.add_flag("--text", text, "Human-readable output instead of JSON");

  auto* aut = app.add_subcommand("aut", "Automorphism group, order and orbits of a graph");
  std::string aut_graph;
  aut->add_option("graph", aut_graph, "Edge-list file")->required();

  auto* copies = app.add_subcommand("copies", "Enumerate copies of a pattern in a host");
  std::string pattern_path, host_path;
  copies->add_option("--pattern", pattern_path)->required();
  copies->add_option("--host", host_path)->required();

  auto* upsilon = app.add_subcommand("upsilon", "Exact (symmetric) edge representativeness");
  bool symmetric = false;
  upsilon->add_option("--pattern", pattern_path)->required();
  upsilon->add_option("--host", host_path)->required();
  upsilon->add_flag("--symmetric", symmetric, "Restrict to Aut(host)-invariant edge sets");

  auto* sym = app.add_subcommand("symmetrize", "Symmetrise a system of representatives");
  std::string mode, family_path, x_text, group_path, action = "edges";
  int k = 1;
  bool oracle = false;
  sym->add_option("--mode", mode)->required()->check(CLI::IsMember({"multiple", "weighted"}));
  sym->add_option("--family", family_path)->required();
  sym->add_option("--x", x_text, "Comma-separated element ids")->required();
  sym->add_option("--k", k, "Multiplicity (multiple mode)");
  sym->add_option("--group", group_path, "Generators JSON or a graph file")->required();
  sym->add_option("--action", action, "Action of a graph's automorphisms")->check(CLI::IsMember({"edges", "vertices"}));
  sym->add_flag("--oracle", oracle, "Also run the product construction and compare (weighted mode)");

  auto* dm = app.add_subcommand("dm-cover", "Canonical minimum vertex cover of a bipartite graph");
  std::string bip_path;
  dm->add_option("bipartite", bip_path, "File with 'p <a> <b>' header")->required();

  auto* tad = app.add_subcommand("tadpole", "Invariant edge representatives for a tadpole pattern");
  std::string tad_x;
  tad->add_option("--pattern", pattern_path)->required();
  tad->add_option("--host", host_path)->required();
  tad->add_option("--x", tad_x, "Comma-separated host edge ids (default: exact minimum)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (aut->parsed()) {
      Graph g = read_graph_file(aut_graph);
      AutomorphismSearch s = search_automorphisms(g);
      OrbitPartition vo = orbits(s.group, Action::vertices, g);
      OrbitPartition eo = orbits(s.group, Action::edges, g);
      if (text) {
        out << s.group.generators().size() << " generators, |Aut| = " << s.order.str() << "\n";
        for (const auto& p : s.group.generators()) out << "  " << ids_text(p.image()) << "\n";
        out << vo.count() << " vertex orbits, " << eo.count() << " edge orbits\n";
      } else {
        Json gens = Json::array();
        for (const auto& p : s.group.generators()) gens.push_back(to_json(p));
        out << Json{{"generators", gens},
                    {"order", to_json(s.order)},
                    {"edges", to_json(EdgeSet(g.edges().begin(), g.edges().end()))},
                    {"vertex_orbits", to_json(vo)},
                    {"edge_orbits", to_json(eo)}}
                   .dump(2)
            << "\n";
      }
      return 0;
    }

    if (copies->parsed()) {
      auto found = enumerate_copies(read_graph_file(pattern_path), read_graph_file(host_path));
      if (text) {
        out << found.size() << " copies\n";
        for (const auto& c : found) out << "  " << edge_text(EdgeSet(c.edges.begin(), c.edges.end())) << "\n";
      } else {
        Json list = Json::array();
        for (const auto& c : found) list.push_back(to_json(c));
        out << Json{{"count", found.size()}, {"copies", list}}.dump(2) << "\n";
      }
      return 0;
    }

    if (upsilon->parsed()) {
      Graph host = read_graph_file(host_path);
      HittingResult r = upsilon_edge(read_graph_file(pattern_path), host, symmetric);
      EdgeSet chosen = edges_of(host, r.witness);
      if (text) {
        out << (symmetric ? "symmetric " : "") << "edge representativeness: " << r.value << "\n";
        out << "witness: " << edge_text(chosen) << "\n";
      } else {
        Json j = to_json(r);
        j["witness_edges"] = to_json(chosen);
        out << j.dump(2) << "\n";
      }
      return 0;
    }

    if (sym->parsed()) {
      const auto x = parse_ids(x_text);
      PermGroup group = load_group(group_path, action);
      OrbitPartition parts = orbits(group);
      Json family_json = read_json_file(family_path);
      if (mode == "multiple") {
        if (oracle) throw InputError("--oracle applies to weighted mode only");
        FamilyOfSets fam = family_from_json(family_json);
        bool invariant = check_family_invariance(fam, group);
        if (!invariant) err << "warning: family is not invariant under the group\n";
        auto report = symmetrize_multiple(fam, x, k, parts);
        flag_checks(err, report.checks);
        if (text) {
          print_report_text(out, report);
        } else {
          Json j = to_json(report);
          j["family_invariant"] = invariant;
          out << j.dump(2) << "\n";
        }
        return report.ok() ? 0 : 1;
      }
      WeightedFamily fam = weighted_family_from_json(family_json);
      bool invariant = check_family_invariance(fam, group);
      if (!invariant) err << "warning: family is not invariant under the group\n";
      auto report = symmetrize_weighted(fam, x, parts);
      flag_checks(err, report.checks);
      if (!oracle) {
        if (text) {
          print_report_text(out, report);
        } else {
          Json j = to_json(report);
          j["family_invariant"] = invariant;
          out << j.dump(2) << "\n";
        }
        return report.ok() ? 0 : 1;
      }
      auto lifted = product_oracle(fam, x, parts);
      bool agree = lifted.y == report.y;
      if (!agree) err << "defect: product construction and direct symmetrisation disagree\n";
      if (text) {
        print_report_text(out, report);
        out << "product construction:\n";
        print_report_text(out, lifted);
        out << (agree ? "methods agree\n" : "METHODS DISAGREE\n");
      } else {
        out << Json{{"weighted", to_json(report)}, {"oracle", to_json(lifted)}, {"agree", agree},
                    {"family_invariant", invariant}}
                   .dump(2)
            << "\n";
      }
      // With --oracle the status reports agreement only.
      return agree ? 0 : 1;
    }

    if (dm->parsed()) {
      Cover c = invariant_min_cover(read_bipartite_file(bip_path));
      if (text)
        out << "tau = " << c.tau << "\nA: " << ids_text(c.a) << "\nB: " << ids_text(c.b) << "\n";
      else
        out << to_json(c).dump(2) << "\n";
      return 0;
    }

    if (tad->parsed()) {
      Graph host = read_graph_file(host_path);
      std::optional<EdgeSet> x;
      if (tad->count("--x")) x = edges_of(host, parse_ids(tad_x));
      PipelineTrace t = symmetric_tadpole_representatives(read_graph_file(pattern_path), host, x);
      if (t.defect) err << "defect: " << *t.defect << "\n";
      flag_checks(err, t.steps);
      if (text) {
        out << "X  (" << t.x.size() << "): " << edge_text(t.x) << "\n";
        out << "Y' (" << t.y_prime.size() << "): " << edge_text(t.y_prime) << "\n";
        out << "Y''(" << t.y_double_prime.size() << "): " << edge_text(t.y_double_prime) << "\n";
        out << "Y  (" << t.y.size() << "): " << edge_text(t.y) << "\n";
        print_checks(out, t.steps);
        print_checks(out, t.conclusions);
      } else {
        out << to_json(t).dump(2) << "\n";
      }
      return t.conclusions_hold() ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const DefectError& e) {
    err << "defect: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fairrep::cli
