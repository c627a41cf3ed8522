#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kdm/kdm.hpp"

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// Accepts either a bare object or a construct bundle wrapping it.
kdm::Graph load_graph(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("graph")) j = j["graph"];
  return kdm::graph_from_json(j);
}

kdm::Labeling load_labeling(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("labeling")) j = j["labeling"];
  return kdm::labeling_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << text;
}

kdm::EmptyBoundaryPolicy parse_policy(const std::string& s) {
  if (s == "exempt") return kdm::EmptyBoundaryPolicy::EXEMPT;
  if (s == "zero") return kdm::EmptyBoundaryPolicy::ZERO;
  throw std::invalid_argument("policy must be 'exempt' or 'zero'");
}

kdm::Family parse_family(const std::string& s) {
  if (s == "path") return kdm::Family::PATH;
  if (s == "cycle") return kdm::Family::CYCLE;
  if (s == "union-paths") return kdm::Family::UNION_PATHS;
  if (s == "union-cycles") return kdm::Family::UNION_CYCLES;
  if (s == "long-brush") return kdm::Family::LONG_BRUSH;
  throw std::invalid_argument("unknown family '" + s + "'");
}

// "3..12" or a single "4"
kdm::SweepRange parse_range(const std::string& s) {
  const auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("range must look like A..B, got '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("expected comma-separated integers, got '" +
                                  s + "'");
    }
  return out;
}

json bundle_json(const kdm::LabeledGraph& lg) {
  json j;
  j["graph"] = kdm::graph_to_json(lg.graph);
  j["labeling"] = kdm::labeling_to_json(lg.labeling);
  j["k"] = lg.k;
  j["magic"] = lg.magic;
  return j;
}

json partition_json(const kdm::PartitionResult& r) {
  json j;
  j["parts"] = r.parts;
  j["common_sum"] = r.common_sum;
  return j;
}

struct ConstructArgs {
  std::string family;
  int k = 1;
  int n = 3;
  int m = 1;
  int t = 0;
  int pair_choice = 0;
  int j = 0;
  std::string sizes;
  std::string out;
  std::string dot;
};

int run_construct(const ConstructArgs& a) {
  using namespace kdm;
  LabeledGraph lg;
  std::vector<std::string> names;
  if (a.family == "p3") {
    lg = label_p3();
  } else if (a.family == "c4k") {
    lg = label_c4k(a.k);
  } else if (a.family == "m-c4") {
    lg = label_m_c4(a.m);
  } else if (a.family == "union-c4k") {
    lg = label_union_c4k(a.k, a.m);
  } else if (a.family == "long-brush") {
    std::optional<int> pc;
    if (a.pair_choice > 0) pc = a.pair_choice;
    auto built = label_long_brush_ndm(a.n, a.m, pc);
    if (!built) {
      std::cout << "none\n";
      return 0;
    }
    lg = *built;
    names = long_brush_vertex_names(a.n, a.m);
  } else if (a.family == "long-brush-shifted") {
    lg = label_long_brush_shifted(a.m, a.t);
    names = long_brush_vertex_names(a.m * (a.m - 1) / 2 + a.t, a.m);
  } else if (a.family == "lp1m") {
    const std::vector<int> sizes = parse_int_list(a.sizes);
    if (sizes.empty())
      throw std::invalid_argument("lp1m requires --sizes a,b[,...]");
    const int m = std::accumulate(sizes.begin(), sizes.end(), 0);
    auto witnesses = feasible_apex_labels(m, sizes);
    const std::pair<int, PartitionResult>* chosen = nullptr;
    for (const auto& w : witnesses)
      if (a.j == 0 || w.first == a.j) {
        chosen = &w;
        break;
      }
    if (chosen == nullptr) {
      std::cout << "none\n";
      return 0;
    }
    lg = label_lp1m_2dm(sizes, *chosen);
    names = long_brush_vertex_names(1, m);
  } else {
    throw std::invalid_argument("unknown construction family '" + a.family +
                                "'");
  }
  write_text(a.out, bundle_json(lg).dump(2) + "\n");
  if (!a.dot.empty()) write_text(a.dot, to_dot(lg.graph, names, lg.labeling.labels));
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& labels_path,
               int k, const std::string& policy) {
  using namespace kdm;
  const Graph g = load_graph(graph_path);
  const Labeling f = load_labeling(labels_path);
  const BoundaryProfile prof = weights(g, f, k);
  const VerifyResult vr = verify_kdm(g, f, k, parse_policy(policy));
  if (vr.valid)
    std::cout << "valid, M=" << *vr.magic << "\n";
  else
    std::cout << "invalid\n";
  std::cout << "vertex,label,boundary_size,weight\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    std::cout << v << ',' << f.labels[v] << ',' << prof.boundary[v].size()
              << ',' << prof.weight[v] << '\n';
  return vr.valid ? 0 : 2;
}

int run_search(const std::string& graph_path, int k, bool count,
               const std::string& policy) {
  using namespace kdm;
  const Graph g = load_graph(graph_path);
  const EmptyBoundaryPolicy pol = parse_policy(policy);
  if (count) {
    std::cout << count_kdml(g, k, pol).to_string() << "\n";
    return 0;
  }
  const auto found = find_kdml(g, k, pol);
  if (!found) {
    std::cout << "none\n";
    return 0;
  }
  std::cout << labeling_to_json(*found).dump() << "\n";
  return 0;
}

int run_sweep(const std::string& family, const std::string& n_range,
              const std::string& k_range, const std::string& m_range,
              int jobs, const std::string& policy) {
  using namespace kdm;
  const auto rows =
      classify_family(parse_family(family), parse_range(n_range),
                      parse_range(k_range), parse_range(m_range),
                      parse_policy(policy), jobs);
  std::cout << "family,n,m,k,found,predicted,agree\n";
  bool all_agree = true;
  for (const SweepRow& r : rows) {
    std::cout << to_string(r.family) << ',' << r.n << ',' << r.m << ',' << r.k
              << ',' << (r.found ? "yes" : "no") << ','
              << (r.predicted ? "yes" : "no") << ','
              << (r.agree ? "yes" : "no") << '\n';
    all_agree = all_agree && r.agree;
  }
  return all_agree ? 0 : 2;
}

int run_partition(int n, int exclude, const std::string& ground_str,
                  const std::string& sizes_str) {
  using namespace kdm;
  GroundSet ground;
  if (!ground_str.empty())
    ground = parse_int_list(ground_str);
  else if (exclude > 0)
    ground = jn_without(n, exclude);
  else
    ground = make_jn(n);
  const std::vector<int> sizes = parse_int_list(sizes_str);
  const auto result = equal_sum_partition(ground, sizes);
  if (!result) {
    std::cout << "none\n";
    return 0;
  }
  std::cout << partition_json(*result).dump(2) << "\n";
  return 0;
}

int run_report(const std::string& kind, int m1, bool as_json, int jobs,
               int oracle_limit, const std::string& out) {
  using namespace kdm;
  if (kind == "table1") {
    const auto rows = reproduce_table1(oracle_limit);
    if (!as_json) {
      write_text(out, table1_csv(rows));
      return 0;
    }
    json j = json::array();
    for (const auto& r : rows) {
      json row{{"m1", r.m1}, {"m_min", r.m_min}, {"m_max", r.m_max}};
      if (r.oracle_agreement) row["oracle_agreement"] = *r.oracle_agreement;
      j.push_back(row);
    }
    write_text(out, j.dump(2) + "\n");
    return 0;
  }
  if (kind == "annexure") {
    const auto rows = reproduce_annexure(m1);
    if (!as_json) {
      write_text(out, annexure_csv(rows));
      return 0;
    }
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs},
                   {"verdict", r.holds}});
    write_text(out, j.dump(2) + "\n");
    return 0;
  }
  if (kind == "suite") {
    const auto checks = theorem_suite(jobs);
    if (as_json) {
      json j = json::array();
      for (const auto& c : checks)
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      write_text(out, j.dump(2) + "\n");
    } else {
      write_text(out, suite_text(checks));
    }
    return suite_all_pass(checks) ? 0 : 2;
  }
  throw std::invalid_argument("report kind must be table1, annexure or suite");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-distance magic labelings: construct, verify, search, count"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand(
      "construct", "Emit a labeled graph from a closed-form construction");
  construct
      ->add_option("family", ca.family,
                   "p3, m-c4, c4k, union-c4k, long-brush, long-brush-shifted, "
                   "lp1m")
      ->required();
  construct->add_option("--k", ca.k, "cycle/union parameter k");
  construct->add_option("--n", ca.n, "handle length n");
  construct->add_option("--m", ca.m, "copies / brush size m");
  construct->add_option("--t", ca.t, "handle extension t");
  construct->add_option("--pair-choice", ca.pair_choice,
                        "smaller brush label c for the m=2 labeling");
  construct->add_option("--j", ca.j, "apex label for lp1m");
  construct->add_option("--sizes", ca.sizes, "clique sizes for lp1m, e.g. 2,3");
  construct->add_option("--out", ca.out, "write the JSON bundle here");
  construct->add_option("--dot", ca.dot, "also write DOT to this file");

  std::string v_graph, v_labels, v_policy = "exempt";
  int v_k = 1;
  auto* verify = app.add_subcommand("verify", "Check a labeling and print weights");
  verify->add_option("--graph", v_graph, "graph JSON file")->required();
  verify->add_option("--labels", v_labels, "labeling JSON file")->required();
  verify->add_option("--k", v_k, "distance k")->required();
  verify->add_option("--policy", v_policy, "exempt or zero");

  std::string s_graph, s_policy = "exempt";
  int s_k = 1;
  bool s_count = false;
  auto* search = app.add_subcommand("search", "Exhaustive labeling search");
  search->add_option("--graph", s_graph, "graph JSON file")->required();
  search->add_option("--k", s_k, "distance k")->required();
  search->add_flag("--count", s_count, "count all labelings instead");
  search->add_option("--policy", s_policy, "exempt or zero");

  std::string w_family, w_n, w_k, w_m = "1", w_policy = "exempt";
  int w_jobs = 1;
  auto* sweep = app.add_subcommand(
      "sweep", "Search a parameterized family and compare with the predicted "
               "characterization");
  sweep->add_option("--family", w_family,
                    "path, cycle, union-paths, union-cycles, long-brush")
      ->required();
  sweep->add_option("--n", w_n, "n range A..B")->required();
  sweep->add_option("--k", w_k, "k range A..B")->required();
  sweep->add_option("--m", w_m, "m range A..B (unions / brush size)");
  sweep->add_option("--jobs", w_jobs, "worker threads");
  sweep->add_option("--policy", w_policy, "exempt or zero");

  int p_n = 0, p_exclude = 0;
  std::string p_ground, p_sizes;
  auto* partition = app.add_subcommand(
      "partition", "Equal-sum partition with prescribed part sizes");
  partition->add_option("--n", p_n, "ground set {1..n}");
  partition->add_option("--exclude", p_exclude, "drop this element from {1..n}");
  partition->add_option("--ground", p_ground, "explicit ground set, e.g. 1,2,5");
  partition->add_option("--sizes", p_sizes, "part sizes, e.g. 2,3")->required();

  int t_limit = 60;
  bool t_no_oracle = false;
  auto* table1 = app.add_subcommand(
      "table1", "Feasible m ranges for the two-clique brush shapes");
  table1->add_option("--limit", t_limit, "affordability limit for the oracle");
  table1->add_flag("--no-oracle", t_no_oracle, "skip the exact-search column");

  int x_m1 = 0;
  auto* annexure = app.add_subcommand(
      "annexure", "Largest-vs-smallest sum comparison rows for one m1");
  annexure->add_option("--m1", x_m1, "smaller clique size, 4..22")->required();

  std::string r_kind, r_out;
  int r_m1 = 4, r_jobs = 1, r_limit = 60;
  bool r_json = false;
  auto* report = app.add_subcommand("report", "Reproduce tables or run the suite");
  report->add_option("kind", r_kind, "table1, annexure or suite")->required();
  report->add_option("--m1", r_m1, "row selector for annexure");
  report->add_option("--jobs", r_jobs, "worker threads for suite");
  report->add_option("--limit", r_limit, "affordability limit for table1");
  report->add_flag("--json", r_json, "emit JSON instead of CSV/text");
  report->add_option("--out", r_out, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(construct)) return run_construct(ca);
    if (app.got_subcommand(verify)) return run_verify(v_graph, v_labels, v_k, v_policy);
    if (app.got_subcommand(search)) return run_search(s_graph, s_k, s_count, s_policy);
    if (app.got_subcommand(sweep))
      return run_sweep(w_family, w_n, w_k, w_m, w_jobs, w_policy);
    if (app.got_subcommand(partition))
      return run_partition(p_n, p_exclude, p_ground, p_sizes);
    if (app.got_subcommand(table1)) {
      std::cout << kdm::table1_csv(
          kdm::reproduce_table1(t_no_oracle ? 0 : t_limit));
      return 0;
    }
    if (app.got_subcommand(annexure)) {
      std::cout << kdm::annexure_csv(kdm::reproduce_annexure(x_m1));
      return 0;
    }
    if (app.got_subcommand(report))
      return run_report(r_kind, r_m1, r_json, r_jobs, r_limit, r_out);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const kdm::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
