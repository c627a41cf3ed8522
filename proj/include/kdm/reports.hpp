#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kdm/constructions.hpp"
#include "kdm/graph.hpp"
#include "kdm/labeling.hpp"
#include "kdm/partitions.hpp"
#include "kdm/search.hpp"

namespace kdm {

// ---------------------------------------------------------------------------
// Computed tables

struct Table1Row {
  int m1 = 0;
  int m_min = 0;
  int m_max = 0;
  // Exact-search cross-check of the inequality-derived range; absent when the
  // row was over the affordability limit.
  std::optional<bool> oracle_agreement;
};

namespace detail {

inline std::vector<int> two_clique_sizes(int m1, int m) {
  return {std::min(m1, m - m1), std::max(m1, m - m1)};
}

// Exact-search cross-check of an inequality-derived range: scans the window
// [m_min, m_max+1] and records every m where partition feasibility disagrees
// with membership in [m_min, m_max].
struct OracleDisagreements {
  std::vector<int> missing_in_range;
  std::vector<int> feasible_beyond;
  bool agree() const { return missing_in_range.empty() && feasible_beyond.empty(); }
};

inline OracleDisagreements table1_row_oracle(int m1, int m_min, int m_max) {
  OracleDisagreements d;
  for (int m = m_min; m <= m_max + 1; ++m) {
    const bool feasible = any_feasible_apex_label(m, two_clique_sizes(m1, m));
    if (feasible && m > m_max) d.feasible_beyond.push_back(m);
    if (!feasible && m <= m_max) d.missing_in_range.push_back(m);
  }
  return d;
}

}  // namespace detail

inline std::vector<Table1Row> reproduce_table1(int oracle_limit = 60) {
  std::vector<Table1Row> rows;
  for (int m1 = 1; m1 <= 22; ++m1) {
    Table1Range r = table1_range(m1);
    Table1Row row{m1, r.m_min, r.m_max, std::nullopt};
    if (r.m_max + 2 <= oracle_limit)
      row.oracle_agreement =
          detail::table1_row_oracle(m1, r.m_min, r.m_max).agree();
    rows.push_back(row);
  }
  return rows;
}

struct AnnexureRow {
  int m = 0;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

// Rows m = 2*m1 up to and including the first failing m.
inline std::vector<AnnexureRow> reproduce_annexure(int m1) {
  if (m1 < 4 || m1 > 22)
    throw std::invalid_argument("annexure tables cover m1 = 4..22");
  std::vector<AnnexureRow> rows;
  for (int m = 2 * m1;; ++m) {
    InequalityCheck c = annexure_inequality(m1, m);
    rows.push_back({m, c.lhs, c.rhs, c.holds});
    if (!c.holds) break;
  }
  return rows;
}

inline std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "m1,m_min,m_max,oracle_agreement\n";
  for (const auto& r : rows) {
    out << r.m1 << ',' << r.m_min << ',' << r.m_max << ',';
    if (r.oracle_agreement) out << (*r.oracle_agreement ? "yes" : "no");
    out << '\n';
  }
  return out.str();
}

inline std::string annexure_csv(const std::vector<AnnexureRow>& rows) {
  std::ostringstream out;
  out << "m,lhs,rhs,verdict\n";
  for (const auto& r : rows)
    out << r.m << ',' << r.lhs << ',' << r.rhs << ','
        << (r.holds ? "True" : "False") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Recorded reference values (regression fixtures the suite checks against)

struct Table1ReferenceRow {
  int m1 = 0;
  int m_min = 0;
  int m_max = 0;
};

inline const std::vector<Table1ReferenceRow>& table1_reference() {
  static const std::vector<Table1ReferenceRow> rows = {
      {1, 3, 3},    {2, 4, 7},    {3, 6, 10},   {4, 8, 13},   {5, 10, 16},
      {6, 12, 20},  {7, 14, 23},  {8, 16, 26},  {9, 18, 30},  {10, 20, 33},
      {11, 22, 37}, {12, 24, 40}, {13, 26, 43}, {14, 28, 47}, {15, 30, 50},
      {16, 32, 54}, {17, 34, 57}, {18, 36, 60}, {19, 38, 64}, {20, 40, 67},
      {21, 42, 70}, {22, 44, 74}};
  return rows;
}

struct AnnexureReferenceCell {
  int m1 = 0;
  int m = 0;
  long long lhs = 0;
  bool lhs_recorded = true;  // one source cell has no recorded lhs
  long long rhs = 0;
  bool holds = false;
};

inline const std::vector<AnnexureReferenceCell>& annexure_reference() {
  static const std::vector<AnnexureReferenceCell> cells = {
      {4, 8, 26, true, 10, true},      {4, 9, 30, true, 15, true},
      {4, 10, 34, true, 21, true},     {4, 11, 38, true, 28, true},
      {4, 12, 42, true, 36, true},     {4, 13, 46, true, 45, true},
      {4, 14, 50, true, 55, false},    {5, 10, 40, true, 15, true},
      {5, 15, 65, true, 55, true},     {5, 16, 70, true, 66, true},
      {5, 17, 75, true, 78, false},    {6, 12, 57, true, 21, true},
      {6, 19, 99, true, 91, true},     {6, 20, 105, true, 105, true},
      {6, 21, 111, true, 120, false},  {7, 14, 77, true, 28, true},
      {7, 22, 133, true, 120, true},   {7, 23, 140, true, 136, true},
      {7, 24, 147, true, 153, false},  {8, 16, 100, true, 36, true},
      {8, 25, 172, true, 153, true},   {8, 26, 180, true, 171, true},
      {8, 27, 188, true, 190, false},  {9, 18, 126, true, 45, true},
      {9, 29, 225, true, 210, true},   {9, 30, 234, true, 231, true},
      {9, 31, 243, true, 253, false},  {10, 20, 155, true, 55, true},
      {10, 32, 275, true, 253, true},  {10, 33, 285, true, 276, true},
      {10, 34, 295, true, 300, false}, {11, 22, 187, true, 66, true},
      {11, 36, 341, true, 325, true},  {11, 37, 352, true, 351, true},
      {11, 38, 363, true, 378, false}, {12, 24, 222, true, 78, true},
      {12, 40, 414, true, 406, true},  {12, 41, 426, true, 435, false},
      {13, 26, 260, true, 91, true},   {13, 43, 481, true, 465, true},
      {13, 44, 494, true, 496, false}, {14, 28, 301, true, 105, true},
      {14, 47, 567, true, 561, true},  {14, 48, 581, true, 595, false},
      {15, 30, 345, true, 120, true},  {15, 50, 645, true, 630, true},
      {15, 51, 660, true, 666, false}, {16, 32, 392, true, 136, true},
      {16, 53, 728, true, 703, true},  {16, 54, 744, true, 741, true},
      {16, 55, 760, true, 780, false}, {17, 34, 442, true, 153, true},
      {17, 57, 833, true, 820, true},  {17, 58, 850, true, 861, false},
      {18, 36, 495, true, 171, true},  {18, 60, 927, true, 903, true},
      {18, 61, 945, true, 946, false}, {19, 38, 0, false, 190, true},
      {19, 63, 1026, true, 990, true}, {19, 64, 1045, true, 1035, true},
      {19, 65, 1064, true, 1081, false}, {20, 40, 610, true, 210, true},
      {20, 67, 1150, true, 1128, true}, {20, 68, 1170, true, 1176, false},
      {21, 42, 672, true, 231, true},  {21, 70, 1260, true, 1225, true},
      {21, 71, 1281, true, 1275, false}, {22, 44, 737, true, 253, true},
      {22, 74, 1397, true, 1378, true}, {22, 75, 1419, true, 1431, false}};
  return cells;
}

// Labeled figures: the small showcase labelings with their magic constants.
struct FigureCase {
  std::string name;
  Graph graph;
  Labeling labeling;
  int k = 1;
  long long magic = 0;
};

inline std::vector<FigureCase> figure_cases() {
  std::vector<FigureCase> out;
  out.push_back({"figure-1", make_path(3), Labeling{{1, 3, 2}}, 1, 3});
  const Graph lp13 =
      make_long_brush({1, disjoint_union({make_complete(1), make_complete(2)})});
  out.push_back({"figure-4", lp13, Labeling{{4, 3, 1, 2}}, 2, 3});
  out.push_back({"figure-5", lp13, Labeling{{2, 4, 1, 3}}, 2, 4});
  auto add = [&out](const char* name, std::vector<int> sizes, int j,
                    std::vector<std::vector<int>> parts, long long part_sum,
                    long long magic) {
    PartitionResult witness{std::move(parts), part_sum};
    LabeledGraph lg = label_lp1m_2dm(sizes, {j, witness});
    if (lg.magic != magic)
      throw std::logic_error("figure fixture disagrees with its construction");
    out.push_back({name, std::move(lg.graph), std::move(lg.labeling), lg.k, magic});
  };
  add("figure-6", {2, 2}, 5, {{1, 4}, {2, 3}}, 5, 5);
  add("figure-7", {2, 2}, 3, {{1, 5}, {2, 4}}, 6, 6);
  add("figure-8", {2, 2}, 1, {{2, 5}, {3, 4}}, 7, 7);
  add("figure-9", {2, 3}, 5, {{2, 6}, {1, 3, 4}}, 8, 8);
  add("figure-10", {2, 3}, 3, {{4, 5}, {1, 2, 6}}, 9, 9);
  add("figure-11", {2, 3}, 1, {{4, 6}, {2, 3, 5}}, 10, 10);
  add("figure-12", {2, 4}, 6, {{4, 7}, {1, 2, 3, 5}}, 11, 11);
  add("figure-13", {2, 4}, 4, {{5, 7}, {1, 2, 3, 6}}, 12, 12);
  add("figure-14", {2, 4}, 2, {{6, 7}, {1, 3, 4, 5}}, 13, 13);
  add("figure-15", {2, 5}, 6, {{7, 8}, {1, 2, 3, 4, 5}}, 15, 15);
  return out;
}

// ---------------------------------------------------------------------------
// Theorem verification suite

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

constexpr int kSuiteCap = 12;  // all suite instances fit this cap

inline std::string tuple_str(int n, int m, int k) {
  std::ostringstream s;
  s << "(n=" << n << ",m=" << m << ",k=" << k << ")";
  return s.str();
}

inline CheckResult check_figures(const char* name, int lo, int hi) {
  CheckResult res{name, true, ""};
  for (const FigureCase& fc : figure_cases()) {
    const int num = std::stoi(fc.name.substr(fc.name.find_last_of('-') + 1));
    if (num < lo || num > hi) continue;
    VerifyResult v = verify_kdm(fc.graph, fc.labeling, fc.k);
    if (!v.valid || *v.magic != fc.magic) {
      res.pass = false;
      res.detail += fc.name + " failed; ";
    }
  }
  return res;
}

// A recorded verdict cell can contradict its own recorded lhs/rhs pair; such
// cells are reported as flaws in the reference data, not as failures of the
// computation being checked against it.
inline bool reference_cell_self_inconsistent(const AnnexureReferenceCell& c) {
  return c.lhs_recorded && (c.lhs >= c.rhs) != c.holds;
}

inline CheckResult check_annexure_reference() {
  CheckResult res{"annexure-reference-match", true, ""};
  std::map<int, std::vector<AnnexureRow>> computed;
  for (const AnnexureReferenceCell& cell : annexure_reference()) {
    auto it = computed.find(cell.m1);
    if (it == computed.end())
      it = computed.emplace(cell.m1, reproduce_annexure(cell.m1)).first;
    const std::string where =
        "m1=" + std::to_string(cell.m1) + " m=" + std::to_string(cell.m);
    const AnnexureRow* row = nullptr;
    for (const AnnexureRow& r : it->second)
      if (r.m == cell.m) row = &r;
    if (row == nullptr) {
      res.pass = false;
      res.detail += where + " missing from computed rows; ";
      continue;
    }
    if (row->rhs != cell.rhs || (cell.lhs_recorded && row->lhs != cell.lhs)) {
      res.pass = false;
      res.detail += where + " lhs/rhs mismatch; ";
      continue;
    }
    if (!cell.lhs_recorded)
      res.detail += where + ": lhs computed as " + std::to_string(row->lhs) +
                    " (no recorded reference value); ";
    if (row->holds != cell.holds) {
      if (reference_cell_self_inconsistent(cell)) {
        res.detail += where + ": recorded verdict " +
                      (cell.holds ? "True" : "False") +
                      " contradicts its own recorded values " +
                      std::to_string(cell.lhs) + " vs " +
                      std::to_string(cell.rhs) + "; computed " +
                      (row->holds ? "True" : "False") + "; ";
      } else {
        res.pass = false;
        res.detail += where + " verdict mismatch; ";
      }
    }
  }
  return res;
}

inline CheckResult check_table1_reference() {
  CheckResult res{"table1-reference-match", true, ""};
  for (const Table1ReferenceRow& ref : table1_reference()) {
    Table1Range r = table1_range(ref.m1);
    if (r.m_min == ref.m_min && r.m_max == ref.m_max) continue;
    // A recorded upper end one short of where the comparison actually stops
    // holding is a known flaw in the reference row, reported but tolerated.
    const bool recorded_end_too_low =
        ref.m1 >= 4 && r.m_min == ref.m_min && r.m_max > ref.m_max &&
        annexure_inequality(ref.m1, ref.m_max + 1).holds;
    if (recorded_end_too_low) {
      res.detail += "m1=" + std::to_string(ref.m1) + ": recorded upper end " +
                    std::to_string(ref.m_max) +
                    " but the comparison still holds at " +
                    std::to_string(ref.m_max + 1) + "; computed " +
                    std::to_string(r.m_max) + "; ";
    } else {
      res.pass = false;
      res.detail += "m1=" + std::to_string(ref.m1) + " computed (" +
                    std::to_string(r.m_min) + "," + std::to_string(r.m_max) +
                    ") vs recorded (" + std::to_string(ref.m_min) + "," +
                    std::to_string(ref.m_max) + "); ";
    }
  }
  return res;
}

inline CheckResult check_table1_oracle() {
  CheckResult res{"table1-oracle-agreement", true, ""};
  int skipped = 0, discrepancies = 0;
  for (const Table1Row& row : reproduce_table1()) {
    if (!row.oracle_agreement) {
      ++skipped;
      continue;
    }
    if (*row.oracle_agreement) continue;
    OracleDisagreements d = table1_row_oracle(row.m1, row.m_min, row.m_max);
    std::string points;
    for (int m : d.missing_in_range)
      points += " no-partition-at-" + std::to_string(m);
    for (int m : d.feasible_beyond)
      points += " feasible-at-" + std::to_string(m);
    if (row.m1 <= 3) {
      // The small ranges are exact results; disagreement there is an error.
      res.pass = false;
      res.detail += "m1=" + std::to_string(row.m1) +
                    ": exact search contradicts a proved range:" + points + "; ";
    } else {
      ++discrepancies;
      res.detail += "m1=" + std::to_string(row.m1) + ":" + points + "; ";
    }
  }
  res.detail += std::to_string(discrepancies) +
                " inequality-range rows with documented discrepancies, " +
                std::to_string(skipped) + " rows over the affordability limit";
  return res;
}

inline CheckResult check_bipartition() {
  CheckResult res{"bipartition-residue", true, ""};
  for (int n = 3; n <= 200; ++n) {
    const bool exists = bipartition_exists(n);
    int odds = (n + 1) / 2;
    auto built = bipartition_construct(n);
    if (exists != (odds % 2 == 0) || exists != built.has_value()) {
      res.pass = false;
      res.detail += "n=" + std::to_string(n) + "; ";
      continue;
    }
    if (built) {
      const long long expect =
          n % 4 == 0 ? static_cast<long long>(n / 4) * (n + 1)
                     : static_cast<long long>((n + 1) / 4) * n;
      if (built->common_sum != expect) {
        res.pass = false;
        res.detail += "n=" + std::to_string(n) + " sum; ";
      }
    }
  }
  return res;
}

inline CheckResult check_block_join() {
  CheckResult res{"block-join-connectivity", true, ""};
  std::mt19937 rng(20240817u);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(rng, 1, 9);
    if (is_block(join_apex(g)) != is_connected(g)) {
      res.pass = false;
      res.detail = "counterexample at trial " + std::to_string(trial);
      break;
    }
  }
  return res;
}

inline CheckResult check_obstruction_soundness() {
  CheckResult res{"obstruction-soundness", true, ""};
  std::mt19937 rng(20240823u);
  std::uniform_int_distribution<int> pick_k(1, 3);
  int witnesses = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(rng, 1, 8);
    const int k = pick_k(rng);
    auto w = lemma_obstruction(g, k);
    if (!w) continue;
    ++witnesses;
    if (!(count_kdml(g, k, EmptyBoundaryPolicy::EXEMPT, kSuiteCap) == BigUint(0))) {
      res.pass = false;
      res.detail = "witness at trial " + std::to_string(trial) +
                   " but labelings exist";
      break;
    }
  }
  if (res.pass)
    res.detail = std::to_string(witnesses) + " witnesses confirmed";
  return res;
}

inline CheckResult check_path_characterization() {
  CheckResult res{"path-characterization", true, ""};
  auto rows = classify_family(Family::PATH, {2, 8}, {1, 4}, {1, 1},
                              EmptyBoundaryPolicy::EXEMPT, 1, kSuiteCap);
  std::set<std::pair<int, int>> found;
  for (const SweepRow& r : rows) {
    if (!r.agree) {
      res.pass = false;
      res.detail += tuple_str(r.n, r.m, r.k) + " disagrees; ";
    }
    if (r.found) found.insert({r.n, r.k});
  }
  if (found != std::set<std::pair<int, int>>{{3, 1}}) {
    res.pass = false;
    res.detail += "found set is not {(3,1)}; ";
  }
  return res;
}

inline CheckResult check_cycle_characterization() {
  CheckResult res{"cycle-characterization", true, ""};
  auto rows = classify_family(Family::CYCLE, {3, 12}, {1, 3}, {1, 1},
                              EmptyBoundaryPolicy::EXEMPT, 1, kSuiteCap);
  std::set<std::pair<int, int>> found;
  for (const SweepRow& r : rows) {
    if (!r.agree) {
      res.pass = false;
      res.detail += tuple_str(r.n, r.m, r.k) + " disagrees; ";
    }
    if (r.found) found.insert({r.n, r.k});
  }
  if (found != std::set<std::pair<int, int>>{{4, 1}, {8, 2}, {12, 3}}) {
    res.pass = false;
    res.detail += "found set is not {(4,1),(8,2),(12,3)}; ";
  }
  return res;
}

inline CheckResult check_union_paths() {
  CheckResult res{"union-path-characterization", true, ""};
  auto rows = classify_family(Family::UNION_PATHS, {2, 4}, {1, 2}, {1, 2},
                              EmptyBoundaryPolicy::EXEMPT, 1, kSuiteCap);
  for (const SweepRow& r : rows) {
    if (!r.agree) {
      res.pass = false;
      res.detail += tuple_str(r.n, r.m, r.k) + " disagrees; ";
    }
  }
  return res;
}

inline CheckResult check_union_cycles() {
  CheckResult res{"union-cycle-characterization", true, ""};
  auto rows = classify_family(Family::UNION_CYCLES, {3, 6}, {1, 1}, {1, 2},
                              EmptyBoundaryPolicy::EXEMPT, 1, kSuiteCap);
  for (const SweepRow& r : rows) {
    if (!r.agree) {
      res.pass = false;
      res.detail += tuple_str(r.n, r.m, r.k) + " disagrees; ";
    }
  }
  return res;
}

inline CheckResult check_long_brush() {
  CheckResult res{"long-brush-characterization", true, ""};
  for (int n = 3; n <= 6; ++n) {
    for (int m = 2; m <= 4; ++m) {
      Graph g = make_long_brush({n, make_complete(m)});
      for (int k = 1; k <= n; ++k) {
        const bool found =
            find_kdml(g, k, EmptyBoundaryPolicy::EXEMPT, kSuiteCap).has_value();
        const bool predicted =
            k == n && static_cast<long long>(m) * (m - 1) <= 2ll * n;
        if (found != predicted) {
          res.pass = false;
          res.detail += tuple_str(n, m, k) + " disagrees; ";
        }
      }
    }
  }
  return res;
}

inline CheckResult check_counting() {
  CheckResult res{"counting-c4-family", true, ""};
  if (!(count_kdml(make_cycle(4), 1, EmptyBoundaryPolicy::EXEMPT, kSuiteCap) ==
        BigUint(8)) ||
      !(count_kdml_union_c4k(1, 1) == BigUint(8))) {
    res.pass = false;
    res.detail += "C4 count is not 8; ";
  }
  const Graph two_c4 = disjoint_union({make_cycle(4), make_cycle(4)});
  if (!(count_kdml(two_c4, 1, EmptyBoundaryPolicy::EXEMPT, kSuiteCap) ==
        BigUint(384)) ||
      !(count_kdml_union_c4k(1, 2) == BigUint(384))) {
    res.pass = false;
    res.detail += "2*C4 count is not 384; ";
  }
  if (!(count_kdml_union_c4k(2, 1) == BigUint(384))) {
    res.pass = false;
    res.detail += "C8 formula value is not 384; ";
  }
  return res;
}

inline CheckResult check_constructions() {
  CheckResult res{"constructions-self-verify", true, ""};
  auto expect = [&res](const LabeledGraph& lg, long long magic, const char* what) {
    VerifyResult v = verify_kdm(lg.graph, lg.labeling, lg.k);
    if (!v.valid || *v.magic != magic || lg.magic != magic) {
      res.pass = false;
      res.detail += std::string(what) + " failed; ";
    }
  };
  for (int k = 1; k <= 5; ++k) expect(label_c4k(k), 4ll * k + 1, "c4k");
  for (int k = 1; k <= 6; ++k)
    for (int m = 1; k * m <= 6; ++m)
      expect(label_union_c4k(k, m), 4ll * k * m + 1, "union-c4k");
  for (int m = 1; m <= 5; ++m) expect(label_m_c4(m), 4ll * m + 1, "m-c4");
  for (int n = 3; n <= 12; ++n) {
    for (int m = 2; m <= 5; ++m) {
      auto lg = label_long_brush_ndm(n, m);
      const bool should = static_cast<long long>(m) * (m - 1) <= 2ll * n;
      if (lg.has_value() != should) {
        res.pass = false;
        res.detail += "ndm feasibility " + tuple_str(n, m, n) + "; ";
        continue;
      }
      if (lg)
        expect(*lg, m == 2 ? n + 2 : m * (m + 1) / 2, "long-brush-ndm");
    }
  }
  for (int m = 2; m <= 5; ++m)
    for (int t = 0; t <= 3; ++t) {
      if (m * (m - 1) / 2 + t < 3) continue;  // refused: handle below 3
      expect(label_long_brush_shifted(m, t), m * (m + 1) / 2,
             "long-brush-shifted");
    }
  const std::vector<std::pair<int, int>> shapes = {
      {1, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
      {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10}};
  for (auto [m1, m] : shapes) {
    auto feas = feasible_apex_labels(m, two_clique_sizes(m1, m));
    if (feas.empty()) {
      res.pass = false;
      res.detail += "no apex label for m1=" + std::to_string(m1) +
                    " m=" + std::to_string(m) + "; ";
      continue;
    }
    for (const auto& w : feas) {
      LabeledGraph lg = label_lp1m_2dm(two_clique_sizes(m1, m), w);
      expect(lg, w.second.common_sum, "lp1m-2dm");
    }
  }
  return res;
}

inline CheckResult check_partition_ranges() {
  CheckResult res{"partition-feasible-ranges", true, ""};
  auto range_of = [](int m1, int lo, int hi) {
    std::set<int> feasible;
    for (int m = lo; m <= hi; ++m)
      if (any_feasible_apex_label(m, two_clique_sizes(m1, m)))
        feasible.insert(m);
    return feasible;
  };
  if (range_of(1, 3, 8) != std::set<int>{3}) {
    res.pass = false;
    res.detail += "one-clique-plus-rest range is not {3}; ";
  }
  if (range_of(2, 4, 11) != std::set<int>{4, 5, 6, 7}) {
    res.pass = false;
    res.detail += "two-smallest range is not {4..7}; ";
  }
  if (range_of(3, 6, 13) != std::set<int>{6, 7, 8, 9, 10}) {
    res.pass = false;
    res.detail += "three-smallest range is not {6..10}; ";
  }
  auto apex_set = [](int m, std::vector<int> sizes) {
    std::set<int> out;
    for (const auto& w : feasible_apex_labels(m, sizes)) out.insert(w.first);
    return out;
  };
  if (apex_set(4, {2, 2}) != std::set<int>{1, 3, 5}) {
    res.pass = false;
    res.detail += "m=4 apex labels are not {1,3,5}; ";
  }
  if (apex_set(6, {2, 4}) != std::set<int>{2, 4, 6}) {
    res.pass = false;
    res.detail += "m=6 apex labels are not {2,4,6}; ";
  }
  if (apex_set(10, {3, 7}) != std::set<int>{6, 10}) {
    res.pass = false;
    res.detail += "m=10 apex labels are not {6,10}; ";
  }
  return res;
}

inline CheckResult check_pendant_obstruction() {
  CheckResult res{"pendant-obstruction-soundness", true, ""};
  int flagged = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      std::vector<std::pair<int, int>> slots;
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) slots.emplace_back(u, v);
      for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        Graph brush(m);
        for (std::size_t b = 0; b < slots.size(); ++b)
          if (mask & (1u << b)) brush.add_edge(slots[b].first, slots[b].second);
        LongBrushSpec spec{n, brush};
        if (!non_2dm_obstruction(spec)) continue;
        ++flagged;
        if (find_kdml(make_long_brush(spec), 2, EmptyBoundaryPolicy::EXEMPT,
                      kSuiteCap)) {
          res.pass = false;
          res.detail = "flagged shape with n=" + std::to_string(n) +
                       " m=" + std::to_string(m) + " has a 2-DML";
          return res;
        }
      }
    }
  }
  res.detail = std::to_string(flagged) + " flagged shapes confirmed";
  return res;
}

inline CheckResult check_closed_neighbourhood() {
  CheckResult res{"closed-neighbourhood-sums", true, ""};
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      std::vector<std::pair<int, int>> slots;
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) slots.emplace_back(u, v);
      for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        Graph brush(m);
        for (std::size_t b = 0; b < slots.size(); ++b)
          if (mask & (1u << b)) brush.add_edge(slots[b].first, slots[b].second);
        Graph g = make_long_brush({n, brush});
        auto f = find_kdml(g, 2, EmptyBoundaryPolicy::EXEMPT, kSuiteCap);
        if (!f) continue;
        DistanceMatrix dist(g);
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j < m; ++j) {
            const int vi = n + i, vj = n + j;
            if (dist.at(vi, vj) != 2) continue;
            long long si = f->labels[vi], sj = f->labels[vj];
            for (int w : g.neighbors(vi)) si += f->labels[w];
            for (int w : g.neighbors(vj)) sj += f->labels[w];
            ++checked;
            if (si != sj) {
              res.pass = false;
              res.detail = "closed sums differ on a labeling of n=" +
                           std::to_string(n) + " m=" + std::to_string(m);
              return res;
            }
          }
        }
      }
    }
  }
  res.detail = std::to_string(checked) + " brush pairs checked";
  return res;
}

}  // namespace detail

inline std::vector<CheckResult> theorem_suite(int jobs = 1) {
  using Fn = CheckResult (*)();
  const std::vector<Fn> checks = {
      &detail::check_annexure_reference,
      &detail::check_bipartition,
      &detail::check_block_join,
      &detail::check_closed_neighbourhood,
      &detail::check_constructions,
      &detail::check_counting,
      &detail::check_cycle_characterization,
      []() { return detail::check_figures("figure-1-verify", 1, 1); },
      []() { return detail::check_figures("figure-4-5-verify", 4, 5); },
      []() { return detail::check_figures("figure-6-15-verify", 6, 15); },
      &detail::check_long_brush,
      &detail::check_obstruction_soundness,
      &detail::check_partition_ranges,
      &detail::check_path_characterization,
      &detail::check_pendant_obstruction,
      &detail::check_table1_oracle,
      &detail::check_table1_reference,
      &detail::check_union_cycles,
      &detail::check_union_paths,
  };
  std::vector<CheckResult> results(checks.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < checks.size(); i += stride)
      results[i] = checks[i]();
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    const auto stride = static_cast<std::size_t>(jobs);
    for (std::size_t t = 0; t < stride; ++t) pool.emplace_back(work, t, stride);
    for (auto& th : pool) th.join();
  }
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

inline bool suite_all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

inline std::string suite_text(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace kdm
