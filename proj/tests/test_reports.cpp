#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "kdm/reports.hpp"

using namespace kdm;

TEST_CASE("recorded reference tables", "[reports]") {
  const auto& t1 = table1_reference();
  REQUIRE(t1.size() == 22);
  REQUIRE(t1.front().m_min == 3);
  REQUIRE(t1.front().m_max == 3);
  REQUIRE(t1[20].m1 == 21);
  REQUIRE(t1[20].m_max == 70);
  REQUIRE(t1.back().m_max == 74);
  const auto& cells = annexure_reference();
  REQUIRE(cells.size() == 70);
  int blanks = 0;
  for (const auto& c : cells)
    if (!c.lhs_recorded) {
      ++blanks;
      REQUIRE(c.m1 == 19);
      REQUIRE(c.m == 38);
    }
  REQUIRE(blanks == 1);
}

TEST_CASE("computed annexure rows", "[reports]") {
  auto rows4 = reproduce_annexure(4);
  REQUIRE(rows4.size() == 7);
  REQUIRE(rows4.front().m == 8);
  REQUIRE(rows4.front().lhs == 26);
  REQUIRE(rows4.front().rhs == 10);
  REQUIRE(rows4.front().holds);
  REQUIRE(rows4.back().m == 14);
  REQUIRE_FALSE(rows4.back().holds);

  auto rows19 = reproduce_annexure(19);
  REQUIRE(rows19.size() == 28);
  REQUIRE(rows19.front().m == 38);
  REQUIRE(rows19.front().lhs == 551);
  REQUIRE(rows19.back().m == 65);

  // the comparison genuinely holds one step past the recorded end here
  auto rows21 = reproduce_annexure(21);
  REQUIRE(rows21.back().m == 72);
  REQUIRE(rows21.back().lhs == 1302);
  REQUIRE(rows21.back().rhs == 1326);
  REQUIRE(rows21[71 - 42].m == 71);
  REQUIRE(rows21[71 - 42].holds);

  REQUIRE_THROWS_AS(reproduce_annexure(3), std::invalid_argument);
  REQUIRE_THROWS_AS(reproduce_annexure(23), std::invalid_argument);
}

TEST_CASE("computed feasibility table with oracle column", "[reports]") {
  auto rows = reproduce_table1();
  REQUIRE(rows.size() == 22);
  const std::vector<int> agree = {1, 2, 3, 4, 6, 9, 11, 16};
  const std::vector<int> disagree = {5, 7, 8, 10, 12, 13, 14, 15, 17};
  for (const auto& r : rows) {
    if (std::find(agree.begin(), agree.end(), r.m1) != agree.end()) {
      REQUIRE(r.oracle_agreement.has_value());
      REQUIRE(*r.oracle_agreement);
    } else if (std::find(disagree.begin(), disagree.end(), r.m1) !=
               disagree.end()) {
      REQUIRE(r.oracle_agreement.has_value());
      REQUIRE_FALSE(*r.oracle_agreement);
    } else {
      REQUIRE_FALSE(r.oracle_agreement.has_value());
    }
  }
  REQUIRE(rows[20].m_max == 71);

  for (const auto& r : reproduce_table1(0))
    REQUIRE_FALSE(r.oracle_agreement.has_value());
}

TEST_CASE("csv rendering", "[reports]") {
  std::string t1 = table1_csv(reproduce_table1(0));
  REQUIRE(t1.rfind("m1,m_min,m_max,oracle_agreement\n", 0) == 0);
  REQUIRE(t1.find("\n1,3,3,\n") != std::string::npos);
  std::string ax = annexure_csv(reproduce_annexure(4));
  REQUIRE(ax.rfind("m,lhs,rhs,verdict\n", 0) == 0);
  REQUIRE(ax.find("13,46,45,True\n") != std::string::npos);
  REQUIRE(ax.find("14,50,55,False\n") != std::string::npos);
}

TEST_CASE("figure labelings verify", "[reports]") {
  auto cases = figure_cases();
  REQUIRE(cases.size() == 13);
  for (const auto& fc : cases) {
    INFO(fc.name);
    VerifyResult v = verify_kdm(fc.graph, fc.labeling, fc.k);
    REQUIRE(v.valid);
    REQUIRE(v.magic == fc.magic);
  }
  REQUIRE(cases.front().name == "figure-1");
  REQUIRE(cases.back().name == "figure-15");
  REQUIRE(cases.back().magic == 15);
}

TEST_CASE("verification suite", "[reports]") {
  auto checks = theorem_suite();
  REQUIRE(checks.size() == 19);
  REQUIRE(std::is_sorted(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                           return a.name < b.name;
                         }));
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    REQUIRE(c.pass);
  }
  REQUIRE(suite_all_pass(checks));

  auto by_name = [&checks](const std::string& name) -> const CheckResult& {
    for (const auto& c : checks)
      if (c.name == name) return c;
    FAIL("missing check " + name);
    return checks.front();
  };
  REQUIRE(by_name("annexure-reference-match").detail.find("551") !=
          std::string::npos);
  REQUIRE(by_name("table1-reference-match").detail.find("71") !=
          std::string::npos);
  REQUIRE(by_name("table1-oracle-agreement").detail.find("feasible-at-58") !=
          std::string::npos);

  std::string text = suite_text(checks);
  REQUIRE(text.find("[PASS] cycle-characterization") != std::string::npos);
  REQUIRE(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("suite is deterministic across job counts", "[reports]") {
  auto serial = theorem_suite(1);
  auto parallel = theorem_suite(3);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i].name == parallel[i].name);
    REQUIRE(serial[i].pass == parallel[i].pass);
  }
}
