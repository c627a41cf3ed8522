#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "kdm/constructions.hpp"

using namespace kdm;

namespace {

void require_valid(const LabeledGraph& lg, long long magic) {
  VerifyResult v = verify_kdm(lg.graph, lg.labeling, lg.k);
  REQUIRE(v.valid);
  REQUIRE(v.magic == magic);
  REQUIRE(lg.magic == magic);
}

}  // namespace

TEST_CASE("three-vertex path labeling", "[constructions]") {
  LabeledGraph lg = label_p3();
  REQUIRE(lg.graph == make_path(3));
  REQUIRE(lg.labeling.labels == std::vector<int>{1, 3, 2});
  REQUIRE(lg.k == 1);
  require_valid(lg, 3);
}

TEST_CASE("single four-cycle labelings coincide", "[constructions]") {
  LabeledGraph a = label_m_c4(1);
  LabeledGraph b = label_c4k(1);
  REQUIRE(a.labeling.labels == std::vector<int>{1, 2, 4, 3});
  REQUIRE(a.labeling.labels == b.labeling.labels);
  require_valid(a, 5);
}

TEST_CASE("cycle of length 4k", "[constructions]") {
  LabeledGraph lg = label_c4k(2);
  REQUIRE(lg.graph == make_cycle(8));
  REQUIRE(lg.labeling.labels == std::vector<int>{1, 2, 3, 4, 8, 7, 6, 5});
  REQUIRE(lg.k == 2);
  require_valid(lg, 9);
  for (int k = 1; k <= 5; ++k) require_valid(label_c4k(k), 4ll * k + 1);
  REQUIRE_THROWS_AS(label_c4k(0), std::invalid_argument);
}

TEST_CASE("disjoint copies of C4", "[constructions]") {
  LabeledGraph lg = label_m_c4(2);
  REQUIRE(lg.labeling.labels == std::vector<int>{1, 2, 8, 7, 3, 4, 6, 5});
  require_valid(lg, 9);
  for (int m = 1; m <= 5; ++m) require_valid(label_m_c4(m), 4ll * m + 1);
  REQUIRE_THROWS_AS(label_m_c4(0), std::invalid_argument);
}

TEST_CASE("disjoint copies of C4k", "[constructions]") {
  REQUIRE(label_union_c4k(2, 1).labeling.labels ==
          label_c4k(2).labeling.labels);
  for (int k = 1; k <= 6; ++k)
    for (int m = 1; k * m <= 6; ++m)
      require_valid(label_union_c4k(k, m), 4ll * k * m + 1);
  LabeledGraph lg = label_union_c4k(1, 3);
  REQUIRE(lg.graph.vertex_count() == 12);
  REQUIRE(lg.k == 1);
}

TEST_CASE("labeling count formula", "[constructions]") {
  REQUIRE(count_kdml_union_c4k(1, 1).to_string() == "8");
  REQUIRE(count_kdml_union_c4k(1, 2).to_string() == "384");
  REQUIRE(count_kdml_union_c4k(2, 1).to_string() == "384");
  REQUIRE(count_kdml_union_c4k(1, 3).to_string() == "46080");
}

TEST_CASE("long brush at full distance", "[constructions]") {
  auto lg = label_long_brush_ndm(5, 3);
  REQUIRE(lg.has_value());
  REQUIRE(lg->k == 5);
  require_valid(*lg, 6);

  auto pair = label_long_brush_ndm(5, 2, 3);
  REQUIRE(pair.has_value());
  require_valid(*pair, 7);
  // labels n+2-c and c land on the brush
  REQUIRE(pair->labeling.labels[5] == 3);
  REQUIRE(pair->labeling.labels[6] == 4);

  for (int n = 3; n <= 20; ++n)
    for (int m = 2; m <= 8; ++m) {
      auto built = label_long_brush_ndm(n, m);
      REQUIRE(built.has_value() ==
              (static_cast<long long>(m) * (m - 1) <= 2ll * n));
      if (built)
        require_valid(*built, m == 2 ? n + 2 : m * (m + 1) / 2);
    }

  REQUIRE_THROWS_AS(label_long_brush_ndm(2, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(label_long_brush_ndm(5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(label_long_brush_ndm(5, 3, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(label_long_brush_ndm(5, 2, 9), std::invalid_argument);
  // the symmetric label pair must not collapse
  REQUIRE_THROWS_AS(label_long_brush_ndm(4, 2, 3), std::invalid_argument);
}

TEST_CASE("long brush with handle picked from the bound", "[constructions]") {
  LabeledGraph a = label_long_brush_shifted(3, 0);
  REQUIRE(a.k == 3);
  require_valid(a, 6);
  REQUIRE(label_long_brush_shifted(3, 2).k == 5);
  LabeledGraph b = label_long_brush_shifted(4, 1);
  REQUIRE(b.k == 7);
  require_valid(b, 10);
  LabeledGraph c = label_long_brush_shifted(2, 2);
  REQUIRE(c.k == 3);
  require_valid(c, 3);
  for (int m = 2; m <= 5; ++m)
    for (int t = 0; t <= 3; ++t) {
      if (m * (m - 1) / 2 + t < 3) continue;
      require_valid(label_long_brush_shifted(m, t), m * (m + 1) / 2);
    }
  REQUIRE_THROWS_AS(label_long_brush_shifted(2, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(label_long_brush_shifted(1, 5), std::invalid_argument);
}

TEST_CASE("apex over two cliques", "[constructions]") {
  PartitionResult witness{{{1, 4}, {2, 3}}, 5};
  LabeledGraph lg = label_lp1m_2dm({2, 2}, {5, witness});
  REQUIRE(lg.labeling.labels == std::vector<int>{5, 1, 4, 2, 3});
  REQUIRE(lg.k == 2);
  require_valid(lg, 5);
  // brush really is two cliques
  REQUIRE(lg.graph.has_edge(1, 2));
  REQUIRE(lg.graph.has_edge(3, 4));
  REQUIRE_FALSE(lg.graph.has_edge(2, 3));

  PartitionResult w3{{{2, 6}, {1, 3, 4}}, 8};
  require_valid(label_lp1m_2dm({2, 3}, {5, w3}), 8);

  REQUIRE_THROWS_AS(label_lp1m_2dm({1, 1}, {1, witness}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(label_lp1m_2dm({3, 2}, {5, witness}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(label_lp1m_2dm({2, 2}, {9, witness}),
                    std::invalid_argument);
  PartitionResult bad{{{1, 2}, {3, 4}}, 3};
  REQUIRE_THROWS_AS(label_lp1m_2dm({2, 2}, {5, bad}), std::invalid_argument);
}

TEST_CASE("pendant obstructions", "[constructions]") {
  Graph lonely = disjoint_union({make_complete(1), make_complete(2)});
  auto r1 = non_2dm_obstruction({2, lonely});
  REQUIRE(r1.has_value());
  REQUIRE(*r1 == Non2dmReason::PENDANT_N2);
  REQUIRE(std::string(to_string(*r1)) == "PENDANT-N2");

  Graph twice = disjoint_union(
      {make_complete(1), make_complete(1), make_complete(2)});
  auto r2 = non_2dm_obstruction({3, twice});
  REQUIRE(r2.has_value());
  REQUIRE(*r2 == Non2dmReason::PENDANT_N3);

  REQUIRE_FALSE(non_2dm_obstruction({3, lonely}).has_value());
  REQUIRE_FALSE(non_2dm_obstruction({2, make_complete(3)}).has_value());
  REQUIRE_FALSE(non_2dm_obstruction({5, make_empty(1)}).has_value());
}
