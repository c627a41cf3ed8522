#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "kdm/bigint.hpp"
#include "kdm/graph.hpp"
#include "kdm/labeling.hpp"
#include "kdm/partitions.hpp"

namespace kdm {

// A construction output: the graph, its labeling, the distance parameter the
// labeling is valid for, and the magic constant.
struct LabeledGraph {
  Graph graph;
  Labeling labeling;
  int k = 1;
  long long magic = 0;
};

namespace detail {

// Every constructive labeler self-checks before returning.
inline LabeledGraph checked(Graph g, Labeling f, int k, long long magic) {
  VerifyResult r = verify_kdm(g, f, k);
  if (!r.valid || *r.magic != magic)
    throw std::logic_error("construction failed its self-check");
  return {std::move(g), std::move(f), k, magic};
}

// Assigns the labels of {1..p} not used yet to the vertices in `targets`,
// ascending label to ascending position.
inline void fill_remaining_ascending(std::vector<int>& labels,
                                     const std::vector<int>& targets) {
  const int p = static_cast<int>(labels.size());
  std::vector<char> taken(static_cast<std::size_t>(p) + 1, 0);
  for (int l : labels)
    if (l > 0) taken[l] = 1;
  int next = 1;
  for (int v : targets) {
    while (next <= p && taken[next]) ++next;
    labels[v] = next++;
  }
}

}  // namespace detail

// P3 with endpoints {1,2} and centre 3; 1-DM with magic 3.
inline LabeledGraph label_p3() {
  return detail::checked(make_path(3), Labeling{{1, 3, 2}}, 1, 3);
}

// m disjoint 4-cycles; antipodal pairs carry complementary label pairs
// {l, 4m+1-l}, so every neighbourhood sums to 4m+1.
inline LabeledGraph label_m_c4(int m) {
  if (m < 1) throw std::invalid_argument("needs m >= 1");
  Graph g = disjoint_union(std::vector<Graph>(static_cast<std::size_t>(m),
                                              make_cycle(4)));
  std::vector<int> labels(static_cast<std::size_t>(4 * m), 0);
  for (int j = 0; j < m; ++j) {
    labels[4 * j + 0] = 2 * j + 1;
    labels[4 * j + 2] = 4 * m - 2 * j;
    labels[4 * j + 1] = 2 * j + 2;
    labels[4 * j + 3] = 4 * m - 2 * j - 1;
  }
  return detail::checked(std::move(g), Labeling{std::move(labels)}, 1, 4 * m + 1);
}

// C_{4k}: opposite vertices u_i, u_{2k+i} get {i+1, 4k-i}; k-DM with
// magic 4k+1 since each k-boundary is an opposite pair.
inline LabeledGraph label_c4k(int k) {
  if (k < 1) throw std::invalid_argument("needs k >= 1");
  Graph g = make_cycle(4 * k);
  std::vector<int> labels(static_cast<std::size_t>(4 * k), 0);
  for (int i = 0; i < 2 * k; ++i) {
    labels[i] = i + 1;
    labels[2 * k + i] = 4 * k - i;
  }
  return detail::checked(std::move(g), Labeling{std::move(labels)}, k, 4 * k + 1);
}

// m disjoint copies of C_{4k} with globally complementary pairs
// {l, 4km+1-l} on opposite vertices; k-DM with magic 4km+1.
inline LabeledGraph label_union_c4k(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("needs k, m >= 1");
  Graph g = disjoint_union(std::vector<Graph>(static_cast<std::size_t>(m),
                                              make_cycle(4 * k)));
  std::vector<int> labels(static_cast<std::size_t>(4 * k * m), 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < 2 * k; ++i) {
      const int t = j * 2 * k + i;
      labels[j * 4 * k + i] = t + 1;
      labels[j * 4 * k + 2 * k + i] = 4 * k * m - t;
    }
  }
  return detail::checked(std::move(g), Labeling{std::move(labels)}, k,
                         4ll * k * m + 1);
}

// Number of k-DMLs of the union of m copies of C_{4k}: 2^(2km) * (2km)!.
inline BigUint count_kdml_union_c4k(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("needs k, m >= 1");
  const unsigned half = static_cast<unsigned>(2 * k * m);
  return BigUint::pow2(half) * BigUint::factorial(half);
}

// n-DM labeling of LP_{n,m} with complete brush, which exists iff
// m(m-1) <= 2n. For m = 2 the brush pair carries {c, n+2-c} (c is
// pair_choice, default 1) and u_n carries n+2; for m > 2 the brush carries
// 1..m and u_n carries m(m+1)/2. Handle interior gets the leftovers
// ascending; those vertices have empty n-boundaries.
inline std::optional<LabeledGraph> label_long_brush_ndm(
    int n, int m, std::optional<int> pair_choice = std::nullopt) {
  if (n < 3) throw std::invalid_argument("needs n >= 3");
  if (m < 2) throw std::invalid_argument("needs m >= 2");
  if (pair_choice && m != 2)
    throw std::invalid_argument("pair choice applies only when m = 2");
  if (static_cast<long long>(m) * (m - 1) > 2ll * n) return std::nullopt;
  Graph g = make_long_brush({n, make_complete(m)});
  const int p = n + m;
  std::vector<int> labels(static_cast<std::size_t>(p), 0);
  long long magic = 0;
  if (m == 2) {
    const int c = pair_choice.value_or(1);
    if (c < 1 || c > n + 1)
      throw std::invalid_argument("pair choice must lie in [1, n+1]");
    if (2 * c == n + 2)
      throw std::invalid_argument("pair choice equals its own complement");
    labels[n] = c;
    labels[n + 1] = n + 2 - c;
    labels[n - 1] = n + 2;
    magic = n + 2;
  } else {
    for (int i = 1; i <= m; ++i) labels[n - 1 + i] = i;
    labels[n - 1] = m * (m + 1) / 2;
    magic = m * (m + 1) / 2;
  }
  std::vector<int> interior(static_cast<std::size_t>(n - 1));
  std::iota(interior.begin(), interior.end(), 0);
  detail::fill_remaining_ascending(labels, interior);
  return detail::checked(std::move(g), Labeling{std::move(labels)}, n, magic);
}

// N-DM labeling of LP_{N,m} for N = m(m-1)/2 + t: brush carries 1..m and
// u_N carries m(m+1)/2, the least handle length at t = 0.
inline LabeledGraph label_long_brush_shifted(int m, int t) {
  if (m < 2) throw std::invalid_argument("needs m >= 2");
  if (t < 0) throw std::invalid_argument("needs t >= 0");
  const int n = m * (m - 1) / 2 + t;
  if (n < 3) throw std::invalid_argument("handle would be shorter than 3");
  Graph g = make_long_brush({n, make_complete(m)});
  std::vector<int> labels(static_cast<std::size_t>(n + m), 0);
  for (int i = 1; i <= m; ++i) labels[n - 1 + i] = i;
  labels[n - 1] = m * (m + 1) / 2;
  std::vector<int> interior(static_cast<std::size_t>(n - 1));
  std::iota(interior.begin(), interior.end(), 0);
  detail::fill_remaining_ascending(labels, interior);
  return detail::checked(std::move(g), Labeling{std::move(labels)}, n,
                         m * (m + 1) / 2);
}

// 2-DM labeling of LP_{1,m} with brush K_{s_1} u ... u K_{s_x}: the apex
// gets j and clique i gets part i of an equal-sum partition of
// J_{m+1} minus {j}. Magic is (x-1) times the common part sum.
inline LabeledGraph label_lp1m_2dm(const std::vector<int>& sizes,
                                   const std::pair<int, PartitionResult>& witness) {
  const std::size_t x = sizes.size();
  if (x < 2) throw std::invalid_argument("needs at least two cliques");
  int m = 0;
  for (std::size_t i = 0; i < x; ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("clique sizes must be positive");
    if (i > 0 && sizes[i] < sizes[i - 1])
      throw std::invalid_argument("clique sizes must be ascending");
    m += sizes[i];
  }
  if (sizes[0] + sizes[1] < 3)
    throw std::invalid_argument("two smallest cliques must cover >= 3 vertices");
  if (m < 3) throw std::invalid_argument("needs m >= 3");
  const int j = witness.first;
  if (j < 1 || j > m + 1)
    throw std::invalid_argument("apex label must lie in J_{m+1}");
  if (!is_valid_partition(witness.second, jn_without(m + 1, j), sizes))
    throw std::invalid_argument("witness is not an equal-sum partition of J_{m+1} minus the apex label");
  std::vector<Graph> cliques;
  cliques.reserve(x);
  for (int s : sizes) cliques.push_back(make_complete(s));
  Graph g = make_long_brush({1, disjoint_union(cliques)});
  std::vector<int> labels(static_cast<std::size_t>(1 + m), 0);
  labels[0] = j;
  std::size_t next = 1;
  for (const auto& part : witness.second.parts)
    for (int e : part) labels[next++] = e;
  const long long magic =
      static_cast<long long>(x - 1) * witness.second.common_sum;
  return detail::checked(std::move(g), Labeling{std::move(labels)}, 2, magic);
}

// Pendant-vertex obstructions to a 2-DML on a long brush.
enum class Non2dmReason { PENDANT_N2, PENDANT_N3 };

inline const char* to_string(Non2dmReason r) {
  return r == Non2dmReason::PENDANT_N2 ? "PENDANT-N2" : "PENDANT-N3";
}

inline std::optional<Non2dmReason> non_2dm_obstruction(const LongBrushSpec& spec) {
  spec.validate();
  int isolated = 0;
  for (int v = 0; v < spec.brush.vertex_count(); ++v)
    if (spec.brush.degree(v) == 0) ++isolated;
  if (spec.n == 2 && isolated >= 1) return Non2dmReason::PENDANT_N2;
  if (spec.n >= 3 && isolated >= 2) return Non2dmReason::PENDANT_N3;
  return std::nullopt;
}

}  // namespace kdm
