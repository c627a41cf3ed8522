#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kdm {

// Finite set of distinct positive integers, e.g. J_n = {1..n}.
using GroundSet = std::vector<int>;

inline GroundSet make_jn(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  GroundSet g(static_cast<std::size_t>(n));
  std::iota(g.begin(), g.end(), 1);
  return g;
}

inline GroundSet jn_without(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("j must lie in J_n");
  GroundSet g;
  g.reserve(static_cast<std::size_t>(n) - 1);
  for (int x = 1; x <= n; ++x)
    if (x != j) g.push_back(x);
  return g;
}

struct PartitionResult {
  std::vector<std::vector<int>> parts;
  long long common_sum = 0;
};

inline bool is_valid_partition(const PartitionResult& res, GroundSet ground,
                               const std::vector<int>& sizes) {
  if (res.parts.size() != sizes.size()) return false;
  std::vector<int> covered;
  for (std::size_t i = 0; i < res.parts.size(); ++i) {
    if (static_cast<int>(res.parts[i].size()) != sizes[i]) return false;
    long long sum = 0;
    for (int x : res.parts[i]) sum += x;
    if (sum != res.common_sum) return false;
    covered.insert(covered.end(), res.parts[i].begin(), res.parts[i].end());
  }
  std::sort(covered.begin(), covered.end());
  std::sort(ground.begin(), ground.end());
  return covered == ground;
}

namespace detail {

// Is there a subset of exactly `size` elements summing to `target`?
// Bitset DP over (count, sum); cheap enough for grounds of a few dozen.
inline bool subset_size_sum_exists(const std::vector<int>& elems, int size,
                                   long long target) {
  if (size < 0 || target < 0) return false;
  if (size > static_cast<int>(elems.size())) return false;
  long long total = std::accumulate(elems.begin(), elems.end(), 0ll);
  if (target > total) return false;
  if (size == 0) return target == 0;
  const std::size_t words = static_cast<std::size_t>(total / 64) + 1;
  std::vector<std::vector<std::uint64_t>> dp(
      static_cast<std::size_t>(size) + 1, std::vector<std::uint64_t>(words, 0));
  dp[0][0] = 1;
  for (int e : elems) {
    const std::size_t ws = static_cast<std::size_t>(e) / 64;
    const unsigned bs = static_cast<unsigned>(e) % 64;
    for (int c = size - 1; c >= 0; --c) {
      const auto& src = dp[c];
      auto& dst = dp[c + 1];
      for (std::size_t i = words; i-- > ws;) {
        std::uint64_t v = src[i - ws] << bs;
        if (bs != 0 && i > ws) v |= src[i - ws - 1] >> (64 - bs);
        dst[i] |= v;
      }
    }
  }
  return (dp[size][static_cast<std::size_t>(target) / 64] >>
          (static_cast<unsigned>(target) % 64)) & 1;
}

struct PartSearch {
  const std::vector<int>& elems;  // ascending
  std::vector<char> used;
  long long target = 0;

  explicit PartSearch(const std::vector<int>& e, long long t)
      : elems(e), used(e.size(), 0), target(t) {}

  long long min_sum_unused(int r) const {
    long long s = 0;
    for (std::size_t i = 0; i < elems.size() && r > 0; ++i)
      if (!used[i]) s += elems[i], --r;
    return s;
  }

  long long max_sum_unused_below(std::size_t hi, int r) const {
    long long s = 0;
    for (std::size_t i = hi; i-- > 0 && r > 0;)
      if (!used[i]) s += elems[i], --r;
    return s;
  }

  long long min_sum_unused_from(std::size_t lo, int r) const {
    long long s = 0;
    for (std::size_t i = lo; i < elems.size() && r > 0; ++i)
      if (!used[i]) s += elems[i], --r;
    return s;
  }

  long long max_sum_unused_above(std::size_t i, int r) const {
    long long s = 0;
    for (std::size_t j = elems.size(); j-- > i + 1 && r > 0;)
      if (!used[j]) s += elems[j], --r;
    return s;
  }
};

// Feasibility: parts filled largest size first, candidates descending.
// Parts of equal size are ordered by their largest element to avoid
// revisiting permutations of the same partition.
inline bool feasible_fill(PartSearch& s, const std::vector<int>& sizes_desc,
                          std::size_t part, int need, long long rem,
                          std::size_t hi, std::size_t first);

inline bool feasible_next_part(PartSearch& s, const std::vector<int>& sizes_desc,
                               std::size_t part, std::size_t prev_first,
                               int prev_size) {
  if (part == sizes_desc.size()) return true;
  std::size_t hi = s.elems.size();
  if (sizes_desc[part] == prev_size) hi = prev_first;
  return feasible_fill(s, sizes_desc, part, sizes_desc[part], s.target, hi,
                       s.elems.size());
}

inline bool feasible_fill(PartSearch& s, const std::vector<int>& sizes_desc,
                          std::size_t part, int need, long long rem,
                          std::size_t hi, std::size_t first) {
  if (need == 0) {
    if (rem != 0) return false;
    return feasible_next_part(s, sizes_desc, part + 1, first, sizes_desc[part]);
  }
  if (s.min_sum_unused(need) > rem) return false;
  for (std::size_t i = hi; i-- > 0;) {
    if (s.used[i]) continue;
    const int e = s.elems[i];
    if (e > rem) continue;
    if (e + s.max_sum_unused_below(i, need - 1) < rem) break;
    s.used[i] = 1;
    std::size_t part_first = (need == sizes_desc[part]) ? i : first;
    if (feasible_fill(s, sizes_desc, part, need - 1, rem - e, i, part_first))
      return true;
    s.used[i] = 0;
  }
  return false;
}

inline bool partition_feasible(const std::vector<int>& elems_asc,
                               const std::vector<int>& sizes,
                               long long target) {
  if (sizes.size() == 1) return true;  // single part is the whole ground
  if (sizes.size() == 2)
    return subset_size_sum_exists(elems_asc, std::min(sizes[0], sizes[1]), target);
  std::vector<int> sizes_desc = sizes;
  std::sort(sizes_desc.begin(), sizes_desc.end(), std::greater<int>());
  PartSearch s(elems_asc, target);
  return feasible_fill(s, sizes_desc, 0, sizes_desc[0], target,
                       elems_asc.size(), elems_asc.size());
}

// Lexicographically smallest witness: parts in request order, each part
// ascending, concatenation compared elementwise. Ascending DFS finds it
// first. The final part is forced, so it is filled without search.
inline bool witness_fill(PartSearch& s, const std::vector<int>& sizes,
                         std::size_t part, int need, long long rem,
                         std::size_t lo, std::vector<std::vector<int>>& parts) {
  if (need == 0) {
    if (rem != 0) return false;
    std::size_t next = part + 1;
    if (next == sizes.size()) return true;
    if (next + 1 == sizes.size()) {
      std::vector<int>& last = parts[next];
      long long sum = 0;
      for (std::size_t i = 0; i < s.elems.size(); ++i)
        if (!s.used[i]) last.push_back(s.elems[i]), sum += s.elems[i];
      if (static_cast<int>(last.size()) == sizes[next] && sum == s.target)
        return true;
      last.clear();
      return false;
    }
    return witness_fill(s, sizes, next, sizes[next], s.target, 0, parts);
  }
  for (std::size_t i = lo; i < s.elems.size(); ++i) {
    if (s.used[i]) continue;
    const int e = s.elems[i];
    if (e > rem) break;
    if (e + s.min_sum_unused_from(i + 1, need - 1) > rem) break;
    if (e + s.max_sum_unused_above(i, need - 1) < rem) continue;
    s.used[i] = 1;
    parts[part].push_back(e);
    if (witness_fill(s, sizes, part, need - 1, rem - e, i + 1, parts)) return true;
    parts[part].pop_back();
    s.used[i] = 0;
  }
  return false;
}

inline void validate_ground_and_sizes(GroundSet& ground,
                                      const std::vector<int>& sizes) {
  std::sort(ground.begin(), ground.end());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (ground[i] < 1) throw std::invalid_argument("ground elements must be positive");
    if (i > 0 && ground[i] == ground[i - 1])
      throw std::invalid_argument("ground elements must be distinct");
  }
  long long total_size = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
    total_size += s;
  }
  if (total_size != static_cast<long long>(ground.size()))
    throw std::invalid_argument("part sizes must sum to the ground size");
}

}  // namespace detail

// Existence only; skips witness extraction.
inline bool equal_sum_partition_exists(GroundSet ground, std::vector<int> sizes) {
  detail::validate_ground_and_sizes(ground, sizes);
  if (sizes.empty()) return true;
  long long total = std::accumulate(ground.begin(), ground.end(), 0ll);
  auto x = static_cast<long long>(sizes.size());
  if (total % x != 0) return false;
  return detail::partition_feasible(ground, sizes, total / x);
}

inline std::optional<PartitionResult> equal_sum_partition(GroundSet ground,
                                                          std::vector<int> sizes) {
  detail::validate_ground_and_sizes(ground, sizes);
  if (sizes.empty()) return PartitionResult{};
  long long total = std::accumulate(ground.begin(), ground.end(), 0ll);
  auto x = static_cast<long long>(sizes.size());
  if (total % x != 0) return std::nullopt;
  const long long target = total / x;
  if (!detail::partition_feasible(ground, sizes, target)) return std::nullopt;
  detail::PartSearch s(ground, target);
  PartitionResult res;
  res.common_sum = target;
  res.parts.assign(sizes.size(), {});
  bool ok = detail::witness_fill(s, sizes, 0, sizes[0], target, 0, res.parts);
  if (!ok || !is_valid_partition(res, ground, sizes))
    throw std::logic_error("partition witness construction failed");
  return res;
}

inline bool bipartition_exists(int n) {
  if (n < 3) throw std::invalid_argument("bipartition criterion needs n >= 3");
  const int r = n % 4;
  return r == 0 || r == 3;
}

// J_n split into two equal-sum halves via the pair scheme {i, n+1-i}
// (4m case) or {i, n-i} plus the singleton {n} (4m+3 case).
inline std::optional<PartitionResult> bipartition_construct(int n) {
  if (n < 3) throw std::invalid_argument("bipartition construction needs n >= 3");
  if (!bipartition_exists(n)) return std::nullopt;
  PartitionResult res;
  std::vector<int> s1, s2;
  if (n % 4 == 0) {
    const int m = n / 4;
    for (int i = 1; i <= 2 * m; ++i) {
      auto& side = (i <= m) ? s1 : s2;
      side.push_back(i);
      side.push_back(n + 1 - i);
    }
    res.common_sum = static_cast<long long>(m) * (4 * m + 1);
  } else {
    const int m = (n - 3) / 4;
    for (int i = 1; i <= 2 * m + 1; ++i) {
      auto& side = (i <= m + 1) ? s1 : s2;
      side.push_back(i);
      side.push_back(n - i);
    }
    s2.push_back(n);
    res.common_sum = static_cast<long long>(m + 1) * (4 * m + 3);
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  res.parts = {std::move(s1), std::move(s2)};
  if (!is_valid_partition(res, make_jn(n),
                          {static_cast<int>(res.parts[0].size()),
                           static_cast<int>(res.parts[1].size())}))
    throw std::logic_error("bipartition construction failed");
  return res;
}

// All apex labels j in J_{m+1} for which J_{m+1} minus {j} splits into
// equal-sum parts of the given sizes, each with one witness, ascending j.
inline std::vector<std::pair<int, PartitionResult>> feasible_apex_labels(
    int m, const std::vector<int>& sizes) {
  if (m < 3) throw std::invalid_argument("apex label search needs m >= 3");
  long long total_size = 0;
  for (int s : sizes) total_size += s;
  if (total_size != m)
    throw std::invalid_argument("part sizes must sum to m");
  std::vector<std::pair<int, PartitionResult>> out;
  const long long total = static_cast<long long>(m + 1) * (m + 2) / 2;
  const auto x = static_cast<long long>(sizes.size());
  for (int j = 1; j <= m + 1; ++j) {
    if ((total - j) % x != 0) continue;
    auto res = equal_sum_partition(jn_without(m + 1, j), sizes);
    if (res) out.emplace_back(j, std::move(*res));
  }
  return out;
}

inline bool any_feasible_apex_label(int m, const std::vector<int>& sizes) {
  if (m < 3) throw std::invalid_argument("apex label search needs m >= 3");
  long long total_size = 0;
  for (int s : sizes) total_size += s;
  if (total_size != m)
    throw std::invalid_argument("part sizes must sum to m");
  const long long total = static_cast<long long>(m + 1) * (m + 2) / 2;
  const auto x = static_cast<long long>(sizes.size());
  for (int j = 1; j <= m + 1; ++j) {
    if ((total - j) % x != 0) continue;
    if (equal_sum_partition_exists(jn_without(m + 1, j), sizes)) return true;
  }
  return false;
}

struct InequalityCheck {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

// lhs = sum of the m1 largest elements of J_m, rhs = sum of the m-m1
// smallest; a necessary condition for the two-clique apex construction.
inline InequalityCheck annexure_inequality(int m1, int m) {
  if (m1 < 1) throw std::invalid_argument("m1 must be >= 1");
  if (m < 2 * m1) throw std::invalid_argument("m must be >= 2*m1");
  InequalityCheck c;
  c.lhs = static_cast<long long>(m1) * m -
          static_cast<long long>(m1) * (m1 - 1) / 2;
  c.rhs = static_cast<long long>(m - m1) * (m - m1 + 1) / 2;
  c.holds = c.lhs >= c.rhs;
  return c;
}

struct Table1Range {
  int m_min = 0;
  int m_max = 0;
};

inline Table1Range table1_range(int m1) {
  if (m1 < 1 || m1 > 22) throw std::invalid_argument("m1 must lie in 1..22");
  if (m1 == 1) return {3, 3};
  if (m1 == 2) return {4, 7};
  if (m1 == 3) return {6, 10};
  Table1Range r{2 * m1, 2 * m1};
  int m = 2 * m1;
  while (annexure_inequality(m1, m).holds) r.m_max = m++;
  return r;
}

}  // namespace kdm
