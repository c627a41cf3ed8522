#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kdm/bigint.hpp"
#include "kdm/graph.hpp"
#include "kdm/labeling.hpp"

namespace kdm {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive search refuses graphs larger than this; KDM_VERTEX_CAP overrides.
inline int default_vertex_cap() {
  if (const char* env = std::getenv("KDM_VERTEX_CAP")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

namespace detail {

// Backtracking over the vertices with nonempty k-boundary. Only those
// vertices are constrained: boundary membership is symmetric, so a vertex
// with an empty boundary appears in nobody's boundary and its label is free.
// Vertices are ordered by descending boundary size; the magic constant is
// fixed by the first fully labeled boundary and every later completed
// boundary must match it exactly.
struct BoundarySearch {
  int p = 0;
  std::vector<int> order;                  // constrained vertices
  std::vector<std::vector<int>> watchers;  // by vertex: constrained boundary members
  std::vector<int> boundary_size;
  std::vector<int> label_of;     // by vertex, 0 = unassigned
  std::vector<char> label_used;  // labels 1..p
  std::vector<long long> partial;
  std::vector<int> missing;
  long long magic = -1;
  bool count_mode = false;
  unsigned long long count = 0;
  std::vector<int> first_found;

  BoundarySearch(const Graph& g, const std::vector<std::vector<int>>& bounds)
      : p(g.vertex_count()),
        boundary_size(static_cast<std::size_t>(p), 0),
        label_of(static_cast<std::size_t>(p), 0),
        label_used(static_cast<std::size_t>(p) + 1, 0),
        partial(static_cast<std::size_t>(p), 0),
        missing(static_cast<std::size_t>(p), 0) {
    watchers.assign(static_cast<std::size_t>(p), {});
    for (int v = 0; v < p; ++v) {
      boundary_size[v] = static_cast<int>(bounds[v].size());
      missing[v] = boundary_size[v];
      if (!bounds[v].empty()) order.push_back(v);
      watchers[v] = bounds[v];  // symmetric: v's boundary = who watches v
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (boundary_size[a] != boundary_size[b])
        return boundary_size[a] > boundary_size[b];
      return a < b;
    });
  }

  long long min_labels(int r) const {
    long long s = 0;
    for (int l = 1; l <= p && r > 0; ++l)
      if (!label_used[l]) s += l, --r;
    return s;
  }

  long long max_labels(int r) const {
    long long s = 0;
    for (int l = p; l >= 1 && r > 0; --l)
      if (!label_used[l]) s += l, --r;
    return s;
  }

  bool feasible_after(int v) const {
    if (missing[v] == 0) return partial[v] == magic;
    if (magic < 0) return true;
    if (partial[v] + min_labels(missing[v]) > magic) return false;
    if (partial[v] + max_labels(missing[v]) < magic) return false;
    return true;
  }

  // Returns true to stop the search (a witness was found in find mode).
  bool run(std::size_t idx) {
    if (idx == order.size()) {
      if (count_mode) {
        ++count;
        return false;
      }
      first_found.assign(label_of.begin(), label_of.end());
      return true;
    }
    const int v = order[idx];
    for (int l = 1; l <= p; ++l) {
      if (label_used[l]) continue;
      label_used[l] = 1;
      label_of[v] = l;
      long long saved_magic = magic;
      bool ok = true;
      std::size_t touched = 0;
      for (int w : watchers[v]) {
        partial[w] += l;
        --missing[w];
        ++touched;
        if (missing[w] == 0 && magic < 0) magic = partial[w];
        if (!feasible_after(w)) {
          ok = false;
          break;
        }
      }
      if (ok && run(idx + 1)) return true;
      for (std::size_t t = 0; t < touched; ++t) {
        const int w = watchers[v][t];
        partial[w] -= l;
        ++missing[w];
      }
      magic = saved_magic;
      label_used[l] = 0;
      label_of[v] = 0;
    }
    return false;
  }
};

inline void cap_check(const Graph& g, std::optional<int> cap) {
  const int limit = cap.value_or(default_vertex_cap());
  if (g.vertex_count() > limit)
    throw ResourceLimitError("graph exceeds the exhaustive-search vertex cap (" +
                             std::to_string(limit) + ")");
}

inline Labeling extend_to_bijection(const std::vector<int>& partial_labels) {
  const int p = static_cast<int>(partial_labels.size());
  Labeling f{partial_labels};
  std::vector<char> taken(static_cast<std::size_t>(p) + 1, 0);
  for (int l : f.labels)
    if (l > 0) taken[l] = 1;
  int next = 1;
  for (int& l : f.labels) {
    if (l != 0) continue;
    while (taken[next]) ++next;
    l = next;
    taken[next] = 1;
  }
  return f;
}

}  // namespace detail

inline std::optional<Labeling> find_kdml(
    const Graph& g, int k,
    EmptyBoundaryPolicy policy = EmptyBoundaryPolicy::EXEMPT,
    std::optional<int> cap = std::nullopt) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  detail::cap_check(g, cap);
  const int p = g.vertex_count();
  auto bounds = all_boundaries(g, k);
  int constrained = 0;
  for (const auto& b : bounds)
    if (!b.empty()) ++constrained;
  if (policy == EmptyBoundaryPolicy::EXEMPT) {
    if (constrained == 0) return std::nullopt;
  } else {
    if (constrained == 0)
      return detail::extend_to_bijection(std::vector<int>(p, 0));
    if (constrained < p) return std::nullopt;
  }
  detail::BoundarySearch search(g, bounds);
  if (!search.run(0)) return std::nullopt;
  return detail::extend_to_bijection(search.first_found);
}

inline BigUint count_kdml(const Graph& g, int k,
                          EmptyBoundaryPolicy policy = EmptyBoundaryPolicy::EXEMPT,
                          std::optional<int> cap = std::nullopt) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  detail::cap_check(g, cap);
  const int p = g.vertex_count();
  auto bounds = all_boundaries(g, k);
  int constrained = 0;
  for (const auto& b : bounds)
    if (!b.empty()) ++constrained;
  if (policy == EmptyBoundaryPolicy::EXEMPT) {
    if (constrained == 0) return BigUint(0);
  } else {
    if (constrained == 0) return BigUint::factorial(static_cast<unsigned>(p));
    if (constrained < p) return BigUint(0);
  }
  detail::BoundarySearch search(g, bounds);
  search.count_mode = true;
  search.run(0);
  return BigUint(search.count) *
         BigUint::factorial(static_cast<unsigned>(p - constrained));
}

enum class Family { PATH, CYCLE, UNION_PATHS, UNION_CYCLES, LONG_BRUSH };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::PATH: return "path";
    case Family::CYCLE: return "cycle";
    case Family::UNION_PATHS: return "union-paths";
    case Family::UNION_CYCLES: return "union-cycles";
    case Family::LONG_BRUSH: return "long-brush";
  }
  return "?";
}

struct SweepRange {
  int lo = 1;
  int hi = 1;
};

struct SweepRow {
  Family family = Family::PATH;
  int n = 0;
  int m = 0;
  int k = 0;
  bool found = false;
  bool predicted = false;
  bool agree = false;
};

namespace detail {

inline Graph sweep_instance(Family f, int n, int m) {
  switch (f) {
    case Family::PATH:
      return make_path(n);
    case Family::CYCLE:
      return make_cycle(n);
    case Family::UNION_PATHS:
      return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(m),
                                               make_path(n)));
    case Family::UNION_CYCLES:
      return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(m),
                                               make_cycle(n)));
    case Family::LONG_BRUSH:
      if (n < 3 || m < 2)
        throw std::invalid_argument("long-brush sweep needs n >= 3, m >= 2");
      return make_long_brush({n, make_complete(m)});
  }
  throw std::invalid_argument("unknown family");
}

inline bool sweep_prediction(Family f, int n, int m, int k) {
  switch (f) {
    case Family::PATH:
      return n == 3 && k == 1;
    case Family::UNION_PATHS:
      return m == 1 && n == 3 && k == 1;
    case Family::CYCLE:
      return n == 4 * k;
    case Family::UNION_CYCLES:
      return n == 4 * k;
    case Family::LONG_BRUSH:
      return k == n && static_cast<long long>(m) * (m - 1) <= 2ll * n;
  }
  return false;
}

}  // namespace detail

// Sweeps a graph family over parameter ranges, comparing the exhaustive
// verdict with the characterization's prediction. For PATH and CYCLE the m
// range is ignored; for the union families m counts identical copies.
inline std::vector<SweepRow> classify_family(
    Family f, SweepRange n_range, SweepRange k_range,
    SweepRange m_range = {1, 1},
    EmptyBoundaryPolicy policy = EmptyBoundaryPolicy::EXEMPT, int jobs = 1,
    std::optional<int> cap = std::nullopt) {
  if (f == Family::PATH || f == Family::CYCLE) m_range = {1, 1};
  std::vector<SweepRow> rows;
  for (int n = n_range.lo; n <= n_range.hi; ++n)
    for (int m = m_range.lo; m <= m_range.hi; ++m)
      for (int k = k_range.lo; k <= k_range.hi; ++k)
        rows.push_back({f, n, m, k, false,
                        detail::sweep_prediction(f, n, m, k), false});
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < rows.size(); i += stride) {
      SweepRow& row = rows[i];
      Graph g = detail::sweep_instance(f, row.n, row.m);
      row.found = find_kdml(g, row.k, policy, cap).has_value();
      row.agree = row.found == row.predicted;
    }
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    const auto stride = static_cast<std::size_t>(jobs);
    for (std::size_t t = 0; t < stride; ++t)
      pool.emplace_back(work, t, stride);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace kdm
