#pragma once

#include <optional>
#include <vector>

#include "kdm/graph.hpp"

namespace kdm {

// Vertex labeling f: labels[v] is f(v), expected to be a bijection onto {1..p}.
struct Labeling {
  std::vector<int> labels;

  bool operator==(const Labeling&) const = default;
};

inline bool is_bijection(const Labeling& f, int p) {
  if (static_cast<int>(f.labels.size()) != p) return false;
  std::vector<char> seen(static_cast<std::size_t>(p) + 1, 0);
  for (int x : f.labels) {
    if (x < 1 || x > p || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// How vertices with an empty k-boundary participate in verification.
// EXEMPT: they are skipped; the constant-sum requirement ranges over the
//         (required nonempty) set of vertices with nonempty boundary.
// ZERO:   their weight counts as 0 and must equal everyone else's.
enum class EmptyBoundaryPolicy { EXEMPT, ZERO };

struct BoundaryProfile {
  int k = 1;
  std::vector<std::vector<int>> boundary;
  std::vector<long long> weight;
  // Present iff at least one boundary is nonempty and all nonempty-boundary
  // vertices agree on one weight.
  std::optional<long long> magic_candidate;

  bool nonempty(int v) const { return !boundary.at(v).empty(); }
};

inline BoundaryProfile weights(const Graph& g, const Labeling& f, int k) {
  const int p = g.vertex_count();
  if (!is_bijection(f, p))
    throw std::invalid_argument("labeling is not a bijection onto {1..p}");
  BoundaryProfile prof;
  prof.k = k;
  prof.boundary = all_boundaries(g, k);
  prof.weight.assign(static_cast<std::size_t>(p), 0);
  std::optional<long long> magic;
  bool consistent = true;
  for (int v = 0; v < p; ++v) {
    long long w = 0;
    for (int x : prof.boundary[v]) w += f.labels[x];
    prof.weight[v] = w;
    if (!prof.boundary[v].empty()) {
      if (!magic)
        magic = w;
      else if (*magic != w)
        consistent = false;
    }
  }
  if (magic && consistent) prof.magic_candidate = magic;
  return prof;
}

struct VerifyResult {
  bool valid = false;
  std::optional<long long> magic;
};

inline VerifyResult verify_kdm(const Graph& g, const Labeling& f, int k,
                               EmptyBoundaryPolicy policy = EmptyBoundaryPolicy::EXEMPT) {
  BoundaryProfile prof = weights(g, f, k);
  if (policy == EmptyBoundaryPolicy::EXEMPT) {
    if (prof.magic_candidate) return {true, prof.magic_candidate};
    return {};
  }
  long long common = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (prof.weight[v] != prof.weight[0]) return {};
    common = prof.weight[v];
  }
  return {true, common};
}

enum class NecessaryFailure { NONE, DIAMETER_BELOW_K, IDENTICAL_BOUNDARIES };

struct NecessaryCheck {
  bool passes = false;
  NecessaryFailure reason = NecessaryFailure::NONE;
};

// A graph can only be k-DM if some component has diameter >= k and two
// vertices have distinct k-boundaries. The diameter clause is tested first.
inline NecessaryCheck necessary_condition(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  DiameterInfo info = diameter(g);
  bool deep = false;
  for (int d : info.per_component)
    if (d >= k) deep = true;
  if (!deep) return {false, NecessaryFailure::DIAMETER_BELOW_K};
  std::vector<std::vector<int>> bounds = all_boundaries(g, k);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (bounds[u] != bounds[v]) return {true, NecessaryFailure::NONE};
  return {false, NecessaryFailure::IDENTICAL_BOUNDARIES};
}

// Witness that g is not k-DM: boundaries of u and v differ by exactly one
// element each way (x only in u's, y only in v's), forcing f(x) = f(y).
struct ObstructionWitness {
  int u = 0, v = 0, x = 0, y = 0;

  bool operator==(const ObstructionWitness&) const = default;
};

inline std::optional<ObstructionWitness> lemma_obstruction(const Graph& g, int k) {
  std::vector<std::vector<int>> bounds = all_boundaries(g, k);
  const int p = g.vertex_count();
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      std::vector<int> only_u, only_v;
      std::set_difference(bounds[u].begin(), bounds[u].end(), bounds[v].begin(),
                          bounds[v].end(), std::back_inserter(only_u));
      if (only_u.size() != 1) continue;
      std::set_difference(bounds[v].begin(), bounds[v].end(), bounds[u].begin(),
                          bounds[u].end(), std::back_inserter(only_v));
      if (only_v.size() != 1) continue;
      return ObstructionWitness{u, v, only_u[0], only_v[0]};
    }
  }
  return std::nullopt;
}

}  // namespace kdm
