#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdm {

// Distance value for vertices in different components.
constexpr int kUnreachable = -1;

// Finite simple undirected graph on dense vertex ids 0..p-1.
// Adjacency lists are kept sorted; parallel edges and self-loops are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int p) : adj_(checked_size(p)) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<int>& neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  long long edge_count() const {
    long long twice = 0;
    for (const auto& nb : adj_) twice += static_cast<long long>(nb.size());
    return twice / 2;
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t checked_size(int p) {
    if (p < 0) throw std::invalid_argument("vertex count must be nonnegative");
    return static_cast<std::size_t>(p);
  }

  void require_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex id out of range");
  }

  static void insert_sorted(std::vector<int>& vec, int x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it == vec.end() || *it != x) vec.insert(it, x);
  }

  std::vector<std::vector<int>> adj_;
};

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph make_complete(int n) {
  if (n < 0) throw std::invalid_argument("complete graph needs n >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph make_empty(int n) { return Graph(n); }

// Vertex ids of part j are offset by the total size of parts 0..j-1.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const Graph& part : parts) total += part.vertex_count();
  Graph g(total);
  int base = 0;
  for (const Graph& part : parts) {
    for (auto [u, v] : part.edges()) g.add_edge(base + u, base + v);
    base += part.vertex_count();
  }
  return g;
}

// Adds a new vertex with id p adjacent to every existing vertex.
inline Graph join_apex(const Graph& g) {
  const int p = g.vertex_count();
  Graph out(p + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < p; ++v) out.add_edge(p, v);
  return out;
}

// Long brush LP_{n,m}: handle path u_1..u_n, brush vertices v_1..v_m all
// adjacent to u_1, plus an arbitrary induced subgraph on the v's.
// Id convention: u_i -> i-1, v_j -> n-1+j.
struct LongBrushSpec {
  int n = 1;
  Graph brush;

  int m() const { return brush.vertex_count(); }

  void validate() const {
    if (n < 1) throw std::invalid_argument("long brush needs n >= 1");
    if (m() < 1) throw std::invalid_argument("long brush needs m >= 1");
    if (n + m() < 3) throw std::invalid_argument("long brush needs n + m >= 3");
  }
};

inline Graph make_long_brush(const LongBrushSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int m = spec.m();
  Graph g(n + m);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  for (int j = 0; j < m; ++j) g.add_edge(0, n + j);
  for (auto [u, v] : spec.brush.edges()) g.add_edge(n + u, n + v);
  return g;
}

// Display names u1..un, v1..vm in id order, for DOT output.
inline std::vector<std::string> long_brush_vertex_names(int n, int m) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n + m));
  for (int i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
  for (int j = 1; j <= m; ++j) names.push_back("v" + std::to_string(j));
  return names;
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.vertex_count())
    throw std::out_of_range("vertex id out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// All-pairs distances; kUnreachable marks cross-component pairs.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) {
    dist_.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) dist_.push_back(bfs_distances(g, v));
  }

  int size() const { return static_cast<int>(dist_.size()); }

  int at(int u, int v) const { return dist_.at(u).at(v); }

  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

 private:
  std::vector<std::vector<int>> dist_;
};

// Vertices at distance exactly k from u, sorted ascending.
inline std::vector<int> boundary_neighborhood(const Graph& g, int u, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<int> dist = bfs_distances(g, u);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == k) out.push_back(v);
  return out;
}

inline std::vector<std::vector<int>> all_boundaries(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int u = 0; u < g.vertex_count(); ++u)
    out.push_back(boundary_neighborhood(g, u, k));
  return out;
}

// Connected components ordered by their smallest vertex id.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

struct DiameterInfo {
  int overall = 0;
  std::vector<int> per_component;  // ordered like components()
};

inline DiameterInfo diameter(const Graph& g) {
  DiameterInfo info;
  for (const auto& comp : components(g)) {
    int d = 0;
    for (int v : comp) {
      std::vector<int> dist = bfs_distances(g, v);
      for (int w : comp) d = std::max(d, dist[w]);
    }
    info.per_component.push_back(d);
    info.overall = std::max(info.overall, d);
  }
  return info;
}

// True iff g is connected and has no cut vertex.
inline bool is_block(const Graph& g) {
  const int p = g.vertex_count();
  if (p < 2) throw std::invalid_argument("block test needs p >= 2");
  if (!is_connected(g)) return false;
  std::vector<int> disc(static_cast<std::size_t>(p), -1);
  std::vector<int> low(static_cast<std::size_t>(p), 0);
  int timer = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= disc[v]) cut = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) cut = true;
  };
  dfs(0, -1);
  return !cut;
}

// Degree-1 vertices, sorted ascending.
inline std::vector<int> pendant_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

// Erdos-Renyi style sample: p uniform in [p_min, p_max], then each edge kept
// with a per-graph probability drawn from [0.1, 0.9].
inline Graph random_graph(std::mt19937& rng, int p_min, int p_max) {
  if (p_min < 0 || p_max < p_min)
    throw std::invalid_argument("bad vertex count range");
  std::uniform_int_distribution<int> pick_p(p_min, p_max);
  std::uniform_real_distribution<double> pick_prob(0.1, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int p = pick_p(rng);
  const double density = pick_prob(rng);
  Graph g(p);
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      if (coin(rng) < density) g.add_edge(u, v);
  return g;
}

}  // namespace kdm
