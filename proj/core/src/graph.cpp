#include "listcrit/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace listcrit {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative order");
  adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph: vertex out of range");
    if (u == v) throw std::invalid_argument("graph: loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::invalid_argument("graph: parallel edge");
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (n_ <= 64) {
    mask_.assign(n_, 0);
    for (auto [u, v] : edges_) {
      mask_[u] |= uint64_t(1) << v;
      mask_[v] |= uint64_t(1) << u;
    }
  }
}

bool Graph::adjacent(int u, int v) const {
  if (has_masks()) return (mask_[u] >> v) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = (v == 0) ? degree(v) : std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : adj_[v])
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_ || pos[v] >= 0) throw std::invalid_argument("induced: bad vertex list");
    pos[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges_)
    if (pos[u] >= 0 && pos[v] >= 0) es.push_back({pos[u], pos[v]});
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

Graph Graph::without_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  bool found = false;
  for (auto e : edges_) {
    if (e == std::make_pair(u, v)) {
      found = true;
      continue;
    }
    es.push_back(e);
  }
  if (!found) throw std::invalid_argument("without_edge: not an edge");
  return Graph(n_, std::move(es));
}

std::vector<int> DegreePartition::all_high() const {
  std::vector<int> out = mid;
  out.insert(out.end(), high.begin(), high.end());
  std::sort(out.begin(), out.end());
  return out;
}

DegreePartition degree_partition(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("degree_partition: k >= 3 required");
  DegreePartition p;
  p.k = k;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == k - 1)
      p.low.push_back(v);
    else if (d == k)
      p.mid.push_back(v);
    else if (d >= k + 1)
      p.high.push_back(v);
    else
      p.deficient.push_back(v);
  }
  return p;
}

bool BlockDecomposition::is_cut(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::endblocks() const {
  std::vector<int> out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    int cuts = 0;
    for (int v : blocks[i].vertices)
      if (is_cut(v)) ++cuts;
    if (cuts <= 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

BlockKind classify_block(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
  size_t nb = vertices.size(), mb = edges.size();
  if (mb == nb * (nb - 1) / 2) return BlockKind::complete;  // includes K2 bridges
  if (nb >= 3 && nb % 2 == 1 && mb == nb) {
    std::vector<int> deg;
    std::vector<int> sorted_v = vertices;
    auto idx = [&](int v) {
      return std::lower_bound(sorted_v.begin(), sorted_v.end(), v) - sorted_v.begin();
    };
    deg.assign(nb, 0);
    for (auto [u, v] : edges) {
      deg[idx(u)]++;
      deg[idx(v)]++;
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) return BlockKind::odd_cycle;
  }
  return BlockKind::other;
}

}  // namespace

BlockDecomposition block_decompose(const Graph& g) {
  // Hopcroft–Tarjan lowpoint DFS with an explicit edge stack.
  int n = g.order();
  BlockDecomposition out;
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  std::function<void(int)> dfs = [&](int root) {
    // Iterative DFS to keep stack depth independent of graph shape.
    struct Frame {
      int v;
      size_t next_child = 0;
      int tree_children = 0;
    };
    std::vector<Frame> stack;
    num[root] = low[root] = timer++;
    stack.push_back({root});
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      if (f.next_child < g.neighbors(v).size()) {
        int u = g.neighbors(v)[f.next_child++];
        if (u == parent[v]) continue;
        if (num[u] == -1) {
          parent[u] = v;
          edge_stack.push_back({v, u});
          num[u] = low[u] = timer++;
          f.tree_children++;
          stack.push_back({u});
        } else if (num[u] < num[v]) {
          edge_stack.push_back({v, u});
          low[v] = std::min(low[v], num[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= num[p]) {
            // p closes a block; pop edges down to (p, v)
            Block b;
            std::set<int> verts;
            while (!edge_stack.empty()) {
              auto e = edge_stack.back();
              edge_stack.pop_back();
              verts.insert(e.first);
              verts.insert(e.second);
              b.edges.push_back(e.first < e.second ? e : std::make_pair(e.second, e.first));
              if (e == std::make_pair(p, v)) break;
            }
            b.vertices.assign(verts.begin(), verts.end());
            std::sort(b.edges.begin(), b.edges.end());
            b.kind = classify_block(b.vertices, b.edges);
            out.blocks.push_back(std::move(b));
          }
        }
      }
    }
  };

  for (int v = 0; v < n; ++v)
    if (num[v] == -1) dfs(v);

  // A vertex is a cut vertex exactly when it lies in two or more blocks.
  std::vector<int> block_count(n, 0);
  for (const auto& b : out.blocks)
    for (int v : b.vertices) block_count[v]++;
  for (int v = 0; v < n; ++v)
    if (block_count[v] >= 2) out.cut_vertices.push_back(v);
  return out;
}

namespace {

uint64_t neighbors_in(const Graph& g, int v, uint64_t allowed) {
  return g.adjacency_mask(v) & allowed;
}

// Branch and bound over bitmasks: max weight independent set, integer weights.
struct MisSolver {
  const Graph& g;
  const std::vector<int>& weight;
  int best = 0;

  void run(uint64_t candidates, int current) {
    int bound = current;
    for (uint64_t rest = candidates; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      bound += weight[v];
    }
    if (bound <= best) return;
    if (!candidates) {
      best = std::max(best, current);
      return;
    }
    // pivot on a maximum-degree candidate to shrink the branching factor
    int pivot = -1, pd = -1;
    for (uint64_t rest = candidates; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(neighbors_in(g, v, candidates));
      if (d > pd) {
        pd = d;
        pivot = v;
      }
    }
    uint64_t bit = uint64_t(1) << pivot;
    run(candidates & ~bit & ~g.adjacency_mask(pivot), current + weight[pivot]);
    run(candidates & ~bit, current);
  }
};

}  // namespace

int independence_number(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.independence_max_n)
    throw GuardError("independence_number: graph larger than guard (" +
                     std::to_string(limits.independence_max_n) + ")");
  if (g.order() == 0) return 0;
  std::vector<int> ones(g.order(), 1);
  MisSolver s{g, ones};
  uint64_t all = (g.order() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.order()) - 1);
  s.run(all, 0);
  return s.best;
}

int mic(const Graph& g, const std::optional<std::vector<int>>& restrict_to, const SearchLimits& limits) {
  if (g.order() > limits.independence_max_n)
    throw GuardError("mic: graph larger than guard (" + std::to_string(limits.independence_max_n) + ")");
  if (g.order() == 0) return 0;
  // For independent I there are no internal edges, so ||I, V\I|| = sum of degrees over I.
  std::vector<int> w(g.order());
  for (int v = 0; v < g.order(); ++v) w[v] = g.degree(v);
  uint64_t candidates;
  if (restrict_to) {
    candidates = 0;
    for (int v : *restrict_to) {
      if (v < 0 || v >= g.order()) throw std::invalid_argument("mic: restrict vertex out of range");
      candidates |= uint64_t(1) << v;
    }
  } else {
    candidates = (g.order() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.order()) - 1);
  }
  MisSolver s{g, w};
  s.run(candidates, 0);
  return s.best;
}

namespace {

bool color_search(const Graph& g, int colors, const std::vector<int>& order, size_t i,
                  std::vector<int>& assigned, int used) {
  if (i == order.size()) return true;
  int v = order[i];
  int limit = std::min(colors, used + 1);  // new colors introduced in canonical order
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (assigned[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    assigned[v] = c;
    if (color_search(g, colors, order, i + 1, assigned, std::max(used, c + 1))) return true;
    assigned[v] = -1;
  }
  return false;
}

}  // namespace

bool is_colorable(const Graph& g, int colors, const SearchLimits& limits) {
  if (g.order() > limits.chromatic_max_n)
    throw GuardError("is_colorable: graph larger than guard (" + std::to_string(limits.chromatic_max_n) +
                     ")");
  if (g.order() == 0) return true;
  if (colors <= 0) return false;
  // Degeneracy-style order: repeatedly take a max-degree vertex first.
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> assigned(g.order(), -1);
  return color_search(g, colors, order, 0, assigned, 0);
}

int chromatic_number(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.chromatic_max_n)
    throw GuardError("chromatic_number: graph larger than guard (" +
                     std::to_string(limits.chromatic_max_n) + ")");
  if (g.order() == 0) return 0;
  for (int t = 1; t <= g.order(); ++t)
    if (is_colorable(g, t, limits)) return t;
  return g.order();
}

bool is_k_critical(const Graph& g, int k, const SearchLimits& limits) {
  if (chromatic_number(g, limits) != k) return false;
  for (auto [u, v] : g.edges())
    if (chromatic_number(g.without_edge(u, v), limits) >= k) return false;
  return true;
}

namespace {

void cliques_of_order(const Graph& g, int t, std::vector<int>& clique, uint64_t candidates,
                      std::vector<bool>& in_some, int& found) {
  if (static_cast<int>(clique.size()) == t) {
    for (int v : clique) in_some[v] = true;
    ++found;
    return;
  }
  int need = t - static_cast<int>(clique.size());
  if (std::popcount(candidates) < need) return;
  uint64_t rest = candidates;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    clique.push_back(v);
    cliques_of_order(g, t, clique, rest & g.adjacency_mask(v), in_some, found);
    clique.pop_back();
  }
}

}  // namespace

std::vector<int> clique_vertices(const Graph& g, int t, const SearchLimits& limits) {
  if (t < 1) throw std::invalid_argument("clique_vertices: t >= 1 required");
  if (g.order() > limits.independence_max_n)
    throw GuardError("clique_vertices: graph larger than guard (" +
                     std::to_string(limits.independence_max_n) + ")");
  std::vector<bool> in_some(g.order(), false);
  if (t == 1) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  if (g.order() == 0) return {};
  std::vector<int> clique;
  int found = 0;
  uint64_t all = (g.order() >= 64) ? ~uint64_t(0) : ((uint64_t(1) << g.order()) - 1);
  cliques_of_order(g, t, clique, all, in_some, found);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (in_some[v]) out.push_back(v);
  return out;
}

}  // namespace listcrit
