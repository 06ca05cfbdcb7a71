#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracles {

using listcrit::LinearProgram;
using listcrit::LpRow;
using listcrit::Rational;
using listcrit::Relation;

namespace {

bool independent(const Graph& g, uint32_t s) {
  for (auto [u, v] : g.edges())
    if (((s >> u) & 1) && ((s >> v) & 1)) return false;
  return true;
}

}  // namespace

int brute_alpha(const Graph& g) {
  int best = 0;
  for (uint32_t s = 0; s < (uint32_t(1) << g.order()); ++s)
    if (independent(g, s)) best = std::max(best, std::popcount(s));
  return best;
}

int brute_mic(const Graph& g, const std::vector<int>* restrict_to) {
  uint32_t allowed = (uint32_t(1) << g.order()) - 1;
  if (restrict_to) {
    allowed = 0;
    for (int v : *restrict_to) allowed |= uint32_t(1) << v;
  }
  int best = 0;
  for (uint32_t s = 0; s < (uint32_t(1) << g.order()); ++s) {
    if ((s & ~allowed) || !independent(g, s)) continue;
    int boundary = 0;
    for (auto [u, v] : g.edges()) boundary += ((s >> u) & 1) != ((s >> v) & 1);
    best = std::max(best, boundary);
  }
  return best;
}

namespace {

bool colorable_with(const Graph& g, int t, int v, std::vector<int>& col) {
  if (v == g.order()) return true;
  for (int c = 0; c < t; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && col[u] == c) ok = false;
    if (!ok) continue;
    col[v] = c;
    if (colorable_with(g, t, v + 1, col)) return true;
  }
  col[v] = -1;
  return false;
}

}  // namespace

int brute_chromatic(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int t = 1; t <= g.order(); ++t) {
    std::vector<int> col(g.order(), -1);
    if (colorable_with(g, t, 0, col)) return t;
  }
  return g.order();
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, int v) {
  if (v == a.order()) return true;
  std::vector<bool> used(b.order(), false);
  for (int i = 0; i < v; ++i) used[map[i]] = true;
  for (int w = 0; w < b.order(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    if (extend_iso(a, b, map, v + 1)) return true;
  }
  return false;
}

}  // namespace

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.order(), -1);
  return extend_iso(a, b, map, 0);
}

uint64_t perm_canonical(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t(0);
  do {
    uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

std::vector<Graph> all_graphs_filtered(int n, bool connected_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::set<uint64_t> seen;
  std::vector<Graph> out;
  for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) es.push_back(pairs[i]);
    Graph g(n, es);
    if (connected_only && !g.is_connected()) continue;
    if (seen.insert(perm_canonical(g)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) { return all_graphs_filtered(n, true); }
std::vector<Graph> all_graphs(int n) { return all_graphs_filtered(n, false); }

namespace {

void find_cycles(const Graph& g, int start, std::vector<int>& path, std::vector<bool>& on_path,
                 std::vector<std::vector<int>>& cycles) {
  int v = path.back();
  for (int u : g.neighbors(v)) {
    if (u == start && path.size() >= 3) {
      cycles.push_back(path);
    } else if (u > start && !on_path[u]) {
      path.push_back(u);
      on_path[u] = true;
      find_cycles(g, start, path, on_path, cycles);
      on_path[u] = false;
      path.pop_back();
    }
  }
}

}  // namespace

bool gallai_tree_by_cycles(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) return false;
  int m = g.size();
  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < m; ++e) edge_id[g.edges()[e]] = e;
  auto eid = [&](int u, int v) { return edge_id.at({std::min(u, v), std::max(u, v)}); };
  // union edges that lie on a common simple cycle
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    std::vector<bool> on_path(g.order(), false);
    on_path[s] = true;
    find_cycles(g, s, path, on_path, cycles);
  }
  for (const auto& cyc : cycles) {
    int first = eid(cyc[0], cyc[1]);
    for (size_t i = 1; i < cyc.size(); ++i) {
      int e = eid(cyc[i], cyc[(i + 1) % cyc.size()]);
      parent[find(e)] = find(first);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int e = 0; e < m; ++e) classes[find(e)].push_back(e);
  for (const auto& [root, members] : classes) {
    std::set<int> verts;
    for (int e : members) {
      verts.insert(g.edges()[e].first);
      verts.insert(g.edges()[e].second);
    }
    size_t nb = verts.size(), mb = members.size();
    bool complete = (mb == nb * (nb - 1) / 2);
    bool odd_cycle = false;
    if (nb >= 3 && nb % 2 == 1 && mb == nb) {
      std::map<int, int> deg;
      for (int e : members) {
        deg[g.edges()[e].first]++;
        deg[g.edges()[e].second]++;
      }
      odd_cycle = std::all_of(deg.begin(), deg.end(), [](auto& kv) { return kv.second == 2; });
    }
    if (!complete && !odd_cycle) return false;
  }
  return true;
}

namespace {

bool lists_colorable(const Graph& g, const std::vector<std::vector<int>>& lists, size_t v,
                     std::vector<int>& chosen) {
  if (v == lists.size()) return true;
  for (int c : lists[v]) {
    bool ok = true;
    for (int u : g.neighbors(static_cast<int>(v)))
      if (u < static_cast<int>(v) && chosen[u] == c) ok = false;
    if (!ok) continue;
    chosen[v] = c;
    if (lists_colorable(g, lists, v + 1, chosen)) return true;
  }
  chosen[v] = -1;
  return false;
}

// Enumerate list systems up to color renaming: when vertex v picks its list,
// colors beyond those already used appear as a canonical prefix of fresh ids.
bool all_assignments_colorable(const Graph& g, const std::vector<int>& f, size_t v,
                               std::vector<std::vector<int>>& lists, int used) {
  if (v == f.size()) {
    std::vector<int> chosen(f.size(), -1);
    return lists_colorable(g, lists, 0, chosen);
  }
  int fv = f[v];
  // choose j old colors and fv - j fresh ones
  std::vector<int> comb(fv);
  std::function<bool(int, int, int)> choose = [&](int picked, int from, int old_take) -> bool {
    if (picked == old_take) {
      for (int i = 0; i < fv - old_take; ++i) comb[old_take + i] = used + i;
      lists[v].assign(comb.begin(), comb.end());
      bool ok = all_assignments_colorable(g, f, v + 1, lists, used + fv - old_take);
      lists[v].clear();
      return ok;
    }
    for (int c = from; c < used; ++c) {
      comb[picked] = c;
      if (!choose(picked + 1, c + 1, old_take)) return false;
    }
    return true;
  };
  for (int old_take = std::min(fv, used); old_take >= 0; --old_take)
    if (!choose(0, 0, old_take)) return false;
  return true;
}

}  // namespace

bool naive_choosable(const Graph& g, const std::vector<int>& f) {
  for (int v = 0; v < g.order(); ++v)
    if (f[v] <= 0) return false;
  if (g.order() == 0) return true;
  std::vector<std::vector<int>> lists(g.order());
  return all_assignments_colorable(g, f, 0, lists, 0);
}

namespace {

// Gaussian elimination; returns false when singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational d = a[col][col];
    for (int j = 0; j < n; ++j) a[col][j] /= d;
    b[col] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (int j = 0; j < n; ++j) a[r][j] -= factor * a[col][j];
      b[r] -= factor * b[col];
    }
  }
  x = b;
  return true;
}

}  // namespace

std::optional<Rational> vertex_enumeration_max(const LinearProgram& lp) {
  int nv = static_cast<int>(lp.variables.size());
  // constraint pool: rows plus x_j >= 0 for nonnegative variables
  std::vector<std::pair<std::vector<Rational>, Rational>> pool;  // a.x = b candidates
  for (const auto& row : lp.rows) pool.push_back({row.coeffs, row.rhs});
  for (int j = 0; j < nv; ++j)
    if (lp.nonnegative[j]) {
      std::vector<Rational> a(nv, Rational(0));
      a[j] = 1;
      pool.push_back({a, Rational(0)});
    }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (int j = 0; j < nv; ++j)
      if (lp.nonnegative[j] && x[j] < 0) return false;
    for (const auto& row : lp.rows) {
      Rational lhs = 0;
      for (int j = 0; j < nv; ++j) lhs += row.coeffs[j] * x[j];
      if (row.rel == Relation::le && lhs > row.rhs) return false;
      if (row.rel == Relation::ge && lhs < row.rhs) return false;
      if (row.rel == Relation::eq && lhs != row.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  int p = static_cast<int>(pool.size());
  std::vector<int> idx(nv);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == nv) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int i = 0; i < nv; ++i) {
        a.push_back(pool[idx[i]].first);
        b.push_back(pool[idx[i]].second);
      }
      std::vector<Rational> x;
      if (!solve_square(a, b, x) || !feasible(x)) return;
      Rational val = lp.objective_constant;
      for (int j = 0; j < nv; ++j) val += lp.objective[j] * x[j];
      if (!best || val > *best) best = val;
      return;
    }
    for (int i = start; i < p; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace oracles
