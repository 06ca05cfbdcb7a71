#include "listcrit/alon_tarsi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

namespace listcrit {

namespace {

// Eulerian sub-digraph counts (by arc-set parity) of a fixed orientation,
// meet-in-the-middle over arc subsets keyed by the imbalance vector.
// Imbalances fit 5 bits per vertex at the guard sizes (degree <= 23 would not,
// but n <= 12 simple graphs cap degrees at 11).
std::pair<long long, long long> eulerian_parity_counts(int n,
                                                       const std::vector<std::pair<int, int>>& arcs) {
  auto pack = [n](const std::vector<int>& imb) {
    uint64_t key = 0;
    for (int v = 0; v < n; ++v) key = (key << 5) | static_cast<uint64_t>(imb[v] + 15);
    return key;
  };
  int m = static_cast<int>(arcs.size());
  int half = m / 2;
  std::unordered_map<uint64_t, std::pair<long long, long long>> table;
  table.reserve(size_t(1) << half);
  std::vector<int> imb(n, 0);
  for (uint32_t sub = 0; sub < (uint32_t(1) << half); ++sub) {
    std::fill(imb.begin(), imb.end(), 0);
    for (int i = 0; i < half; ++i)
      if ((sub >> i) & 1) {
        imb[arcs[i].first]++;   // out
        imb[arcs[i].second]--;  // in
      }
    auto& slot = table[pack(imb)];
    if (std::popcount(sub) % 2 == 0)
      slot.first++;
    else
      slot.second++;
  }
  long long even = 0, odd = 0;
  int rest = m - half;
  for (uint32_t sub = 0; sub < (uint32_t(1) << rest); ++sub) {
    std::fill(imb.begin(), imb.end(), 0);
    for (int i = 0; i < rest; ++i)
      if ((sub >> i) & 1) {
        imb[arcs[half + i].first]--;  // need the complementary imbalance
        imb[arcs[half + i].second]++;
      }
    auto it = table.find(pack(imb));
    if (it == table.end()) continue;
    auto [e, o] = it->second;
    if (std::popcount(sub) % 2 == 0) {
      even += e;
      odd += o;
    } else {
      even += o;
      odd += e;
    }
  }
  return {even, odd};
}

// Orientation with prescribed out-degrees, greedy plus flow-style
// augmentation: to free a budget unit at x, re-tail an edge currently paid by
// x onto its other endpoint, recursively freeing that endpoint first. Failure
// of the augmenting search certifies the profile is not realizable.
std::optional<std::vector<std::pair<int, int>>> realize_orientation(
    const Graph& g, const std::vector<int>& out_degree) {
  int m = g.size(), n = g.order();
  std::vector<int> budget = out_degree;
  std::vector<int> tail(m, -1);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    int payer = -1;
    if (budget[u] > 0)
      payer = u;
    else if (budget[v] > 0)
      payer = v;
    else {
      // BFS along moves x -> w where an assigned edge {x, w} is tailed at x;
      // flipping such an edge shifts one budget unit from w back to x.
      std::vector<int> parent_edge(n, -1), parent_vertex(n, -1);
      std::vector<char> visited(n, 0);
      std::vector<int> queue = {u, v};
      visited[u] = visited[v] = 1;
      int rich = -1;
      for (size_t qi = 0; qi < queue.size() && rich < 0; ++qi) {
        int x = queue[qi];
        for (int e2 = 0; e2 < e && rich < 0; ++e2) {
          if (tail[e2] != x) continue;
          auto [a, b] = g.edges()[e2];
          int w = (a == x) ? b : a;
          if (visited[w]) continue;
          visited[w] = 1;
          parent_edge[w] = e2;
          parent_vertex[w] = x;
          if (budget[w] > 0)
            rich = w;
          else
            queue.push_back(w);
        }
      }
      if (rich < 0) return std::nullopt;
      budget[rich]--;
      int x = rich;
      while (parent_vertex[x] >= 0) {
        tail[parent_edge[x]] = x;  // x pays this edge now, freeing its parent
        x = parent_vertex[x];
      }
      payer = x;  // u or v, now holding the freed unit
      budget[payer]++;
    }
    tail[e] = payer;
    budget[payer]--;
  }
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    arcs.push_back(tail[e] == u ? std::make_pair(u, v) : std::make_pair(v, u));
  }
  return arcs;
}

}  // namespace

std::pair<long long, long long> eulerian_parity(int n,
                                                const std::vector<std::pair<int, int>>& arcs) {
  if (n > 12 || arcs.size() > 24)
    throw GuardError("eulerian_parity: beyond the meet-in-the-middle packing bounds");
  return eulerian_parity_counts(n, arcs);
}

namespace {

void guard_at(const Graph& g, const SearchLimits& limits, const char* who) {
  if (g.order() > limits.at_max_n)
    throw GuardError(std::string(who) + ": vertex guard " + std::to_string(limits.at_max_n) +
                     " exceeded");
  if (g.size() > limits.at_max_m)
    throw GuardError(std::string(who) + ": edge guard " + std::to_string(limits.at_max_m) +
                     " exceeded");
}

}  // namespace

std::vector<ATProfile> at_profiles(const Graph& g, const std::vector<int>& out_degree_cap,
                                   const SearchLimits& limits) {
  guard_at(g, limits, "at_profiles");
  if (static_cast<int>(out_degree_cap.size()) != g.order())
    throw std::invalid_argument("at_profiles: cap size mismatch");
  std::vector<ATProfile> out;
  int n = g.order(), m = g.size();
  std::vector<int> cap(n);
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    cap[v] = std::max(0, std::min(out_degree_cap[v], g.degree(v)));
    if (out_degree_cap[v] < 0) return out;  // some vertex cannot orient its edges at all
    total += cap[v];
  }
  if (total < m) return out;
  std::vector<long long> suffix(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + cap[v];
  std::vector<int> alpha(n, 0);
  std::function<void(int, int)> gen = [&](int v, int assigned) {
    if (v == n) {
      if (assigned != m) return;
      auto arcs = realize_orientation(g, alpha);
      if (!arcs) return;
      auto [even, odd] = eulerian_parity_counts(n, *arcs);
      out.push_back(ATProfile{alpha, std::move(*arcs), even, odd});
      return;
    }
    for (int a = 0; a <= cap[v]; ++a) {
      if (assigned + a > m) break;
      if (assigned + a + suffix[v + 1] < m) continue;
      alpha[v] = a;
      gen(v + 1, assigned + a);
    }
    alpha[v] = 0;
  };
  gen(0, 0);
  return out;
}

ATVerdict is_f_at(const Graph& g, const ListSizes& f, const SearchLimits& limits) {
  guard_at(g, limits, "is_f_at");
  if (static_cast<int>(f.size()) != g.order())
    throw std::invalid_argument("is_f_at: f size mismatch");
  ATVerdict verdict;
  int n = g.order(), m = g.size();
  std::vector<int> cap(n);
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    if (f[v] <= 0) return verdict;  // out-degree <= f-1 < 0 is impossible
    cap[v] = std::min(f[v] - 1, g.degree(v));
    total += cap[v];
  }
  if (total < m) return verdict;

  std::vector<long long> suffix(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + cap[v];
  std::vector<int> alpha(n, 0);
  std::function<bool(int, int)> gen = [&](int v, int assigned) -> bool {
    if (v == n) {
      if (assigned != m) return false;
      auto arcs = realize_orientation(g, alpha);
      if (!arcs) return false;
      auto [even, odd] = eulerian_parity_counts(n, *arcs);
      if (even == odd) return false;
      verdict.is_at = true;
      verdict.witness = std::move(*arcs);
      verdict.even_count = even;
      verdict.odd_count = odd;
      return true;
    }
    for (int a = 0; a <= cap[v]; ++a) {
      if (assigned + a > m) break;
      if (assigned + a + suffix[v + 1] < m) continue;
      alpha[v] = a;
      if (gen(v + 1, assigned + a)) return true;
    }
    alpha[v] = 0;
    return false;
  };
  gen(0, 0);
  return verdict;
}

std::optional<PeelResult> peel_degenerate(const Graph& g, const ListSizes& f) {
  if (static_cast<int>(f.size()) != g.order())
    throw std::invalid_argument("peel_degenerate: f size mismatch");
  std::vector<bool> alive(g.order(), true);
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!alive[v] || deg[v] > f[v]) continue;
      alive[v] = false;
      changed = true;
      for (int u : g.neighbors(v))
        if (alive[u]) deg[u]--;
    }
  }
  PeelResult r;
  for (int v = 0; v < g.order(); ++v)
    if (alive[v]) r.residue.push_back(v);
  if (r.residue.empty()) return std::nullopt;
  r.induced = g.induced(r.residue);
  return r;
}

std::optional<ReducibleConfiguration> at_reducible(const Graph& g, int k,
                                                   const SearchLimits& limits) {
  guard_at(g, limits, "at_reducible");
  if (g.min_degree() != k - 1)
    throw std::invalid_argument("at_reducible: min degree must equal k-1");
  int n = g.order();
  // subsets ordered by size, then by numeric value: small certificates first
  std::vector<uint32_t> subsets;
  for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](uint32_t a, uint32_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  for (uint32_t s : subsets) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1) verts.push_back(v);
    Graph h = g.induced(verts);
    ListSizes fh(verts.size());
    bool possible = true;
    for (size_t i = 0; i < verts.size(); ++i) {
      fh[i] = (k - 1) + h.degree(static_cast<int>(i)) - g.degree(verts[i]);
      if (fh[i] <= 0) possible = false;  // empty list: never f_H-AT
    }
    if (!possible) continue;
    ATVerdict v = is_f_at(h, fh, limits);
    if (v.is_at) return ReducibleConfiguration{std::move(verts), std::move(h), std::move(fh), std::move(v)};
  }
  return std::nullopt;
}

namespace {

// --- exact f-choosability ---------------------------------------------------
//
// A list system is determined, up to renaming colors, by the multiset of
// "supports": for each color, the set of vertices carrying it. Colorability
// depends only on that multiset. Colors whose support is a single vertex are
// always usable by that vertex alone, so a vertex whose shared coverage falls
// below f(v) can be deleted; so can a vertex whose list is longer than its
// degree (color it last). A support carried by chi(G[S]) or more colors can be
// colored off entirely. A bad assignment therefore exists iff one exists among
// multisets of connected supports of size >= 2 with multiplicity below the
// support's chromatic number, and badness is monotone under adding supports,
// so a depth-first scan with an uncolorability early-exit is exhaustive.

struct ChoosabilityCore {
  int n;
  std::vector<uint32_t> adj;
  std::vector<int> f;
  std::vector<uint32_t> pool;      // connected supports, |S| >= 2
  std::vector<int> pool_cap;      // chi(G[S]) - 1
  std::vector<std::pair<uint32_t, int>> chosen;  // (support, multiplicity)

  bool connected(uint32_t s) const {
    uint32_t start = s & (~s + 1);
    uint32_t reach = start, frontier = start;
    while (frontier) {
      uint32_t next = 0;
      uint32_t rest = frontier;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= adj[v] & s & ~reach;
      }
      reach |= next;
      frontier = next;
    }
    return reach == s;
  }

  int chi(uint32_t s) const {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1) verts.push_back(v);
    for (int t = 1;; ++t) {
      std::vector<int> color(verts.size(), -1);
      std::function<bool(size_t)> bt = [&](size_t i) -> bool {
        if (i == verts.size()) return true;
        int used = 0;
        for (size_t j = 0; j < i; ++j) used = std::max(used, color[j] + 1);
        for (int c = 0; c < std::min(t, used + 1); ++c) {
          bool ok = true;
          for (size_t j = 0; j < i; ++j)
            if (color[j] == c && (adj[verts[i]] >> verts[j]) & 1) ok = false;
          if (!ok) continue;
          color[i] = c;
          if (bt(i + 1)) return true;
          color[i] = -1;
        }
        return false;
      };
      if (bt(0)) return t;
    }
  }

  // Is the system given by `chosen` (plus implicit private fill-up) colorable?
  bool colorable() const {
    uint32_t alive = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    for (;;) {
      // live shared coverage per vertex
      std::vector<int> shared(n, 0);
      for (auto [s, mult] : chosen) {
        uint32_t live = s & alive;
        if (std::popcount(live) < 2) continue;
        uint32_t rest = live;
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          shared[v] += mult;
        }
      }
      uint32_t drop = 0;
      uint32_t rest = alive;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (shared[v] < f[v] || f[v] > std::popcount(adj[v] & alive)) drop |= uint32_t(1) << v;
      }
      if (!drop) break;
      alive &= ~drop;
      if (!alive) return true;
    }
    // every surviving vertex must pick one live shared color instance
    std::vector<uint32_t> support;
    std::vector<int> mult;
    for (auto [s, m2] : chosen) {
      uint32_t live = s & alive;
      if (std::popcount(live) >= 2) {
        support.push_back(live);
        mult.push_back(m2);
      }
    }
    std::vector<int> verts;
    uint32_t rest = alive;
    while (rest) {
      verts.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    // choice[i] = (support index, copy); copies of one support are symmetric,
    // so a fresh copy index is opened only in order.
    std::vector<std::vector<uint32_t>> used;  // used[s] = per-copy vertex mask
    used.resize(support.size());
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
      if (i == verts.size()) return true;
      int v = verts[i];
      for (size_t s = 0; s < support.size(); ++s) {
        if (!((support[s] >> v) & 1)) continue;
        size_t copies = used[s].size();
        size_t limit = std::min(static_cast<size_t>(mult[s]), copies + 1);
        for (size_t c = 0; c < limit; ++c) {
          if (c < copies && (used[s][c] & adj[v])) continue;
          if (c == copies) used[s].push_back(0);
          used[s][c] |= uint32_t(1) << v;
          if (assign(i + 1)) return true;
          used[s][c] &= ~(uint32_t(1) << v);
          if (c == copies) used[s].pop_back();
        }
      }
      return false;
    };
    return assign(0);
  }

  // Search for an uncolorable multiset; true means a bad assignment exists.
  bool exists_bad(size_t from, std::vector<int>& residual) {
    for (size_t j = from; j < pool.size(); ++j) {
      int capm = pool_cap[j];
      uint32_t rest = pool[j];
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        capm = std::min(capm, residual[v]);
        if (capm == 0) break;
      }
      for (int m2 = capm; m2 >= 1; --m2) {
        chosen.push_back({pool[j], m2});
        uint32_t r2 = pool[j];
        while (r2) {
          int v = std::countr_zero(r2);
          r2 &= r2 - 1;
          residual[v] -= m2;
        }
        bool bad = !colorable() || exists_bad(j + 1, residual);
        r2 = pool[j];
        while (r2) {
          int v = std::countr_zero(r2);
          r2 &= r2 - 1;
          residual[v] += m2;
        }
        chosen.pop_back();
        if (bad) return true;
      }
    }
    return false;
  }
};

bool choosable_component(const Graph& g, const ListSizes& f) {
  ChoosabilityCore core;
  core.n = g.order();
  core.adj.assign(core.n, 0);
  for (auto [u, v] : g.edges()) {
    core.adj[u] |= uint32_t(1) << v;
    core.adj[v] |= uint32_t(1) << u;
  }
  core.f = f;
  std::vector<std::pair<uint32_t, int>> pool;  // (mask, cap), small supports first
  for (uint32_t s = 1; s < (uint32_t(1) << core.n); ++s) {
    if (std::popcount(s) < 2 || !core.connected(s)) continue;
    int cap = core.chi(s) - 1;
    if (cap >= 1) pool.push_back({s, cap});
  }
  std::sort(pool.begin(), pool.end(), [](auto a, auto b) {
    int pa = std::popcount(a.first), pb = std::popcount(b.first);
    return pa != pb ? pa < pb : a.first < b.first;
  });
  for (auto [s, cap] : pool) {
    core.pool.push_back(s);
    core.pool_cap.push_back(cap);
  }
  std::vector<int> residual = f;
  return !core.exists_bad(0, residual);
}

}  // namespace

bool choosability_brute_force(const Graph& g, const ListSizes& f, const SearchLimits& limits) {
  if (g.order() > limits.choosability_max_n)
    throw GuardError("choosability_brute_force: vertex guard " +
                     std::to_string(limits.choosability_max_n) + " exceeded");
  if (static_cast<int>(f.size()) != g.order())
    throw std::invalid_argument("choosability_brute_force: f size mismatch");
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] > limits.choosability_max_f)
      throw GuardError("choosability_brute_force: list-size guard " +
                       std::to_string(limits.choosability_max_f) + " exceeded");
    if (f[v] <= 0) return false;
  }
  if (g.order() == 0) return true;

  // peel vertices whose list exceeds their degree: they color greedily last
  std::vector<bool> alive(g.order(), true);
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!alive[v] || f[v] <= deg[v]) continue;
      alive[v] = false;
      changed = true;
      for (int u : g.neighbors(v))
        if (alive[u]) deg[u]--;
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (alive[v]) keep.push_back(v);
  if (keep.empty()) return true;
  Graph core = g.induced(keep);
  ListSizes fc(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) fc[i] = f[keep[i]];

  for (const auto& comp : core.components()) {
    Graph h = core.induced(comp);
    ListSizes fh(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) fh[i] = fc[comp[i]];
    if (!choosable_component(h, fh)) return false;
  }
  return true;
}

}  // namespace listcrit
