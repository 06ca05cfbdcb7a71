#include "listcrit/canonical.hpp"

#include <algorithm>
#include <map>

namespace listcrit {

namespace {

// Stable 1-dimensional color refinement. Cell order is signature order, so the
// refined partition (and the cell chosen for branching) is deterministic.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  int n = g.order();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(colors[v]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (int v = 0; v < n; ++v) rank[sig[v].first] = 0;
    int next = 0;
    for (auto& [key, id] : rank) id = next++;
    int old_distinct = 0;
    {
      std::vector<int> tmp = colors;
      std::sort(tmp.begin(), tmp.end());
      old_distinct = static_cast<int>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
    }
    std::vector<int> refined(n);
    for (int v = 0; v < n; ++v) refined[v] = rank[sig[v].first];
    if (next == old_distinct) return refined;
    colors = std::move(refined);
  }
}

struct CanonSearch {
  const Graph& g;
  const std::vector<int>& initial;  // original colors, recorded in the code
  std::vector<uint64_t> best_code;
  std::vector<int> best_perm;
  bool have_best = false;

  std::vector<uint64_t> encode(const std::vector<int>& colors) const {
    int n = g.order();
    std::vector<int> inv(n);  // inv[position] = vertex
    for (int v = 0; v < n; ++v) inv[colors[v]] = v;
    std::vector<uint64_t> code;
    code.push_back(static_cast<uint64_t>(n));
    for (int i = 0; i < n; ++i) code.push_back(static_cast<uint64_t>(initial[inv[i]]));
    uint64_t word = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        word = (word << 1) | (g.adjacent(inv[i], inv[j]) ? 1 : 0);
        if (++bits == 64) {
          code.push_back(word);
          word = 0;
          bits = 0;
        }
      }
    if (bits) code.push_back(word << (64 - bits));
    return code;
  }

  bool twins(int u, int v) const {
    uint64_t mu = g.adjacency_mask(u) & ~(uint64_t(1) << v);
    uint64_t mv = g.adjacency_mask(v) & ~(uint64_t(1) << u);
    return mu == mv;
  }

  void search(std::vector<int> colors) {
    colors = refine(g, colors);
    int n = g.order();
    // first non-singleton cell, by color id
    int target = -1;
    std::vector<int> counts(n, 0);
    for (int v = 0; v < n; ++v) counts[colors[v]]++;
    for (int c = 0; c < n; ++c)
      if (counts[c] >= 2) {
        target = c;
        break;
      }
    if (target == -1) {
      auto code = encode(colors);
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_perm = colors;
        have_best = true;
      }
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) cell.push_back(v);
    std::vector<int> branched;
    for (int v : cell) {
      bool dup = false;
      for (int u : branched)
        if (twins(u, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      branched.push_back(v);
      std::vector<int> next(n);
      for (int u = 0; u < n; ++u) next[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      search(std::move(next));
    }
  }
};

std::pair<std::vector<uint64_t>, std::vector<int>> canonicalize(const Graph& g,
                                                                const std::vector<int>& colors) {
  if (!g.has_masks()) throw GuardError("canonical_form: graphs beyond 64 vertices unsupported");
  if (static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("canonical_form: color vector size mismatch");
  if (g.order() == 0) return {{0}, {}};
  CanonSearch s{g, colors, {}, {}, false};
  // normalize initial colors to dense ids preserving value order
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> dense(g.order());
  for (int v = 0; v < g.order(); ++v)
    dense[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colors[v]) -
                                sorted.begin());
  s.search(dense);
  return {s.best_code, s.best_perm};
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  std::vector<int> zero(g.order(), 0);
  return CanonicalForm{canonicalize(g, zero).first};
}

CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
  return CanonicalForm{canonicalize(g, colors).first};
}

std::vector<int> canonical_labeling(const Graph& g) {
  std::vector<int> zero(g.order(), 0);
  return canonicalize(g, zero).second;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace listcrit
