#include "listcrit/gallai.hpp"

#include "listcrit/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace listcrit {

bool is_gallai_forest(const Graph& g) {
  auto dec = block_decompose(g);
  for (const auto& b : dec.blocks)
    if (b.kind == BlockKind::other) return false;
  return true;
}

std::optional<GallaiTree> as_gallai_tree(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) return std::nullopt;
  auto dec = block_decompose(g);
  for (const auto& b : dec.blocks)
    if (b.kind == BlockKind::other) return std::nullopt;
  return GallaiTree{g, std::move(dec)};
}

namespace {

struct GraphStats {
  int q = 0;
  int beta = 0;
  std::vector<bool> in_clique;  // per vertex: lies in some K_{k-1}
};

GraphStats q_beta(const Graph& g, int k, const SearchLimits& limits) {
  GraphStats s;
  s.in_clique.assign(g.order(), false);
  for (int v : clique_vertices(g, k - 1, limits)) s.in_clique[v] = true;
  auto dec = block_decompose(g);
  for (int v = 0; v < g.order(); ++v)
    if (s.in_clique[v] && !dec.is_cut(v)) s.q++;
  std::vector<int> low;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == k - 1) low.push_back(v);
  s.beta = independence_number(g.induced(low), limits);
  return s;
}

}  // namespace

TreeStats tree_stats(const GallaiTree& t, int k, const SearchLimits& limits) {
  const Graph& g = t.graph;
  if (g.max_degree() > k - 1)
    throw std::invalid_argument("tree_stats: max degree exceeds k-1");
  auto s = q_beta(g, k, limits);
  TreeStats out;
  out.order = g.order();
  out.size = g.size();
  out.q = s.q;
  out.beta = s.beta;
  out.has_clique = std::any_of(s.in_clique.begin(), s.in_clique.end(), [](bool b) { return b; });
  out.k = k;
  return out;
}

LStats l_stats(const Graph& g, int k, const SearchLimits& limits) {
  LStats out;
  auto s = q_beta(g, k, limits);
  out.q = s.q;
  out.beta = s.beta;
  auto comps = g.components();
  out.components = static_cast<int>(comps.size());
  for (const auto& comp : comps) {
    bool has = std::any_of(comp.begin(), comp.end(), [&](int v) { return s.in_clique[v]; });
    if (has) out.c_star++;
  }
  return out;
}

namespace {

Graph attach_complete(const Graph& g, int v, int t) {
  int n = g.order();
  auto es = g.edges();
  std::vector<int> members{v};
  for (int i = 0; i < t - 1; ++i) members.push_back(n + i);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) es.push_back({members[i], members[j]});
  return Graph(n + t - 1, std::move(es));
}

Graph attach_odd_cycle(const Graph& g, int v, int len) {
  int n = g.order();
  auto es = g.edges();
  es.push_back({v, n});
  for (int i = 0; i + 1 < len - 1; ++i) es.push_back({n + i, n + i + 1});
  es.push_back({v, n + len - 2});
  return Graph(n + len - 1, std::move(es));
}

}  // namespace

void enumerate_gallai_trees(int max_n, int k, const std::function<void(const GallaiTree&)>& emit,
                            const SearchLimits& limits) {
  if (max_n < 1) throw std::invalid_argument("enumerate_gallai_trees: max_n >= 1 required");
  if (k < 4) throw std::invalid_argument("enumerate_gallai_trees: k >= 4 required");
  if (max_n > limits.enumerate_max_n)
    throw GuardError("enumerate_gallai_trees: max_n beyond guard (" +
                     std::to_string(limits.enumerate_max_n) + ")");

  // Every Gallai tree arises from K1 by repeatedly attaching an endblock at an
  // existing vertex, so breadth-first growth with canonical dedup is complete.
  std::set<CanonicalForm> seen;
  std::vector<std::vector<std::pair<CanonicalForm, Graph>>> levels(max_n + 1);
  Graph k1(1, {});
  levels[1].push_back({canonical_form(k1), k1});
  seen.insert(levels[1][0].first);

  for (int n = 1; n <= max_n; ++n) {
    auto& level = levels[n];
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [form, g] : level) {
      // K_k never appears: complete blocks stop at K_{k-1}, and any larger
      // tree containing K_k would need a vertex of degree >= k.
      auto tree = as_gallai_tree(g);
      emit(*tree);
      for (int v = 0; v < n; ++v) {
        int room = k - 1 - g.degree(v);
        for (int t = 2; t <= k - 1 && n + t - 1 <= max_n; ++t) {
          if (t - 1 > room) break;
          Graph h = attach_complete(g, v, t);
          auto f = canonical_form(h);
          if (seen.insert(f).second) levels[n + t - 1].push_back({std::move(f), std::move(h)});
        }
        if (room >= 2) {
          for (int len = 5; n + len - 1 <= max_n; len += 2) {
            Graph h = attach_odd_cycle(g, v, len);
            auto f = canonical_form(h);
            if (seen.insert(f).second) levels[n + len - 1].push_back({std::move(f), std::move(h)});
          }
        }
      }
    }
  }
}

std::vector<GallaiTree> enumerate_gallai_trees(int max_n, int k, const SearchLimits& limits) {
  std::vector<GallaiTree> out;
  enumerate_gallai_trees(max_n, k, [&](const GallaiTree& t) { out.push_back(t); }, limits);
  return out;
}

}  // namespace listcrit
