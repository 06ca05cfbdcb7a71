#include "listcrit/builders.hpp"

namespace listcrit::graphs {

Graph empty(int n) { return Graph(n, {}); }

Graph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, std::move(es));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, std::move(es));
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, std::move(es));
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph(leaves + 1, std::move(es));
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.push_back({i, a + j});
  return Graph(a + b, std::move(es));
}

Graph wheel(int rim) {
  Graph c = cycle(rim);
  std::vector<std::pair<int, int>> es = c.edges();
  for (int i = 0; i < rim; ++i) es.push_back({i, rim});
  return Graph(rim + 1, std::move(es));
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> es = a.edges();
  for (auto [u, v] : b.edges()) es.push_back({a.order() + u, a.order() + v});
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) es.push_back({u, a.order() + v});
  return Graph(a.order() + b.order(), std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> es = a.edges();
  for (auto [u, v] : b.edges()) es.push_back({a.order() + u, a.order() + v});
  return Graph(a.order() + b.order(), std::move(es));
}

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});      // outer cycle
    es.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    es.push_back({i, 5 + i});            // spokes
  }
  return Graph(10, std::move(es));
}

Graph moser_spindle() {
  // 0 shared apex; diamonds 0-1-2 with tip 3 and 0-4-5 with tip 6; tips joined.
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                   {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
}

}  // namespace listcrit::graphs
