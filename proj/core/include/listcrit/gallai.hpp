#pragma once

#include "listcrit/graph.hpp"

#include <functional>
#include <optional>

namespace listcrit {

/// Connected graph in which every block is a complete graph or an odd cycle.
/// K1 counts (zero blocks); K2 blocks count as complete, as does C3.
struct GallaiTree {
  Graph graph;
  BlockDecomposition decomposition;
};

/// Every block of every component is complete or an odd cycle.
bool is_gallai_forest(const Graph& g);

std::optional<GallaiTree> as_gallai_tree(const Graph& g);

struct TreeStats {
  int order = 0;
  int size = 0;
  int q = 0;        // non-cut vertices lying in some K_{k-1}
  int beta = 0;     // independence number of the subgraph induced on degree-(k-1) vertices
  bool has_clique = false;  // K_{k-1} present
  int k = 0;
};

/// Stats of a single Gallai tree; rejects max degree above k-1.
TreeStats tree_stats(const GallaiTree& t, int k, const SearchLimits& limits = {});

struct LStats {
  int components = 0;
  int c_star = 0;  // components containing a K_{k-1}
  int q = 0;
  int beta = 0;
};

/// Same statistics on a possibly disconnected graph; degrees are measured
/// inside g, and beta sums over components.
LStats l_stats(const Graph& g, int k, const SearchLimits& limits = {});

/// One representative per isomorphism class of Gallai trees T with
/// |T| <= max_n, max degree <= k-1, and T != K_k, grown block by block with
/// canonical-form deduplication. Deterministic order: by order, then by
/// canonical code. Requires max_n >= 1 and k >= 4.
void enumerate_gallai_trees(int max_n, int k, const std::function<void(const GallaiTree&)>& emit,
                            const SearchLimits& limits = {});
std::vector<GallaiTree> enumerate_gallai_trees(int max_n, int k, const SearchLimits& limits = {});

}  // namespace listcrit
