#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace listcrit {

/// Raised when an exponential search is asked to run beyond its refusal bound.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Refusal bounds for the exact exponential searches. This toolkit is a
/// desk-scale verifier: correctness over speed, and a hard stop past these.
struct SearchLimits {
  int independence_max_n = 24;  // independence_number, mic, clique search
  int chromatic_max_n = 16;     // chromatic_number, is_k_critical
  int at_max_n = 12;            // is_f_at vertex guard
  int at_max_m = 24;            // is_f_at edge guard
  int enumerate_max_n = 12;     // enumerate_gallai_trees
  int choosability_max_n = 8;   // choosability_brute_force
  int choosability_max_f = 4;
};

/// Finite simple undirected graph on vertices 0..n-1.
/// Immutable after construction; loops and parallel edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  int min_degree() const;  // 0 for the empty graph
  int max_degree() const;

  bool is_connected() const;
  std::vector<std::vector<int>> components() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(const std::vector<int>& vertices) const;
  Graph without_edge(int u, int v) const;

  /// Neighbor bitmask; only valid while n <= 64.
  uint64_t adjacency_mask(int v) const { return mask_[v]; }
  bool has_masks() const { return n_ <= 64; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> mask_;
};

struct DegreePartition {
  int k = 0;
  std::vector<int> low;        // degree exactly k-1
  std::vector<int> mid;        // degree exactly k
  std::vector<int> high;       // degree >= k+1
  std::vector<int> deficient;  // degree < k-1; nonempty means min degree < k-1
  std::vector<int> all_high() const;  // mid ∪ high, sorted
};

/// Classifies every vertex of g by degree. Requires k >= 3.
DegreePartition degree_partition(const Graph& g, int k);

enum class BlockKind { complete, odd_cycle, other };

struct Block {
  std::vector<int> vertices;  // sorted
  std::vector<std::pair<int, int>> edges;
  BlockKind kind;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;  // sorted
  bool is_cut(int v) const;
  /// Indices of blocks containing at most one cut vertex.
  std::vector<int> endblocks() const;
};

/// Maximal 2-connected subgraphs plus bridge edges, per connected component.
/// The empty graph yields an empty decomposition; isolated vertices have no block.
BlockDecomposition block_decompose(const Graph& g);

/// Vertices contained in at least one clique of order t. Requires t >= 1.
std::vector<int> clique_vertices(const Graph& g, int t, const SearchLimits& limits = {});

/// Exact independence number by branch and bound.
int independence_number(const Graph& g, const SearchLimits& limits = {});

/// Maximum of ||I, V \ I|| over independent sets I (I ⊆ restrict_to when given).
/// Equals the maximum degree-sum over independent sets; the empty set counts.
int mic(const Graph& g, const std::optional<std::vector<int>>& restrict_to = std::nullopt,
        const SearchLimits& limits = {});

bool is_colorable(const Graph& g, int colors, const SearchLimits& limits = {});

/// Exact chromatic number (0 for the empty graph).
int chromatic_number(const Graph& g, const SearchLimits& limits = {});

/// chi(g) == k and chi(g - e) < k for every edge e.
bool is_k_critical(const Graph& g, int k, const SearchLimits& limits = {});

}  // namespace listcrit
