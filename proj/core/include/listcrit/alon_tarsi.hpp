#pragma once

#include "listcrit/graph.hpp"

#include <optional>
#include <vector>

namespace listcrit {

/// List sizes f(v), indexed by vertex.
using ListSizes = std::vector<int>;

struct ATVerdict {
  bool is_at = false;
  /// Witness orientation (arcs tail -> head), present only when is_at.
  std::vector<std::pair<int, int>> witness;
  /// Counts of spanning Eulerian sub-digraphs of the witness by edge parity.
  long long even_count = 0, odd_count = 0;
};

/// Alon–Tarsi test: some orientation with out-degrees <= f-1 whose even and
/// odd spanning Eulerian sub-digraph counts differ. The search runs over
/// orientations grouped by out-degree profile (the count difference is the
/// same, up to sign, for every orientation with a given profile), so each
/// profile is decided by one representative. Deterministic: profiles in
/// lexicographic order, first distinguishing witness returned.
ATVerdict is_f_at(const Graph& g, const ListSizes& f, const SearchLimits& limits = {});

/// Counts of spanning Eulerian sub-digraphs (in-degree = out-degree at every
/// vertex, the empty arc set included) of a digraph on n vertices, split by
/// arc-set parity: (even, odd).
std::pair<long long, long long> eulerian_parity(int n,
                                                const std::vector<std::pair<int, int>>& arcs);

/// One realizable orientation per out-degree profile alpha <= cap with its
/// Eulerian parity counts; the building block behind is_f_at and the sweeps.
struct ATProfile {
  std::vector<int> out_degrees;
  std::vector<std::pair<int, int>> orientation;
  long long even_count = 0, odd_count = 0;
  bool distinguishes() const { return even_count != odd_count; }
};
std::vector<ATProfile> at_profiles(const Graph& g, const std::vector<int>& out_degree_cap,
                                   const SearchLimits& limits = {});

struct PeelResult {
  std::vector<int> residue;  // vertices of g surviving the peel, sorted
  Graph induced;
};

/// Repeatedly delete any vertex whose current degree is at most f(v); the
/// residue is order-independent. Nonempty whenever ||g|| > sum f(v), and every
/// residue vertex then has residue-degree > f(v).
std::optional<PeelResult> peel_degenerate(const Graph& g, const ListSizes& f);

struct ReducibleConfiguration {
  std::vector<int> vertices;  // of the host graph, sorted
  Graph induced;
  ListSizes f;  // f_H(v) = delta(G) + d_H(v) - d_G(v)
  ATVerdict verdict;
};

/// First (by subset size, then lexicographic order) nonempty induced subgraph
/// H that is f_H-AT with f_H(v) = delta(G) + d_H(v) - d_G(v), or nullopt,
/// certifying AT-irreducibility at this scale. Requires min degree k-1.
std::optional<ReducibleConfiguration> at_reducible(const Graph& g, int k,
                                                   const SearchLimits& limits = {});

/// Exact f-choosability: every list assignment with |L(v)| = f(v) drawn from a
/// universe of size sum f(v) admits a proper coloring from the lists. The
/// search collapses list systems to shared-support multisets (colorability
/// depends only on those), prunes multiplicities at the chromatic number of
/// each support, and fills uncovered slots with private colors.
bool choosability_brute_force(const Graph& g, const ListSizes& f, const SearchLimits& limits = {});

}  // namespace listcrit
