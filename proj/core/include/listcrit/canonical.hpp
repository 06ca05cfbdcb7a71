#pragma once

#include "listcrit/graph.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace listcrit {

/// Canonical form usable as a map key: equal forms <=> isomorphic graphs
/// (color-preserving isomorphism for the colored variant).
struct CanonicalForm {
  std::vector<uint64_t> code;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical labeling by color refinement plus individualization backtracking,
/// with branching collapsed across twin vertices. Intended for small graphs
/// (n <= 64 hard cap; practical for the enumeration guard sizes).
CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors);

/// A relabeling achieving the canonical form: new index = perm[old index].
std::vector<int> canonical_labeling(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace listcrit
