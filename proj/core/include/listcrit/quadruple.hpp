#pragma once

#include "listcrit/gallai.hpp"
#include "listcrit/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace listcrit {

enum class Family { gallai, ks, cr, r, gallai7up, gallai6up, parametric, custom };

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& name);

/// Smallest k for which the family's quadruple is claimed r-Gallai.
int family_min_k(Family f);

struct Quadruple {
  int k = 0;
  Rational p, h, z, f;
  Family family = Family::custom;
  std::optional<Rational> z_param;  // parametric family only
};

/// The registered quadruple of a family at a given k, as exact rationals.
/// The parametric family needs z_param = 0 or 2 <= z_param <= k(k-3)/(k-2).
Quadruple evaluate_family(Family fam, int k, std::optional<Rational> z_param = std::nullopt);

struct Condition {
  std::string name;
  Rational lhs, rhs;  // pass <=> lhs >= rhs
  bool pass = false;
  Rational slack;  // lhs - rhs
};

struct ConditionReport {
  int k = 0;
  std::vector<Condition> conditions;  // cond1..cond5, cliquefree_coeff, z_domain
  Condition sign_2h_plus_f;           // 2h+f <= 0, wanted to drop the c* term at k >= 7
  Condition sign_h_plus_f;            // h+f <= 0, same for k >= 5
  bool pass = false;                  // all core conditions hold
  bool sufficiency_regime = false;    // the sufficiency argument covers k >= 5
};

/// Exact evaluation of the sufficient conditions for being 5-Gallai:
///   (1) f >= (k-1)(1-p-h)        (2) p >= (3 - z/2)/(k-2)
///   (3) p >= h+5-k               (4) p >= (2+h)/(k-2)
///   (5) (k-1)p + (k-3)h + z >= k+1
/// plus the clique-free coefficient p >= max{2, 3-z}/(k-2) and the domain
/// requirement z = 0 or z >= 2. Requires k >= 4; the sufficiency argument
/// itself needs k >= 5 (reported via sufficiency_regime).
ConditionReport check_sufficient_conditions(const Quadruple& q);

struct TreeCheck {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  bool clique_branch = false;  // K_{k-1} present: the h,f terms participate
  Rational lhs, rhs;           // 2|E(T)| vs the quadruple bound
};

struct TreeVerification {
  int k = 0, max_n = 0;
  long long trees_checked = 0;
  long long tight_count = 0;
  std::vector<TreeCheck> tight_examples;  // first few equality witnesses
  std::optional<TreeCheck> counterexample;
  bool pass = false;
};

/// Exhaustive check of the defining inequalities over every Gallai tree with
/// at most max_n vertices, max degree <= k-1, T != K_k (k = q.k, q.k >= r).
/// Returns the first counterexample in canonical enumeration order, if any.
TreeVerification verify_against_trees(const Quadruple& q, int r, int max_n,
                                      const SearchLimits& limits = {});
/// Same check over a pre-enumerated tree list (must follow enumeration order).
TreeVerification verify_against_trees(const Quadruple& q, std::span<const GallaiTree> trees,
                                      int max_n, const SearchLimits& limits = {});

}  // namespace listcrit
