#include "listcrit/quadruple.hpp"

#include <algorithm>

namespace listcrit {

std::string family_name(Family f) {
  switch (f) {
    case Family::gallai: return "gallai";
    case Family::ks: return "ks";
    case Family::cr: return "cr";
    case Family::r: return "r";
    case Family::gallai7up: return "gallai7up";
    case Family::gallai6up: return "gallai6up";
    case Family::parametric: return "parametric";
    case Family::custom: return "custom";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (Family f : {Family::gallai, Family::ks, Family::cr, Family::r, Family::gallai7up,
                   Family::gallai6up, Family::parametric, Family::custom})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

int family_min_k(Family f) {
  switch (f) {
    case Family::gallai:
    case Family::r: return 4;
    case Family::ks: return 7;
    default: return 5;
  }
}

Quadruple evaluate_family(Family fam, int k, std::optional<Rational> z_param) {
  if (k < family_min_k(fam))
    throw std::invalid_argument("evaluate_family: k below the family threshold " +
                                std::to_string(family_min_k(fam)));
  Quadruple q;
  q.k = k;
  q.family = fam;
  const Rational K(k);
  switch (fam) {
    case Family::gallai:
      q.p = Rational(k + 1, k - 1);
      q.h = 0;
      q.z = 0;
      q.f = -2;
      break;
    case Family::ks: {
      Rational d(k * k - 3 * k + 4);
      q.p = Rational(4 * (k - 1)) / d;
      q.h = Rational(k * k - 3 * k) / d;
      q.z = 0;
      q.f = Rational(-4 * (k * k - 3 * k + 2)) / d;
      break;
    }
    case Family::cr: {
      Rational d(k * k - 4 * k + 5);
      q.p = Rational(3 * k - 5) / d;
      q.h = Rational(k * (k - 3)) / d;
      q.z = 0;
      q.f = Rational(-2 * (k - 1) * (2 * k - 5)) / d;
      break;
    }
    case Family::r:
      q.p = 1;
      q.h = 0;
      q.z = 2;
      q.f = 0;
      break;
    case Family::gallai7up: {
      Rational d(k * k - 4 * k + 5);
      q.p = Rational(3 * k - 7) / d;
      q.h = Rational((k - 1) * (k - 4)) / d;
      q.z = 2;
      q.f = Rational(-2 * (k - 1) * (k - 4)) / d;
      break;
    }
    case Family::gallai6up: {
      Rational d(k * k - 3 * k + 3);
      q.p = Rational(3 * k - 5) / d;
      q.h = Rational((k - 1) * (k - 4)) / d;
      q.z = Rational((3 * k - 5) * (k - 2)) / d;
      q.f = Rational(-(k - 1) * (k - 4)) / d;
      break;
    }
    case Family::parametric: {
      if (!z_param) throw std::invalid_argument("evaluate_family: parametric needs z_param");
      Rational z = *z_param;
      Rational zmax = Rational(k * (k - 3), k - 2);
      if (!(z == 0 || (z >= 2 && z <= zmax)))
        throw std::invalid_argument("evaluate_family: z_param must be 0 or in [2, k(k-3)/(k-2)]");
      Rational d(k * k - 4 * k + 5);
      q.h = (Rational(k * (k - 3)) - Rational(k - 2) * z) / d;
      q.p = (Rational(2) + q.h) / Rational(k - 2);
      q.z = z;
      q.f = Rational(k - 1) * (Rational(1) - q.h - q.p);
      q.z_param = z;
      break;
    }
    case Family::custom:
      throw std::invalid_argument("evaluate_family: custom quadruples carry explicit values");
  }
  return q;
}

namespace {

Condition make_condition(std::string name, Rational lhs, Rational rhs) {
  Condition c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.pass = lhs >= rhs;
  return c;
}

}  // namespace

ConditionReport check_sufficient_conditions(const Quadruple& q) {
  if (q.k < 4) throw std::invalid_argument("check_sufficient_conditions: k >= 4 required");
  const int k = q.k;
  ConditionReport r;
  r.k = k;
  r.sufficiency_regime = k >= 5;
  const Rational &p = q.p, &h = q.h, &z = q.z, &f = q.f;

  r.conditions.push_back(make_condition("cond1", f, Rational(k - 1) * (Rational(1) - p - h)));
  r.conditions.push_back(make_condition("cond2", p, (Rational(3) - z / 2) / Rational(k - 2)));
  r.conditions.push_back(make_condition("cond3", p, h + Rational(5 - k)));
  r.conditions.push_back(make_condition("cond4", p, (Rational(2) + h) / Rational(k - 2)));
  r.conditions.push_back(make_condition("cond5", Rational(k - 1) * p + Rational(k - 3) * h + z,
                                        Rational(k + 1)));
  Rational coeff = std::max(Rational(2), Rational(3) - z) / Rational(k - 2);
  r.conditions.push_back(make_condition("cliquefree_coeff", p, coeff));

  Condition zdom;
  zdom.name = "z_domain";
  zdom.lhs = z;
  zdom.rhs = 0;
  zdom.pass = (z == 0 || z >= 2);
  zdom.slack = (z == 0) ? Rational(0) : z - 2;
  r.conditions.push_back(zdom);

  r.sign_2h_plus_f = make_condition("sign_2h_plus_f", Rational(0), 2 * h + f);
  r.sign_h_plus_f = make_condition("sign_h_plus_f", Rational(0), h + f);

  r.pass = std::all_of(r.conditions.begin(), r.conditions.end(),
                       [](const Condition& c) { return c.pass; });
  // Nonnegativity of p, h, z is part of the hypothesis set.
  if (p < 0 || h < 0 || z < 0) r.pass = false;
  return r;
}

namespace {

TreeCheck check_tree(const GallaiTree& t, const Quadruple& q, const SearchLimits& limits) {
  TreeStats st = tree_stats(t, q.k, limits);
  TreeCheck c;
  c.order = st.order;
  c.edges = t.graph.edges();
  c.clique_branch = st.has_clique;
  c.lhs = Rational(2 * st.size);
  Rational base = (Rational(q.k - 3) + q.p) * Rational(st.order) + q.z * Rational(st.beta);
  c.rhs = c.clique_branch ? base + q.h * Rational(st.q) + q.f : base;
  return c;
}

}  // namespace

TreeVerification verify_against_trees(const Quadruple& q, std::span<const GallaiTree> trees,
                                      int max_n, const SearchLimits& limits) {
  TreeVerification v;
  v.k = q.k;
  v.max_n = max_n;
  for (const auto& t : trees) {
    if (t.graph.order() > max_n) continue;
    TreeCheck c = check_tree(t, q, limits);
    v.trees_checked++;
    if (c.lhs > c.rhs) {
      v.counterexample = std::move(c);
      v.pass = false;
      return v;
    }
    if (c.lhs == c.rhs) {
      v.tight_count++;
      if (v.tight_examples.size() < 8) v.tight_examples.push_back(std::move(c));
    }
  }
  v.pass = true;
  return v;
}

TreeVerification verify_against_trees(const Quadruple& q, int r, int max_n,
                                      const SearchLimits& limits) {
  if (q.k < r) throw std::invalid_argument("verify_against_trees: k below claimed threshold r");
  auto trees = enumerate_gallai_trees(max_n, q.k, limits);
  return verify_against_trees(q, trees, max_n, limits);
}

}  // namespace listcrit
