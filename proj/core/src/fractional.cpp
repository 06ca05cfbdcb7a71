#include "listcrit/fractional.hpp"

#include <stdexcept>

namespace listcrit {

Rational AffineForm::eval(const std::vector<Rational>& x) const {
  Rational v = constant;
  for (size_t j = 0; j < coeffs.size(); ++j) v += coeffs[j] * x[j];
  return v;
}

std::string z_branch_name(ZBranch b) { return b == ZBranch::zero ? "zero" : "positive"; }

LinearProgram charnes_cooper(const FractionalProgram& fp) {
  LinearProgram lp;
  lp.variables = fp.variables;
  for (auto& v : lp.variables) v += "'";
  lp.variables.push_back("t");
  lp.nonnegative = fp.nonnegative;
  lp.nonnegative.push_back(true);
  lp.objective = fp.numerator.coeffs;
  lp.objective.push_back(fp.numerator.constant);
  lp.objective_constant = 0;
  for (const auto& row : fp.rows) {
    LpRow r;
    r.name = row.name;
    r.coeffs = row.coeffs;
    r.coeffs.push_back(-row.rhs);  // a.y - b t  rel  0
    r.rel = row.rel;
    r.rhs = 0;
    lp.rows.push_back(std::move(r));
  }
  LpRow den;
  den.name = "denominator";
  den.coeffs = fp.denominator.coeffs;
  den.coeffs.push_back(fp.denominator.constant);
  den.rel = Relation::eq;
  den.rhs = 1;
  lp.rows.push_back(std::move(den));
  return lp;
}

FractionalSolution solve_fractional(const FractionalProgram& fp) {
  LinearProgram lp = charnes_cooper(fp);
  LpSolution s = simplex_solve(lp);
  FractionalSolution out;
  out.status = s.status;
  out.lp = s;
  if (s.status != LpStatus::optimal) return out;
  Rational t = s.assignment.back();
  if (t == 0)
    throw std::runtime_error(
        "solve_fractional: scale variable vanished at the optimum; the fractional optimum is not "
        "attained at a finite point");
  out.assignment.assign(fp.variables.size(), Rational(0));
  for (size_t j = 0; j < fp.variables.size(); ++j) out.assignment[j] = s.assignment[j] / t;
  out.value = s.value;
  out.denominator_value = fp.denominator.eval(out.assignment);
  if (out.denominator_value <= 0)
    throw std::runtime_error("solve_fractional: nonpositive denominator at the optimum");
  return out;
}

FractionalProgram build_fractional_program(int k, Theorem thm, ZBranch branch) {
  if (thm == Theorem::closed_form || thm == Theorem::t7z0 || thm == Theorem::t5z0 ||
      thm == Theorem::t4z0)
    throw std::invalid_argument(
        "build_fractional_program: pick t7/t5/t4 and a z-branch; the z0 forms are the zero "
        "branch");
  int min_k = (thm == Theorem::t7) ? 7 : (thm == Theorem::t5) ? 5 : 4;
  if (k < min_k)
    throw std::invalid_argument("build_fractional_program: " + theorem_name(thm) +
                                " needs k >= " + std::to_string(min_k));
  const bool has_h = thm != Theorem::t4;
  const bool has_z = branch == ZBranch::positive;
  const int hw = (thm == Theorem::t7) ? 3 : (thm == Theorem::t5) ? 4 : 0;

  FractionalProgram fp;
  int ip = 0, ih = -1, iz = -1, iff;
  fp.variables.push_back("p");
  fp.nonnegative.push_back(true);
  if (has_h) {
    ih = static_cast<int>(fp.variables.size());
    fp.variables.push_back("h");
    fp.nonnegative.push_back(true);
  }
  if (has_z) {
    iz = static_cast<int>(fp.variables.size());
    fp.variables.push_back("z");
    fp.nonnegative.push_back(true);
  }
  iff = static_cast<int>(fp.variables.size());
  fp.variables.push_back("f");
  fp.nonnegative.push_back(false);
  const int nv = static_cast<int>(fp.variables.size());

  auto zero = [&] { return std::vector<Rational>(nv, Rational(0)); };

  // objective: excess = (2 - p - z/(k-1)) / (k+1 + hw*h - p - (k-2)z/(2(k-1)));
  // the zero branch drops z and replaces k+1 by k+2.
  fp.numerator.coeffs = zero();
  fp.numerator.coeffs[ip] = -1;
  if (has_z) fp.numerator.coeffs[iz] = Rational(-1, k - 1);
  fp.numerator.constant = 2;
  fp.denominator.coeffs = zero();
  fp.denominator.coeffs[ip] = -1;
  if (has_h) fp.denominator.coeffs[ih] = hw;
  if (has_z) fp.denominator.coeffs[iz] = -Rational(k - 2) / (2 * Rational(k - 1));
  fp.denominator.constant = has_z ? Rational(k + 1) : Rational(k + 2);

  auto add_row = [&](std::string name, std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    fp.rows.push_back(LpRow{std::move(name), std::move(coeffs), rel, rhs});
  };

  // (1) f >= (k-1)(1-p-h)  <=>  f + (k-1)p + (k-1)h >= k-1
  {
    auto c = zero();
    c[iff] = 1;
    c[ip] = k - 1;
    if (has_h) c[ih] = k - 1;
    add_row("cond1", std::move(c), Relation::ge, Rational(k - 1));
  }
  // (2) p >= (3 - z/2)/(k-2)  <=>  (k-2)p + z/2 >= 3
  {
    auto c = zero();
    c[ip] = k - 2;
    if (has_z) c[iz] = Rational(1, 2);
    add_row("cond2", std::move(c), Relation::ge, Rational(3));
  }
  // (3) p - h >= 5 - k
  {
    auto c = zero();
    c[ip] = 1;
    if (has_h) c[ih] = -1;
    add_row("cond3", std::move(c), Relation::ge, Rational(5 - k));
  }
  // (4) (k-2)p - h >= 2
  {
    auto c = zero();
    c[ip] = k - 2;
    if (has_h) c[ih] = -1;
    add_row("cond4", std::move(c), Relation::ge, Rational(2));
  }
  // (5) (k-1)p + (k-3)h + z >= k+1
  {
    auto c = zero();
    c[ip] = k - 1;
    if (has_h) c[ih] = k - 3;
    if (has_z) c[iz] = 1;
    add_row("cond5", std::move(c), Relation::ge, Rational(k + 1));
  }
  // clique-free coefficient: p >= max{2, 3-z}/(k-2); the max is 2 on the
  // positive branch (z >= 2) and 3 on the zero branch.
  {
    auto c = zero();
    c[ip] = k - 2;
    add_row("cliquefree_coeff", std::move(c), Relation::ge, Rational(has_z ? 2 : 3));
  }
  if (has_z) {
    auto lo = zero();
    lo[iz] = 1;
    add_row("z_lo", std::move(lo), Relation::ge, Rational(2));
    auto hi = zero();
    hi[iz] = 1;
    add_row("z_hi", std::move(hi), Relation::le, Rational(6 * (k - 1), k));
  }
  // sign condition dropping the c* term
  {
    auto c = zero();
    c[iff] = 1;
    if (has_h && thm == Theorem::t7) c[ih] = 2;
    if (has_h && thm == Theorem::t5) c[ih] = 1;
    add_row("sign", std::move(c), Relation::le, Rational(0));
  }
  return fp;
}

namespace {

Quadruple quadruple_from_assignment(int k, Theorem thm, ZBranch branch,
                                    const std::vector<Rational>& x) {
  Quadruple q;
  q.k = k;
  q.family = Family::custom;
  const bool has_h = thm != Theorem::t4;
  const bool has_z = branch == ZBranch::positive;
  size_t i = 0;
  q.p = x[i++];
  q.h = has_h ? x[i++] : Rational(0);
  q.z = has_z ? x[i++] : Rational(0);
  q.f = x[i++];
  return q;
}

}  // namespace

OptimizeResult optimize_quadruple(int k, Theorem thm) {
  OptimizeResult out;
  std::optional<std::pair<ZBranch, FractionalSolution>> best;
  for (ZBranch branch : {ZBranch::positive, ZBranch::zero}) {
    FractionalSolution s = solve_fractional(build_fractional_program(k, thm, branch));
    auto& slot = (branch == ZBranch::zero) ? out.zero_solution : out.positive_solution;
    slot = s;
    if (s.status != LpStatus::optimal) continue;
    if (!best || s.value > best->second.value) best = {branch, s};
  }
  if (!best) throw std::runtime_error("optimize_quadruple: both z-branches infeasible");

  out.branch = best->first;
  out.quadruple = quadruple_from_assignment(k, thm, best->first, best->second.assignment);
  auto report = check_sufficient_conditions(out.quadruple);
  if (!report.pass)
    throw std::runtime_error("optimize_quadruple: witness fails the sufficient conditions");
  Theorem eval_thm = thm;
  if (best->first == ZBranch::zero)
    eval_thm = (thm == Theorem::t7) ? Theorem::t7z0
               : (thm == Theorem::t5) ? Theorem::t5z0
                                      : Theorem::t4z0;
  out.bound = bound_from_theorem(out.quadruple, eval_thm);
  if (out.bound.excess != best->second.value)
    throw std::runtime_error("optimize_quadruple: bound does not reproduce the LP value");
  return out;
}

}  // namespace listcrit
