#pragma once

#include "listcrit/bounds.hpp"
#include "listcrit/lp.hpp"
#include "listcrit/quadruple.hpp"

#include <optional>
#include <string>
#include <vector>

namespace listcrit {

struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;
  Rational eval(const std::vector<Rational>& x) const;
};

/// maximize numerator(x)/denominator(x) subject to rows; the denominator is
/// assumed positive on the feasible region (verified at any returned optimum).
struct FractionalProgram {
  std::vector<std::string> variables;
  std::vector<bool> nonnegative;
  AffineForm numerator, denominator;
  std::vector<LpRow> rows;
};

/// Charnes–Cooper transformation: scaled variables y = t*x plus the scalar
/// t >= 0, constraints homogenized, denominator pinned to 1, objective the
/// scaled numerator. Optimal values of the two programs coincide; the original
/// variables recover as y/t.
LinearProgram charnes_cooper(const FractionalProgram& fp);

struct FractionalSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> assignment;
  Rational denominator_value;  // at the assignment; checked positive
  LpSolution lp;               // the transformed program's certificate
};

/// Solves via charnes_cooper + simplex_solve; throws if the scale variable
/// vanishes at the optimum (no bounded witness to recover).
FractionalSolution solve_fractional(const FractionalProgram& fp);

enum class ZBranch { zero, positive };
std::string z_branch_name(ZBranch b);

/// The per-k quadruple optimization as a linear-fractional program.
/// Objective: the theorem's asymptotic excess. Constraints: the sufficient
/// conditions (1)-(5), the clique-free coefficient, the z-domain of the
/// branch (z = 0, or 2 <= z <= 6(k-1)/k), and the sign condition that drops
/// the c* term. Variables: p (and h for t7/t5) nonnegative, f free, z present
/// only on the positive branch.
FractionalProgram build_fractional_program(int k, Theorem thm, ZBranch branch);

struct OptimizeResult {
  Quadruple quadruple;  // the winning witness (family = custom)
  BoundResult bound;    // same value as the LP optimum, via bound_from_theorem
  ZBranch branch = ZBranch::positive;
  std::optional<FractionalSolution> zero_solution, positive_solution;
};

/// Solves both z-branches and returns the larger excess. The witness is
/// re-checked: sufficient conditions pass and bound_from_theorem reproduces
/// the LP value exactly. Throws if both branches are infeasible.
OptimizeResult optimize_quadruple(int k, Theorem thm);

}  // namespace listcrit
