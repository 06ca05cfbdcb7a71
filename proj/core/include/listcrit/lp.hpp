#pragma once

#include "listcrit/rational.hpp"

#include <string>
#include <vector>

namespace listcrit {

enum class Relation { le, ge, eq };

struct LpRow {
  std::string name;
  std::vector<Rational> coeffs;
  Relation rel = Relation::le;
  Rational rhs;
};

/// maximize objective . x + objective_constant subject to the rows;
/// x_j >= 0 where nonnegative[j], otherwise free.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<bool> nonnegative;
  std::vector<Rational> objective;
  Rational objective_constant;
  std::vector<LpRow> rows;
};

enum class LpStatus { optimal, infeasible, unbounded };
std::string lp_status_name(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;                    // includes objective_constant
  std::vector<Rational> assignment;  // one value per original variable
  std::vector<int> basis;            // basic columns of the standard-form tableau
};

/// Exact two-phase simplex with Bland's anti-cycling rule. Deterministic for a
/// given row/column order; every returned optimum satisfies all rows exactly.
LpSolution simplex_solve(const LinearProgram& lp);

/// Plain-text dump of the program (variables, objective, rows).
std::string to_tableau_text(const LinearProgram& lp);

/// Exact residual check: true iff assignment satisfies every row.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& assignment);

}  // namespace listcrit
