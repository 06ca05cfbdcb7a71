#include "listcrit/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace listcrit {

std::string lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Standard-form tableau: maximize c.y with A y = b, y >= 0, b >= 0.
// Dense rational arithmetic; rows/columns are tiny for the programs here.
struct Tableau {
  int m, n;                          // rows, columns
  std::vector<std::vector<Rational>> a;  // m x n
  std::vector<Rational> b;           // m
  std::vector<Rational> c;           // n (phase-2 objective)
  std::vector<int> basis;            // basis[i] = column basic in row i

  void pivot(int row, int col) {
    Rational piv = a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] /= piv;
    b[row] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational factor = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= factor * a[row][j];
      b[i] -= factor * b[row];
    }
    basis[row] = col;
  }

  // Bland's rule on the given objective. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& obj, Rational& value) {
    for (;;) {
      std::vector<Rational> reduced = obj;
      Rational z = 0;
      for (int i = 0; i < m; ++i) {
        Rational cb = obj[basis[i]];
        if (cb == 0) continue;
        z += cb * b[i];
        for (int j = 0; j < n; ++j) reduced[j] -= cb * a[i][j];
      }
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (reduced[j] > 0) {
          enter = j;
          break;
        }
      if (enter == -1) {
        value = z;
        return true;
      }
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = b[i] / a[i][enter];
        if (leave == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& assignment) {
  for (size_t j = 0; j < lp.variables.size(); ++j)
    if (lp.nonnegative[j] && assignment[j] < 0) return false;
  for (const auto& row : lp.rows) {
    Rational lhs = 0;
    for (size_t j = 0; j < row.coeffs.size(); ++j) lhs += row.coeffs[j] * assignment[j];
    switch (row.rel) {
      case Relation::le:
        if (lhs > row.rhs) return false;
        break;
      case Relation::ge:
        if (lhs < row.rhs) return false;
        break;
      case Relation::eq:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

LpSolution simplex_solve(const LinearProgram& lp) {
  const int nv = static_cast<int>(lp.variables.size());
  const int mr = static_cast<int>(lp.rows.size());
  if (static_cast<int>(lp.nonnegative.size()) != nv ||
      static_cast<int>(lp.objective.size()) != nv)
    throw std::invalid_argument("simplex_solve: inconsistent dimensions");
  for (const auto& row : lp.rows)
    if (static_cast<int>(row.coeffs.size()) != nv)
      throw std::invalid_argument("simplex_solve: row width mismatch");

  // Column layout: for each variable a +column, plus a -column when free;
  // then one slack/surplus per inequality row; then one artificial per row.
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int cols = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[j] = cols++;
    if (!lp.nonnegative[j]) neg_col[j] = cols++;
  }
  std::vector<int> slack_col(mr, -1);
  for (int i = 0; i < mr; ++i)
    if (lp.rows[i].rel != Relation::eq) slack_col[i] = cols++;
  int art_base = cols;
  cols += mr;

  Tableau t;
  t.m = mr;
  t.n = cols;
  t.a.assign(mr, std::vector<Rational>(cols, Rational(0)));
  t.b.assign(mr, Rational(0));
  t.basis.assign(mr, -1);

  for (int i = 0; i < mr; ++i) {
    const auto& row = lp.rows[i];
    // normalize to b >= 0 so artificials start feasible
    int sign = 1;
    Rational rhs = row.rhs;
    if (rhs < 0) sign = -1;
    for (int j = 0; j < nv; ++j) {
      Rational cj = row.coeffs[j] * sign;
      t.a[i][pos_col[j]] = cj;
      if (neg_col[j] >= 0) t.a[i][neg_col[j]] = -cj;
    }
    t.b[i] = rhs * sign;
    if (slack_col[i] >= 0) {
      Rational s = (row.rel == Relation::le) ? Rational(1) : Rational(-1);
      t.a[i][slack_col[i]] = s * sign;
    }
    t.a[i][art_base + i] = 1;
    t.basis[i] = art_base + i;
  }

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(cols, Rational(0));
  for (int i = 0; i < mr; ++i) phase1[art_base + i] = -1;
  Rational p1value;
  if (!t.optimize(phase1, p1value))
    throw std::runtime_error("simplex_solve: phase 1 unbounded (internal error)");
  if (p1value < 0) {
    LpSolution sol;
    sol.status = LpStatus::infeasible;
    return sol;
  }
  // Drive out any artificial still basic at zero; drop redundant rows by
  // pivoting on any nonzero non-artificial entry when possible.
  for (int i = 0; i < mr; ++i) {
    if (t.basis[i] < art_base) continue;
    int col = -1;
    for (int j = 0; j < art_base; ++j)
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) t.pivot(i, col);
    // else: the row is all-zero over real columns (redundant); harmless.
  }

  // Phase 2: zero the non-basic artificial columns so they can never re-enter.
  // An artificial still basic after the drive-out sits in a row that is zero
  // on every real column (a redundant constraint), so that row is inert.
  std::vector<Rational> phase2(cols, Rational(0));
  for (int j = 0; j < nv; ++j) {
    phase2[pos_col[j]] = lp.objective[j];
    if (neg_col[j] >= 0) phase2[neg_col[j]] = -lp.objective[j];
  }
  for (int i = 0; i < mr; ++i)
    for (int j = art_base; j < cols; ++j)
      if (t.basis[i] != j) t.a[i][j] = 0;

  Rational p2value;
  if (!t.optimize(phase2, p2value)) {
    LpSolution sol;
    sol.status = LpStatus::unbounded;
    return sol;
  }

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.assignment.assign(nv, Rational(0));
  std::vector<Rational> col_value(cols, Rational(0));
  for (int i = 0; i < mr; ++i) col_value[t.basis[i]] = t.b[i];
  for (int j = 0; j < nv; ++j) {
    sol.assignment[j] = col_value[pos_col[j]];
    if (neg_col[j] >= 0) sol.assignment[j] -= col_value[neg_col[j]];
  }
  sol.value = p2value + lp.objective_constant;
  sol.basis = t.basis;
  return sol;
}

std::string to_tableau_text(const LinearProgram& lp) {
  std::ostringstream os;
  os << "maximize ";
  bool first = true;
  for (size_t j = 0; j < lp.variables.size(); ++j) {
    if (lp.objective[j] == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_fraction_string(lp.objective[j]) << ")*" << lp.variables[j];
    first = false;
  }
  if (lp.objective_constant != 0)
    os << (first ? "" : " + ") << "(" << to_fraction_string(lp.objective_constant) << ")";
  os << "\nsubject to\n";
  for (const auto& row : lp.rows) {
    os << "  " << row.name << ": ";
    first = true;
    for (size_t j = 0; j < row.coeffs.size(); ++j) {
      if (row.coeffs[j] == 0) continue;
      if (!first) os << " + ";
      os << "(" << to_fraction_string(row.coeffs[j]) << ")*" << lp.variables[j];
      first = false;
    }
    if (first) os << "0";
    os << (row.rel == Relation::le ? " <= " : row.rel == Relation::ge ? " >= " : " = ");
    os << to_fraction_string(row.rhs) << "\n";
  }
  for (size_t j = 0; j < lp.variables.size(); ++j)
    if (lp.nonnegative[j]) os << "  " << lp.variables[j] << " >= 0\n";
  return os.str();
}

}  // namespace listcrit
