#pragma once

#include "listcrit/quadruple.hpp"
#include "listcrit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace listcrit {

enum class Theorem { t7, t5, t4, t7z0, t5z0, t4z0, closed_form };

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_string(const std::string& name);

struct BoundResult {
  int k = 0;
  Theorem theorem = Theorem::closed_form;
  Quadruple quadruple;
  Rational excess;  // the bound is (k-1) + excess
  Rational bound() const { return Rational(k - 1) + excess; }
  /// Display rendering, truncated (never rounded) to four decimals.
  std::string decimal() const { return to_decimal_truncated(bound(), 4); }
};

/// Per-graph data enabling the full (non-asymptotic) bound.
struct FullFormContext {
  long long order = 0;   // |G|
  long long c_star = 0;  // c*(L)
};

/// Average-degree excess over k-1 guaranteed for non-complete list-critical
/// graphs by the counting argument, in its asymptotic form:
///   t7:  (2 - p - z/(k-1)) / (k+1 + 3h - p - (k-2)z/(2(k-1)))   for k >= 7
///   t5:  4h in place of 3h                                      for k >= 5
///   t4:  h = 0 required                                         for k >= 4
/// z0 variants take z = 0 and replace k+1 by k+2 in the denominator.
/// Preconditions enforced exactly: theorem/k compatibility; 2 <= z <= 6(k-1)/k
/// for the non-z0 forms (z = 0 for the z0 forms); and the sign condition that
/// makes dropping the c* term valid (2h+f <= 0 for t7, h+f <= 0 for t5,
/// f <= 0 for t4). With a FullFormContext the dropped term is restored.
BoundResult bound_from_theorem(const Quadruple& q, Theorem thm,
                               const std::optional<FullFormContext>& ctx = std::nullopt);

/// (k-3)^2 (2k-3) / (k^4 - 2k^3 - 11k^2 + 28k - 14) for k >= 7; 93/766 at k = 6.
BoundResult main_theorem_closed_form(int k);

/// Best registered configuration: t7(gallai7up) for k >= 7, t5(gallai6up) at
/// k = 6, and (1,0,2,0) under t5/t4 at k = 5 / k = 4.
BoundResult best_known_bound(int k);

struct TableRow {
  int k = 0;
  BoundResult gallai;               // t4z0(gallai)
  std::optional<BoundResult> cr;    // t5z0(cr) for k in {5,6}, t7z0(cr) for k >= 7
  BoundResult r;                    // t4(r)
  BoundResult here;                 // best_known_bound
  std::optional<Rational> ks_historical;  // echoed constants, never recomputed
  std::optional<Rational> kr_historical;
};

std::vector<TableRow> reproduce_table(const std::vector<int>& ks);
std::string render_table_text(const std::vector<TableRow>& rows);

/// Printed historical column values where available (display only).
std::optional<Rational> ks_historical_bound(int k);
std::optional<Rational> kr_historical_bound(int k);

}  // namespace listcrit
