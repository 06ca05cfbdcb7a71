#include "listcrit/bounds.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace listcrit {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t7: return "T7";
    case Theorem::t5: return "T5";
    case Theorem::t4: return "T4";
    case Theorem::t7z0: return "T7z0";
    case Theorem::t5z0: return "T5z0";
    case Theorem::t4z0: return "T4z0";
    case Theorem::closed_form: return "closed-form";
  }
  return "?";
}

std::optional<Theorem> theorem_from_string(const std::string& name) {
  for (Theorem t : {Theorem::t7, Theorem::t5, Theorem::t4, Theorem::t7z0, Theorem::t5z0,
                    Theorem::t4z0, Theorem::closed_form})
    if (theorem_name(t) == name) return t;
  return std::nullopt;
}

namespace {

int theorem_min_k(Theorem t) {
  switch (t) {
    case Theorem::t7:
    case Theorem::t7z0: return 7;
    case Theorem::t5:
    case Theorem::t5z0: return 5;
    default: return 4;
  }
}

bool is_z0(Theorem t) { return t == Theorem::t7z0 || t == Theorem::t5z0 || t == Theorem::t4z0; }

// Multiplier of h in the denominator: 3 for the t7 forms, 4 for t5, none for t4.
int h_weight(Theorem t) {
  switch (t) {
    case Theorem::t7:
    case Theorem::t7z0: return 3;
    case Theorem::t5:
    case Theorem::t5z0: return 4;
    default: return 0;
  }
}

// Coefficient of c*(L) in the dropped term: 2h+f, h+f, or f.
Rational c_star_coefficient(const Quadruple& q, Theorem t) {
  switch (t) {
    case Theorem::t7:
    case Theorem::t7z0: return 2 * q.h + q.f;
    case Theorem::t5:
    case Theorem::t5z0: return q.h + q.f;
    default: return q.f;
  }
}

}  // namespace

BoundResult bound_from_theorem(const Quadruple& q, Theorem thm,
                               const std::optional<FullFormContext>& ctx) {
  if (thm == Theorem::closed_form)
    throw std::invalid_argument("bound_from_theorem: closed-form is not a counting form");
  const int k = q.k;
  if (k < theorem_min_k(thm))
    throw std::invalid_argument("bound_from_theorem: " + theorem_name(thm) + " needs k >= " +
                                std::to_string(theorem_min_k(thm)));
  if (h_weight(thm) == 0 && q.h != 0)
    throw std::invalid_argument("bound_from_theorem: " + theorem_name(thm) + " requires h = 0");
  if (is_z0(thm)) {
    if (q.z != 0)
      throw std::invalid_argument("bound_from_theorem: " + theorem_name(thm) + " requires z = 0");
  } else {
    if (!(q.z >= 2 && q.z <= Rational(6 * (k - 1), k)))
      throw std::invalid_argument("bound_from_theorem: z outside [2, 6(k-1)/k]");
  }
  Rational sc = c_star_coefficient(q, thm);
  if (sc > 0)
    throw std::invalid_argument(
        "bound_from_theorem: sign condition violated; dropping the c* term would not yield a "
        "valid lower bound");

  Rational num, den;
  if (is_z0(thm)) {
    num = Rational(2) - q.p;
    den = Rational(k + 2) + Rational(h_weight(thm)) * q.h - q.p;
  } else {
    num = Rational(2) - q.p - q.z / Rational(k - 1);
    den = Rational(k + 1) + Rational(h_weight(thm)) * q.h - q.p -
          Rational(k - 2) * q.z / (2 * Rational(k - 1));
  }
  if (ctx) {
    if (ctx->order <= 0) throw std::invalid_argument("bound_from_theorem: |G| must be positive");
    Rational zterm = is_z0(thm) ? Rational(0) : q.z / Rational(k - 1);
    num += (zterm - sc * Rational(ctx->c_star)) / Rational(ctx->order);
  }
  if (den <= 0) throw std::invalid_argument("bound_from_theorem: nonpositive denominator");

  BoundResult r;
  r.k = k;
  r.theorem = thm;
  r.quadruple = q;
  r.excess = num / den;
  return r;
}

BoundResult main_theorem_closed_form(int k) {
  if (k < 6) throw std::invalid_argument("main_theorem_closed_form: k >= 6 required");
  BoundResult r;
  r.k = k;
  r.theorem = Theorem::closed_form;
  if (k == 6) {
    r.excess = Rational(93, 766);
    r.quadruple = evaluate_family(Family::gallai6up, 6);
  } else {
    long long kk = k;
    r.excess = Rational(BigInt((kk - 3) * (kk - 3) * (2 * kk - 3)),
                        BigInt(kk * kk * kk * kk - 2 * kk * kk * kk - 11 * kk * kk + 28 * kk - 14));
    r.quadruple = evaluate_family(Family::gallai7up, k);
  }
  return r;
}

BoundResult best_known_bound(int k) {
  if (k < 4) throw std::invalid_argument("best_known_bound: k >= 4 required");
  if (k >= 7) return bound_from_theorem(evaluate_family(Family::gallai7up, k), Theorem::t7);
  if (k == 6) return bound_from_theorem(evaluate_family(Family::gallai6up, 6), Theorem::t5);
  if (k == 5) return bound_from_theorem(evaluate_family(Family::r, 5), Theorem::t5);
  return bound_from_theorem(evaluate_family(Family::r, 4), Theorem::t4);
}

std::optional<Rational> ks_historical_bound(int k) {
  static const std::map<int, Rational> table = {
      {9, Rational(80838, 10000)},
      {10, Rational(90793, 10000)},
      {15, Rational(140610, 10000)},
      {20, Rational(190490, 10000)},
  };
  auto it = table.find(k);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> kr_historical_bound(int k) {
  static const std::map<int, Rational> table = {
      {5, Rational(40984, 10000)},  {6, Rational(51053, 10000)},  {7, Rational(61149, 10000)},
      {8, Rational(71128, 10000)},  {9, Rational(81094, 10000)},  {10, Rational(91055, 10000)},
      {15, Rational(140864, 10000)}, {20, Rational(190719, 10000)},
  };
  auto it = table.find(k);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<TableRow> reproduce_table(const std::vector<int>& ks) {
  std::vector<TableRow> rows;
  for (int k : ks) {
    if (k < 4) throw std::invalid_argument("reproduce_table: k >= 4 required");
    TableRow row;
    row.k = k;
    row.gallai = bound_from_theorem(evaluate_family(Family::gallai, k), Theorem::t4z0);
    if (k >= 5)
      row.cr = bound_from_theorem(evaluate_family(Family::cr, k),
                                  k >= 7 ? Theorem::t7z0 : Theorem::t5z0);
    row.r = bound_from_theorem(evaluate_family(Family::r, k), Theorem::t4);
    row.here = best_known_bound(k);
    row.ks_historical = ks_historical_bound(k);
    row.kr_historical = kr_historical_bound(k);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "k" << std::setw(10) << "Gallai" << std::setw(10) << "KS"
     << std::setw(10) << "KR" << std::setw(10) << "CR" << std::setw(10) << "R" << std::setw(10)
     << "Here" << "\n";
  for (const auto& row : rows) {
    auto dec = [](const std::optional<Rational>& x) {
      return x ? to_decimal_truncated(*x, 4) : std::string("---");
    };
    os << std::left << std::setw(4) << row.k << std::setw(10) << row.gallai.decimal()
       << std::setw(10) << dec(row.ks_historical) << std::setw(10) << dec(row.kr_historical)
       << std::setw(10) << (row.cr ? row.cr->decimal() : std::string("---")) << std::setw(10)
       << row.r.decimal() << std::setw(10) << row.here.decimal() << "\n";
  }
  return os.str();
}

}  // namespace listcrit
