#include "listcrit/bounds.hpp"

#include <doctest.h>

using namespace listcrit;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("bound_from_theorem: pinned excesses") {
  CHECK(bound_from_theorem(evaluate_family(Family::gallai7up, 7), Theorem::t7).excess ==
        rat(88, 679));
  CHECK(bound_from_theorem(evaluate_family(Family::r, 4), Theorem::t4).excess == rat(1, 10));
  CHECK(bound_from_theorem(evaluate_family(Family::gallai, 4), Theorem::t4z0).excess ==
        rat(1, 13));
  CHECK(bound_from_theorem(evaluate_family(Family::gallai6up, 6), Theorem::t5).excess ==
        rat(93, 766));
}

TEST_CASE("bound_from_theorem: preconditions") {
  CHECK_THROWS_AS(bound_from_theorem(evaluate_family(Family::gallai7up, 7), Theorem::t7z0),
                  std::invalid_argument);  // z != 0
  CHECK_THROWS_AS(bound_from_theorem(evaluate_family(Family::gallai, 5), Theorem::t4),
                  std::invalid_argument);  // z = 0 under a non-z0 form
  CHECK_THROWS_AS(bound_from_theorem(evaluate_family(Family::cr, 5), Theorem::t4z0),
                  std::invalid_argument);  // h != 0
  SUBCASE("k below the form's threshold") {
    auto q = evaluate_family(Family::r, 5);
    CHECK_THROWS_AS(bound_from_theorem(q, Theorem::t7), std::invalid_argument);
  }
  SUBCASE("sign condition violated") {
    Quadruple q;
    q.k = 7;
    q.p = rat(1);
    q.h = rat(1);
    q.z = rat(2);
    q.f = rat(0);  // 2h + f = 2 > 0
    CHECK_THROWS_AS(bound_from_theorem(q, Theorem::t7), std::invalid_argument);
  }
}

TEST_CASE("closed form equals the t7 evaluation of gallai7up for 7 <= k <= 50") {
  for (int k = 7; k <= 50; ++k)
    CHECK(main_theorem_closed_form(k).excess ==
          bound_from_theorem(evaluate_family(Family::gallai7up, k), Theorem::t7).excess);
  CHECK(main_theorem_closed_form(7).excess == rat(88, 679));
  CHECK(main_theorem_closed_form(6).excess == rat(93, 766));
  CHECK(main_theorem_closed_form(15).excess == rat(3888, 41806));
  CHECK_THROWS_AS(main_theorem_closed_form(5), std::invalid_argument);
}

TEST_CASE("best known bound") {
  CHECK(best_known_bound(6).excess == rat(93, 766));
  CHECK(best_known_bound(5).excess == rat(2, 17));
  CHECK(best_known_bound(4).excess == rat(1, 10));
  CHECK(best_known_bound(9).excess == rat(54, 445));
  CHECK(best_known_bound(9).decimal() == "8.1213");
  SUBCASE("t5 and t4 agree on (1,0,2,0) at k=5") {
    auto q = evaluate_family(Family::r, 5);
    CHECK(bound_from_theorem(q, Theorem::t5).excess ==
          bound_from_theorem(q, Theorem::t4).excess);
  }
}

TEST_CASE("gallai column equals (k-3)/(k^2-3)") {
  for (int k = 4; k <= 50; ++k)
    CHECK(bound_from_theorem(evaluate_family(Family::gallai, k), Theorem::t4z0).excess ==
          Rational(k - 3, static_cast<long long>(k) * k - 3));
}

TEST_CASE("monotone improvement of the new bound") {
  {
    Rational here6 = best_known_bound(6).excess;
    CHECK(here6 > bound_from_theorem(evaluate_family(Family::cr, 6), Theorem::t5z0).excess);
    CHECK(here6 > bound_from_theorem(evaluate_family(Family::r, 6), Theorem::t4).excess);
    CHECK(here6 > bound_from_theorem(evaluate_family(Family::gallai, 6), Theorem::t4z0).excess);
  }
  for (int k = 7; k <= 50; ++k) {
    Rational here = best_known_bound(k).excess;
    CHECK(here > bound_from_theorem(evaluate_family(Family::cr, k), Theorem::t7z0).excess);
    CHECK(here > bound_from_theorem(evaluate_family(Family::r, k), Theorem::t4).excess);
  }
}

TEST_CASE("full form never falls below the asymptotic form") {
  for (int k : {5, 6, 7, 9, 12}) {
    auto q = best_known_bound(k).quadruple;
    Theorem thm = k >= 7 ? Theorem::t7 : (k >= 6 ? Theorem::t5 : Theorem::t5);
    auto asym = bound_from_theorem(q, thm);
    for (long long n : {8, 20, 100})
      for (long long cs : {0, 1, 2, 3}) {
        auto full = bound_from_theorem(q, thm, FullFormContext{n, cs});
        CHECK(full.excess >= asym.excess);
      }
  }
}

TEST_CASE("table truncation matches the printed digits") {
  auto rows = reproduce_table({4, 5, 6, 7, 8, 9, 10, 15, 20});
  // the k=20 row: the exact value 19.07629... truncates to 19.0762
  CHECK(rows.back().here.decimal() == "19.0762");
  CHECK(rows.back().here.excess > rat(762, 10000));
  CHECK(rows[1].cr);
  CHECK(rows[1].cr->decimal() == "4.1000");
  CHECK_FALSE(rows[0].cr);               // no cr column at k=4
  CHECK_FALSE(rows[0].ks_historical);    // printed as ---
  CHECK(rows[5].ks_historical);          // k=9
  std::string text = render_table_text(rows);
  CHECK(text.find("19.0762") != std::string::npos);
  CHECK(text.find("---") != std::string::npos);
}
