#include <random>

#include "doctest.h"
#include "hilbert/format.hpp"
#include "test_util.hpp"

using namespace hilbert;
using namespace testutil;

TEST_CASE("sum of two geometric series over a common denominator") {
  auto f = one_over(4, {{{1, 0, 1, 0}, 1}}) + one_over(4, {{{0, 1, 0, 1}, 1}});
  auto expected = rf(4, {{{0, 0, 0, 0}, 2}, {{1, 0, 1, 0}, -1}, {{0, 1, 0, 1}, -1}},
                     {{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}});
  CHECK(f.same_form(expected));
}

TEST_CASE("series of 1/(1 - t1 t2^2) on a box") {
  auto s = series_box(one_over(2, {{{1, 2}, 1}}), {2, 4});
  std::map<Mono, Q> expected{{M({0, 0}), 1}, {M({1, 2}), 1}, {M({2, 4}), 1}};
  CHECK(s.coeffs == expected);
}

TEST_CASE("series rejects negative exponents") {
  CHECK_THROWS_AS(series_box(rf(1, {{{-1}, 1}}, {}), {3}), NegativeExponent);
  CHECK_THROWS_AS(series_box(one_over(2, {{{1, -1}, 1}}), {3, 3}), NegativeExponent);
}

TEST_CASE("box recurrence agrees with direct multiplication") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = random_standard(rng, 3);
    auto s = series_box(f, {5, 5, 5}, 5);
    auto naive = naive_series(f, 5);
    CHECK(s.coeffs == naive);
  }
}

TEST_CASE("root-of-unity average examples") {
  CHECK(equal(u_average(one_over(2, {{{1, 1}, 1}}), 2, 0), one_over(2, {{{1, 2}, 1}})));
  CHECK(equal(u_average(one_over(2, {{{2, 1}, 1}}), 2, 0), one_over(2, {{{1, 1}, 1}})));
}

TEST_CASE("root-of-unity average keeps exponents divisible by a") {
  std::mt19937 rng(5);
  for (int a = 2; a <= 4; ++a) {
    for (int trial = 0; trial < 20; ++trial) {
      auto f = random_standard(rng, 2, 3);
      auto u = u_average(f, a, 0);
      INFO("a=" << a << " f=" << to_text(f));
      REQUIRE(u.is_standard());
      const int D = 4;
      auto su = series_box(u, {D, 3 * D}, -1);
      auto sf = naive_series(f, 4 * D + 3 * D);
      for (int e0 = 0; e0 <= D; ++e0)
        for (int e1 = 0; e1 <= 3 * D; ++e1) {
          auto it = sf.find(M({a * e0, e1}));
          Q expect = it == sf.end() ? Q(0) : it->second;
          CHECK(su.coeff(M({e0, e1})) == expect);
        }
    }
  }
}

TEST_CASE("root-of-unity average of a term with negative exponents") {
  // s^-1 t / (1 - s^-2 t): only even s-exponents survive.
  auto f = rf(2, {{{-1, 1}, 1}}, {{{-2, 1}, 1}});
  auto u = u_average(f, 2, 0);
  // f = -s t^0 ... evaluate: s^-1 t sum_k s^-2k t^k has only odd s-exponents.
  CHECK(u.is_zero());
  auto g = rf(2, {{{-2, 1}, 1}}, {{{-2, 1}, 1}});
  CHECK(equal(u_average(g, 2, 0), rf(2, {{{-1, 1}, 1}}, {{{-1, 1}, 1}})));
}

TEST_CASE("reduction cancels common factors and is idempotent") {
  auto f = rf(1, {{{0}, 1}, {{2}, -1}}, {{{1}, 2}});
  CHECK(f.denominator().size() == 1);
  FactoredRatFun r = f;
  r.reduce();
  CHECK(r.same_form(rf(1, {{{0}, 1}, {{1}, 1}}, {{{1}, 1}}).reduce()));
  FactoredRatFun rr = r;
  rr.reduce();
  CHECK(rr.same_form(r));
}

TEST_CASE("laurent expansion at one") {
  auto e1 = laurent_at_one(one_over(1, {{{2}, 1}}), 3);
  CHECK(e1.leading_order == -1);
  CHECK(e1.coeffs == std::vector<Q>{Q(1, 2), Q(1, 4), Q(1, 8)});
  auto e2 = laurent_at_one(one_over(1, {{{3}, 1}, {{4}, 1}}), 2);
  CHECK(e2.leading_order == -2);
  CHECK(e2.coeffs == std::vector<Q>{Q(1, 12), Q(5, 24)});
  auto e3 = laurent_at_one_from(one_over(1, {{{3}, 1}, {{4}, 1}}), -3, 3);
  CHECK(e3.coeffs == std::vector<Q>{0, Q(1, 12), Q(5, 24)});
}

TEST_CASE("laurent expansion satisfies the defining identity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_standard(rng, 1, 4);
    std::uniform_int_distribution<int> sh(-3, 0);
    f *= FactoredRatFun::monomial(1, M({sh(rng)}));
    if (f.is_zero()) continue;
    const int K = 6;
    auto e = laurent_at_one(f, K);
    REQUIRE(e.coeffs[0] != 0);
    // D(1-u) * sum c_m u^(lo+m) == N(1-u) through order lo + deg + K - 1.
    auto as_u = [](const LaurentPoly& p, int shift) {
      std::map<int, Q> r;
      for (const auto& [m, c] : p.terms()) {
        int d = m[0] + shift;
        for (int j = 0; j <= d; ++j) r[j] += c * binomial(d, j) * (j % 2 ? -1 : 1);
      }
      return r;
    };
    int shift = -std::min(0, f.numerator().min_exp(0));
    LaurentPoly den = LaurentPoly::constant(1, 1);
    for (const auto& [m, k] : f.denominator()) den = den * LaurentPoly::one_minus_pow(1, m, k);
    auto N = as_u(f.numerator(), shift);
    auto D = as_u(den.shifted(M({shift})), 0);
    // compare D*(series) to N u^0 .. in degrees < lo + K + valuation(D)
    int vD = f.pole_multiplicity();
    std::map<int, Q> prod;
    for (const auto& [d, c] : D)
      for (int m = 0; m < K; ++m) prod[d + e.leading_order + m] += c * e.coeffs[m];
    for (int deg = e.leading_order + vD; deg < e.leading_order + vD + K; ++deg) {
      Q lhs = prod.count(deg) ? prod[deg] : Q(0);
      Q rhs = N.count(deg) ? N[deg] : Q(0);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("substitution and degeneracy") {
  auto f = one_over(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  auto g = substitute_diagonal(f);
  CHECK(g.same_form(one_over(1, {{{1}, 2}})));
  CHECK_THROWS_AS(substitute(one_over(2, {{{1, -1}, 1}}), {M({1}), M({1})}, 1), DegenerateSubstitution);
}

TEST_CASE("text and json forms") {
  auto f = rf(4, {{{0, 0, 0, 0}, 1}, {{2, 1, 2, 1}, -1}},
              {{{1, 0, 1, 0}, 1}, {{0, 1, 2, 0}, 1}, {{2, 0, 0, 1}, 1}, {{0, 1, 0, 1}, 1}});
  CHECK(to_text(f) ==
        "(1 - t1^2*t2*t3^2*t4) / ((1 - t1^2*t4)^1 * (1 - t1*t3)^1 * (1 - t2*t3^2)^1 * (1 - t2*t4)^1)");
  std::string j = to_json(f);
  CHECK(to_json(ratfun_from_json(j)) == j);
  auto g = rf(1, {{{0}, Q(1, 2)}, {{3}, Q(-7, 3)}}, {{{2}, 3}});
  CHECK(to_text(g) == "(1/2 - 7/3*t^3) / ((1 - t^2)^3)");
  CHECK(to_json(ratfun_from_json(to_json(g))) == to_json(g));
  CHECK(to_text(FactoredRatFun::zero(2)) == "0");
}
