#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace hilbert;
using namespace testutil;

TEST_CASE("monomial arithmetic and orientation") {
  Mono a = M({1, -2, 0});
  CHECK(a.lex_positive());
  CHECK_FALSE((-a).lex_positive());
  CHECK_FALSE(Mono{}.lex_positive());
  CHECK((a + a) == a.scaled(2));
  CHECK(a.total() == -1);
}

TEST_CASE("one_minus_pow expands binomially") {
  auto p = LaurentPoly::one_minus_pow(2, M({1, 1}), 3);
  CHECK(p == poly(2, {{{0, 0}, 1}, {{1, 1}, -3}, {{2, 2}, 3}, {{3, 3}, -1}}));
}

TEST_CASE("exact division by (1 - m) recovers the cofactor") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p(3);
    for (int t = 0; t < 5; ++t) p.add_term(M({ex(rng), ex(rng), ex(rng)}), co(rng));
    Mono m = M({ex(rng), ex(rng), ex(rng)});
    if (m.is_zero()) continue;
    LaurentPoly prod = p * LaurentPoly::one_minus_pow(3, m, 1);
    auto q = prod.div_one_minus(m);
    REQUIRE(q.has_value());
    CHECK(*q == p);
    auto q2 = prod.div_one_minus(-m);
    REQUIRE(q2.has_value());
    CHECK((*q2 * LaurentPoly::one_minus_pow(3, -m, 1)) == prod);
  }
}

TEST_CASE("division by a non-factor is rejected") {
  auto p = poly(2, {{{0, 0}, 1}, {{1, 0}, 1}});
  CHECK_FALSE(p.div_one_minus(M({1, 0})).has_value());
  CHECK_FALSE(p.div_one_minus(M({0, 1})).has_value());
  CHECK(p.div_one_minus(M({2, 0})) == std::nullopt);
}

TEST_CASE("substitution maps exponents linearly") {
  auto p = poly(2, {{{1, 2}, 3}, {{-1, 0}, 1}});
  auto r = p.substituted({M({1, 1}), M({0, 1})}, 2);
  CHECK(r == poly(2, {{{1, 3}, 3}, {{-1, -1}, 1}}));
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(3, 5) == 0);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(3, -2) == -2);
  CHECK(gcd_all({-4, 6, 10}) == 2);
}
