#include "doctest.h"
#include "hilbert/format.hpp"
#include "hilbert/o2.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/s1.hpp"
#include "test_util.hpp"

using namespace hilbert;
using namespace testutil;

namespace {

std::vector<O2Target> targets(int bmax) {
  std::vector<O2Target> r{O2Target::trivial(), O2Target::det()};
  for (int b = 1; b <= bmax; ++b) r.push_back(O2Target::tau(b));
  return r;
}

}  // namespace

TEST_CASE("o2 named examples") {
  O2Rep r{{1}, 0};
  CHECK(equal(hilb_o2_max(r, O2Target::trivial()), one_over(1, {{{2}, 1}})));
  CHECK(hilb_o2_max(r, O2Target::det()).is_zero());
  CHECK(equal(hilb_o2_max(r, O2Target::tau(1)), rf(1, {{{1}, 1}}, {{{2}, 1}})));
  for (int a = 1; a <= 4; ++a) CHECK(equal(hilb_o2_univariate(O2Rep{{a}, 0}, O2Target::tau(a)), rf(1, {{{1}, 1}}, {{{2}, 1}})));
  auto u = hilb_o2_univariate(O2Rep{{1}, 1}, O2Target::trivial());
  auto expect = rf(1, {{{0}, Q(1, 2)}}, {{{1}, 1}, {{2}, 1}}) +
                FactoredRatFun(LaurentPoly::constant(1, Q(1, 2)), FactoredRatFun::Denominator{{M({2}), 1}}) *
                    inverse_one_plus(1, M({1}));
  CHECK(equal(u, expect));
  CHECK(hilb_o2_max(O2Rep{{2}, 0}, O2Target::tau(1)).is_zero());
}

TEST_CASE("o2 oracle equivalence on small reps") {
  std::vector<O2Rep> reps{{{1}, 0}, {{1}, 1}, {{2}, 1}, {{1, 2}, 0}, {{1, 1}, 1}, {{3}, 2}, {{}, 1}, {{}, 2}, {{2, 3}, 1}};
  for (const auto& rep : reps) {
    for (const auto& w : targets(4)) {
      INFO("rep n=" << rep.n() << " d=" << rep.d << " W=" << w.name());
      auto h = hilb_o2_max(rep, w);
      REQUIRE(h.is_standard());
      std::vector<int> bounds(rep.nvars(), 6);
      auto o = oracle_series([&](const std::vector<int>& d) { return oracle_o2_dim(rep, w, d); }, bounds, 6);
      CHECK(series_box(h, bounds, 6) == o);
      CHECK(equal(hilb_o2_univariate(rep, w), substitute_diagonal(h)));
    }
  }
}

TEST_CASE("tau additivity over b and -b") {
  O2Rep rep{{1, 2}, 1};
  for (int b = 1; b <= 3; ++b) {
    WeightVector a{-1, -2, 1, 2};
    std::vector<Mono> img{M({1, 0, 0}), M({0, 1, 0}), M({1, 0, 0}), M({0, 1, 0})};
    auto plus = hilb_s1_graded(a, b, img, 3);
    auto minus = hilb_s1_graded(a, -b, img, 3);
    FactoredRatFun det(LaurentPoly::constant(3, 1), FactoredRatFun::Denominator{{M({0, 0, 1}), 1}});
    auto sum = (plus + minus) * Q(1, 2) * det;
    CHECK(equal(hilb_o2_max(rep, O2Target::tau(b)), sum));
  }
}

TEST_CASE("o2 cotangent and on-shell") {
  O2Rep r{{1}, 0};
  auto c = hilb_o2_cotangent_bigraded(r, O2Target::trivial());
  CHECK(equal(c, substitute(c, {M({0, 1}), M({1, 0})}, 2)));
  for (const auto& rep : std::vector<O2Rep>{{{1}, 0}, {{1, 2}, 0}, {{1}, 1}, {{2}, 1}}) {
    O2Rep doubled{rep.alphas, 2 * rep.d};
    doubled.alphas.insert(doubled.alphas.end(), rep.alphas.begin(), rep.alphas.end());
    for (const auto& w : targets(2)) {
      auto f = hilb_o2_cotangent_bigraded(rep, w);
      std::vector<Mono> img;
      for (int i = 0; i < rep.n(); ++i) img.push_back(M({1, 0}));
      for (int i = 0; i < rep.n(); ++i) img.push_back(M({0, 1}));
      for (int j = 0; j < rep.d; ++j) img.push_back(M({1, 0}));
      for (int j = 0; j < rep.d; ++j) img.push_back(M({0, 1}));
      CHECK(equal(f, substitute(hilb_o2_max(doubled, w), img, 2)));
      CHECK(equal(substitute(f, {M({1}), M({1})}, 1), hilb_o2_univariate(doubled, w)));
      std::vector<O2Rep> blocks{rep, rep};
      auto o = oracle_series([&](const std::vector<int>& d) { return oracle_o2_block_dim(blocks, w, d); }, {5, 5});
      CHECK(series_box(f, {5, 5}) == o);
    }
  }
  auto on = hilb_o2_onshell_bigraded(r);
  auto s1on = hilb_s1_onshell_bigraded({-1, 1});
  auto extra = rf(2, {{{0, 0}, Q(1, 2)}, {{1, 1}, Q(1, 2)}}, {{{2, 0}, 1}, {{0, 2}, 1}});
  CHECK(equal(on, s1on * Q(1, 2) + extra));
  auto su = series_box(hilb_o2_onshell_univariate(r), {4});
  CHECK(su.coeff(M({0})) == 1);
  // |q|^2, |p|^2 and q.p; the first relation J^2 sits in degree 4
  CHECK(su.coeff(M({2})) == 3);
  for (const auto& rep : std::vector<O2Rep>{{{1}, 0}, {{1, 2}, 0}, {{1}, 1}, {{3}, 2}}) {
    std::vector<O2Rep> blocks{rep, rep};
    auto off = [&](const std::vector<int>& d) { return oracle_o2_block_dim(blocks, O2Target::trivial(), d); };
    auto det = [&](const std::vector<int>& d) { return oracle_o2_block_dim(blocks, O2Target::det(), d); };
    CHECK(series_box(hilb_o2_onshell_bigraded(rep), {5, 5}) == oracle_onshell(off, det, {1, 1}, {5, 5}));
  }
}
