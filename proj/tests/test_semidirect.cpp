#include "doctest.h"
#include "hilbert/errors.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/semidirect.hpp"
#include "test_util.hpp"

using namespace hilbert;
using namespace testutil;

namespace {

const std::vector<std::vector<int>> kReps{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 3}};

bool nonneg_integer(const Q& q) { return q >= 0 && q.get_den() == 1; }

}  // namespace

TEST_CASE("z4 series basics") {
  for (const auto& a : kReps) {
    Z4Rep rep{a};
    int n = static_cast<int>(a.size());
    auto s = z4_series(rep, std::vector<int>(n, 8));
    CHECK(s.coeff(Mono()) == 1);
    for (const auto& [m, c] : s.coeffs) {
      CHECK(nonneg_integer(c));
      // invariants of the larger group embed in those of S1
      CHECK(c <= oracle_z4_component(rep, Z4Component::Identity, m.to_vector(n)));
    }
  }
  CHECK_THROWS(z4_series(Z4Rep{{0}}, {4}));
  CHECK_THROWS_AS(z4_series(Z4Rep{{1}}, {4, 4}), std::invalid_argument);
}

TEST_CASE("z4 gamma^2 component for one block") {
  // the two residue families at z^a = +-t sum to 1/(1 - t^4)
  for (int a = 1; a <= 4; ++a) {
    Z4Rep rep{{a}};
    auto c = z4_component(rep, Z4Component::GammaSquared);
    CHECK(equal(c, one_over(1, {{{4}, 1}})));
    for (int d = 0; d <= 12; ++d) CHECK(oracle_z4_component(rep, Z4Component::GammaSquared, {d}) == (d % 4 == 0 ? 1 : 0));
  }
}

TEST_CASE("z4 exact series matches oracle") {
  for (const auto& a : kReps) {
    Z4Rep rep{a};
    int n = static_cast<int>(a.size());
    INFO("rep size " << n << " a0=" << a[0]);
    auto h = hilb_z4(rep);
    CHECK(h.is_standard());
    CHECK(series_box(h, std::vector<int>(n, 8)) == z4_series(rep, std::vector<int>(n, 8)));
  }
}

TEST_CASE("z4 index-2 subgroup") {
  // S1 x {1, gamma^2}: average of the identity and gamma^2 components only
  for (const auto& a : std::vector<std::vector<int>>{{1}, {1, 2}}) {
    Z4Rep rep{a};
    int n = static_cast<int>(a.size());
    auto h = (z4_component(rep, Z4Component::Identity) + z4_component(rep, Z4Component::GammaSquared)) * Q(1, 2);
    auto s = series_box(h, std::vector<int>(n, 8));
    auto o = oracle_series(
        [&](const std::vector<int>& d) -> Q {
          return (oracle_z4_component(rep, Z4Component::Identity, d) +
                  oracle_z4_component(rep, Z4Component::GammaSquared, d)) /
                 2;
        },
        std::vector<int>(n, 8));
    CHECK(s == o);
  }
}

TEST_CASE("z4 reconstruction for one block") {
  // (1/4)[(1 + t^2)/(1 - t^2)^3 + 1/(1 - t^4) + 2/(1 - t^4)]
  auto expect = rf(1, {{{0}, 1}, {{2}, -1}, {{4}, 1}}, {{{2}, 2}, {{4}, 1}});
  auto r = z4_reconstruct(Z4Rep{{1}});
  CHECK(equal(r, expect));
  CHECK(series_box(r, {0}).coeff(Mono()) == 1);
  CHECK(series_box(r, {12}) == z4_series(Z4Rep{{1}}, {12}));
}

TEST_CASE("z4 reconstruction agrees with the exact sum") {
  for (const auto& a : std::vector<std::vector<int>>{{2}, {3}, {1, 1}}) {
    Z4Rep rep{a};
    CHECK(equal(z4_reconstruct(rep), hilb_z4(rep)));
  }
  // numerator of (1,2) has t1-degree 12 over the minimal denominator
  Z4Rep r12{{1, 2}};
  CHECK_THROWS_AS(z4_reconstruct(r12, 8, 12), ReconstructionFailure);
  auto r = z4_reconstruct(r12, 12, 16);
  CHECK(equal(r, hilb_z4(r12)));
  CHECK_THROWS_AS(z4_reconstruct(r12, 8, 8), std::invalid_argument);
}
