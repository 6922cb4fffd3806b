#include "doctest.h"
#include "hilbert/oracle.hpp"
#include "test_util.hpp"

using namespace hilbert;
using namespace testutil;

TEST_CASE("s1 oracle examples") {
  CHECK(oracle_s1_dim({-1, -2, 1, 2}, 0, {1, 0, 1, 0}) == 1);
  CHECK(oracle_s1_dim({-1, -2, 1, 2}, 0, {1, 0, 0, 1}) == 0);
  CHECK(oracle_s1_dim({3, -5}, 0, {0, 0}) == 1);
  CHECK(oracle_s1_block_dim({{-1, 1}}, 0, {2}) == 1);
  CHECK(oracle_s1_block_dim({{1}, {-1}}, 0, {3, 3}) == 1);
}

TEST_CASE("o2 oracle examples") {
  O2Rep r{{1}, 0};
  CHECK(oracle_o2_dim(r, O2Target::trivial(), {2}) == 1);
  CHECK(oracle_o2_dim(r, O2Target::trivial(), {1}) == 0);
  for (int deg = 0; deg <= 6; ++deg) CHECK(oracle_o2_dim(r, O2Target::det(), {deg}) == 0);
  CHECK(oracle_o2_dim(r, O2Target::tau(1), {1}) == 1);
  CHECK(oracle_o2_dim(r, O2Target::tau(1), {3}) == 1);
  CHECK(oracle_o2_dim(r, O2Target::tau(1), {2}) == 0);
  // a single det coordinate: its square is invariant, the coordinate itself is a det-covariant
  O2Rep d1{{}, 1};
  CHECK(oracle_o2_dim(d1, O2Target::trivial(), {2}) == 1);
  CHECK(oracle_o2_dim(d1, O2Target::trivial(), {1}) == 0);
  CHECK(oracle_o2_dim(d1, O2Target::det(), {1}) == 1);
}

TEST_CASE("z4 component oracle examples") {
  Z4Rep r{{1}};
  CHECK(oracle_z4_component(r, Z4Component::GammaSquared, {0}) == 1);
  CHECK(oracle_z4_component(r, Z4Component::Gamma, {4}) == 1);
  CHECK(oracle_z4_component(r, Z4Component::Gamma, {2}) == 0);
  // four coordinates of weights (1,-1,1,-1): zero-weight monomials of degree 2 are x_i y_j, four of them
  CHECK(oracle_z4_component(r, Z4Component::Identity, {2}) == 4);
}

TEST_CASE("on-shell oracle plumbing") {
  auto off = [](const std::vector<int>& d) { return oracle_s1_block_dim({{-1}, {1}}, 0, d); };
  auto on = oracle_onshell(off, off, {1, 1}, {5, 5});
  CHECK(on.coeffs.size() == 1);
  CHECK(on.coeff(M({0, 0})) == 1);
}
