#pragma once

#include <vector>

#include "hilbert/ratfun.hpp"
#include "hilbert/types.hpp"

namespace hilbert {

// Closed-form Laurent coefficients at t = 1. gamma_m multiplies (1 - t)^(m - P) with P the pole order
// attached to each family:
//   S1 covariants of a (n weights):             P = n - 1
//   S1 covariants of the cotangent lift (a,-a): P = 2n - 1
//   S1 on-shell, n weights:                     P = 2n - 2
//   O2 covariants of (alpha, d):               P = 2n + d - 1
//   O2 on-shell:                                P = 4n + 2d - 2
//   O2 with n = 0:                              coefficients of (1 - t)^m, m >= 0

int pole_order_s1(const WeightVector& a);
int pole_order_s1_cotangent(const WeightVector& a);
int pole_order_s1_onshell(const WeightVector& a);
int pole_order_o2(const O2Rep& rep);
int pole_order_o2_onshell(const O2Rep& rep);

// b >= 0, m in {0, 1}. Mixed-sign inputs use the partial Schur formulas; same-sign inputs use the
// closed forms for polynomial or constant series. Non-faithful inputs are reduced first.
Q gamma_s1(const WeightVector& a, int b, int m);
// Distinct-negative-weight form of the same coefficients; HypothesisViolation if negatives repeat.
Q gamma_s1_distinct(const WeightVector& a, int b, int m);

// Schur-polynomial form, m in {0, 1}; depends only on |a_i|.
Q gamma_s1_cotangent(const WeightVector& a, int b, int m);
// Distinct-|a_i| form of gamma_0 of the cotangent lift.
Q gamma_s1_cotangent_distinct(const WeightVector& a);

// Expansion of hilb_s1_onshell_univariate, 0 <= m <= 3.
Q gamma_s1_onshell(const WeightVector& a, int m);

// n >= 1, m in {0, 1}.
Q gamma_o2(const O2Rep& rep, const O2Target& w, int m);
// n >= 1, m in {0, 1, 2, 3}.
Q gamma_o2_onshell(const O2Rep& rep, int m);
// n = 0: coefficient of (1 - t)^m in the series of d copies of det.
Q gamma_o2_detonly(int d, const O2Target& w, int m);

enum class ExpansionOrder { SThenT, TThenS };

// Iterated coefficients of the bigraded on-shell series: expand at the first variable of the order,
// then expand each coefficient at the second. Index 0 is the first nonzero term at each stage.
// Requires n >= 3 distinct, pairwise coprime weights of both signs (HypothesisViolation otherwise);
// (i, j) in {(0,0), (1,0), (1,1)}.
Q gamma_bigraded_onshell(const WeightVector& a, ExpansionOrder order, int i, int j);

// Nested expansion of a standard bivariate function: outer coefficients c_i of (1 - x)^(outer_order + i)
// with x the first variable of the order, each expanded in the other variable.
struct BivariateExpansion {
  int outer_order = 0;
  std::vector<LaurentExpansion> inner;
};
BivariateExpansion nested_laurent_at_one(const FactoredRatFun& f, ExpansionOrder order, int nouter, int ninner);

}  // namespace hilbert
