#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hilbert/ratfun.hpp"
#include "hilbert/types.hpp"

namespace hilbert {

// (a/g, b/g) with g = gcd of |a_i|, or nullopt when g does not divide b (no covariants).
std::optional<std::pair<WeightVector, int>> reduce_representation(const WeightVector& a, int b);

// All y in N^n with sum y_i alphas_i = target.
std::vector<std::vector<int>> frobenius_solutions(const std::vector<int>& alphas, int target);

struct S1Report {
  int gcd = 1;
  bool no_covariants = false;
  bool sign_flipped = false;
  int s_set_size = 0;
};

struct S1Options {
  // Replace (a, b) by (-a, -b) when b < 0, or b = 0 with all weights positive, so that the
  // correction sum over frobenius_solutions is empty. Disabling it runs the direct route.
  bool sign_reduction = true;
  S1Report* report = nullptr;
};

// Multigraded series of covariants of type -b, t_i attached to weight a_i.
FactoredRatFun hilb_s1_max(const WeightVector& a, int b, const S1Options& opt = {});

// Same series with t_i -> images[i] (nonnegative monomials in nvars variables). Weights whose
// mixed factors would collapse under the images are summed in their own variables first and
// substituted afterwards, so no intermediate factor degenerates.
FactoredRatFun hilb_s1_graded(const WeightVector& a, int b, const std::vector<Mono>& images, int nvars,
                              const S1Options& opt = {});

FactoredRatFun hilb_s1_univariate(const WeightVector& a, int b);

// Cotangent lift (a, -a) with the first block graded by s and the second by t.
FactoredRatFun hilb_s1_cotangent_bigraded(const WeightVector& a, int b);
FactoredRatFun hilb_s1_onshell_bigraded(const WeightVector& a);
FactoredRatFun hilb_s1_onshell_univariate(const WeightVector& a);

}  // namespace hilbert
