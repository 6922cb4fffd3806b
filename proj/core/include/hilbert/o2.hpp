#pragma once

#include "hilbert/ratfun.hpp"
#include "hilbert/types.hpp"

namespace hilbert {

// Multigraded series of W-covariants, t_1..t_n for the tau summands and t_{n+1}..t_{n+d} for det.
// With n = 0 the series is the two-component Molien average (1/2)(1/prod(1 - t_j) + C2/prod(1 + t_j))
// for Trivial and Det, and 0 for Tau.
FactoredRatFun hilb_o2_max(const O2Rep& rep, const O2Target& w);
FactoredRatFun hilb_o2_univariate(const O2Rep& rep, const O2Target& w);

// Cotangent lift 2V, first copy graded by s and second by t.
FactoredRatFun hilb_o2_cotangent_bigraded(const O2Rep& rep, const O2Target& w);
FactoredRatFun hilb_o2_onshell_bigraded(const O2Rep& rep);
FactoredRatFun hilb_o2_onshell_univariate(const O2Rep& rep);

// 1/(1 + m)^k stored as (1 - m)^k / (1 - m^2)^k.
FactoredRatFun inverse_one_plus(int nvars, const Mono& m, int k = 1);

}  // namespace hilbert
