#pragma once

#include <vector>

#include "hilbert/ratfun.hpp"
#include "hilbert/types.hpp"

namespace hilbert {

// Invariants of S1 x| Z/4 on nu_{a_1} + ... + nu_{a_n}, t_i grading the 4-dimensional block nu_{a_i}.
// Coefficient of t^d is (1/4) sum over the four components of the averaged trace, from the oracle.
SeriesBox z4_series(const Z4Rep& rep, const std::vector<int>& bounds);

// Per-component Molien-Weyl contributions as rational functions, before the factor 1/4.
// Identity: S1 invariants of weights (a, -a, a, -a) per block; gamma^2: weights (a, -a) with t_i -> t_i^2;
// gamma and gamma^3: 1 / prod(1 - t_i^4) each.
FactoredRatFun z4_component(const Z4Rep& rep, Z4Component c);

// Exact Hilbert series: (1/4) of the sum of the four components, reduced.
FactoredRatFun hilb_z4(const Z4Rep& rep);

// Denominator ansatz used by z4_reconstruct: the denominator of hilb_z4 with each binomial 1 - m^g
// lowered to 1 - m^L, L | g, or dropped, as long as the numerator absorbs the change.
std::vector<BinomialFactor> z4_denominator_ansatz(const Z4Rep& rep);

// Fits the numerator over the ansatz from z4_series on the box [0, fit]^n and checks the result
// against z4_series on [0, verify]^n. On mismatch the multiplicities are doubled once; a second
// mismatch throws ReconstructionFailure. The result is reduced.
FactoredRatFun z4_reconstruct(const Z4Rep& rep, int fit = 8, int verify = 12);

}  // namespace hilbert
