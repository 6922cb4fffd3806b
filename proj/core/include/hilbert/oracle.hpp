#pragma once

#include <functional>
#include <vector>

#include "hilbert/ratfun.hpp"
#include "hilbert/types.hpp"

namespace hilbert {

// Dimension counts from the monomial basis and group characters only.

// 1 if sum d_i a_i = -b, else 0.
Q oracle_s1_dim(const WeightVector& a, int b, const std::vector<int>& d);

// Blocks of coordinates, each block graded by one variable: number of monomials with block degrees d
// and total weight -b.
Q oracle_s1_block_dim(const std::vector<std::vector<int>>& blocks, int b, const std::vector<int>& d);

// O2 covariants of type W in multidegree d over the n + d summands.
Q oracle_o2_dim(const O2Rep& rep, const O2Target& w, const std::vector<int>& d);

// Blocks of O2 summands, each block graded by one variable.
Q oracle_o2_block_dim(const std::vector<O2Rep>& blocks, const O2Target& w, const std::vector<int>& d);

Q oracle_z4_component(const Z4Rep& rep, Z4Component c, const std::vector<int>& d);

using DimFunction = std::function<Q(const std::vector<int>&)>;

// HILBERT_THREADS if set to a positive integer, else the hardware concurrency.
int worker_threads();

// Coefficients of a dimension function on a box, optionally capped in total degree.
// Multidegrees are split across worker_threads() threads; dim must be safe to call concurrently.
SeriesBox oracle_series(const DimFunction& dim, const std::vector<int>& bounds, int max_total = -1);

// On-shell series from an off-shell series box: off(s,t) - shift(s,t) * sub(s,t). With sub = off and
// shift = (1,1) this is the (1 - st) · off identity.
SeriesBox oracle_onshell(const DimFunction& off, const DimFunction& sub, const std::vector<int>& shift,
                         const std::vector<int>& bounds, int max_total = -1);

}  // namespace hilbert
