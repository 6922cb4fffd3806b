#pragma once

#include <vector>

#include "hilbert/errors.hpp"
#include "hilbert/poly.hpp"

namespace hilbert {

// Determinant of a square rational matrix.
Q determinant(std::vector<std::vector<Q>> m);

// prod_{i<j} (x_i - x_j)
Q vandermonde(const std::vector<Q>& xs);

// det [x_j^(lambda_i)]
Q alternant(const std::vector<int>& lambda, const std::vector<Q>& xs);

// Schur polynomial s_lambda(xs) with lambda padded by zeros to len(xs). Repeated arguments go
// through the perturbation x_i -> x_i + i*eps and take the eps^0 term of the bialternant ratio.
Q schur_eval(const std::vector<int>& lambda, const std::vector<Q>& xs);

// Partial Schur polynomial sp_u(xs; ys) on n = len(xs) + len(ys) >= 2 arguments: the determinant with
// first row (x_1^u, ..., x_k^u, 0, ..., 0) followed by rows of powers n-2, ..., 0 over both alphabets,
// divided by V(xs) V(ys). u may be negative; a zero argument with u < 0 throws ZeroArgument.
Q partial_schur_eval(int u, const std::vector<Q>& xs, const std::vector<Q>& ys);

namespace detail {
// Same quantities evaluated through the perturbation path even when the arguments are distinct.
Q schur_eval_perturbed(const std::vector<int>& lambda, const std::vector<Q>& xs);
Q partial_schur_eval_perturbed(int u, const std::vector<Q>& xs, const std::vector<Q>& ys);
}  // namespace detail

}  // namespace hilbert
