#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/errors.hpp"
#include "hilbert/poly.hpp"

namespace hilbert {

struct BinomialFactor {
  Mono monomial;
  int multiplicity = 1;
  bool operator==(const BinomialFactor&) const = default;
};

// numerator / prod (1 - m)^mult.
//
// Denominator monomials are stored lex-positive; a factor given with a lex-negative monomial is
// flipped into the numerator. Intermediate results may carry factors with mixed-sign monomials.
// A function is standard when every denominator monomial is nonnegative and nonzero.
class FactoredRatFun {
 public:
  using Denominator = std::map<Mono, int>;

  explicit FactoredRatFun(int nvars = 1);
  FactoredRatFun(LaurentPoly numerator, const Denominator& denominator = {});
  FactoredRatFun(LaurentPoly numerator, const std::vector<BinomialFactor>& denominator);

  static FactoredRatFun zero(int nvars) { return FactoredRatFun(nvars); }
  static FactoredRatFun constant(int nvars, const Q& c);
  static FactoredRatFun monomial(int nvars, const Mono& m, const Q& c = 1);
  // 1 / (1 - m)^k
  static FactoredRatFun inverse_binomial(int nvars, const Mono& m, int k = 1);

  int nvars() const { return numerator_.nvars(); }
  const LaurentPoly& numerator() const { return numerator_; }
  const Denominator& denominator() const { return denominator_; }
  std::vector<BinomialFactor> factors() const;
  bool is_zero() const { return numerator_.is_zero(); }
  bool is_standard() const;
  int pole_multiplicity() const;

  // Cancels every denominator factor that divides the numerator.
  FactoredRatFun& reduce();

  FactoredRatFun& operator+=(const FactoredRatFun& o);
  FactoredRatFun& operator-=(const FactoredRatFun& o);
  FactoredRatFun& operator*=(const FactoredRatFun& o);
  FactoredRatFun& operator*=(const Q& c);
  friend FactoredRatFun operator+(FactoredRatFun a, const FactoredRatFun& b) { return a += b; }
  friend FactoredRatFun operator-(FactoredRatFun a, const FactoredRatFun& b) { return a -= b; }
  friend FactoredRatFun operator*(FactoredRatFun a, const FactoredRatFun& b) { return a *= b; }
  friend FactoredRatFun operator*(FactoredRatFun a, const Q& c) { return a *= c; }
  FactoredRatFun operator-() const;

  // Structural identity of the stored form; use equal() for equality as functions.
  bool same_form(const FactoredRatFun& o) const {
    return numerator_ == o.numerator_ && denominator_ == o.denominator_;
  }

 private:
  void normalize(const std::vector<std::pair<Mono, int>>& raw);
  LaurentPoly numerator_;
  Denominator denominator_;
};

// Equality as rational functions.
bool equal(const FactoredRatFun& f, const FactoredRatFun& g);

// Truncated power series on a box [0, b_1] x ... x [0, b_n].
struct SeriesBox {
  std::vector<int> bounds;
  std::map<Mono, Q> coeffs;  // nonzero coefficients only

  Q coeff(const Mono& m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Q(0) : it->second;
  }
  bool operator==(const SeriesBox&) const = default;
};

// Requires a standard function with nonnegative numerator exponents, else NegativeExponent.
// When max_total >= 0 only coefficients of total degree <= max_total are computed.
SeriesBox series_box(const FactoredRatFun& f, const std::vector<int>& bounds, int max_total = -1);

// t_i -> images[i]. Throws DegenerateSubstitution if a surviving factor becomes (1 - 1).
FactoredRatFun substitute(const FactoredRatFun& f, const std::vector<Mono>& images, int new_nvars);
// All variables to a single variable t.
FactoredRatFun substitute_diagonal(const FactoredRatFun& f);

// Average over t_i -> zeta t_i, zeta ranging over a-th roots of unity, followed by t_i^a -> t_i.
FactoredRatFun u_average(const FactoredRatFun& f, int a, int i);

struct LaurentExpansion {
  int leading_order = 0;  // coeffs[m] multiplies (1 - t)^(leading_order + m)
  std::vector<Q> coeffs;
  bool operator==(const LaurentExpansion&) const = default;
};

// Expansion of a univariate function in powers of (1 - t); leading_order is the first nonzero term.
LaurentExpansion laurent_at_one(const FactoredRatFun& f, int nterms);
// Coefficients of (1 - t)^order, ..., (1 - t)^(order + nterms - 1).
LaurentExpansion laurent_at_one_from(const FactoredRatFun& f, int order, int nterms);

}  // namespace hilbert
