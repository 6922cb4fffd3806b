#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hilbert {

using Q = mpq_class;

inline constexpr int kMaxVars = 16;

// Exponent vector. Slots at or beyond the owner's nvars stay zero.
struct Mono {
  std::array<int32_t, kMaxVars> e{};

  Mono() = default;
  static Mono unit(int i, int32_t k = 1) {
    Mono m;
    m.e[i] = k;
    return m;
  }
  static Mono from(const std::vector<int>& v);

  int32_t& operator[](int i) { return e[i]; }
  int32_t operator[](int i) const { return e[i]; }

  auto operator<=>(const Mono&) const = default;
  bool operator==(const Mono&) const = default;

  Mono& operator+=(const Mono& o) {
    for (int i = 0; i < kMaxVars; ++i) e[i] += o.e[i];
    return *this;
  }
  Mono& operator-=(const Mono& o) {
    for (int i = 0; i < kMaxVars; ++i) e[i] -= o.e[i];
    return *this;
  }
  friend Mono operator+(Mono a, const Mono& b) { return a += b; }
  friend Mono operator-(Mono a, const Mono& b) { return a -= b; }
  Mono operator-() const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = -e[i];
    return r;
  }
  Mono scaled(int64_t k) const;

  bool is_zero() const;
  bool nonneg() const;
  // First nonzero entry is positive.
  bool lex_positive() const;
  int64_t total() const;
  std::vector<int> to_vector(int nvars) const;
};

// Finite sum of Laurent monomials with rational coefficients; zero terms are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Mono, Q>;

  explicit LaurentPoly(int nvars = 1);
  static LaurentPoly constant(int nvars, const Q& c);
  static LaurentPoly monomial(int nvars, const Mono& m, const Q& c = 1);
  // (1 - m)^k for k >= 0.
  static LaurentPoly one_minus_pow(int nvars, const Mono& m, int k);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Mono& m, const Q& c);
  Q coeff(const Mono& m) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Q& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Q& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  LaurentPoly shifted(const Mono& m) const;
  LaurentPoly pow(int k) const;
  // Sends t^e to t^(sum e_i images_i).
  LaurentPoly substituted(const std::vector<Mono>& images, int new_nvars) const;
  LaurentPoly with_nvars(int new_nvars) const;

  bool nonneg_exponents() const;
  int min_exp(int v) const;
  int max_exp(int v) const;

  // Exact quotient by (1 - m), or nullopt when (1 - m) does not divide.
  std::optional<LaurentPoly> div_one_minus(const Mono& m) const;

 private:
  int nvars_;
  Terms terms_;
};

// Univariate truncated power series / polynomial helpers over Q.
using UPoly = std::vector<Q>;
UPoly upoly_mul(const UPoly& a, const UPoly& b, std::size_t trunc = SIZE_MAX);
void upoly_trim(UPoly& a);
// Power series inverse truncated to len terms; p[0] must be nonzero.
UPoly upoly_inverse(const UPoly& p, std::size_t len);

int64_t floor_div(int64_t a, int64_t b);
int64_t gcd_all(const std::vector<int>& v);
Q binomial(int64_t n, int64_t k);

}  // namespace hilbert
