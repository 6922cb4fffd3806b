#include "hilbert/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace hilbert {

Mono Mono::from(const std::vector<int>& v) {
  if (v.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  Mono m;
  for (std::size_t i = 0; i < v.size(); ++i) m.e[i] = v[i];
  return m;
}

Mono Mono::scaled(int64_t k) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int32_t>(e[i] * k);
  return r;
}

bool Mono::is_zero() const {
  for (int x : e)
    if (x != 0) return false;
  return true;
}

bool Mono::nonneg() const {
  for (int x : e)
    if (x < 0) return false;
  return true;
}

bool Mono::lex_positive() const {
  for (int x : e) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

int64_t Mono::total() const {
  int64_t s = 0;
  for (int x : e) s += x;
  return s;
}

std::vector<int> Mono::to_vector(int nvars) const { return {e.begin(), e.begin() + nvars}; }

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("nvars out of range");
}

LaurentPoly LaurentPoly::constant(int nvars, const Q& c) { return monomial(nvars, Mono{}, c); }

LaurentPoly LaurentPoly::monomial(int nvars, const Mono& m, const Q& c) {
  LaurentPoly p(nvars);
  p.add_term(m, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus_pow(int nvars, const Mono& m, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  LaurentPoly p(nvars);
  mpz_class b = 1;
  for (int j = 0; j <= k; ++j) {
    p.add_term(m.scaled(j), Q(j % 2 == 0 ? b : mpz_class(-b)));
    b = b * (k - j) / (j + 1);
  }
  return p;
}

void LaurentPoly::add_term(const Mono& m, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Q LaurentPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(std::max(a.nvars_, b.nvars_));
  const LaurentPoly& big = a.size() >= b.size() ? a : b;
  const LaurentPoly& small = a.size() >= b.size() ? b : a;
  for (const auto& [ms, cs] : small.terms_) {
    for (const auto& [mb, cb] : big.terms_) {
      Mono m = ms + mb;
      auto [it, inserted] = r.terms_.try_emplace(m, cs * cb);
      if (!inserted) it->second += cs * cb;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second == 0)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Mono& s) const {
  LaurentPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m + s, c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  LaurentPoly r = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

LaurentPoly LaurentPoly::substituted(const std::vector<Mono>& images, int new_nvars) const {
  if (images.size() < static_cast<std::size_t>(nvars_)) throw std::invalid_argument("missing images");
  LaurentPoly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Mono t;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) t += images[i].scaled(m[i]);
    r.add_term(t, c);
  }
  return r;
}

LaurentPoly LaurentPoly::with_nvars(int new_nvars) const {
  LaurentPoly r(new_nvars);
  r.terms_ = terms_;
  return r;
}

bool LaurentPoly::nonneg_exponents() const {
  for (const auto& [m, c] : terms_)
    if (!m.nonneg()) return false;
  return true;
}

int LaurentPoly::min_exp(int v) const {
  int r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m[v] < r) r = m[v];
    first = false;
  }
  return r;
}

int LaurentPoly::max_exp(int v) const {
  int r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m[v] > r) r = m[v];
    first = false;
  }
  return r;
}

// Terms of the numerator lie on lines e0 + k*m; (1 - m) divides exactly when each line's
// coefficients sum to zero, and the quotient along a line is the running sum.
std::optional<LaurentPoly> LaurentPoly::div_one_minus(const Mono& m_in) const {
  if (m_in.is_zero()) throw std::invalid_argument("division by zero binomial");
  Mono m = m_in;
  bool flipped = false;
  if (!m.lex_positive()) {
    m = -m;
    flipped = true;
  }
  int p = 0;
  while (m[p] == 0) ++p;
  std::map<Mono, std::map<int64_t, Q>> lines;
  for (const auto& [e, c] : terms_) {
    int64_t k = floor_div(e[p], m[p]);
    lines[e - m.scaled(k)][k] += c;
  }
  LaurentPoly r(nvars_);
  for (auto& [base, line] : lines) {
    Q run = 0;
    int64_t kmax = line.rbegin()->first;
    for (int64_t k = line.begin()->first; k < kmax; ++k) {
      auto it = line.find(k);
      if (it != line.end()) run += it->second;
      if (run != 0) r.add_term(base + m.scaled(k), run);
    }
    run += line.rbegin()->second;
    if (run != 0) return std::nullopt;
  }
  if (flipped) {
    // N / (1 - m^-1) = -m N / (1 - m) with the positive orientation handled above.
    r = -r.shifted(m);
  }
  return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b, std::size_t trunc) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = std::min(a.size() + b.size() - 1, trunc);
  UPoly r(n, Q(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void upoly_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_inverse(const UPoly& p, std::size_t len) {
  UPoly inv(len, Q(0));
  if (len == 0) return inv;
  if (p.empty() || p[0] == 0) throw std::domain_error("series inverse of a non-unit");
  Q p0inv = 1 / p[0];
  inv[0] = p0inv;
  for (std::size_t d = 1; d < len; ++d) {
    Q s = 0;
    for (std::size_t j = 1; j <= d && j < p.size(); ++j) s += p[j] * inv[d - j];
    inv[d] = -s * p0inv;
  }
  return inv;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t gcd_all(const std::vector<int>& v) {
  int64_t g = 0;
  for (int x : v) g = std::gcd(g, static_cast<int64_t>(x < 0 ? -x : x));
  return g;
}

Q binomial(int64_t n, int64_t k) {
  if (k < 0) return 0;
  Q r = 1;
  for (int64_t j = 0; j < k; ++j) {
    r *= Q(n - j);
    r /= Q(j + 1);
  }
  return r;
}

}  // namespace hilbert
