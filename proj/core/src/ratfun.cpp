#include "hilbert/ratfun.hpp"

#include <numeric>
#include <stdexcept>

namespace hilbert {

FactoredRatFun::FactoredRatFun(int nvars) : numerator_(nvars) {}

FactoredRatFun::FactoredRatFun(LaurentPoly numerator, const Denominator& denominator)
    : numerator_(std::move(numerator)) {
  normalize({denominator.begin(), denominator.end()});
}

FactoredRatFun::FactoredRatFun(LaurentPoly numerator, const std::vector<BinomialFactor>& denominator)
    : numerator_(std::move(numerator)) {
  std::vector<std::pair<Mono, int>> raw;
  for (const auto& f : denominator) raw.emplace_back(f.monomial, f.multiplicity);
  normalize(raw);
}

FactoredRatFun FactoredRatFun::constant(int nvars, const Q& c) {
  return FactoredRatFun(LaurentPoly::constant(nvars, c));
}

FactoredRatFun FactoredRatFun::monomial(int nvars, const Mono& m, const Q& c) {
  return FactoredRatFun(LaurentPoly::monomial(nvars, m, c));
}

FactoredRatFun FactoredRatFun::inverse_binomial(int nvars, const Mono& m, int k) {
  return FactoredRatFun(LaurentPoly::constant(nvars, 1), Denominator{{m, k}});
}

void FactoredRatFun::normalize(const std::vector<std::pair<Mono, int>>& raw) {
  denominator_.clear();
  for (auto [m, k] : raw) {
    if (k == 0) continue;
    if (k < 0) throw std::invalid_argument("negative multiplicity");
    if (m.is_zero()) throw DegenerateSubstitution("denominator factor (1 - 1)");
    if (!m.lex_positive()) {
      // 1/(1 - m)^k = (-1)^k m^-k / (1 - m^-1)^k
      numerator_ = numerator_.shifted(m.scaled(-k));
      if (k % 2) numerator_ = -numerator_;
      m = -m;
    }
    denominator_[m] += k;
  }
  if (numerator_.is_zero()) denominator_.clear();
}

std::vector<BinomialFactor> FactoredRatFun::factors() const {
  std::vector<BinomialFactor> r;
  for (const auto& [m, k] : denominator_) r.push_back({m, k});
  return r;
}

bool FactoredRatFun::is_standard() const {
  for (const auto& [m, k] : denominator_)
    if (!m.nonneg()) return false;
  return true;
}

int FactoredRatFun::pole_multiplicity() const {
  int s = 0;
  for (const auto& [m, k] : denominator_) s += k;
  return s;
}

FactoredRatFun& FactoredRatFun::reduce() {
  if (numerator_.is_zero()) {
    denominator_.clear();
    return *this;
  }
  for (auto it = denominator_.begin(); it != denominator_.end();) {
    while (it->second > 0) {
      auto q = numerator_.div_one_minus(it->first);
      if (!q) break;
      numerator_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = denominator_.erase(it);
    else
      ++it;
  }
  return *this;
}

FactoredRatFun& FactoredRatFun::operator+=(const FactoredRatFun& o) {
  if (o.is_zero()) return *this;
  int n = std::max(nvars(), o.nvars());
  if (is_zero()) {
    *this = o;
    numerator_ = numerator_.with_nvars(n);
    return *this;
  }
  Denominator common = denominator_;
  for (const auto& [m, k] : o.denominator_) {
    int& c = common[m];
    c = std::max(c, k);
  }
  LaurentPoly a = numerator_.with_nvars(n);
  LaurentPoly b = o.numerator_.with_nvars(n);
  for (const auto& [m, k] : common) {
    auto ia = denominator_.find(m);
    int ka = ia == denominator_.end() ? 0 : ia->second;
    auto ib = o.denominator_.find(m);
    int kb = ib == o.denominator_.end() ? 0 : ib->second;
    if (k > ka) a = a * LaurentPoly::one_minus_pow(n, m, k - ka);
    if (k > kb) b = b * LaurentPoly::one_minus_pow(n, m, k - kb);
  }
  numerator_ = a + b;
  denominator_ = std::move(common);
  return reduce();
}

FactoredRatFun& FactoredRatFun::operator-=(const FactoredRatFun& o) { return *this += -o; }

FactoredRatFun& FactoredRatFun::operator*=(const FactoredRatFun& o) {
  numerator_ = numerator_ * o.numerator_;
  if (numerator_.is_zero()) {
    denominator_.clear();
    return *this;
  }
  for (const auto& [m, k] : o.denominator_) denominator_[m] += k;
  return reduce();
}

FactoredRatFun& FactoredRatFun::operator*=(const Q& c) {
  numerator_ *= c;
  if (numerator_.is_zero()) denominator_.clear();
  return *this;
}

FactoredRatFun FactoredRatFun::operator-() const {
  FactoredRatFun r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

bool equal(const FactoredRatFun& f, const FactoredRatFun& g) { return (f - g).is_zero(); }

SeriesBox series_box(const FactoredRatFun& f, const std::vector<int>& bounds, int max_total) {
  const int n = f.nvars();
  if (bounds.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("bounds size mismatch");
  for (int b : bounds)
    if (b < 0) throw std::invalid_argument("negative bound");
  if (!f.is_standard()) throw NegativeExponent("denominator factor with negative exponent");
  if (!f.numerator().nonneg_exponents()) throw NegativeExponent("numerator term with negative exponent");

  std::vector<int64_t> stride(n, 1);
  int64_t size = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride[i] = size;
    size *= bounds[i] + 1;
    if (size > 50'000'000) throw std::invalid_argument("series box too large");
  }

  mpz_class scale = 1;
  for (const auto& [m, c] : f.numerator().terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());

  std::vector<mpz_class> a(size);
  for (const auto& [m, c] : f.numerator().terms()) {
    bool inside = true;
    int64_t idx = 0;
    for (int i = 0; i < n; ++i) {
      if (m[i] > bounds[i]) inside = false;
      idx += m[i] * stride[i];
    }
    if (max_total >= 0 && m.total() > max_total) inside = false;
    if (inside) a[idx] = c.get_num() * (scale / c.get_den());
  }

  std::vector<int> ex(n);
  for (const auto& [m, k] : f.denominator()) {
    int64_t off = 0;
    for (int i = 0; i < n; ++i) off += m[i] * stride[i];
    for (int rep = 0; rep < k; ++rep) {
      std::fill(ex.begin(), ex.end(), 0);
      int64_t tot = 0;
      for (int64_t idx = 0; idx < size; ++idx) {
        bool ok = max_total < 0 || tot <= max_total;
        for (int i = 0; ok && i < n; ++i)
          if (ex[i] < m[i]) ok = false;
        if (ok) a[idx] += a[idx - off];
        for (int i = n - 1; i >= 0; --i) {
          if (ex[i] < bounds[i]) {
            ++ex[i];
            ++tot;
            break;
          }
          tot -= ex[i];
          ex[i] = 0;
        }
      }
    }
  }

  SeriesBox out;
  out.bounds = bounds;
  std::fill(ex.begin(), ex.end(), 0);
  int64_t tot = 0;
  for (int64_t idx = 0; idx < size; ++idx) {
    if (a[idx] != 0 && (max_total < 0 || tot <= max_total)) {
      Q v(a[idx], scale);
      v.canonicalize();
      out.coeffs.emplace(Mono::from(ex), v);
    }
    for (int i = n - 1; i >= 0; --i) {
      if (ex[i] < bounds[i]) {
        ++ex[i];
        ++tot;
        break;
      }
      tot -= ex[i];
      ex[i] = 0;
    }
  }
  return out;
}

FactoredRatFun substitute(const FactoredRatFun& f, const std::vector<Mono>& images, int new_nvars) {
  std::vector<BinomialFactor> den;
  for (const auto& [m, k] : f.denominator()) {
    Mono t;
    for (int i = 0; i < f.nvars(); ++i)
      if (m[i] != 0) t += images[i].scaled(m[i]);
    if (t.is_zero()) throw DegenerateSubstitution("denominator factor becomes (1 - 1)");
    den.push_back({t, k});
  }
  FactoredRatFun r(f.numerator().substituted(images, new_nvars), den);
  return r.reduce();
}

FactoredRatFun substitute_diagonal(const FactoredRatFun& f) {
  return substitute(f, std::vector<Mono>(f.nvars(), Mono::unit(0)), 1);
}

namespace {

// Coefficients of ((1 - y^L)^g / (1 - y))^k, a polynomial of degree (L g - 1) k, computed as a
// truncated series with a check that the tail past that degree vanishes.
UPoly cyclotomic_quotient(int L, int g, int k) {
  const int deg = (L * g - 1) * k;
  const std::size_t len = static_cast<std::size_t>(deg + L + 1);
  UPoly num(len, Q(0));
  // (1 - y^L)^(g k)
  Q b = 1;
  for (int j = 0; j <= g * k && static_cast<std::size_t>(j) * L < len; ++j) {
    num[static_cast<std::size_t>(j) * L] = (j % 2 == 0) ? b : Q(-b);
    b = b * (g * k - j) / (j + 1);
  }
  for (int rep = 0; rep < k; ++rep)
    for (std::size_t d = 1; d < len; ++d) num[d] += num[d - 1];
  for (std::size_t d = deg + 1; d < len; ++d)
    if (num[d] != 0) throw BoundViolation("root-of-unity average: nonzero tail past safe bound");
  num.resize(deg + 1);
  return num;
}

}  // namespace

FactoredRatFun u_average(const FactoredRatFun& f, int a, int i) {
  if (a < 1) throw std::invalid_argument("u_average needs a >= 1");
  if (i < 0 || i >= f.nvars()) throw std::invalid_argument("u_average variable out of range");
  if (a == 1 || f.is_zero()) return f;
  const int n = f.nvars();

  LaurentPoly num = f.numerator();
  std::vector<std::pair<Mono, int>> den;
  std::vector<std::pair<Mono, int>> active;
  for (const auto& [m0, k] : f.denominator()) {
    Mono m = m0;
    if (m[i] == 0) {
      den.emplace_back(m, k);
      continue;
    }
    if (m[i] < 0) {
      num = num.shifted(m.scaled(-k));
      if (k % 2) num = -num;
      m = -m;
    }
    active.emplace_back(m, k);
  }

  for (const auto& [m, k] : active) {
    const int q = m[i];
    const int g = std::gcd(a, q);
    const int L = a / g;
    UPoly r = cyclotomic_quotient(L, g, k);
    LaurentPoly R(n);
    for (std::size_t d = 0; d < r.size(); ++d) R.add_term(m.scaled(static_cast<int64_t>(d)), r[d]);
    num = num * R;
    den.emplace_back(m.scaled(L), g * k);
  }

  LaurentPoly filtered(n);
  for (const auto& [e, c] : num.terms()) {
    if (e[i] % a != 0) continue;
    Mono t = e;
    t[i] /= a;
    filtered.add_term(t, c);
  }
  for (auto& [m, k] : den) m[i] /= a;
  std::vector<BinomialFactor> bf;
  for (const auto& [m, k] : den) bf.push_back({m, k});
  FactoredRatFun out(std::move(filtered), bf);
  return out.reduce();
}

namespace {

// f(1 - u) = u^(-M) G(u); returns G truncated to len terms and sets M.
UPoly expansion_core(const FactoredRatFun& f, std::size_t len, int& M) {
  if (f.nvars() != 1) throw std::invalid_argument("laurent_at_one needs a univariate function");
  M = f.pole_multiplicity();
  const LaurentPoly& N = f.numerator();
  int lo = N.is_zero() ? 0 : N.min_exp(0);
  int c = lo < 0 ? -lo : 0;
  // N'(1 - u) with N' = t^c N
  UPoly g(len, Q(0));
  for (const auto& [e, coef] : N.terms()) {
    int p = e[0] + c;
    Q b = 1;
    for (int j = 0; j <= p && static_cast<std::size_t>(j) < len; ++j) {
      g[j] += (j % 2 == 0 ? coef : Q(-coef)) * b;
      b = b * (p - j) / (j + 1);
    }
  }
  if (c > 0) {
    UPoly w(len);
    for (std::size_t j = 0; j < len; ++j) w[j] = binomial(c + j - 1, j);
    g = upoly_mul(g, w, len);
  }
  for (const auto& [m, k] : f.denominator()) {
    int q = m[0];
    UPoly U(q);
    for (int j = 1; j <= q; ++j) U[j - 1] = (j % 2 == 1 ? Q(1) : Q(-1)) * binomial(q, j);
    UPoly inv = upoly_inverse(U, len);
    for (int rep = 0; rep < k; ++rep) g = upoly_mul(g, inv, len);
  }
  g.resize(len, Q(0));
  return g;
}

}  // namespace

LaurentExpansion laurent_at_one(const FactoredRatFun& f, int nterms) {
  if (nterms < 0) throw std::invalid_argument("negative term count");
  LaurentExpansion out;
  if (f.is_zero()) {
    out.coeffs.assign(nterms, Q(0));
    return out;
  }
  const LaurentPoly& N = f.numerator();
  std::size_t span = static_cast<std::size_t>(N.max_exp(0) - N.min_exp(0));
  int M = 0;
  UPoly g = expansion_core(f, span + 1 + nterms, M);
  std::size_t v = 0;
  while (v < g.size() && g[v] == 0) ++v;
  if (v + nterms > g.size()) g = expansion_core(f, v + nterms, M);
  out.leading_order = static_cast<int>(v) - M;
  out.coeffs.assign(g.begin() + v, g.begin() + v + nterms);
  return out;
}

LaurentExpansion laurent_at_one_from(const FactoredRatFun& f, int order, int nterms) {
  if (nterms < 0) throw std::invalid_argument("negative term count");
  LaurentExpansion out;
  out.leading_order = order;
  out.coeffs.assign(nterms, Q(0));
  if (f.is_zero()) return out;
  int M = f.pole_multiplicity();
  int first = order + M;
  int last = first + nterms;
  if (last <= 0) return out;
  UPoly g = expansion_core(f, static_cast<std::size_t>(last), M);
  for (int j = 0; j < nterms; ++j)
    if (first + j >= 0) out.coeffs[j] = g[first + j];
  return out;
}

}  // namespace hilbert
