#include "hilbert/laurent.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hilbert/errors.hpp"
#include "hilbert/o2.hpp"
#include "hilbert/s1.hpp"
#include "hilbert/schur.hpp"

namespace hilbert {

namespace {

Q qpow(const Q& x, int e) {
  Q r = 1;
  Q base = e < 0 ? Q(1 / x) : x;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

Q half(int num, int den = 2) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Q> to_q(const std::vector<int>& v) {
  std::vector<Q> r;
  r.reserve(v.size());
  for (int x : v) r.emplace_back(x);
  return r;
}

void check_index(int m, int lo, int hi) {
  if (m < lo || m > hi) throw std::invalid_argument("coefficient index out of range");
}

int abs_gcd(const std::vector<int>& v) { return static_cast<int>(gcd_all(v)); }

struct Split {
  std::vector<int> neg, pos;
};

Split split(const WeightVector& a) {
  Split s;
  for (int x : a) (x < 0 ? s.neg : s.pos).push_back(x);
  return s;
}

// prod over negative p, positive q of (a_p - a_q)
Q cross_product(const Split& s) {
  Q p = 1;
  for (int x : s.neg)
    for (int y : s.pos) p *= Q(x - y);
  return p;
}

// Leading coefficient of order -(n-2) contributed by the weights with a_j removed, as it enters the
// gcd correction of gamma_1. Mixed-sign subvectors use the partial Schur form; a lone negative weight
// (n = 2) gives 1/|a|; other same-sign subvectors contribute nothing at this order.
Q removed_leading(const WeightVector& a, std::size_t j) {
  int n = static_cast<int>(a.size());
  WeightVector sub = a;
  sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
  Split s = split(sub);
  if (!s.neg.empty() && !s.pos.empty()) return -partial_schur_eval(n - 3, to_q(s.neg), to_q(s.pos)) / cross_product(s);
  if (s.pos.empty() && n == 2) return Q(1, -s.neg[0]);
  return 0;
}

// (1/2) sum over nontrivial g-th roots zeta of zeta^b / (1 - zeta^aj); equals (g-1)/2 when g | b.
Q root_sum(int g, int aj, int b) {
  int r = ((aj % g) + g) % g;
  int rinv = 0;
  for (int x = 1; x < g; ++x)
    if ((r * x) % g == 1) rinv = x;
  int c = static_cast<int>(((static_cast<int64_t>(b) * rinv) % g + g) % g);
  return c == 0 ? half(g - 1) : half(2 * c - g - 1);
}

// Faithful, mixed-sign, b >= 0.
Q gamma_s1_mixed(const WeightVector& a, int b, int m) {
  int n = static_cast<int>(a.size());
  Split s = split(a);
  Q prod = cross_product(s);
  std::vector<Q> xs = to_q(s.neg), ys = to_q(s.pos);
  Q sp2 = partial_schur_eval(n - 2, xs, ys);
  if (m == 0) return -sp2 / prod;
  Q e1 = 0;
  for (int x : a) e1 += x;
  Q sp3 = partial_schur_eval(n - 3, xs, ys);
  Q g1 = ((e1 - 2 * b) * sp3 - sp2) / (2 * prod);
  for (std::size_t j = 0; j < a.size(); ++j) {
    WeightVector sub = a;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
    int g = abs_gcd(sub);
    if (g == 1) continue;
    g1 += root_sum(g, a[j], b) * removed_leading(a, j);
  }
  return g1;
}

// All weights positive, sum y_i a_i = target >= 0.
Q gamma_s1_positive(const WeightVector& a, int target, int m) {
  int n = static_cast<int>(a.size());
  if (target == 0) return m == n - 1 ? 1 : 0;
  if (n == 1) {
    if (target % a[0] != 0) return 0;
    return m == 0 ? Q(1) : Q(-target / a[0]);
  }
  if (n == 2) return m == 0 ? Q(0) : Q(static_cast<long>(frobenius_solutions(a, target).size()));
  return 0;
}

// Normalized (a, b): faithful with b >= 0, or nullopt if there are no covariants.
std::optional<std::pair<WeightVector, int>> normalize_s1(const WeightVector& a, int b) {
  validate(a);
  auto red = reduce_representation(a, b);
  if (!red) return std::nullopt;
  if (red->second < 0) {
    for (int& x : red->first) x = -x;
    red->second = -red->second;
  }
  return red;
}

// alpha / g and b / g for O2 data; nullopt when Tau(b) has no covariants.
std::optional<std::pair<O2Rep, int>> normalize_o2(const O2Rep& rep, const O2Target& w) {
  validate(rep, true);
  validate(w);
  if (rep.n() == 0) throw HypothesisViolation("representation without tau summands; use gamma_o2_detonly");
  int g = abs_gcd(rep.alphas);
  if (w.b % g != 0) return std::nullopt;
  O2Rep r = rep;
  for (int& x : r.alphas) x /= g;
  return std::make_pair(r, w.b / g);
}

WeightVector doubled(const O2Rep& rep) {
  WeightVector ac;
  for (int x : rep.alphas) ac.push_back(-x);
  for (int x : rep.alphas) ac.push_back(x);
  return ac;
}

}  // namespace

int pole_order_s1(const WeightVector& a) { return static_cast<int>(a.size()) - 1; }
int pole_order_s1_cotangent(const WeightVector& a) { return 2 * static_cast<int>(a.size()) - 1; }
int pole_order_s1_onshell(const WeightVector& a) { return 2 * static_cast<int>(a.size()) - 2; }
int pole_order_o2(const O2Rep& rep) { return 2 * rep.n() + rep.d - 1; }
int pole_order_o2_onshell(const O2Rep& rep) { return 4 * rep.n() + 2 * rep.d - 2; }

Q gamma_s1(const WeightVector& a0, int b0, int m) {
  check_index(m, 0, 1);
  auto nb = normalize_s1(a0, b0);
  if (!nb) return 0;
  auto [a, b] = *nb;
  Split s = split(a);
  if (s.neg.empty() || s.pos.empty()) {
    // Same sign: flip to positive weights, target sum y_i a_i = -b.
    if (s.pos.empty()) {
      for (int& x : a) x = -x;
      b = -b;
    }
    if (b > 0) return 0;
    return gamma_s1_positive(a, -b, m);
  }
  return gamma_s1_mixed(a, b, m);
}

Q gamma_s1_distinct(const WeightVector& a0, int b0, int m) {
  check_index(m, 0, 1);
  auto nb = normalize_s1(a0, b0);
  if (!nb) return 0;
  auto [a, b] = *nb;
  Split s = split(a);
  if (s.neg.empty() || s.pos.empty()) throw HypothesisViolation("distinct form needs weights of both signs");
  for (std::size_t i = 0; i < s.neg.size(); ++i)
    for (std::size_t j = i + 1; j < s.neg.size(); ++j)
      if (s.neg[i] == s.neg[j]) throw HypothesisViolation("distinct form needs distinct negative weights");
  int n = static_cast<int>(a.size());
  auto others = [&](std::size_t i, std::size_t skip) {
    Q p = 1;
    for (std::size_t l = 0; l < a.size(); ++l)
      if (l != i && l != skip) p *= Q(a[i] - a[l]);
    return p;
  };
  Q r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) continue;
    if (m == 0) {
      r -= qpow(Q(a[i]), n - 2) / others(i, a.size());
      continue;
    }
    Q rest = -2 * b;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) rest += a[j];
    r += qpow(Q(a[i]), n - 3) * rest / (2 * others(i, a.size()));
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      WeightVector sub = a;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
      int g = abs_gcd(sub);
      if (g == 1) continue;
      r -= root_sum(g, a[j], b) * qpow(Q(a[i]), n - 3) / others(i, j);
    }
  }
  return r;
}

Q gamma_s1_cotangent(const WeightVector& a, int b, int m) {
  check_index(m, 0, 1);
  validate(a);
  int g = abs_gcd(a);
  if (b % g != 0) return 0;
  int n = static_cast<int>(a.size());
  if (n == 1) {
    // t^|b| / (1 - t^2)
    if (m == 0) return half(1);
    return half(1, 4) - half(std::abs(b / g));
  }
  std::vector<Q> alpha;
  for (int x : a) alpha.emplace_back(std::abs(x) / g);
  std::vector<int> top{n - 2}, stair;
  for (int i = n - 2; i >= 0; --i) top.push_back(i);
  for (int i = n - 1; i >= 0; --i) stair.push_back(i);
  Q g0 = schur_eval(top, alpha) / (2 * schur_eval(stair, alpha));
  return m == 0 ? g0 : g0 / 2;
}

Q gamma_s1_cotangent_distinct(const WeightVector& a) {
  validate(a);
  int g = abs_gcd(a);
  int n = static_cast<int>(a.size());
  std::vector<Q> alpha;
  for (int x : a) alpha.emplace_back(std::abs(x) / g);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if (alpha[i] == alpha[j]) throw HypothesisViolation("distinct form needs distinct |a_i|");
  Q r = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Q p = 2;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (j != i) p *= alpha[i] * alpha[i] - alpha[j] * alpha[j];
    r += qpow(alpha[i], 2 * n - 3) / p;
  }
  return r;
}

Q gamma_s1_onshell(const WeightVector& a, int m) {
  check_index(m, 0, 3);
  validate(a);
  FactoredRatFun f = hilb_s1_onshell_univariate(a);
  return laurent_at_one_from(f, -pole_order_s1_onshell(a), m + 1).coeffs[m];
}

Q gamma_o2(const O2Rep& rep0, const O2Target& w, int m) {
  check_index(m, 0, 1);
  auto nb = normalize_o2(rep0, w);
  if (!nb) return 0;
  const auto& [rep, b] = *nb;
  int n = rep.n(), d = rep.d;
  Q r = Q(w.c1()) * gamma_s1(doubled(rep), b, m) / 2;
  if (m == 0 && n == 1 && d == 0) r += half(w.c2(), 4);
  if (m == 1 && n + d <= 2) r += half(w.c2(), 8);
  return r;
}

Q gamma_o2_onshell(const O2Rep& rep0, int m) {
  check_index(m, 0, 3);
  auto nb = normalize_o2(rep0, O2Target::trivial());
  const O2Rep& rep = nb->first;
  int n = rep.n(), d = rep.d;
  if (m == 1) return 0;
  WeightVector ac = doubled(rep);
  if (m == 0) return gamma_s1_onshell(ac, 0) / 2 + (n == 1 && d == 0 ? half(1, 4) : Q(0));
  return gamma_s1_onshell(ac, 2) / 2 + (n + d <= 2 ? half(1, 16) : Q(0));
}

Q gamma_o2_detonly(int d, const O2Target& w, int m) {
  validate(w);
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (m < 0) throw std::invalid_argument("coefficient index out of range");
  Q r = Q(w.c2()) * binomial(d + m - 1, m);
  mpz_class p = 1;
  p <<= static_cast<mp_bitcnt_t>(d + m + 1);
  return r / Q(p);
}

namespace {

struct NestedSeries {
  int shift = 0;                     // coefficient k multiplies u^(k - shift)
  std::vector<FactoredRatFun> c;     // univariate in the inner variable
};

std::vector<FactoredRatFun> series_mul(const std::vector<FactoredRatFun>& a, const std::vector<FactoredRatFun>& b,
                                       std::size_t len) {
  std::vector<FactoredRatFun> r(len, FactoredRatFun::zero(1));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<FactoredRatFun> series_scale(const std::vector<FactoredRatFun>& a, const UPoly& q, std::size_t len) {
  std::vector<FactoredRatFun> r(len, FactoredRatFun::zero(1));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.size() && i + j < len; ++j)
      if (q[j] != 0) r[i + j] += a[i] * q[j];
  }
  return r;
}

// 1 - (1 - u)^p as a polynomial in u
UPoly one_minus_shifted(int p) {
  UPoly w(static_cast<std::size_t>(p) + 1, Q(0));
  for (int j = 1; j <= p; ++j) w[j] = (j % 2 == 1 ? Q(1) : Q(-1)) * binomial(p, j);
  return w;
}

// f(1 - u, y) = u^(-shift) * sum_k c_k(y) u^k, k < len
NestedSeries expand_outer(const FactoredRatFun& f, std::size_t len) {
  NestedSeries out;
  out.c.assign(len, FactoredRatFun::zero(1));
  for (const auto& [e, coef] : f.numerator().terms()) {
    int p = e[0];
    LaurentPoly ypart = LaurentPoly::monomial(1, Mono::unit(0, e[1]), coef);
    for (std::size_t j = 0; j < len; ++j) {
      if (p >= 0 && static_cast<int>(j) > p) break;
      Q bc = binomial(p, static_cast<int64_t>(j)) * (j % 2 == 0 ? 1 : -1);
      if (bc != 0) out.c[j] += FactoredRatFun(ypart * bc);
    }
  }
  for (const auto& [m, k] : f.denominator()) {
    int p = m[0], q = m[1];
    if (p < 0 || q < 0 || (p == 0 && q == 0)) throw NegativeExponent("nested expansion needs a standard function");
    for (int rep = 0; rep < k; ++rep) {
      if (p == 0) {
        FactoredRatFun inv = FactoredRatFun::inverse_binomial(1, Mono::unit(0, q));
        for (auto& c : out.c)
          if (!c.is_zero()) c *= inv;
      } else if (q == 0) {
        UPoly w = one_minus_shifted(p);
        UPoly U(w.begin() + 1, w.end());
        out.c = series_scale(out.c, upoly_inverse(U, len), len);
        ++out.shift;
      } else {
        // 1 / ((1 - y^q) + y^q w) = sum_r (-y^q)^r w^r / (1 - y^q)^(r + 1)
        UPoly w = one_minus_shifted(p);
        std::vector<FactoredRatFun> inv(len, FactoredRatFun::zero(1));
        UPoly wr{Q(1)};
        for (std::size_t r = 0; r < len; ++r) {
          FactoredRatFun term = FactoredRatFun::inverse_binomial(1, Mono::unit(0, q), static_cast<int>(r) + 1) *
                                FactoredRatFun::monomial(1, Mono::unit(0, q * static_cast<int>(r)),
                                                         r % 2 == 0 ? Q(1) : Q(-1));
          for (std::size_t j = r; j < wr.size() && j < len; ++j)
            if (wr[j] != 0) inv[j] += term * wr[j];
          wr = upoly_mul(wr, w, len);
        }
        out.c = series_mul(out.c, inv, len);
      }
    }
  }
  for (auto& c : out.c) c.reduce();
  return out;
}

}  // namespace

BivariateExpansion nested_laurent_at_one(const FactoredRatFun& f0, ExpansionOrder order, int nouter, int ninner) {
  if (f0.nvars() != 2) throw std::invalid_argument("nested expansion needs a bivariate function");
  if (nouter < 0 || ninner < 0) throw std::invalid_argument("negative term count");
  FactoredRatFun f = order == ExpansionOrder::SThenT ? f0 : substitute(f0, {Mono::unit(1), Mono::unit(0)}, 2);
  BivariateExpansion out;
  if (f.is_zero()) {
    out.inner.assign(nouter, LaurentExpansion{0, std::vector<Q>(ninner, Q(0))});
    return out;
  }
  std::size_t len = static_cast<std::size_t>(nouter) + 2;
  for (;;) {
    NestedSeries s = expand_outer(f, len);
    std::size_t v = 0;
    while (v < s.c.size() && s.c[v].is_zero()) ++v;
    if (v + nouter <= s.c.size()) {
      out.outer_order = static_cast<int>(v) - s.shift;
      for (int i = 0; i < nouter; ++i) out.inner.push_back(laurent_at_one(s.c[v + i], ninner));
      return out;
    }
    len *= 2;
  }
}

Q gamma_bigraded_onshell(const WeightVector& a, ExpansionOrder order, int i, int j) {
  validate(a);
  if (!((i == 0 && j == 0) || (i == 1 && j == 0) || (i == 1 && j == 1)))
    throw std::invalid_argument("bigraded index must be (0,0), (1,0) or (1,1)");
  int n = static_cast<int>(a.size());
  Split s = split(a);
  if (n < 3 || s.neg.empty() || s.pos.empty()) throw HypothesisViolation("needs n >= 3 weights of both signs");
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q)
      if (std::gcd(std::abs(a[p]), std::abs(a[q])) != 1)
        throw HypothesisViolation("weights must be pairwise relatively prime");
  bool neg_side = order == ExpansionOrder::SThenT;
  Q r = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if ((a[p] < 0) != neg_side) continue;
    Q prod = 1;
    for (std::size_t l = 0; l < a.size(); ++l)
      if (l != p) prod *= Q(a[p] - a[l]);
    if (i == 0) {
      r += qpow(Q(a[p]), n - 2) / prod;
      continue;
    }
    Q rest = 0;
    for (std::size_t l = 0; l < a.size(); ++l)
      if (l != p) rest += a[l];
    r += qpow(Q(a[p]), n - 3) * rest / prod;
  }
  // Sums over the negative side carry the opposite sign.
  if (neg_side) r = -r;
  if (i == 0) return r;
  if (j == 0) return -r;
  return r / 2;
}

}  // namespace hilbert
