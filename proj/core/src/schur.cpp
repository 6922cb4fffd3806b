#include "hilbert/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilbert/errors.hpp"

namespace hilbert {

Q determinant(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Q f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Q vandermonde(const std::vector<Q>& xs) {
  Q v = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
  return v;
}

namespace {

Q qpow(const Q& x, int e) {
  if (e < 0) {
    if (x == 0) throw ZeroArgument("negative power of zero");
    return 1 / qpow(x, -e);
  }
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

std::vector<int> padded(const std::vector<int>& lambda, std::size_t n) {
  if (lambda.size() > n) {
    for (std::size_t i = n; i < lambda.size(); ++i)
      if (lambda[i] != 0) throw std::invalid_argument("partition longer than the alphabet");
  }
  std::vector<int> l(n, 0);
  for (std::size_t i = 0; i < std::min(n, lambda.size()); ++i) l[i] = lambda[i];
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i] < 0) throw std::invalid_argument("negative partition part");
    if (i > 0 && l[i] > l[i - 1]) throw std::invalid_argument("partition must be nonincreasing");
  }
  return l;
}

bool distinct(const std::vector<Q>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) return false;
  return true;
}

// Exact polynomials in eps.
UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  upoly_trim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  UPoly r = upoly_mul(a, b);
  upoly_trim(r);
  return r;
}

UPoly udivexact(UPoly a, const UPoly& b) {
  upoly_trim(a);
  if (a.empty()) return {};
  if (b.empty()) throw std::logic_error("division by zero polynomial");
  if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
  UPoly q(a.size() - b.size() + 1, Q(0));
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    std::size_t shift = top - b.size();
    Q c = a[top - 1] / b.back();
    q[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (top == b.size()) break;
  }
  upoly_trim(a);
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  upoly_trim(q);
  return q;
}

// Bareiss elimination; exact over Q[eps].
UPoly udet(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {Q(1)};
  bool neg = false;
  UPoly prev{Q(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].empty()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(m[p], m[k]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = udivexact(usub(umul(m[i][j], m[k][k]), umul(m[i][k], m[k][j])), prev);
    prev = m[k][k];
  }
  UPoly d = m[n - 1][n - 1];
  if (neg)
    for (auto& c : d) c = -c;
  return d;
}

// (x + c*eps)^e as exact polynomial (e >= 0) or series truncated to len terms (e < 0).
UPoly shifted_power(const Q& x, const Q& c, int e, std::size_t len) {
  UPoly r;
  if (e >= 0) {
    for (int j = 0; j <= e; ++j) r.push_back(binomial(e, j) * qpow(x, e - j) * qpow(c, j));
  } else {
    if (x == 0) throw ZeroArgument("negative power of zero");
    for (std::size_t j = 0; j < len; ++j)
      r.push_back(binomial(e, static_cast<int64_t>(j)) * qpow(x, e - static_cast<int>(j)) * qpow(c, static_cast<int>(j)));
  }
  upoly_trim(r);
  return r;
}

UPoly uvandermonde(const std::vector<Q>& xs, const std::vector<Q>& offs) {
  UPoly v{Q(1)};
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) v = umul(v, UPoly{xs[i] - xs[j], offs[i] - offs[j]});
  return v;
}

std::size_t valuation(const UPoly& p) {
  std::size_t v = 0;
  while (v < p.size() && p[v] == 0) ++v;
  return v;
}

Q coefficient(const UPoly& p, std::size_t i) { return i < p.size() ? p[i] : Q(0); }

Q ratio_at_zero(const UPoly& num, const UPoly& den) {
  std::size_t v = valuation(den);
  if (v == den.size()) throw std::logic_error("perturbed denominator vanished");
  for (std::size_t i = 0; i < v; ++i)
    if (coefficient(num, i) != 0) throw std::logic_error("perturbed ratio has a pole");
  return coefficient(num, v) / den[v];
}

}  // namespace

Q alternant(const std::vector<int>& lambda, const std::vector<Q>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = qpow(xs[j], lambda[i]);
  return determinant(m);
}

Q detail::schur_eval_perturbed(const std::vector<int>& lambda, const std::vector<Q>& xs) {
  const std::size_t n = xs.size();
  std::vector<int> l = padded(lambda, n);
  if (n == 0) return 1;
  std::vector<Q> offs(n);
  for (std::size_t i = 0; i < n; ++i) offs[i] = Q(static_cast<long>(i + 1));
  std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = shifted_power(xs[j], offs[j], l[i] + static_cast<int>(n - 1 - i), 0);
  return ratio_at_zero(udet(m), uvandermonde(xs, offs));
}

Q schur_eval(const std::vector<int>& lambda, const std::vector<Q>& xs) {
  const std::size_t n = xs.size();
  std::vector<int> l = padded(lambda, n);
  if (!distinct(xs)) return detail::schur_eval_perturbed(lambda, xs);
  std::vector<int> ld(n);
  for (std::size_t i = 0; i < n; ++i) ld[i] = l[i] + static_cast<int>(n - 1 - i);
  return alternant(ld, xs) / vandermonde(xs);
}

Q detail::partial_schur_eval_perturbed(int u, const std::vector<Q>& xs, const std::vector<Q>& ys) {
  const std::size_t k = xs.size();
  const std::size_t n = k + ys.size();
  if (n < 2) throw std::invalid_argument("partial Schur needs at least two arguments");
  std::vector<Q> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  std::vector<Q> offs(n);
  for (std::size_t i = 0; i < n; ++i) offs[i] = Q(static_cast<long>(i + 1));
  std::vector<Q> ox(offs.begin(), offs.begin() + k), oy(offs.begin() + k, offs.end());
  UPoly den = umul(uvandermonde(xs, ox), uvandermonde(ys, oy));
  std::size_t len = valuation(den) + 1;
  UPoly num;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<UPoly>> minor(n - 1, std::vector<UPoly>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[r - 1][cc++] = shifted_power(all[j], offs[j], static_cast<int>(n - 1 - r), 0);
      }
    }
    UPoly term = upoly_mul(shifted_power(all[c], offs[c], u, len), udet(minor), len);
    if (c % 2) term = usub({}, term);
    num = [&] {
      UPoly r(std::max(num.size(), term.size()), Q(0));
      for (std::size_t i = 0; i < num.size(); ++i) r[i] += num[i];
      for (std::size_t i = 0; i < term.size(); ++i) r[i] += term[i];
      return r;
    }();
  }
  num.resize(std::min(num.size(), len));
  return ratio_at_zero(num, den);
}

Q partial_schur_eval(int u, const std::vector<Q>& xs, const std::vector<Q>& ys) {
  const std::size_t k = xs.size();
  const std::size_t n = k + ys.size();
  if (n < 2) throw std::invalid_argument("partial Schur needs at least two arguments");
  if (!distinct(xs) || !distinct(ys)) return detail::partial_schur_eval_perturbed(u, xs, ys);
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, Q(0)));
  for (std::size_t j = 0; j < k; ++j) m[0][j] = qpow(xs[j], u);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) m[r][j] = qpow(j < k ? xs[j] : ys[j - k], static_cast<int>(n - 1 - r));
  return determinant(m) / (vandermonde(xs) * vandermonde(ys));
}

}  // namespace hilbert
