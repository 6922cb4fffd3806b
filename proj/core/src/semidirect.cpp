#include "hilbert/semidirect.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "hilbert/errors.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/s1.hpp"

namespace hilbert {

SeriesBox z4_series(const Z4Rep& rep, const std::vector<int>& bounds) {
  validate(rep);
  if (bounds.size() != rep.a.size()) throw std::invalid_argument("bounds must match the number of blocks");
  return oracle_series(
      [&](const std::vector<int>& d) -> Q {
        Q s = 0;
        for (Z4Component c : {Z4Component::Identity, Z4Component::Gamma, Z4Component::GammaSquared,
                              Z4Component::GammaCubed})
          s += oracle_z4_component(rep, c, d);
        return s / 4;
      },
      bounds);
}

FactoredRatFun z4_component(const Z4Rep& rep, Z4Component c) {
  validate(rep);
  int n = static_cast<int>(rep.a.size());
  WeightVector w;
  std::vector<Mono> images;
  switch (c) {
    case Z4Component::Identity:
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1, 1, -1}) {
          w.push_back(s * rep.a[i]);
          images.push_back(Mono::unit(i));
        }
      return hilb_s1_graded(w, 0, images, n);
    case Z4Component::GammaSquared:
      // eigenvalues +-z^a t, +-z^-a t: det = (1 - t^2 z^2a)(1 - t^2 z^-2a); scaling weights is harmless
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
          w.push_back(s * rep.a[i]);
          images.push_back(Mono::unit(i, 2));
        }
      return hilb_s1_graded(w, 0, images, n);
    case Z4Component::Gamma:
    case Z4Component::GammaCubed: {
      FactoredRatFun f = FactoredRatFun::constant(n, 1);
      for (int i = 0; i < n; ++i) f *= FactoredRatFun::inverse_binomial(n, Mono::unit(i, 4));
      return f;
    }
  }
  return FactoredRatFun::zero(n);
}

FactoredRatFun hilb_z4(const Z4Rep& rep) {
  FactoredRatFun g = z4_component(rep, Z4Component::Gamma);
  FactoredRatFun h = (z4_component(rep, Z4Component::Identity) + z4_component(rep, Z4Component::GammaSquared) +
                      g * Q(2)) *
                     Q(1, 4);
  return h.reduce();
}

std::vector<BinomialFactor> z4_denominator_ansatz(const Z4Rep& rep) {
  FactoredRatFun h = hilb_z4(rep);
  int n = h.nvars();
  std::vector<Mono> fac;
  for (const auto& [m, k] : h.denominator())
    for (int r = 0; r < k; ++r) fac.push_back(m);
  LaurentPoly num = h.numerator();
  // Replace 1 - mu^g by 1 - mu^L (L | g, L = 0 drops it) while the numerator stays divisible.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < fac.size() && !changed; ++i) {
      int g = 0;
      for (int v = 0; v < n; ++v) g = std::gcd(g, fac[i][v]);
      Mono mu = fac[i];
      for (int v = 0; v < n; ++v) mu[v] /= g;
      for (int L = 0; L < g && !changed; ++L) {
        if (L > 0 && g % L != 0) continue;
        LaurentPoly t = L == 0 ? num : num * LaurentPoly::one_minus_pow(n, mu.scaled(L), 1);
        if (auto d = t.div_one_minus(fac[i])) {
          num = std::move(*d);
          if (L == 0)
            fac.erase(fac.begin() + static_cast<std::ptrdiff_t>(i));
          else
            fac[i] = mu.scaled(L);
          changed = true;
        }
      }
    }
  }
  std::map<Mono, int> mult;
  for (const Mono& m : fac) ++mult[m];
  std::vector<BinomialFactor> out;
  for (const auto& [m, k] : mult) out.push_back({m, k});
  return out;
}

namespace {

// Product of the truncated series with prod (1 - m)^k, restricted to the box.
LaurentPoly times_denominator(const SeriesBox& s, const std::vector<BinomialFactor>& den, int nvars, int fit) {
  LaurentPoly p(nvars);
  for (const auto& [m, c] : s.coeffs) p.add_term(m, c);
  auto in_box = [&](const Mono& m) {
    for (int i = 0; i < nvars; ++i)
      if (m[i] > fit) return false;
    return true;
  };
  for (const auto& f : den) {
    for (int r = 0; r < f.multiplicity; ++r) {
      LaurentPoly q = p - p * LaurentPoly::monomial(nvars, f.monomial);
      LaurentPoly t(nvars);
      for (const auto& [m, c] : q.terms())
        if (in_box(m)) t.add_term(m, c);
      p = std::move(t);
    }
  }
  return p;
}

std::optional<FactoredRatFun> try_fit(const Z4Rep& rep, const std::vector<BinomialFactor>& den, int fit,
                                      const SeriesBox& check, int verify) {
  int n = static_cast<int>(rep.a.size());
  SeriesBox data;
  data.bounds.assign(n, fit);
  for (const auto& [m, c] : check.coeffs) {
    bool in = true;
    for (int i = 0; i < n; ++i) in = in && m[i] <= fit;
    if (in) data.coeffs.emplace(m, c);
  }
  FactoredRatFun f(times_denominator(data, den, n, fit), den);
  if (series_box(f, std::vector<int>(n, verify)) != check) return std::nullopt;
  f.reduce();
  return f;
}

}  // namespace

FactoredRatFun z4_reconstruct(const Z4Rep& rep, int fit, int verify) {
  validate(rep);
  if (fit < 0 || verify <= fit) throw std::invalid_argument("verification box must be larger than the fit box");
  int n = static_cast<int>(rep.a.size());
  SeriesBox check = z4_series(rep, std::vector<int>(n, verify));
  std::vector<BinomialFactor> den = z4_denominator_ansatz(rep);
  if (auto f = try_fit(rep, den, fit, check, verify)) return *f;
  for (auto& b : den) b.multiplicity *= 2;
  if (auto f = try_fit(rep, den, fit, check, verify)) return *f;
  throw ReconstructionFailure("z4 numerator does not fit in the box of degree " + std::to_string(fit));
}

}  // namespace hilbert
