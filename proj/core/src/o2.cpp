#include "hilbert/o2.hpp"

#include <numeric>
#include <stdexcept>

#include "hilbert/s1.hpp"

namespace hilbert {

FactoredRatFun inverse_one_plus(int nvars, const Mono& m, int k) {
  return FactoredRatFun(LaurentPoly::one_minus_pow(nvars, m, k), FactoredRatFun::Denominator{{m.scaled(2), k}});
}

namespace {

// Common assembly: each tau summand i carries an image X_i and each det summand j an image Y_j.
// (C1/2) prod_j 1/(1 - Y_j) * S1 series of (-alpha, alpha) with both coordinates of summand i sent to
// X_i, plus C2 / (2 prod_i (1 - X_i^2) prod_j (1 + Y_j)).
FactoredRatFun assemble(const O2Rep& rep_in, const O2Target& w, const std::vector<Mono>& x,
                        const std::vector<Mono>& y, int nvars) {
  validate(rep_in, true);
  validate(w);
  O2Rep rep = rep_in;
  int b = w.kind == O2Target::Kind::Tau ? w.b : 0;
  if (!rep.alphas.empty()) {
    int g = static_cast<int>(gcd_all(rep.alphas));
    if (b % g != 0) return FactoredRatFun::zero(nvars);
    for (int& a : rep.alphas) a /= g;
    b /= g;
  }
  const Q half(1, 2);

  FactoredRatFun first = FactoredRatFun::zero(nvars);
  if (rep.alphas.empty()) {
    // SO2 acts trivially: the rotation average of the W character is 1 for Trivial/Det, 0 for Tau.
    if (w.kind != O2Target::Kind::Tau) first = FactoredRatFun::constant(nvars, 1);
  } else {
    WeightVector a;
    std::vector<Mono> images;
    for (std::size_t i = 0; i < rep.alphas.size(); ++i) {
      a.push_back(-rep.alphas[i]);
      images.push_back(x[i]);
    }
    for (std::size_t i = 0; i < rep.alphas.size(); ++i) {
      a.push_back(rep.alphas[i]);
      images.push_back(x[i]);
    }
    first = hilb_s1_graded(a, b, images, nvars) * Q(w.c1());
  }
  if (!first.is_zero()) {
    FactoredRatFun::Denominator den;
    for (const auto& m : y) den[m] += 1;
    first *= FactoredRatFun(LaurentPoly::constant(nvars, half), den);
  }

  if (w.c2() != 0) {
    FactoredRatFun::Denominator den;
    for (const auto& m : x) den[m.scaled(2)] += 1;
    FactoredRatFun second(LaurentPoly::constant(nvars, half * w.c2()), den);
    for (const auto& m : y) second *= inverse_one_plus(nvars, m);
    first += second;
  }
  return first;
}

}  // namespace

FactoredRatFun hilb_o2_max(const O2Rep& rep, const O2Target& w) {
  validate(rep, true);
  std::vector<Mono> x, y;
  for (int i = 0; i < rep.n(); ++i) x.push_back(Mono::unit(i));
  for (int j = 0; j < rep.d; ++j) y.push_back(Mono::unit(rep.n() + j));
  return assemble(rep, w, x, y, rep.nvars());
}

FactoredRatFun hilb_o2_univariate(const O2Rep& rep, const O2Target& w) {
  validate(rep, true);
  return assemble(rep, w, std::vector<Mono>(rep.n(), Mono::unit(0)), std::vector<Mono>(rep.d, Mono::unit(0)), 1);
}

FactoredRatFun hilb_o2_cotangent_bigraded(const O2Rep& rep, const O2Target& w) {
  validate(rep, true);
  O2Rep doubled = rep;
  doubled.alphas.insert(doubled.alphas.end(), rep.alphas.begin(), rep.alphas.end());
  doubled.d = 2 * rep.d;
  std::vector<Mono> x, y;
  for (int i = 0; i < rep.n(); ++i) x.push_back(Mono::unit(0));
  for (int i = 0; i < rep.n(); ++i) x.push_back(Mono::unit(1));
  for (int j = 0; j < rep.d; ++j) y.push_back(Mono::unit(0));
  for (int j = 0; j < rep.d; ++j) y.push_back(Mono::unit(1));
  return assemble(doubled, w, x, y, 2);
}

FactoredRatFun hilb_o2_onshell_bigraded(const O2Rep& rep) {
  FactoredRatFun st = FactoredRatFun::monomial(2, Mono::from({1, 1}));
  return hilb_o2_cotangent_bigraded(rep, O2Target::trivial()) - st * hilb_o2_cotangent_bigraded(rep, O2Target::det());
}

FactoredRatFun hilb_o2_onshell_univariate(const O2Rep& rep) {
  return substitute(hilb_o2_onshell_bigraded(rep), {Mono::unit(0), Mono::unit(0)}, 1);
}

}  // namespace hilbert
