#include "hilbert/s1.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace hilbert {

std::optional<std::pair<WeightVector, int>> reduce_representation(const WeightVector& a, int b) {
  validate(a);
  int g = static_cast<int>(gcd_all(a));
  if (b % g != 0) return std::nullopt;
  WeightVector r(a);
  for (int& x : r) x /= g;
  return std::make_pair(r, b / g);
}

std::vector<std::vector<int>> frobenius_solutions(const std::vector<int>& alphas, int target) {
  for (int a : alphas)
    if (a <= 0) throw std::invalid_argument("frobenius_solutions needs positive alphas");
  std::vector<std::vector<int>> out;
  if (target < 0) return out;
  std::vector<int> y(alphas.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == alphas.size()) {
      if (left == 0) out.push_back(y);
      return;
    }
    for (int v = left / alphas[i]; v >= 0; --v) {
      y[i] = v;
      rec(i + 1, left - v * alphas[i]);
    }
    y[i] = 0;
  };
  rec(0, target);
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int x, int y) { p[find(x)] = find(y); }
};

}  // namespace

FactoredRatFun hilb_s1_graded(const WeightVector& a_in, int b_in, const std::vector<Mono>& images, int nvars,
                              const S1Options& opt) {
  validate(a_in);
  const int n = static_cast<int>(a_in.size());
  if (images.size() != a_in.size()) throw std::invalid_argument("one image per weight required");
  for (const auto& m : images)
    if (!m.nonneg() || m.is_zero()) throw std::invalid_argument("images must be nonzero nonnegative monomials");

  S1Report local;
  S1Report& rep = opt.report ? *opt.report : local;
  rep = S1Report{};
  rep.gcd = static_cast<int>(gcd_all(a_in));
  auto red = reduce_representation(a_in, b_in);
  if (!red) {
    rep.no_covariants = true;
    return FactoredRatFun::zero(nvars);
  }
  auto [a, b] = *red;
  bool all_pos = true;
  for (int x : a)
    if (x < 0) all_pos = false;
  if (opt.sign_reduction && (b < 0 || (b == 0 && all_pos))) {
    for (int& x : a) x = -x;
    b = -b;
    rep.sign_flipped = true;
  }

  std::vector<int> neg, pos;
  for (int i = 0; i < n; ++i) (a[i] < 0 ? neg : pos).push_back(i);

  // Negative weights i, j whose mixed factor (1 - t_j^(alpha_i/g) t_i^(-alpha_j/g)) would become
  // (1 - 1) under the images go into one class.
  UnionFind uf(n);
  for (std::size_t x = 0; x < neg.size(); ++x)
    for (std::size_t y = x + 1; y < neg.size(); ++y) {
      int i = neg[x], j = neg[y];
      if (images[i].scaled(-a[j]) == images[j].scaled(-a[i])) uf.join(i, j);
    }
  std::vector<std::vector<int>> classes;
  {
    std::vector<int> slot(n, -1);
    for (int i : neg) {
      int r = uf.find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(classes.size());
        classes.emplace_back();
      }
      classes[slot[r]].push_back(i);
    }
  }

  FactoredRatFun total = FactoredRatFun::zero(nvars);
  for (const auto& cls : classes) {
    const int L = nvars + static_cast<int>(cls.size());
    if (L > kMaxVars) throw std::invalid_argument("too many variables for the graded engine");
    std::vector<Mono> local_image(images.begin(), images.end());
    std::vector<Mono> back(L);
    for (int v = 0; v < nvars; ++v) back[v] = Mono::unit(v);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      local_image[cls[c]] = Mono::unit(nvars + static_cast<int>(c));
      back[nvars + c] = images[cls[c]];
    }
    FactoredRatFun sum = FactoredRatFun::zero(L);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      const int i = cls[c];
      const int var = nvars + static_cast<int>(c);
      const int alpha = -a[i];
      // Phi_i = s^b / prod_{j neg, j != i} (1 - X_j s^(-alpha_j)) prod_{j pos} (1 - X_j s^(alpha_j)), s = t_i
      std::vector<BinomialFactor> den;
      for (int j : neg)
        if (j != i) den.push_back({local_image[j] + Mono::unit(var, a[j]), 1});
      for (int j : pos) den.push_back({local_image[j] + Mono::unit(var, a[j]), 1});
      FactoredRatFun phi(LaurentPoly::monomial(L, Mono::unit(var, b)), den);
      sum += u_average(phi, alpha, var);
    }
    total += substitute(sum, back, nvars);
  }

  if (!rep.sign_flipped) {
    int target = -b;
    for (int i : neg) target += a[i];
    std::vector<int> alphas(n);
    for (int i = 0; i < n; ++i) alphas[i] = std::abs(a[i]);
    auto sols = frobenius_solutions(alphas, target);
    rep.s_set_size = static_cast<int>(sols.size());
    if (!sols.empty()) {
      LaurentPoly s(nvars);
      const Q sign = neg.size() % 2 ? -1 : 1;
      for (const auto& y : sols) {
        Mono m;
        for (int i = 0; i < n; ++i) m += images[i].scaled(a[i] < 0 ? -y[i] - 1 : y[i]);
        s.add_term(m, sign);
      }
      total += FactoredRatFun(s);
    }
  }
  return total;
}

FactoredRatFun hilb_s1_max(const WeightVector& a, int b, const S1Options& opt) {
  validate(a);
  const int n = static_cast<int>(a.size());
  std::vector<Mono> id(n);
  for (int i = 0; i < n; ++i) id[i] = Mono::unit(i);
  return hilb_s1_graded(a, b, id, n, opt);
}

FactoredRatFun hilb_s1_univariate(const WeightVector& a, int b) { return substitute_diagonal(hilb_s1_max(a, b)); }

FactoredRatFun hilb_s1_cotangent_bigraded(const WeightVector& a, int b) {
  validate(a);
  const int n = static_cast<int>(a.size());
  WeightVector ac(a);
  std::vector<Mono> images(n, Mono::unit(0));
  for (int i = 0; i < n; ++i) {
    ac.push_back(-a[i]);
    images.push_back(Mono::unit(1));
  }
  return hilb_s1_graded(ac, b, images, 2);
}

FactoredRatFun hilb_s1_onshell_bigraded(const WeightVector& a) {
  FactoredRatFun st(LaurentPoly::one_minus_pow(2, Mono::from({1, 1}), 1));
  return st * hilb_s1_cotangent_bigraded(a, 0);
}

FactoredRatFun hilb_s1_onshell_univariate(const WeightVector& a) {
  return substitute(hilb_s1_onshell_bigraded(a), {Mono::unit(0), Mono::unit(0)}, 1);
}

}  // namespace hilbert
