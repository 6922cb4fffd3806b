#include "hilbert/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>
#include <stdexcept>

namespace hilbert {

namespace {

using Histogram = std::map<int64_t, int64_t>;

// Calls f on every exponent vector of length c and total degree deg.
template <class F>
void for_each_composition(int c, int deg, F&& f) {
  std::vector<int> e(c, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == c - 1) {
      e[pos] = left;
      f(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (c == 0) {
    if (deg == 0) f(e);
    return;
  }
  rec(rec, 0, deg);
}

Histogram convolve(const Histogram& a, const Histogram& b) {
  Histogram r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) r[wa + wb] += ca * cb;
  return r;
}

Histogram weight_histogram(const std::vector<int>& weights, int deg) {
  Histogram h;
  for_each_composition(static_cast<int>(weights.size()), deg, [&](const std::vector<int>& e) {
    int64_t w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int64_t>(e[i]) * weights[i];
    ++h[w];
  });
  return h;
}

int64_t lookup(const Histogram& h, int64_t w) {
  auto it = h.find(w);
  return it == h.end() ? 0 : it->second;
}

void check_degrees(const std::vector<int>& d, std::size_t n) {
  if (d.size() != n) throw std::invalid_argument("multidegree length mismatch");
  for (int x : d)
    if (x < 0) throw std::invalid_argument("negative degree");
}

}  // namespace

Q oracle_s1_dim(const WeightVector& a, int b, const std::vector<int>& d) {
  check_degrees(d, a.size());
  int64_t w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w += static_cast<int64_t>(d[i]) * a[i];
  return w == -b ? 1 : 0;
}

Q oracle_s1_block_dim(const std::vector<std::vector<int>>& blocks, int b, const std::vector<int>& d) {
  check_degrees(d, blocks.size());
  Histogram h{{0, 1}};
  for (std::size_t i = 0; i < blocks.size(); ++i) h = convolve(h, weight_histogram(blocks[i], d[i]));
  return Q(lookup(h, -b));
}

Q oracle_o2_block_dim(const std::vector<O2Rep>& blocks, const O2Target& w, const std::vector<int>& d) {
  check_degrees(d, blocks.size());
  validate(w);
  Histogram rot{{0, 1}};
  int64_t refl = 1;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const O2Rep& blk = blocks[bi];
    // Coordinates: x_j (weight +alpha_j), y_j (weight -alpha_j) per tau summand, then det coordinates.
    std::vector<int> weights;
    for (int a : blk.alphas) {
      weights.push_back(a);
      weights.push_back(-a);
    }
    const std::size_t ntau = weights.size();
    for (int j = 0; j < blk.d; ++j) weights.push_back(0);
    Histogram h;
    int64_t r = 0;
    for_each_composition(static_cast<int>(weights.size()), d[bi], [&](const std::vector<int>& e) {
      int64_t wt = 0;
      for (std::size_t i = 0; i < e.size(); ++i) wt += static_cast<int64_t>(e[i]) * weights[i];
      ++h[wt];
      // The reflection swaps x_j and y_j and negates det coordinates.
      bool fixed = true;
      for (std::size_t i = 0; i < ntau; i += 2)
        if (e[i] != e[i + 1]) fixed = false;
      if (fixed) {
        int det_deg = 0;
        for (std::size_t i = ntau; i < e.size(); ++i) det_deg += e[i];
        r += det_deg % 2 ? -1 : 1;
      }
    });
    rot = convolve(rot, h);
    refl *= r;
  }
  int64_t rotation = 0;
  int64_t reflection = 0;
  switch (w.kind) {
    case O2Target::Kind::Trivial:
      rotation = lookup(rot, 0);
      reflection = refl;
      break;
    case O2Target::Kind::Det:
      rotation = lookup(rot, 0);
      reflection = -refl;
      break;
    case O2Target::Kind::Tau:
      rotation = lookup(rot, w.b) + lookup(rot, -w.b);
      // chi(reflection) = 0 for tau_b, so the reflection component contributes nothing.
      reflection = 0;
      break;
  }
  int64_t twice = rotation + reflection;
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("O2 oracle produced a non-integral dimension");
  return Q(twice / 2);
}

Q oracle_o2_dim(const O2Rep& rep, const O2Target& w, const std::vector<int>& d) {
  validate(rep, true);
  std::vector<O2Rep> blocks;
  for (int a : rep.alphas) blocks.push_back(O2Rep{{a}, 0});
  for (int j = 0; j < rep.d; ++j) blocks.push_back(O2Rep{{}, 1});
  return oracle_o2_block_dim(blocks, w, d);
}

Q oracle_z4_component(const Z4Rep& rep, Z4Component c, const std::vector<int>& d) {
  validate(rep);
  check_degrees(d, rep.a.size());
  switch (c) {
    case Z4Component::Identity: {
      Histogram h{{0, 1}};
      for (std::size_t i = 0; i < rep.a.size(); ++i) {
        int a = rep.a[i];
        h = convolve(h, weight_histogram({a, -a, a, -a}, d[i]));
      }
      return Q(lookup(h, 0));
    }
    case Z4Component::Gamma:
    case Z4Component::GammaCubed: {
      // Fixed monomials of the 4-cycle are powers of x1 x2 x3 x4, which have weight zero.
      for (int x : d)
        if (x % 4 != 0) return 0;
      return 1;
    }
    case Z4Component::GammaSquared: {
      // Fixed monomials of the double swap (1 3)(2 4) are x1^p x3^p x2^q x4^q, weight 2a(p - q).
      Histogram h{{0, 1}};
      for (std::size_t i = 0; i < rep.a.size(); ++i) {
        if (d[i] % 2 != 0) return 0;
        Histogram b;
        for (int p = 0; p <= d[i] / 2; ++p) ++b[2LL * rep.a[i] * (p - (d[i] / 2 - p))];
        h = convolve(h, b);
      }
      return Q(lookup(h, 0));
    }
  }
  return 0;
}

int worker_threads() {
  if (const char* env = std::getenv("HILBERT_THREADS")) {
    char* stop = nullptr;
    long v = std::strtol(env, &stop, 10);
    if (stop != env && *stop == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SeriesBox oracle_series(const DimFunction& dim, const std::vector<int>& bounds, int max_total) {
  SeriesBox out;
  out.bounds = bounds;
  const int n = static_cast<int>(bounds.size());
  std::vector<std::vector<int>> points;
  std::vector<int> d(n, 0);
  while (true) {
    int tot = 0;
    for (int x : d) tot += x;
    if (max_total < 0 || tot <= max_total) points.push_back(d);
    int i = n - 1;
    while (i >= 0 && d[i] == bounds[i]) d[i--] = 0;
    if (i < 0) break;
    ++d[i];
  }
  std::vector<Q> values(points.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), points.size() / 64 + 1);
  if (workers <= 1) {
    for (std::size_t k = 0; k < points.size(); ++k) values[k] = dim(points[k]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < points.size(); k += workers) values[k] = dim(points[k]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (std::size_t k = 0; k < points.size(); ++k)
    if (values[k] != 0) out.coeffs.emplace(Mono::from(points[k]), values[k]);
  return out;
}

SeriesBox oracle_onshell(const DimFunction& off, const DimFunction& sub, const std::vector<int>& shift,
                         const std::vector<int>& bounds, int max_total) {
  return oracle_series(
      [&](const std::vector<int>& d) -> Q {
        Q v = off(d);
        std::vector<int> e(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
          e[i] = d[i] - shift[i];
          if (e[i] < 0) return v;
        }
        return Q(v - sub(e));
      },
      bounds, max_total);
}

}  // namespace hilbert
