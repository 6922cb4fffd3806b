#include "hilbert/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hilbert {

using ojson = nlohmann::ordered_json;

std::vector<std::string> default_names(int nvars) {
  if (nvars == 1) return {"t"};
  std::vector<std::string> r;
  for (int i = 1; i <= nvars; ++i) r.push_back("t" + std::to_string(i));
  return r;
}

std::string rational_text(const Q& q) { return q.get_str(); }

std::string monomial_text(const Mono& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

std::vector<std::pair<Mono, Q>> ordered_terms(const LaurentPoly& p) {
  std::vector<std::pair<Mono, Q>> v(p.terms().begin(), p.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    auto dx = x.first.total(), dy = y.first.total();
    if (dx != dy) return dx < dy;
    return y.first < x.first;
  });
  return v;
}

std::vector<std::pair<Mono, int>> ordered_factors(const FactoredRatFun& f) {
  std::vector<std::pair<Mono, int>> v(f.denominator().begin(), f.denominator().end());
  std::reverse(v.begin(), v.end());
  return v;
}

ojson rational_json(const Q& q) {
  return ojson{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Q rational_from(const ojson& j) {
  Q q(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

std::string poly_text(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : ordered_terms(p)) {
    Q a = abs(c);
    bool neg = c < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (m.is_zero())
      s += rational_text(a);
    else if (a == 1)
      s += monomial_text(m, names);
    else
      s += rational_text(a) + "*" + monomial_text(m, names);
  }
  return s;
}

std::string to_text(const FactoredRatFun& f, const std::vector<std::string>& names) {
  std::string num = poly_text(f.numerator(), names);
  if (f.denominator().empty()) return num;
  std::string den;
  for (const auto& [m, k] : ordered_factors(f)) {
    if (!den.empty()) den += " * ";
    den += "(1 - " + monomial_text(m, names) + ")^" + std::to_string(k);
  }
  return "(" + num + ") / (" + den + ")";
}

std::string to_text(const FactoredRatFun& f) { return to_text(f, default_names(f.nvars())); }

std::string to_json(const FactoredRatFun& f, const std::vector<std::string>& names) {
  ojson j;
  j["nvars"] = f.nvars();
  j["vars"] = names;
  ojson num = ojson::array();
  for (const auto& [m, c] : ordered_terms(f.numerator()))
    num.push_back(ojson{{"exponents", m.to_vector(f.nvars())}, {"coefficient", rational_json(c)}});
  j["numerator"] = num;
  ojson den = ojson::array();
  for (const auto& [m, k] : ordered_factors(f))
    den.push_back(ojson{{"monomial", m.to_vector(f.nvars())}, {"multiplicity", k}});
  j["denominator"] = den;
  return j.dump();
}

std::string to_json(const FactoredRatFun& f) { return to_json(f, default_names(f.nvars())); }

FactoredRatFun ratfun_from_json(const std::string& text) {
  ojson j = ojson::parse(text);
  int n = j.at("nvars").get<int>();
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("nvars out of range");
  LaurentPoly num(n);
  for (const auto& t : j.at("numerator")) {
    auto e = t.at("exponents").get<std::vector<int>>();
    if (e.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("exponent length mismatch");
    num.add_term(Mono::from(e), rational_from(t.at("coefficient")));
  }
  std::vector<BinomialFactor> den;
  for (const auto& t : j.at("denominator")) {
    auto e = t.at("monomial").get<std::vector<int>>();
    if (e.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("exponent length mismatch");
    den.push_back({Mono::from(e), t.at("multiplicity").get<int>()});
  }
  return FactoredRatFun(std::move(num), den);
}

std::string series_text(const SeriesBox& s) {
  std::ostringstream os;
  for (const auto& [m, c] : s.coeffs) {
    os << "[";
    for (std::size_t i = 0; i < s.bounds.size(); ++i) os << (i ? "," : "") << m[i];
    os << "] " << rational_text(c) << "\n";
  }
  return os.str();
}

std::string series_json(const SeriesBox& s) {
  ojson j;
  j["bounds"] = s.bounds;
  ojson arr = ojson::array();
  for (const auto& [m, c] : s.coeffs)
    arr.push_back(ojson{{"exponents", m.to_vector(static_cast<int>(s.bounds.size()))}, {"coefficient", rational_json(c)}});
  j["coefficients"] = arr;
  return j.dump();
}

std::string laurent_text(const LaurentExpansion& e) {
  std::ostringstream os;
  os << "leading_order " << e.leading_order << "\n";
  for (std::size_t m = 0; m < e.coeffs.size(); ++m) os << m << " " << rational_text(e.coeffs[m]) << "\n";
  return os.str();
}

std::string laurent_json(const LaurentExpansion& e) {
  ojson j;
  j["leading_order"] = e.leading_order;
  ojson arr = ojson::array();
  for (const auto& c : e.coeffs) arr.push_back(rational_json(c));
  j["coefficients"] = arr;
  return j.dump();
}

}  // namespace hilbert
