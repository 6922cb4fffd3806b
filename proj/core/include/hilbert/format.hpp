#pragma once

#include <string>
#include <vector>

#include "hilbert/ratfun.hpp"

namespace hilbert {

// t for one variable, t1..tn otherwise.
std::vector<std::string> default_names(int nvars);

std::string rational_text(const Q& q);
std::string monomial_text(const Mono& m, const std::vector<std::string>& names);
// Terms by ascending total degree, lex-descending within a degree.
std::string poly_text(const LaurentPoly& p, const std::vector<std::string>& names);
// (numerator) / ((1 - m1)^k1 * (1 - m2)^k2 ...), factors in lex-descending order of exponents.
std::string to_text(const FactoredRatFun& f, const std::vector<std::string>& names);
std::string to_text(const FactoredRatFun& f);

std::string to_json(const FactoredRatFun& f);
std::string to_json(const FactoredRatFun& f, const std::vector<std::string>& names);
FactoredRatFun ratfun_from_json(const std::string& text);

std::string series_text(const SeriesBox& s);
std::string series_json(const SeriesBox& s);
std::string laurent_text(const LaurentExpansion& e);
std::string laurent_json(const LaurentExpansion& e);

}  // namespace hilbert
