#include "hilbert/types.hpp"

#include <stdexcept>

#include "hilbert/poly.hpp"

namespace hilbert {

std::string O2Target::name() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Det:
      return "det";
    case Kind::Tau:
      return "tau" + std::to_string(b);
  }
  return "";
}

void validate(const WeightVector& a) {
  if (a.empty()) throw std::invalid_argument("weight vector must be nonempty");
  if (a.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many weights");
  for (int w : a)
    if (w == 0) throw std::invalid_argument("weights must be nonzero");
}

void validate(const O2Rep& rep, bool allow_empty_tau) {
  if (rep.alphas.empty() && !allow_empty_tau) throw std::invalid_argument("O2 rep needs at least one tau summand");
  if (rep.d < 0) throw std::invalid_argument("det count must be nonnegative");
  for (int a : rep.alphas)
    if (a <= 0) throw std::invalid_argument("O2 alphas must be positive");
  if (rep.nvars() > kMaxVars) throw std::invalid_argument("too many summands");
}

void validate(const O2Target& w) {
  if (w.kind == O2Target::Kind::Tau && w.b <= 0) throw std::invalid_argument("tau target needs b > 0");
}

void validate(const Z4Rep& rep) {
  if (rep.a.empty()) throw std::invalid_argument("Z4 rep must be nonempty");
  if (rep.a.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many summands");
  for (int x : rep.a)
    if (x <= 0) throw std::invalid_argument("Z4 weights must be positive");
}

}  // namespace hilbert
