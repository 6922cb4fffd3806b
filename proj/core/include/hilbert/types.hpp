#pragma once

#include <string>
#include <vector>

namespace hilbert {

// S1 weights a = (a_1, ..., a_n), all nonzero. Any ordering is accepted; results keep variable t_i
// attached to the i-th entry.
using WeightVector = std::vector<int>;

// O2 representation: tau_{alpha_1} + ... + tau_{alpha_n} + d copies of det.
struct O2Rep {
  std::vector<int> alphas;
  int d = 0;
  int n() const { return static_cast<int>(alphas.size()); }
  int nvars() const { return n() + d; }
};

struct O2Target {
  enum class Kind { Trivial, Det, Tau };
  Kind kind = Kind::Trivial;
  int b = 0;  // Tau only, b > 0

  static O2Target trivial() { return {Kind::Trivial, 0}; }
  static O2Target det() { return {Kind::Det, 0}; }
  static O2Target tau(int b) { return {Kind::Tau, b}; }

  int c1() const { return kind == Kind::Tau ? 2 : 1; }
  int c2() const { return kind == Kind::Det ? -1 : kind == Kind::Tau ? 0 : 1; }
  std::string name() const;
};

// V = nu_{a_1} + ... + nu_{a_n} for the semidirect product S1 x| Z/4.
struct Z4Rep {
  std::vector<int> a;
};

enum class Z4Component { Identity = 0, Gamma = 1, GammaSquared = 2, GammaCubed = 3 };

void validate(const WeightVector& a);
void validate(const O2Rep& rep, bool allow_empty_tau = false);
void validate(const O2Target& w);
void validate(const Z4Rep& rep);

}  // namespace hilbert
