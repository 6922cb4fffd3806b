#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert/errors.hpp"
#include "hilbert/format.hpp"
#include "hilbert/laurent.hpp"
#include "hilbert/o2.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/s1.hpp"
#include "hilbert/semidirect.hpp"

using namespace hilbert;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string weights;
  int b = 0;
  std::string alphas;
  int d = 0;
  std::string target = "trivial";
  std::string group;
  std::string grading = "bigraded";
  std::string order = "s-then-t";
  std::string format = "text";
  int m = 0;
  int i = 0;
  int j = 0;
  int box = 6;
  int max_total = -1;
  int laurent = 0;
  int fit = 8;
  int verify = 12;
  bool direct = false;
};

std::vector<int> parse_list(const std::string& flag, const std::string& s) {
  if (s.empty()) throw UsageError(flag + " is required");
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) throw UsageError(flag + ": malformed integer list '" + s + "'");
    out.push_back(v);
  }
  if (!s.empty() && s.back() == ',') throw UsageError(flag + ": malformed integer list '" + s + "'");
  return out;
}

WeightVector weights(const Args& a) {
  WeightVector w = parse_list("--weights", a.weights);
  for (int x : w)
    if (x == 0) throw UsageError("--weights: weights must be nonzero");
  return w;
}

O2Rep o2rep(const Args& a) {
  O2Rep r;
  if (!a.alphas.empty()) r.alphas = parse_list("--alphas", a.alphas);
  for (int x : r.alphas)
    if (x <= 0) throw UsageError("--alphas: every alpha must be positive");
  if (a.d < 0) throw UsageError("--d must be nonnegative");
  r.d = a.d;
  return r;
}

O2Target o2target(const Args& a) {
  if (a.target == "trivial") return O2Target::trivial();
  if (a.target == "det") return O2Target::det();
  if (a.target.rfind("tau:", 0) == 0) {
    std::size_t pos = 0;
    int b = 0;
    try {
      b = std::stoi(a.target.substr(4), &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != a.target.size() - 4 || b <= 0) throw UsageError("--target: tau:<b> needs a positive integer b");
    return O2Target::tau(b);
  }
  throw UsageError("--target must be trivial, det or tau:<b>");
}

Z4Rep z4rep(const Args& a) {
  Z4Rep r{parse_list("--weights", a.weights)};
  for (int x : r.a)
    if (x <= 0) throw UsageError("--weights: z4 weights must be positive");
  return r;
}

bool univariate(const Args& a) {
  if (a.grading == "univariate") return true;
  if (a.grading == "bigraded") return false;
  throw UsageError("--grading must be bigraded or univariate");
}

std::string canonical_group(const std::string& g) {
  if (g == "s1") return "s1-max";
  if (g == "o2") return "o2-max";
  return g;
}

// Series selected by a command name (or --group for expand and verify).
FactoredRatFun compute(const std::string& what, const Args& a) {
  if (what == "s1-max") {
    S1Options opt;
    opt.sign_reduction = !a.direct;
    return hilb_s1_max(weights(a), a.b, opt);
  }
  if (what == "s1-uni") return hilb_s1_univariate(weights(a), a.b);
  if (what == "s1-cotangent") return hilb_s1_cotangent_bigraded(weights(a), a.b);
  if (what == "s1-onshell")
    return univariate(a) ? hilb_s1_onshell_univariate(weights(a)) : hilb_s1_onshell_bigraded(weights(a));
  if (what == "o2-max") return hilb_o2_max(o2rep(a), o2target(a));
  if (what == "o2-uni") return hilb_o2_univariate(o2rep(a), o2target(a));
  if (what == "o2-cotangent") return hilb_o2_cotangent_bigraded(o2rep(a), o2target(a));
  if (what == "o2-onshell")
    return univariate(a) ? hilb_o2_onshell_univariate(o2rep(a)) : hilb_o2_onshell_bigraded(o2rep(a));
  if (what == "z4") return z4_reconstruct(z4rep(a), a.fit, a.verify);
  throw UsageError("unknown group '" + what + "'");
}

// Sums a bigraded box onto total degree when the univariate grading is requested.
SeriesBox diagonal(const SeriesBox& s, int box) {
  SeriesBox out;
  out.bounds = {box};
  for (const auto& [m, c] : s.coeffs) {
    int tot = m[0] + m[1];
    if (tot > box) continue;
    Q& slot = out.coeffs[Mono::unit(0, tot)];
    slot += c;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

SeriesBox oracle_for(const std::string& what, const Args& a, int nvars) {
  std::vector<int> bounds(nvars, a.box);
  if (what == "s1-max") {
    WeightVector w = weights(a);
    return oracle_series([&](const std::vector<int>& d) { return oracle_s1_dim(w, a.b, d); }, bounds, a.max_total);
  }
  if (what == "s1-uni") {
    WeightVector w = weights(a);
    return oracle_series([&](const std::vector<int>& d) { return oracle_s1_block_dim({w}, a.b, d); }, bounds,
                         a.max_total);
  }
  if (what == "s1-cotangent" || what == "s1-onshell") {
    WeightVector w = weights(a), neg = w;
    for (int& x : neg) x = -x;
    int b = what == "s1-cotangent" ? a.b : 0;
    auto off = [&](const std::vector<int>& d) { return oracle_s1_block_dim({w, neg}, b, d); };
    if (what == "s1-cotangent") return oracle_series(off, bounds, a.max_total);
    std::vector<int> box2(2, a.box);
    SeriesBox on = oracle_onshell(off, off, {1, 1}, box2, univariate(a) ? a.box : a.max_total);
    return univariate(a) ? diagonal(on, a.box) : on;
  }
  if (what == "o2-max") {
    O2Rep r = o2rep(a);
    O2Target w = o2target(a);
    return oracle_series([&](const std::vector<int>& d) { return oracle_o2_dim(r, w, d); }, bounds, a.max_total);
  }
  if (what == "o2-uni") {
    O2Rep r = o2rep(a);
    O2Target w = o2target(a);
    return oracle_series([&](const std::vector<int>& d) { return oracle_o2_block_dim({r}, w, d); }, bounds,
                         a.max_total);
  }
  if (what == "o2-cotangent" || what == "o2-onshell") {
    O2Rep r = o2rep(a);
    std::vector<O2Rep> blocks{r, r};
    O2Target w = what == "o2-cotangent" ? o2target(a) : O2Target::trivial();
    auto off = [&](const std::vector<int>& d) { return oracle_o2_block_dim(blocks, w, d); };
    if (what == "o2-cotangent") return oracle_series(off, bounds, a.max_total);
    auto det = [&](const std::vector<int>& d) { return oracle_o2_block_dim(blocks, O2Target::det(), d); };
    std::vector<int> box2(2, a.box);
    SeriesBox on = oracle_onshell(off, det, {1, 1}, box2, univariate(a) ? a.box : a.max_total);
    return univariate(a) ? diagonal(on, a.box) : on;
  }
  if (what == "z4") return z4_series(z4rep(a), bounds);
  throw UsageError("unknown group '" + what + "'");
}

// Exact series of the closed form; z4 uses the component sum so verify compares it to the oracle.
FactoredRatFun closed_form(const std::string& what, const Args& a) {
  if (what == "z4") return hilb_z4(z4rep(a));
  return compute(what, a);
}

std::string mono_list(const Mono& m, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "]";
}

int cmd_verify(const Args& a) {
  std::string g = canonical_group(a.group);
  if (a.box < 0) throw UsageError("--box must be nonnegative");
  FactoredRatFun f = closed_form(g, a);
  int n = f.nvars();
  SeriesBox mine = series_box(f, std::vector<int>(n, a.box), a.max_total);
  SeriesBox ref = oracle_for(g, a, n);
  std::optional<Mono> bad;
  std::map<Mono, Q> all = mine.coeffs;
  for (const auto& [m, c] : ref.coeffs) all.emplace(m, c);
  for (const auto& [m, c] : all)
    if (mine.coeff(m) != ref.coeff(m)) {
      bad = m;
      break;
    }
  std::size_t checked = 1;
  for (int i = 0; i < n; ++i) checked *= static_cast<std::size_t>(a.box + 1);
  if (a.format == "json") {
    ojson j;
    j["group"] = g;
    j["box"] = a.box;
    if (bad) {
      j["status"] = "mismatch";
      j["multidegree"] = bad->to_vector(n);
      j["closed_form"] = rational_text(mine.coeff(*bad));
      j["oracle"] = rational_text(ref.coeff(*bad));
    } else {
      j["status"] = "ok";
    }
    std::cout << j.dump() << "\n";
  } else if (bad) {
    std::cout << "mismatch at " << mono_list(*bad, n) << ": closed form " << rational_text(mine.coeff(*bad))
              << ", oracle " << rational_text(ref.coeff(*bad)) << "\n";
  } else {
    std::cout << "ok: " << g << " agrees with the oracle on box " << a.box;
    if (a.max_total >= 0) std::cout << " (total degree <= " << a.max_total << ")";
    std::cout << "\n";
  }
  return bad ? kMismatch : kOk;
}

Q gamma_value(const Args& a) {
  std::string g = a.group;
  if (g == "s1") return gamma_s1(weights(a), a.b, a.m);
  if (g == "s1-cotangent") return gamma_s1_cotangent(weights(a), a.b, a.m);
  if (g == "s1-onshell") return gamma_s1_onshell(weights(a), a.m);
  if (g == "o2") return gamma_o2(o2rep(a), o2target(a), a.m);
  if (g == "o2-onshell") return gamma_o2_onshell(o2rep(a), a.m);
  if (g == "o2-detonly") {
    if (a.d < 0) throw UsageError("--d must be nonnegative");
    return gamma_o2_detonly(a.d, o2target(a), a.m);
  }
  if (g == "bigraded") {
    ExpansionOrder o;
    if (a.order == "s-then-t")
      o = ExpansionOrder::SThenT;
    else if (a.order == "t-then-s")
      o = ExpansionOrder::TThenS;
    else
      throw UsageError("--order must be s-then-t or t-then-s");
    return gamma_bigraded_onshell(weights(a), o, a.i, a.j);
  }
  throw UsageError("unknown gamma group '" + g + "'");
}

int cmd_gamma(const Args& a) {
  if (a.m < 0) throw UsageError("--m must be nonnegative");
  Q v = gamma_value(a);
  if (a.format == "json") {
    ojson j;
    j["group"] = a.group;
    if (a.group == "bigraded") {
      j["order"] = a.order;
      j["i"] = a.i;
      j["j"] = a.j;
    } else {
      j["m"] = a.m;
    }
    j["value"] = rational_text(v);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rational_text(v) << "\n";
  }
  return kOk;
}

int cmd_expand(const Args& a) {
  FactoredRatFun f = compute(canonical_group(a.group), a);
  if (a.laurent > 0) {
    LaurentExpansion e = laurent_at_one(f.nvars() == 1 ? f : substitute_diagonal(f), a.laurent);
    std::cout << (a.format == "json" ? laurent_json(e) + "\n" : laurent_text(e));
    return kOk;
  }
  if (a.box < 0) throw UsageError("--box must be nonnegative");
  SeriesBox s = series_box(f, std::vector<int>(f.nvars(), a.box), a.max_total);
  std::cout << (a.format == "json" ? series_json(s) + "\n" : series_text(s));
  return kOk;
}

int cmd_series(const std::string& name, const Args& a) {
  FactoredRatFun f = compute(name, a);
  std::cout << (a.format == "json" ? to_json(f) : to_text(f)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert series of invariants and covariants for S1, O2 and S1 x| Z/4"};
  app.require_subcommand(1);
  Args a;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_s1 = [&](CLI::App* c, bool with_b) {
    c->add_option("--weights", a.weights, "Comma-separated nonzero weights")->allow_extra_args(false);
    if (with_b) c->add_option("--b", a.b, "Target weight");
  };
  auto add_o2 = [&](CLI::App* c, bool with_target) {
    c->add_option("--alphas", a.alphas, "Comma-separated positive alphas");
    c->add_option("--d", a.d, "Number of determinant summands");
    if (with_target) c->add_option("--target", a.target, "trivial | det | tau:<b>");
  };
  auto add_grading = [&](CLI::App* c) { c->add_option("--grading", a.grading, "bigraded | univariate"); };

  std::vector<std::pair<std::string, CLI::App*>> series_cmds;
  auto series_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    add_format(c);
    series_cmds.emplace_back(name, c);
    return c;
  };
  CLI::App* s1max = series_cmd("s1-max", "Maximally graded S1 covariants");
  add_s1(s1max, true);
  s1max->add_flag("--direct", a.direct, "Skip the sign reduction (direct route with the correction sum)");
  add_s1(series_cmd("s1-uni", "Univariate S1 covariants"), true);
  add_s1(series_cmd("s1-cotangent", "Bigraded S1 covariants of the cotangent lift"), true);
  CLI::App* s1on = series_cmd("s1-onshell", "S1 on-shell invariants");
  add_s1(s1on, false);
  add_grading(s1on);
  add_o2(series_cmd("o2-max", "Maximally graded O2 covariants"), true);
  add_o2(series_cmd("o2-uni", "Univariate O2 covariants"), true);
  add_o2(series_cmd("o2-cotangent", "Bigraded O2 covariants of the cotangent lift"), true);
  CLI::App* o2on = series_cmd("o2-onshell", "O2 on-shell invariants");
  add_o2(o2on, false);
  add_grading(o2on);
  CLI::App* z4 = series_cmd("z4", "S1 x| Z/4 invariants by reconstruction");
  z4->add_option("--weights", a.weights, "Comma-separated positive a_i");
  z4->add_option("--fit", a.fit, "Per-variable degree of the fitting box");
  z4->add_option("--verify", a.verify, "Per-variable degree of the verification box");

  CLI::App* gamma = app.add_subcommand("gamma", "Laurent coefficient at t = 1 from the closed forms");
  add_format(gamma);
  gamma->add_option("--group", a.group, "s1 | s1-cotangent | s1-onshell | o2 | o2-onshell | o2-detonly | bigraded")
      ->required();
  add_s1(gamma, true);
  add_o2(gamma, true);
  gamma->add_option("--m", a.m, "Coefficient index");
  gamma->add_option("--order", a.order, "s-then-t | t-then-s (bigraded)");
  gamma->add_option("--i", a.i, "Outer index (bigraded)");
  gamma->add_option("--j", a.j, "Inner index (bigraded)");

  auto add_group_opts = [&](CLI::App* c) {
    add_format(c);
    c->add_option("--group", a.group, "Series: s1 | s1-uni | s1-cotangent | s1-onshell | o2 | ... | z4")->required();
    add_s1(c, true);
    add_o2(c, true);
    add_grading(c);
    c->add_option("--box", a.box, "Per-variable degree bound");
    c->add_option("--max-total", a.max_total, "Total degree cap");
    c->add_option("--fit", a.fit, "z4 fitting box");
    c->add_option("--verify", a.verify, "z4 verification box");
  };
  CLI::App* expand = app.add_subcommand("expand", "Truncated series or Laurent expansion at t = 1");
  add_group_opts(expand);
  expand->add_option("--laurent", a.laurent, "Number of Laurent coefficients of the univariate specialization");
  CLI::App* verify = app.add_subcommand("verify", "Compare a closed form with the oracle on a box");
  add_group_opts(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (const auto& [name, c] : series_cmds)
      if (c->parsed()) return cmd_series(name, a);
    if (gamma->parsed()) return cmd_gamma(a);
    if (expand->parsed()) return cmd_expand(a);
    if (verify->parsed()) return cmd_verify(a);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ReconstructionFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const HypothesisViolation& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
