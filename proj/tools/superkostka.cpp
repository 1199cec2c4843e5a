#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superkostka/checks.hpp"
#include "superkostka/format.hpp"
#include "superkostka/qanalogs.hpp"
#include "superkostka/tableaux.hpp"

using namespace superkostka;
using nlohmann::json;

namespace {

struct Args {
  std::string algebra;
  std::string lambda;
  std::string mu;
  std::string gamma;
  bool json = false;
  int threads = 1;
  bool trace = false;
  bool stab = false;
  std::uint64_t seed = 1;
  bool conjectures = false;
  std::vector<std::string> suites;
  int expand = 0;
};

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kSuite = 3 };

void print_poly(const Args& a, const QPolynomial& p, json extra = json::object()) {
  if (a.json) {
    json j = polynomial_to_json(p);
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << p << "\n";
  }
}

std::string integer_str(const Integer& x) { return x.str(); }

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

std::string element_str(const BlockElement& u) {
  if (u.is_identity()) return "Id";
  std::string s;
  for (std::size_t i = 0; i < u.perm.size(); ++i) {
    if (i) s += " ";
    if (u.signs[i] < 0) s += "-";
    s += std::to_string(u.perm[i] + 1);
  }
  return s;
}

void print_branching(const Args& a, const BranchingMap& m) {
  if (a.json) {
    json j = json::object();
    for (const auto& [g, c] : m) j[format_weight(g)] = integer_json(c);
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [g, c] : m) std::cout << format_weight(g) << "\t" << integer_str(c) << "\n";
}

int run_kpoly(const Args& a, bool stab) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight lambda = parse_weight(a.lambda, spec);
  const Weight mu = parse_weight(a.mu, spec);
  if (!stab && !is_typical(spec, lambda))
    std::cerr << "warning: " << lambda.to_string() << " is atypical; K(q) has no multiplicity meaning\n";
  Engine engine(spec);
  std::vector<TraceRow> rows;
  KostkaOptions opts;
  opts.threads = a.threads;
  if (a.trace) opts.trace = &rows;
  const QPolynomial p = stab ? kostka_stab(engine, lambda, mu, opts) : kostka_typical(engine, lambda, mu, opts);
  json extra = json::object();
  if (a.trace) {
    if (a.json) {
      extra["trace"] = json::array();
      for (const auto& r : rows)
        extra["trace"].push_back({{"kappa", format_weight(r.kappa)},
                                  {"c_q", r.cq.to_string()},
                                  {"eta", format_weight(r.eta)},
                                  {"u", element_str(r.u)},
                                  {"term_u", r.term_u.to_string()},
                                  {"v", element_str(r.v)},
                                  {"term_v", r.term_v.to_string()}});
    } else {
      std::cout << "kappa\tc_q\teta\tu\teps(u)P_n\tv\teps(v)P_m\n";
      for (const auto& r : rows)
        std::cout << format_weight(r.kappa) << "\t" << r.cq << "\t" << format_weight(r.eta) << "\t"
                  << element_str(r.u) << "\t" << r.term_u << "\t" << element_str(r.v) << "\t" << r.term_v
                  << "\n";
    }
  }
  print_poly(a, p, extra);
  return kOk;
}

int run_kpoly_cov(const Args& a, bool charge) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight lambda = parse_weight(a.lambda, spec);
  const Weight mu = parse_weight(a.mu, spec);
  print_poly(a, charge ? kostka_charge(spec, lambda, mu) : kostka_covariant(Engine(spec), lambda, mu));
  return kOk;
}

int run_kg0(const Args& a) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight gamma = parse_weight(a.gamma, spec);
  const Weight mu = parse_weight(a.mu, spec);
  Engine engine(spec);
  print_poly(a, a.stab ? kostka_g0_stab(engine, gamma, mu) : kostka_g0(engine, gamma, mu));
  return kOk;
}

int run_branch(const Args& a, bool stab) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight lambda = parse_weight(a.lambda, spec);
  require_dominant(spec, lambda, "lambda");
  Engine engine(spec);
  if (!a.gamma.empty()) {
    const Weight gamma = parse_weight(a.gamma, spec);
    const Integer m = stab ? branching_stab(engine, lambda, gamma) : branching_typical(engine, lambda, gamma);
    if (a.json)
      std::cout << json{{"multiplicity", integer_json(m)}}.dump() << "\n";
    else
      std::cout << integer_str(m) << "\n";
    return kOk;
  }
  print_branching(a, branching_all(engine, lambda, stab));
  return kOk;
}

int run_threshold(const Args& a) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight lambda = parse_weight(a.lambda, spec);
  const Weight mu = parse_weight(a.mu, spec);
  const ThresholdBounds b = stabilization_bounds(spec, lambda, mu);
  if (a.json)
    std::cout << json{{"threshold", b.value()},
                      {"finite_dim", b.finite_dim},
                      {"typical", b.typical},
                      {"size", b.size},
                      {"vanishing", b.vanishing}}
                     .dump()
              << "\n";
  else
    std::cout << b.value() << "\n";
  return kOk;
}

int run_char(const Args& a) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight lambda = parse_weight(a.lambda, spec);
  Engine engine(spec);
  WeightBox box = default_character_box(engine, lambda);
  if (a.expand > 0) box = box.enlarged(a.expand);
  KostkaOptions opts;
  opts.threads = a.threads;
  const GradedCharacter ch = graded_character_typical(engine, lambda, box, opts);
  if (a.json) {
    json j = json::object();
    for (const auto& [mu, p] : ch) j[format_weight(mu)] = polynomial_to_json(p);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  for (const auto& [mu, p] : ch) std::cout << format_weight(mu) << "\t" << p << "\n";
  return kOk;
}

int run_tableaux(const Args& a) {
  const AlgebraSpec spec = parse_algebra(a.algebra);
  const Weight lambda = parse_weight(a.lambda, spec);
  std::optional<Weight> mu;
  if (!a.mu.empty()) mu = parse_weight(a.mu, spec);
  const auto all = enumerate_ssht(spec, lambda, mu);
  if (a.json) {
    json j = json::array();
    for (const auto& T : all)
      j.push_back({{"rows", T.rows}, {"content", format_weight(T.content())}, {"charge", super_charge(T)}});
    std::cout << j.dump() << "\n";
    return kOk;
  }
  for (const auto& T : all)
    std::cout << T.to_string() << "\t" << format_weight(T.content()) << "\t" << super_charge(T) << "\n";
  return kOk;
}

// Default bounds are those of the acceptance sweeps.
int run_check(const Args& a) {
  using namespace superkostka::checks;
  checks::UnimodalityScan scan;
  Config cfg;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  if (a.conjectures) cfg.observe = scan.observer();
  std::vector<std::string> names = a.suites;
  if (names.empty()) names = {"route", "charge", "positivity", "stabilization", "straightening"};
  if (a.conjectures && a.suites.empty()) names = {"route", "charge", "positivity"};

  bool ok = true;
  auto report = [&](const SuiteResult& r, double secs) {
    std::cout << (r.passed() ? (r.observational ? "REPORT" : "PASS") : "FAIL") << " " << r.name << ": "
              << r.cases << " cases, " << r.nontrivial << " nontrivial, " << r.failures
              << (r.observational ? " counterexamples" : " failures") << "\n";
    for (const auto& [alg, c] : r.failures_by_algebra)
      if (c) std::cout << "  " << alg << ": " << c << "\n";
    for (const auto& e : r.examples) std::cout << "  e.g. " << e << "\n";
    std::cerr << r.name << ": " << secs << " s\n";
    if (!r.passed()) ok = false;
  };
  auto timed = [&](auto&& f) {
    const auto t = std::chrono::steady_clock::now();
    SuiteResult r = f();
    report(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count());
  };
  for (const auto& name : names) {
    if (name == "route")
      timed([&] { return route_equivalence({AlgebraSpec::gl(2, 1), AlgebraSpec::gl(2, 2)}, -2, 2, cfg); });
    else if (name == "charge")
      timed([&] {
        return charge_route({AlgebraSpec::gl(1, 1), AlgebraSpec::gl(2, 1), AlgebraSpec::gl(1, 2),
                             AlgebraSpec::gl(2, 2), AlgebraSpec::gl(3, 2)},
                            6, cfg);
      });
    else if (name == "positivity")
      timed([&] { return positivity(500, 3, 3, 4, cfg); });
    else if (name == "stabilization")
      timed([&] { return stabilization(100, 3, 3, 4, cfg); });
    else if (name == "straightening")
      timed([&] { return straightening(2, 3, cfg); });
    else
      throw ParseError("unknown suite \"" + name + "\"", 0);
  }
  if (a.conjectures) report(scan.result(), 0.0);
  return ok ? kOk : kSuite;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-analogs of weight multiplicities for gl(n,m) and spo(2n,M)"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* s, bool need_lambda, bool need_mu) {
    s->add_option("--algebra", a.algebra, "gl:N,M or spo:2n=A,M=B")->required();
    auto* l = s->add_option("--lambda", a.lambda, "weight \"part0;part1\", entries a or a/2");
    if (need_lambda) l->required();
    auto* m = s->add_option("--mu", a.mu, "weight");
    if (need_mu) m->required();
    s->add_flag("--json", a.json, "JSON output");
    s->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  std::function<int()> action;
  auto* kpoly = app.add_subcommand("kpoly", "K_{lambda,mu}(q) by the alternating sum over W");
  common(kpoly, true, true);
  kpoly->add_flag("--trace", a.trace, "print the contributing kappa rows");
  kpoly->callback([&] { action = [&] { return run_kpoly(a, false); }; });

  auto* kstab = app.add_subcommand("kpoly-stab", "K^stab_{lambda,mu}(q), restricted to W_stab");
  common(kstab, true, true);
  kstab->add_flag("--trace", a.trace, "print the contributing kappa rows");
  kstab->callback([&] { action = [&] { return run_kpoly(a, true); }; });

  auto* kcov = app.add_subcommand("kpoly-cov", "covariant K_{lambda,mu}(q) for gl(n,m)");
  common(kcov, true, true);
  kcov->callback([&] { action = [&] { return run_kpoly_cov(a, false); }; });

  auto* kcharge = app.add_subcommand("kpoly-charge", "covariant K_{lambda,mu}(q) by charge");
  common(kcharge, true, true);
  kcharge->callback([&] { action = [&] { return run_kpoly_cov(a, true); }; });

  auto* kg0 = app.add_subcommand("kg0", "K^{g0}_{gamma,mu}(q)");
  common(kg0, false, true);
  kg0->add_option("--gamma", a.gamma, "weight")->required();
  kg0->add_flag("--stab", a.stab, "restrict to W_stab");
  kg0->callback([&] { action = [&] { return run_kg0(a); }; });

  auto* branch = app.add_subcommand("branch", "branching multiplicities m_{lambda,gamma}");
  common(branch, true, false);
  branch->add_option("--gamma", a.gamma, "single gamma; all gamma when omitted");
  branch->callback([&] { action = [&] { return run_branch(a, false); }; });

  auto* bstab = app.add_subcommand("branch-stab", "stabilized branching multiplicities");
  common(bstab, true, false);
  bstab->add_option("--gamma", a.gamma, "single gamma; all gamma when omitted");
  bstab->callback([&] { action = [&] { return run_branch(a, true); }; });

  auto* thr = app.add_subcommand("threshold", "stabilization threshold k0");
  common(thr, true, true);
  thr->callback([&] { action = [&] { return run_threshold(a); }; });

  auto* chr = app.add_subcommand("char", "graded character: every mu with K_{lambda,mu}(q)");
  common(chr, true, false);
  chr->add_option("--expand", a.expand, "enlarge the default box by this many units");
  chr->callback([&] { action = [&] { return run_char(a); }; });

  auto* tab = app.add_subcommand("tableaux", "semistandard hook tableaux with their charges");
  common(tab, true, false);
  tab->callback([&] { action = [&] { return run_tableaux(a); }; });

  auto* chk = app.add_subcommand("check", "property suites");
  chk->add_option("--suite", a.suites, "route, charge, positivity, stabilization, straightening");
  chk->add_option("--seed", a.seed, "sampling seed");
  chk->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
  chk->add_flag("--conjectures", a.conjectures, "scan for non-unimodal polynomials");
  chk->callback([&] { action = [&] { return run_check(a); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
