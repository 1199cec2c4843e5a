// Acceptance run: one PASS/FAIL line per criterion. Polynomial comparisons
// are exact; the only tolerances are the wall-clock limits listed with each
// criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "superkostka/checks.hpp"
#include "superkostka/format.hpp"

using namespace superkostka;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("mismatch: " + what);
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.notes.push_back("runtime " + std::to_string(secs) + " s over the limit");
  }
  if (!o.pass) ++failures;
  std::ostringstream limit;
  if (limit_s > 0) limit << ", limit " << limit_s << " s";
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << secs << " s" << limit.str()
            << ")\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
}

QPolynomial poly(const std::string& s) { return parse_polynomial(s); }

Weight w(const std::string& s) { return parse_weight(s); }

void suite_into(Outcome& o, const checks::SuiteResult& r) {
  std::ostringstream line;
  line << r.name << ": " << r.cases << " cases, " << r.nontrivial << " nontrivial, " << r.failures << " failures";
  o.notes.push_back(line.str());
  for (const auto& [alg, c] : r.failures_by_algebra)
    if (c) o.notes.push_back("  " + alg + ": " + std::to_string(c) + " failures");
  for (const auto& e : r.examples) o.notes.push_back("  e.g. " + e);
  if (!r.passed()) o.pass = false;
}

std::string element_str(const BlockElement& u) {
  if (u.is_identity()) return "Id";
  std::string s;
  for (std::size_t i = 0; i < u.perm.size(); ++i) s += (u.signs[i] < 0 ? "-" : "") + std::to_string(u.perm[i] + 1);
  return s;
}

}  // namespace

int main() {
  checks::UnimodalityScan scan;
  checks::Config cfg;
  cfg.seed = 1;
  cfg.observe = scan.observer();

  criterion(1, "gl(3,3) K_{(3,1,-2;4,2,-8),0}(q), exact", 60, [] {
    Outcome o;
    const auto spec = AlgebraSpec::gl(3, 3);
    const auto k = kostka_typical(spec, w("3,1,-2;4,2,-8"), Weight::zero(3, 3));
    const auto expected = poly(
        "2*q^22 + 8*q^21 + 22*q^20 + 40*q^19 + 57*q^18 + 61*q^17 + 52*q^16 + 33*q^15 + 16*q^14 + 5*q^13 + q^12");
    o.require(k == expected, k.to_string());
    o.require(k.num_terms() == 11, "term count");
    return o;
  });

  criterion(2, "spo(2,5) K, K^stab and the kappa table", 5, [] {
    Outcome o;
    const auto spec = AlgebraSpec::spo_odd(1, 2);
    Engine e(spec);
    std::vector<TraceRow> rows;
    KostkaOptions opts;
    opts.trace = &rows;
    const auto k = kostka_typical(e, w("2;1,1"), w("0;2,1"), opts);
    o.require(k == poly("q^3 + q^2 - q"), "K = " + k.to_string());
    const auto ks = kostka_stab(e, w("2;1,1"), w("0;2,1"));
    o.require(ks == poly("q^3 + q^2"), "K^stab = " + ks.to_string());
    const auto shifted = kostka_typical(e, w("5;1,1"), w("3;2,1"));
    o.require(shifted == poly("q^3 + q^2"), "K_{(5;1,1),(3;2,1)} = " + shifted.to_string());
    // kappa, c_q, u, eps(u) P_n, v, eps(v) P_m
    const std::vector<std::vector<std::string>> table = {
        {"1;-1,0", "q", "-1", "-1", "Id", "1"},
        {"2;-1,-1", "q^2", "Id", "1", "Id", "q"},
        {"2;-1,0", "q^2", "Id", "1", "Id", "1"}};
    o.require(rows.size() == table.size(), "trace has " + std::to_string(rows.size()) + " rows");
    for (std::size_t i = 0; i < rows.size() && i < table.size(); ++i) {
      const auto& r = rows[i];
      std::vector<std::string> got = {format_weight(r.kappa), r.cq.to_string(), element_str(r.u),
                                      r.term_u.to_string(), element_str(r.v), r.term_v.to_string()};
      std::string line;
      for (const auto& g : got) line += g + " | ";
      o.notes.push_back("row " + std::to_string(i + 1) + ": " + line);
      o.require(got == table[i], "trace row " + std::to_string(i + 1));
    }
    return o;
  });

  criterion(3, "spo(6,7) stretch pair, exact, K^stab = K_{lambda+5w,mu+5w}", 600, [] {
    Outcome o;
    const auto spec = AlgebraSpec::spo_odd(3, 3);
    Engine e(spec);
    const Weight lambda = w("5,4,4;3,2,0"), mu = w("3,2,1;1,1,0");
    const auto k = kostka_typical(e, lambda, mu);
    const auto k_expected = poly(
        "3*q^31 + 14*q^30 + 52*q^29 + 148*q^28 + 373*q^27 + 817*q^26 + 1640*q^25 + 3000*q^24 + 5132*q^23 + "
        "8174*q^22 + 12283*q^21 + 17338*q^20 + 23138*q^19 + 28977*q^18 + 34022*q^17 + 36993*q^16 + 36953*q^15 + "
        "33259*q^14 + 26478*q^13 + 18045*q^12 + 10121*q^11 + 4332*q^10 + 1211*q^9 + 97*q^8 - 65*q^7 - 17*q^6 + "
        "q^5");
    const auto s_expected = poly(
        "3*q^31 + 14*q^30 + 52*q^29 + 148*q^28 + 373*q^27 + 820*q^26 + 1655*q^25 + 3052*q^24 + 5266*q^23 + "
        "8475*q^22 + 12879*q^21 + 18421*q^20 + 24941*q^19 + 31772*q^18 + 38048*q^17 + 42412*q^16 + 43722*q^15 + "
        "41083*q^14 + 34742*q^13 + 25932*q^12 + 16776*q^11 + 9175*q^10 + 4129*q^9 + 1476*q^8 + 395*q^7 + "
        "70*q^6 + 6*q^5");
    o.require(k == k_expected, "K = " + k.to_string());
    o.require(k_expected.num_terms() == 27 && s_expected.num_terms() == 27, "term counts");
    const auto ks = kostka_stab(e, lambda, mu);
    o.require(ks == s_expected, "K^stab = " + ks.to_string());
    const int k0 = stabilization_threshold(spec, lambda, mu);
    o.require(k0 == 5, "threshold " + std::to_string(k0));
    const Weight l5 = shift_by_omega(spec, lambda, 5), m5 = shift_by_omega(spec, mu, 5);
    o.require(l5 == w("10,9,9;3,2,0") && m5 == w("8,7,6;1,1,0"), "shifted weights");
    const auto shifted = kostka_typical(e, l5, m5);
    o.require(shifted == s_expected, "K_{lambda+5w,mu+5w} = " + shifted.to_string());
    o.require(is_typical(spec, l5) && is_finite_dim(spec, l5), "lambda+5w typical and finite-dimensional");
    return o;
  });

  criterion(4, "route equivalence on gl(2,1), gl(2,2), entries in [-2,2]", 0, [&] {
    Outcome o;
    suite_into(o, checks::route_equivalence({AlgebraSpec::gl(2, 1), AlgebraSpec::gl(2, 2)}, -2, 2, cfg));
    return o;
  });

  criterion(5, "charge route and #SSHT, <= 6 boxes", 0, [&] {
    Outcome o;
    suite_into(o, checks::charge_route({AlgebraSpec::gl(1, 1), AlgebraSpec::gl(2, 1), AlgebraSpec::gl(1, 2),
                                        AlgebraSpec::gl(2, 2), AlgebraSpec::gl(3, 2)},
                                       6, cfg));
    return o;
  });

  criterion(6, "positivity of K^stab, 500 pairs per spo family, n,m <= 3, entries <= 4", 0, [&] {
    Outcome o;
    suite_into(o, checks::positivity(500, 3, 3, 4, cfg));
    return o;
  });

  criterion(7, "stabilization at k0 and k0+1, 100 spo pairs", 0, [&] {
    Outcome o;
    checks::Config plain;
    plain.seed = cfg.seed;
    suite_into(o, checks::stabilization(100, 3, 3, 4, plain));
    return o;
  });

  criterion(8, "classical oracles: Kostant counts and type A Kostka-Foulkes", 0, [] {
    Outcome o;
    const std::vector<std::pair<std::string, ClassicalBlock>> blocks = {
        {"A1", {BlockKind::A, 2}}, {"A2", {BlockKind::A, 3}}, {"C1", {BlockKind::C, 1}},
        {"C2", {BlockKind::C, 2}}, {"B2", {BlockKind::B, 2}}, {"D2", {BlockKind::D, 2}}};
    long long checked = 0, nonzero = 0;
    for (const auto& [name, block] : blocks) {
      BlockPartition p(block);
      const auto roots = oracle::textbook_roots(name);
      std::vector<int> beta(block.rank, -4);
      while (true) {
        const auto graded = oracle::kostant_partitions(roots, beta);
        const auto got = p(beta);
        long long total = 0;
        for (auto& [len, c] : graded) total += c;
        ++checked;
        if (total) ++nonzero;
        if (got.eval_at_one() != total || got != QPolynomial::from_map([&] {
              std::map<int, Integer> m;
              for (auto& [len, c] : graded) m[len] = c;
              return m;
            }())) {
          o.require(false, name + " beta=" + Weight::from_integers(beta, {}).to_string() + ": " + got.to_string());
        }
        std::size_t i = 0;
        for (; i < beta.size(); ++i) {
          if (++beta[i] <= 4) break;
          beta[i] = -4;
        }
        if (i == beta.size()) break;
      }
    }
    o.notes.push_back(std::to_string(checked) + " block weights, " + std::to_string(nonzero) + " with partitions");
    // Lusztig q-analogs of type A against the charge oracle.
    struct Case {
      AlgebraSpec spec;
      std::vector<int> shape, content;
      std::string expected;
    };
    const std::vector<Case> cases = {{AlgebraSpec::gl(2, 1), {2, 0}, {1, 1}, "q"},
                                     {AlgebraSpec::gl(3, 1), {2, 1, 0}, {1, 1, 1}, "q^2 + q"}};
    for (const auto& c : cases) {
      Engine e(c.spec);
      const Weight g = Weight::from_integers(c.shape, {0}), mu = Weight::from_integers(c.content, {0});
      const auto k = lusztig_classical(e, BlockSide::N, g, mu);
      std::map<int, Integer> m;
      std::vector<int> sh, ct;
      for (int x : c.shape)
        if (x) sh.push_back(x);
      for (int x : c.content)
        if (x) ct.push_back(x);
      for (auto& [e2, v] : oracle::kostka_foulkes(sh, ct)) m[e2] = v;
      const auto charge = QPolynomial::from_map(m);
      o.require(k == poly(c.expected), "Lusztig " + k.to_string());
      o.require(charge == poly(c.expected), "charge oracle " + charge.to_string());
      o.notes.push_back("K_{" + format_weight(g) + "," + format_weight(mu) + "} = " + k.to_string());
    }
    return o;
  });

  criterion(9, "straightening and factorization, n,m <= 2, entries <= 3", 0, [] {
    Outcome o;
    suite_into(o, checks::straightening(2, 3));
    return o;
  });

  criterion(10, "unimodality scan over the sweeps of [4]-[6] (observational)", 0, [&] {
    Outcome o;
    const auto r = scan.result();
    std::ostringstream line;
    line << r.cases << " polynomials scanned, " << r.failures << " not unimodal (reported, not asserted)";
    o.notes.push_back(line.str());
    for (const auto& [source, c] : r.failures_by_algebra) o.notes.push_back("  " + source + ": " + std::to_string(c));
    for (const auto& e : r.examples) o.notes.push_back("  e.g. " + e);
    return o;
  });

  if (failures)
    std::cout << "FAILED " << failures << " of 10\n";
  else
    std::cout << "ALL PASSED\n";
  return failures ? 1 : 0;
}
