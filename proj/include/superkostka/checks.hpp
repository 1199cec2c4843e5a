#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "superkostka/algebra.hpp"
#include "superkostka/qanalogs.hpp"
#include "superkostka/qpartition.hpp"
#include "superkostka/tableaux.hpp"
#include "superkostka/weyl.hpp"

namespace superkostka::checks {

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long nontrivial = 0;  // cases where the compared values are nonzero
  long long failures = 0;
  bool observational = false;
  std::vector<std::string> examples;  // first few failures
  std::map<std::string, long long> failures_by_algebra;

  bool passed() const { return observational || failures == 0; }

  void fail(const AlgebraSpec& spec, const std::string& what) {
    ++failures;
    ++failures_by_algebra[spec.name()];
    if (examples.size() < 8) examples.push_back(spec.name() + " " + what);
  }
};

// Receives every polynomial a sweep computes, tagged with its source; used by
// the unimodality scan.
using Observer = std::function<void(const std::string& source, const AlgebraSpec&, const Weight& lambda,
                                    const Weight& mu, const QPolynomial&)>;

struct Config {
  std::uint64_t seed = 1;
  int threads = 1;
  Observer observe;
};

//---------------------------------------------------------------------------//
// Weight generation
//---------------------------------------------------------------------------//

// Dominant weights whose entries (in plain units) lie in [lo, hi]; half
// entries in part1 are included when `halves` is set and the family allows it.
inline std::vector<Weight> dominant_weights(const AlgebraSpec& spec, int lo, int hi, bool halves = false) {
  std::vector<Weight> out;
  const int dim = spec.n + spec.m;
  auto scan = [&](bool half_part1) {
    std::vector<int> v(dim);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == dim) {
        Weight w(std::vector<int>(v.begin(), v.begin() + spec.n), std::vector<int>(v.begin() + spec.n, v.end()));
        if (is_dominant(spec, w)) out.push_back(std::move(w));
        return;
      }
      if (half_part1 && k >= spec.n) {
        for (int d = 2 * lo + 1; d < 2 * hi; d += 2) {
          v[k] = d;
          self(self, k + 1);
        }
      } else {
        for (int x = lo; x <= hi; ++x) {
          v[k] = 2 * x;
          self(self, k + 1);
        }
      }
    };
    rec(rec, 0);
  };
  scan(false);
  if (halves && spec.is_spo() && spec.m > 0) scan(true);
  return out;
}

// Portable sampling: raw mt19937_64 output reduced by modulo.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  AlgebraSpec spo_spec(Family family, int max_n, int max_m) {
    const int n = uniform(1, max_n);
    const int m = family == Family::SPO_ODD ? uniform(0, max_m) : uniform(1, max_m);
    return AlgebraSpec::make(family, n, m);
  }

  // Dominant spo weight with |entries| <= bound.
  Weight dominant_spo(const AlgebraSpec& spec, int bound) {
    std::vector<int> p0(spec.n), p1(spec.m);
    int prev = bound;
    for (int i = 0; i < spec.n; ++i) {
      prev = uniform(0, prev);
      p0[i] = 2 * prev;
    }
    const bool half = spec.m > 0 && uniform(0, 1) == 1;
    // Work in doubled units; half entries are odd.
    int top = half ? 2 * bound - 1 : 2 * bound;
    for (int j = 0; j < spec.m; ++j) {
      const bool last = j == spec.m - 1;
      int v;
      if (half) {
        v = 2 * uniform(0, (top - 1) / 2) + 1;
      } else {
        v = 2 * uniform(0, top / 2);
      }
      if (last && spec.family == Family::SPO_EVEN && uniform(0, 1) == 1) v = -v;
      p1[j] = v;
      top = std::abs(v);
    }
    Weight w(p0, p1);
    if (!is_dominant(spec, w)) throw Error("sampler produced a non-dominant weight " + w.to_string());
    return w;
  }

  // A dominant mu of the same part1 parity as lambda, roughly below it so
  // that the polynomial is often nonzero.
  Weight dominant_below(const AlgebraSpec& spec, const Weight& lambda, int bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Weight mu = dominant_spo(spec, bound);
      const bool half_l = spec.m > 0 && !Weight::all_even(lambda.doubled1());
      const bool half_m = spec.m > 0 && !Weight::all_even(mu.doubled1());
      if (half_l != half_m) continue;
      if (mu.doubled_size0() <= lambda.doubled_size0() + 4 || attempt == 63) return mu;
    }
    return dominant_spo(spec, bound);
  }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

class EnginePool {
 public:
  Engine& get(const AlgebraSpec& spec) {
    auto key = std::make_tuple(static_cast<int>(spec.family), spec.n, spec.m);
    auto it = engines_.find(key);
    if (it == engines_.end()) it = engines_.emplace(key, std::make_unique<Engine>(spec)).first;
    return *it->second;
  }

 private:
  std::map<std::tuple<int, int, int>, std::unique_ptr<Engine>> engines_;
};

inline std::string pair_str(const Weight& a, const Weight& b) {
  return "lambda=" + a.to_string() + " mu=" + b.to_string();
}

}  // namespace detail

//---------------------------------------------------------------------------//
// Suites
//---------------------------------------------------------------------------//

// kostka_typical against the decomposition route, every typical dominant
// lambda and dominant mu with entries in [lo, hi].
inline SuiteResult route_equivalence(const std::vector<AlgebraSpec>& specs, int lo, int hi,
                                     const Config& cfg = {}) {
  SuiteResult r{"route equivalence (gl typical)"};
  for (const auto& spec : specs) {
    Engine engine(spec);
    const auto weights = dominant_weights(spec, lo, hi);
    for (const auto& lambda : weights) {
      if (!is_typical(spec, lambda)) continue;
      for (const auto& mu : weights) {
        ++r.cases;
        KostkaOptions opts;
        opts.threads = cfg.threads;
        const QPolynomial a = kostka_typical(engine, lambda, mu, opts);
        const QPolynomial b = decompose_thm_tkgl(engine, lambda, mu);
        if (!a.is_zero()) ++r.nontrivial;
        if (a != b) r.fail(spec, detail::pair_str(lambda, mu) + ": " + a.to_string() + " vs " + b.to_string());
        if (!a.has_nonnegative_coefficients())
          r.fail(spec, detail::pair_str(lambda, mu) + ": negative coefficient in " + a.to_string());
        if (cfg.observe) cfg.observe("typical", spec, lambda, mu, a);
      }
    }
  }
  return r;
}

// Covariant weights of gl(n,m) with at most max_boxes boxes.
inline std::vector<Weight> covariant_weights(const AlgebraSpec& spec, int max_boxes) {
  std::vector<Weight> out;
  for (const auto& w : dominant_weights(spec, 0, max_boxes)) {
    const int boxes = (w.doubled_size0() + w.doubled_size1()) / 2;
    if (boxes <= max_boxes && is_covariant(spec, w)) out.push_back(w);
  }
  return out;
}

// kostka_charge = kostka_covariant and K(1) = #SSHT(lambda)_mu, for dominant
// mu of the right size with entries in [-1, |lambda|].
inline SuiteResult charge_route(const std::vector<AlgebraSpec>& specs, int max_boxes, const Config& cfg = {}) {
  SuiteResult r{"charge route (gl covariant)"};
  for (const auto& spec : specs) {
    Engine engine(spec);
    for (const auto& lambda : covariant_weights(spec, max_boxes)) {
      const int boxes = (lambda.doubled_size0() + lambda.doubled_size1()) / 2;
      for (const auto& mu : dominant_weights(spec, -1, boxes)) {
        if (mu.doubled_size0() + mu.doubled_size1() != 2 * boxes) continue;
        ++r.cases;
        const QPolynomial a = kostka_covariant(engine, lambda, mu);
        const QPolynomial b = kostka_charge(spec, lambda, mu);
        const auto count = static_cast<long long>(enumerate_ssht(spec, lambda, mu).size());
        if (!a.is_zero()) ++r.nontrivial;
        if (a != b) r.fail(spec, detail::pair_str(lambda, mu) + ": " + a.to_string() + " vs charge " + b.to_string());
        if (a.eval_at_one() != count)
          r.fail(spec, detail::pair_str(lambda, mu) + ": K(1) = " + a.eval_at_one().str() + " but " +
                           std::to_string(count) + " tableaux");
        if (cfg.observe) cfg.observe("covariant", spec, lambda, mu, a);
      }
    }
  }
  return r;
}

// K^stab in Z_{>=0}[q] for random dominant pairs, `per_family` samples for
// each of spo(2n,2m+1) and spo(2n,2m).
inline SuiteResult positivity(int per_family, int max_n, int max_m, int bound, const Config& cfg = {}) {
  SuiteResult r{"positivity of K^stab"};
  Sampler s(cfg.seed);
  detail::EnginePool pool;
  for (Family family : {Family::SPO_ODD, Family::SPO_EVEN}) {
    for (int i = 0; i < per_family; ++i) {
      const AlgebraSpec spec = s.spo_spec(family, max_n, max_m);
      const Weight lambda = s.dominant_spo(spec, bound);
      const Weight mu = s.dominant_below(spec, lambda, bound);
      KostkaOptions opts;
      opts.threads = cfg.threads;
      const QPolynomial k = kostka_stab(pool.get(spec), lambda, mu, opts);
      ++r.cases;
      if (!k.is_zero()) ++r.nontrivial;
      if (!k.has_nonnegative_coefficients()) r.fail(spec, detail::pair_str(lambda, mu) + ": " + k.to_string());
      if (cfg.observe) cfg.observe("stab", spec, lambda, mu, k);
    }
  }
  return r;
}

// kostka_typical(lambda + k omega, mu + k omega) = kostka_stab(lambda, mu) at
// k = k0 and k0 + 1, with lambda + k0 omega typical and finite-dimensional.
// Samples alternate between the two spo families.
inline SuiteResult stabilization(int samples, int max_n, int max_m, int bound, const Config& cfg = {}) {
  SuiteResult r{"stabilization K_{lambda+k omega, mu+k omega} = K^stab"};
  Sampler s(cfg.seed ^ 0x5eedULL);
  detail::EnginePool pool;
  for (int i = 0; i < samples; ++i) {
    const Family family = i % 2 == 0 ? Family::SPO_ODD : Family::SPO_EVEN;
    const AlgebraSpec spec = s.spo_spec(family, max_n, max_m);
    const Weight lambda = s.dominant_spo(spec, bound);
    const Weight mu = s.dominant_below(spec, lambda, bound);
    Engine& engine = pool.get(spec);
    KostkaOptions opts;
    opts.threads = cfg.threads;
    const QPolynomial stab = kostka_stab(engine, lambda, mu, opts);
    const int k0 = stabilization_threshold(spec, lambda, mu);
    ++r.cases;
    if (!stab.is_zero()) ++r.nontrivial;
    const Weight l0 = shift_by_omega(spec, lambda, k0);
    if (!is_typical(spec, l0) || !is_finite_dim(spec, l0)) {
      r.fail(spec, detail::pair_str(lambda, mu) + ": lambda + k0 omega not typical/finite at k0=" + std::to_string(k0));
      continue;
    }
    for (int k : {k0, k0 + 1}) {
      const QPolynomial t =
          kostka_typical(engine, shift_by_omega(spec, lambda, k), shift_by_omega(spec, mu, k), opts);
      if (t != stab)
        r.fail(spec, detail::pair_str(lambda, mu) + " k=" + std::to_string(k) + ": " + t.to_string() +
                         " vs K^stab " + stab.to_string());
    }
  }
  return r;
}

// Straightening of K^{g0} and its factorization into block analogs, plain and
// stabilized, over every algebra with n, m <= max_rank, all xi with entries
// in [-bound, bound] and all dominant mu in the same box.
inline SuiteResult straightening(int max_rank, int bound, const Config& = {}) {
  SuiteResult r{"straightening and factorization of K^{g0}"};
  std::vector<AlgebraSpec> specs;
  for (int n = 1; n <= max_rank; ++n)
    for (int m = 0; m <= max_rank; ++m) {
      if (m >= 1) specs.push_back(AlgebraSpec::gl(n, m));
      specs.push_back(AlgebraSpec::spo_odd(n, m));
      if (m >= 1) specs.push_back(AlgebraSpec::spo_even(n, m));
    }
  for (const auto& spec : specs) {
    Engine engine(spec);
    const Weight& rp = engine.rho().rho_plus;
    const auto w_all = enumerate_w(spec);
    const auto w_stab = enumerate_w_stab(spec);
    const auto mus = dominant_weights(spec, -bound, bound, true);
    // All xi in the box, with integral part0 and either parity in part1.
    std::vector<Weight> xis;
    const int dim = spec.n + spec.m;
    std::vector<int> v(dim);
    for (int half = 0; half <= (spec.is_spo() ? 1 : 0); ++half) {
      auto rec = [&](auto&& self, int k) -> void {
        if (k == dim) {
          xis.emplace_back(std::vector<int>(v.begin(), v.begin() + spec.n),
                           std::vector<int>(v.begin() + spec.n, v.end()));
          return;
        }
        if (half && k >= spec.n) {
          for (int d = -2 * bound + 1; d < 2 * bound; d += 2) {
            v[k] = d;
            self(self, k + 1);
          }
        } else {
          for (int x = -bound; x <= bound; ++x) {
            v[k] = 2 * x;
            self(self, k + 1);
          }
        }
      };
      if (half && spec.m == 0) continue;
      rec(rec, 0);
    }
    auto direct = [&](const std::vector<WeylElement>& group, const Weight& g, const Weight& mu) {
      QPolynomial t;
      for (const auto& w : group) t.add_scaled(engine.f_q(w.dot(g, rp) - mu), w.sign());
      return t;
    };
    const bool stab_differs = !spec.weyl_stabilizes_odd_roots();
    for (const auto& mu : mus) {
      // Block analogs are cached per block argument.
      std::map<std::vector<int>, QPolynomial> kn, kn_stab, km;
      auto block = [&](std::map<std::vector<int>, QPolynomial>& cache, BlockSide side, bool st,
                       const Weight& x) -> const QPolynomial& {
        const auto& key = side == BlockSide::N ? x.doubled0() : x.doubled1();
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, lusztig_classical(engine, side, x, mu, st)).first;
        return it->second;
      };
      for (const auto& xi : xis) {
        ++r.cases;
        const QPolynomial full = direct(w_all, xi, mu);
        if (!full.is_zero()) ++r.nontrivial;
        const QPolynomial prod = block(kn, BlockSide::N, false, xi) * block(km, BlockSide::M, false, xi);
        if (full != prod)
          r.fail(spec, "factorization xi=" + xi.to_string() + " mu=" + mu.to_string() + ": " + full.to_string() +
                           " vs " + prod.to_string());
        const QPolynomial stab = direct(w_stab, xi, mu);
        const QPolynomial prod_stab =
            block(stab_differs ? kn_stab : kn, BlockSide::N, stab_differs, xi) * block(km, BlockSide::M, false, xi);
        if (stab != prod_stab)
          r.fail(spec, "stab factorization xi=" + xi.to_string() + " mu=" + mu.to_string() + ": " +
                           stab.to_string() + " vs " + prod_stab.to_string());
        const auto st = straighten(spec, xi);
        if (!st) {
          if (!full.is_zero())
            r.fail(spec, "reflection-fixed xi=" + xi.to_string() + " but K^{g0} = " + full.to_string());
          continue;
        }
        if (!is_dominant(spec, st->gamma) || st->tau.dot(st->gamma, rp) != xi) {
          r.fail(spec, "straighten(" + xi.to_string() + ") returned " + st->gamma.to_string());
          continue;
        }
        const QPolynomial g = direct(w_all, st->gamma, mu) * Integer(st->sign);
        if (g != full)
          r.fail(spec, "straightening xi=" + xi.to_string() + " mu=" + mu.to_string() + ": " + full.to_string() +
                           " vs " + g.to_string());
      }
    }
  }
  return r;
}

//---------------------------------------------------------------------------//
// Unimodality scan
//---------------------------------------------------------------------------//

class UnimodalityScan {
 public:
  Observer observer() {
    return [this](const std::string& source, const AlgebraSpec& spec, const Weight& lambda, const Weight& mu,
                  const QPolynomial& p) {
      auto& s = by_source_[source];
      ++s.scanned;
      if (p.is_zero() || p.is_unimodal()) return;
      ++s.violations;
      if (s.examples.size() < 8)
        s.examples.push_back(spec.name() + " " + detail::pair_str(lambda, mu) + ": " + p.to_string());
    };
  }

  SuiteResult result() const {
    SuiteResult r{"unimodality (observational)"};
    r.observational = true;
    for (const auto& [source, s] : by_source_) {
      r.cases += s.scanned;
      r.failures += s.violations;
      r.failures_by_algebra[source] = s.violations;
      for (const auto& e : s.examples)
        if (r.examples.size() < 8) r.examples.push_back(source + ": " + e);
    }
    return r;
  }

 private:
  struct Source {
    long long scanned = 0;
    long long violations = 0;
    std::vector<std::string> examples;
  };
  std::map<std::string, Source> by_source_;
};

}  // namespace superkostka::checks
