#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "superkostka/algebra.hpp"
#include "superkostka/error.hpp"
#include "superkostka/qpartition.hpp"
#include "superkostka/qpolynomial.hpp"
#include "superkostka/weyl.hpp"

namespace superkostka {

//---------------------------------------------------------------------------//
// Block-level alternating sums
//---------------------------------------------------------------------------//

namespace detail {

inline std::vector<int> block_dot(const BlockElement& u, const std::vector<int>& x,
                                  const std::vector<int>& shift) {
  std::vector<int> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + shift[i];
  y = u.apply(y);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] -= shift[i];
  return y;
}

inline std::vector<int> sub(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// One term u of sum_u eps(u) P(u.gamma - mu - x): the fixed part u.gamma - mu.
struct SignedImage {
  int sign;
  std::vector<int> vec;  // doubled
  const BlockElement* elem;
};

// Alternating sum over a block group, as a function of the offset x:
//   A(x) = sum_u eps(u) P(u(gamma + shift) - shift - mu - x).
class AlternatingBlockSum {
 public:
  AlternatingBlockSum(const BlockPartition& partition, const std::vector<BlockElement>& group,
                      const std::vector<int>& gamma, const std::vector<int>& mu,
                      const std::vector<int>& shift)
      : partition_(&partition) {
    for (const auto& u : group)
      images_.push_back({u.determinant(), sub(block_dot(u, gamma, shift), mu), &u});
  }

  QPolynomial operator()(const std::vector<int>& x) const {
    QPolynomial total;
    for (const auto& img : images_) total.add_scaled(term(img, x), img.sign);
    return total;
  }

  // P(u.gamma - mu - x) for one image, without the sign.
  QPolynomial term(const SignedImage& img, const std::vector<int>& x) const {
    return partition_->of_doubled(sub(img.vec, x));
  }

  const std::vector<SignedImage>& images() const { return images_; }
  void rebind(const BlockPartition& partition) { partition_ = &partition; }

 private:
  const BlockPartition* partition_;
  std::vector<SignedImage> images_;
};

// Evaluate f over keys on up to `threads` workers. make_worker() builds the
// per-thread callable so that memo tables are never shared unsynchronised.
template <typename Key, typename MakeWorker>
std::vector<QPolynomial> parallel_eval(const std::vector<Key>& keys, int threads,
                                       MakeWorker make_worker) {
  std::vector<QPolynomial> out(keys.size());
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(keys.size())));
  if (t <= 1) {
    auto f = make_worker();
    for (std::size_t i = 0; i < keys.size(); ++i) out[i] = f(keys[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      auto f = make_worker();
      for (std::size_t i = w; i < keys.size(); i += t) out[i] = f(keys[i]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace detail

//---------------------------------------------------------------------------//
// Classical Lusztig q-analogs and K^{g0}
//---------------------------------------------------------------------------//

enum class BlockSide { N, M };

// K^{g_n}_{gamma0, mu0}(q) or K^{g_m}_{gamma1, mu1}(q) with dot shift rho_plus
// of the block. stabilized restricts the N-block sum to S_n.
inline QPolynomial lusztig_classical(const Engine& engine, BlockSide side, const Weight& gamma,
                                     const Weight& mu, bool stabilized = false) {
  gamma.check_fits(engine.spec());
  mu.check_fits(engine.spec());
  const bool n_side = side == BlockSide::N;
  const ClassicalBlock block = n_side ? engine.spec().block0() : engine.spec().block1();
  const auto group = enumerate_block(block, !(stabilized && n_side));
  const Weight& rp = engine.rho().rho_plus;
  detail::AlternatingBlockSum sum(n_side ? engine.partition0() : engine.partition1(), group,
                                  n_side ? gamma.doubled0() : gamma.doubled1(),
                                  n_side ? mu.doubled0() : mu.doubled1(),
                                  n_side ? rp.doubled0() : rp.doubled1());
  return sum(std::vector<int>(block.rank, 0));
}

// K^{g0}_{gamma,mu}(q) = sum_{w in W} eps(w) F_q(w(gamma + s) - mu - s), by the
// direct sum over W. shift is rho_plus for the definition and rho for the
// variant of the remark on W-stability.
inline QPolynomial kostka_g0(const Engine& engine, const Weight& gamma, const Weight& mu,
                             const Weight& shift, bool stab = false) {
  gamma.check_fits(engine.spec());
  mu.check_fits(engine.spec());
  const auto group = stab ? enumerate_w_stab(engine.spec()) : enumerate_w(engine.spec());
  QPolynomial total;
  for (const auto& w : group) total.add_scaled(engine.f_q(w.dot(gamma, shift) - mu), w.sign());
  return total;
}

inline QPolynomial kostka_g0(const Engine& engine, const Weight& gamma, const Weight& mu) {
  return kostka_g0(engine, gamma, mu, engine.rho().rho_plus);
}

inline QPolynomial kostka_g0_stab(const Engine& engine, const Weight& gamma, const Weight& mu) {
  return kostka_g0(engine, gamma, mu, engine.rho().rho_plus, true);
}

//---------------------------------------------------------------------------//
// Straightening
//---------------------------------------------------------------------------//

struct Straightened {
  int sign;
  Weight gamma;
  WeylElement tau;
};

namespace detail {

// Finds tau with x = tau(y), y in the closed-open dominant chamber of the
// block, y strictly dominant. Returns nullopt when x is fixed by a reflection.
inline std::optional<std::pair<BlockElement, std::vector<int>>> straighten_block(
    const ClassicalBlock& block, const std::vector<int>& x) {
  const int r = block.rank;
  BlockElement tau = BlockElement::identity(r);
  if (block.kind == BlockKind::Trivial) return std::make_pair(tau, x);

  // y sorted decreasingly (by absolute value for signed blocks); tau(y) = x
  // means x[i] = signs[i] * y[perm[i]].
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  const bool signed_block = block.has_sign_changes();
  auto key = [&](int i) { return signed_block ? std::abs(x[i]) : x[i]; };
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) > key(b); });
  std::vector<int> y(r);
  for (int k = 0; k < r; ++k) {
    y[k] = key(idx[k]);
    tau.perm[idx[k]] = k;
  }
  for (int k = 0; k + 1 < r; ++k)
    if (y[k] == y[k + 1]) return std::nullopt;
  if (!signed_block) return std::make_pair(tau, y);

  int negatives = 0;
  for (int i = 0; i < r; ++i)
    if (x[i] < 0) {
      tau.signs[i] = -1;
      ++negatives;
    }
  if (block.kind == BlockKind::B || block.kind == BlockKind::C) {
    if (r > 0 && y[r - 1] == 0) return std::nullopt;
    return std::make_pair(tau, y);
  }
  // Type D: the group only has even sign changes.
  if (negatives % 2 != 0) {
    const int last = idx[r - 1];  // position holding the smallest |x|
    if (y[r - 1] == 0) {
      tau.signs[last] = -tau.signs[last];
    } else {
      // x[last] = -|x[last]| must stay; give y a negative last entry instead.
      y[r - 1] = -y[r - 1];
      tau.signs[last] = -tau.signs[last];
    }
  }
  return std::make_pair(tau, y);
}

}  // namespace detail

// xi + rho_plus = tau(gamma + rho_plus) with gamma + rho_plus in the dominant
// chamber of each block; empty when xi + rho_plus is reflection-fixed.
inline std::optional<Straightened> straighten(const AlgebraSpec& spec, const Weight& xi) {
  xi.check_fits(spec);
  const Weight rp = rho(spec).rho_plus;
  const Weight x = xi + rp;
  auto a = detail::straighten_block(spec.block0(), x.doubled0());
  if (!a) return std::nullopt;
  auto b = detail::straighten_block(spec.block1(), x.doubled1());
  if (!b) return std::nullopt;
  WeylElement tau = WeylElement::make(spec, a->first, b->first);
  Weight gamma = Weight(a->second, b->second) - rp;
  return Straightened{tau.sign(), std::move(gamma), std::move(tau)};
}

//---------------------------------------------------------------------------//
// K_{lambda,mu}(q) for typical (and arbitrary dominant) lambda
//---------------------------------------------------------------------------//

struct TraceRow {
  Weight kappa;
  QPolynomial cq;
  Weight eta;  // w.lambda - mu - kappa
  BlockElement u;
  QPolynomial term_u;  // eps(u) P_{n,q}(eta0)
  BlockElement v;
  QPolynomial term_v;  // eps(v) P_{m,q}(eta1)
};

struct KostkaOptions {
  int threads = 1;
  bool direct = false;  // explicit outer sum over W instead of the block factorization
  std::vector<TraceRow>* trace = nullptr;
};

namespace detail {

// sum_{w in G} eps(w) P_q(w.lambda - mu), dot with rho, G = W or W_stab.
inline QPolynomial alternating_pq(const Engine& engine, const Weight& lambda, const Weight& mu,
                                  bool stab, const KostkaOptions& opts) {
  const AlgebraSpec& spec = engine.spec();
  lambda.check_fits(spec);
  mu.check_fits(spec);
  const Weight& rho_w = engine.rho().rho;
  const auto& cq = engine.c_q_table();

  if (opts.direct) {
    const auto group = stab ? enumerate_w_stab(spec) : enumerate_w(spec);
    std::vector<std::size_t> idx(group.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto terms = parallel_eval(idx, opts.threads, [&] {
      auto local = std::make_shared<Engine>(spec, engine.options());
      return [&, local](std::size_t i) {
        const Weight base = group[i].dot(lambda, rho_w) - mu;
        QPolynomial s;
        for (const auto& [kappa, c] : cq) {
          QPolynomial f = local->f_q(base - kappa);
          if (!f.is_zero()) s += c * f;
        }
        return s * Integer(group[i].sign());
      };
    });
    QPolynomial total;
    for (auto& t : terms) total += t;
    return total;
  }

  const auto g0 = enumerate_block(spec.block0(), !(stab && !spec.weyl_stabilizes_odd_roots()));
  const auto g1 = enumerate_block(spec.block1(), true);
  AlternatingBlockSum a0(engine.partition0(), g0, lambda.doubled0(), mu.doubled0(),
                         rho_w.doubled0());
  AlternatingBlockSum a1(engine.partition1(), g1, lambda.doubled1(), mu.doubled1(),
                         rho_w.doubled1());

  std::vector<std::vector<int>> keys0, keys1;
  for (const auto& [kappa, c] : cq) {
    keys0.push_back(kappa.doubled0());
    keys1.push_back(kappa.doubled1());
  }
  auto uniq = [](std::vector<std::vector<int>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(keys0);
  uniq(keys1);

  // Worker threads get their own partition memo (or the shared cache).
  auto eval_side = [&](const std::vector<std::vector<int>>& keys, const AlternatingBlockSum& sum,
                       const ClassicalBlock& block, const std::shared_ptr<SharedCache>& shared) {
    if (opts.threads <= 1)
      return parallel_eval(keys, 1, [&] { return [&](const std::vector<int>& k) { return sum(k); }; });
    return parallel_eval(keys, opts.threads, [&] {
      auto part = std::make_shared<BlockPartition>(block, engine.options().memoize, shared);
      auto local = std::make_shared<AlternatingBlockSum>(sum);
      local->rebind(*part);
      return [part, local](const std::vector<int>& k) { return (*local)(k); };
    });
  };
  const auto vals0 = eval_side(keys0, a0, spec.block0(), engine.options().shared0);
  const auto vals1 = eval_side(keys1, a1, spec.block1(), engine.options().shared1);
  std::map<std::vector<int>, const QPolynomial*> A, G;
  for (std::size_t i = 0; i < keys0.size(); ++i) A.emplace(keys0[i], &vals0[i]);
  for (std::size_t i = 0; i < keys1.size(); ++i) G.emplace(keys1[i], &vals1[i]);

  // The c_q table is ordered by part0 first, so kappa0 groups are contiguous.
  QPolynomial total;
  auto it = cq.begin();
  while (it != cq.end()) {
    const auto& k0 = it->first.doubled0();
    const QPolynomial& a = *A.at(k0);
    QPolynomial inner;
    auto jt = it;
    for (; jt != cq.end() && jt->first.doubled0() == k0; ++jt) {
      if (a.is_zero()) continue;
      const QPolynomial& g = *G.at(jt->first.doubled1());
      if (g.is_zero()) continue;
      inner += jt->second * g;
      if (opts.trace) {
        for (const auto& iu : a0.images()) {
          QPolynomial tu = a0.term(iu, k0) * Integer(iu.sign);
          if (tu.is_zero()) continue;
          for (const auto& iv : a1.images()) {
            QPolynomial tv = a1.term(iv, jt->first.doubled1()) * Integer(iv.sign);
            if (tv.is_zero()) continue;
            Weight eta(sub(iu.vec, k0), sub(iv.vec, jt->first.doubled1()));
            opts.trace->push_back({jt->first, jt->second, eta, *iu.elem, tu, *iv.elem, tv});
          }
        }
      }
    }
    if (!a.is_zero() && !inner.is_zero()) total += a * inner;
    it = jt;
  }
  return total;
}

}  // namespace detail

inline QPolynomial kostka_typical(const Engine& engine, const Weight& lambda, const Weight& mu,
                                  const KostkaOptions& opts = {}) {
  require_dominant(engine.spec(), lambda, "lambda");
  return detail::alternating_pq(engine, lambda, mu, false, opts);
}

inline QPolynomial kostka_stab(const Engine& engine, const Weight& lambda, const Weight& mu,
                               const KostkaOptions& opts = {}) {
  require_dominant(engine.spec(), lambda, "lambda");
  return detail::alternating_pq(engine, lambda, mu, true, opts);
}

inline QPolynomial kostka_typical(const AlgebraSpec& spec, const Weight& lambda, const Weight& mu,
                                  const KostkaOptions& opts = {}) {
  return kostka_typical(Engine(spec), lambda, mu, opts);
}

inline QPolynomial kostka_stab(const AlgebraSpec& spec, const Weight& lambda, const Weight& mu,
                               const KostkaOptions& opts = {}) {
  return kostka_stab(Engine(spec), lambda, mu, opts);
}

//---------------------------------------------------------------------------//
// Branching multiplicities
//---------------------------------------------------------------------------//

using BranchingMap = std::map<Weight, Integer>;

namespace detail {

inline void drop_zero(BranchingMap& m) {
  for (auto it = m.begin(); it != m.end();)
    it = (it->second == 0) ? m.erase(it) : std::next(it);
}

inline BranchingMap keep_dominant(const AlgebraSpec& spec, BranchingMap m) {
  drop_zero(m);
  for (auto it = m.begin(); it != m.end();)
    it = is_dominant(spec, it->first) ? std::next(it) : m.erase(it);
  return m;
}

}  // namespace detail

// gamma -> sum_w eps(w) c(w.lambda - gamma) over every gamma where some term is
// nonzero: gamma = w.lambda - kappa with kappa in the support of c.
inline BranchingMap branching_all(const Engine& engine, const Weight& lambda, bool stab = false) {
  const AlgebraSpec& spec = engine.spec();
  lambda.check_fits(spec);
  const bool use_stab = stab && !spec.weyl_stabilizes_odd_roots();
  const auto group = use_stab ? enumerate_w_stab(spec) : enumerate_w(spec);
  const Weight& shift = stab ? engine.rho().rho_plus : engine.rho().rho;
  BranchingMap out;
  for (const auto& w : group) {
    const Weight top = w.dot(lambda, shift);
    for (const auto& [kappa, p] : engine.c_q_table()) out[top - kappa] += w.sign() * p.eval_at_one();
  }
  return detail::keep_dominant(spec, std::move(out));
}

inline Integer branching_typical(const Engine& engine, const Weight& lambda, const Weight& gamma) {
  gamma.check_fits(engine.spec());
  Integer total = 0;
  for (const auto& w : enumerate_w(engine.spec()))
    total += w.sign() * engine.c(w.dot(lambda, engine.rho().rho) - gamma);
  return total;
}

inline Integer branching_stab(const Engine& engine, const Weight& lambda, const Weight& gamma) {
  gamma.check_fits(engine.spec());
  const Weight& rp = engine.rho().rho_plus;
  Integer total = 0;
  for (const auto& w : enumerate_w_stab(engine.spec()))
    total += w.sign() * engine.c(w.dot(lambda, rp) - gamma);
  return total;
}

// m_{lambda,gamma} = sum_w eps(w) c_lambda(lambda - w.gamma) for covariant lambda.
inline Integer branching_covariant(const AlgebraSpec& spec, const Weight& lambda,
                                   const Weight& gamma) {
  gamma.check_fits(spec);
  const auto table = c_lambda_table(spec, lambda);
  const Weight r = rho(spec).rho;
  Integer total = 0;
  for (const auto& w : enumerate_w(spec)) {
    auto it = table.find(lambda - w.dot(gamma, r));
    if (it != table.end()) total += w.sign() * it->second;
  }
  return total;
}

// All gamma with nonzero covariant branching multiplicity. lambda - w.gamma =
// kappa means gamma = w^{-1}.(lambda - kappa).
inline BranchingMap branching_covariant_all(const AlgebraSpec& spec, const Weight& lambda) {
  const auto table = c_lambda_table(spec, lambda);
  const Weight r = rho(spec).rho;
  BranchingMap out;
  for (const auto& w : enumerate_w(spec))
    for (const auto& [kappa, c] : table) out[w.dot(lambda - kappa, r)] += w.sign() * c;
  return detail::keep_dominant(spec, std::move(out));
}

//---------------------------------------------------------------------------//
// Stabilization
//---------------------------------------------------------------------------//

struct ThresholdBounds {
  int finite_dim = 0;
  int typical = 0;
  int size = 0;       // k >= (|lambda0| - |mu0|) / 2
  int vanishing = 0;  // every w outside W_stab contributes zero
  int value() const { return std::max({finite_dim, typical, size, vanishing}); }
};

inline ThresholdBounds stabilization_bounds(const AlgebraSpec& spec, const Weight& lambda,
                                            const Weight& mu) {
  if (spec.is_gl()) throw NotApplicable("stabilization threshold is defined for spo(2n,M) only");
  require_dominant(spec, lambda, "lambda");
  mu.check_fits(spec);
  ThresholdBounds b;
  // Finite dimensionality: lambda1_j = 0 for j > lambda0_{1bar} + k.
  const int last = lambda.doubled0().back() / 2;
  int top = 0;
  for (int j = 1; j <= spec.m; ++j)
    if (lambda.doubled1()[j - 1] != 0) top = j;
  b.finite_dim = std::max(0, top - last);
  // Typicality: <lambda + k omega + rho, alpha> = v + k <omega, alpha> is affine
  // in k; the bound passes its last nonnegative integer zero.
  const Weight shifted = lambda + rho(spec).rho;
  const Weight omega = Weight::omega(spec.n, spec.m);
  for (const auto& alpha : positive_roots(spec).odd_bar) {
    const long long v = inner_quadrupled(shifted, alpha.vec);
    const long long slope = inner_quadrupled(omega, alpha.vec);
    if (slope == 0 || v % slope != 0) continue;
    const long long k = -v / slope;
    if (k >= 0) b.typical = std::max<int>(b.typical, static_cast<int>(k + 1));
  }
  // k >= (|lambda0| - |mu0|) / 2, sizes in doubled units.
  const int d = lambda.doubled_size0() - mu.doubled_size0();
  if (d > 0) b.size = (d + 3) / 4;
  // A sign change at ibar lowers |w(nu0 + rho0)| by 2 (nu_ibar + rho_ibar).
  // P_q vanishes once that drop exceeds |lambda0| - |mu0| for every ibar, which
  // needs t = lambda_1bar + rho_1bar + k > 0 and 2t > |lambda0| - |mu0|. rho_1bar
  // is negative as soon as m >= 1, so the size bound alone is not enough.
  if (!spec.weyl_stabilizes_odd_roots()) {
    const int x = lambda.doubled0().back() + rho(spec).rho.doubled0().back();
    int k = 0;
    while (!(x + 2 * k > 0 && 2 * (x + 2 * k) > d)) ++k;
    b.vanishing = k;
  }
  return b;
}

inline int stabilization_threshold(const AlgebraSpec& spec, const Weight& lambda, const Weight& mu) {
  return stabilization_bounds(spec, lambda, mu).value();
}

inline Weight shift_by_omega(const AlgebraSpec& spec, const Weight& w, int k) {
  return w + k * Weight::omega(spec.n, spec.m);
}

//---------------------------------------------------------------------------//
// Graded characters
//---------------------------------------------------------------------------//

struct WeightBox {
  Weight lower;
  Weight upper;

  bool contains(const Weight& w) const {
    for (int i = 0; i < w.rank0(); ++i)
      if (w.doubled0()[i] < lower.doubled0()[i] || w.doubled0()[i] > upper.doubled0()[i]) return false;
    for (int i = 0; i < w.rank1(); ++i)
      if (w.doubled1()[i] < lower.doubled1()[i] || w.doubled1()[i] > upper.doubled1()[i]) return false;
    return true;
  }

  WeightBox enlarged(int by) const {
    WeightBox b = *this;
    for (int& v : b.lower.doubled0()) v -= 2 * by;
    for (int& v : b.lower.doubled1()) v -= 2 * by;
    for (int& v : b.upper.doubled0()) v += 2 * by;
    for (int& v : b.upper.doubled1()) v += 2 * by;
    return b;
  }
};

using GradedCharacter = std::map<Weight, QPolynomial>;

// Box containing every weight of the g0-modules V(lambda - kappa) over the c
// support: those lie within the orbit hulls of the gamma = lambda - kappa.
inline WeightBox default_character_box(const Engine& engine, const Weight& lambda) {
  const AlgebraSpec& spec = engine.spec();
  std::vector<int> lo0(spec.n, 1 << 28), hi0(spec.n, -(1 << 28)), lo1(spec.m, 1 << 28),
      hi1(spec.m, -(1 << 28));
  auto widen = [](const std::vector<int>& v, bool signed_block, std::vector<int>& lo,
                  std::vector<int>& hi) {
    if (v.empty()) return;
    int mn = *std::min_element(v.begin(), v.end());
    int mx = *std::max_element(v.begin(), v.end());
    if (signed_block) {
      int a = std::max(std::abs(mn), std::abs(mx));
      mn = -a;
      mx = a;
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = std::min(lo[i], mn);
      hi[i] = std::max(hi[i], mx);
    }
  };
  for (const auto& [kappa, p] : engine.c_q_table()) {
    const Weight g = lambda - kappa;
    widen(g.doubled0(), spec.block0().has_sign_changes(), lo0, hi0);
    widen(g.doubled1(), spec.block1().has_sign_changes(), lo1, hi1);
  }
  return {Weight(lo0, lo1), Weight(hi0, hi1)};
}

// mu -> K_{lambda,mu}(q) over the weights of the box congruent to lambda.
inline GradedCharacter graded_character_typical(const Engine& engine, const Weight& lambda,
                                                const std::optional<WeightBox>& box_in = {},
                                                const KostkaOptions& opts = {}) {
  const AlgebraSpec& spec = engine.spec();
  require_dominant(spec, lambda, "lambda");
  const WeightBox box = box_in ? *box_in : default_character_box(engine, lambda);
  std::vector<int> cur0(spec.n), cur1(spec.m);
  // Walk mu = lambda + 2 * integer offsets inside the box (doubled units).
  std::vector<int> start;
  std::vector<int> stop;
  std::vector<int> all_lambda;
  for (int i = 0; i < spec.n; ++i) all_lambda.push_back(lambda.doubled0()[i]);
  for (int i = 0; i < spec.m; ++i) all_lambda.push_back(lambda.doubled1()[i]);
  std::vector<int> lo, hi;
  for (int i = 0; i < spec.n; ++i) {
    lo.push_back(box.lower.doubled0()[i]);
    hi.push_back(box.upper.doubled0()[i]);
  }
  for (int i = 0; i < spec.m; ++i) {
    lo.push_back(box.lower.doubled1()[i]);
    hi.push_back(box.upper.doubled1()[i]);
  }
  const std::size_t dim = all_lambda.size();
  for (std::size_t i = 0; i < dim; ++i) {
    int s = lo[i];
    if (((s - all_lambda[i]) % 2 + 2) % 2 != 0) ++s;
    start.push_back(s);
  }
  GradedCharacter out;
  std::vector<int> pt = start;
  for (std::size_t i = 0; i < dim; ++i)
    if (start[i] > hi[i]) return out;
  while (true) {
    Weight mu(std::vector<int>(pt.begin(), pt.begin() + spec.n),
              std::vector<int>(pt.begin() + spec.n, pt.end()));
    QPolynomial k = kostka_typical(engine, lambda, mu, opts);
    if (!k.is_zero()) out.emplace(std::move(mu), std::move(k));
    std::size_t i = 0;
    for (; i < dim; ++i) {
      pt[i] += 2;
      if (pt[i] <= hi[i]) break;
      pt[i] = start[i];
    }
    if (i == dim) break;
  }
  return out;
}

//---------------------------------------------------------------------------//
// Covariant modules and the decomposition route
//---------------------------------------------------------------------------//

// K_{lambda,mu}(q) = sum_kappa q^{|kappa0|} c_lambda(kappa) K^{g0}_{lambda-kappa,mu}(q),
// each K^{g0} factored into its two block polynomials.
inline QPolynomial kostka_covariant(const Engine& engine, const Weight& lambda, const Weight& mu) {
  const AlgebraSpec& spec = engine.spec();
  if (!spec.is_gl()) throw NotApplicable("covariant q-analogs are defined for gl(n,m) only");
  mu.check_fits(spec);
  const auto table = c_lambda_table(spec, lambda);
  const Weight& rp = engine.rho().rho_plus;
  const auto g0 = enumerate_block(spec.block0(), true);
  const auto g1 = enumerate_block(spec.block1(), true);
  QPolynomial total;
  for (const auto& [kappa, c] : table) {
    const Weight gamma = lambda - kappa;
    detail::AlternatingBlockSum a0(engine.partition0(), g0, gamma.doubled0(), mu.doubled0(),
                                   rp.doubled0());
    QPolynomial a = a0(std::vector<int>(spec.n, 0));
    if (a.is_zero()) continue;
    detail::AlternatingBlockSum a1(engine.partition1(), g1, gamma.doubled1(), mu.doubled1(),
                                   rp.doubled1());
    QPolynomial b = a1(std::vector<int>(spec.m, 0));
    if (b.is_zero()) continue;
    total.add_scaled(a * b, c, kappa.doubled_size0() / 2);
  }
  return total;
}

// Right-hand side of the gl decomposition:
//   q^{|lambda0|-|mu0|} sum_gamma m_{lambda,gamma} K_{gamma0,mu0}(q) K_{gamma1,mu1}(q).
inline QPolynomial decompose_thm_tkgl(const Engine& engine, const Weight& lambda, const Weight& mu) {
  const AlgebraSpec& spec = engine.spec();
  if (!spec.is_gl()) throw NotApplicable("the decomposition route is defined for gl(n,m) only");
  require_dominant(spec, lambda, "lambda");
  mu.check_fits(spec);
  QPolynomial total;
  for (const auto& [gamma, mult] : branching_all(engine, lambda)) {
    QPolynomial a = lusztig_classical(engine, BlockSide::N, gamma, mu);
    if (a.is_zero()) continue;
    QPolynomial b = lusztig_classical(engine, BlockSide::M, gamma, mu);
    if (b.is_zero()) continue;
    total.add_scaled(a * b, mult);
  }
  const int d = lambda.doubled_size0() - mu.doubled_size0();
  return total.shifted(d / 2);
}

}  // namespace superkostka
