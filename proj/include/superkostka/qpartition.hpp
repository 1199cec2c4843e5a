#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "superkostka/algebra.hpp"
#include "superkostka/qpolynomial.hpp"

namespace superkostka {

// Identifies an ordered positive-root list of one classical block.
struct RootListKey {
  BlockKind kind = BlockKind::Trivial;
  int rank = 0;

  static RootListKey of(const ClassicalBlock& b) { return {b.kind, b.rank}; }
  std::string str() const { return superkostka::to_string(kind) + std::to_string(rank); }
  friend bool operator==(const RootListKey&, const RootListKey&) = default;
  friend auto operator<=>(const RootListKey&, const RootListKey&) = default;
};

// Memo budget in bytes from SUPERKOSTKA_CACHE_MB; 0 means unlimited.
inline std::size_t cache_budget_bytes() {
  static const std::size_t budget = [] {
    const char* env = std::getenv("SUPERKOSTKA_CACHE_MB");
    if (!env || !*env) return std::size_t{0};
    char* end = nullptr;
    unsigned long long mb = std::strtoull(env, &end, 10);
    if (end == env) return std::size_t{0};
    return static_cast<std::size_t>(mb) << 20;
  }();
  return budget;
}

// Thread-safe memo shared between engines of the same block. Only completed
// values are ever inserted.
class SharedCache {
 public:
  bool find(const std::vector<int>& key, QPolynomial& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(const std::vector<int>& key, const QPolynomial& value) {
    std::unique_lock lock(mutex_);
    const std::size_t budget = cache_budget_bytes();
    if (budget && bytes_ > budget) {
      map_.clear();
      bytes_ = 0;
    }
    if (map_.emplace(key, value).second) bytes_ += entry_bytes(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  static std::size_t entry_bytes(const std::vector<int>& key, const QPolynomial& v) {
    return 64 + key.size() * sizeof(int) + v.approx_bytes();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, QPolynomial, IntVectorHash> map_;
  std::size_t bytes_ = 0;
};

// Lusztig q-partition function of one classical block:
//   1 / prod_{alpha > 0} (1 - q e^alpha) = sum_eta P(eta) e^eta.
// Suffix recursion over the positive roots, non-simple roots first so that
// the tail consisting of the simple roots alone has the closed form
// q^{sum of simple coordinates}.
class BlockPartition {
 public:
  explicit BlockPartition(ClassicalBlock block, bool memoize = true,
                          std::shared_ptr<SharedCache> shared = nullptr)
      : block_(block), memoize_(memoize), shared_(std::move(shared)) {
    auto simple = block.simple_roots();
    for (const auto& r : block.positive_roots())
      if (std::find(simple.begin(), simple.end(), r) == simple.end()) roots_.push_back(r);
    tail_ = roots_.size();
    for (const auto& r : simple) roots_.push_back(r);
    // Simple coordinates of each root, for the monotone cone test.
    for (const auto& r : roots_) root_coords_.push_back(*block_.simple_coordinates(r));
  }

  const ClassicalBlock& block() const { return block_; }
  RootListKey key() const { return RootListKey::of(block_); }
  const std::vector<std::vector<int>>& ordered_roots() const { return roots_; }

  // eta in integer block coordinates.
  QPolynomial operator()(std::span<const int> eta) const {
    auto c = block_.simple_coordinates(eta);
    if (!c) return {};
    for (long long v : *c)
      if (v < 0) return {};
    return rec(*c, 0);
  }

  // eta in doubled encoding; half-integral entries give zero.
  QPolynomial of_doubled(const std::vector<int>& doubled) const {
    if (!Weight::all_even(doubled)) return {};
    std::vector<int> eta = Weight::halve(doubled);
    return (*this)(eta);
  }

  std::size_t memo_size() const { return shared_ ? shared_->size() : memo_.size(); }
  void clear() const {
    memo_.clear();
    bytes_ = 0;
  }

 private:
  // c: simple-root coordinates of the remaining weight, all nonnegative.
  QPolynomial rec(const std::vector<long long>& c, std::size_t k) const {
    if (k == tail_) {
      long long s = 0;
      for (long long v : c) s += v;
      return QPolynomial::monomial(static_cast<int>(s));
    }
    std::vector<int> key;
    if (memoize_) {
      key.reserve(c.size() + 1);
      key.push_back(static_cast<int>(k));
      for (long long v : c) key.push_back(static_cast<int>(v));
      if (shared_) {
        QPolynomial hit;
        if (shared_->find(key, hit)) return hit;
      } else {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
      }
    }
    QPolynomial result;
    std::vector<long long> rem = c;
    const auto& a = root_coords_[k];
    for (int j = 0;; ++j) {
      result.add_scaled(rec(rem, k + 1), 1, j);
      bool ok = true;
      for (std::size_t i = 0; i < rem.size(); ++i) {
        rem[i] -= a[i];
        if (rem[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    if (memoize_) {
      if (shared_) {
        shared_->insert(key, result);
      } else {
        const std::size_t budget = cache_budget_bytes();
        if (budget && bytes_ > budget) clear();
        bytes_ += SharedCache::entry_bytes(key, result);
        memo_.emplace(std::move(key), result);
      }
    }
    return result;
  }

  ClassicalBlock block_;
  bool memoize_;
  std::shared_ptr<SharedCache> shared_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<long long>> root_coords_;
  std::size_t tail_ = 0;
  mutable std::unordered_map<std::vector<int>, QPolynomial, IntVectorHash> memo_;
  mutable std::size_t bytes_ = 0;
};

// Convenience: P_{q}(eta) for a block, without keeping a memo around.
inline QPolynomial lusztig_partition(const ClassicalBlock& block, std::span<const int> eta) {
  return BlockPartition(block)(eta);
}

using WeightPolyMap = std::map<Weight, QPolynomial>;
using WeightIntMap = std::map<Weight, Integer>;

// Subset sums of a root list: coefficient of e^kappa in prod (1 + q e^alpha).
inline WeightPolyMap subset_sum_table(const std::vector<Root>& roots, int n, int m) {
  std::unordered_map<Weight, QPolynomial, WeightHash> table;
  table.emplace(Weight::zero(n, m), QPolynomial(1));
  for (const auto& alpha : roots) {
    std::unordered_map<Weight, QPolynomial, WeightHash> next = table;
    for (const auto& [k, p] : table) next[k + alpha.vec].add_scaled(p, 1, 1);
    table = std::move(next);
  }
  WeightPolyMap out;
  for (auto& [k, p] : table)
    if (!p.is_zero()) out.emplace(k, std::move(p));
  return out;
}

struct EngineOptions {
  bool memoize = true;
  std::shared_ptr<SharedCache> shared0;
  std::shared_ptr<SharedCache> shared1;
};

// Per-query state: root data, rho, the two block partition functions and the
// c_q table. Not safe for concurrent use; give each thread its own Engine
// (optionally sharing SharedCache instances).
class Engine {
 public:
  explicit Engine(const AlgebraSpec& spec, EngineOptions opts = {})
      : spec_((spec.validate(), spec)),
        roots_(positive_roots(spec)),
        rho_(superkostka::rho(spec)),
        p0_(spec.block0(), opts.memoize, opts.shared0),
        p1_(spec.block1(), opts.memoize, opts.shared1),
        opts_(std::move(opts)) {}

  const AlgebraSpec& spec() const { return spec_; }
  const PositiveRoots& roots() const { return roots_; }
  const Rho& rho() const { return rho_; }
  const EngineOptions& options() const { return opts_; }
  const BlockPartition& partition0() const { return p0_; }
  const BlockPartition& partition1() const { return p1_; }

  // F_q(eta) = P_{n,q}(eta0) * P_{m,q}(eta1).
  QPolynomial f_q(const Weight& eta) const {
    eta.check_fits(spec_);
    QPolynomial a = p0_.of_doubled(eta.doubled0());
    if (a.is_zero()) return a;
    return a * p1_.of_doubled(eta.doubled1());
  }

  const WeightPolyMap& c_q_table() const {
    if (!cq_) cq_ = std::make_unique<WeightPolyMap>(subset_sum_table(roots_.odd, spec_.n, spec_.m));
    return *cq_;
  }

  QPolynomial c_q(const Weight& kappa) const {
    kappa.check_fits(spec_);
    const auto& t = c_q_table();
    auto it = t.find(kappa);
    return it == t.end() ? QPolynomial() : it->second;
  }

  Integer c(const Weight& kappa) const { return c_q(kappa).eval_at_one(); }

  // P_q(beta) = sum_kappa c_q(kappa) F_q(beta - kappa).
  QPolynomial p_q(const Weight& beta) const {
    beta.check_fits(spec_);
    QPolynomial out;
    for (const auto& [kappa, cq] : c_q_table()) {
      QPolynomial f = f_q(beta - kappa);
      if (!f.is_zero()) out += cq * f;
    }
    return out;
  }

 private:
  AlgebraSpec spec_;
  PositiveRoots roots_;
  Rho rho_;
  BlockPartition p0_;
  BlockPartition p1_;
  EngineOptions opts_;
  mutable std::unique_ptr<WeightPolyMap> cq_;
};

inline QPolynomial f_q(const AlgebraSpec& spec, const Weight& eta) { return Engine(spec).f_q(eta); }
inline QPolynomial c_q(const AlgebraSpec& spec, const Weight& kappa) {
  return Engine(spec).c_q(kappa);
}
inline Integer c(const AlgebraSpec& spec, const Weight& kappa) { return Engine(spec).c(kappa); }
inline QPolynomial p_q(const AlgebraSpec& spec, const Weight& beta) {
  return Engine(spec).p_q(beta);
}

// Delta_{1,lambda}: delta_{overline{n+1-i}} - delta_r for each box (i, r) of
// Y(lambda) with i <= n and r <= m. Row 1 belongs to the coordinate nbar,
// which is array index 0 of part0.
inline std::vector<Root> odd_roots_of_diagram(const AlgebraSpec& spec, const Weight& lambda) {
  const auto rows = hook_diagram(spec, lambda);
  std::vector<Root> out;
  for (int i = 0; i < spec.n && i < static_cast<int>(rows.size()); ++i)
    for (int r = 0; r < spec.m && r < rows[i]; ++r) out.push_back(detail::odd_root(spec.n, spec.m, i, r, -1));
  return out;
}

// c_lambda as a table over the support (positive-sum convention).
inline WeightIntMap c_lambda_table(const AlgebraSpec& spec, const Weight& lambda) {
  WeightIntMap out;
  for (auto& [k, p] : subset_sum_table(odd_roots_of_diagram(spec, lambda), spec.n, spec.m))
    out.emplace(k, p.eval_at_one());
  return out;
}

inline Integer c_lambda(const AlgebraSpec& spec, const Weight& lambda, const Weight& kappa) {
  kappa.check_fits(spec);
  const auto t = c_lambda_table(spec, lambda);
  auto it = t.find(kappa);
  return it == t.end() ? Integer(0) : it->second;
}

}  // namespace superkostka
