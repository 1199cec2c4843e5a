#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "superkostka/error.hpp"

namespace superkostka {

//---------------------------------------------------------------------------//
// Classical blocks
//---------------------------------------------------------------------------//

// Root system of one classical summand of g0 in the coordinates of its block.
// Trivial covers the rank-0 block of spo(2n,1) and the so(2) block of
// spo(2n,2): no roots, trivial Weyl group.
enum class BlockKind { A, B, C, D, Trivial };

inline std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::A: return "A";
    case BlockKind::B: return "B";
    case BlockKind::C: return "C";
    case BlockKind::D: return "D";
    case BlockKind::Trivial: return "T";
  }
  return "?";
}

struct ClassicalBlock {
  BlockKind kind = BlockKind::Trivial;
  int rank = 0;

  friend bool operator==(const ClassicalBlock&, const ClassicalBlock&) = default;

  // Positive roots in table order (integer coordinates).
  std::vector<std::vector<int>> positive_roots() const {
    std::vector<std::vector<int>> roots;
    auto unit = [&](int a, int coef) {
      std::vector<int> v(rank, 0);
      v[a] = coef;
      return v;
    };
    auto pair = [&](int a, int b, int sb) {
      std::vector<int> v(rank, 0);
      v[a] = 1;
      v[b] = sb;
      return v;
    };
    switch (kind) {
      case BlockKind::A:
        for (int a = 0; a < rank; ++a)
          for (int b = a + 1; b < rank; ++b) roots.push_back(pair(a, b, -1));
        break;
      case BlockKind::C:
        for (int a = 0; a < rank; ++a) roots.push_back(unit(a, 2));
        for (int a = 0; a < rank; ++a)
          for (int b = a + 1; b < rank; ++b) {
            roots.push_back(pair(a, b, -1));
            roots.push_back(pair(a, b, 1));
          }
        break;
      case BlockKind::B:
        for (int a = 0; a < rank; ++a) roots.push_back(unit(a, 1));
        for (int a = 0; a < rank; ++a)
          for (int b = a + 1; b < rank; ++b) {
            roots.push_back(pair(a, b, -1));
            roots.push_back(pair(a, b, 1));
          }
        break;
      case BlockKind::D:
        for (int a = 0; a < rank; ++a)
          for (int b = a + 1; b < rank; ++b) {
            roots.push_back(pair(a, b, -1));
            roots.push_back(pair(a, b, 1));
          }
        break;
      case BlockKind::Trivial:
        break;
    }
    return roots;
  }

  std::vector<std::vector<int>> simple_roots() const {
    std::vector<std::vector<int>> roots;
    if (kind == BlockKind::Trivial || rank == 0) return roots;
    for (int a = 0; a + 1 < rank; ++a) {
      std::vector<int> v(rank, 0);
      v[a] = 1;
      v[a + 1] = -1;
      roots.push_back(v);
    }
    std::vector<int> last(rank, 0);
    switch (kind) {
      case BlockKind::A: return roots;
      case BlockKind::B: last[rank - 1] = 1; break;
      case BlockKind::C: last[rank - 1] = 2; break;
      case BlockKind::D: last[rank - 2] = 1; last[rank - 1] = 1; break;
      case BlockKind::Trivial: break;
    }
    roots.push_back(last);
    return roots;
  }

  // Sum of positive roots, i.e. rho_plus of the block in doubled encoding.
  std::vector<int> rho_plus_doubled() const {
    std::vector<int> sum(rank, 0);
    for (const auto& r : positive_roots())
      for (int i = 0; i < rank; ++i) sum[i] += r[i];
    return sum;
  }

  // Coordinates of x in the simple-root basis, or nullopt when x is not in
  // the root lattice. Nonnegativity is not checked here.
  std::optional<std::vector<long long>> simple_coordinates(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != rank)
      throw DimensionMismatch("block vector has wrong length");
    std::vector<long long> partial(rank);
    long long s = 0;
    for (int i = 0; i < rank; ++i) {
      s += x[i];
      partial[i] = s;
    }
    std::vector<long long> c;
    switch (kind) {
      case BlockKind::Trivial:
        for (int v : x)
          if (v != 0) return std::nullopt;
        return c;
      case BlockKind::A:
        if (rank > 0 && partial[rank - 1] != 0) return std::nullopt;
        c.assign(partial.begin(), partial.begin() + std::max(rank - 1, 0));
        return c;
      case BlockKind::B:
        return partial;
      case BlockKind::C:
        if (partial[rank - 1] % 2 != 0) return std::nullopt;
        c = partial;
        c[rank - 1] /= 2;
        return c;
      case BlockKind::D: {
        long long head = partial[rank - 2];
        long long tail = x[rank - 1];
        if ((head - tail) % 2 != 0) return std::nullopt;
        c.assign(partial.begin(), partial.end());
        c[rank - 2] = (head - tail) / 2;
        c[rank - 1] = (head + tail) / 2;
        return c;
      }
    }
    return std::nullopt;
  }

  // True iff x is a nonnegative integer combination of simple roots.
  bool in_cone(std::span<const int> x) const {
    auto c = simple_coordinates(x);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](long long v) { return v >= 0; });
  }

  // Order of the Weyl group of the block.
  unsigned long long weyl_order() const {
    unsigned long long f = 1;
    for (int i = 2; i <= rank; ++i) f *= static_cast<unsigned long long>(i);
    switch (kind) {
      case BlockKind::A: return f;
      case BlockKind::B:
      case BlockKind::C: return f << rank;
      case BlockKind::D: return f << (rank - 1);
      case BlockKind::Trivial: return 1;
    }
    return 1;
  }

  bool has_sign_changes() const {
    return kind == BlockKind::B || kind == BlockKind::C || kind == BlockKind::D;
  }
};

//---------------------------------------------------------------------------//
// Algebra specification
//---------------------------------------------------------------------------//

enum class Family { GL, SPO_ODD, SPO_EVEN };

// gl(n,m), spo(2n,2m+1) or spo(2n,2m). SPO_EVEN with m = 1 is spo(2n,2).
struct AlgebraSpec {
  Family family = Family::GL;
  int n = 1;
  int m = 1;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

  static AlgebraSpec gl(int n, int m) { return make(Family::GL, n, m); }
  static AlgebraSpec spo_odd(int n, int m) { return make(Family::SPO_ODD, n, m); }
  static AlgebraSpec spo_even(int n, int m) { return make(Family::SPO_EVEN, n, m); }

  static AlgebraSpec make(Family family, int n, int m) {
    AlgebraSpec spec{family, n, m};
    spec.validate();
    return spec;
  }

  void validate() const {
    if (n < 1) throw InvalidAlgebra("n must be at least 1");
    switch (family) {
      case Family::GL:
        if (m < 1) throw InvalidAlgebra("gl(n,m) requires m >= 1");
        break;
      case Family::SPO_ODD:
        if (m < 0) throw InvalidAlgebra("spo(2n,2m+1) requires m >= 0");
        break;
      case Family::SPO_EVEN:
        if (m < 1) throw InvalidAlgebra("spo(2n,2m) requires m >= 1");
        break;
    }
  }

  bool is_gl() const { return family == Family::GL; }
  bool is_spo() const { return family != Family::GL; }

  // True when W stabilizes the odd positive roots, i.e. W_stab = W.
  bool weyl_stabilizes_odd_roots() const {
    return family == Family::GL || (family == Family::SPO_EVEN && m == 1);
  }

  ClassicalBlock block0() const {
    return {family == Family::GL ? BlockKind::A : BlockKind::C, n};
  }

  ClassicalBlock block1() const {
    switch (family) {
      case Family::GL: return {BlockKind::A, m};
      case Family::SPO_ODD: return {m == 0 ? BlockKind::Trivial : BlockKind::B, m};
      case Family::SPO_EVEN: return {m == 1 ? BlockKind::Trivial : BlockKind::D, m};
    }
    return {};
  }

  std::string name() const {
    switch (family) {
      case Family::GL: return "gl(" + std::to_string(n) + "," + std::to_string(m) + ")";
      case Family::SPO_ODD:
        return "spo(" + std::to_string(2 * n) + "," + std::to_string(2 * m + 1) + ")";
      case Family::SPO_EVEN:
        return "spo(" + std::to_string(2 * n) + "," + std::to_string(2 * m) + ")";
    }
    return "?";
  }
};

//---------------------------------------------------------------------------//
// Weights
//---------------------------------------------------------------------------//

// A weight (b0; b1) of h*. Entries are half-integers stored doubled.
class Weight {
 public:
  Weight() = default;
  Weight(std::vector<int> doubled0, std::vector<int> doubled1)
      : part0_(std::move(doubled0)), part1_(std::move(doubled1)) {}

  static Weight from_integers(std::span<const int> p0, std::span<const int> p1) {
    std::vector<int> a(p0.begin(), p0.end()), b(p1.begin(), p1.end());
    for (int& v : a) v *= 2;
    for (int& v : b) v *= 2;
    return {std::move(a), std::move(b)};
  }
  static Weight from_integers(std::initializer_list<int> p0, std::initializer_list<int> p1) {
    return from_integers(std::span<const int>(p0.begin(), p0.size()),
                         std::span<const int>(p1.begin(), p1.size()));
  }
  static Weight from_integers(const std::vector<int>& p0, const std::vector<int>& p1) {
    return from_integers(std::span<const int>(p0), std::span<const int>(p1));
  }

  static Weight zero(int n, int m) { return {std::vector<int>(n, 0), std::vector<int>(m, 0)}; }

  // omega = (1,...,1; 0,...,0).
  static Weight omega(int n, int m) { return {std::vector<int>(n, 2), std::vector<int>(m, 0)}; }

  const std::vector<int>& doubled0() const { return part0_; }
  const std::vector<int>& doubled1() const { return part1_; }
  std::vector<int>& doubled0() { return part0_; }
  std::vector<int>& doubled1() { return part1_; }

  int rank0() const { return static_cast<int>(part0_.size()); }
  int rank1() const { return static_cast<int>(part1_.size()); }

  bool fits(const AlgebraSpec& spec) const { return rank0() == spec.n && rank1() == spec.m; }

  void check_fits(const AlgebraSpec& spec) const {
    if (!fits(spec))
      throw DimensionMismatch("weight " + to_string() + " does not fit " + spec.name());
  }

  static bool all_even(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x % 2 == 0; });
  }
  static bool all_odd(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x % 2 != 0; });
  }

  bool is_integral() const { return all_even(part0_) && all_even(part1_); }

  // Integer block coordinates; caller guarantees integrality of the block.
  static std::vector<int> halve(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / 2;
    return out;
  }

  // Sum of block entries, doubled.
  int doubled_size0() const { return std::accumulate(part0_.begin(), part0_.end(), 0); }
  int doubled_size1() const { return std::accumulate(part1_.begin(), part1_.end(), 0); }

  Weight& operator+=(const Weight& o) {
    same_shape(o);
    for (std::size_t i = 0; i < part0_.size(); ++i) part0_[i] += o.part0_[i];
    for (std::size_t i = 0; i < part1_.size(); ++i) part1_[i] += o.part1_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    same_shape(o);
    for (std::size_t i = 0; i < part0_.size(); ++i) part0_[i] -= o.part0_[i];
    for (std::size_t i = 0; i < part1_.size(); ++i) part1_[i] -= o.part1_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& v : a.part0_) v *= k;
    for (int& v : a.part1_) v *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const {
    auto entry = [](int d) {
      if (d % 2 == 0) return std::to_string(d / 2);
      return std::to_string(d) + "/2";
    };
    std::string s = "(";
    for (std::size_t i = 0; i < part0_.size(); ++i) {
      if (i) s += ",";
      s += entry(part0_[i]);
    }
    s += ";";
    for (std::size_t i = 0; i < part1_.size(); ++i) {
      if (i) s += ",";
      s += entry(part1_[i]);
    }
    return s + ")";
  }

 private:
  void same_shape(const Weight& o) const {
    if (o.part0_.size() != part0_.size() || o.part1_.size() != part1_.size())
      throw DimensionMismatch("weights of different shapes: " + to_string() + " vs " +
                              o.to_string());
  }

  std::vector<int> part0_;
  std::vector<int> part1_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.doubled0().size();
    auto mix = [&h](int v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (int v : w.doubled0()) mix(v);
    mix(0x7fff);
    for (int v : w.doubled1()) mix(v);
    return h;
  }
};

struct IntVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

//---------------------------------------------------------------------------//
// Roots
//---------------------------------------------------------------------------//

enum class Parity { EVEN, ODD };

struct Root {
  Weight vec;  // doubled encoding like every Weight
  Parity parity = Parity::EVEN;

  friend bool operator==(const Root&, const Root&) = default;
};

struct PositiveRoots {
  std::vector<Root> even;
  std::vector<Root> odd;
  std::vector<Root> odd_bar;
  std::vector<Root> even_n;  // supported on part0
  std::vector<Root> even_m;  // supported on part1
};

namespace detail {

inline Root embed(const std::vector<int>& r, int n, int m, bool in_part0, Parity parity) {
  std::vector<int> a(n, 0), b(m, 0);
  auto& target = in_part0 ? a : b;
  for (std::size_t i = 0; i < r.size(); ++i) target[i] = 2 * r[i];
  return {Weight(std::move(a), std::move(b)), parity};
}

// delta_{bar at array index a} + s * delta_{r at index b}; s = 0 drops the part1 term.
inline Root odd_root(int n, int m, int a, int b, int s) {
  std::vector<int> p0(n, 0), p1(m, 0);
  p0[a] = 2;
  if (s != 0) p1[b] = 2 * s;
  return {Weight(std::move(p0), std::move(p1)), Parity::ODD};
}

}  // namespace detail

inline PositiveRoots positive_roots(const AlgebraSpec& spec) {
  spec.validate();
  const int n = spec.n, m = spec.m;
  PositiveRoots out;
  for (const auto& r : spec.block0().positive_roots())
    out.even_n.push_back(detail::embed(r, n, m, true, Parity::EVEN));
  for (const auto& r : spec.block1().positive_roots())
    out.even_m.push_back(detail::embed(r, n, m, false, Parity::EVEN));
  out.even = out.even_n;
  out.even.insert(out.even.end(), out.even_m.begin(), out.even_m.end());

  switch (spec.family) {
    case Family::GL:
      // delta_ibar - delta_r
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) out.odd.push_back(detail::odd_root(n, m, a, b, -1));
      out.odd_bar = out.odd;
      break;
    case Family::SPO_ODD:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < m; ++b) {
          out.odd.push_back(detail::odd_root(n, m, a, b, -1));
          out.odd.push_back(detail::odd_root(n, m, a, b, 1));
        }
        out.odd.push_back(detail::odd_root(n, m, a, 0, 0));
      }
      break;
    case Family::SPO_EVEN:
      if (m == 1) {
        // spo(2n,2): delta_1 +- delta_ibar, a W-stable set.
        for (int a = 0; a < n; ++a)
          for (int s : {1, -1}) {
            Root r = detail::odd_root(n, m, a, 0, 1);
            r.vec.doubled0()[a] = 2 * s;
            out.odd.push_back(std::move(r));
          }
        break;
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
          out.odd.push_back(detail::odd_root(n, m, a, b, -1));
          out.odd.push_back(detail::odd_root(n, m, a, b, 1));
        }
      break;
  }
  if (spec.is_spo()) {
    // Odd roots touching part1; for spo(2n,2) these are all of them.
    for (const auto& r : out.odd)
      if (std::any_of(r.vec.doubled1().begin(), r.vec.doubled1().end(),
                      [](int v) { return v != 0; }))
        out.odd_bar.push_back(r);
  }
  return out;
}

//---------------------------------------------------------------------------//
// Inner product and rho
//---------------------------------------------------------------------------//

using Rational = boost::rational<long long>;

// <x, y> with <d_ibar, d_jbar> = delta_ij and <d_r, d_s> = -delta_rs, in
// doubled units (i.e. 4 * <x, y>).
inline long long inner_quadrupled(const Weight& x, const Weight& y) {
  if (x.rank0() != y.rank0() || x.rank1() != y.rank1())
    throw DimensionMismatch("inner product of weights of different shapes");
  long long s = 0;
  for (int i = 0; i < x.rank0(); ++i)
    s += static_cast<long long>(x.doubled0()[i]) * y.doubled0()[i];
  for (int i = 0; i < x.rank1(); ++i)
    s -= static_cast<long long>(x.doubled1()[i]) * y.doubled1()[i];
  return s;
}

inline Rational inner(const Weight& x, const Weight& y) {
  return Rational(inner_quadrupled(x, y), 4);
}

struct Rho {
  Weight rho_plus;
  Weight rho_minus;
  Weight rho;
};

inline Rho rho(const AlgebraSpec& spec) {
  auto roots = positive_roots(spec);
  // The half sum of roots in doubled encoding is the plain sum of integer roots.
  Weight plus = Weight::zero(spec.n, spec.m), minus = Weight::zero(spec.n, spec.m);
  for (const auto& r : roots.even) {
    for (int i = 0; i < spec.n; ++i) plus.doubled0()[i] += r.vec.doubled0()[i] / 2;
    for (int i = 0; i < spec.m; ++i) plus.doubled1()[i] += r.vec.doubled1()[i] / 2;
  }
  for (const auto& r : roots.odd) {
    for (int i = 0; i < spec.n; ++i) minus.doubled0()[i] += r.vec.doubled0()[i] / 2;
    for (int i = 0; i < spec.m; ++i) minus.doubled1()[i] += r.vec.doubled1()[i] / 2;
  }
  return {plus, minus, plus - minus};
}

//---------------------------------------------------------------------------//
// Weight classification
//---------------------------------------------------------------------------//

namespace detail {

inline bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

}  // namespace detail

inline bool is_dominant(const AlgebraSpec& spec, const Weight& lambda) {
  lambda.check_fits(spec);
  const auto& p0 = lambda.doubled0();
  const auto& p1 = lambda.doubled1();
  if (spec.is_gl())
    return Weight::all_even(p0) && Weight::all_even(p1) && detail::weakly_decreasing(p0) &&
           detail::weakly_decreasing(p1);

  if (!Weight::all_even(p0) || !detail::weakly_decreasing(p0)) return false;
  if (!p0.empty() && p0.back() < 0) return false;
  if (!(Weight::all_even(p1) || Weight::all_odd(p1))) return false;
  if (spec.family == Family::SPO_ODD) {
    return detail::weakly_decreasing(p1) && (p1.empty() || p1.back() >= 0);
  }
  // so(2m): l1 >= ... >= l_{m-1} >= |l_m|; for m = 1 every value is allowed.
  if (spec.m == 1) return true;
  for (int i = 0; i + 2 < spec.m; ++i)
    if (p1[i] < p1[i + 1]) return false;
  return p1[spec.m - 2] >= std::abs(p1[spec.m - 1]);
}

inline void require_dominant(const AlgebraSpec& spec, const Weight& lambda, const char* what) {
  if (!is_dominant(spec, lambda))
    throw NotDominant(std::string(what) + " = " + lambda.to_string() + " is not dominant for " +
                      spec.name());
}

// Finite dimensionality of V(lambda): l1_j = 0 for every j > l0_{1bar}.
inline bool is_finite_dim(const AlgebraSpec& spec, const Weight& lambda) {
  lambda.check_fits(spec);
  if (spec.is_gl()) return true;
  const int last = lambda.doubled0().back() / 2;  // lambda^{(0)}_{1bar}
  for (int j = 1; j <= spec.m; ++j)
    if (j > last && lambda.doubled1()[j - 1] != 0) return false;
  return true;
}

inline bool is_typical(const AlgebraSpec& spec, const Weight& lambda) {
  lambda.check_fits(spec);
  const Weight shifted = lambda + rho(spec).rho;
  for (const auto& alpha : positive_roots(spec).odd_bar)
    if (inner_quadrupled(shifted, alpha.vec) == 0) return false;
  return true;
}

// Conjugate partition; trailing zeros of the input are ignored.
inline std::vector<int> conjugate_partition(const std::vector<int>& p) {
  std::vector<int> c;
  int len = p.empty() ? 0 : std::max(0, p.front());
  for (int j = 1; j <= len; ++j) {
    int cnt = 0;
    for (int v : p)
      if (v >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

// lambda in Y+(n,m): lambda0 a partition with n parts, lambda1 a partition
// whose conjugate mu has at most m parts, and mu_1 <= lambda0_n (the last
// part, possibly zero) so that the hook diagram is a Young diagram.
inline bool is_covariant(const AlgebraSpec& spec, const Weight& lambda) {
  if (!spec.is_gl()) throw NotApplicable("covariant modules are defined for gl(n,m) only");
  lambda.check_fits(spec);
  if (!lambda.is_integral()) return false;
  const auto p0 = Weight::halve(lambda.doubled0());
  const auto p1 = Weight::halve(lambda.doubled1());
  auto is_partition = [](const std::vector<int>& p) {
    return detail::weakly_decreasing(p) && (p.empty() || p.back() >= 0);
  };
  if (!is_partition(p0) || !is_partition(p1)) return false;
  const auto mu = conjugate_partition(p1);
  const int mu1 = mu.empty() ? 0 : mu.front();
  return mu1 <= p0.back();
}

// Row lengths of the hook Young diagram Y(lambda).
inline std::vector<int> hook_diagram(const AlgebraSpec& spec, const Weight& lambda) {
  if (!is_covariant(spec, lambda))
    throw NotCovariant(lambda.to_string() + " is not a covariant weight of " + spec.name());
  std::vector<int> rows;
  for (int v : Weight::halve(lambda.doubled0()))
    if (v > 0) rows.push_back(v);
  for (int v : conjugate_partition(Weight::halve(lambda.doubled1()))) rows.push_back(v);
  return rows;
}

}  // namespace superkostka
