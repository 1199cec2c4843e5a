#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "superkostka/algebra.hpp"
#include "superkostka/error.hpp"

namespace superkostka {

inline constexpr unsigned long long kDefaultWeylCap = 10'000'000ULL;

// Signed permutation of one block: (w x)_i = signs[i] * x[perm[i]].
struct BlockElement {
  std::vector<int> perm;
  std::vector<int> signs;

  friend bool operator==(const BlockElement&, const BlockElement&) = default;
  friend auto operator<=>(const BlockElement&, const BlockElement&) = default;

  static BlockElement identity(int rank) {
    BlockElement e;
    e.perm.resize(rank);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.signs.assign(rank, 1);
    return e;
  }

  bool is_identity() const { return *this == identity(static_cast<int>(perm.size())); }

  int negations() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
  }

  // Determinant of the signed permutation matrix.
  int determinant() const {
    std::vector<char> seen(perm.size(), 0);
    int det = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = 1;
        ++len;
      }
      if (len % 2 == 0) det = -det;
    }
    return (negations() % 2 == 0) ? det : -det;
  }

  template <typename T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = signs[i] * x[perm[i]];
    return out;
  }

  // (this o other)
  BlockElement compose(const BlockElement& other) const {
    BlockElement c;
    c.perm.resize(perm.size());
    c.signs.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      c.perm[i] = other.perm[perm[i]];
      c.signs[i] = signs[i] * other.signs[perm[i]];
    }
    return c;
  }
};

// Enumerate the Weyl group of a block in lexicographic order (perm, then
// sign vectors by increasing bitmask of negated positions). With
// signed = false only the symmetric group is produced.
inline std::vector<BlockElement> enumerate_block(const ClassicalBlock& block, bool allow_signs,
                                                 unsigned long long cap = kDefaultWeylCap) {
  std::vector<BlockElement> out;
  const int r = block.rank;
  if (block.kind == BlockKind::Trivial) {
    out.push_back(BlockElement::identity(r));
    return out;
  }
  const bool signed_group = allow_signs && block.has_sign_changes();
  unsigned long long order = 1;
  for (int i = 2; i <= r; ++i) order *= static_cast<unsigned long long>(i);
  if (signed_group) order <<= (block.kind == BlockKind::D ? r - 1 : r);
  if (order > cap) throw GroupTooLarge("Weyl group of order " + std::to_string(order));

  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const unsigned masks = signed_group ? (1u << r) : 1u;
    for (unsigned mask = 0; mask < masks; ++mask) {
      if (block.kind == BlockKind::D && signed_group && (std::popcount(mask) % 2 != 0)) continue;
      BlockElement e{perm, std::vector<int>(r, 1)};
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) e.signs[i] = -1;
      out.push_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

class WeylElement {
 public:
  WeylElement() = default;

  // Validating constructor.
  static WeylElement make(const AlgebraSpec& spec, BlockElement part0, BlockElement part1) {
    check_block(spec.block0(), part0, "part0");
    check_block(spec.block1(), part1, "part1");
    return WeylElement(std::move(part0), std::move(part1));
  }

  static WeylElement identity(const AlgebraSpec& spec) {
    return WeylElement(BlockElement::identity(spec.n), BlockElement::identity(spec.m));
  }

  const BlockElement& part0() const { return part0_; }
  const BlockElement& part1() const { return part1_; }

  int sign() const { return part0_.determinant() * part1_.determinant(); }

  Weight act(const Weight& beta) const {
    if (beta.rank0() != static_cast<int>(part0_.perm.size()) ||
        beta.rank1() != static_cast<int>(part1_.perm.size()))
      throw DimensionMismatch("Weyl element and weight have different ranks");
    return {part0_.apply(beta.doubled0()), part1_.apply(beta.doubled1())};
  }

  // w(beta + shift) - shift; shift is rho or rho_plus, chosen by the caller.
  Weight dot(const Weight& beta, const Weight& shift) const {
    return act(beta + shift) - shift;
  }

  WeylElement compose(const WeylElement& other) const {
    return WeylElement(part0_.compose(other.part0_), part1_.compose(other.part1_));
  }

  bool in_stab(const AlgebraSpec& spec) const {
    return spec.weyl_stabilizes_odd_roots() || part0_.negations() == 0;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  WeylElement(BlockElement a, BlockElement b) : part0_(std::move(a)), part1_(std::move(b)) {}

  static void check_block(const ClassicalBlock& block, const BlockElement& e, const char* what) {
    const auto r = static_cast<std::size_t>(block.rank);
    if (e.perm.size() != r || e.signs.size() != r)
      throw InvalidWeylElement(std::string(what) + ": wrong length");
    std::vector<int> sorted = e.perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < r; ++i)
      if (sorted[i] != static_cast<int>(i))
        throw InvalidWeylElement(std::string(what) + ": not a permutation");
    for (int s : e.signs)
      if (s != 1 && s != -1) throw InvalidWeylElement(std::string(what) + ": signs must be +-1");
    switch (block.kind) {
      case BlockKind::A:
        if (e.negations() != 0)
          throw InvalidWeylElement(std::string(what) + ": type A admits no sign changes");
        break;
      case BlockKind::D:
        if (e.negations() % 2 != 0)
          throw InvalidWeylElement(std::string(what) +
                                   ": type D requires an even number of sign changes");
        break;
      case BlockKind::Trivial:
        if (!e.is_identity())
          throw InvalidWeylElement(std::string(what) + ": block has trivial Weyl group");
        break;
      case BlockKind::B:
      case BlockKind::C:
        break;
    }
  }

  BlockElement part0_;
  BlockElement part1_;
};

inline unsigned long long weyl_order(const AlgebraSpec& spec) {
  return spec.block0().weyl_order() * spec.block1().weyl_order();
}

inline unsigned long long weyl_stab_order(const AlgebraSpec& spec) {
  if (spec.weyl_stabilizes_odd_roots()) return weyl_order(spec);
  return ClassicalBlock{BlockKind::A, spec.n}.weyl_order() * spec.block1().weyl_order();
}

namespace detail {

inline std::vector<WeylElement> product(const AlgebraSpec& spec,
                                        const std::vector<BlockElement>& first,
                                        const std::vector<BlockElement>& second,
                                        unsigned long long cap) {
  const unsigned long long total =
      static_cast<unsigned long long>(first.size()) * second.size();
  if (total > cap) throw GroupTooLarge("Weyl group of order " + std::to_string(total));
  std::vector<WeylElement> out;
  out.reserve(total);
  for (const auto& a : first)
    for (const auto& b : second) out.push_back(WeylElement::make(spec, a, b));
  return out;
}

}  // namespace detail

inline std::vector<WeylElement> enumerate_w(const AlgebraSpec& spec,
                                            unsigned long long cap = kDefaultWeylCap) {
  spec.validate();
  if (weyl_order(spec) > cap)
    throw GroupTooLarge("W of " + spec.name() + " has order " + std::to_string(weyl_order(spec)));
  return detail::product(spec, enumerate_block(spec.block0(), true, cap),
                         enumerate_block(spec.block1(), true, cap), cap);
}

// W_stab: W itself for gl(n,m) and spo(2n,2), S_n x W_m otherwise.
inline std::vector<WeylElement> enumerate_w_stab(const AlgebraSpec& spec,
                                                 unsigned long long cap = kDefaultWeylCap) {
  spec.validate();
  if (spec.weyl_stabilizes_odd_roots()) return enumerate_w(spec, cap);
  if (weyl_stab_order(spec) > cap)
    throw GroupTooLarge("W_stab of " + spec.name() + " has order " +
                        std::to_string(weyl_stab_order(spec)));
  return detail::product(spec, enumerate_block(spec.block0(), false, cap),
                         enumerate_block(spec.block1(), true, cap), cap);
}

inline int sign(const WeylElement& w) { return w.sign(); }
inline Weight act(const WeylElement& w, const Weight& beta) { return w.act(beta); }
inline Weight dot(const WeylElement& w, const Weight& beta, const Weight& shift) {
  return w.dot(beta, shift);
}

}  // namespace superkostka
