#include <set>

#include <gtest/gtest.h>

#include "superkostka/algebra.hpp"
#include "superkostka/format.hpp"

using namespace superkostka;

namespace {

Weight w(const char* s) { return parse_weight(s); }

std::set<Weight> vecs(const std::vector<Root>& rs) {
  std::set<Weight> out;
  for (const auto& r : rs) out.insert(r.vec);
  return out;
}

}  // namespace

TEST(Roots, Spo21HasOnlyShortOddRoot) {
  const auto r = positive_roots(AlgebraSpec::spo_odd(1, 0));
  EXPECT_EQ(vecs(r.even), (std::set<Weight>{w("2;")}));
  EXPECT_EQ(vecs(r.odd), (std::set<Weight>{w("1;")}));
  EXPECT_TRUE(r.odd_bar.empty());
}

TEST(Roots, Gl11SingleOddRoot) {
  const auto r = positive_roots(AlgebraSpec::gl(1, 1));
  EXPECT_TRUE(r.even.empty());
  EXPECT_EQ(vecs(r.odd), (std::set<Weight>{w("1;-1")}));
  EXPECT_EQ(vecs(r.odd_bar), vecs(r.odd));
}

TEST(Roots, Spo22OddRootsAreDelta1PlusMinusDeltaBar) {
  const auto r = positive_roots(AlgebraSpec::spo_even(1, 1));
  EXPECT_EQ(vecs(r.even), (std::set<Weight>{w("2;0")}));
  EXPECT_EQ(vecs(r.odd), (std::set<Weight>{w("1;1"), w("-1;1")}));
}

TEST(Roots, CountsMatchTable) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(positive_roots(AlgebraSpec::gl(n, m)).odd.size(), static_cast<std::size_t>(n * m));
      EXPECT_EQ(positive_roots(AlgebraSpec::spo_odd(n, m)).odd.size(), static_cast<std::size_t>(2 * n * m + n));
      const std::size_t even = m == 1 ? 2 * n : 2 * n * m;
      EXPECT_EQ(positive_roots(AlgebraSpec::spo_even(n, m)).odd.size(), even);
    }
}

TEST(Roots, EvenSplitsIntoBlocks) {
  for (auto spec : {AlgebraSpec::gl(3, 2), AlgebraSpec::spo_odd(2, 3), AlgebraSpec::spo_even(3, 2)}) {
    const auto r = positive_roots(spec);
    EXPECT_EQ(r.even.size(), r.even_n.size() + r.even_m.size());
    for (const auto& a : r.even_n)
      for (int x : a.vec.doubled1()) EXPECT_EQ(x, 0);
    for (const auto& a : r.even_m)
      for (int x : a.vec.doubled0()) EXPECT_EQ(x, 0);
  }
}

TEST(Roots, OddRootSetOfSpo2n2IsWeylStable) {
  // Sign changes and permutations of part0 map the set to itself.
  const auto spec = AlgebraSpec::spo_even(3, 1);
  const auto odd = vecs(positive_roots(spec).odd);
  for (const auto& a : odd) {
    Weight b = a;
    b.doubled0()[0] = -b.doubled0()[0];
    EXPECT_TRUE(odd.count(b));
    std::swap(b.doubled0()[0], b.doubled0()[2]);
    EXPECT_TRUE(odd.count(b));
  }
}

TEST(Inner, Signature) {
  EXPECT_EQ(inner(w("1;0"), w("1;0")), Rational(1));
  EXPECT_EQ(inner(w("0;1"), w("0;1")), Rational(-1));
  EXPECT_EQ(inner(w("1;0"), w("0;1")), Rational(0));
  EXPECT_THROW(inner(w("1;0"), w("1,0;0")), DimensionMismatch);
}

TEST(Inner, RootLengths) {
  for (auto spec : {AlgebraSpec::gl(2, 3), AlgebraSpec::spo_odd(3, 2), AlgebraSpec::spo_even(2, 3),
                    AlgebraSpec::spo_even(3, 1)}) {
    const auto r = positive_roots(spec);
    for (const auto* list : {&r.even, &r.odd})
      for (const auto& a : *list) {
        const Rational v = inner(a.vec, a.vec);
        const std::set<Rational> lengths = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                            Rational(-2), Rational(4), Rational(-4)};
        EXPECT_TRUE(lengths.count(v)) << a.vec.to_string();
        for (const auto& b : *list) EXPECT_EQ(inner(a.vec, b.vec), inner(b.vec, a.vec));
      }
  }
}

TEST(Rho, Spo25) {
  EXPECT_EQ(rho(AlgebraSpec::spo_odd(1, 2)).rho, w("-3/2;3/2,1/2"));
}

TEST(Rho, Gl11) {
  const auto r = rho(AlgebraSpec::gl(1, 1));
  EXPECT_EQ(r.rho_plus, w("0;0"));
  EXPECT_EQ(r.rho, w("-1/2;1/2"));
}

TEST(Rho, ClosedFormForOddSpo) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::vector<int> a, b;
      // (n-m-1/2, ..., 1/2-m; m-1/2, ..., 1/2), doubled.
      for (int i = 0; i < n; ++i) a.push_back(2 * (n - m - i) - 1);
      for (int r = 0; r < m; ++r) b.push_back(2 * (m - r) - 1);
      EXPECT_EQ(rho(AlgebraSpec::spo_odd(n, m)).rho, Weight(a, b)) << n << "," << m;
    }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(is_dominant(AlgebraSpec::spo_odd(1, 2), w("2;1,1")));
  EXPECT_TRUE(is_dominant(AlgebraSpec::gl(3, 3), w("3,1,-2;4,2,-8")));
  EXPECT_FALSE(is_dominant(AlgebraSpec::spo_odd(1, 2), w("1;2,1/2")));
  EXPECT_FALSE(is_dominant(AlgebraSpec::gl(2, 1), w("0,1;0")));
  EXPECT_THROW(require_dominant(AlgebraSpec::gl(2, 1), w("0,1;0"), "lambda"), NotDominant);
}

TEST(FiniteDim, Examples) {
  const auto spec = AlgebraSpec::spo_odd(1, 2);
  EXPECT_TRUE(is_finite_dim(spec, w("2;1,1")));
  EXPECT_FALSE(is_finite_dim(spec, w("1;1,1")));
  for (int m = 1; m <= 3; ++m) {
    const auto s = AlgebraSpec::spo_odd(1, m);
    std::vector<int> p1(m, 2);
    EXPECT_TRUE(is_finite_dim(s, Weight({2 * m}, p1)));
  }
}

TEST(Typical, Examples) {
  EXPECT_TRUE(is_typical(AlgebraSpec::gl(3, 3), w("3,1,-2;4,2,-8")));
  EXPECT_TRUE(is_typical(AlgebraSpec::spo_odd(1, 2), w("5;1,1")));
}

TEST(Typical, Spo25PairingsAlongOmega) {
  // lambda + rho = (1/2; 5/2, 3/2). Along lambda + k omega the isotropic
  // pairings are k - 2, k + 3, k - 1, k + 2: atypical at k = 1 and k = 2 only.
  const auto spec = AlgebraSpec::spo_odd(1, 2);
  EXPECT_EQ(w("2;1,1") + rho(spec).rho, w("1/2;5/2,3/2"));
  for (int k = 0; k <= 6; ++k)
    EXPECT_EQ(is_typical(spec, w("2;1,1") + k * Weight::omega(1, 2)), k != 1 && k != 2) << k;
}

TEST(Covariant, Examples) {
  const auto g34 = AlgebraSpec::gl(3, 4);
  EXPECT_TRUE(is_covariant(g34, w("9,7,5;4,3,3,2")));
  EXPECT_TRUE(is_covariant(g34, w("1,0,0;0,0,0,0")));
  EXPECT_TRUE(is_covariant(g34, w("2,1,1;3,0,0,0")));
  // Row 3 would be empty above the nonempty row 4.
  EXPECT_FALSE(is_covariant(g34, w("2,2,0;3,0,0,0")));
  EXPECT_FALSE(is_covariant(g34, w("0,0,0;1,0,0,0")));
  EXPECT_THROW(is_covariant(AlgebraSpec::spo_odd(1, 1), w("1;0")), NotApplicable);
}

TEST(HookDiagram, Examples) {
  EXPECT_EQ(hook_diagram(AlgebraSpec::gl(3, 4), w("9,7,5;4,3,3,2")), (std::vector<int>{9, 7, 5, 4, 4, 3, 1}));
  EXPECT_EQ(hook_diagram(AlgebraSpec::gl(3, 4), w("1,0,0;0,0,0,0")), (std::vector<int>{1}));
  EXPECT_EQ(hook_diagram(AlgebraSpec::gl(2, 1), w("2,2;2")), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_THROW(hook_diagram(AlgebraSpec::gl(2, 1), w("0,0;1")), NotCovariant);
}

TEST(Spec, InvalidAlgebra) {
  EXPECT_THROW(AlgebraSpec::gl(0, 1), InvalidAlgebra);
  EXPECT_THROW(AlgebraSpec::spo_even(1, 0), InvalidAlgebra);
}
