#include <bit>
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superkostka/format.hpp"
#include "superkostka/qpartition.hpp"

using namespace superkostka;

namespace {

Weight w(const char* s) { return parse_weight(s); }

QPolynomial from_graded(const oracle::Graded& g) {
  std::map<int, Integer> m;
  for (auto& [e, c] : g) m[e] = c;
  return QPolynomial::from_map(m);
}

template <typename F>
void box(int rank, int lo, int hi, F f) {
  std::vector<int> v(rank, lo);
  while (true) {
    f(v);
    int i = 0;
    for (; i < rank; ++i) {
      if (++v[i] <= hi) break;
      v[i] = lo;
    }
    if (i == rank) return;
  }
}

std::vector<Weight> odd_vecs(const AlgebraSpec& spec) {
  std::vector<Weight> out;
  for (const auto& r : positive_roots(spec).odd) out.push_back(r.vec);
  return out;
}

}  // namespace

TEST(LusztigPartition, Examples) {
  const ClassicalBlock a1{BlockKind::A, 2}, c1{BlockKind::C, 1};
  EXPECT_EQ(lusztig_partition(a1, std::vector<int>{0, 0}), QPolynomial(1));
  for (int k = 0; k <= 5; ++k)
    EXPECT_EQ(lusztig_partition(a1, std::vector<int>{k, -k}), QPolynomial::monomial(k));
  EXPECT_EQ(lusztig_partition(c1, std::vector<int>{4}), QPolynomial::monomial(2));
  EXPECT_TRUE(lusztig_partition(c1, std::vector<int>{3}).is_zero());
  EXPECT_TRUE(lusztig_partition(a1, std::vector<int>{1, 0}).is_zero());
}

TEST(LusztigPartition, MatchesBruteForceGraded) {
  const std::vector<std::pair<std::string, ClassicalBlock>> blocks = {
      {"A1", {BlockKind::A, 2}}, {"A2", {BlockKind::A, 3}}, {"C1", {BlockKind::C, 1}},
      {"C2", {BlockKind::C, 2}}, {"B2", {BlockKind::B, 2}}, {"D2", {BlockKind::D, 2}}};
  for (const auto& [name, block] : blocks) {
    BlockPartition memo(block), plain(block, false);
    const auto roots = oracle::textbook_roots(name);
    box(block.rank, -4, 4, [&](const std::vector<int>& beta) {
      const auto expected = from_graded(oracle::kostant_partitions(roots, beta));
      EXPECT_EQ(memo(beta), expected) << name;
      EXPECT_EQ(plain(beta), expected) << name;
    });
  }
}

TEST(LusztigPartition, RootOrderIsAPermutationOfTheTable) {
  for (auto block : {ClassicalBlock{BlockKind::A, 4}, ClassicalBlock{BlockKind::B, 3}, ClassicalBlock{BlockKind::C, 3},
                     ClassicalBlock{BlockKind::D, 3}}) {
    BlockPartition p(block);
    auto a = p.ordered_roots(), b = block.positive_roots();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(LusztigPartition, SharedCacheAcrossThreads) {
  const ClassicalBlock c3{BlockKind::C, 3};
  auto cache = std::make_shared<SharedCache>();
  std::vector<std::vector<int>> betas;
  box(3, -2, 6, [&](const std::vector<int>& b) { betas.push_back(b); });
  std::vector<QPolynomial> a(betas.size()), b(betas.size());
  BlockPartition reference(c3, false);
  std::vector<std::thread> pool;
  for (int t = 0; t < 3; ++t)
    pool.emplace_back([&, t] {
      BlockPartition p(c3, true, cache);
      for (std::size_t i = t; i < betas.size(); i += 3) a[i] = p(betas[i]);
    });
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < betas.size(); ++i) EXPECT_EQ(a[i], reference(betas[i]));
  EXPECT_GT(cache->size(), 0u);
}

TEST(Fq, Examples) {
  Engine e(AlgebraSpec::spo_odd(2, 2));
  EXPECT_EQ(e.f_q(Weight::zero(2, 2)), QPolynomial(1));
  // |eta0| < 0 is outside the cone of type C.
  EXPECT_TRUE(e.f_q(w("1,-2;0,0")).is_zero());
  EXPECT_TRUE(e.f_q(w("1/2,1/2;0,0")).is_zero());
  EXPECT_EQ(e.f_q(w("2,0;1,0")), lusztig_partition({BlockKind::C, 2}, std::vector<int>{2, 0}) *
                                       lusztig_partition({BlockKind::B, 2}, std::vector<int>{1, 0}));
}

TEST(Cq, Examples) {
  EXPECT_EQ(c_q(AlgebraSpec::gl(1, 1), Weight::zero(1, 1)), QPolynomial(1));
  EXPECT_EQ(c_q(AlgebraSpec::gl(1, 1), w("1;-1")), QPolynomial::monomial(1));
  EXPECT_EQ(c_q(AlgebraSpec::spo_odd(1, 2), w("2;-1,-1")), QPolynomial::monomial(2));
  EXPECT_EQ(c(AlgebraSpec::spo_odd(2, 1), Weight::zero(2, 1)), 1);
}

TEST(Cq, MatchesSubsetEnumeration) {
  for (auto spec : {AlgebraSpec::gl(2, 2), AlgebraSpec::spo_odd(2, 1), AlgebraSpec::spo_odd(1, 3),
                    AlgebraSpec::spo_even(2, 2), AlgebraSpec::spo_even(3, 1)}) {
    Engine e(spec);
    const auto odd = odd_vecs(spec);
    std::map<Weight, std::map<int, Integer>> graded;
    for (unsigned long long mask = 0; mask < (1ULL << odd.size()); ++mask) {
      Weight s = Weight::zero(spec.n, spec.m);
      for (std::size_t i = 0; i < odd.size(); ++i)
        if (mask >> i & 1) s = s + odd[i];
      graded[s][std::popcount(mask)] += 1;
    }
    long long total = 0;
    EXPECT_EQ(e.c_q_table().size(), graded.size()) << spec.name();
    for (const auto& [kappa, p] : e.c_q_table()) {
      EXPECT_EQ(p.eval_at_one(), oracle::subset_count(odd, kappa)) << spec.name();
      EXPECT_EQ(p, QPolynomial::from_map(graded[kappa])) << spec.name();
      total += static_cast<long long>(p.eval_at_one());
    }
    EXPECT_EQ(total, 1LL << odd.size()) << spec.name();
  }
}

TEST(Pq, MatchesGeneralizedPartitions) {
  for (auto spec : {AlgebraSpec::gl(2, 1), AlgebraSpec::gl(1, 2), AlgebraSpec::spo_odd(1, 1), AlgebraSpec::spo_odd(2, 1),
                    AlgebraSpec::spo_even(1, 2), AlgebraSpec::spo_even(2, 1)}) {
    Engine e(spec);
    const auto odd = odd_vecs(spec);
    const auto even0 = spec.block0().positive_roots(), even1 = spec.block1().positive_roots();
    box(spec.n + spec.m, -3, 3, [&](const std::vector<int>& v) {
      const Weight beta = Weight::from_integers(std::span<const int>(v.data(), spec.n),
                                                std::span<const int>(v.data() + spec.n, spec.m));
      EXPECT_EQ(e.p_q(beta), from_graded(oracle::generalized_partitions(odd, even0, even1, beta)))
          << spec.name() << " " << beta.to_string();
    });
    EXPECT_EQ(e.p_q(Weight::zero(spec.n, spec.m)), QPolynomial(1));
  }
}

TEST(Pq, HalfIntegralPart1) {
  // spo(2n,2m+1) has the short odd roots delta_ibar, so only integral (or
  // uniformly half-integral) part1 entries can be reached.
  Engine e(AlgebraSpec::spo_odd(1, 1));
  const auto odd = odd_vecs(AlgebraSpec::spo_odd(1, 1));
  const auto spec = AlgebraSpec::spo_odd(1, 1);
  for (const char* s : {"1/2;1/2", "3/2;1/2", "1;1/2", "2;0"}) {
    const Weight beta = w(s);
    EXPECT_EQ(e.p_q(beta), from_graded(oracle::generalized_partitions(odd, spec.block0().positive_roots(), spec.block1().positive_roots(), beta))) << s;
  }
}

TEST(CLambda, Examples) {
  const auto spec = AlgebraSpec::gl(2, 2);
  EXPECT_EQ(c_lambda(spec, w("1,0;0,0"), Weight::zero(2, 2)), 1);
  EXPECT_EQ(c_lambda(spec, w("1,0;0,0"), w("1,0;-1,0")), 1);
  EXPECT_EQ(c_lambda(spec, w("1,0;0,0"), w("0,1;-1,0")), 0);
  EXPECT_THROW(c_lambda(spec, w("0,0;1,0"), Weight::zero(2, 2)), NotCovariant);
}

TEST(CLambda, MatchesSubsetEnumeration) {
  const auto spec = AlgebraSpec::gl(3, 2);
  for (const char* s : {"2,2,1;1,0", "3,2,2;2,1", "1,1,1;3,0"}) {
    const Weight lambda = w(s);
    std::vector<Weight> roots;
    for (const auto& r : odd_roots_of_diagram(spec, lambda)) roots.push_back(r.vec);
    for (const auto& [kappa, c] : c_lambda_table(spec, lambda)) EXPECT_EQ(c, oracle::subset_count(roots, kappa)) << s;
  }
}
