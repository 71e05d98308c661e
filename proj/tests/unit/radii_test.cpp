#include <gtest/gtest.h>

#include <set>

#include "dormant/error.hpp"
#include "dormant/hyperg.hpp"
#include "dormant/radii.hpp"
#include "support/oracles.hpp"

namespace {

using namespace dormant;

RadiusClass rc(int p, std::initializer_list<int> e) { return RadiusClass::of(Prime(p), e); }

std::vector<FpElem> fp(int p, std::initializer_list<int> xs) {
  std::vector<FpElem> out;
  for (int x : xs) out.emplace_back(Prime(p), x);
  return out;
}

TEST(Canonical, Examples) {
  const std::vector<int> a{2, 4, 6};
  EXPECT_EQ(canonical(Prime(7), a).elems(), (std::vector<int>{0, 2, 4}));
  const std::vector<int> b{1, 3};
  EXPECT_EQ(canonical(Prime(7), b).elems(), (std::vector<int>{0, 2}));
  const std::vector<int> c{0, 1};
  EXPECT_EQ(canonical(Prime(5), c).elems(), (std::vector<int>{0, 1}));
}

TEST(Canonical, RepeatsAllowedInCClassOnly) {
  const std::vector<int> rep{3, 3, 5};
  const CClass c = canonical(Prime(7), rep);
  EXPECT_FALSE(c.distinct());
  EXPECT_THROW(RadiusClass{c}, InvalidInput);
}

TEST(Canonical, RejectsTooManyEntries) {
  const std::vector<int> all{0, 1, 2, 3, 4};
  EXPECT_THROW((void)canonical(Prime(5), all), InvalidInput);
  EXPECT_THROW((void)canonical(Prime(5), std::vector<int>{}), InvalidInput);
}

TEST(Canonical, IdempotentAndTranslationInvariant) {
  const Prime p(11);
  for (int a = 0; a < 11; ++a) {
    for (int b = 0; b < 11; ++b) {
      for (int c = 0; c < 11; ++c) {
        const std::vector<int> s{a, b, c};
        const CClass k = canonical(p, s);
        EXPECT_EQ(canonical(p, k.elems()), k);
        EXPECT_EQ(k.elems().front(), 0);
        const std::vector<int> shifted{(a + 4) % 11, (b + 4) % 11, (c + 4) % 11};
        EXPECT_EQ(canonical(p, shifted), k);
      }
    }
  }
}

TEST(Xi, Examples) {
  const auto x73 = xi(Prime(7), 3);
  ASSERT_EQ(x73.size(), 5U);
  EXPECT_EQ(x73[0], rc(7, {0, 1, 2}));
  EXPECT_EQ(x73[1], rc(7, {0, 1, 3}));
  EXPECT_EQ(x73[2], rc(7, {0, 1, 4}));
  EXPECT_EQ(x73[3], rc(7, {0, 1, 5}));
  EXPECT_EQ(x73[4], rc(7, {0, 2, 4}));
  EXPECT_EQ(xi(Prime(5), 2), (std::vector<RadiusClass>{rc(5, {0, 1}), rc(5, {0, 2})}));
  EXPECT_EQ(xi(Prime(7), 6), (std::vector<RadiusClass>{rc(7, {0, 1, 2, 3, 4, 5})}));
}

TEST(Xi, CountMatchesOrbitOracle) {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int n = 1; n < p; ++n) {
      const auto classes = xi(Prime(p), n);
      EXPECT_EQ(classes.size(), oracle::translation_orbits(p, n)) << p << "," << n;
      EXPECT_EQ(classes.size(), binomial(static_cast<unsigned>(p), static_cast<unsigned>(n)) / p);
      EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end()));
    }
  }
}

TEST(Duals, Examples) {
  EXPECT_EQ(neg_dual(rc(7, {0, 1, 3})), rc(7, {0, 1, 5}));
  EXPECT_EQ(neg_dual(rc(7, {0, 1, 4})), rc(7, {0, 1, 4}));
  EXPECT_EQ(neg_dual(rc(5, {0, 2})), rc(5, {0, 2}));
  EXPECT_EQ(comp_dual(rc(7, {0, 1, 2, 3, 4})), rc(7, {0, 1}));
  EXPECT_EQ(comp_dual(rc(7, {0, 1, 2})), rc(7, {0, 1, 2, 3}));
  EXPECT_EQ(comp_dual(rc(5, {0, 1})), rc(5, {0, 1, 2}));
}

TEST(Duals, Involutions) {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int n = 1; n < p; ++n) {
      for (const RadiusClass& c : xi(Prime(p), n)) {
        EXPECT_EQ(neg_dual(neg_dual(c)), c);
        const RadiusClass d = comp_dual(c);
        EXPECT_EQ(static_cast<int>(d.n()), p - n);
        EXPECT_EQ(comp_dual(d), c);
      }
    }
  }
}

TEST(Exponents, Example) {
  const auto e = exponents(Prime(7), fp(7, {6, 4, 2}), fp(7, {5, 3}));
  EXPECT_EQ(e[0], (std::vector<int>{0, 3, 5}));
  EXPECT_EQ(e[1], (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(e[2], (std::vector<int>{6, 4, 2}));
  EXPECT_THROW((void)exponents(Prime(7), fp(7, {1, 2}), fp(7, {1, 2})), InvalidInput);
}

TEST(Exponents, Structure) {
  const Prime p(7);
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      for (int c = 0; c < 7; ++c) {
        for (int d = 0; d < 7; ++d) {
          const auto e = exponents(p, fp(7, {a, b, c}), fp(7, {d, (d + a) % 7}));
          EXPECT_EQ(e[1][0], 0);
          EXPECT_EQ(e[1][1], 1);
          EXPECT_EQ((e[2][0] + e[2][1] + e[2][2]) % 7, (a + b + c) % 7);
        }
      }
    }
  }
}

TEST(RadiiTriple, Examples) {
  const auto r = radii_triple(Prime(7), fp(7, {6, 4, 2}), fp(7, {5, 3}));
  ASSERT_TRUE(r.in_xi);
  const RadiiTriple t = *r.triple();
  EXPECT_EQ(t[0], rc(7, {0, 2, 4}));
  EXPECT_EQ(t[1], rc(7, {0, 1, 3}));
  EXPECT_EQ(t[2], rc(7, {0, 2, 4}));

  const auto s = radii_triple(Prime(5), fp(5, {3, 1}), fp(5, {2}));
  ASSERT_TRUE(s.in_xi);
  EXPECT_TRUE(hyp_set(Prime(5), 2).contains(*s.triple()));

  const auto rep = radii_triple(Prime(7), fp(7, {1, 1, 2}), fp(7, {3, 3}));
  EXPECT_FALSE(rep.in_xi);
  EXPECT_FALSE(rep.triple().has_value());
}

TEST(HypType, Examples) {
  for (const RadiusClass& c : xi(Prime(11), 2)) EXPECT_TRUE(is_hyp_type(c));
  EXPECT_FALSE(is_hyp_type(rc(7, {0, 2, 4})));
  EXPECT_TRUE(is_hyp_type(rc(7, {0, 1, 5})));
  EXPECT_TRUE(is_hyp_type(rc(7, {2, 4, 5})));  // contains the run 4, 5
}

TEST(Interleavings, Examples) {
  const auto chains = interleavings(Prime(7), 3);
  EXPECT_NE(std::find(chains.begin(), chains.end(), Interleaving{{6, 4, 2}, {5, 3}}), chains.end());
  for (int p : {3, 5, 7, 11, 13}) EXPECT_EQ(interleavings(Prime(p), 2).size(), oracle::chains_n2(p));
}

TEST(Interleavings, SatisfyChainAndAreUnique) {
  for (int p : {5, 7, 11}) {
    for (int n = 2; n < p; ++n) {
      const auto chains = interleavings(Prime(p), n);
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (const Interleaving& c : chains) {
        ASSERT_EQ(c.alpha_lifts.size(), static_cast<std::size_t>(n));
        ASSERT_EQ(c.beta_lifts.size(), static_cast<std::size_t>(n - 1));
        EXPECT_LE(c.alpha_lifts.front(), p);
        EXPECT_GE(c.alpha_lifts.back(), 1);
        for (int j = 0; j + 1 < n; ++j) {
          EXPECT_GE(c.alpha_lifts[j], c.beta_lifts[j]);
          EXPECT_GT(c.beta_lifts[j], c.alpha_lifts[j + 1]);
        }
        EXPECT_TRUE(seen.emplace(c.alpha_lifts, c.beta_lifts).second);
      }
    }
  }
}

// Every chain gives a triple in Xi^3, and the operator has full solutions.
TEST(Interleavings, ChainsGiveDistinctExponentsUpToThirteen) {
  for (int p : {3, 5, 7, 11, 13}) {
    const Prime q(p);
    for (int n = 2; n < p; ++n) {
      for_each_interleaving(q, n, [&](const Interleaving& c) {
        std::vector<FpElem> a;
        std::vector<FpElem> b;
        for (int x : c.alpha_lifts) a.emplace_back(q, x);
        for (int x : c.beta_lifts) b.emplace_back(q, x);
        ASSERT_TRUE(radii_triple(q, a, b).in_xi) << p << "," << n;
      });
    }
  }
}

TEST(HypSet, Sizes) {
  EXPECT_EQ(hyp_set(Prime(3), 2).size(), 1U);
  EXPECT_EQ(hyp_set(Prime(5), 2).size(), 5U);
  EXPECT_EQ(hyp_set(Prime(5), 3).size(), 5U);
  EXPECT_EQ(hyp_set(Prime(7), 2).size(), 14U);
  EXPECT_EQ(hyp_set(Prime(7), 3).size(), 52U);
  EXPECT_EQ(hyp_generators(Prime(7), 3).size(), 37U);
}

TEST(HypSet, ClosedUnderS3) {
  for (int n = 2; n < 7; ++n) {
    const auto h = hyp_set(Prime(7), n);
    for (const RadiiTriple& t : h) {
      for (const RadiiTriple& s : permutations(t)) EXPECT_TRUE(h.contains(s));
    }
  }
}

// For n = 2 the set is the radii of all Gauss operators with full solutions.
TEST(HypSet, RankTwoMatchesGaussTable) {
  for (int p : {3, 5, 7, 11}) {
    const Prime q(p);
    std::set<RadiiTriple> from_gauss;
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        for (int c = 0; c < p; ++c) {
          if (!oracle::gauss_criterion(a, b, c, p)) continue;
          const auto r = radii_triple(q, fp(p, {a, b}), fp(p, {c}));
          ASSERT_TRUE(r.in_xi);
          for (const RadiiTriple& s : permutations(*r.triple())) from_gauss.insert(s);
        }
      }
    }
    EXPECT_EQ(from_gauss, hyp_set(q, 2)) << p;
  }
}

TEST(HypSet, NormalizedRangeOnly) {
  EXPECT_THROW((void)hyp_set(Prime(7), 1), InvalidInput);
  EXPECT_THROW((void)hyp_set(Prime(7), 7), InvalidInput);
}

}  // namespace
