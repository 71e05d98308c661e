#include <gtest/gtest.h>

#include "dormant/error.hpp"
#include "dormant/fusion.hpp"
#include "dormant/json.hpp"

namespace {

using namespace dormant;

RadiusClass rc(int p, std::initializer_list<int> e) { return RadiusClass::of(Prime(p), e); }

const RadiusClass w1 = rc(7, {0, 1, 2});
const RadiusClass w2 = rc(7, {0, 1, 3});
const RadiusClass w3 = rc(7, {0, 1, 4});
const RadiusClass w4 = rc(7, {0, 1, 5});
const RadiusClass w5 = rc(7, {0, 2, 4});

std::shared_ptr<const BaseTable> table(int p, int n) {
  return std::make_shared<const BaseTable>(BaseTable::build(Prime(p), n));
}

TEST(BaseN, Examples) {
  const BaseValue a = base_n(Prime(7), 3, {w5, w5, w5});
  EXPECT_EQ(*a.value, 2);
  const BaseValue b = base_n(Prime(7), 3, {w1, w2, w4});
  EXPECT_EQ(*b.value, 1);
  EXPECT_EQ(b.rule, BaseRule::Hypergeometric);
  const RadiusClass eps = rc(5, {0, 1, 2, 3});
  const BaseValue c = base_n(Prime(5), 4, {eps, eps, eps});
  EXPECT_EQ(*c.value, 1);
  EXPECT_EQ(c.rule, BaseRule::TopRank);
}

TEST(BaseN, WithoutOverridesTheExceptionalTripleIsUnknown) {
  const BaseValue v = base_n(Prime(7), 3, {w5, w5, w5}, OverrideTable{});
  EXPECT_FALSE(v.value.has_value());
  EXPECT_EQ(v.rule, BaseRule::Unknown);
}

TEST(BaseN, RejectsClassesOutsideXi) {
  const RadiusClass two = rc(7, {0, 1});
  EXPECT_THROW((void)base_n(Prime(7), 3, {two, w1, w1}), InvalidInput);
}

TEST(BaseTable, SymmetricAndPositiveOnHyp) {
  for (int p : {3, 5, 7}) {
    for (int n = 2; n < p; ++n) {
      const auto t = table(p, n);
      const std::size_t d = t->dim();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            const auto& v = t->at(i, j, k);
            ASSERT_TRUE(v.value.has_value());
            EXPECT_EQ(v.value, t->at(j, i, k).value);
            EXPECT_EQ(v.value, t->at(i, k, j).value);
          }
        }
      }
      for (const RadiiTriple& h : hyp_set(Prime(p), n)) EXPECT_GE(*t->at(h).value, 1);
    }
  }
}

TEST(BaseTable, UnresolvedBeyondSeven) {
  const BaseTable t = BaseTable::build(Prime(11), 3);
  EXPECT_FALSE(t.resolved());
  EXPECT_THROW(FusionAlgebra{t}, UnresolvedBase);
  try {
    FusionAlgebra alg(t);
  } catch (const UnresolvedBase& e) {
    EXPECT_EQ(e.p(), 11);
    EXPECT_EQ(e.triple(), t.unknown_triples().front());
  }
}

TEST(Overrides, ConflictsAndMalformedData) {
  OverrideTable o;
  o.add({w5, w5, w5}, 2, "a");
  EXPECT_NO_THROW(o.add({w5, w5, w5}, 2, "b"));
  EXPECT_THROW(o.add({w5, w5, w5}, 3, "c"), InvalidInput);
  EXPECT_THROW((void)OverrideTable::from_json("{"), InvalidInput);
  EXPECT_THROW((void)OverrideTable::from_json(R"([{"p": 7}])"), InvalidInput);
  EXPECT_EQ(OverrideTable::builtin().entries().size(), 2U);  // one self-dual triple per rank
}

TEST(Algebra, RankTwoAtFive) {
  const FusionAlgebra alg(*table(5, 2));
  const auto a = alg.basis_vector(0);  // [[0,1]], the unit
  const auto b = alg.basis_vector(1);  // [[0,2]]
  EXPECT_EQ(alg.unit_index(), 0U);
  EXPECT_EQ(alg.multiply(a, b), b);
  // [[0,2]]^2 = [[0,1]] + [[0,2]] (Fibonacci-type rule).
  EXPECT_EQ(alg.multiply(b, b), (FusionAlgebra::Vector{1, 1}));
}

TEST(Algebra, UnitAndPairingAtSeven) {
  const FusionAlgebra alg(*table(7, 3));
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    EXPECT_EQ(alg.multiply(alg.unit(), alg.basis_vector(i)), alg.basis_vector(i));
  }
  const auto& basis = alg.basis();
  const auto idx = [&](const RadiusClass& c) {
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), c) - basis.begin());
  };
  EXPECT_EQ(alg.pairing(alg.basis_vector(idx(w2)), alg.basis_vector(idx(w4))), 1);
  EXPECT_EQ(alg.pairing(alg.basis_vector(idx(w2)), alg.basis_vector(idx(w2))), 0);
  EXPECT_EQ(alg.counit(alg.unit()), 1);
}

TEST(Count, Examples) {
  EXPECT_EQ(count(Prime(7), 3, 2, {}), 56);
  const std::vector<RadiusClass> r{w1, w2, w4};
  EXPECT_EQ(count(Prime(7), 3, 0, r), 1);
  const std::vector<RadiusClass> s{w5, w5, w5};
  EXPECT_EQ(count(Prime(7), 3, 0, s), 2);
}

TEST(Count, GenusOneIsDimension) {
  for (int p : {3, 5, 7}) {
    for (int n = 2; n < p; ++n) {
      EXPECT_EQ(count(Prime(p), n, 1, {}), binomial(static_cast<unsigned>(p), static_cast<unsigned>(n)) / p);
    }
  }
}

TEST(Count, UnstableTopologiesRejected) {
  const std::vector<RadiusClass> two{w1, w1};
  EXPECT_THROW((void)count(Prime(7), 3, 0, two), InvalidInput);
  EXPECT_THROW((void)count(Prime(7), 3, 0, {}), InvalidInput);
  EXPECT_THROW((void)count(Prime(7), 3, -1, {}), InvalidInput);
}

TEST(Count, ClassesMustMatchRank) {
  const std::vector<RadiusClass> bad{rc(7, {0, 1}), w1, w1};
  EXPECT_THROW((void)count(Prime(7), 3, 0, bad), InvalidInput);
}

TEST(Count, ThetaSumIsGenusTwo) {
  for (int p : {5, 7}) {
    for (int n = 2; n < p; ++n) {
      const auto t = table(p, n);
      EXPECT_EQ(theta_sum(*t), CountEngine(t).count(2, {}));
    }
  }
  EXPECT_EQ(theta_sum(*table(7, 3)), 56);
}

// Enumerates sorted index tuples of length r over {0..d-1}.
void for_each_multiset(std::size_t d, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] + 1 == d) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[i - 1];
  }
}

TEST(Count, ReductionOrderIndependent) {
  for (auto [p, n] : {std::pair{7, 3}, std::pair{7, 2}, std::pair{5, 2}}) {
    const auto t = table(p, n);
    const CountEngine a(t, ReductionOrder::GenusFirst);
    const CountEngine b(t, ReductionOrder::SplitFirst);
    for (int g = 0; g <= 3; ++g) {
      for (std::size_t r = 0; r <= 4; ++r) {
        if (2 * g - 2 + static_cast<int>(r) <= 0) continue;
        for_each_multiset(t->dim(), r, [&](const std::vector<std::size_t>& idx) {
          ASSERT_EQ(a.amplitude(g, idx), b.amplitude(g, idx)) << p << "," << n << " g=" << g;
        });
      }
    }
  }
}

TEST(Count, DualityOnAllResolvableCases) {
  for (int p : {3, 5, 7}) {
    for (int n = 2; n < p - 1; ++n) {
      const auto t = table(p, n);
      const auto u = table(p, p - n);
      const CountEngine e(t);
      const CountEngine f(u);
      for (int g = 0; g <= 2; ++g) {
        for (std::size_t r = 0; r <= 3; ++r) {
          if (2 * g - 2 + static_cast<int>(r) <= 0) continue;
          for_each_multiset(t->dim(), r, [&](const std::vector<std::size_t>& idx) {
            std::vector<RadiusClass> rho;
            std::vector<RadiusClass> dual;
            for (std::size_t i : idx) {
              rho.push_back(t->basis()[i]);
              dual.push_back(comp_dual(t->basis()[i]));
            }
            ASSERT_EQ(e.count(g, rho), f.count(g, dual));
          });
        }
      }
    }
  }
}

TEST(Count, MemoDoesNotChangeResults) {
  const auto t = table(7, 3);
  CountEngine e(t);
  const Integer cold = e.count(3, std::vector<RadiusClass>{w5, w2});
  EXPECT_GT(e.cache_size(), 0U);
  const Integer warm = e.count(3, std::vector<RadiusClass>{w2, w5});
  EXPECT_EQ(cold, warm);
  e.clear_cache();
  EXPECT_EQ(e.cache_size(), 0U);
  EXPECT_EQ(e.count(3, std::vector<RadiusClass>{w5, w2}), cold);
}

TEST(Count, ThreadCountDoesNotChangeTables) {
  for (int n = 2; n < 7; ++n) {
    const BaseTable one = BaseTable::build(Prime(7), n, OverrideTable::builtin(), 1);
    const BaseTable four = BaseTable::build(Prime(7), n, OverrideTable::builtin(), 4);
    EXPECT_EQ(to_json(one).dump(), to_json(four).dump());
  }
}

TEST(Evaluate, CupAndCap) {
  const auto t = table(7, 3);
  const CountEngine e(t);
  const std::size_t d = t->dim();
  const Tensor cup = evaluate(e, {0, 0, 2}, Tensor::scalar(1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::vector<std::size_t> ij{i, j};
      EXPECT_EQ(cup.at(ij), j == t->dual_index(i) ? 1 : 0);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const std::vector<std::size_t> pair{i, t->dual_index(i)};
    const Tensor cap = evaluate(e, {0, 2, 0}, Tensor::basis(d, pair));
    EXPECT_EQ(cap.at(std::vector<std::size_t>{}), 1);
  }
}

TEST(Evaluate, HandleOperatorTraceIsGenusTwo) {
  const auto t = table(7, 3);
  const CountEngine e(t);
  const std::size_t d = t->dim();
  Rational trace = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const std::vector<std::size_t> in{i};
    const Tensor out = evaluate(e, {1, 1, 1}, Tensor::basis(d, in));
    trace += out.at(in);
  }
  EXPECT_EQ(trace, 56);
}

TEST(Evaluate, PantsIsMultiplication) {
  const auto t = table(7, 3);
  const CountEngine e(t);
  const FusionAlgebra alg(*t);
  const std::size_t d = t->dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::vector<std::size_t> in{i, j};
      const Tensor out = evaluate(e, {0, 2, 1}, Tensor::basis(d, in));
      const auto prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
      for (std::size_t k = 0; k < d; ++k) {
        const std::vector<std::size_t> kk{k};
        EXPECT_EQ(out.at(kk), prod[k]);
      }
    }
  }
}

TEST(Evaluate, InputOrderMismatchRejected) {
  const auto t = table(7, 3);
  const CountEngine e(t);
  EXPECT_THROW((void)evaluate(e, {0, 2, 1}, Tensor::scalar(1)), InvalidInput);
}

TEST(Axioms, AllPublishedTablesPass) {
  for (int p : {3, 5, 7}) {
    for (int n = 2; n < p; ++n) {
      const AxiomReport r = check_axioms(Prime(p), n);
      EXPECT_TRUE(r.all_passed()) << p << "," << n << ": " << to_json(r).dump();
      EXPECT_EQ(r.results.size(), 7U);
    }
  }
}

TEST(Axioms, CorruptedTableFailsAssociativity) {
  const BaseTable good = BaseTable::build(Prime(7), 3);
  BaseTable bad = good;
  bad = bad.with_value({w5, w5, w5}, 1, "corrupted");
  const AxiomReport r = check_axioms(bad);
  EXPECT_FALSE(r.all_passed());
  ASSERT_NE(r.find("associativity"), nullptr);
  EXPECT_FALSE(r.find("associativity")->passed);
  EXPECT_FALSE(r.find("associativity")->witness.empty());
}

TEST(Axioms, AsymmetricTableFailsSymmetry) {
  const BaseTable bad = BaseTable::build(Prime(7), 3).with_value({w1, w2, w3}, 1, "one ordering only");
  const AxiomReport r = check_axioms(bad);
  EXPECT_FALSE(r.find("S3 symmetry of base table")->passed);
}

}  // namespace
