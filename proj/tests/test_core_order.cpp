#include "oracle.hpp"

#include "cusg/corpus.hpp"
#include "cusg/error.hpp"
#include "cusg/finpom.hpp"
#include "cusg/properties.hpp"

#include <gtest/gtest.h>

namespace {

using namespace cusg;

constexpr int kInf1 = 2;  // ∞ in E_1

const std::vector<FinPom>& corpus() {
  static const std::vector<FinPom> c = pom_corpus(20260101, 240, 6);
  return c;
}

FinPom z2() {
  FinPom m = make_cyclic_group(2);
  return algebraic_order(m);
}

TEST(Validate, ElementaryOneHolds) { EXPECT_TRUE(validate(make_elementary(1)).holds()); }

TEST(Validate, AntisymmetryViolation) {
  FinPom m = make_elementary(1);
  m.leq[2 * 3 + 1] = 1;
  Verdict v = validate(m);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.tag, "antisymmetry");
  EXPECT_EQ(v.witness, (std::vector<std::int64_t>{1, 2}));
  EXPECT_TRUE(validate(m, OrderKind::Pre).holds());
}

TEST(Validate, TrivialMonoidHolds) { EXPECT_TRUE(validate(make_trivial()).holds()); }

TEST(Validate, MalformedTablesAreInputErrors) {
  FinPom m = make_elementary(1);
  m.add.pop_back();
  EXPECT_THROW(validate(m), InputError);
  FinPom r = make_elementary(1);
  r.add[4] = 7;
  EXPECT_THROW(validate(r), InputError);
  EXPECT_THROW(validate(FinPom{}), InputError);
}

TEST(Validate, NonzeroBottomIsReported) {
  FinPom m = make_elementary(1);
  m.leq[1 * 3 + 0] = 1;
  m.leq[0 * 3 + 1] = 0;
  EXPECT_TRUE(validate(m).fails());
}

TEST(AlgebraicOrder, ElementaryOneIsAChain) {
  FinPom m = make_elementary(1);
  std::fill(m.leq.begin(), m.leq.end(), 0);
  FinPom a = algebraic_order(m);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(a.le(x, y), x <= y) << x << "," << y;
  EXPECT_TRUE(validate(a).holds());
}

TEST(AlgebraicOrder, Trivial) { EXPECT_TRUE(algebraic_order(make_trivial()).le(0, 0)); }

TEST(AlgebraicOrder, CyclicGroupIsOnlyAPreorder) {
  FinPom g = z2();
  EXPECT_TRUE(g.le(0, 1));
  EXPECT_TRUE(g.le(1, 0));
  EXPECT_TRUE(validate(g).fails());
  EXPECT_TRUE(validate(g, OrderKind::Pre).holds());
  EXPECT_EQ(antisymmetrize(g).n, 1);
}

TEST(AlgebraicOrder, MatchesExistentialDefinitionOnCorpus) {
  for (const auto& m : corpus()) {
    FinPom a = algebraic_order(m);
    for (int x = 0; x < m.n; ++x)
      for (int y = 0; y < m.n; ++y)
        EXPECT_EQ(a.le(x, y), oracle::any_of(m.n, [&](int t) { return m.sum(x, t) == y; }));
  }
}

TEST(CheckProperty, ElementaryOneExamples) {
  FinPom e1 = make_elementary(1);
  Verdict canc = check_property(e1, {Prop::Cancellative});
  ASSERT_TRUE(canc.fails());
  EXPECT_TRUE(replay_failure(e1, {Prop::Cancellative}, canc));
  int a = static_cast<int>(canc.witness[0]), b = static_cast<int>(canc.witness[1]);
  int x = static_cast<int>(canc.witness[2]);
  EXPECT_TRUE(e1.le(e1.sum(a, x), e1.sum(b, x)));
  EXPECT_FALSE(e1.le(a, b));

  Verdict near = check_property(e1, {Prop::NearlyUnperforated});
  ASSERT_TRUE(near.fails());
  EXPECT_EQ(near.witness[0], kInf1);
  EXPECT_EQ(near.witness[1], 1);

  EXPECT_TRUE(check_property(e1, {Prop::O5}).holds());
  EXPECT_TRUE(check_property(e1, {Prop::O6}).holds());
  Verdict refine = check_property(e1, {Prop::RieszRefinement});
  ASSERT_TRUE(refine.fails());
  EXPECT_TRUE(replay_failure(e1, {Prop::RieszRefinement}, refine));
  EXPECT_TRUE(check_property(make_pureinf(), {Prop::Idempotent}).holds());
}

TEST(CheckProperty, ParseNames) {
  EXPECT_EQ(parse_property("riesz-refinement").kind, Prop::RieszRefinement);
  Property p = parse_property("n-divisible(3)");
  EXPECT_EQ(p.kind, Prop::NDivisible);
  EXPECT_EQ(p.param, 3);
  EXPECT_EQ(parse_property("O5").kind, Prop::O5);
  EXPECT_THROW(parse_property("no-such-property"), InputError);
  for (const auto& q : all_properties()) EXPECT_EQ(parse_property(property_name(q)).kind, q.kind);
}

TEST(CheckProperty, BoundMustBePositive) {
  EXPECT_THROW(check_property(make_elementary(1), {Prop::AlmostUnperforated}, 0), InputError);
  EXPECT_THROW(stable_domination(make_elementary(1), 0, 1, 0), InputError);
}

// Every decider agrees with its brute-force definition, and every Fails witness replays.
TEST(CheckProperty, AgreesWithOraclesOnCorpus) {
  struct Case {
    Prop p;
    bool (*oracle)(const FinPom&);
  };
  const Case cases[] = {
      {Prop::Cancellative, oracle::cancellative},
      {Prop::WeaklyCancellative, oracle::cancellative},
      {Prop::AlgebraicallyOrdered, oracle::algebraically_ordered},
      {Prop::O5, oracle::o5},
      {Prop::O5Prime, oracle::o5_prime},
      {Prop::O6, oracle::o6},
      {Prop::RieszDecomposition, oracle::riesz_decomposition},
      {Prop::RieszRefinement, oracle::riesz_refinement},
      {Prop::RieszInterpolation, oracle::riesz_interpolation},
      {Prop::AlmostUnperforated, oracle::almost_unperforated},
      {Prop::NearlyUnperforated, oracle::nearly_unperforated},
      {Prop::Unperforated, oracle::unperforated},
      {Prop::WeaklySeparative, oracle::weakly_separative},
      {Prop::Simple, oracle::simple},
  };
  for (const auto& m : corpus())
    for (const auto& c : cases) {
      Verdict v = check_property(m, {c.p});
      ASSERT_FALSE(v.unknown()) << property_name({c.p});
      EXPECT_EQ(v.holds(), c.oracle(m)) << property_name({c.p}) << " on n=" << m.n;
      if (v.fails()) EXPECT_TRUE(replay_failure(m, {c.p}, v)) << property_name({c.p});
    }
}

TEST(CheckProperty, EveryPropertyIsDecidedExactlyWithDefaultBound) {
  for (const auto& m : corpus())
    for (auto p : all_properties()) {
      if (p.kind == Prop::NUnperforated || p.kind == Prop::NDivisible) p.param = 2;
      Verdict v = check_property(m, p);
      EXPECT_FALSE(v.unknown()) << property_name(p);
      if (v.fails()) EXPECT_TRUE(replay_failure(m, p, v)) << property_name(p);
    }
}

TEST(CheckProperty, MultiplierBoundCoversPeriods) {
  for (const auto& m : corpus()) {
    auto K = multiplier_bound(m);
    EXPECT_GE(K, 2LL * m.n * m.n);
    for (int a = 0; a < m.n; ++a) {
      Orbit o = orbit(m, a);
      EXPECT_LE(o.preperiod + o.period, m.n);
      EXPECT_EQ(m.times(o.preperiod, a), m.times(o.preperiod + o.period, a));
    }
  }
  EXPECT_EQ(multiplier_bound(make_elementary(1), 5), 10);
}

TEST(NearUnperforation, TwoThreeCriterionMatchesDefinition) {
  for (const auto& m : corpus()) {
    EXPECT_EQ(oracle::nearly_unperforated(m), oracle::nearly_unperforated_23(m));
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b) {
        EXPECT_EQ(less_p(m, a, b), oracle::less_p(m, a, b));
        if (oracle::two_three(m, a, b)) EXPECT_TRUE(less_p(m, a, b));
      }
  }
}

TEST(NearUnperforation, ImplicationChain) {
  for (const auto& m : corpus()) {
    bool unp = check_property(m, {Prop::Unperforated}).holds();
    bool near = check_property(m, {Prop::NearlyUnperforated}).holds();
    bool almost = check_property(m, {Prop::AlmostUnperforated}).holds();
    bool sep = check_property(m, {Prop::WeaklySeparative}).holds();
    if (unp) EXPECT_TRUE(near);
    if (near) EXPECT_TRUE(almost);
    if (near) EXPECT_TRUE(sep);
    if (oracle::nearly_unperforated_23(m)) EXPECT_TRUE(near);
  }
}

TEST(Grothendieck, Examples) {
  Grothendieck e1 = grothendieck(make_elementary(1));
  EXPECT_EQ(e1.group.n, 1);
  EXPECT_FALSE(e1.injective);
  Grothendieck t = grothendieck(make_trivial());
  EXPECT_EQ(t.group.n, 1);
  EXPECT_TRUE(t.injective);
  Grothendieck g = grothendieck(make_cyclic_group(2));
  EXPECT_EQ(g.group.n, 2);
  EXPECT_TRUE(g.injective);
}

TEST(Grothendieck, DeltaIsAHomomorphismIntoAGroup) {
  for (const auto& m : corpus()) {
    Grothendieck g = grothendieck(m);
    const FinGroup& G = g.group;
    EXPECT_EQ(g.delta[m.zero], G.zero);
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b) EXPECT_EQ(g.delta[m.sum(a, b)], G.sum(g.delta[a], g.delta[b]));
    for (int x = 0; x < G.n; ++x) EXPECT_EQ(G.sum(x, G.neg[x]), G.zero);
    // δ(a) = δ(b) iff a + e = b + e for some e.
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b) {
        bool related = oracle::any_of(m.n, [&](int e) { return m.sum(a, e) == m.sum(b, e); });
        EXPECT_EQ(g.delta[a] == g.delta[b], related);
      }
    EXPECT_EQ(g.injective, check_property(m, {Prop::Cancellative}).holds());
  }
}

TEST(StableDomination, Examples) {
  FinPom e1 = make_elementary(1);
  StableDomination s = stable_domination(e1, 1, kInf1);
  ASSERT_TRUE(s.verdict.holds());
  EXPECT_EQ(s.verdict.witness, std::vector<std::int64_t>{1});
  StableDomination r = stable_domination(e1, kInf1, 1);
  ASSERT_TRUE(r.verdict.holds());
  EXPECT_EQ(r.verdict.witness, std::vector<std::int64_t>{2});
  for (int b = 0; b < 3; ++b) EXPECT_TRUE(stable_domination(e1, 0, b).verdict.holds());
}

TEST(StableDomination, ItemsAgreeWithOracle) {
  for (const auto& m : corpus())
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b) {
        StableDomination s = stable_domination(m, a, b, static_cast<std::int64_t>(m.n) * m.n);
        bool expect = oracle::stably_dominated(m, a, b);
        EXPECT_EQ(s.verdict.holds(), expect);
        EXPECT_TRUE(s.agree);
        EXPECT_EQ(s.item1, expect);
        EXPECT_EQ(s.item2, expect);
        EXPECT_EQ(s.item3, expect);
        EXPECT_EQ(s.item4, expect);
      }
}

TEST(Isomorphism, ProductsCommute) {
  FinPom a = product(make_elementary(1), make_elementary(2));
  FinPom b = product(make_elementary(2), make_elementary(1));
  auto f = find_isomorphism(a, b);
  ASSERT_TRUE(f);
  EXPECT_TRUE(oracle::verifies_isomorphism(a, b, *f));
  EXPECT_FALSE(find_isomorphism(make_elementary(1), make_elementary(2)));
}

TEST(Isomorphism, AgreesWithBacktrackingOracle) {
  const auto& c = corpus();
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
    auto f = find_isomorphism(c[i], c[i + 1]);
    EXPECT_EQ(f.has_value(), oracle::isomorphic(c[i], c[i + 1]));
    if (f) EXPECT_TRUE(oracle::verifies_isomorphism(c[i], c[i + 1], *f));
    auto self = find_isomorphism(c[i], c[i]);
    ASSERT_TRUE(self);
    EXPECT_TRUE(is_isomorphism(c[i], c[i], *self));
  }
}

TEST(Corpus, ValidAndDeterministic) {
  auto again = pom_corpus(20260101, 240, 6);
  ASSERT_EQ(again.size(), corpus().size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    EXPECT_TRUE(validate(corpus()[i]).holds());
    EXPECT_LE(corpus()[i].n, 6);
    EXPECT_EQ(again[i].add, corpus()[i].add);
    EXPECT_EQ(again[i].leq, corpus()[i].leq);
  }
}

}  // namespace
