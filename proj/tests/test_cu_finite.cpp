#include "oracle.hpp"

#include "cusg/completion.hpp"
#include "cusg/corpus.hpp"
#include "cusg/cu_finite.hpp"
#include "cusg/error.hpp"
#include "cusg/properties.hpp"

#include <gtest/gtest.h>

namespace {

using namespace cusg;

const std::vector<FinPom>& corpus() {
  static const std::vector<FinPom> c = pom_corpus(777, 200, 6);
  return c;
}

bool holds(const FinPom& m, Prop p) { return check_property(m, {p}).holds(); }

std::vector<std::uint8_t> members_of(const FinPom& m, std::uint32_t mask) {
  std::vector<std::uint8_t> out(m.n);
  for (int a = 0; a < m.n; ++a) out[a] = mask >> a & 1;
  return out;
}

// Index of (a, b) in product(A, B).
int pair_index(const FinPom& B, int a, int b) { return a * B.n + b; }

TEST(Ideals, Examples) {
  FinPom e1 = make_elementary(1);
  auto i1 = ideals(e1);
  ASSERT_EQ(i1.size(), 2u);
  EXPECT_EQ(ideals(make_trivial()).size(), 1u);

  FinPom sq = product(e1, e1);
  auto i2 = ideals(sq);
  ASSERT_EQ(i2.size(), 4u);
  // Any ideal containing (1, 0) contains (∞, 0).
  for (const auto& I : i2)
    if (I.contains(pair_index(e1, 1, 0))) EXPECT_TRUE(I.contains(pair_index(e1, 2, 0)));
}

TEST(Ideals, MatchSubsetEnumeration) {
  for (const auto& m : corpus()) {
    auto found = ideals(m);
    auto masks = oracle::ideal_masks(m);
    ASSERT_EQ(found.size(), masks.size());
    for (const auto& I : found) {
      std::uint32_t mask = 0;
      for (int a = 0; a < m.n; ++a)
        if (I.contains(a)) mask |= 1u << a;
      EXPECT_NE(std::find(masks.begin(), masks.end(), mask), masks.end());
      EXPECT_TRUE(is_ideal(m, I.members));
      for (int g : I.generators) EXPECT_EQ(ideal_generated(m, g), I.members);
    }
  }
}

TEST(LatF, Examples) {
  FinPom pi = make_pureinf();
  EXPECT_TRUE(find_isomorphism(latf(make_elementary(1)).pom, pi));
  EXPECT_TRUE(find_isomorphism(latf(pi).pom, pi));
  FinPom e1 = make_elementary(1);
  EXPECT_TRUE(find_isomorphism(latf(product(e1, e1)).pom, product(pi, pi)));
}

TEST(LatF, FunctorLaws) {
  const auto& c = corpus();
  for (const auto& m : c) {
    LatF l = latf(m);
    EXPECT_TRUE(validate(l.pom).holds());
    EXPECT_TRUE(holds(l.pom, Prop::AlgebraicallyOrdered));
    EXPECT_TRUE(holds(l.pom, Prop::O5));
    EXPECT_TRUE(oracle::isomorphic(l.pom, oracle::ideal_lattice(m)));
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        EXPECT_EQ(l.idl_of[m.sum(a, b)], l.pom.sum(l.idl_of[a], l.idl_of[b]));
  }
  for (std::size_t i = 0; i + 1 < c.size(); i += 7) {
    if (c[i].n * c[i + 1].n > 16) continue;
    EXPECT_EQ(latf(product(c[i], c[i + 1])).pom.n, latf(c[i]).pom.n * latf(c[i + 1]).pom.n);
  }
}

TEST(Quotient, Examples) {
  FinPom e1 = make_elementary(1);
  FinPom sq = product(e1, e1);
  std::vector<std::uint8_t> left(sq.n, 0);
  for (int a = 0; a < 3; ++a) left[pair_index(e1, a, 0)] = 1;
  QuotientMap q = quotient(sq, left);
  EXPECT_TRUE(find_isomorphism(q.target, e1));

  std::vector<std::uint8_t> zero(sq.n, 0), all(sq.n, 1);
  zero[sq.zero] = 1;
  EXPECT_TRUE(find_isomorphism(quotient(sq, zero).target, sq));
  EXPECT_EQ(quotient(sq, all).target.n, 1);

  std::vector<std::uint8_t> bad(sq.n, 0);
  bad[sq.zero] = 1;
  bad[pair_index(e1, 1, 0)] = 1;
  EXPECT_THROW(quotient(sq, bad), InputError);
}

TEST(Quotient, MatchesPreorderOracleAndInheritsAxioms) {
  for (const auto& m : corpus()) {
    bool o5 = holds(m, Prop::O5), o6 = holds(m, Prop::O6), wc = holds(m, Prop::WeaklyCancellative);
    for (auto mask : oracle::ideal_masks(m)) {
      QuotientMap q = quotient(m, members_of(m, mask));
      ASSERT_TRUE(validate(q.target).holds());
      auto rel = [&](int a, int b) {
        return oracle::any_of(m.n, [&](int c) { return (mask >> c & 1) && m.le(a, m.sum(b, c)); });
      };
      std::vector<char> hit(q.target.n, 0);
      for (int a = 0; a < m.n; ++a) {
        hit[q.class_of[a]] = 1;
        for (int b = 0; b < m.n; ++b) {
          EXPECT_EQ(q.target.le(q.class_of[a], q.class_of[b]), rel(a, b));
          EXPECT_EQ(q.class_of[m.sum(a, b)], q.target.sum(q.class_of[a], q.class_of[b]));
        }
      }
      for (char h : hit) EXPECT_TRUE(h);
      if (o5) EXPECT_TRUE(holds(q.target, Prop::O5));
      if (o6) EXPECT_TRUE(holds(q.target, Prop::O6));
      if (wc) EXPECT_TRUE(holds(q.target, Prop::WeaklyCancellative));
    }
  }
}

TEST(AxiomRelations, O5AndO5Prime) {
  for (const auto& m : corpus()) {
    bool o5 = holds(m, Prop::O5), o5p = holds(m, Prop::O5Prime);
    if (o5) EXPECT_TRUE(o5p);
    if (holds(m, Prop::WeaklyCancellative)) EXPECT_EQ(o5, o5p);
  }
}

TEST(AxiomRelations, CancellingFullElementGivesWeakCancellation) {
  for (const auto& m : corpus()) {
    if (!holds(m, Prop::O5)) continue;
    for (int e = 0; e < m.n; ++e) {
      bool full = true, cancels = true;
      for (int b = 0; b < m.n; ++b) full = full && oracle::dominated_by_multiple(m, b, e);
      for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
          if (m.le(m.sum(a, e), m.sum(b, e)) && !m.le(a, b)) cancels = false;
      if (full && cancels) EXPECT_TRUE(holds(m, Prop::WeaklyCancellative));
    }
  }
}

TEST(AxiomRelations, RieszPropertiesCoincideUnderO5AndWeakCancellation) {
  for (const auto& m : corpus()) {
    if (!holds(m, Prop::O5) || !holds(m, Prop::WeaklyCancellative)) continue;
    bool o6 = holds(m, Prop::O6);
    EXPECT_EQ(holds(m, Prop::RieszRefinement), o6);
    EXPECT_EQ(holds(m, Prop::RieszDecomposition), o6);
    EXPECT_EQ(holds(m, Prop::RieszInterpolation), o6);
  }
}

TEST(Soft, Examples) {
  for (int k : {0, 1, 2}) {
    auto s = soft_elements(make_elementary(k));
    for (auto x : s) EXPECT_TRUE(x) << "E_" << k;
  }
  EXPECT_THROW(soft_elements(make_elementary(1), 0), InputError);
}

TEST(Soft, MatchesDefinitionAndIsASubsemigroup) {
  for (const auto& m : corpus()) {
    auto s = soft_elements(m);
    EXPECT_TRUE(s[m.zero]);
    for (int a = 0; a < m.n; ++a) {
      bool soft = true;
      for (int ap = 0; ap < m.n; ++ap) {
        if (!m.le(ap, a)) continue;
        bool found = false;
        for (std::int64_t n = 1; n <= oracle::horizon(m) && !found; ++n)
          found = m.le(oracle::mult(m, n + 1, ap), oracle::mult(m, n, a));
        soft = soft && found;
      }
      EXPECT_EQ(static_cast<bool>(s[a]), soft);
    }
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        if (s[a] && s[b]) EXPECT_TRUE(s[m.sum(a, b)]);
  }
}

TEST(ClassifySimple, Examples) {
  SimpleClass e2 = classify_simple(make_elementary(2));
  ASSERT_EQ(e2.kind, SimpleClass::Kind::Elementary);
  EXPECT_EQ(e2.k, 2);
  EXPECT_TRUE(oracle::verifies_isomorphism(make_elementary(2), oracle::elementary(2), e2.iso));
  EXPECT_EQ(classify_simple(make_trivial()).kind, SimpleClass::Kind::Zero);
  FinPom e1 = make_elementary(1);
  SimpleClass sq = classify_simple(product(e1, e1));
  EXPECT_EQ(sq.kind, SimpleClass::Kind::NotSimpleOrAxiomFail);
  EXPECT_FALSE(sq.reason.empty());
}

TEST(ClassifySimple, SimpleO5O6CorpusMembersAreElementary) {
  for (const auto& m : corpus()) {
    bool eligible = oracle::simple(m) && oracle::o5(m) && oracle::o6(m);
    SimpleClass c = classify_simple(m);
    if (!eligible) {
      EXPECT_EQ(c.kind, SimpleClass::Kind::NotSimpleOrAxiomFail);
      continue;
    }
    if (c.kind == SimpleClass::Kind::Zero) {
      EXPECT_TRUE(oracle::verifies_isomorphism(m, oracle::trivial(), c.iso));
    } else {
      ASSERT_EQ(c.kind, SimpleClass::Kind::Elementary);
      EXPECT_TRUE(oracle::verifies_isomorphism(m, oracle::elementary(c.k), c.iso));
    }
  }
}

TEST(Functional, Examples) {
  EXPECT_FALSE(functional_exists(make_elementary(1), 1).exists);
  EXPECT_FALSE(functional_exists(make_pureinf(), 1).exists);
  EXPECT_THROW(functional_exists(make_elementary(1), 0), InputError);
  EXPECT_THROW(functional_exists(make_elementary(1), 5), InputError);
}

TEST(Functional, NoneOnFiniteCarriers) {
  for (const auto& m : corpus())
    for (int a = 0; a < m.n; ++a) {
      if (a == m.zero) continue;
      // Pigeonhole: i·a = j·a for some i < j.
      bool repeats = false;
      for (int i = 0; i <= m.n && !repeats; ++i)
        for (int j = i + 1; j <= m.n + 1 && !repeats; ++j)
          repeats = oracle::mult(m, i, a) == oracle::mult(m, j, a);
      ASSERT_TRUE(repeats);
      auto r = functional_exists(m, a);
      EXPECT_FALSE(r.exists);
      EXPECT_FALSE(r.criterion);
      EXPECT_FALSE(r.lp_feasible);
    }
}

TEST(FourierMotzkin, SolvesAndRejects) {
  // x + y = 1, x - y ≤ -1/2, -x ≤ 0.
  std::vector<LinearConstraint> sys = {{{1, 1}, 1, true}, {{1, -1}, Q(-1, 2), false}, {{-1, 0}, 0, false}};
  auto sol = fm_solve(2, sys);
  ASSERT_TRUE(sol);
  for (const auto& c : sys) {
    Q lhs = c.coeffs[0] * (*sol)[0] + c.coeffs[1] * (*sol)[1];
    if (c.equality) EXPECT_EQ(lhs, c.rhs);
    else EXPECT_LE(lhs, c.rhs);
  }
  // x ≤ 1 and -x ≤ -2.
  EXPECT_FALSE(fm_solve(1, {{{1}, 1, false}, {{-1}, -2, false}}));
}

TEST(StateBounds, Examples) {
  FinPom e1 = make_elementary(1);
  std::vector<std::uint8_t> N = {1, 0, 0};
  StateBounds b = state_extension_bounds(e1, N, {0, 0, 0}, 1, 8);
  EXPECT_EQ(b.p, ExtQ::of(0));
  EXPECT_TRUE(b.r.inf);
  EXPECT_TRUE(b.statement1);

  StateBounds z = state_extension_bounds(e1, N, {0, 0, 0}, 0, 8);
  EXPECT_EQ(z.p, ExtQ::of(0));
  EXPECT_EQ(z.r, ExtQ::of(0));

  FinPom e2 = make_elementary(2);
  EXPECT_THROW(state_extension_bounds(e2, {1, 0, 0, 1}, {0, 0, 0, 1}, 1, 8), InputError);
}

TEST(StateBounds, StatementsHoldOnCorpus) {
  for (const auto& m : corpus()) {
    std::vector<std::uint8_t> N(m.n, 0);
    N[m.zero] = 1;
    std::vector<Q> f(m.n, 0);
    for (int x = 0; x < m.n; ++x) {
      StateBounds b = state_extension_bounds(m, N, f, x, 6);
      EXPECT_TRUE(b.statement1);
      if (b.statement2_applicable) EXPECT_TRUE(b.statement2);
    }
  }
}

}  // namespace
