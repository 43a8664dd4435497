#include "named_samples.hpp"
#include "oracle.hpp"

#include "cusg/error.hpp"
#include "cusg/named.hpp"
#include "cusg/properties.hpp"

#include <gtest/gtest.h>

#include <ostream>

namespace cusg {
void PrintTo(const Elem& a, std::ostream* os) {
  *os << (a.soft ? "soft(" : "(") << (a.inf ? std::string("inf") : to_string(a.value)) << "|" << a.tau << ")";
}
}  // namespace cusg

namespace {

using namespace cusg;
using samples::random_elem;

constexpr int kSamples = 10000;

Elem C(Q v, std::int64_t t = 0) { return Elem::compact(std::move(v), t); }
Elem S(Q v) { return Elem::soft_of(std::move(v)); }

const NamedCu kTorsion2 = parse_named("gensolid(P={2};K={2};e={2:1})");

TEST(Arithmetic, Examples) {
  NamedCu z = NamedCu::z();
  EXPECT_EQ(add(z, C(2), S(3)), S(5));
  NamedCu e2 = NamedCu::elementary(2);
  EXPECT_EQ(add(e2, C(1), C(2)), Elem::compact_infinity());
  EXPECT_EQ(add(kTorsion2, C(Q(1, 2), 1), C(Q(1, 2), 1)), C(1, 0));
  EXPECT_FALSE(leq(z, C(2), S(2)));
  EXPECT_TRUE(leq(z, S(2), C(2)));
}

TEST(Arithmetic, ParseAndPrintRoundTrip) {
  std::mt19937_64 rng(3);
  for (const auto& name : samples::variant_names()) {
    NamedCu s = parse_named(name);
    EXPECT_EQ(parse_named(to_string(s)), s);
    for (int i = 0; i < 200; ++i) {
      Elem a = random_elem(s, rng);
      ASSERT_TRUE(contains(s, a)) << name;
      EXPECT_EQ(parse_elem(s, to_string(s, a)), a) << name << " " << to_string(s, a);
    }
  }
  EXPECT_THROW(parse_named("r(4^inf)x"), InputError);
  EXPECT_THROW(parse_elem(NamedCu::z(), "1/3"), InputError);
}

// Commutativity, associativity, unit, distributivity, monotonicity and ≪-compatibility.
TEST(Arithmetic, SemiringLawsOnSamples) {
  std::mt19937_64 rng(11);
  for (const auto& name : samples::variant_names()) {
    NamedCu s = parse_named(name);
    Elem one = unit(s);
    for (int i = 0; i < kSamples; ++i) {
      Elem a = random_elem(s, rng), b = random_elem(s, rng), c = random_elem(s, rng);
      ASSERT_EQ(add(s, a, b), add(s, b, a)) << name;
      ASSERT_EQ(mul(s, a, b), mul(s, b, a)) << name;
      ASSERT_EQ(add(s, add(s, a, b), c), add(s, a, add(s, b, c))) << name;
      ASSERT_EQ(mul(s, mul(s, a, b), c), mul(s, a, mul(s, b, c))) << name;
      ASSERT_EQ(mul(s, one, a), a) << name;
      ASSERT_EQ(add(s, Elem::zero(), a), a) << name;
      ASSERT_EQ(mul(s, a, add(s, b, c)), add(s, mul(s, a, b), mul(s, a, c))) << name;
      ASSERT_TRUE(contains(s, add(s, a, b)) && contains(s, mul(s, a, b))) << name;
      ASSERT_TRUE(leq(s, Elem::zero(), a) && leq(s, a, top(s))) << name;
      if (leq(s, a, b)) {
        ASSERT_TRUE(leq(s, add(s, a, c), add(s, b, c))) << name;
        ASSERT_TRUE(leq(s, mul(s, a, c), mul(s, b, c))) << name;
      }
      if (leq(s, a, b) && leq(s, b, a)) ASSERT_EQ(a, b) << name;
      if (leq(s, a, b) && leq(s, b, c)) ASSERT_TRUE(leq(s, a, c)) << name;
      if (waybelow(s, a, b)) {
        ASSERT_TRUE(leq(s, a, b)) << name;
        Elem d = random_elem(s, rng);
        if (waybelow(s, c, d)) ASSERT_TRUE(waybelow(s, mul(s, a, c), mul(s, b, d))) << name;
      }
      ASSERT_EQ(times(s, 3, a), add(s, a, add(s, a, a))) << name;
    }
  }
}

TEST(Softify, Examples) {
  NamedCu z = NamedCu::z();
  EXPECT_EQ(softify(z, C(3)), S(3));
  EXPECT_EQ(softify(NamedCu::interval(), S(Q(7, 2))), S(Q(7, 2)));
  EXPECT_EQ(softify(kTorsion2, C(Q(1, 2), 1)), S(Q(1, 2)));
  EXPECT_THROW(softify(NamedCu::extnat(), C(1)), InputError);
  EXPECT_THROW(softify(NamedCu::elementary(2), C(1)), InputError);
}

TEST(Predecessor, Examples) {
  NamedCu z = NamedCu::z();
  EXPECT_EQ(predecessor(z, C(3)), S(3));
  EXPECT_EQ(predecessor(parse_named("r(2^inf)"), C(Q(1, 2))), S(Q(1, 2)));
  EXPECT_TRUE(leq(z, C(3), add(z, predecessor(z, C(3)), S(Q(1, 1000)))));
  EXPECT_THROW(predecessor(z, S(3)), InputError);
}

TEST(Predecessor, IsTheLargestElementStrictlyBelow) {
  std::mt19937_64 rng(2);
  for (const auto& name : {"z", "r(2^inf)", "r(6^inf)", "gensolid(P={2,3};K={2};e={2:2})"}) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 2000; ++i) {
      Elem p = samples::random_compact(s, rng);
      Elem q = predecessor(s, p);
      ASSERT_TRUE(leq(s, q, p));
      ASSERT_FALSE(q == p);
      // Every x ≪ p with x ≠ p lies below 1′p.
      Elem x = random_elem(s, rng);
      if (waybelow(s, x, p) && !(x == p) && !leq(s, p, x)) ASSERT_TRUE(leq(s, x, q)) << name;
    }
  }
}

TEST(GlimmHalf, Examples) {
  EXPECT_EQ(glimm_half(NamedCu::z(), C(1)), S(Q(1, 2)));
  EXPECT_EQ(glimm_half(NamedCu::interval(), S(1)), S(Q(1, 2)));
  EXPECT_EQ(glimm_half(parse_named("r(3^inf)"), C(Q(1, 3))), S(Q(1, 6)));
}

TEST(GlimmHalf, TwiceTheHalfIsBelow) {
  std::mt19937_64 rng(21);
  for (const auto& name : {"z", "interval", "r(2^inf)", "r(inf)"}) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 2000; ++i) {
      Elem a = random_elem(s, rng);
      if (a.is_zero()) continue;
      Elem h = glimm_half(s, a);
      ASSERT_FALSE(h.is_zero());
      ASSERT_TRUE(leq(s, times(s, 2, h), a)) << name;
    }
  }
}

TEST(Lambda, Examples) {
  NamedCu z = NamedCu::z();
  EXPECT_EQ(lambda(z, C(5)), ExtQ::of(5));
  EXPECT_EQ(lambda(z, S(5)), ExtQ::of(5));
  EXPECT_EQ(lambda(z, mul(z, C(2), S(3))), ExtQ::of(6));
  EXPECT_EQ(lambda(z, Elem::zero()), ExtQ::of(0));
  EXPECT_THROW(lambda(NamedCu::elementary(2), C(1)), InputError);
  EXPECT_THROW(lambda(NamedCu::pureinf(), Elem::compact_infinity()), InputError);
}

TEST(Lambda, NormalizableExactlyWhenNotIdempotent) {
  std::mt19937_64 rng(8);
  for (const auto& name : {"z", "interval", "r(2^inf)", "r(6^inf)", "gensolid(P={2,3};K={2};e={2:2})"}) {
    NamedCu s = parse_named(name);
    ASSERT_TRUE(named_property(s, "almost-unperforated").holds());
    ASSERT_TRUE(named_property(s, "almost-divisible").holds());
    for (int i = 0; i < 2000; ++i) {
      Elem a = random_elem(s, rng);
      ExtQ l = lambda(s, a);
      bool normalizable = !l.inf && l.value > 0;
      ASSERT_EQ(!(a == add(s, a, a)), normalizable) << name;
    }
  }
}

TEST(Soft, Examples) {
  NamedCu z = NamedCu::z();
  EXPECT_TRUE(is_soft(z, S(2)));
  EXPECT_TRUE(soft_by_definition(z, S(2)));
  EXPECT_FALSE(is_soft(z, C(2)));
  EXPECT_FALSE(soft_by_definition(z, C(2)));
  EXPECT_TRUE(is_soft(z, Elem::zero()));
  EXPECT_TRUE(is_compact(z, Elem::zero()));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(is_soft(NamedCu::interval(), random_elem(NamedCu::interval(), rng)));
}

TEST(Soft, TagAgreesWithDefinition) {
  std::mt19937_64 rng(4);
  for (const auto& name : samples::variant_names()) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 1000; ++i) {
      Elem a = random_elem(s, rng);
      ASSERT_EQ(is_soft(s, a), soft_by_definition(s, a)) << name;
    }
  }
}

TEST(Approximants, Examples) {
  NamedCu z = NamedCu::z();
  EXPECT_EQ(approximants(z, S(1), 3), (std::vector<Elem>{S(Q(1, 2)), S(Q(2, 3)), S(Q(3, 4))}));
  EXPECT_EQ(approximants(z, C(4), 3), (std::vector<Elem>{C(4), C(4), C(4)}));
  EXPECT_EQ(approximants(NamedCu::interval(), Elem::soft_infinity(), 3), (std::vector<Elem>{S(1), S(2), S(3)}));
  EXPECT_THROW(approximants(z, S(1), 0), InputError);
}

TEST(Approximants, AreWayBelowIncreasingChains) {
  std::mt19937_64 rng(6);
  for (const auto& name : samples::variant_names()) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 500; ++i) {
      Elem a = random_elem(s, rng);
      auto chain = approximants(s, a, 8);
      for (std::size_t k = 0; k < chain.size(); ++k) {
        ASSERT_TRUE(waybelow(s, chain[k], a) || (is_compact(s, a) && chain[k] == a)) << name;
        if (k + 1 < chain.size()) ASSERT_TRUE(leq(s, chain[k], chain[k + 1]));
      }
    }
  }
}

TEST(Semimodule, Examples) {
  EXPECT_TRUE(semimodule_test(NamedCu::interval(), parse_over("z")).holds());
  NamedVerdict zpi = semimodule_test(NamedCu::z(), parse_over("pureinf"));
  ASSERT_TRUE(zpi.fails());
  EXPECT_TRUE(replay_named_failure(NamedCu::z(), zpi));
  Verdict e1 = semimodule_test(make_elementary(1), parse_over("z"));
  ASSERT_TRUE(e1.fails());
  // (k+1)a ≤ kb with a = ∞, b = 1.
  ASSERT_GE(e1.witness.size(), 3u);
  EXPECT_EQ(e1.witness[0], 2);
  EXPECT_EQ(e1.witness[1], 1);
}

TEST(UnitCompare, Examples) {
  Verdict pi = tensor_unit_compare(make_elementary(1), parse_over("pureinf"), 2, 1);
  EXPECT_TRUE(pi.holds());
  NamedVerdict ext = tensor_unit_compare(NamedCu::extnat(), parse_over("r(2^inf)"), C(3), C(2));
  EXPECT_TRUE(ext.fails());
  NamedVerdict iz = tensor_unit_compare(NamedCu::z(), parse_over("interval"), C(1), S(1));
  EXPECT_TRUE(iz.holds());
}

TEST(Solidity, Examples) {
  NamedCu r2 = parse_named("r(2^inf)");
  SolidityWitness w = solidity_witness(r2, C(Q(3, 4)));
  EXPECT_EQ(w.n, 4);
  EXPECT_EQ(w.k, 3);
  // The unit here is (1, 1̄), so 2·(1/2, 1̄) = (1, 0̄) is not 1·1; 4a = (2, 0̄) = 2·1.
  SolidityWitness t = solidity_witness(kTorsion2, C(Q(1, 2), 1));
  EXPECT_EQ(t.n, 4);
  EXPECT_EQ(t.k, 2);
  SolidityWitness one = solidity_witness(r2, unit(r2));
  EXPECT_EQ(one.n, 1);
  EXPECT_EQ(one.k, 1);
  EXPECT_THROW(solidity_witness(r2, S(1)), InputError);
}

TEST(Solidity, CertificatesReplay) {
  NamedCu r6 = parse_named("r(6^inf)");
  SolidityWitness w = solidity_witness(r6, C(Q(5, 6)), true);
  ASSERT_TRUE(w.carrier);
  EXPECT_TRUE(is_equivalence(w.certificate));
  std::string err;
  EXPECT_TRUE(replay(*w.carrier, *w.carrier, w.lhs, w.rhs, w.certificate, &err)) << err;
}

TEST(ClassifySolid, Examples) {
  SolidClass r6 = classify_solid(parse_named("r(6^inf)"));
  ASSERT_EQ(r6.kind, SolidClass::Kind::AlgebraicSolid);
  EXPECT_EQ(r6.spec.P.primes, (std::vector<std::int64_t>{2, 3}));
  EXPECT_TRUE(r6.spec.e.empty());
  EXPECT_EQ(classify_solid(NamedCu::z()).kind, SolidClass::Kind::Z);
  EXPECT_EQ(classify_solid(NamedCu::interval()).kind, SolidClass::Kind::Interval);

  FinPom e3 = make_elementary(3);
  std::vector<int> table(static_cast<std::size_t>(e3.n) * e3.n);
  for (int a = 0; a < e3.n; ++a)
    for (int b = 0; b < e3.n; ++b) {
      int p = (a == 0 || b == 0) ? 0 : (a == 4 || b == 4 || a * b > 3) ? 4 : a * b;
      table[static_cast<std::size_t>(a) * e3.n + b] = p;
    }
  EXPECT_TRUE(validate_semiring(e3, table, 1).holds());
  SolidClass c = classify_solid(e3, table, 1);
  ASSERT_EQ(c.kind, SolidClass::Kind::Elementary);
  EXPECT_EQ(c.k, 3);
}

TEST(InitialTerminal, Examples) {
  InitialTerminal r2 = initial_terminal_maps(parse_named("r(2^inf)"));
  EXPECT_EQ(r2.from_z(C(2)), C(2));
  InitialTerminal t = initial_terminal_maps(kTorsion2);
  EXPECT_EQ(t.to_q(C(Q(1, 2), 1)), C(Q(1, 2)));
  InitialTerminal z = initial_terminal_maps(NamedCu::z());
  EXPECT_EQ(z.from_z(S(3)), S(3));
}

TEST(InitialTerminal, MapsAreMorphismsOnSamples) {
  std::mt19937_64 rng(12);
  EXPECT_THROW(initial_terminal_maps(NamedCu::interval()), InputError);
  for (const auto& name : {"z", "r(2^inf)", "r(6^inf)", "gensolid(P={2,3};K={2};e={2:2})"}) {
    NamedCu s = parse_named(name);
    std::vector<Elem> zs, ss;
    for (int i = 0; i < 300; ++i) {
      zs.push_back(random_elem(NamedCu::z(), rng));
      ss.push_back(random_elem(s, rng));
    }
    EXPECT_TRUE(check_initial_terminal(initial_terminal_maps(s), zs, ss).holds()) << name;
  }
}

TEST(ComparisonSuite, Examples) {
  NamedCu z = NamedCu::z();
  Comparison a = comparison_suite(z, S(1), C(1));
  EXPECT_TRUE(a.less_s_tau);
  EXPECT_TRUE(a.leq);
  Comparison b = comparison_suite(z, C(1), S(1));
  EXPECT_FALSE(b.leq);
  EXPECT_TRUE(b.hat_leq);
  Comparison zero = comparison_suite(z, Elem::zero(), S(2));
  EXPECT_TRUE(zero.leq && zero.waybelow && zero.less_s && zero.prop && zero.less_p && zero.hat_leq);
}

TEST(ComparisonSuite, ImplicationsHoldOnSamples) {
  std::mt19937_64 rng(13);
  for (const auto& name : samples::lambda_names()) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 2000; ++i) {
      Elem a = random_elem(s, rng), b = random_elem(s, rng);
      Comparison c = comparison_suite(s, a, b);
      ASSERT_TRUE(c.violations.empty()) << name << ": " << c.violations.front();
      ASSERT_EQ(c.leq, leq(s, a, b));
    }
  }
}

TEST(StableRatio, Examples) {
  EXPECT_EQ(stable_ratio(NamedCu::z(), C(1), S(Q(1, 3))), ExtQ::of(Q(1, 3)));
  EXPECT_EQ(stable_ratio(NamedCu::z(), C(1), Elem::zero()), ExtQ::of(0));
  EXPECT_EQ(stable_ratio(NamedCu::interval(), S(2), S(1)), ExtQ::of(Q(1, 2)));
  EXPECT_THROW(stable_ratio(NamedCu::z(), Elem::zero(), C(1)), InputError);
}

// The closed form is a lower bound for every k/n with nx ≤ ka, and no sampled k/n below it works.
TEST(StableRatio, IsTheInfimumOnAGrid) {
  std::mt19937_64 rng(14);
  for (const auto& name : {"z", "interval", "r(2^inf)", "extnat"}) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 200; ++i) {
      Elem a = random_elem(s, rng), x = random_elem(s, rng);
      if (a.is_zero()) continue;
      ExtQ r = stable_ratio(s, a, x);
      for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= 40; ++k) {
          bool ok = leq(s, times(s, n, x), times(s, k, a));
          ExtQ kn = ExtQ::of(Q(k, n));
          if (ok) ASSERT_TRUE(r <= kn) << name;
          if (kn < r) ASSERT_FALSE(ok) << name;
        }
    }
  }
}

TEST(NamedProperty, ClosedFormsAndWitnesses) {
  for (const auto& name : {"z", "interval", "r(2^inf)", "r(6^inf)", "gensolid(P={2,3};K={2};e={2:2})"}) {
    NamedCu s = parse_named(name);
    EXPECT_TRUE(named_property(s, "almost-unperforated").holds()) << name;
    EXPECT_TRUE(named_property(s, "almost-divisible").holds()) << name;
  }
  NamedCu r6 = parse_named("r(6^inf)");
  EXPECT_TRUE(named_property(r6, "nearly-unperforated").holds());
  EXPECT_TRUE(named_property(r6, "q-divisible", parse_supernatural("6^inf")).holds());
  EXPECT_TRUE(named_property(NamedCu::pureinf(), "idempotent").holds());
  for (const auto& [name, prop] : {std::pair{"extnat", "almost-divisible"}, std::pair{"elem(1)", "almost-unperforated"},
                                    std::pair{"elem(3)", "almost-unperforated"}}) {
    NamedCu s = parse_named(name);
    NamedVerdict v = named_property(s, prop);
    ASSERT_TRUE(v.fails()) << name;
    EXPECT_TRUE(replay_named_failure(s, v)) << name;
  }
  EXPECT_TRUE(named_property(NamedCu::extnat(), "almost-unperforated").holds());
  EXPECT_THROW(named_property(r6, "no-such-property"), InputError);
}

TEST(NamedProperty, RqNearlyUnperforatedBy23OnSamples) {
  std::mt19937_64 rng(15);
  NamedCu s = parse_named("r(6^inf)");
  for (int i = 0; i < kSamples; ++i) {
    Elem a = random_elem(s, rng), b = random_elem(s, rng);
    if (leq(s, times(s, 2, a), times(s, 2, b)) && leq(s, times(s, 3, a), times(s, 3, b))) ASSERT_TRUE(leq(s, a, b));
  }
}

TEST(ZAction, AgreesWithIntegerMultiplesAndIsAdditive) {
  std::mt19937_64 rng(16);
  NamedCu z = NamedCu::z();
  for (const auto& name : samples::z_multiplicative_names()) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 2000; ++i) {
      Elem a = random_elem(s, rng);
      auto n = samples::uniform(rng, 0, 9);
      ASSERT_EQ(zmul(s, C(n), a), times(s, n, a)) << name;
      Elem r1 = random_elem(z, rng), r2 = random_elem(z, rng);
      ASSERT_EQ(zmul(s, add(z, r1, r2), a), add(s, zmul(s, r1, a), zmul(s, r2, a))) << name;
      if (leq(z, r1, r2)) ASSERT_TRUE(leq(s, zmul(s, r1, a), zmul(s, r2, a))) << name;
    }
  }
}

TEST(Structure, CompactUnitsAndSoftPartPartitionSimpleVariants) {
  std::mt19937_64 rng(18);
  for (const auto& name : {"extnat", "z", "r(2^inf)", "r(inf)", "gensolid(P={2,3};K={2};e={2:2})"}) {
    NamedCu s = parse_named(name);
    for (int i = 0; i < 2000; ++i) {
      Elem a = random_elem(s, rng), b = random_elem(s, rng);
      if (a.is_zero() || b.is_zero()) continue;
      ASSERT_NE(is_compact(s, a), is_soft(s, a)) << name;
      if (is_soft(s, a)) {
        ASSERT_TRUE(is_soft(s, add(s, a, b))) << name;
        ASSERT_TRUE(is_soft(s, mul(s, a, b))) << name;
      } else if (is_compact(s, b)) {
        ASSERT_TRUE(is_compact(s, add(s, a, b))) << name;
        ASSERT_TRUE(is_compact(s, mul(s, a, b))) << name;
      }
    }
  }
}

TEST(Limit, DoublingStagesMatchDyadics) {
  for (int m = 0; m <= 6; ++m) {
    LimitComparison c = rq_limit_simplicial(m);
    EXPECT_TRUE(c.holds()) << m;
    EXPECT_EQ(c.elements, (1 << m) + 2);
  }
  EXPECT_THROW(rq_limit_simplicial(13), InputError);
}

}  // namespace
