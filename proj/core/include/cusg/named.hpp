#pragma once

#include "cusg/finpom.hpp"
#include "cusg/rational.hpp"
#include "cusg/tensor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cusg {

// Idempotent supernatural number: a set of primes, each with exponent ∞.
struct Supernatural {
  std::vector<std::int64_t> primes;  // sorted; ignored when all_primes
  bool all_primes = false;

  bool is_one() const { return !all_primes && primes.empty(); }
  bool contains(std::int64_t p) const;
  // n | q for a positive integer n.
  bool divides(std::int64_t n) const;
  bool operator==(const Supernatural& o) const {
    return all_primes == o.all_primes && (all_primes || primes == o.primes);
  }
};
// "inf", "6^inf", "2^inf*3^inf", "1". Throws InputError.
Supernatural parse_supernatural(std::string_view s);
std::string to_string(const Supernatural& q);
Supernatural supernatural_union(const Supernatural& a, const Supernatural& b);

// Solid ring with R/t(R) ≅ ℤ[P⁻¹] and t(R) ≅ ⊕_{p∈K} ℤ/p^{e(p)}. The torsion part is
// stored as ℤ/N with N = ∏ p^{e(p)}, the ring as ℤ[P⁻¹] × ℤ/N with unit (1, 1).
struct SolidRingSpec {
  Supernatural P;
  std::map<std::int64_t, int> e;  // keys form K

  std::int64_t torsion_modulus() const;
  bool operator==(const SolidRingSpec& o) const { return P == o.P && e == o.e; }
};
// Throws InputError unless K ⊆ P, e(p) ≥ 1 and N stays below 10^6.
void check_spec(const SolidRingSpec& s);

// Element of a named Cu-semiring. Zero is the default value. `soft` selects the
// (0,∞] part for GenSolid and Interval, and ∞ in ExtNat; E_k and {0,∞} store ∞ with
// soft = false since it is compact there.
struct Elem {
  bool soft = false;
  bool inf = false;
  Q value = 0;
  std::int64_t tau = 0;

  static Elem zero() { return {}; }
  static Elem compact(Q v, std::int64_t t = 0) { return Elem{false, false, std::move(v), t}; }
  static Elem soft_of(Q t) { return Elem{true, false, std::move(t), 0}; }
  static Elem soft_infinity() { return Elem{true, true, 0, 0}; }
  static Elem compact_infinity() { return Elem{false, true, 0, 0}; }

  bool is_zero() const { return !soft && !inf && value == 0 && tau == 0; }
  bool operator==(const Elem& o) const {
    return soft == o.soft && inf == o.inf && (inf || value == o.value) && tau == o.tau;
  }
};

struct NamedCu {
  enum class Kind { ExtNat, Elementary, PureInf, Interval, GenSolid };
  Kind kind = Kind::ExtNat;
  int k = 0;  // Elementary(k), k ≥ 1
  SolidRingSpec spec;

  static NamedCu extnat() { return {Kind::ExtNat, 0, {}}; }
  // elementary(0) is PureInf.
  static NamedCu elementary(int k);
  static NamedCu pureinf() { return {Kind::PureInf, 0, {}}; }
  static NamedCu interval() { return {Kind::Interval, 0, {}}; }
  static NamedCu gensolid(SolidRingSpec s);
  static NamedCu z() { return gensolid({}); }
  static NamedCu rq(Supernatural q);

  bool operator==(const NamedCu& o) const { return kind == o.kind && k == o.k && spec == o.spec; }
};

// extnat, elem(k), pureinf, interval, z, r(q), gensolid(P={..};K={..};e={p:e,..}).
NamedCu parse_named(std::string_view s);
std::string to_string(const NamedCu& s);

// Elements: "0", "3", "3/4", "inf", "3/4|1" (compact with torsion), "soft(3/2)", "soft(inf)".
Elem parse_elem(const NamedCu& s, std::string_view text);
std::string to_string(const NamedCu& s, const Elem& a);
bool contains(const NamedCu& s, const Elem& a);

Elem unit(const NamedCu& s);
Elem top(const NamedCu& s);  // ∞·1, the largest element
Elem add(const NamedCu& s, const Elem& a, const Elem& b);
Elem mul(const NamedCu& s, const Elem& a, const Elem& b);
Elem times(const NamedCu& s, std::int64_t n, const Elem& a);
bool leq(const NamedCu& s, const Elem& a, const Elem& b);
bool waybelow(const NamedCu& s, const Elem& a, const Elem& b);
bool is_compact(const NamedCu& s, const Elem& a);
// Tag-based softness.
bool is_soft(const NamedCu& s, const Elem& a);
// ∀a' in approximants(a, count) ∃n ≤ nmax: (n+1)a' ≤ na.
bool soft_by_definition(const NamedCu& s, const Elem& a, int count = 16, int nmax = 64);

// ≪-increasing sequence with supremum a.
std::vector<Elem> approximants(const NamedCu& s, const Elem& a, int count = 16);

bool has_z_multiplication(const NamedCu& s);
// The normalized functional λ with λ(1) = 1. Throws InputError on E_k (k ≥ 1) and {0,∞}.
ExtQ lambda(const NamedCu& s, const Elem& a);
bool has_functional(const NamedCu& s);
// 1′·a. Throws InputError without Z-multiplication.
Elem softify(const NamedCu& s, const Elem& a);
// Z-action z·a for z in Z = gensolid(P={};K={}).
Elem zmul(const NamedCu& s, const Elem& z, const Elem& a);
// 1′p for a nonzero compact p; GenSolid only (simple, stably finite, nonelementary, compact unit).
Elem predecessor(const NamedCu& s, const Elem& p);
// Nonzero b with 2b ≤ a. Nonelementary simple variants only.
Elem glimm_half(const NamedCu& s, const Elem& a);
// inf{k/n : nx ≤ ka}. Throws InputError on a = 0.
ExtQ stable_ratio(const NamedCu& s, const Elem& a, const Elem& x);

// Verdict whose witness consists of named elements plus scalars.
struct NamedVerdict {
  Status status = Status::Holds;
  std::string tag;
  std::vector<Elem> elems;
  std::vector<std::int64_t> scalars;
  std::string note;
  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
};

// Closed-form monoid properties: almost-unperforated, almost-divisible, idempotent,
// all-soft, q-divisible, q-unperforated, nearly-unperforated.
NamedVerdict named_property(const NamedCu& s, std::string_view prop, const Supernatural& q = {});
// Re-derives a Fails witness with element arithmetic.
bool replay_named_failure(const NamedCu& s, const NamedVerdict& v);

struct Over {
  enum class Kind { PureInf, Z, Rq, Interval };
  Kind kind = Kind::Z;
  Supernatural q;  // Rq only
};
// pureinf, z, r(q), interval.
Over parse_over(std::string_view s);
std::string to_string(const Over& o);

// Criterion for S to carry an `over`-multiplication.
NamedVerdict semimodule_test(const NamedCu& s, const Over& over);
Verdict semimodule_test(const FinPom& m, const Over& over);

// 1⊗a ≤ 1⊗b in over⊗S.
NamedVerdict tensor_unit_compare(const NamedCu& s, const Over& over, const Elem& a, const Elem& b);
Verdict tensor_unit_compare(const FinPom& m, const Over& over, int a, int b);

struct SolidityWitness {
  std::int64_t n = 1;
  Q k = 1;  // an integer
  // Optional certificate of n·(a⊗1) ≅ n·(1⊗a) in the compact tensor square.
  std::optional<GridCarrier> carrier;
  FormalSum lhs, rhs;
  Certificate certificate;
};
// Minimal (n, k) with na = k·1 for a compact a ≠ 0; throws InputError on soft input.
SolidityWitness solidity_witness(const NamedCu& s, const Elem& a, bool with_certificate = false);

struct SolidClass {
  enum class Kind { Zero, Elementary, ExtNat, Interval, Z, AlgebraicSolid, NotSolid };
  Kind kind = Kind::NotSolid;
  int k = 0;
  SolidRingSpec spec;
  std::string reason;
};
const char* to_string(SolidClass::Kind k);
SolidClass classify_solid(const NamedCu& s);
// Finite carrier with a declared multiplication table (n*n) and unit.
SolidClass classify_solid(const FinPom& m, const std::vector<int>& mul, int unit);
// Cu-semiring laws on a finite multiplication table.
Verdict validate_semiring(const FinPom& m, const std::vector<int>& mul, int unit);

struct InitialTerminal {
  NamedCu z = NamedCu::z();
  NamedCu q;
  Elem from_z(const Elem& x) const;  // Z → S
  Elem to_q(const Elem& x) const;    // S → Q
  NamedCu s;
};
InitialTerminal initial_terminal_maps(const NamedCu& s);
// Additive, multiplicative, monotone and unital on the given samples of Z and S.
Verdict check_initial_terminal(const InitialTerminal& it, const std::vector<Elem>& z_samples,
                               const std::vector<Elem>& s_samples);

// Stages E_{2^i} (i ≤ m) with connecting maps j ↦ 2j, ∞ ↦ ∞, read at stage m and
// compared with R_{2^∞} through j ↦ j/2^m, ∞ ↦ soft ∞.
struct LimitComparison {
  int m = 0;
  int elements = 0;
  bool bijective = false;        // onto {j/2^m : 0 ≤ j ≤ 2^m} ∪ {∞}
  bool order_exact = false;      // x ≤ y ⟺ φ(x) ≤ φ(y)
  bool maps_consistent = false;  // φ(φ_{i,m}(j)) = j/2^i
  bool additive = false;         // φ(x+y) = φ(x)+φ(y) whenever the sum is at most 1
  bool holds() const { return bijective && order_exact && maps_consistent && additive; }
};
// Throws InputError unless 0 ≤ m ≤ 12.
LimitComparison rq_limit_simplicial(int m);

struct Comparison {
  bool leq = false;
  bool waybelow = false;
  bool less_s = false;       // (1) ∃k: (k+1)a ≤ kb
  bool hat_less_s = false;   // (2)
  bool item3 = false;        // (3) a ∝^τ b and λ(a) < λ(b) whenever λ(b) = 1
  bool less_s_tau = false;   // (4)
  bool hat_leq = false;      // (5)
  bool prop = false;         // ∃n: a ≤ nb
  bool prop_tau = false;     // a ≤ ∞·b
  bool less_p = false;       // ka ≤ kb for all large k
  std::vector<std::string> violations;  // implications that failed
};
Comparison comparison_suite(const NamedCu& s, const Elem& a, const Elem& b);

}  // namespace cusg
