#pragma once

#include "cusg/finpom.hpp"
#include "cusg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cusg {

struct IdealSet {
  std::vector<std::uint8_t> members;
  std::vector<int> generators;  // every a with Idl(a) equal to this ideal
  bool contains(int a) const { return members[a] != 0; }
  int size() const;
};

// Idl(a) = {b : b ≤ k·a for some k}.
std::vector<std::uint8_t> ideal_generated(const FinPom& m, int a);
bool is_ideal(const FinPom& m, const std::vector<std::uint8_t>& members);
// All ideals. On a finite carrier each ideal is Idl(a) for a = sum of its members.
std::vector<IdealSet> ideals(const FinPom& m);

struct LatF {
  FinPom pom;                   // join as addition, inclusion as order
  std::vector<IdealSet> ideals;  // pom element i is ideals[i]
  std::vector<int> idl_of;       // a ↦ index of Idl(a)
};
LatF latf(const FinPom& m);

struct QuotientMap {
  FinPom source;
  FinPom target;
  std::vector<int> class_of;
};
// a ≤_I b iff a ≤ b + c for some c ∈ I. Throws InputError on a non-ideal.
QuotientMap quotient(const FinPom& m, const std::vector<std::uint8_t>& ideal);

// a is soft iff ∀a' ≤ a ∃n ≤ K: (n+1)a' ≤ na.
std::vector<std::uint8_t> soft_elements(const FinPom& m,
                                        std::optional<std::int64_t> bound = std::nullopt);

struct SimpleClass {
  enum class Kind { Zero, Elementary, NotSimpleOrAxiomFail };
  Kind kind = Kind::Zero;
  int k = 0;                 // for Elementary
  std::vector<int> iso;      // pom → E_k (or {0})
  std::string reason;
};
SimpleClass classify_simple(const FinPom& m);

struct FunctionalSearchResult {
  bool exists = false;
  // Value per element; nullopt marks ∞ (outside Idl(normalization)).
  std::vector<std::optional<Q>> values;
  int normalization = 0;
  // Verdict of the criterion (ma ≤ na iff m ≤ n, plus the boundedness clause).
  bool criterion = false;
  // Verdict of exact rational feasibility on Idl(normalization).
  bool lp_feasible = false;
  std::string note;
};
FunctionalSearchResult functional_exists(const FinPom& m, int at);

// Exact feasibility of Σ coeffs·x ≤ rhs (or = rhs) by Fourier–Motzkin elimination.
struct LinearConstraint {
  std::vector<Q> coeffs;
  Q rhs = 0;
  bool equality = false;
};
// Returns a solution if the system is feasible.
std::optional<std::vector<Q>> fm_solve(int nvars, std::vector<LinearConstraint> system);

struct StateBounds {
  ExtQ p, p_prime, r, r_prime;
  bool statement1 = false;            // p = p' ≤ r and r' ≤ r
  bool statement2_applicable = false; // x ≤ l·y for some y ∈ N
  bool statement2 = false;            // p < ∞ and r = r'
};
// Quantities of the state-extension bounds, computed by exhaustive search with multipliers ≤ bound.
// f is indexed by element and read only on the submonoid; throws if f is not a state there.
StateBounds state_extension_bounds(const FinPom& m, const std::vector<std::uint8_t>& submonoid,
                                   const std::vector<Q>& f, int x, std::int64_t bound);

}  // namespace cusg
