#pragma once

#include "cusg/finpom.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cusg {

enum class Prop {
  Conical,
  Cancellative,
  WeaklyCancellative,
  RieszRefinement,
  RieszDecomposition,
  RieszInterpolation,
  Unperforated,
  NUnperforated,
  NearlyUnperforated,
  AlmostUnperforated,
  Divisible,
  NDivisible,
  AlmostDivisible,
  WeaklyDivisible,
  Simple,
  StablyFinite,
  Elementary,
  AlgebraicallyOrdered,
  O5,
  O5Prime,
  O6,
  Idempotent,
  WeaklySeparative,
};

struct Property {
  Prop kind = Prop::Conical;
  int param = 0;  // n for n-unperforated(n) / n-divisible(n)
};

// Accepts the lowercase names used by the CLI, e.g. "riesz-refinement", "o5",
// "n-divisible(3)". Throws InputError on unknown names.
Property parse_property(std::string_view name);
std::string property_name(const Property& p);
std::vector<Property> all_properties();

// Multiplier bound K used for k-quantifiers. With no user bound this is
// max(2n², preperiod + lcm of periods), which makes every check exact; a user bound B gives 2B.
std::int64_t multiplier_bound(const FinPom& m, std::optional<std::int64_t> bound = std::nullopt);

// On finite carriers ≪ coincides with ≤, which is how O5, O6 and weak cancellation are read.
Verdict check_property(const FinPom& m, const Property& p,
                       std::optional<std::int64_t> bound = std::nullopt);

// Re-derives a Fails verdict from the raw definition. True iff the witness confirms failure.
bool replay_failure(const FinPom& m, const Property& p, const Verdict& v);

// a ≤_p b: ka ≤ kb for all sufficiently large k (decided on the exact periodic window).
bool less_p(const FinPom& m, int a, int b);

// a <_s b together with the equivalent formulations of stable domination.
struct StableDomination {
  Verdict verdict;       // Holds iff ∃k ≤ K: (k+1)a ≤ kb; witness (k)
  bool item1 = false;    // ∃k: (k+1)a ≤ kb
  bool item2 = false;    // ∃k₀ ∀k ≥ k₀: (k+1)a ≤ kb
  bool item3 = false;    // ∀n ∃k: (k+n)a ≤ kb
  bool item4 = false;    // ∀n ∃k₀ ∀k ≥ k₀: (k+n)a ≤ kb
  bool agree = false;
};
StableDomination stable_domination(const FinPom& m, int a, int b,
                                   std::optional<std::int64_t> bound = std::nullopt);

struct FinGroup {
  int n = 0;
  std::vector<int> add;
  int zero = 0;
  std::vector<int> neg;
  int sum(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
};

struct Grothendieck {
  FinGroup group;
  std::vector<int> delta;  // M → Gr(M)
  bool injective = false;
};

// Gr(M) as pairs (a,b) modulo (a,b) ~ (c,d) iff a+d+e = b+c+e for some e.
Grothendieck grothendieck(const FinPom& m);

}  // namespace cusg
