#pragma once

#include "cusg/finpom.hpp"

#include <string>
#include <vector>

namespace cusg {

// Pre-ordered monoid with an auxiliary relation ≺.
struct FinW {
  FinPrePom base;
  std::vector<std::uint8_t> aux;  // n*n, aux[a*n+b] = a ≺ b

  int n() const { return base.n; }
  bool prec(int a, int b) const { return aux[static_cast<std::size_t>(a) * base.n + b] != 0; }
};

// (M, ≤): the auxiliary relation equal to the order.
FinW with_order_as_aux(const FinPom& m);

enum class WAxiom { Aux, W1, W2, W3, W4, W5, W6, WeakCancellation };
const char* to_string(WAxiom a);

// Aux checks the auxiliary-relation conditions. Throws InputError on a malformed matrix.
Verdict validate_w(const FinW& w, WAxiom which);
// Aux, W1, W3 and W4: the requirements for mu and gamma.
Verdict validate_prew(const FinW& w);

struct WQuotient {
  FinW target;
  std::vector<int> class_of;
};
// Identifies a and b when a^≺ = b^≺. Throws InputError unless the input is a PreW-semigroup.
WQuotient mu(const FinW& w);

// Additive, zero-preserving, order- and ≺-preserving map satisfying the continuity axiom M.
bool is_w_morphism(const FinW& s, const FinW& t, const std::vector<int>& f);

struct MuUniversality {
  int morphisms = 0;   // W-morphisms found into the target
  int factored = 0;    // those factoring uniquely through mu
};
// Enumerates every map into the (small, W2) target and checks factorization through mu.
MuUniversality mu_universal_check(const FinW& w, const FinW& target);

struct Gamma {
  FinPom pom;
  // Round ideal per element of pom, as a member vector over the input carrier.
  std::vector<std::vector<std::uint8_t>> ideals;
  std::vector<int> alpha;  // a ↦ round ideal a^≺
};
// Round ideals of a finite PreW-semigroup are the sets e^≺ with e ≺ e.
Gamma gamma(const FinW& w);

struct CuificationCheck {
  bool embedding = false;  // α(a') ≪ α(a) ⇒ a' ≺ a
  bool dense = false;      // b' ≪ b ⇒ ∃a: b' ≤ α(a) ≤ b
  bool order_embedding = false;
};
CuificationCheck check_cuification(const FinW& w, const Gamma& g);

FinPom cu_of_pom(const FinPom& m);

struct LimitStage {
  FinPom pom;                          // the stage-k carrier
  std::vector<std::vector<int>> to_k;  // φ_{i,k} for i ≤ k
  int k = 0;
};
// maps[i] : stages[i] → stages[i+1]. Throws InputError on inconsistent maps.
LimitStage inductive_limit_stage(const std::vector<FinPom>& stages,
                                 const std::vector<std::vector<int>>& maps, int k);

}  // namespace cusg
