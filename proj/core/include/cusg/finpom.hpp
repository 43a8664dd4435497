#pragma once

#include "cusg/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusg {

// Finite positively ordered monoid given by its Cayley table and order matrix.
// The same struct carries a pre-order (FinPrePom) when antisymmetry is not required.
struct FinPom {
  int n = 0;
  std::vector<int> add;            // n*n
  int zero = 0;
  std::vector<std::uint8_t> leq;   // n*n, leq[a*n+b] = a ≤ b
  std::vector<std::string> names;  // empty or size n

  int sum(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * n + b] != 0; }
  bool eqv(int a, int b) const { return le(a, b) && le(b, a); }
  // k·a for k ≥ 0.
  int times(std::int64_t k, int a) const;
  std::string name(int a) const;
  // Index for a name, or -1.
  int index_of(const std::string& name) const;
};

using FinPrePom = FinPom;

enum class OrderKind { Partial, Pre };

// Throws InputError for wrong dimensions, out-of-range entries, or an empty carrier.
void check_shape(const FinPom& m);
// Holds iff every monoid and order axiom holds; Fails names the first violated one.
Verdict validate(const FinPom& m, OrderKind kind = OrderKind::Partial);
// Only the addition table is checked.
Verdict validate_monoid(const FinPom& m);

// leq(a,b) iff ∃x: a+x = b. The input order is ignored.
FinPrePom algebraic_order(const FinPom& m);
// Quotient of a pre-ordered monoid by a ≤ b ≤ a. class_of receives the projection.
FinPom antisymmetrize(const FinPrePom& m, std::vector<int>* class_of = nullptr);

// Standard examples.
FinPom make_trivial();
// E_k = {0,1,...,k,∞}; E_0 = {0,∞}.
FinPom make_elementary(int k);
FinPom make_pureinf();
// Monoid Z/m with the algebraic (pre-)order, used for Grothendieck examples.
FinPom make_cyclic_group(int m);
// Product monoid with the coordinatewise order.
FinPom product(const FinPom& a, const FinPom& b);

// Zero-preserving bijection f: a → b respecting add and leq, if one exists.
std::optional<std::vector<int>> find_isomorphism(const FinPom& a, const FinPom& b);
bool is_isomorphism(const FinPom& a, const FinPom& b, const std::vector<int>& f);
bool is_morphism(const FinPom& a, const FinPom& b, const std::vector<int>& f);

// Period data of k ↦ k·a.
struct Orbit {
  int preperiod = 0;
  int period = 1;
};
Orbit orbit(const FinPom& m, int a);

}  // namespace cusg
