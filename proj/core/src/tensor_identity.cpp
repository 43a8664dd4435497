#include "cusg/tensor_identity.hpp"

namespace cusg {

namespace {

using Kind = NamedCu::Kind;

bool torsion_free_solid(const NamedCu& s) { return s.kind == Kind::GenSolid && s.spec.e.empty(); }

IdentityResult one_sided(const NamedCu& a, const NamedCu& b) {
  if (a.kind == Kind::ExtNat) return {b, "extnat is the unit"};
  // Every named variant is simple, so Lat_f(b) = {0,∞}.
  if (a.kind == Kind::PureInf) return {NamedCu::pureinf(), "pureinf ⊗ S = Lat_f(S) = {0,∞} for simple S"};
  if (a.kind == Kind::Interval) {
    if (b.kind == Kind::Interval) return {NamedCu::interval(), "interval is solid"};
    if (torsion_free_solid(b)) return {NamedCu::interval(), "[0,∞] ⊗ R_q = (R_2∞ ⊗ R_q)_soft = [0,∞]"};
  }
  return {};
}

}  // namespace

IdentityResult cu_tensor_identity(const NamedCu& lhs, const NamedCu& rhs) {
  if (auto r = one_sided(lhs, rhs); r.result) return r;
  if (auto r = one_sided(rhs, lhs); r.result) return r;
  if (torsion_free_solid(lhs) && torsion_free_solid(rhs)) {
    SolidRingSpec s;
    s.P = supernatural_union(lhs.spec.P, rhs.spec.P);
    return {NamedCu::gensolid(s), "R_q ⊗ R_r = R_qr (Z when both are Z)"};
  }
  return {std::nullopt, "no closed-form identity for " + to_string(lhs) + " ⊗ " + to_string(rhs)};
}

}  // namespace cusg
