#include "cusg/cu_finite.hpp"

#include "cusg/error.hpp"
#include "cusg/properties.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cusg {

int IdealSet::size() const { return static_cast<int>(std::count(members.begin(), members.end(), 1)); }

std::vector<std::uint8_t> ideal_generated(const FinPom& m, int a) {
  std::vector<std::uint8_t> mem(m.n, 0);
  // The multiples of a are the orbit of a, so a visited-set walk enumerates them all.
  std::vector<char> seen(m.n, 0);
  int x = m.zero;
  while (!seen[x]) {
    seen[x] = 1;
    for (int b = 0; b < m.n; ++b)
      if (m.le(b, x)) mem[b] = 1;
    x = m.sum(x, a);
  }
  return mem;
}

bool is_ideal(const FinPom& m, const std::vector<std::uint8_t>& mem) {
  if (static_cast<int>(mem.size()) != m.n || !mem[m.zero]) return false;
  for (int a = 0; a < m.n; ++a) {
    if (!mem[a]) continue;
    for (int b = 0; b < m.n; ++b) {
      if (mem[b] && !mem[m.sum(a, b)]) return false;
      if (m.le(b, a) && !mem[b]) return false;
    }
  }
  return true;
}

std::vector<IdealSet> ideals(const FinPom& m) {
  check_shape(m);
  std::map<std::vector<std::uint8_t>, int> index;
  std::vector<IdealSet> out;
  for (int a = 0; a < m.n; ++a) {
    auto mem = ideal_generated(m, a);
    auto [it, fresh] = index.emplace(mem, static_cast<int>(out.size()));
    if (fresh) out.push_back(IdealSet{std::move(mem), {}});
    out[it->second].generators.push_back(a);
  }
  std::stable_sort(out.begin(), out.end(), [](const IdealSet& x, const IdealSet& y) { return x.size() < y.size(); });
  return out;
}

LatF latf(const FinPom& m) {
  LatF r;
  r.ideals = ideals(m);
  r.idl_of.assign(m.n, -1);
  for (int i = 0; i < static_cast<int>(r.ideals.size()); ++i)
    for (int g : r.ideals[i].generators) r.idl_of[g] = i;
  const int k = static_cast<int>(r.ideals.size());
  r.pom.n = k;
  r.pom.add.resize(static_cast<std::size_t>(k) * k);
  r.pom.leq.resize(static_cast<std::size_t>(k) * k);
  r.pom.zero = r.idl_of[m.zero];
  for (int i = 0; i < k; ++i) {
    r.pom.names.push_back("Idl(" + m.name(r.ideals[i].generators.front()) + ")");
    for (int j = 0; j < k; ++j) {
      int gi = r.ideals[i].generators.front(), gj = r.ideals[j].generators.front();
      r.pom.add[static_cast<std::size_t>(i) * k + j] = r.idl_of[m.sum(gi, gj)];
      bool incl = true;
      for (int a = 0; a < m.n && incl; ++a)
        if (r.ideals[i].members[a] && !r.ideals[j].members[a]) incl = false;
      r.pom.leq[static_cast<std::size_t>(i) * k + j] = incl;
    }
  }
  return r;
}

QuotientMap quotient(const FinPom& m, const std::vector<std::uint8_t>& ideal) {
  check_shape(m);
  if (!is_ideal(m, ideal)) throw InputError("quotient: member set is not an ideal");
  const int n = m.n;
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ideal[c] && m.le(a, m.sum(b, c))) {
          rel[static_cast<std::size_t>(a) * n + b] = 1;
          break;
        }
  FinPrePom pre = m;
  pre.leq = rel;
  QuotientMap q;
  q.source = m;
  q.target = antisymmetrize(pre, &q.class_of);
  return q;
}

std::vector<std::uint8_t> soft_elements(const FinPom& m, std::optional<std::int64_t> bound) {
  check_shape(m);
  const std::int64_t K = multiplier_bound(m, bound);
  std::vector<std::uint8_t> soft(m.n, 0);
  for (int a = 0; a < m.n; ++a) {
    bool all = true;
    for (int ap = 0; ap < m.n && all; ++ap) {
      if (!m.le(ap, a)) continue;
      bool found = false;
      for (std::int64_t k = 0; k <= K && !found; ++k)
        found = m.le(m.times(k + 1, ap), m.times(k, a));
      all = found;
    }
    soft[a] = all;
  }
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (soft[a] && soft[b] && !soft[m.sum(a, b)])
        throw std::logic_error("soft elements are not closed under addition");
  return soft;
}

SimpleClass classify_simple(const FinPom& m) {
  check_shape(m);
  SimpleClass r;
  if (m.n == 1) {
    r.kind = SimpleClass::Kind::Zero;
    r.iso = {0};
    return r;
  }
  r.kind = SimpleClass::Kind::NotSimpleOrAxiomFail;
  if (!check_property(m, {Prop::Simple}).holds()) {
    r.reason = "not simple";
    return r;
  }
  if (!check_property(m, {Prop::O5}).holds()) {
    r.reason = "O5 fails";
    return r;
  }
  if (!check_property(m, {Prop::O6}).holds()) {
    r.reason = "O6 fails";
    return r;
  }
  auto iso = find_isomorphism(m, make_elementary(m.n - 2));
  if (!iso) {
    r.reason = "simple with O5 and O6 but not isomorphic to E_" + std::to_string(m.n - 2);
    return r;
  }
  r.kind = SimpleClass::Kind::Elementary;
  r.k = m.n - 2;
  r.iso = std::move(*iso);
  return r;
}

namespace {

void normalize(LinearConstraint& c) {
  Q scale = 0;
  for (const Q& x : c.coeffs)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0) return;
  for (Q& x : c.coeffs) x /= scale;
  c.rhs /= scale;
}

bool trivially_ok(const LinearConstraint& c) { return c.equality ? c.rhs == 0 : c.rhs >= 0; }

bool all_zero(const LinearConstraint& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Q& x) { return x == 0; });
}

}  // namespace

std::optional<std::vector<Q>> fm_solve(int nvars, std::vector<LinearConstraint> sys) {
  for (auto& c : sys)
    if (static_cast<int>(c.coeffs.size()) != nvars) throw InputError("constraint has wrong arity");

  // Equalities first: x_v = (rhs - Σ others) / c_v.
  struct Subst {
    int var;
    LinearConstraint eq;
  };
  std::vector<Subst> substs;
  for (;;) {
    auto it = std::find_if(sys.begin(), sys.end(), [](const LinearConstraint& c) { return c.equality && !all_zero(c); });
    if (it == sys.end()) break;
    LinearConstraint eq = *it;
    sys.erase(it);
    int v = 0;
    while (eq.coeffs[v] == 0) ++v;
    for (auto& c : sys) {
      if (c.coeffs[v] == 0) continue;
      Q f = c.coeffs[v] / eq.coeffs[v];
      for (int i = 0; i < nvars; ++i) c.coeffs[i] -= f * eq.coeffs[i];
      c.rhs -= f * eq.rhs;
    }
    substs.push_back({v, eq});
  }
  std::vector<LinearConstraint> ineqs;
  for (auto& c : sys) {
    if (all_zero(c)) {
      if (!trivially_ok(c)) return std::nullopt;
      continue;
    }
    normalize(c);
    ineqs.push_back(c);
  }

  std::vector<char> pinned(nvars, 0);
  for (auto& s : substs) pinned[s.var] = 1;
  std::vector<int> order;
  std::vector<std::vector<LinearConstraint>> history;
  for (int v = 0; v < nvars; ++v) {
    if (pinned[v]) continue;
    std::vector<LinearConstraint> pos, neg, rest;
    for (auto& c : ineqs) {
      if (c.coeffs[v] > 0) pos.push_back(c);
      else if (c.coeffs[v] < 0) neg.push_back(c);
      else rest.push_back(c);
    }
    history.push_back(ineqs);
    order.push_back(v);
    std::map<std::pair<std::vector<Q>, Q>, char> seen;
    for (auto& c : rest) seen.emplace(std::make_pair(c.coeffs, c.rhs), 1);
    for (auto& p : pos)
      for (auto& q : neg) {
        LinearConstraint c;
        c.coeffs.resize(nvars);
        Q fp = -q.coeffs[v], fq = p.coeffs[v];
        for (int i = 0; i < nvars; ++i) c.coeffs[i] = fp * p.coeffs[i] + fq * q.coeffs[i];
        c.rhs = fp * p.rhs + fq * q.rhs;
        c.coeffs[v] = 0;
        if (all_zero(c)) {
          if (!trivially_ok(c)) return std::nullopt;
          continue;
        }
        normalize(c);
        if (seen.emplace(std::make_pair(c.coeffs, c.rhs), 1).second) rest.push_back(c);
      }
    ineqs = std::move(rest);
    if (ineqs.size() > 200000) throw std::runtime_error("Fourier-Motzkin system too large");
  }
  for (auto& c : ineqs)
    if (!trivially_ok(c)) return std::nullopt;

  std::vector<Q> x(nvars, 0);
  for (int s = static_cast<int>(order.size()) - 1; s >= 0; --s) {
    int v = order[s];
    std::optional<Q> lo, hi;
    for (auto& c : history[s]) {
      if (c.coeffs[v] == 0) continue;
      Q rest = c.rhs;
      for (int i = 0; i < nvars; ++i)
        if (i != v) rest -= c.coeffs[i] * x[i];
      Q bound = rest / c.coeffs[v];
      if (c.coeffs[v] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    x[v] = lo ? *lo : (hi ? std::min<Q>(*hi, 0) : Q(0));
  }
  for (int s = static_cast<int>(substs.size()) - 1; s >= 0; --s) {
    const auto& eq = substs[s].eq;
    int v = substs[s].var;
    Q val = eq.rhs;
    for (int i = 0; i < nvars; ++i)
      if (i != v) val -= eq.coeffs[i] * x[i];
    x[v] = val / eq.coeffs[v];
  }
  return x;
}

FunctionalSearchResult functional_exists(const FinPom& m, int at) {
  check_shape(m);
  if (at < 0 || at >= m.n) throw InputError("normalization element out of range");
  if (at == m.zero) throw InputError("cannot normalize a functional at zero");
  const std::int64_t K = multiplier_bound(m, std::nullopt);
  FunctionalSearchResult r;
  r.normalization = at;

  bool strict_multiples = true;
  for (std::int64_t i = 0; i <= K && strict_multiples; ++i)
    for (std::int64_t j = 0; j <= K; ++j)
      if (m.le(m.times(i, at), m.times(j, at)) != (i <= j)) {
        strict_multiples = false;
        r.note = std::to_string(i) + "·a ≤ " + std::to_string(j) + "·a";
        break;
      }
  bool bounded_piece = false;
  if (strict_multiples) {
    for (std::int64_t l = 0; l <= K && !bounded_piece; ++l)
      for (int x = 0; x < m.n && !bounded_piece; ++x) {
        if (!m.le(x, m.times(l, at))) continue;
        for (std::int64_t L = 1; L <= K && !bounded_piece; ++L) {
          bool never = true;
          for (std::int64_t k = 1; k <= K && never; ++k) never = !m.le(m.times(k * L, x), m.times(k, at));
          bounded_piece = never;
        }
      }
  }
  r.criterion = strict_multiples && bounded_piece;

  auto idl = ideal_generated(m, at);
  std::vector<int> vars;
  std::vector<int> var_of(m.n, -1);
  for (int a = 0; a < m.n; ++a)
    if (idl[a]) {
      var_of[a] = static_cast<int>(vars.size());
      vars.push_back(a);
    }
  const int nv = static_cast<int>(vars.size());
  std::vector<LinearConstraint> sys;
  auto blank = [&] {
    LinearConstraint c;
    c.coeffs.assign(nv, 0);
    return c;
  };
  for (int a : vars)
    for (int b : vars) {
      if (b < a) continue;
      LinearConstraint c = blank();
      c.equality = true;
      c.coeffs[var_of[a]] += 1;
      c.coeffs[var_of[b]] += 1;
      c.coeffs[var_of[m.sum(a, b)]] -= 1;
      sys.push_back(c);
      if (a != b && m.le(a, b)) {
        LinearConstraint d = blank();
        d.coeffs[var_of[a]] = 1;
        d.coeffs[var_of[b]] = -1;
        sys.push_back(d);
      }
      if (a != b && m.le(b, a)) {
        LinearConstraint d = blank();
        d.coeffs[var_of[b]] = 1;
        d.coeffs[var_of[a]] = -1;
        sys.push_back(d);
      }
    }
  for (int a : vars) {
    LinearConstraint c = blank();
    c.coeffs[var_of[a]] = -1;
    sys.push_back(c);
  }
  LinearConstraint norm = blank();
  norm.equality = true;
  norm.coeffs[var_of[at]] = 1;
  norm.rhs = 1;
  sys.push_back(norm);
  auto sol = fm_solve(nv, sys);
  r.lp_feasible = sol.has_value();
  r.exists = r.lp_feasible;
  if (sol) {
    r.values.assign(m.n, std::nullopt);
    for (int a : vars) r.values[a] = (*sol)[var_of[a]];
  }
  if (r.criterion != r.lp_feasible)
    throw std::logic_error("functional criterion and linear feasibility disagree");
  return r;
}

StateBounds state_extension_bounds(const FinPom& m, const std::vector<std::uint8_t>& N,
                                   const std::vector<Q>& f, int x, std::int64_t bound) {
  check_shape(m);
  if (bound < 1) throw InputError("bound must be at least 1");
  if (x < 0 || x >= m.n) throw InputError("element out of range");
  if (static_cast<int>(N.size()) != m.n || static_cast<int>(f.size()) != m.n)
    throw InputError("submonoid or state has wrong length");
  if (!N[m.zero]) throw InputError("submonoid must contain zero");
  std::vector<int> ns;
  for (int a = 0; a < m.n; ++a)
    if (N[a]) ns.push_back(a);
  for (int a : ns) {
    if (f[a] < 0) throw InputError("state takes a negative value");
    for (int b : ns) {
      if (!N[m.sum(a, b)]) throw InputError("member set is not a submonoid");
      if (f[m.sum(a, b)] != f[a] + f[b]) throw InputError("f is not additive on the submonoid");
      if (m.le(a, b) && f[a] > f[b]) throw InputError("f is not order-preserving on the submonoid");
    }
  }
  if (f[m.zero] != 0) throw InputError("f(0) must be 0");

  StateBounds r;
  std::optional<Q> p, pp, rr, rp;
  auto sup = [](std::optional<Q>& acc, const Q& v) {
    if (!acc || v > *acc) acc = v;
  };
  auto inf = [](std::optional<Q>& acc, const Q& v) {
    if (!acc || v < *acc) acc = v;
  };
  for (int y1 : ns)
    for (int y2 : ns)
      for (std::int64_t mm = 1; mm <= bound; ++mm) {
        Q val = Q(f[y1] - f[y2]) / mm;
        if (m.le(y1, m.sum(y2, m.times(mm, x)))) sup(p, val);
        for (std::int64_t mb = 0; mb <= bound; ++mb)
          if (m.le(m.sum(y1, m.times(mb, x)), m.sum(y2, m.times(mm + mb, x)))) {
            sup(pp, val);
            break;
          }
        Q rv = Q(f[y2] - f[y1]) / mm;
        // Here y1, y2 play the roles of z1, z2.
        if (m.le(m.sum(y1, m.times(mm, x)), y2)) inf(rr, rv);
        for (std::int64_t nb = 0; nb <= bound; ++nb)
          if (m.le(m.sum(y1, m.times(mm + nb, x)), m.sum(y2, m.times(nb, x)))) {
            inf(rp, rv);
            break;
          }
      }
  // p and p' always see y1 = y2 = 0; r and r' are +∞ over an empty set.
  r.p = ExtQ::of(p.value_or(0));
  r.p_prime = ExtQ::of(pp.value_or(0));
  r.r = rr ? ExtQ::of(*rr) : ExtQ::infinity();
  r.r_prime = rp ? ExtQ::of(*rp) : ExtQ::infinity();
  r.statement1 = r.p == r.p_prime && r.p <= r.r && r.r_prime <= r.r && r.p >= ExtQ::of(0);
  for (int y : ns)
    for (std::int64_t l = 0; l <= bound && !r.statement2_applicable; ++l)
      if (m.le(x, m.times(l, y))) r.statement2_applicable = true;
  r.statement2 = !r.statement2_applicable || (!r.p.inf && r.r == r.r_prime);
  return r;
}

}  // namespace cusg
