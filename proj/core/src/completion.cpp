#include "cusg/completion.hpp"

#include "cusg/error.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cusg {

namespace {

void check_w_shape(const FinW& w) {
  check_shape(w.base);
  if (w.aux.size() != static_cast<std::size_t>(w.n()) * w.n())
    throw InputError("auxiliary relation has wrong dimensions");
}

std::vector<std::uint8_t> downset(const FinW& w, int a) {
  std::vector<std::uint8_t> d(w.n(), 0);
  for (int x = 0; x < w.n(); ++x) d[x] = w.prec(x, a);
  return d;
}

bool subset(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

FinW with_order_as_aux(const FinPom& m) { return FinW{m, m.leq}; }

const char* to_string(WAxiom a) {
  switch (a) {
    case WAxiom::Aux: return "aux";
    case WAxiom::W1: return "W1";
    case WAxiom::W2: return "W2";
    case WAxiom::W3: return "W3";
    case WAxiom::W4: return "W4";
    case WAxiom::W5: return "W5";
    case WAxiom::W6: return "W6";
    case WAxiom::WeakCancellation: return "weak-cancellation";
  }
  return "?";
}

Verdict validate_w(const FinW& w, WAxiom which) {
  check_w_shape(w);
  const FinPom& m = w.base;
  const int n = w.n();
  const std::string tag = to_string(which);
  auto fail = [&](std::vector<std::int64_t> wit) { return make_fails(tag, std::move(wit)); };
  switch (which) {
    case WAxiom::Aux:
      for (int a = 0; a < n; ++a) {
        if (!w.prec(m.zero, a)) return make_fails("aux-zero", {a});
        for (int b = 0; b < n; ++b)
          if (w.prec(a, b) && !m.le(a, b)) return make_fails("aux-below-order", {a, b});
      }
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!w.prec(b, c)) continue;
          for (int a = 0; a < n; ++a) {
            if (!m.le(a, b)) continue;
            for (int d = 0; d < n; ++d)
              if (m.le(c, d) && !w.prec(a, d)) return make_fails("aux-composition", {a, b, c, d});
          }
        }
      return make_holds();
    case WAxiom::W1:
      for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int e = 0; e < n && !found; ++e) {
          if (!w.prec(e, a)) continue;
          found = true;
          for (int b = 0; b < n && found; ++b)
            if (w.prec(b, a) && !w.prec(b, e)) found = false;
        }
        if (!found) return fail({a});
      }
      return make_holds();
    case WAxiom::W2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!m.le(a, b) && subset(downset(w, a), downset(w, b))) return fail({a, b});
      return make_holds();
    case WAxiom::W3:
      for (int ap = 0; ap < n; ++ap)
        for (int a = 0; a < n; ++a) {
          if (!w.prec(ap, a)) continue;
          for (int bp = 0; bp < n; ++bp)
            for (int b = 0; b < n; ++b)
              if (w.prec(bp, b) && !w.prec(m.sum(ap, bp), m.sum(a, b))) return fail({ap, a, bp, b});
        }
      return make_holds();
    case WAxiom::W4:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (!w.prec(a, m.sum(b, c))) continue;
            bool found = false;
            for (int bp = 0; bp < n && !found; ++bp) {
              if (!w.prec(bp, b)) continue;
              for (int cp = 0; cp < n && !found; ++cp) found = w.prec(cp, c) && w.prec(a, m.sum(bp, cp));
            }
            if (!found) return fail({a, b, c});
          }
      return make_holds();
    case WAxiom::W5:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (!w.prec(m.sum(a, b), c)) continue;
            for (int ap = 0; ap < n; ++ap) {
              if (!w.prec(ap, a)) continue;
              for (int bp = 0; bp < n; ++bp) {
                if (!w.prec(bp, b)) continue;
                for (int ct = 0; ct < n; ++ct) {
                  if (!w.prec(c, ct)) continue;
                  bool found = false;
                  for (int xp = 0; xp < n && !found; ++xp) {
                    if (!w.prec(bp, xp) || !w.prec(c, m.sum(a, xp))) continue;
                    for (int x = 0; x < n && !found; ++x) found = w.prec(xp, x) && w.prec(m.sum(ap, x), ct);
                  }
                  if (!found) return fail({ap, a, bp, b, c, ct});
                }
              }
            }
          }
      return make_holds();
    case WAxiom::W6:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (!w.prec(a, m.sum(b, c))) continue;
            std::vector<int> es, fs;
            for (int e = 0; e < n; ++e) {
              if (w.prec(e, a) && w.prec(e, b)) es.push_back(e);
              if (w.prec(e, a) && w.prec(e, c)) fs.push_back(e);
            }
            for (int ap = 0; ap < n; ++ap) {
              if (!w.prec(ap, a)) continue;
              bool found = false;
              for (int e : es) {
                for (int f : fs)
                  if (w.prec(ap, m.sum(e, f))) {
                    found = true;
                    break;
                  }
                if (found) break;
              }
              if (!found) return fail({ap, a, b, c});
            }
          }
      return make_holds();
    case WAxiom::WeakCancellation:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (w.prec(a, b)) continue;
          for (int x = 0; x < n; ++x)
            if (w.prec(m.sum(a, x), m.sum(b, x))) return fail({a, b, x});
        }
      return make_holds();
  }
  return make_holds();
}

Verdict validate_prew(const FinW& w) {
  Verdict base = validate(w.base, OrderKind::Pre);
  if (!base.holds()) return base;
  for (WAxiom ax : {WAxiom::Aux, WAxiom::W1, WAxiom::W3, WAxiom::W4}) {
    Verdict v = validate_w(w, ax);
    if (!v.holds()) return v;
  }
  return make_holds();
}

namespace {

void require_prew(const FinW& w, const char* op) {
  Verdict v = validate_prew(w);
  if (!v.holds()) throw InputError(std::string(op) + ": input is not a PreW-semigroup (" + v.tag + " fails)");
}

}  // namespace

WQuotient mu(const FinW& w) {
  require_prew(w, "mu");
  const int n = w.n();
  const FinPom& m = w.base;
  std::vector<std::vector<std::uint8_t>> down(n);
  for (int a = 0; a < n; ++a) down[a] = downset(w, a);
  std::vector<int> cls(n, -1);
  std::vector<int> rep;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = static_cast<int>(rep.size());
    for (int b = a + 1; b < n; ++b)
      if (cls[b] < 0 && down[a] == down[b]) cls[b] = cls[a];
    rep.push_back(a);
  }
  const int k = static_cast<int>(rep.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cls[m.sum(a, b)] != cls[m.sum(rep[cls[a]], rep[cls[b]])])
        throw std::logic_error("mu: downset equivalence is not a congruence");
  FinW t;
  t.base.n = k;
  t.base.zero = cls[m.zero];
  t.base.add.resize(static_cast<std::size_t>(k) * k);
  t.base.leq.resize(static_cast<std::size_t>(k) * k);
  t.aux.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    t.base.names.push_back(m.name(rep[i]));
    for (int j = 0; j < k; ++j) {
      t.base.add[static_cast<std::size_t>(i) * k + j] = cls[m.sum(rep[i], rep[j])];
      t.base.leq[static_cast<std::size_t>(i) * k + j] = subset(down[rep[i]], down[rep[j]]);
    }
  }
  // [a] ≺ [b] iff [a] ≤ [b'] for some b' ≺ b.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool r = false;
      for (int bp = 0; bp < n && !r; ++bp) r = w.prec(bp, rep[j]) && subset(down[rep[i]], down[bp]);
      t.aux[static_cast<std::size_t>(i) * k + j] = r;
    }
  return WQuotient{std::move(t), std::move(cls)};
}

bool is_w_morphism(const FinW& s, const FinW& t, const std::vector<int>& f) {
  if (!is_morphism(s.base, t.base, f)) return false;
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b)
      if (s.prec(a, b) && !t.prec(f[a], f[b])) return false;
  for (int a = 0; a < s.n(); ++a)
    for (int y = 0; y < t.n(); ++y) {
      if (!t.prec(y, f[a])) continue;
      bool found = false;
      for (int ap = 0; ap < s.n() && !found; ++ap) found = s.prec(ap, a) && t.base.le(y, f[ap]);
      if (!found) return false;
    }
  return true;
}

MuUniversality mu_universal_check(const FinW& w, const FinW& target) {
  WQuotient q = mu(w);
  MuUniversality r;
  const int n = w.n(), tn = target.n();
  std::vector<int> f(n, 0);
  for (;;) {
    if (is_w_morphism(w, target, f)) {
      ++r.morphisms;
      std::vector<int> g(q.target.n(), -1);
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        int c = q.class_of[a];
        if (g[c] >= 0 && g[c] != f[a]) ok = false;
        g[c] = f[a];
      }
      if (ok && is_w_morphism(q.target, target, g)) ++r.factored;
    }
    int i = 0;
    while (i < n && ++f[i] == tn) f[i++] = 0;
    if (i == n) break;
  }
  return r;
}

Gamma gamma(const FinW& w) {
  require_prew(w, "gamma");
  const int n = w.n();
  const FinPom& m = w.base;
  std::map<std::vector<std::uint8_t>, int> index;
  std::vector<int> tops;
  Gamma g;
  for (int e = 0; e < n; ++e) {
    if (!w.prec(e, e)) continue;
    auto d = downset(w, e);
    if (index.emplace(d, static_cast<int>(g.ideals.size())).second) {
      g.ideals.push_back(d);
      tops.push_back(e);
    }
  }
  // Canonical element order: by size, then lexicographically.
  std::vector<int> perm(g.ideals.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  auto count = [](const std::vector<std::uint8_t>& v) { return std::count(v.begin(), v.end(), 1); };
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    auto cx = count(g.ideals[x]), cy = count(g.ideals[y]);
    if (cx != cy) return cx < cy;
    return g.ideals[x] > g.ideals[y];
  });
  std::vector<std::vector<std::uint8_t>> sorted_ideals;
  std::vector<int> sorted_tops;
  for (int i : perm) {
    sorted_ideals.push_back(g.ideals[i]);
    sorted_tops.push_back(tops[i]);
  }
  g.ideals = std::move(sorted_ideals);
  tops = std::move(sorted_tops);
  index.clear();
  for (std::size_t i = 0; i < g.ideals.size(); ++i) index[g.ideals[i]] = static_cast<int>(i);

  auto lookup = [&](const std::vector<std::uint8_t>& d) {
    auto it = index.find(d);
    if (it == index.end()) throw std::logic_error("gamma: downset is not a round ideal");
    return it->second;
  };
  const int k = static_cast<int>(g.ideals.size());
  g.pom.n = k;
  g.pom.add.resize(static_cast<std::size_t>(k) * k);
  g.pom.leq.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    g.pom.names.push_back("<" + m.name(tops[i]) + ">");
    for (int j = 0; j < k; ++j) {
      g.pom.add[static_cast<std::size_t>(i) * k + j] = lookup(downset(w, m.sum(tops[i], tops[j])));
      g.pom.leq[static_cast<std::size_t>(i) * k + j] = subset(g.ideals[i], g.ideals[j]);
    }
  }
  g.pom.zero = lookup(downset(w, m.zero));
  g.alpha.resize(n);
  for (int a = 0; a < n; ++a) g.alpha[a] = lookup(downset(w, a));
  return g;
}

CuificationCheck check_cuification(const FinW& w, const Gamma& g) {
  CuificationCheck c;
  const int n = w.n();
  // Every element of a finite Cu-semigroup is compact, so ≪ is ≤ there.
  c.embedding = true;
  c.order_embedding = true;
  for (int ap = 0; ap < n; ++ap)
    for (int a = 0; a < n; ++a) {
      bool below = g.pom.le(g.alpha[ap], g.alpha[a]);
      if (below && !w.prec(ap, a)) c.embedding = false;
      if (below != w.base.le(ap, a)) c.order_embedding = false;
    }
  c.dense = true;
  for (int bp = 0; bp < g.pom.n && c.dense; ++bp)
    for (int b = 0; b < g.pom.n && c.dense; ++b) {
      if (!g.pom.le(bp, b)) continue;
      bool found = false;
      for (int a = 0; a < n && !found; ++a) found = g.pom.le(bp, g.alpha[a]) && g.pom.le(g.alpha[a], b);
      c.dense = found;
    }
  return c;
}

FinPom cu_of_pom(const FinPom& m) { return gamma(with_order_as_aux(m)).pom; }

LimitStage inductive_limit_stage(const std::vector<FinPom>& stages,
                                 const std::vector<std::vector<int>>& maps, int k) {
  if (stages.empty()) throw InputError("inductive limit needs at least one stage");
  if (maps.size() + 1 < stages.size()) throw InputError("missing connecting maps");
  if (k < 0 || k >= static_cast<int>(stages.size())) throw InputError("stage index out of range");
  for (int i = 0; i < k; ++i) {
    check_shape(stages[i]);
    if (static_cast<int>(maps[i].size()) != stages[i].n)
      throw InputError("map " + std::to_string(i) + " has wrong length");
    for (int v : maps[i])
      if (v < 0 || v >= stages[i + 1].n) throw InputError("map " + std::to_string(i) + " leaves its target");
    if (!is_morphism(stages[i], stages[i + 1], maps[i]))
      throw InputError("map " + std::to_string(i) + " is not a positively ordered monoid morphism");
  }
  LimitStage r;
  r.k = k;
  r.pom = stages[k];
  r.to_k.resize(k + 1);
  for (int i = 0; i <= k; ++i) {
    std::vector<int> f(stages[i].n);
    for (int a = 0; a < stages[i].n; ++a) {
      int x = a;
      for (int j = i; j < k; ++j) x = maps[j][x];
      f[a] = x;
    }
    r.to_k[i] = std::move(f);
  }
  return r;
}

}  // namespace cusg
