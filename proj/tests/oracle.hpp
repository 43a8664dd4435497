#pragma once

// Brute-force definitions used as oracles. Nothing here calls the library's deciders:
// every quantifier is a plain loop, and k-quantifiers run to 3n² + 3, past any
// preperiod + period of k ↦ (ka, kb).

#include "cusg/finpom.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using cusg::FinPom;

inline int mult(const FinPom& m, std::int64_t k, int a) {
  int r = m.zero;
  for (std::int64_t i = 0; i < k; ++i) r = m.sum(r, a);
  return r;
}

inline std::int64_t horizon(const FinPom& m) { return 3LL * m.n * m.n + 3; }

inline bool any_of(int n, const std::function<bool(int)>& f) {
  for (int x = 0; x < n; ++x)
    if (f(x)) return true;
  return false;
}

inline bool algebraically_ordered(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (m.le(a, b) && !any_of(m.n, [&](int x) { return m.sum(a, x) == b; })) return false;
  return true;
}

// a + x ≤ b + x ⇒ a ≤ b. With ≪ = ≤ this is also weak cancellation.
inline bool cancellative(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      for (int x = 0; x < m.n; ++x)
        if (m.le(m.sum(a, x), m.sum(b, x)) && !m.le(a, b)) return false;
  return true;
}

inline bool o5(const FinPom& m) {
  for (int ap = 0; ap < m.n; ++ap)
    for (int a = 0; a < m.n; ++a)
      for (int bp = 0; bp < m.n; ++bp)
        for (int b = 0; b < m.n; ++b)
          for (int c = 0; c < m.n; ++c) {
            if (!m.le(ap, a) || !m.le(bp, b) || !m.le(m.sum(a, b), c)) continue;
            if (!any_of(m.n, [&](int x) {
                  return m.le(m.sum(ap, x), c) && m.le(c, m.sum(a, x)) && m.le(bp, x);
                }))
              return false;
          }
  return true;
}

inline bool o5_prime(const FinPom& m) {
  for (int ap = 0; ap < m.n; ++ap)
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b) {
        if (!m.le(ap, a) || !m.le(a, b)) continue;
        if (!any_of(m.n, [&](int x) { return m.le(m.sum(ap, x), b) && m.le(b, m.sum(a, x)); }))
          return false;
      }
  return true;
}

inline bool o6(const FinPom& m) {
  for (int ap = 0; ap < m.n; ++ap)
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        for (int c = 0; c < m.n; ++c) {
          if (!m.le(ap, a) || !m.le(a, m.sum(b, c))) continue;
          bool found = false;
          for (int e = 0; e < m.n && !found; ++e)
            for (int f = 0; f < m.n && !found; ++f)
              found = m.le(e, a) && m.le(e, b) && m.le(f, a) && m.le(f, c) && m.le(ap, m.sum(e, f));
          if (!found) return false;
        }
  return true;
}

inline bool riesz_decomposition(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      for (int c = 0; c < m.n; ++c) {
        if (!m.le(a, m.sum(b, c))) continue;
        bool found = false;
        for (int x = 0; x < m.n && !found; ++x)
          for (int y = 0; y < m.n && !found; ++y)
            found = m.le(x, b) && m.le(y, c) && m.sum(x, y) == a;
        if (!found) return false;
      }
  return true;
}

inline bool riesz_refinement(const FinPom& m) {
  for (int a1 = 0; a1 < m.n; ++a1)
    for (int a2 = 0; a2 < m.n; ++a2)
      for (int b1 = 0; b1 < m.n; ++b1)
        for (int b2 = 0; b2 < m.n; ++b2) {
          if (m.sum(a1, a2) != m.sum(b1, b2)) continue;
          bool found = false;
          for (int c11 = 0; c11 < m.n && !found; ++c11)
            for (int c12 = 0; c12 < m.n && !found; ++c12)
              for (int c21 = 0; c21 < m.n && !found; ++c21)
                for (int c22 = 0; c22 < m.n && !found; ++c22)
                  found = m.sum(c11, c12) == a1 && m.sum(c21, c22) == a2 && m.sum(c11, c21) == b1 &&
                          m.sum(c12, c22) == b2;
          if (!found) return false;
        }
  return true;
}

inline bool riesz_interpolation(const FinPom& m) {
  for (int a1 = 0; a1 < m.n; ++a1)
    for (int a2 = 0; a2 < m.n; ++a2)
      for (int b1 = 0; b1 < m.n; ++b1)
        for (int b2 = 0; b2 < m.n; ++b2) {
          if (!m.le(a1, b1) || !m.le(a1, b2) || !m.le(a2, b1) || !m.le(a2, b2)) continue;
          if (!any_of(m.n, [&](int c) { return m.le(a1, c) && m.le(a2, c) && m.le(c, b1) && m.le(c, b2); }))
            return false;
        }
  return true;
}

// ∃k ≥ 0: (k+1)a ≤ kb.
inline bool stably_dominated(const FinPom& m, int a, int b) {
  int ka = m.zero, kb = m.zero;
  for (std::int64_t k = 0; k <= horizon(m); ++k) {
    if (m.le(m.sum(ka, a), kb)) return true;
    ka = m.sum(ka, a);
    kb = m.sum(kb, b);
  }
  return false;
}

// ka ≤ kb for every k in the tail window (n², 3n²], which covers a full period.
inline bool less_p(const FinPom& m, int a, int b) {
  for (std::int64_t k = static_cast<std::int64_t>(m.n) * m.n + 1; k <= horizon(m); ++k)
    if (!m.le(mult(m, k, a), mult(m, k, b))) return false;
  return true;
}

inline bool almost_unperforated(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (stably_dominated(m, a, b) && !m.le(a, b)) return false;
  return true;
}

inline bool nearly_unperforated(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (less_p(m, a, b) && !m.le(a, b)) return false;
  return true;
}

inline bool two_three(const FinPom& m, int a, int b) {
  return m.le(mult(m, 2, a), mult(m, 2, b)) && m.le(mult(m, 3, a), mult(m, 3, b));
}

inline bool nearly_unperforated_23(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (two_three(m, a, b) && !m.le(a, b)) return false;
  return true;
}

inline bool unperforated(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      for (std::int64_t k = 1; k <= horizon(m); ++k)
        if (m.le(mult(m, k, a), mult(m, k, b)) && !m.le(a, b)) return false;
  return true;
}

inline bool weakly_separative(const FinPom& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (m.le(m.sum(a, a), m.sum(a, b)) && m.le(m.sum(a, b), m.sum(b, b)) && !m.le(a, b)) return false;
  return true;
}

// b ≤ ka for some k.
inline bool dominated_by_multiple(const FinPom& m, int b, int a) {
  for (std::int64_t k = 0; k <= m.n + 1; ++k)
    if (m.le(b, mult(m, k, a))) return true;
  return false;
}

inline bool simple(const FinPom& m) {
  for (int a = 0; a < m.n; ++a) {
    if (a == m.zero) continue;
    for (int b = 0; b < m.n; ++b)
      if (!dominated_by_multiple(m, b, a)) return false;
  }
  return true;
}

// Subsets closed under +, containing 0 and downward closed, as bitmasks (n ≤ 20).
inline std::vector<std::uint32_t> ideal_masks(const FinPom& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << m.n); ++s) {
    if (!(s >> m.zero & 1)) continue;
    bool ok = true;
    for (int a = 0; a < m.n && ok; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; b < m.n && ok; ++b) {
        if ((s >> b & 1) && !(s >> m.sum(a, b) & 1)) ok = false;
        if (m.le(b, a) && !(s >> b & 1)) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Ideal lattice with join as addition and inclusion as order.
inline FinPom ideal_lattice(const FinPom& m) {
  auto masks = ideal_masks(m);
  FinPom l;
  l.n = static_cast<int>(masks.size());
  l.add.assign(static_cast<std::size_t>(l.n) * l.n, 0);
  l.leq.assign(static_cast<std::size_t>(l.n) * l.n, 0);
  auto index = [&](std::uint32_t s) {
    for (int i = 0; i < l.n; ++i)
      if (masks[i] == s) return i;
    return -1;
  };
  for (int i = 0; i < l.n; ++i) {
    if (masks[i] == (1u << m.zero)) l.zero = i;
    for (int j = 0; j < l.n; ++j) {
      // Smallest ideal containing both.
      std::uint32_t best = 0;
      bool have = false;
      for (auto s : masks)
        if ((s & masks[i]) == masks[i] && (s & masks[j]) == masks[j] && (!have || (s & best) == s)) {
          best = s;
          have = true;
        }
      l.add[static_cast<std::size_t>(i) * l.n + j] = index(best);
      l.leq[static_cast<std::size_t>(i) * l.n + j] = (masks[i] & masks[j]) == masks[i];
    }
  }
  return l;
}

// Backtracking search for a zero-preserving bijection respecting + and ≤ in both directions.
inline bool isomorphic(const FinPom& a, const FinPom& b) {
  if (a.n != b.n) return false;
  std::vector<int> f(a.n, -1);
  std::vector<char> used(b.n, 0);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == a.n) {
      for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
          if (f[a.sum(x, y)] != b.sum(f[x], f[y]) || a.le(x, y) != b.le(f[x], f[y])) return false;
      return f[a.zero] == b.zero;
    }
    for (int t = 0; t < b.n; ++t) {
      if (used[t]) continue;
      if ((i == a.zero) != (t == b.zero)) continue;
      bool ok = true;
      for (int x = 0; x < i && ok; ++x)
        ok = a.le(x, i) == b.le(f[x], t) && a.le(i, x) == b.le(t, f[x]);
      if (!ok) continue;
      f[i] = t;
      used[t] = 1;
      if (go(i + 1)) return true;
      used[t] = 0;
      f[i] = -1;
    }
    return false;
  };
  return go(0);
}

inline bool verifies_isomorphism(const FinPom& a, const FinPom& b, const std::vector<int>& f) {
  if (a.n != b.n || static_cast<int>(f.size()) != a.n) return false;
  std::vector<char> hit(b.n, 0);
  for (int x : f) {
    if (x < 0 || x >= b.n || hit[x]) return false;
    hit[x] = 1;
  }
  if (f[a.zero] != b.zero) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (f[a.sum(x, y)] != b.sum(f[x], f[y]) || a.le(x, y) != b.le(f[x], f[y])) return false;
  return true;
}

// E_k = {0, 1, ..., k, ∞} with truncating addition; ∞ is index k+1.
inline FinPom elementary(int k) {
  FinPom m;
  m.n = k + 2;
  m.add.resize(static_cast<std::size_t>(m.n) * m.n);
  m.leq.resize(static_cast<std::size_t>(m.n) * m.n);
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b) {
      int s = a + b;
      m.add[static_cast<std::size_t>(a) * m.n + b] = s > k ? k + 1 : s;
      m.leq[static_cast<std::size_t>(a) * m.n + b] = a <= b;
    }
  return m;
}

inline FinPom trivial() {
  FinPom m;
  m.n = 1;
  m.add = {0};
  m.leq = {1};
  return m;
}

}  // namespace oracle
