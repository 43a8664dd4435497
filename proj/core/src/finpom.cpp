#include "cusg/finpom.hpp"

#include "cusg/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

namespace cusg {

Verdict make_holds(std::string note) {
  Verdict v;
  v.note = std::move(note);
  return v;
}

Verdict make_fails(std::string tag, std::vector<std::int64_t> witness, std::string note) {
  Verdict v;
  v.status = Status::Fails;
  v.tag = std::move(tag);
  v.witness = std::move(witness);
  v.note = std::move(note);
  return v;
}

Verdict make_unknown(std::int64_t depth, std::string note) {
  Verdict v;
  v.status = Status::Unknown;
  v.depth = depth;
  v.note = std::move(note);
  return v;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

int FinPom::times(std::int64_t k, int a) const {
  int acc = zero;
  int base = a;
  while (k > 0) {
    if (k & 1) acc = sum(acc, base);
    base = sum(base, base);
    k >>= 1;
  }
  return acc;
}

std::string FinPom::name(int a) const {
  if (!names.empty()) return names[a];
  return std::to_string(a);
}

int FinPom::index_of(const std::string& s) const {
  for (int i = 0; i < n; ++i)
    if (name(i) == s) return i;
  return -1;
}

void check_shape(const FinPom& m) {
  if (m.n <= 0) throw InputError("empty carrier: a monoid has at least the zero element");
  auto nn = static_cast<std::size_t>(m.n) * m.n;
  if (m.add.size() != nn) throw InputError("addition table has wrong dimensions");
  if (m.leq.size() != nn) throw InputError("order matrix has wrong dimensions");
  if (m.zero < 0 || m.zero >= m.n) throw InputError("zero index out of range");
  for (int v : m.add)
    if (v < 0 || v >= m.n) throw InputError("addition table entry out of range");
  if (!m.names.empty() && static_cast<int>(m.names.size()) != m.n)
    throw InputError("name list has wrong length");
}

Verdict validate_monoid(const FinPom& m) {
  check_shape(m);
  const int n = m.n;
  for (int a = 0; a < n; ++a)
    if (m.sum(m.zero, a) != a) return make_fails("neutral", {a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (m.sum(a, b) != m.sum(b, a)) return make_fails("commutativity", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.sum(m.sum(a, b), c) != m.sum(a, m.sum(b, c)))
          return make_fails("associativity", {a, b, c});
  return make_holds();
}

Verdict validate(const FinPom& m, OrderKind kind) {
  Verdict mon = validate_monoid(m);
  if (!mon.holds()) return mon;
  const int n = m.n;
  for (int a = 0; a < n; ++a)
    if (!m.le(a, a)) return make_fails("reflexivity", {a});
  if (kind == OrderKind::Partial) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (m.le(a, b) && m.le(b, a)) return make_fails("antisymmetry", {a, b});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!m.le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (m.le(b, c) && !m.le(a, c)) return make_fails("transitivity", {a, b, c});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!m.le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (!m.le(m.sum(a, c), m.sum(b, c))) return make_fails("translation-invariance", {a, b, c});
    }
  for (int a = 0; a < n; ++a)
    if (!m.le(m.zero, a)) return make_fails("positivity", {a});
  return make_holds();
}

FinPrePom algebraic_order(const FinPom& m) {
  check_shape(m);
  FinPrePom r = m;
  const int n = m.n;
  std::fill(r.leq.begin(), r.leq.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) r.leq[static_cast<std::size_t>(a) * n + m.sum(a, x)] = 1;
  return r;
}

FinPom antisymmetrize(const FinPrePom& m, std::vector<int>* class_of) {
  const int n = m.n;
  std::vector<int> cls(n, -1);
  std::vector<int> rep;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = static_cast<int>(rep.size());
    for (int b = a + 1; b < n; ++b)
      if (cls[b] < 0 && m.eqv(a, b)) cls[b] = cls[a];
    rep.push_back(a);
  }
  FinPom r;
  r.n = static_cast<int>(rep.size());
  r.add.resize(static_cast<std::size_t>(r.n) * r.n);
  r.leq.resize(static_cast<std::size_t>(r.n) * r.n);
  r.zero = cls[m.zero];
  for (int i = 0; i < r.n; ++i) {
    if (!m.names.empty()) r.names.push_back(m.names[rep[i]]);
    for (int j = 0; j < r.n; ++j) {
      r.add[static_cast<std::size_t>(i) * r.n + j] = cls[m.sum(rep[i], rep[j])];
      r.leq[static_cast<std::size_t>(i) * r.n + j] = m.le(rep[i], rep[j]);
    }
  }
  if (class_of) *class_of = std::move(cls);
  return r;
}

FinPom make_trivial() {
  FinPom m;
  m.n = 1;
  m.add = {0};
  m.leq = {1};
  m.names = {"0"};
  return m;
}

FinPom make_elementary(int k) {
  if (k < 0) throw InputError("E_k needs k >= 0");
  FinPom m;
  m.n = k + 2;
  const int inf = k + 1;
  m.add.resize(static_cast<std::size_t>(m.n) * m.n);
  m.leq.resize(static_cast<std::size_t>(m.n) * m.n);
  for (int a = 0; a < m.n; ++a) {
    m.names.push_back(a == inf ? "inf" : std::to_string(a));
    for (int b = 0; b < m.n; ++b) {
      int s = a + b;
      m.add[static_cast<std::size_t>(a) * m.n + b] = (a == inf || b == inf || s > k) ? inf : s;
      m.leq[static_cast<std::size_t>(a) * m.n + b] = a <= b;
    }
  }
  return m;
}

FinPom make_pureinf() { return make_elementary(0); }

FinPom make_cyclic_group(int order) {
  if (order < 1) throw InputError("cyclic group order must be positive");
  FinPom m;
  m.n = order;
  m.add.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) m.add[static_cast<std::size_t>(a) * order + b] = (a + b) % order;
  m.leq.assign(m.add.size(), 1);
  for (int a = 0; a < order; ++a) m.names.push_back(std::to_string(a));
  return m;
}

FinPom product(const FinPom& a, const FinPom& b) {
  FinPom m;
  m.n = a.n * b.n;
  auto idx = [&](int x, int y) { return x * b.n + y; };
  m.zero = idx(a.zero, b.zero);
  m.add.resize(static_cast<std::size_t>(m.n) * m.n);
  m.leq.resize(static_cast<std::size_t>(m.n) * m.n);
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1) {
      int i = idx(x1, y1);
      m.names.push_back("(" + a.name(x1) + "," + b.name(y1) + ")");
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2) {
          int j = idx(x2, y2);
          m.add[static_cast<std::size_t>(i) * m.n + j] = idx(a.sum(x1, x2), b.sum(y1, y2));
          m.leq[static_cast<std::size_t>(i) * m.n + j] = a.le(x1, x2) && b.le(y1, y2);
        }
    }
  return m;
}

Orbit orbit(const FinPom& m, int a) {
  std::vector<int> first(m.n, -1);
  int x = m.zero;
  for (int k = 0;; ++k) {
    if (first[x] >= 0) return Orbit{first[x], k - first[x]};
    first[x] = k;
    x = m.sum(x, a);
  }
}

bool is_morphism(const FinPom& a, const FinPom& b, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != a.n) return false;
  if (f[a.zero] != b.zero) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (f[a.sum(x, y)] != b.sum(f[x], f[y])) return false;
      if (a.le(x, y) && !b.le(f[x], f[y])) return false;
    }
  return true;
}

bool is_isomorphism(const FinPom& a, const FinPom& b, const std::vector<int>& f) {
  if (a.n != b.n || static_cast<int>(f.size()) != a.n) return false;
  std::vector<char> hit(b.n, 0);
  for (int v : f) {
    if (v < 0 || v >= b.n || hit[v]) return false;
    hit[v] = 1;
  }
  if (!is_morphism(a, b, f)) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.le(x, y) != b.le(f[x], f[y])) return false;
  return true;
}

namespace {

using Signature = std::array<int, 6>;

std::vector<Signature> signatures(const FinPom& m) {
  std::vector<Signature> s(m.n);
  for (int a = 0; a < m.n; ++a) {
    int up = 0, down = 0, halves = 0;
    for (int b = 0; b < m.n; ++b) {
      up += m.le(a, b);
      down += m.le(b, a);
      halves += m.sum(b, b) == a;
    }
    Orbit o = orbit(m, a);
    s[a] = {a == m.zero, up, down, halves, o.preperiod, o.period};
  }
  return s;
}

bool extend(const FinPom& a, const FinPom& b, const std::vector<Signature>& sa,
            const std::vector<Signature>& sb, std::vector<int>& order, std::size_t pos,
            std::vector<int>& f, std::vector<char>& used) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < b.n; ++y) {
    if (used[y] || sa[x] != sb[y]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q) {
      int u = order[q];
      int fu = f[u];
      if (a.le(x, u) != b.le(y, fu) || a.le(u, x) != b.le(fu, y)) ok = false;
    }
    if (!ok) continue;
    f[x] = y;
    used[y] = 1;
    for (std::size_t q = 0; q <= pos && ok; ++q) {
      int u = order[q];
      int s = a.sum(x, u);
      if (f[s] >= 0 && f[s] != b.sum(y, f[u])) ok = false;
    }
    // Sums whose image was fixed earlier must still agree once their summands are mapped.
    for (std::size_t p = 0; p <= pos && ok; ++p)
      for (std::size_t q = 0; q <= pos && ok; ++q) {
        int s = a.sum(order[p], order[q]);
        if (s == x && b.sum(f[order[p]], f[order[q]]) != y) ok = false;
      }
    if (ok && extend(a, b, sa, sb, order, pos + 1, f, used)) return true;
    f[x] = -1;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinPom& a, const FinPom& b) {
  if (a.n != b.n) return std::nullopt;
  auto sa = signatures(a);
  auto sb = signatures(b);
  auto ca = sa, cb = sb;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  // Zero first, then elements with rare signatures.
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    auto cnt = [&](int e) { return std::count(sa.begin(), sa.end(), sa[e]); };
    return std::make_tuple(x != a.zero, cnt(x)) < std::make_tuple(y != a.zero, cnt(y));
  });
  std::vector<int> f(a.n, -1);
  std::vector<char> used(b.n, 0);
  if (!extend(a, b, sa, sb, order, 0, f, used)) return std::nullopt;
  if (!is_isomorphism(a, b, f)) return std::nullopt;
  return f;
}

}  // namespace cusg
