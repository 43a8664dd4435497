#include "cusg/named.hpp"

#include "cusg/cu_finite.hpp"
#include "cusg/error.hpp"
#include "cusg/properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cusg {

namespace bmp = boost::multiprecision;

namespace {

using Kind = NamedCu::Kind;

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  if (s.empty()) throw InputError("expected an integer");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("expected an integer, got '" + std::string(s) + "'");
    if (v > (INT64_MAX - 9) / 10) throw InputError("integer too large: " + std::string(s));
    v = v * 10 + (c - '0');
  }
  return v;
}

std::int64_t torsion_of(const NamedCu& s) { return s.kind == Kind::GenSolid ? s.spec.torsion_modulus() : 1; }

bool lambda_variant(const NamedCu& s) {
  return s.kind == Kind::ExtNat || s.kind == Kind::Interval || s.kind == Kind::GenSolid;
}

bool elementary_like(const NamedCu& s) { return s.kind == Kind::Elementary || s.kind == Kind::PureInf; }

Elem soft_from(const ExtQ& t) {
  if (t.inf) return Elem::soft_infinity();
  if (t.value == 0) return Elem::zero();
  return Elem::soft_of(t.value);
}

// Rational r lies in ℤ[P⁻¹].
bool in_ring(const Supernatural& P, const Q& r) {
  if (P.all_primes) return true;
  Z d = bmp::denominator(r);
  if (d > Z(INT64_MAX)) return false;
  for (std::int64_t p : prime_factors(to_i64(d)))
    if (!P.contains(p)) return false;
  return true;
}

std::int64_t first_prime(const Supernatural& q) { return q.all_primes ? 2 : q.primes.front(); }

}  // namespace

// ---- supernatural numbers and specs -----------------------------------------

bool Supernatural::contains(std::int64_t p) const {
  return all_primes ? is_prime(p) : std::binary_search(primes.begin(), primes.end(), p);
}

bool Supernatural::divides(std::int64_t n) const {
  if (n < 1) return false;
  for (std::int64_t p : prime_factors(n))
    if (!contains(p)) return false;
  return true;
}

Supernatural parse_supernatural(std::string_view s) {
  s = trim(s);
  Supernatural q;
  if (s == "inf") {
    q.all_primes = true;
    return q;
  }
  if (s == "1") return q;
  std::set<std::int64_t> primes;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t star = s.find('*', start);
    std::string_view part = trim(s.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    auto caret = part.find("^inf");
    if (caret == std::string_view::npos || caret + 4 != part.size())
      throw InputError("supernatural factor '" + std::string(part) + "' must have the form n^inf");
    std::int64_t n = parse_int(part.substr(0, caret));
    if (n < 2) throw InputError("supernatural base must be at least 2");
    for (std::int64_t p : prime_factors(n)) primes.insert(p);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  q.primes.assign(primes.begin(), primes.end());
  return q;
}

std::string to_string(const Supernatural& q) {
  if (q.all_primes) return "inf";
  if (q.primes.empty()) return "1";
  // The product fits comfortably for any realistic prime set; fall back to factors otherwise.
  std::int64_t prod = 1;
  bool fits = true;
  for (std::int64_t p : q.primes) {
    if (prod > INT64_MAX / p) {
      fits = false;
      break;
    }
    prod *= p;
  }
  if (fits) return std::to_string(prod) + "^inf";
  std::string s;
  for (std::int64_t p : q.primes) s += (s.empty() ? "" : "*") + std::to_string(p) + "^inf";
  return s;
}

Supernatural supernatural_union(const Supernatural& a, const Supernatural& b) {
  Supernatural q;
  if (a.all_primes || b.all_primes) {
    q.all_primes = true;
    return q;
  }
  std::set_union(a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(), std::back_inserter(q.primes));
  return q;
}

std::int64_t SolidRingSpec::torsion_modulus() const {
  std::int64_t n = 1;
  for (auto [p, k] : e)
    for (int i = 0; i < k; ++i) n *= p;
  return n;
}

void check_spec(const SolidRingSpec& s) {
  long double n = 1;
  for (auto [p, k] : s.e) {
    if (!is_prime(p)) throw InputError("torsion key " + std::to_string(p) + " is not a prime");
    if (!s.P.contains(p)) throw InputError("torsion prime " + std::to_string(p) + " is not in P");
    if (k < 1) throw InputError("torsion exponent must be at least 1");
    for (int i = 0; i < k; ++i) n *= static_cast<long double>(p);
  }
  if (n > 1e6) throw InputError("torsion modulus too large");
  for (std::int64_t p : s.P.primes)
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
}

NamedCu NamedCu::elementary(int k) {
  if (k < 0) throw InputError("elem(k) needs k >= 0");
  if (k == 0) return pureinf();
  return {Kind::Elementary, k, {}};
}

NamedCu NamedCu::gensolid(SolidRingSpec s) {
  std::sort(s.P.primes.begin(), s.P.primes.end());
  s.P.primes.erase(std::unique(s.P.primes.begin(), s.P.primes.end()), s.P.primes.end());
  if (s.P.all_primes) s.P.primes.clear();
  check_spec(s);
  return {Kind::GenSolid, 0, std::move(s)};
}

NamedCu NamedCu::rq(Supernatural q) {
  if (q.is_one()) throw InputError("R_q needs q != 1");
  SolidRingSpec s;
  s.P = std::move(q);
  return gensolid(std::move(s));
}

// ---- grammar ----------------------------------------------------------------

namespace {

std::vector<std::string_view> split_list(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::string_view braces(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw InputError("expected {...}, got '" + std::string(s) + "'");
  return s.substr(1, s.size() - 2);
}

}  // namespace

NamedCu parse_named(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "extnat") return NamedCu::extnat();
  if (s == "pureinf") return NamedCu::pureinf();
  if (s == "interval") return NamedCu::interval();
  if (s == "z") return NamedCu::z();
  auto call = [&](std::string_view head) -> std::optional<std::string_view> {
    if (s.size() > head.size() + 1 && s.substr(0, head.size()) == head && s[head.size()] == '(' && s.back() == ')')
      return s.substr(head.size() + 1, s.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto arg = call("elem")) {
    std::int64_t k = parse_int(*arg);
    if (k > 1000000) throw InputError("elem(k): k too large");
    return NamedCu::elementary(static_cast<int>(k));
  }
  if (auto arg = call("r")) return NamedCu::rq(parse_supernatural(*arg));
  if (auto arg = call("gensolid")) {
    SolidRingSpec spec;
    std::set<std::int64_t> K;
    bool have_e = false;
    for (std::string_view field : split_list(*arg, ';')) {
      auto eq = field.find('=');
      if (eq == std::string_view::npos) throw InputError("gensolid field '" + std::string(field) + "' lacks '='");
      std::string_view key = trim(field.substr(0, eq)), value = trim(field.substr(eq + 1));
      if (key == "P") {
        if (value == "inf") {
          spec.P.all_primes = true;
        } else {
          for (std::string_view p : split_list(braces(value), ',')) spec.P.primes.push_back(parse_int(p));
        }
      } else if (key == "K") {
        for (std::string_view p : split_list(braces(value), ',')) K.insert(parse_int(p));
      } else if (key == "e") {
        have_e = true;
        for (std::string_view kv : split_list(braces(value), ',')) {
          auto colon = kv.find(':');
          if (colon == std::string_view::npos) throw InputError("torsion exponent '" + std::string(kv) + "' lacks ':'");
          std::int64_t p = parse_int(kv.substr(0, colon)), k = parse_int(kv.substr(colon + 1));
          if (k > 64) throw InputError("torsion exponent too large");
          spec.e[p] = static_cast<int>(k);
        }
      } else {
        throw InputError("unknown gensolid field '" + std::string(key) + "'");
      }
    }
    if (have_e) {
      for (auto& [p, k] : spec.e)
        if (!K.count(p)) throw InputError("torsion exponent given for " + std::to_string(p) + " outside K");
    }
    for (std::int64_t p : K)
      if (!spec.e.count(p)) spec.e[p] = 1;
    return NamedCu::gensolid(std::move(spec));
  }
  throw InputError("unknown semiring '" + std::string(s) + "'");
}

std::string to_string(const NamedCu& s) {
  switch (s.kind) {
    case Kind::ExtNat: return "extnat";
    case Kind::Elementary: return "elem(" + std::to_string(s.k) + ")";
    case Kind::PureInf: return "pureinf";
    case Kind::Interval: return "interval";
    case Kind::GenSolid: {
      if (s.spec.e.empty()) return s.spec.P.is_one() ? "z" : "r(" + to_string(s.spec.P) + ")";
      std::string out = "gensolid(P=";
      if (s.spec.P.all_primes) {
        out += "inf";
      } else {
        out += "{";
        for (std::size_t i = 0; i < s.spec.P.primes.size(); ++i) out += (i ? "," : "") + std::to_string(s.spec.P.primes[i]);
        out += "}";
      }
      out += ";K={";
      std::string es;
      bool first = true;
      for (auto [p, k] : s.spec.e) {
        out += (first ? "" : ",") + std::to_string(p);
        es += (first ? "" : ",") + std::to_string(p) + ":" + std::to_string(k);
        first = false;
      }
      return out + "};e={" + es + "})";
    }
  }
  return "?";
}

Elem parse_elem(const NamedCu& s, std::string_view text) {
  std::string_view t = trim(text);
  Elem a;
  auto bad = [&] { return InputError("'" + std::string(t) + "' is not an element of " + to_string(s)); };
  bool soft_form = false;
  if (t.size() > 6 && t.substr(0, 5) == "soft(" && t.back() == ')') {
    soft_form = true;
    t = t.substr(5, t.size() - 6);
  }
  if (t == "inf") {
    switch (s.kind) {
      case Kind::ExtNat:
      case Kind::Interval:
      case Kind::GenSolid: a = Elem::soft_infinity(); break;
      default:
        if (soft_form) throw bad();
        a = Elem::compact_infinity();
    }
  } else {
    std::int64_t tau = 0;
    auto bar = t.find('|');
    std::string_view value = t.substr(0, bar);
    if (bar != std::string_view::npos) {
      if (soft_form || s.kind != Kind::GenSolid) throw bad();
      tau = parse_int(t.substr(bar + 1));
    }
    Q v = parse_rational(value);
    if (v < 0) throw bad();
    if (v == 0) {
      if (tau != 0) throw bad();
      a = Elem::zero();
    } else if (soft_form || s.kind == Kind::Interval) {
      if (s.kind != Kind::Interval && s.kind != Kind::GenSolid) throw bad();
      a = Elem::soft_of(v);
    } else {
      a = Elem::compact(v, tau);
    }
  }
  if (!contains(s, a)) throw bad();
  return a;
}

std::string to_string(const NamedCu& s, const Elem& a) {
  if (a.is_zero()) return "0";
  if (a.soft && s.kind == Kind::GenSolid) return "soft(" + (a.inf ? std::string("inf") : to_string(a.value)) + ")";
  if (a.inf) return "inf";
  std::string out = to_string(a.value);
  if (s.kind == Kind::GenSolid && torsion_of(s) > 1) out += "|" + std::to_string(a.tau);
  return out;
}

bool contains(const NamedCu& s, const Elem& a) {
  if (a.is_zero()) return true;
  if (a.value < 0 || a.tau < 0) return false;
  auto integral = [](const Q& v) { return bmp::denominator(v) == 1; };
  switch (s.kind) {
    case Kind::ExtNat:
      if (a.inf) return a.soft && a.tau == 0;
      return !a.soft && a.tau == 0 && integral(a.value);
    case Kind::Elementary:
      if (a.inf) return !a.soft && a.tau == 0;
      return !a.soft && a.tau == 0 && integral(a.value) && a.value <= s.k;
    case Kind::PureInf: return a.inf && !a.soft && a.tau == 0;
    case Kind::Interval: return a.soft && a.tau == 0 && (a.inf || a.value > 0);
    case Kind::GenSolid:
      if (a.soft) return a.tau == 0 && (a.inf || a.value > 0);
      return !a.inf && a.value > 0 && a.tau < torsion_of(s) && in_ring(s.spec.P, a.value);
  }
  return false;
}

// ---- arithmetic -------------------------------------------------------------

Elem unit(const NamedCu& s) {
  switch (s.kind) {
    case Kind::PureInf: return Elem::compact_infinity();
    case Kind::Interval: return Elem::soft_of(1);
    case Kind::GenSolid: return Elem::compact(1, 1 % torsion_of(s));
    default: return Elem::compact(1);
  }
}

Elem top(const NamedCu& s) {
  return elementary_like(s) ? Elem::compact_infinity() : Elem::soft_infinity();
}

Elem add(const NamedCu& s, const Elem& a, const Elem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  switch (s.kind) {
    case Kind::ExtNat:
      if (a.inf || b.inf) return Elem::soft_infinity();
      return Elem::compact(a.value + b.value);
    case Kind::Elementary:
      if (a.inf || b.inf || a.value + b.value > s.k) return Elem::compact_infinity();
      return Elem::compact(a.value + b.value);
    case Kind::PureInf: return Elem::compact_infinity();
    case Kind::Interval:
      if (a.inf || b.inf) return Elem::soft_infinity();
      return Elem::soft_of(a.value + b.value);
    case Kind::GenSolid:
      if (!a.soft && !b.soft) return Elem::compact(a.value + b.value, (a.tau + b.tau) % torsion_of(s));
      if (a.inf || b.inf) return Elem::soft_infinity();
      return Elem::soft_of(a.value + b.value);
  }
  return {};
}

Elem mul(const NamedCu& s, const Elem& a, const Elem& b) {
  if (a.is_zero() || b.is_zero()) return Elem::zero();
  switch (s.kind) {
    case Kind::ExtNat:
      if (a.inf || b.inf) return Elem::soft_infinity();
      return Elem::compact(a.value * b.value);
    case Kind::Elementary:
      if (a.inf || b.inf || a.value * b.value > s.k) return Elem::compact_infinity();
      return Elem::compact(a.value * b.value);
    case Kind::PureInf: return Elem::compact_infinity();
    case Kind::Interval:
      if (a.inf || b.inf) return Elem::soft_infinity();
      return Elem::soft_of(a.value * b.value);
    case Kind::GenSolid: {
      if (!a.soft && !b.soft) {
        std::int64_t n = torsion_of(s);
        return Elem::compact(a.value * b.value, static_cast<std::int64_t>((static_cast<__int128>(a.tau) * b.tau) % n));
      }
      if (a.inf || b.inf) return Elem::soft_infinity();
      return Elem::soft_of(a.value * b.value);
    }
  }
  return {};
}

Elem times(const NamedCu& s, std::int64_t n, const Elem& a) {
  if (n < 0) throw InputError("negative multiplier");
  if (n == 0 || a.is_zero()) return Elem::zero();
  if (a.inf) return a;
  switch (s.kind) {
    case Kind::ExtNat: return Elem::compact(a.value * n);
    case Kind::Elementary: return a.value * n > s.k ? Elem::compact_infinity() : Elem::compact(a.value * n);
    case Kind::PureInf: return a;
    case Kind::Interval: return Elem::soft_of(a.value * n);
    case Kind::GenSolid:
      if (a.soft) return Elem::soft_of(a.value * n);
      return Elem::compact(a.value * n, static_cast<std::int64_t>((static_cast<__int128>(a.tau) * n) % torsion_of(s)));
  }
  return {};
}

bool leq(const NamedCu& s, const Elem& a, const Elem& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  if (s.kind != Kind::GenSolid) {
    if (b.inf) return true;
    if (a.inf) return false;
    return a.value <= b.value;
  }
  ExtQ x = a.inf ? ExtQ::infinity() : ExtQ::of(a.value);
  ExtQ y = b.inf ? ExtQ::infinity() : ExtQ::of(b.value);
  if (!a.soft && !b.soft) return a == b || a.value < b.value;
  if (!a.soft) return x < y;  // compact ≤ soft iff λ₀ < t
  return x <= y;              // soft ≤ compact iff t ≤ λ₀; soft order is numeric
}

bool is_compact(const NamedCu& s, const Elem& a) {
  if (a.is_zero()) return true;
  switch (s.kind) {
    case Kind::ExtNat: return !a.inf;
    case Kind::Elementary:
    case Kind::PureInf: return true;
    case Kind::Interval: return false;
    case Kind::GenSolid: return !a.soft;
  }
  return false;
}

bool waybelow(const NamedCu& s, const Elem& a, const Elem& b) {
  if (!leq(s, a, b)) return false;
  if (is_compact(s, a)) return true;
  // a lies in the soft part (or is ∞ in ℕ̄).
  if (!b.soft) return true;
  if (a.inf) return false;
  return b.inf || a.value < b.value;
}

bool is_soft(const NamedCu& s, const Elem& a) {
  if (a.is_zero()) return true;
  switch (s.kind) {
    case Kind::ExtNat: return a.inf;
    case Kind::Elementary:
    case Kind::PureInf:
    case Kind::Interval: return true;
    case Kind::GenSolid: return a.soft;
  }
  return false;
}

std::vector<Elem> approximants(const NamedCu& s, const Elem& a, int count) {
  if (count < 1) throw InputError("approximant count must be positive");
  std::vector<Elem> out;
  for (int k = 1; k <= count; ++k) {
    if (is_compact(s, a)) {
      out.push_back(a);
    } else if (a.inf) {
      out.push_back(s.kind == Kind::ExtNat ? Elem::compact(k) : Elem::soft_of(k));
    } else {
      out.push_back(Elem::soft_of(a.value * Q(k, k + 1)));
    }
  }
  return out;
}

bool soft_by_definition(const NamedCu& s, const Elem& a, int count, int nmax) {
  for (const Elem& ap : approximants(s, a, count)) {
    bool found = false;
    for (int n = 1; n <= nmax && !found; ++n) found = leq(s, times(s, n + 1, ap), times(s, n, a));
    if (!found) return false;
  }
  return true;
}

bool has_z_multiplication(const NamedCu& s) {
  return s.kind == Kind::PureInf || s.kind == Kind::Interval || s.kind == Kind::GenSolid;
}

bool has_functional(const NamedCu& s) { return lambda_variant(s); }

ExtQ lambda(const NamedCu& s, const Elem& a) {
  if (!has_functional(s)) throw InputError(to_string(s) + " has no functional normalized at its unit");
  if (a.is_zero()) return ExtQ::of(0);
  if (a.inf) return ExtQ::infinity();
  return ExtQ::of(a.value);
}

Elem softify(const NamedCu& s, const Elem& a) {
  if (!has_z_multiplication(s)) throw InputError(to_string(s) + " has no Z-multiplication");
  if (s.kind != Kind::GenSolid) return a;
  return soft_from(lambda(s, a));
}

Elem zmul(const NamedCu& s, const Elem& z, const Elem& a) {
  if (!has_z_multiplication(s)) throw InputError(to_string(s) + " has no Z-multiplication");
  if (!contains(NamedCu::z(), z)) throw InputError("not an element of Z");
  if (z.is_zero() || a.is_zero()) return Elem::zero();
  if (!z.soft) return times(s, to_i64(bmp::numerator(z.value)), a);
  if (s.kind == Kind::PureInf) return a;
  return soft_from((z.inf ? ExtQ::infinity() : ExtQ::of(z.value)) * lambda(s, a));
}

Elem predecessor(const NamedCu& s, const Elem& p) {
  if (s.kind != Kind::GenSolid)
    throw InputError("predecessors need a simple, stably finite, nonelementary semiring with compact unit");
  if (p.is_zero() || !is_compact(s, p)) throw InputError("predecessor needs a nonzero compact element");
  return softify(s, p);
}

Elem glimm_half(const NamedCu& s, const Elem& a) {
  if (s.kind != Kind::GenSolid && s.kind != Kind::Interval)
    throw InputError("Glimm halving needs a simple nonelementary semiring");
  if (a.is_zero()) throw InputError("Glimm halving needs a nonzero element");
  ExtQ l = lambda(s, a);
  return l.inf ? Elem::soft_of(1) : Elem::soft_of(l.value / 2);
}

ExtQ stable_ratio(const NamedCu& s, const Elem& a, const Elem& x) {
  if (a.is_zero()) throw InputError("stable ratio needs a nonzero element");
  if (x.is_zero() || elementary_like(s)) return ExtQ::of(0);
  ExtQ la = lambda(s, a), lx = lambda(s, x);
  if (la.inf) return ExtQ::of(0);
  if (lx.inf) return ExtQ::infinity();
  return ExtQ::of(lx.value / la.value);
}

// ---- closed-form properties --------------------------------------------------

namespace {

NamedVerdict holds() { return {}; }

NamedVerdict fails(std::string tag, std::vector<Elem> elems, std::vector<std::int64_t> scalars = {}) {
  NamedVerdict v;
  v.status = Status::Fails;
  v.tag = std::move(tag);
  v.elems = std::move(elems);
  v.scalars = std::move(scalars);
  return v;
}

std::int64_t smallest_prime_outside(const Supernatural& P) {
  for (std::int64_t p = 2;; ++p)
    if (is_prime(p) && !P.contains(p)) return p;
}

// A prime of q that breaks q-divisibility of GenSolid(spec), if any.
std::optional<std::int64_t> blocking_prime(const SolidRingSpec& spec, const Supernatural& q) {
  std::int64_t n = spec.torsion_modulus();
  if (q.all_primes) {
    if (!spec.P.all_primes) return smallest_prime_outside(spec.P);
    if (!spec.e.empty()) return spec.e.begin()->first;
    return std::nullopt;
  }
  for (std::int64_t p : q.primes)
    if (!spec.P.contains(p) || n % p == 0) return p;
  return std::nullopt;
}

}  // namespace

NamedVerdict named_property(const NamedCu& s, std::string_view prop, const Supernatural& q) {
  const bool needs_q = prop == "q-divisible" || prop == "q-unperforated";
  if (needs_q && q.is_one()) throw InputError("q-properties need q != 1");
  const Elem one = Elem::compact(1);
  if (prop == "almost-unperforated") {
    if (s.kind == Kind::Elementary) return fails("almost-unperforated", {Elem::compact_infinity(), one}, {s.k + 1});
    return holds();
  }
  if (prop == "almost-divisible") {
    if (s.kind == Kind::ExtNat || s.kind == Kind::Elementary) return fails("almost-divisible", {one}, {2});
    return holds();
  }
  if (prop == "nearly-unperforated") {
    if (s.kind == Kind::Elementary) return fails("nearly-unperforated", {Elem::compact_infinity(), Elem::compact(s.k)});
    return holds();
  }
  if (prop == "idempotent") {
    if (s.kind == Kind::PureInf) return holds();
    return fails("idempotent", {unit(s)});
  }
  if (prop == "all-soft") {
    if (s.kind == Kind::ExtNat || s.kind == Kind::GenSolid) return fails("all-soft", {unit(s)});
    return holds();
  }
  if (prop == "q-divisible") {
    std::int64_t p = first_prime(q);
    switch (s.kind) {
      case Kind::ExtNat:
      case Kind::Elementary: return fails("q-divisible", {one}, {p});
      case Kind::GenSolid:
        if (auto b = blocking_prime(s.spec, q)) return fails("q-divisible", {unit(s)}, {*b});
        return holds();
      default: return holds();
    }
  }
  if (prop == "q-unperforated") {
    std::int64_t p = first_prime(q);
    switch (s.kind) {
      case Kind::Elementary: return fails("q-unperforated", {Elem::compact_infinity(), Elem::compact(s.k)}, {p});
      case Kind::GenSolid: {
        std::int64_t n = torsion_of(s);
        for (auto [t, e] : s.spec.e)
          if (q.contains(t)) return fails("q-unperforated", {Elem::compact(1, 0), Elem::compact(1, n / t)}, {t});
        return holds();
      }
      default: return holds();
    }
  }
  throw InputError("unknown named property '" + std::string(prop) + "'");
}

bool replay_named_failure(const NamedCu& s, const NamedVerdict& v) {
  if (!v.fails()) return false;
  for (const Elem& e : v.elems)
    if (!contains(s, e)) return false;
  auto el = [&](std::size_t i) { return v.elems.at(i); };
  auto sc = [&](std::size_t i) { return v.scalars.at(i); };
  // Candidates for existential searches over ℕ̄ and E_k: every finite value up to `bound`, and ∞.
  auto finite_candidates = [&](const Q& bound) {
    std::vector<Elem> xs{Elem::zero()};
    for (std::int64_t i = 1; Q(i) <= bound + 1; ++i) {
      Elem x = Elem::compact(i);
      if (contains(s, x)) xs.push_back(x);
    }
    xs.push_back(top(s));
    return xs;
  };
  if (v.tag == "almost-unperforated") {
    std::int64_t k = sc(0);
    return leq(s, times(s, k + 1, el(0)), times(s, k, el(1))) && !leq(s, el(0), el(1));
  }
  if (v.tag == "nearly-unperforated") {
    Elem a = el(0), b = el(1);
    return leq(s, times(s, 2, a), times(s, 2, b)) && leq(s, times(s, 3, a), times(s, 3, b)) && !leq(s, a, b);
  }
  if (v.tag == "q-unperforated") {
    std::int64_t n = sc(0);
    return leq(s, times(s, n, el(0)), times(s, n, el(1))) && !leq(s, el(0), el(1));
  }
  if (v.tag == "idempotent") return !(add(s, el(0), el(0)) == el(0));
  if (v.tag == "all-soft") return !soft_by_definition(s, el(0));
  if (v.tag == "almost-divisible" || v.tag == "q-divisible") {
    Elem a = el(0);
    std::int64_t k = sc(0);
    if (s.kind == Kind::ExtNat || s.kind == Kind::Elementary) {
      for (const Elem& x : finite_candidates(a.value)) {
        bool ok = v.tag == "q-divisible" ? times(s, k, x) == a
                                         : leq(s, times(s, k, x), a) && leq(s, a, times(s, k + 1, x));
        if (ok) return false;
      }
      return true;
    }
    if (s.kind == Kind::GenSolid && v.tag == "q-divisible" && !a.soft) {
      // kx = a forces x = (r/k, σ) with kσ ≡ τ (mod N).
      if (!in_ring(s.spec.P, a.value / k)) return true;
      std::int64_t n = torsion_of(s);
      for (std::int64_t sigma = 0; sigma < n; ++sigma)
        if ((static_cast<__int128>(sigma) * k - a.tau) % n == 0) return false;
      return true;
    }
    return false;
  }
  return false;
}

Over parse_over(std::string_view text) {
  std::string_view s = trim(text);
  Over o;
  if (s == "pureinf") {
    o.kind = Over::Kind::PureInf;
  } else if (s == "z") {
    o.kind = Over::Kind::Z;
  } else if (s == "interval") {
    o.kind = Over::Kind::Interval;
  } else if (s.size() > 3 && s.substr(0, 2) == "r(" && s.back() == ')') {
    o.kind = Over::Kind::Rq;
    o.q = parse_supernatural(s.substr(2, s.size() - 3));
    if (o.q.is_one()) throw InputError("R_q needs q != 1");
  } else {
    throw InputError("unsupported over-ring '" + std::string(s) + "'");
  }
  return o;
}

std::string to_string(const Over& o) {
  switch (o.kind) {
    case Over::Kind::PureInf: return "pureinf";
    case Over::Kind::Z: return "z";
    case Over::Kind::Rq: return "r(" + to_string(o.q) + ")";
    case Over::Kind::Interval: return "interval";
  }
  return "?";
}

NamedVerdict semimodule_test(const NamedCu& s, const Over& over) {
  std::vector<std::string> props;
  switch (over.kind) {
    case Over::Kind::PureInf: props = {"idempotent"}; break;
    case Over::Kind::Z: props = {"almost-unperforated", "almost-divisible"}; break;
    case Over::Kind::Rq: props = {"q-divisible", "q-unperforated"}; break;
    case Over::Kind::Interval: props = {"almost-unperforated", "almost-divisible", "all-soft"}; break;
  }
  for (const auto& p : props) {
    NamedVerdict v = named_property(s, p, over.q);
    if (!v.holds()) return v;
  }
  return holds();
}

Verdict semimodule_test(const FinPom& m, const Over& over) {
  std::vector<Property> props;
  switch (over.kind) {
    case Over::Kind::PureInf: props = {{Prop::Idempotent}}; break;
    case Over::Kind::Z: props = {{Prop::AlmostUnperforated}, {Prop::AlmostDivisible}}; break;
    case Over::Kind::Rq:
      if (over.q.all_primes) throw InputError("finite carriers need a finite set of primes in q");
      // n | q ranges over products of the primes of q; divisibility and unperforation compose.
      for (std::int64_t p : over.q.primes) {
        props.push_back({Prop::NDivisible, static_cast<int>(p)});
        props.push_back({Prop::NUnperforated, static_cast<int>(p)});
      }
      break;
    case Over::Kind::Interval: props = {{Prop::AlmostUnperforated}, {Prop::AlmostDivisible}}; break;
  }
  for (const auto& p : props) {
    Verdict v = check_property(m, p);
    if (!v.holds()) return v;
  }
  if (over.kind == Over::Kind::Interval) {
    auto soft = soft_elements(m);
    for (int a = 0; a < m.n; ++a)
      if (!soft[a]) return make_fails("all-soft", {a});
  }
  return make_holds();
}

NamedVerdict tensor_unit_compare(const NamedCu& s, const Over& over, const Elem& a, const Elem& b) {
  if (!contains(s, a) || !contains(s, b)) throw InputError("element not in " + to_string(s));
  bool result = false;
  switch (over.kind) {
    case Over::Kind::PureInf:
      result = leq(s, a, b.is_zero() ? Elem::zero() : top(s));
      break;
    case Over::Kind::Rq: {
      // ∀a' ≪ a ∃n | q: na' ≤ nb.
      if (!is_compact(s, a)) {
        // The condition is monotone in a' and the approximants climb to a.
        result = leq(s, a, b);
      } else if (a.is_zero()) {
        result = true;
      } else if (b.is_zero()) {
        result = false;
      } else if (elementary_like(s)) {
        result = true;  // n·b = ∞ once n exceeds k
      } else if (s.kind == Kind::ExtNat) {
        result = leq(s, a, b);
      } else if (b.soft) {
        result = b.inf || a.value < b.value;
      } else if (a.value != b.value) {
        result = a.value < b.value;
      } else {
        std::int64_t n = torsion_of(s);
        std::int64_t diff = ((a.tau - b.tau) % n + n) % n;
        std::int64_t need = n / std::gcd(n, diff == 0 ? n : diff);
        result = over.q.divides(need);
      }
      break;
    }
    case Over::Kind::Interval:
      if (!has_functional(s)) throw InputError("the Interval criterion needs a unique normalized functional");
      result = lambda(s, a) <= lambda(s, b);
      break;
    case Over::Kind::Z: throw InputError("tensor unit comparison supports pureinf, r(q) and interval");
  }
  if (result) return holds();
  return fails("tensor-unit-compare", {a, b});
}

Verdict tensor_unit_compare(const FinPom& m, const Over& over, int a, int b) {
  if (a < 0 || a >= m.n || b < 0 || b >= m.n) throw InputError("element out of range");
  switch (over.kind) {
    case Over::Kind::PureInf: {
      auto ideal = ideal_generated(m, b);
      return ideal[a] ? make_holds() : make_fails("tensor-unit-compare", {a, b});
    }
    case Over::Kind::Rq: {
      if (over.q.all_primes) throw InputError("finite carriers need a finite set of primes in q");
      // Pairs (n·a', n·b) for n | q are the orbit of (a', b) under x ↦ p·x.
      for (int ap = 0; ap < m.n; ++ap) {
        if (!m.le(ap, a)) continue;
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(m.n) * m.n, 0);
        std::vector<std::pair<int, int>> stack{{ap, b}};
        seen[static_cast<std::size_t>(ap) * m.n + b] = 1;
        bool found = false;
        while (!stack.empty() && !found) {
          auto [x, y] = stack.back();
          stack.pop_back();
          if (m.le(x, y)) {
            found = true;
            break;
          }
          for (std::int64_t p : over.q.primes) {
            int nx = m.times(p, x), ny = m.times(p, y);
            auto& f = seen[static_cast<std::size_t>(nx) * m.n + ny];
            if (!f) {
              f = 1;
              stack.push_back({nx, ny});
            }
          }
        }
        if (!found) return make_fails("tensor-unit-compare", {a, b, ap});
      }
      return make_holds();
    }
    case Over::Kind::Interval:
      throw InputError("the Interval criterion needs a computable functional space; not available on finite carriers");
    case Over::Kind::Z: break;
  }
  throw InputError("tensor unit comparison supports pureinf, r(q) and interval");
}

// ---- solidity ---------------------------------------------------------------

SolidityWitness solidity_witness(const NamedCu& s, const Elem& a, bool with_certificate) {
  if (s.kind != Kind::GenSolid) throw InputError("solidity witnesses need a gensolid semiring");
  if (!contains(s, a)) throw InputError("element not in " + to_string(s));
  if (a.soft) throw InputError("soft elements are handled by the functional: a⊗1 and 1⊗a both have λ = λ(a)");
  SolidityWitness w;
  if (a.is_zero()) {
    w.k = 0;
    return w;
  }
  const std::int64_t N = torsion_of(s);
  const std::int64_t d = to_i64(bmp::denominator(a.value));
  const std::int64_t p = to_i64(bmp::numerator(a.value));
  // d·a = (p, dτ); p·1 = (p, p). The torsion gap dτ − p has some order m in ℤ/N.
  std::int64_t gap = static_cast<std::int64_t>(((static_cast<__int128>(d) * a.tau - p) % N + N) % N);
  std::int64_t m = gap == 0 ? 1 : N / std::gcd(N, gap);
  w.n = d * m;
  w.k = Q(p) * m;
  if (!(times(s, w.n, a) == times(s, to_i64(bmp::numerator(w.k)), unit(s))))
    throw std::logic_error("solidity witness does not satisfy na = k·1");
  if (!with_certificate) return w;

  GridCarrier g(d, N, 1);
  const Code ca = g.encode(p, a.tau), cu = g.encode(d, 1 % N);
  const std::int64_t k = to_i64(bmp::numerator(w.k));
  for (std::int64_t i = 0; i < w.n; ++i) {
    w.lhs.push_back({ca, cu});
    w.rhs.push_back({cu, ca});
  }
  auto all = [](std::int64_t count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  // n·(a⊗1) → (na)⊗1 = (k·1)⊗1 → k·(1⊗1) → 1⊗(k·1) = 1⊗(na) → n·(1⊗a).
  if (w.n >= 2) w.certificate.push_back({StepKind::MergeLeft, all(w.n), {}, {0, 0}});
  if (k >= 2) {
    w.certificate.push_back({StepKind::SplitLeft, {0}, std::vector<Code>(static_cast<std::size_t>(k), cu), {0, 0}});
    w.certificate.push_back({StepKind::MergeRight, all(k), {}, {0, 0}});
  }
  if (w.n >= 2)
    w.certificate.push_back({StepKind::SplitRight, {0}, std::vector<Code>(static_cast<std::size_t>(w.n), ca), {0, 0}});
  w.carrier = g;
  return w;
}

const char* to_string(SolidClass::Kind k) {
  switch (k) {
    case SolidClass::Kind::Zero: return "Zero";
    case SolidClass::Kind::Elementary: return "Elementary";
    case SolidClass::Kind::ExtNat: return "ExtNatCase";
    case SolidClass::Kind::Interval: return "Interval";
    case SolidClass::Kind::Z: return "ZCase";
    case SolidClass::Kind::AlgebraicSolid: return "AlgebraicSolid";
    case SolidClass::Kind::NotSolid: return "NotSolid";
  }
  return "?";
}

SolidClass classify_solid(const NamedCu& s) {
  SolidClass c;
  switch (s.kind) {
    case Kind::PureInf: c.kind = SolidClass::Kind::Elementary; c.k = 0; return c;
    case Kind::Elementary: c.kind = SolidClass::Kind::Elementary; c.k = s.k; return c;
    case Kind::ExtNat: c.kind = SolidClass::Kind::ExtNat; return c;
    case Kind::Interval:
      // Nonzero elements are all soft, so the unit is not compact.
      c.kind = SolidClass::Kind::Interval;
      return c;
    case Kind::GenSolid: break;
  }
  // Compact unit, nonelementary: λ(S_c) ⊆ ℕ exactly when no prime is inverted.
  c.spec = s.spec;
  c.kind = s.spec.P.is_one() ? SolidClass::Kind::Z : SolidClass::Kind::AlgebraicSolid;
  // Solidity on the generators of the compact part.
  std::vector<Elem> gens{unit(s), Elem::compact(1, 0)};
  std::vector<std::int64_t> primes = s.spec.P.all_primes ? std::vector<std::int64_t>{2, 3, 5, 7} : s.spec.P.primes;
  for (std::int64_t p : primes) gens.push_back(Elem::compact(Q(1, p), 0));
  for (const Elem& g : gens) {
    SolidityWitness w = solidity_witness(s, g, true);
    if (!replay(*w.carrier, *w.carrier, w.lhs, w.rhs, w.certificate) || !is_equivalence(w.certificate))
      throw std::logic_error("solidity certificate failed to replay");
  }
  return c;
}

Verdict validate_semiring(const FinPom& m, const std::vector<int>& mul, int u) {
  check_shape(m);
  if (mul.size() != static_cast<std::size_t>(m.n) * m.n) throw InputError("multiplication table has the wrong size");
  for (int x : mul)
    if (x < 0 || x >= m.n) throw InputError("multiplication entry out of range");
  if (u < 0 || u >= m.n) throw InputError("unit out of range");
  auto M = [&](int a, int b) { return mul[static_cast<std::size_t>(a) * m.n + b]; };
  for (int a = 0; a < m.n; ++a) {
    if (M(u, a) != a) return make_fails("unit", {a});
    if (M(m.zero, a) != m.zero) return make_fails("zero-product", {a});
    for (int b = 0; b < m.n; ++b) {
      if (M(a, b) != M(b, a)) return make_fails("commutativity", {a, b});
      for (int c = 0; c < m.n; ++c) {
        if (M(a, M(b, c)) != M(M(a, b), c)) return make_fails("associativity", {a, b, c});
        if (M(a, m.sum(b, c)) != m.sum(M(a, b), M(a, c))) return make_fails("distributivity", {a, b, c});
        if (m.le(b, c) && !m.le(M(a, b), M(a, c))) return make_fails("monotonicity", {a, b, c});
      }
    }
  }
  return make_holds();
}

SolidClass classify_solid(const FinPom& m, const std::vector<int>& mul, int u) {
  SolidClass c;
  Verdict laws = validate_semiring(m, mul, u);
  if (!laws.holds()) {
    c.reason = "not a Cu-semiring (" + laws.tag + " fails)";
    return c;
  }
  if (m.n == 1) {
    c.kind = SolidClass::Kind::Zero;
    return c;
  }
  SimpleClass sc = classify_simple(m);
  if (sc.kind != SimpleClass::Kind::Elementary) {
    c.reason = sc.kind == SimpleClass::Kind::Zero ? "zero semigroup" : sc.reason;
    return c;
  }
  // E_k carries a unique Cu-product; compare through the isomorphism.
  NamedCu ek = NamedCu::elementary(sc.k);
  auto elem_of = [&](int i) {
    int j = sc.iso[i];  // index in make_elementary(k): 0, 1..k, k+1 = ∞
    return j == sc.k + 1 ? Elem::compact_infinity() : Elem::compact(j);
  };
  if (!(elem_of(u) == unit(ek))) {
    c.reason = "unit is not the unit of E_" + std::to_string(sc.k);
    return c;
  }
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (!(elem_of(mul[static_cast<std::size_t>(a) * m.n + b]) == cusg::mul(ek, elem_of(a), elem_of(b)))) {
        c.reason = "multiplication differs from the product of E_" + std::to_string(sc.k);
        return c;
      }
  // a⊗1 = 1⊗a in the saturated tensor square.
  Saturation sat = tensor_saturate(m, m, 4);
  if (sat.ok) {
    for (int a = 0; a < m.n; ++a) {
      if (a == m.zero) continue;
      if (sat.class_of({{a, u}}) != sat.class_of({{u, a}})) {
        c.reason = "a⊗1 differs from 1⊗a";
        return c;
      }
    }
  }
  c.kind = SolidClass::Kind::Elementary;
  c.k = sc.k;
  return c;
}

// ---- initial and terminal maps ----------------------------------------------

Elem InitialTerminal::from_z(const Elem& x) const {
  if (x.is_zero()) return Elem::zero();
  if (x.soft) return x;
  return times(s, to_i64(bmp::numerator(x.value)), unit(s));
}

Elem InitialTerminal::to_q(const Elem& x) const {
  if (x.soft || x.is_zero()) return x;
  return Elem::compact(x.value, 0);
}

InitialTerminal initial_terminal_maps(const NamedCu& s) {
  if (s.kind != Kind::GenSolid) throw InputError("initial and terminal maps need a nonelementary solid semiring with compact unit");
  InitialTerminal it;
  it.s = s;
  it.q = NamedCu::rq(Supernatural{{}, true});
  return it;
}

Verdict check_initial_terminal(const InitialTerminal& it, const std::vector<Elem>& zs, const std::vector<Elem>& ss) {
  auto check = [](const NamedCu& from, const NamedCu& to, const std::vector<Elem>& xs, auto f,
                  const std::string& name) -> std::optional<Verdict> {
    if (!(f(unit(from)) == unit(to))) return make_fails(name + ":unital", {});
    if (!(f(Elem::zero()) == Elem::zero())) return make_fails(name + ":zero", {});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!contains(to, f(xs[i]))) return make_fails(name + ":range", {static_cast<std::int64_t>(i)});
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const Elem &x = xs[i], &y = xs[j];
        std::vector<std::int64_t> w{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
        if (!(f(add(from, x, y)) == add(to, f(x), f(y)))) return make_fails(name + ":additive", w);
        if (!(f(mul(from, x, y)) == mul(to, f(x), f(y)))) return make_fails(name + ":multiplicative", w);
        if (leq(from, x, y) && !leq(to, f(x), f(y))) return make_fails(name + ":monotone", w);
      }
    }
    return std::nullopt;
  };
  if (auto v = check(it.z, it.s, zs, [&](const Elem& x) { return it.from_z(x); }, "from-z")) return *v;
  if (auto v = check(it.s, it.q, ss, [&](const Elem& x) { return it.to_q(x); }, "to-q")) return *v;
  return make_holds();
}

// ---- comparison --------------------------------------------------------------

Comparison comparison_suite(const NamedCu& s, const Elem& a, const Elem& b) {
  if (!contains(s, a) || !contains(s, b)) throw InputError("element not in " + to_string(s));
  Comparison c;
  c.leq = leq(s, a, b);
  c.waybelow = waybelow(s, a, b);
  c.prop_tau = leq(s, a, b.is_zero() ? Elem::zero() : top(s));
  if (elementary_like(s)) {
    // F(S) = {0, λ_∞} and large multiples of nonzero elements are ∞.
    bool r = a.is_zero() || !b.is_zero();
    c.less_s = c.hat_less_s = c.item3 = c.less_s_tau = c.hat_leq = c.prop = c.less_p = r;
  } else {
    ExtQ la = lambda(s, a), lb = lambda(s, b);
    bool strict = a.is_zero() || la < lb || (la.inf && lb.inf);
    c.less_s = strict;
    c.hat_less_s = strict;
    bool normalized_strict = lb.inf || lb.value == 0 || la < lb;
    c.item3 = c.prop_tau && normalized_strict;
    c.less_s_tau = is_compact(s, a) ? strict : la <= lb;
    c.hat_leq = la <= lb;
    c.prop = a.is_zero() || (!b.is_zero() && (!la.inf || lb.inf));
    c.less_p = c.leq;
  }
  auto imply = [&](bool p, bool q, const char* name) {
    if (p && !q) c.violations.push_back(name);
  };
  imply(c.waybelow, c.leq, "waybelow => leq");
  imply(c.less_s, c.hat_less_s, "(1) => (2)");
  imply(c.hat_less_s, c.item3, "(2) => (3)");
  imply(c.item3, c.less_s_tau, "(3) => (4)");
  imply(c.less_s_tau, c.hat_leq, "(4) => (5)");
  imply(is_compact(s, a) && c.less_s_tau, c.less_s, "compact: (4) => (1)");
  imply(is_soft(s, a) && c.hat_leq, c.less_s_tau, "soft: (5) => (4)");
  imply(s.kind != Kind::Elementary && c.less_s_tau, c.leq, "almost unperforated: (4) => leq");
  imply(c.leq, c.hat_leq, "leq => (5)");
  imply(c.prop, c.prop_tau, "prop => prop_tau");
  return c;
}

LimitComparison rq_limit_simplicial(int m) {
  if (m < 0 || m > 12) throw InputError("limit stage must lie in [0, 12]");
  std::vector<FinPom> stages;
  std::vector<std::vector<int>> maps;
  for (int i = 0; i <= m; ++i) {
    const int k = 1 << i;
    stages.push_back(make_elementary(k));
    if (i == m) break;
    std::vector<int> f(k + 2);
    for (int j = 0; j <= k; ++j) f[j] = 2 * j;
    f[k + 1] = 2 * k + 1;  // ∞
    maps.push_back(std::move(f));
  }
  LimitStage stage = inductive_limit_stage(stages, maps, m);
  const NamedCu r = NamedCu::rq(parse_supernatural("2^inf"));
  const std::int64_t top = std::int64_t{1} << m;
  auto phi = [&](int i, int x) {
    const std::int64_t k = std::int64_t{1} << i;
    return x > k ? Elem::soft_infinity() : Elem::compact(Q(x) / k);
  };
  const FinPom& pom = stage.pom;
  LimitComparison out;
  out.m = m;
  out.elements = pom.n;

  std::vector<Elem> image;
  for (int x = 0; x < pom.n; ++x) image.push_back(phi(m, x));
  bool onto = pom.n == top + 2;
  for (std::int64_t j = 0; j <= top && onto; ++j) {
    Elem want = Elem::compact(Q(j) / top);
    onto = std::count(image.begin(), image.end(), want) == 1;
  }
  out.bijective = onto && std::count(image.begin(), image.end(), Elem::soft_infinity()) == 1;

  out.order_exact = true;
  out.additive = true;
  for (int x = 0; x < pom.n; ++x)
    for (int y = 0; y < pom.n; ++y) {
      if (pom.le(x, y) != leq(r, image[x], image[y])) out.order_exact = false;
      Elem s = add(r, image[x], image[y]);
      if (leq(r, s, unit(r)) && !(image[pom.sum(x, y)] == s)) out.additive = false;
    }

  out.maps_consistent = true;
  for (int i = 0; i <= m; ++i)
    for (int x = 0; x < stages[i].n; ++x)
      if (!(image[stage.to_k[i][x]] == phi(i, x))) out.maps_consistent = false;
  return out;
}

}  // namespace cusg
