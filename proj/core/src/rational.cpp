#include "cusg/rational.hpp"

#include "cusg/error.hpp"

#include <cctype>

namespace cusg {

ExtQ operator+(const ExtQ& a, const ExtQ& b) {
  if (a.inf || b.inf) return ExtQ::infinity();
  return ExtQ::of(a.value + b.value);
}

ExtQ operator*(const ExtQ& a, const ExtQ& b) {
  bool a_zero = !a.inf && a.value == 0;
  bool b_zero = !b.inf && b.value == 0;
  if (a_zero || b_zero) return ExtQ::of(0);
  if (a.inf || b.inf) return ExtQ::infinity();
  return ExtQ::of(a.value * b.value);
}

std::string to_string(const Q& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const ExtQ& q) { return q.inf ? "inf" : to_string(q.value); }

namespace {

Z parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw InputError("expected an integer, got '" + std::string(s) + "'");
  Z v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("expected an integer, got '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Z(-v) : v;
}

}  // namespace

Q parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Q(parse_integer(s));
  Z num = parse_integer(s.substr(0, slash));
  Z den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  return Q(num, den);
}

ExtQ parse_ext(std::string_view s) {
  if (s == "inf" || s == "∞") return ExtQ::infinity();
  return ExtQ::of(parse_rational(s));
}

std::int64_t to_i64(const Z& z) {
  if (z > Z(INT64_MAX) || z < Z(INT64_MIN)) throw InputError("integer out of 64-bit range");
  return static_cast<std::int64_t>(z);
}

}  // namespace cusg
