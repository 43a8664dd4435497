#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace cusg {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

// Nonnegative-or-finite rational extended by +∞.
struct ExtQ {
  bool inf = false;
  Q value = 0;

  static ExtQ infinity() { return ExtQ{true, 0}; }
  static ExtQ of(Q v) { return ExtQ{false, std::move(v)}; }

  bool operator==(const ExtQ& o) const { return inf == o.inf && (inf || value == o.value); }
  bool operator<(const ExtQ& o) const {
    if (inf) return false;
    if (o.inf) return true;
    return value < o.value;
  }
  bool operator<=(const ExtQ& o) const { return !(o < *this); }
  bool operator>(const ExtQ& o) const { return o < *this; }
  bool operator>=(const ExtQ& o) const { return !(*this < o); }
};

ExtQ operator+(const ExtQ& a, const ExtQ& b);
// 0·∞ = 0.
ExtQ operator*(const ExtQ& a, const ExtQ& b);

std::string to_string(const Q& q);
std::string to_string(const ExtQ& q);
// Accepts "p", "p/q", "inf"; throws InputError otherwise.
Q parse_rational(std::string_view s);
ExtQ parse_ext(std::string_view s);

std::int64_t to_i64(const Z& z);

}  // namespace cusg
