#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "girthforge/util.hpp"

namespace girthforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigInt ipow(const BigInt& b, unsigned e) {
  BigInt r = 1, x = b;
  for (; e; e >>= 1) {
    if (e & 1) r *= x;
    x *= x;
  }
  return r;
}

inline Rational rpow(const Rational& b, unsigned e) {
  return Rational(ipow(numerator(b), e), ipow(denominator(b), e));
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Parses "3", "-1/2" or a decimal like "0.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&] { throw ConfigError("cannot parse rational '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) bad();
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty()) tail = "0";
    bool neg = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-") head += "0";
    BigInt scale = ipow(10, unsigned(tail.size()));
    BigInt whole(head), frac(tail);
    BigInt num = whole * scale;
    if (neg)
      num -= frac;
    else
      num += frac;
    return Rational(num, scale);
  } catch (const std::exception&) {
    bad();
  }
  return 0;  // unreachable
}

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace girthforge
