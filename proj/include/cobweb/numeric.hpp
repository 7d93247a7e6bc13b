#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Always "p/q", including integers ("3/1").
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_compact_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return to_fraction_string(r);
}

/// num/den in lowest terms; den may be negative.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DomainError("division by zero");
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw InputError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw InputError("malformed integer literal '" + text + "'");
  for (std::size_t p = i; p < text.size(); ++p) {
    if (text[p] < '0' || text[p] > '9') throw InputError("malformed integer literal '" + text + "'");
  }
  return BigInt(text);
}

inline BigInt pow_int(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Narrowing for quantities that index memory (level sizes, vertex counts).
inline std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError(std::string(what) + " out of 64-bit range: " + v.str());
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace cobweb

namespace cobweb {

/// Ordinary binomial coefficient C(a, b); 0 when b > a.
inline BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    acc *= a - b + i;
    acc /= i;
  }
  return acc;
}

}  // namespace cobweb
