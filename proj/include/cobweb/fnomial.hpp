#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

/// Exact F-nomial value in lowest terms. Non-integral values are legitimate
/// results: admissibility checks need to see them.
struct FNomialValue {
  BigInt numerator = 1;
  BigInt denominator = 1;  // always positive
  bool integral = true;

  static FNomialValue from(const Rational& r) {
    FNomialValue v;
    v.numerator = cobweb::numerator(r);
    v.denominator = cobweb::denominator(r);
    v.integral = v.denominator == 1;
    return v;
  }

  Rational as_rational() const { return Rational(numerator, denominator); }

  /// "15" for integral values, "p/q" otherwise.
  std::string str() const { return integral ? numerator.str() : numerator.str() + "/" + denominator.str(); }

  friend bool operator==(const FNomialValue&, const FNomialValue&) = default;
};

namespace detail {
inline BigInt nonzero_term(const FSequence& F, std::uint64_t j) {
  BigInt t = F.term(j);
  if (t == 0) throw DomainError("sequence '" + F.spec() + "' has zero term at n=" + std::to_string(j));
  return t;
}
}  // namespace detail

/// n_F! = F_1 F_2 ... F_n, with 0_F! = 1.
inline BigInt f_factorial(const FSequence& F, std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t j = 1; j <= n; ++j) acc *= detail::nonzero_term(F, j);
  return acc;
}

/// Falling F-factorial F_n F_{n-1} ... F_{n-k+1}; the empty product is 1.
inline BigInt falling_f(const FSequence& F, std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw DomainError("falling_f: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  }
  BigInt acc = 1;
  for (std::uint64_t j = n - k + 1; j <= n; ++j) acc *= detail::nonzero_term(F, j);
  return acc;
}

/// (n over k)_F computed as falling_f(F, n, k) / k_F!.
inline FNomialValue f_nomial(const FSequence& F, std::uint64_t n, std::uint64_t k) {
  if (k > n) throw DomainError("f_nomial: k=" + std::to_string(k) + " outside 0..n=" + std::to_string(n));
  // Terms n-k+1..n appear in the falling product; 1..k in the factorial. Check
  // the remaining ones too so a zero term below n is always reported.
  for (std::uint64_t j = 1; j <= n; ++j) detail::nonzero_term(F, j);
  return FNomialValue::from(ratio(falling_f(F, n, k), f_factorial(F, k)));
}

/// Same quantity through three full factorials. Kept as the second route for
/// cross-checking f_nomial.
inline FNomialValue f_nomial_by_factorials(const FSequence& F, std::uint64_t n, std::uint64_t k) {
  if (k > n) throw DomainError("f_nomial: k=" + std::to_string(k) + " outside 0..n=" + std::to_string(n));
  return FNomialValue::from(ratio(f_factorial(F, n), f_factorial(F, k) * f_factorial(F, n - k)));
}

using FNomialTriangle = std::vector<std::vector<FNomialValue>>;

/// Rows 0..rows-1; row n holds k = 0..n.
inline FNomialTriangle f_nomial_triangle(const FSequence& F, std::uint64_t rows) {
  FNomialTriangle table;
  if (rows == 0) return table;
  F.require_nonzero_upto(rows - 1);
  std::vector<BigInt> fact{1};
  for (std::uint64_t j = 1; j < rows; ++j) fact.push_back(fact.back() * F.term(j));
  table.reserve(rows);
  for (std::uint64_t n = 0; n < rows; ++n) {
    std::vector<FNomialValue> row;
    row.reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
      row.push_back(FNomialValue::from(ratio(fact[n], fact[k] * fact[n - k])));
    }
    table.push_back(std::move(row));
  }
  return table;
}

/// One line per row n, entries k = 0..n (ragged).
inline std::string triangle_to_csv(const FNomialTriangle& table) {
  std::ostringstream out;
  for (const auto& row : table) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != 0) out << ',';
      out << row[k].str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cobweb
