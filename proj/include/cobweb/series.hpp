#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/gfp.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

inline constexpr std::uint64_t kDefaultSeriesOrder = 16;

/// Power series truncated after x^D with exact rational coefficients.
/// Binary operations keep the smaller truncation order of their operands.
class FormalSeries {
 public:
  explicit FormalSeries(std::uint64_t order) : coeffs_(order + 1) {}
  explicit FormalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least the constant coefficient");
  }

  static FormalSeries constant(const Rational& c, std::uint64_t order) {
    FormalSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::uint64_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::uint64_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::uint64_t n) { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  FormalSeries truncated(std::uint64_t order) const {
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return FormalSeries(std::move(c));
  }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries out(std::min(a.order(), b.order()));
    for (std::uint64_t n = 0; n <= out.order(); ++n) out[n] = a[n] + b[n];
    return out;
  }

  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries out(std::min(a.order(), b.order()));
    for (std::uint64_t n = 0; n <= out.order(); ++n) out[n] = a[n] - b[n];
    return out;
  }

  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries out(std::min(a.order(), b.order()));
    for (std::uint64_t n = 0; n <= out.order(); ++n) {
      Rational acc = 0;
      for (std::uint64_t i = 0; i <= n; ++i) {
        if (a[i] != 0 && b[n - i] != 0) acc += a[i] * b[n - i];
      }
      out[n] = acc;
    }
    return out;
  }

  friend FormalSeries operator*(const Rational& c, const FormalSeries& a) {
    FormalSeries out(a.order());
    for (std::uint64_t n = 0; n <= a.order(); ++n) out[n] = c * a[n];
    return out;
  }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

inline FormalSeries series_add(const FormalSeries& a, const FormalSeries& b) { return a + b; }
inline FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) { return a * b; }

inline FormalSeries series_pow(const FormalSeries& a, std::uint64_t k) {
  FormalSeries out = FormalSeries::constant(1, a.order());
  for (std::uint64_t i = 0; i < k; ++i) out = out * a;
  return out;
}

/// exp(A) for A with zero constant term, from E' = A'E:
/// n E_n = sum_{j=1..n} j A_j E_{n-j}.
inline FormalSeries series_exp(const FormalSeries& a) {
  if (a[0] != 0) throw DomainError("series_exp needs a zero constant term");
  FormalSeries e(a.order());
  e[0] = 1;
  for (std::uint64_t n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
      if (a[j] != 0) acc += Rational(j) * a[j] * e[n - j];
    }
    e[n] = acc / n;
  }
  return e;
}

/// exp_F(x) = sum_n x^n / n_F!.
inline FormalSeries exp_F_series(const FSequence& F, std::uint64_t order) {
  F.require_nonzero_upto(order);
  FormalSeries s(order);
  BigInt fact = 1;
  s[0] = 1;
  for (std::uint64_t n = 1; n <= order; ++n) {
    fact *= F.term(n);
    s[n] = Rational(BigInt(1), fact);
  }
  return s;
}

/// Prefab enumerator exp(exp_F(x) - 1): primes contribute exp_F(x) - 1.
inline FormalSeries prefab_enumerator(const FSequence& F, std::uint64_t order) {
  FormalSeries primes = exp_F_series(F, order);
  primes[0] = 0;
  return series_exp(primes);
}

/// n_F! [x^n] exp(exp_F(x) - 1); the Bell numbers for F = natural.
inline Rational bell_F(const FSequence& F, std::uint64_t n) {
  return Rational(f_factorial(F, n)) * prefab_enumerator(F, n)[n];
}

/// Factorial system n_gamma! = prod_{i<n} (q^n - q^i) = |GL_n(F_q)|.
struct QBellContext {
  std::uint64_t q = 2;
  std::uint64_t n = 0;
  std::vector<BigInt> factorials;  // index 0..n

  QBellContext(std::uint64_t q_, std::uint64_t n_) : q(q_), n(n_) {
    if (q < 2) throw DomainError("q must be >= 2");
    for (std::uint64_t d = 0; d <= n; ++d) {
      BigInt acc = 1;
      const BigInt qd = pow_int(BigInt(q), d);
      for (std::uint64_t i = 0; i < d; ++i) acc *= qd - pow_int(BigInt(q), i);
      factorials.push_back(std::move(acc));
    }
  }

  /// exp_gamma(x) - 1 truncated at x^n.
  FormalSeries primes() const {
    FormalSeries s(n);
    for (std::uint64_t d = 1; d <= n; ++d) s[d] = Rational(BigInt(1), factorials[d]);
    return s;
  }
};

inline BigInt gl_order(std::uint64_t q, std::uint64_t n) {
  if (q < 2) throw DomainError("gl_order needs q >= 2");
  return QBellContext(q, n).factorials[n];
}

namespace detail {
inline void require_prime_field(std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("q=" + std::to_string(q) + " must be prime");
}
inline BigInt require_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1) throw DomainError(std::string(what) + " is not an integer: " + to_fraction_string(r));
  return numerator(r);
}
}  // namespace detail

/// n_gamma! [x^n] (exp_gamma(x) - 1)^k / k!.
inline BigInt q_stirling(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  detail::require_prime_field(q);
  if (n < 1 || k < 1 || k > n) throw DomainError("q_stirling needs 1 <= k <= n");
  const QBellContext ctx(q, n);
  const FormalSeries power = series_pow(ctx.primes(), k);
  BigInt kfact = 1;
  for (std::uint64_t i = 2; i <= k; ++i) kfact *= i;
  return detail::require_integer(Rational(ctx.factorials[n]) * power[n] / Rational(kfact), "q_stirling");
}

/// n_gamma! [x^n] exp(exp_gamma(x) - 1).
inline BigInt q_bell(std::uint64_t q, std::uint64_t n) {
  detail::require_prime_field(q);
  const QBellContext ctx(q, n);
  const FormalSeries e = series_exp(ctx.primes());
  return detail::require_integer(Rational(ctx.factorials[n]) * e[n], "q_bell");
}

}  // namespace cobweb
