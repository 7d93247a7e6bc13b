#pragma once

#include <cstdint>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

/// Set partitions of an n-set, counted by walking every restricted growth
/// string a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}).
inline std::uint64_t set_partition_count(std::uint64_t n) {
  if (n > 14) throw DomainError("set_partition_count limited to n <= 14");
  if (n == 0) return 1;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> a(n, 0), running_max(n, 0);
  // Iterate over positions 1..n-1; position 0 is fixed at 0.
  auto walk = [&](auto&& self, std::uint64_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (std::uint64_t v = 0; v <= running_max[i - 1] + 1; ++v) {
      a[i] = v;
      running_max[i] = std::max(running_max[i - 1], v);
      self(self, i + 1);
    }
  };
  walk(walk, 1);
  return count;
}

/// [x^n] exp(exp_F(x) - 1) as a sum over integer partitions of n:
/// prod_i 1/(lambda_i)_F! divided by prod_j (multiplicity of j)!.
inline Rational partition_sum_coefficient(const FSequence& F, std::uint64_t n) {
  std::vector<BigInt> fact{1};
  for (std::uint64_t j = 1; j <= n; ++j) fact.push_back(fact.back() * F.term(j));
  Rational total = 0;
  std::vector<std::uint64_t> parts;
  auto emit = [&]() {
    Rational term = 1;
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      term /= Rational(fact[parts[i]]);
      run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
      term /= Rational(run);  // builds multiplicity! one factor at a time
    }
    total += term;
  };
  // Non-increasing parts.
  auto walk = [&](auto&& self, std::uint64_t remaining, std::uint64_t max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::uint64_t p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  walk(walk, n, n);
  return total;
}

}  // namespace cobweb
