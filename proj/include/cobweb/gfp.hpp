#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"

namespace cobweb {

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

/// Linear algebra over the prime field GF(p). Vectors are coordinate tuples.
namespace gfp {

using Row = std::vector<std::uint32_t>;
using Rows = std::vector<Row>;

inline std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

/// Reduced row-echelon form; zero rows dropped. Canonical for the row space.
inline Rows rref(Rows rows, std::uint32_t p) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t t = 0; t < cols; ++t) {
        rows[r][t] = static_cast<std::uint32_t>((rows[r][t] + (p - f) * rows[rank][t]) % p);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline std::size_t rank(const Rows& rows, std::uint32_t p) { return rref(rows, p).size(); }

/// Every subspace of GF(p)^n, each given by its RREF basis. Generated directly
/// from pivot patterns, so each subspace appears exactly once.
inline std::vector<Rows> enumerate_subspaces(std::uint32_t p, std::uint32_t n) {
  std::vector<Rows> out;
  for (std::uint32_t r = 0; r <= n; ++r) {
    // Pivot column sets as bitmasks with r bits.
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != r) continue;
      std::vector<std::uint32_t> pivots;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (mask & (1U << c)) pivots.push_back(c);
      }
      // Free positions: row i, non-pivot columns right of pivot i.
      std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
      for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t c = pivots[i] + 1; c < n; ++c) {
          if (!(mask & (1U << c))) free.emplace_back(i, c);
        }
      }
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Rows basis(r, Row(n, 0));
        for (std::uint32_t i = 0; i < r; ++i) basis[i][pivots[i]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) basis[free[f].first][free[f].second] = digits[f];
        out.push_back(std::move(basis));
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
        if (f == digits.size()) break;
      }
    }
  }
  return out;
}

/// Counts n x n matrices over GF(p) of full rank by enumerating all of them.
inline std::uint64_t count_invertible_matrices(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw DomainError("count_invertible_matrices needs a prime field");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) {
    total *= p;
    if (total > 50'000'000) throw DomainError("matrix enumeration too large");
  }
  std::vector<std::uint32_t> digits(n * n, 0);
  std::uint64_t invertible = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Rows m(n, Row(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) m[i][j] = digits[i * n + j];
    }
    if (rank(m, p) == n) ++invertible;
    std::size_t d = 0;
    while (d < digits.size() && ++digits[d] == p) digits[d++] = 0;
  }
  return invertible;
}

}  // namespace gfp

inline constexpr std::uint32_t kMaxDecompositionDimension = 4;

/// Unordered direct-sum decompositions of GF(q)^n into nonzero subspaces,
/// counted by enumerating subspaces and choosing independent spanning sets.
/// The empty decomposition of the zero space counts once.
inline std::uint64_t decomposition_oracle(std::uint32_t q, std::uint32_t n) {
  if (!is_prime(q)) throw DomainError("decomposition_oracle needs prime q, got " + std::to_string(q));
  if (n > kMaxDecompositionDimension) {
    throw DomainError("decomposition_oracle limited to n <= " + std::to_string(kMaxDecompositionDimension));
  }
  if (n == 0) return 1;
  std::vector<gfp::Rows> subspaces;
  for (auto& s : gfp::enumerate_subspaces(q, n)) {
    if (!s.empty()) subspaces.push_back(std::move(s));
  }
  std::uint64_t count = 0;
  // Depth-first over increasing indices; `span` holds the union of chosen bases.
  auto search = [&](auto&& self, std::size_t start, const gfp::Rows& span) -> void {
    if (span.size() == n) {
      ++count;
      return;
    }
    for (std::size_t i = start; i < subspaces.size(); ++i) {
      const auto& w = subspaces[i];
      if (span.size() + w.size() > n) continue;
      gfp::Rows joined = span;
      joined.insert(joined.end(), w.begin(), w.end());
      if (gfp::rank(joined, q) == joined.size()) self(self, i + 1, joined);
    }
  };
  search(search, 0, gfp::Rows{});
  return count;
}

}  // namespace cobweb
