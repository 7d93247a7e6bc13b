#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// Dense exact-integer square matrix indexed by poset vertices in the
/// contract order (level-major, j ascending).
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  explicit IncidenceMatrix(std::vector<Vertex> order)
      : order_(std::move(order)), n_(order_.size()), cells_(n_ * n_) {}

  static IncidenceMatrix identity(std::vector<Vertex> order) {
    IncidenceMatrix m(std::move(order));
    for (std::size_t i = 0; i < m.n_; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t dimension() const { return n_; }
  const std::vector<Vertex>& order() const { return order_; }

  BigInt& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  bool is_upper_unitriangular() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (at(i, i) != 1) return false;
      for (std::size_t j = 0; j < i; ++j) {
        if (!at(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& c : cells_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("matrix dimension mismatch");
    IncidenceMatrix out(a.order_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t l = 0; l < a.n_; ++l) {
        const BigInt& x = a.at(i, l);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) {
          const BigInt& y = b.at(l, j);
          if (y.is_zero()) continue;
          if (x == 1) {
            out.at(i, j) += y;
          } else {
            out.at(i, j) += x * y;
          }
        }
      }
    }
    return out;
  }

  friend IncidenceMatrix operator-(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("matrix dimension mismatch");
    IncidenceMatrix out(a.order_);
    for (std::size_t i = 0; i < a.cells_.size(); ++i) out.cells_[i] = a.cells_[i] - b.cells_[i];
    return out;
  }

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

  /// Row vector times matrix.
  std::vector<BigInt> left_multiply(const std::vector<BigInt>& row) const {
    std::vector<BigInt> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (row[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const BigInt& y = at(i, j);
        if (!y.is_zero()) out[j] += row[i] * y;
      }
    }
    return out;
  }

  /// Entries as exact decimals, one row per line, no header.
  std::string to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != 0) out << ',';
        out << at(i, j);
      }
      out << '\n';
    }
    return out.str();
  }

 private:
  std::vector<Vertex> order_;
  std::size_t n_ = 0;
  std::vector<BigInt> cells_;
};

/// zeta(x, y) = 1 iff x <= y. Upper unitriangular with identity blocks on the
/// diagonal and all-ones blocks above it.
inline IncidenceMatrix zeta_matrix(const CobwebPoset& P) {
  IncidenceMatrix z(P.vertices());
  const auto& vs = z.order();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (CobwebPoset::leq(vs[i], vs[j])) z.at(i, j) = 1;
    }
  }
  return z;
}

/// Covering relation: C(x, y) = 1 iff level(y) = level(x) + 1.
inline IncidenceMatrix covering_matrix(const CobwebPoset& P) {
  IncidenceMatrix c(P.vertices());
  const auto& vs = c.order();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (CobwebPoset::covers(vs[i], vs[j])) c.at(i, j) = 1;
    }
  }
  return c;
}

/// eta = zeta - I, the strict order; nilpotent.
inline IncidenceMatrix strict_matrix(const CobwebPoset& P) {
  IncidenceMatrix z = zeta_matrix(P);
  for (std::size_t i = 0; i < z.dimension(); ++i) z.at(i, i) = 0;
  return z;
}

/// mu = zeta^{-1} by back-substitution, column by column:
/// mu(i, j) = [i == j] - sum_{i < l <= j} Z(i, l) mu(l, j).
inline IncidenceMatrix mobius_matrix(const IncidenceMatrix& Z) {
  if (!Z.is_upper_unitriangular()) throw DomainError("mobius_matrix: input is not upper unitriangular");
  const std::size_t n = Z.dimension();
  IncidenceMatrix mu(Z.order());
  for (std::size_t j = 0; j < n; ++j) {
    mu.at(j, j) = 1;
    for (std::size_t i = j; i-- > 0;) {
      BigInt acc = 0;
      for (std::size_t l = i + 1; l <= j; ++l) {
        const BigInt& z = Z.at(i, l);
        if (z.is_zero()) continue;
        const BigInt& m = mu.at(l, j);
        if (m.is_zero()) continue;
        if (z == 1) {
          acc += m;
        } else {
          acc += z * m;
        }
      }
      mu.at(i, j) = -acc;
    }
  }
  return mu;
}

namespace detail {
inline void require_comparable(const CobwebPoset& P, const Vertex& x, const Vertex& y) {
  P.require_vertex(x);
  P.require_vertex(y);
  if (!CobwebPoset::leq(x, y)) throw DomainError("<" + x.label() + "> is not below <" + y.label() + ">");
}
}  // namespace detail

/// Chains x = z_0 < z_1 < ... < z_t = y (t >= 0): the (x, y) entry of
/// I + eta + eta^2 + ..., summed until the row vector vanishes.
inline BigInt count_chains(const CobwebPoset& P, const Vertex& x, const Vertex& y) {
  detail::require_comparable(P, x, y);
  const IncidenceMatrix eta = strict_matrix(P);
  const std::size_t xi = P.index_of(x);
  const std::size_t yi = P.index_of(y);
  std::vector<BigInt> row(eta.dimension());
  row[xi] = 1;
  BigInt total = 0;
  for (std::uint64_t t = 0; t <= P.top_level(); ++t) {
    total += row[yi];
    row = eta.left_multiply(row);
  }
  return total;
}

/// Maximal (saturated) chains from x to y: entry (x, y) of C^{level(y) - level(x)}.
inline BigInt count_maximal_chains_matrix(const CobwebPoset& P, const Vertex& x, const Vertex& y) {
  detail::require_comparable(P, x, y);
  const IncidenceMatrix cover = covering_matrix(P);
  std::vector<BigInt> row(cover.dimension());
  row[P.index_of(x)] = 1;
  for (std::uint64_t t = x.s; t < y.s; ++t) row = cover.left_multiply(row);
  return row[P.index_of(y)];
}

/// Row x of C^d for every d: maximal-chain counts from x to every vertex.
inline std::vector<BigInt> maximal_chain_row(const CobwebPoset& P, const Vertex& x) {
  P.require_vertex(x);
  const IncidenceMatrix cover = covering_matrix(P);
  std::vector<BigInt> row(cover.dimension());
  row[P.index_of(x)] = 1;
  std::vector<BigInt> result = row;
  for (std::uint64_t t = x.s; t < P.top_level(); ++t) {
    row = cover.left_multiply(row);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) result[j] = row[j];
    }
  }
  return result;
}

}  // namespace cobweb
