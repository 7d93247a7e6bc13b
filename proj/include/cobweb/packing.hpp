#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// An embedded copy of the prime poset P_m rooted at `root`: level root.s + j
/// contributes a chosen set of exactly j_F vertices.
///
/// Every two vertices on different levels are comparable, so any sub-poset
/// rooted at level k and isomorphic to P_m is of this product form; the copies
/// enumerated here are therefore all of them.
struct PrimeCopy {
  Vertex root;
  std::uint64_t height = 0;
  std::vector<std::vector<std::uint64_t>> chosen;  // chosen[j-1]: sorted 1-based j-indices

  /// Maximal chains: the root followed by one vertex from each chosen set.
  BigInt chain_count() const {
    BigInt acc = 1;
    for (const auto& level : chosen) acc *= level.size();
    return acc;
  }
};

/// Two copies (same root) share a maximal chain iff their chosen sets meet on
/// every level.
inline bool share_maximal_chain(const PrimeCopy& a, const PrimeCopy& b) {
  if (a.root != b.root || a.height != b.height) return false;
  for (std::size_t j = 0; j < a.chosen.size(); ++j) {
    std::vector<std::uint64_t> common;
    std::set_intersection(a.chosen[j].begin(), a.chosen[j].end(), b.chosen[j].begin(), b.chosen[j].end(),
                          std::back_inserter(common));
    if (common.empty()) return false;
  }
  return true;
}

namespace detail {

inline void require_copy_fits(const CobwebPoset& P, const Vertex& root, std::uint64_t m) {
  P.require_vertex(root);
  if (root.s + m > P.top_level()) {
    throw DomainError("copy of height " + std::to_string(m) + " at level " + std::to_string(root.s) +
                      " exceeds built level " + std::to_string(P.top_level()));
  }
  for (std::uint64_t j = 1; j <= m; ++j) {
    const BigInt need = P.sequence().term(j);
    if (need < 1 || need > P.level_size(root.s + j)) {
      throw DomainError("level " + std::to_string(root.s + j) + " has " +
                        std::to_string(P.level_size(root.s + j)) + " vertices; a copy needs " + need.str());
    }
  }
}

inline void combinations(std::uint64_t n, std::uint64_t r, std::vector<std::vector<std::uint64_t>>& out) {
  std::vector<std::uint64_t> current(r);
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.push_back(current);
    std::int64_t i = static_cast<std::int64_t>(r) - 1;
    while (i >= 0 && current[i] == n - r + 1 + static_cast<std::uint64_t>(i)) --i;
    if (i < 0) return;
    ++current[i];
    for (std::size_t t = i + 1; t < r; ++t) current[t] = current[t - 1] + 1;
  }
}

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  void and_with(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto t = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * 64 + t);
        bits &= bits - 1;
      }
    }
  }
  std::size_t size() const { return bits_; }

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

/// Exact maximum independent set by branch and bound with a greedy clique-cover
/// upper bound.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const std::vector<Bitset>& adjacency, std::uint64_t node_budget)
      : adj_(adjacency), budget_(node_budget) {}

  /// Best independent set inside `vertices`, seeded with a known solution and
  /// stopping as soon as `ceiling` is reached.
  std::vector<std::size_t> solve(const Bitset& vertices, std::vector<std::size_t> seed, std::size_t ceiling) {
    best_ = std::move(seed);
    ceiling_ = ceiling;
    std::vector<std::size_t> current;
    if (best_.size() < ceiling_) branch(vertices, current);
    return best_;
  }

 private:
  std::size_t clique_cover_bound(const Bitset& cand) const {
    Bitset rest = cand;
    std::size_t cliques = 0;
    while (rest.any()) {
      ++cliques;
      std::size_t first = 0;
      bool found = false;
      rest.for_each([&](std::size_t v) {
        if (!found) {
          first = v;
          found = true;
        }
      });
      Bitset common = adj_[first];
      common.and_with(rest);
      rest.reset(first);
      // Grow a clique greedily inside the common neighbourhood.
      while (common.any()) {
        std::size_t pick = 0;
        bool got = false;
        common.for_each([&](std::size_t v) {
          if (!got) {
            pick = v;
            got = true;
          }
        });
        rest.reset(pick);
        common.reset(pick);
        common.and_with(adj_[pick]);
      }
    }
    return cliques;
  }

  void branch(Bitset cand, std::vector<std::size_t>& current) {
    if (best_.size() >= ceiling_) return;
    if (++nodes_ > budget_) throw DomainError("packing search exceeded its node budget");
    // Vertices isolated within the candidate set always belong to an optimum.
    std::vector<std::size_t> isolated;
    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    cand.for_each([&](std::size_t v) {
      const std::size_t d = adj_[v].and_count(cand);
      if (d == 0) {
        isolated.push_back(v);
      } else if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });
    for (auto v : isolated) {
      cand.reset(v);
      current.push_back(v);
    }
    if (!cand.any()) {
      if (current.size() > best_.size()) best_ = current;
    } else if (current.size() + clique_cover_bound(cand) > best_.size()) {
      Bitset with = cand;
      with.and_not(adj_[pivot]);
      with.reset(pivot);
      current.push_back(pivot);
      branch(with, current);
      current.pop_back();
      cand.reset(pivot);
      branch(cand, current);
    }
    current.resize(current.size() - isolated.size());
  }

  const std::vector<Bitset>& adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
  std::size_t ceiling_ = 0;
};

}  // namespace detail

/// Number of embedded copies: prod_j C(|level k+j|, j_F).
inline BigInt count_copies(const CobwebPoset& P, const Vertex& root, std::uint64_t m) {
  detail::require_copy_fits(P, root, m);
  BigInt acc = 1;
  for (std::uint64_t j = 1; j <= m; ++j) {
    acc *= binomial(P.level_size(root.s + j), to_u64(P.sequence().term(j), "j_F"));
  }
  return acc;
}

inline constexpr std::uint64_t kDefaultCopyCap = 5000;

/// All embedded copies of P_m rooted at `root`, level-1 choice varying slowest.
inline std::vector<PrimeCopy> enumerate_copies(const CobwebPoset& P, const Vertex& root, std::uint64_t m,
                                               std::uint64_t cap = 1'000'000) {
  const BigInt total = count_copies(P, root, m);
  if (total > cap) throw DomainError("copy count " + total.str() + " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<std::vector<std::uint64_t>>> per_level(m);
  for (std::uint64_t j = 1; j <= m; ++j) {
    detail::combinations(P.level_size(root.s + j), to_u64(P.sequence().term(j), "j_F"), per_level[j - 1]);
  }
  std::vector<PrimeCopy> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    PrimeCopy copy{root, m, {}};
    copy.chosen.reserve(m);
    for (std::uint64_t j = 0; j < m; ++j) copy.chosen.push_back(per_level[j][pick[j]]);
    out.push_back(std::move(copy));
    std::int64_t j = static_cast<std::int64_t>(m) - 1;
    while (j >= 0 && ++pick[j] == per_level[j].size()) pick[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

/// Exact max-disjoint packing of copies of P_m at `root`, compared with the
/// chain-counting quotient n_F^(m falling) / m_F! = (n over k)_F.
struct PackingReport {
  std::string spec;
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  BigInt copies_total;
  BigInt chains_total;         // n_F^(m falling)
  FNomialValue quotient_bound;  // (n over k)_F
  std::uint64_t max_packing = 0;
  bool tight = false;
  std::vector<PrimeCopy> packing;  // one optimal family
};

inline PackingReport max_disjoint_packing(const CobwebPoset& P, const Vertex& root, std::uint64_t m,
                                          std::uint64_t cap = kDefaultCopyCap,
                                          std::uint64_t node_budget = 20'000'000) {
  PackingReport report;
  report.spec = P.sequence().spec();
  report.k = root.s;
  report.m = m;
  report.n = root.s + m;
  report.copies_total = count_copies(P, root, m);
  if (report.copies_total > cap) {
    throw DomainError("copy count " + report.copies_total.str() + " exceeds packing cap " + std::to_string(cap));
  }
  report.chains_total = falling_f(P.sequence(), report.n, m);
  report.quotient_bound = f_nomial(P.sequence(), report.n, report.k);

  const auto copies = enumerate_copies(P, root, m, cap);
  const std::size_t N = copies.size();

  // Per-level membership bitsets, then the conflict graph.
  std::vector<std::vector<detail::Bitset>> member(N);
  for (std::size_t c = 0; c < N; ++c) {
    for (std::uint64_t j = 0; j < m; ++j) {
      detail::Bitset b(P.level_size(root.s + j + 1));
      for (auto idx : copies[c].chosen[j]) b.set(idx - 1);
      member[c].push_back(std::move(b));
    }
  }
  std::vector<detail::Bitset> adj(N, detail::Bitset(N));
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      bool all = true;
      for (std::uint64_t j = 0; j < m && all; ++j) all = member[a][j].intersects(member[b][j]);
      if (all) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }

  // Each packed copy owns m_F! chains out of n_F^(m falling).
  const BigInt chain_bound = report.chains_total / f_factorial(P.sequence(), m);
  const std::size_t ceiling = static_cast<std::size_t>(std::min<BigInt>(chain_bound, BigInt(N)));

  // Connected components are solved independently.
  std::vector<int> comp(N, -1);
  std::vector<detail::Bitset> components;
  for (std::size_t s = 0; s < N; ++s) {
    if (comp[s] != -1) continue;
    detail::Bitset members(N);
    std::vector<std::size_t> queue{s};
    comp[s] = static_cast<int>(components.size());
    for (std::size_t h = 0; h < queue.size(); ++h) {
      members.set(queue[h]);
      adj[queue[h]].for_each([&](std::size_t v) {
        if (comp[v] == -1) {
          comp[v] = comp[s];
          queue.push_back(v);
        }
      });
    }
    components.push_back(std::move(members));
  }

  // Greedy seeds: low conflict degree first.
  std::vector<std::vector<std::size_t>> seeds(components.size());
  std::size_t greedy_total = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    std::vector<std::size_t> order;
    components[c].for_each([&](std::size_t v) { order.push_back(v); });
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return adj[x].count() < adj[y].count(); });
    detail::Bitset blocked(N);
    for (auto v : order) {
      if (blocked.test(v)) continue;
      seeds[c].push_back(v);
      blocked.set(v);
      adj[v].for_each([&](std::size_t u) { blocked.set(u); });
    }
    greedy_total += seeds[c].size();
  }

  std::vector<std::size_t> chosen;
  if (greedy_total >= ceiling) {
    for (auto& s : seeds) chosen.insert(chosen.end(), s.begin(), s.end());
  } else {
    detail::IndependentSetSearch search(adj, node_budget);
    for (std::size_t c = 0; c < components.size(); ++c) {
      auto best = search.solve(components[c], seeds[c], components[c].count());
      chosen.insert(chosen.end(), best.begin(), best.end());
    }
  }
  std::sort(chosen.begin(), chosen.end());
  for (auto idx : chosen) report.packing.push_back(copies[idx]);
  report.max_packing = chosen.size();
  report.tight = report.quotient_bound.integral && BigInt(report.max_packing) == report.quotient_bound.numerator;
  return report;
}

}  // namespace cobweb
