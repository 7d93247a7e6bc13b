#pragma once

#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

/// Vertex <j, s>: j is the 1-based index within level s.
struct Vertex {
  std::uint64_t j = 1;
  std::uint64_t s = 0;

  std::string label() const { return std::to_string(j) + "," + std::to_string(s); }

  // Contract order: level-major, j ascending.
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.s <=> b.s; c != 0) return c;
    return a.j <=> b.j;
  }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Finite truncation of the cobweb poset to levels 0..L.
///
/// Stored implicitly by level sizes: the covering relation is complete
/// bipartite between consecutive levels, so u <= v iff u == v or
/// level(u) < level(v). Explicit edges only exist inside the enumeration
/// oracles below.
class CobwebPoset {
 public:
  CobwebPoset(FSequence F, std::vector<std::uint64_t> level_sizes)
      : F_(std::move(F)), sizes_(std::move(level_sizes)) {
    offsets_.reserve(sizes_.size() + 1);
    offsets_.push_back(0);
    for (auto sz : sizes_) offsets_.push_back(offsets_.back() + sz);
  }

  const FSequence& sequence() const { return F_; }
  std::uint64_t top_level() const { return sizes_.size() - 1; }
  const std::vector<std::uint64_t>& level_sizes() const { return sizes_; }
  std::uint64_t level_size(std::uint64_t s) const { return sizes_.at(s); }
  std::uint64_t vertex_count() const { return offsets_.back(); }
  std::uint64_t level_offset(std::uint64_t s) const { return offsets_.at(s); }

  bool contains(const Vertex& v) const {
    return v.s <= top_level() && v.j >= 1 && v.j <= sizes_[v.s];
  }

  void require_vertex(const Vertex& v) const {
    if (!contains(v)) throw DomainError("vertex <" + v.label() + "> is not in the poset");
  }

  /// Position in the contract ordering.
  std::uint64_t index_of(const Vertex& v) const {
    require_vertex(v);
    return offsets_[v.s] + (v.j - 1);
  }

  Vertex vertex_at(std::uint64_t index) const {
    std::uint64_t s = 0;
    while (offsets_[s + 1] <= index) ++s;
    return Vertex{index - offsets_[s] + 1, s};
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertex_count());
    for (std::uint64_t s = 0; s < sizes_.size(); ++s) {
      for (std::uint64_t j = 1; j <= sizes_[s]; ++j) out.push_back(Vertex{j, s});
    }
    return out;
  }

  static bool leq(const Vertex& u, const Vertex& v) { return u == v || u.s < v.s; }
  static bool less(const Vertex& u, const Vertex& v) { return u.s < v.s; }
  /// v covers u.
  static bool covers(const Vertex& u, const Vertex& v) { return v.s == u.s + 1; }

 private:
  FSequence F_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> offsets_;
};

/// Levels 0..L with |level 0| = 1 and |level s| = F_s.
inline CobwebPoset build_poset(const FSequence& F, std::uint64_t L) {
  std::vector<std::uint64_t> sizes{1};
  std::uint64_t total = 1;
  for (std::uint64_t s = 1; s <= L; ++s) {
    const BigInt t = F.term(s);
    if (t < 1) {
      throw DomainError("level " + std::to_string(s) + " of '" + F.spec() + "' has nonpositive size " + t.str());
    }
    const std::uint64_t sz = to_u64(t, "level size");
    if (sz > (std::uint64_t{1} << 40) || total + sz > (std::uint64_t{1} << 40)) {
      throw DomainError("poset of '" + F.spec() + "' at level " + std::to_string(s) + " is too large");
    }
    total += sz;
    sizes.push_back(sz);
  }
  return CobwebPoset(F, std::move(sizes));
}

enum class ChainCountMode { enumerate, product };

/// Explicit Hasse digraph on levels 0..max_level; for enumeration oracles only.
struct HasseDigraph {
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::uint32_t>> successors;
};

inline constexpr std::uint64_t kMaxExplicitEdges = 20'000'000;

inline HasseDigraph explicit_hasse(const CobwebPoset& P, std::uint64_t max_level) {
  if (max_level > P.top_level()) throw DomainError("level " + std::to_string(max_level) + " not built");
  std::uint64_t edges = 0;
  for (std::uint64_t p = 0; p < max_level; ++p) edges += P.level_size(p) * P.level_size(p + 1);
  if (edges > kMaxExplicitEdges) throw DomainError("explicit Hasse digraph too large to enumerate");
  HasseDigraph g;
  for (std::uint64_t s = 0; s <= max_level; ++s) {
    for (std::uint64_t j = 1; j <= P.level_size(s); ++j) g.vertices.push_back(Vertex{j, s});
  }
  g.successors.resize(g.vertices.size());
  for (std::uint64_t p = 0; p < max_level; ++p) {
    for (std::uint64_t a = 0; a < P.level_size(p); ++a) {
      auto& succ = g.successors[P.level_offset(p) + a];
      for (std::uint64_t b = 0; b < P.level_size(p + 1); ++b) {
        succ.push_back(static_cast<std::uint32_t>(P.level_offset(p + 1) + b));
      }
    }
  }
  return g;
}

inline constexpr std::uint64_t kMaxEnumeratedChains = 100'000'000;

/// DFS over the explicit Hasse digraph from `from`, walking every saturated
/// chain up to `max_level`. counts[y] = number of saturated chains from `from`
/// to y (1 at `from` itself).
inline std::vector<BigInt> enumerate_saturated_chains(const CobwebPoset& P, const Vertex& from,
                                                      std::uint64_t max_level) {
  P.require_vertex(from);
  const HasseDigraph g = explicit_hasse(P, max_level);
  std::vector<std::uint64_t> counts(g.vertices.size(), 0);
  std::uint64_t visited = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  stack.emplace_back(static_cast<std::uint32_t>(P.index_of(from)), 0);
  ++counts[stack.back().first];
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto& succ = g.successors[node];
    if (next == succ.size()) {
      stack.pop_back();
      continue;
    }
    const auto child = succ[next++];
    ++counts[child];
    if (++visited > kMaxEnumeratedChains) throw DomainError("chain enumeration exceeds cap");
    stack.emplace_back(child, 0);
  }
  return std::vector<BigInt>(counts.begin(), counts.end());
}

/// Saturated chains from v to (any vertex of) level n.
inline BigInt count_max_chains_between(const CobwebPoset& P, const Vertex& v, std::uint64_t n,
                                       ChainCountMode mode) {
  P.require_vertex(v);
  if (n < v.s || n > P.top_level()) {
    throw DomainError("target level " + std::to_string(n) + " outside " + std::to_string(v.s) + ".." +
                      std::to_string(P.top_level()));
  }
  if (mode == ChainCountMode::product) return falling_f(P.sequence(), n, n - v.s);
  const auto counts = enumerate_saturated_chains(P, v, n);
  BigInt total = 0;
  for (std::uint64_t j = 0; j < P.level_size(n); ++j) total += counts[P.level_offset(n) + j];
  return total;
}

/// Maximal chains from the root <1,0> to level n; n_F! in product mode.
inline BigInt count_max_chains_from_root(const CobwebPoset& P, std::uint64_t n, ChainCountMode mode) {
  if (n > P.top_level()) throw DomainError("target level " + std::to_string(n) + " not built");
  if (mode == ChainCountMode::product) return f_factorial(P.sequence(), n);
  return count_max_chains_between(P, Vertex{1, 0}, n, mode);
}

struct AcyclicityCheck {
  bool acyclic = false;
  std::uint64_t sorted_vertices = 0;
  std::vector<std::uint64_t> edges_per_level;  // edges between p and p+1, as traversed
};

/// Kahn's algorithm over the implicit Hasse digraph.
inline AcyclicityCheck check_acyclic(const CobwebPoset& P) {
  const std::uint64_t V = P.vertex_count();
  std::vector<std::uint64_t> indegree(V, 0);
  for (std::uint64_t s = 1; s <= P.top_level(); ++s) {
    for (std::uint64_t j = 0; j < P.level_size(s); ++j) indegree[P.level_offset(s) + j] = P.level_size(s - 1);
  }
  AcyclicityCheck out;
  out.edges_per_level.assign(P.top_level(), 0);
  std::vector<std::uint64_t> queue;
  queue.reserve(V);
  for (std::uint64_t i = 0; i < V; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = P.vertex_at(queue[head]);
    if (u.s == P.top_level()) continue;
    const std::uint64_t base = P.level_offset(u.s + 1);
    const std::uint64_t width = P.level_size(u.s + 1);
    out.edges_per_level[u.s] += width;
    for (std::uint64_t b = 0; b < width; ++b) {
      if (--indegree[base + b] == 0) queue.push_back(base + b);
    }
  }
  out.sorted_vertices = queue.size();
  out.acyclic = queue.size() == V;
  return out;
}

/// Two linear extensions whose intersection is the poset order.
struct Dim2Realizer {
  std::vector<Vertex> first;   // level ascending, j ascending
  std::vector<Vertex> second;  // level ascending, j descending
  bool verified = false;
};

/// Builds the realizer and checks exhaustively over all vertex pairs that
/// "u before v in both orders" holds exactly when level(u) < level(v).
inline Dim2Realizer dim2_realizer(const CobwebPoset& P) {
  Dim2Realizer r;
  r.first = P.vertices();
  r.second.reserve(r.first.size());
  for (std::uint64_t s = 0; s <= P.top_level(); ++s) {
    for (std::uint64_t j = P.level_size(s); j >= 1; --j) r.second.push_back(Vertex{j, s});
  }
  const std::uint64_t V = P.vertex_count();
  std::vector<std::uint64_t> pos1(V), pos2(V), level(V);
  for (std::uint64_t i = 0; i < V; ++i) {
    pos1[P.index_of(r.first[i])] = i;
    pos2[P.index_of(r.second[i])] = i;
    level[P.index_of(r.first[i])] = r.first[i].s;
  }
  bool ok = r.second.size() == V;
  for (std::uint64_t a = 0; a < V && ok; ++a) {
    for (std::uint64_t b = a + 1; b < V; ++b) {
      const bool ab = pos1[a] < pos1[b] && pos2[a] < pos2[b];
      const bool ba = pos1[b] < pos1[a] && pos2[b] < pos2[a];
      if (ab != (level[a] < level[b]) || ba != (level[b] < level[a])) {
        ok = false;
        break;
      }
    }
  }
  r.verified = ok;
  return r;
}

/// DOT digraph: one node per vertex (label "j,s"), one edge per covering pair,
/// directed upward. Nodes are emitted level-major, j ascending.
inline std::string export_dot(const CobwebPoset& P) {
  std::ostringstream out;
  out << "digraph cobweb {\n  rankdir=BT;\n";
  const auto vs = P.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out << "  v" << i << " [label=\"" << vs[i].label() << "\"];\n";
  }
  for (std::uint64_t p = 0; p < P.top_level(); ++p) {
    for (std::uint64_t a = 0; a < P.level_size(p); ++a) {
      for (std::uint64_t b = 0; b < P.level_size(p + 1); ++b) {
        out << "  v" << P.level_offset(p) + a << " -> v" << P.level_offset(p + 1) + b << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cobweb
