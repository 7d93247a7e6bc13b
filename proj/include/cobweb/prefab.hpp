#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

/// The empty prefabiant i, or the layer <Phi_k -> Phi_n> (k < n) standing for
/// the max-disjoint copies of P_{n-k} between levels k and n. Primes are the
/// layers <Phi_0 -> Phi_m> = P_m.
class Prefabiant {
 public:
  static Prefabiant identity() { return Prefabiant(); }

  static Prefabiant layer(std::uint64_t k, std::uint64_t n) {
    if (k >= n) throw DomainError("layer needs k < n, got " + std::to_string(k) + "," + std::to_string(n));
    Prefabiant p;
    p.empty_ = false;
    p.k_ = k;
    p.n_ = n;
    return p;
  }

  static Prefabiant prime(std::uint64_t m) { return layer(0, m); }

  /// "i" or "k,n".
  static Prefabiant parse(const std::string& text) {
    if (text == "i") return identity();
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("prefabiant must be 'i' or 'k,n', got '" + text + "'");
    const auto k = detail::parse_uint(text.substr(0, comma), text);
    const auto n = detail::parse_uint(text.substr(comma + 1), text);
    if (k >= n) throw InputError("prefabiant '" + text + "' needs k < n");
    return layer(k, n);
  }

  bool is_identity() const { return empty_; }
  bool is_prime() const { return !empty_ && k_ == 0; }
  std::uint64_t base() const { return k_; }
  std::uint64_t top() const { return n_; }
  std::uint64_t width() const { return n_ - k_; }

  std::string str() const { return empty_ ? "i" : std::to_string(k_) + "," + std::to_string(n_); }

  friend bool operator==(const Prefabiant&, const Prefabiant&) = default;

 private:
  Prefabiant() = default;
  bool empty_ = true;
  std::uint64_t k_ = 0;
  std::uint64_t n_ = 0;
};

/// Noncommutative, nonassociative coopt-synthesis: the leaves of a become the
/// roots for b's copies, so Layer(k,n) (.) Layer(t,u) = Layer(n, n + u - t).
inline Prefabiant odot(const Prefabiant& a, const Prefabiant& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  return Prefabiant::layer(a.top(), a.top() + b.width());
}

/// Commutative, associative composition: Layer(k,n) o Layer(p,q) = Layer(k+p, n+q).
/// The identity absorbs every empty layer <Phi_m -> Phi_m>.
inline Prefabiant circ(const Prefabiant& a, const Prefabiant& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  return Prefabiant::layer(a.base() + b.base(), a.top() + b.top());
}

enum class Algebra { odot, circ };

/// Size functions. For (.) f(Layer(k,n)) = n_F!, which gives f(P_n) = n_F!
/// and, for left-nested powers, f(P_m^k) = (km)_F!. For o, f is either the
/// constant 1 or alpha^{n-k}.
struct PrefabContext {
  FSequence F;
  std::optional<BigInt> circ_alpha;  // unset: constant 1

  explicit PrefabContext(FSequence seq, std::optional<BigInt> alpha = std::nullopt)
      : F(std::move(seq)), circ_alpha(std::move(alpha)) {
    if (circ_alpha && circ_alpha->is_zero()) throw DomainError("alpha must be nonzero");
  }
};

inline BigInt f_size(const PrefabContext& ctx, const Prefabiant& a, Algebra algebra) {
  if (a.is_identity()) return 1;
  if (algebra == Algebra::odot) return f_factorial(ctx.F, a.top());
  if (!ctx.circ_alpha) return 1;
  return pow_int(*ctx.circ_alpha, a.width());
}

/// Exponent of the weight monomial x^{size_2(a)}.
inline std::uint64_t weight(const Prefabiant& a) { return a.is_identity() ? 0 : a.width(); }

/// Number of max-disjoint copies a layer stands for: (n over k)_F.
inline BigInt copies_count(const PrefabContext& ctx, const Prefabiant& a) {
  if (a.is_identity()) return 1;
  const auto v = f_nomial(ctx.F, a.top(), a.base());
  if (!v.integral || v.numerator < 0) {
    throw DomainError("(" + std::to_string(a.top()) + " over " + std::to_string(a.base()) + ")_F = " + v.str() +
                      " is not a nonnegative integer for '" + ctx.F.spec() + "'");
  }
  return v.numerator;
}

/// f(a (.) b) / (f(a) f(b)) against (k+m over k)_F for distinct primes P_k, P_m.
struct C2Check {
  Prefabiant a = Prefabiant::identity();
  Prefabiant b = Prefabiant::identity();
  Prefabiant composite = Prefabiant::identity();
  BigInt f_composite;
  BigInt f_a;
  BigInt f_b;
  FNomialValue ratio;
  FNomialValue copies;
  bool holds = false;
};

inline C2Check verify_c2(const PrefabContext& ctx, const Prefabiant& a, const Prefabiant& b) {
  if (!a.is_prime() || !b.is_prime()) throw DomainError("verify_c2 needs prime prefabiants");
  if (a == b) throw DomainError("verify_c2 needs distinct primes (equal primes share a factor)");
  C2Check c{a, b, odot(a, b), {}, {}, {}, {}, {}, false};
  c.f_composite = f_size(ctx, c.composite, Algebra::odot);
  c.f_a = f_size(ctx, a, Algebra::odot);
  c.f_b = f_size(ctx, b, Algebra::odot);
  c.ratio = FNomialValue::from(ratio(c.f_composite, c.f_a * c.f_b));
  c.copies = f_nomial(ctx.F, c.composite.top(), c.composite.base());
  c.holds = c.ratio == c.copies;
  return c;
}

struct LawResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  bool passed() const { return failures == 0; }
};

struct LawWitness {
  std::string law;
  Prefabiant lhs = Prefabiant::identity();
  Prefabiant rhs = Prefabiant::identity();
  std::vector<Prefabiant> operands;
};

struct LawReport {
  std::vector<LawResult> laws;
  std::vector<LawWitness> witnesses;

  const LawResult* find(const std::string& name) const {
    for (const auto& l : laws) {
      if (l.name == name) return &l;
    }
    return nullptr;
  }
  bool has_witness(const std::string& law) const {
    for (const auto& w : witnesses) {
      if (w.law == law) return true;
    }
    return false;
  }
  bool ok() const {
    for (const auto& l : laws) {
      if (!l.passed()) return false;
    }
    return true;
  }
};

namespace detail {

// Ranged draw by modulo so that reports are identical across standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline Prefabiant draw_prefabiant(std::mt19937_64& rng) {
  if (draw(rng, 8) == 0) return Prefabiant::identity();
  const std::uint64_t k = draw(rng, 9);
  return Prefabiant::layer(k, k + 1 + draw(rng, 6));
}

}  // namespace detail

/// Deterministic sampled check of both algebras' laws, with explicit witnesses
/// that (.) is neither commutative nor associative.
inline LawReport check_algebra_laws(const PrefabContext& ctx, std::uint64_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw DomainError("sample_count must be >= 1");
  std::mt19937_64 rng(seed);
  LawResult circ_identity{"circ.identity"}, circ_comm{"circ.commutativity"}, circ_assoc{"circ.associativity"},
      circ_grading{"circ.grading"}, odot_identity{"odot.identity"}, odot_grading{"odot.grading"},
      odot_decomp{"odot.prime_decomposition"}, c2{"odot.c2"}, odot_noncomm{"odot.noncommutativity"},
      odot_nonassoc{"odot.nonassociativity"};
  LawReport report;
  std::optional<LawWitness> noncomm, nonassoc;
  const Prefabiant id = Prefabiant::identity();

  auto check = [](LawResult& law, bool ok) {
    ++law.checked;
    if (!ok) ++law.failures;
  };
  auto look_for_witnesses = [&](const Prefabiant& a, const Prefabiant& b, const Prefabiant& c) {
    if (!noncomm && odot(a, b) != odot(b, a)) noncomm = LawWitness{"odot.noncommutativity", odot(a, b), odot(b, a), {a, b}};
    if (!nonassoc && odot(odot(a, b), c) != odot(a, odot(b, c))) {
      nonassoc = LawWitness{"odot.nonassociativity", odot(odot(a, b), c), odot(a, odot(b, c)), {a, b, c}};
    }
  };

  for (std::uint64_t s = 0; s < sample_count; ++s) {
    const Prefabiant a = detail::draw_prefabiant(rng);
    const Prefabiant b = detail::draw_prefabiant(rng);
    const Prefabiant c = detail::draw_prefabiant(rng);

    check(circ_identity, circ(id, a) == a && circ(a, id) == a);
    check(circ_comm, circ(a, b) == circ(b, a));
    check(circ_assoc, circ(circ(a, b), c) == circ(a, circ(b, c)));
    if (!a.is_identity() && !b.is_identity()) {
      const auto ab = circ(a, b);
      check(circ_grading, ab.base() == a.base() + b.base() && ab.top() == a.top() + b.top());
      const auto o = odot(a, b);
      check(odot_grading, o.width() == b.width() && o.base() == a.top());
    }
    check(odot_identity, odot(id, a) == a && odot(a, id) == a);
    if (!a.is_identity() && a.base() >= 1) {
      check(odot_decomp, odot(Prefabiant::prime(a.base()), Prefabiant::prime(a.width())) == a);
    }
    const std::uint64_t pk = 1 + detail::draw(rng, 11);
    const std::uint64_t pm = 1 + detail::draw(rng, 12 - pk);
    if (pk != pm) {
      try {
        check(c2, verify_c2(ctx, Prefabiant::prime(pk), Prefabiant::prime(pm)).holds);
      } catch (const DomainError&) {
        // Finite sequence too short for this pair; not a law failure.
      }
    }
    look_for_witnesses(a, b, c);
  }

  // Fall back to a small exhaustive pool when the sample held no witness.
  if (!noncomm || !nonassoc) {
    std::vector<Prefabiant> pool{id};
    for (std::uint64_t n = 1; n <= 4; ++n) {
      for (std::uint64_t k = 0; k < n; ++k) pool.push_back(Prefabiant::layer(k, n));
    }
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        for (const auto& c : pool) look_for_witnesses(a, b, c);
      }
    }
  }
  check(odot_noncomm, noncomm.has_value());
  check(odot_nonassoc, nonassoc.has_value());
  if (noncomm) report.witnesses.push_back(*noncomm);
  if (nonassoc) report.witnesses.push_back(*nonassoc);

  // The witness shape with k=1, n=3, s=2, q=1:
  // (Layer(k,n) (.) Layer(t,t+s)) (.) P_q = Layer(n+s, n+s+q), while
  // Layer(k,n) (.) (Layer(t,t+s) (.) P_q) = Layer(n, n+q).
  {
    const auto a = Prefabiant::layer(1, 3);
    const auto b = Prefabiant::layer(0, 2);
    const auto c = Prefabiant::layer(0, 1);
    LawWitness w{"odot.nonassociativity", odot(odot(a, b), c), odot(a, odot(b, c)), {a, b, c}};
    check(odot_nonassoc, w.lhs == Prefabiant::layer(5, 6) && w.rhs == Prefabiant::layer(3, 4));
    report.witnesses.push_back(std::move(w));
  }

  report.laws = {circ_identity, circ_comm,  circ_assoc, circ_grading, odot_identity,
                 odot_grading,  odot_decomp, c2,        odot_noncomm, odot_nonassoc};
  return report;
}

}  // namespace cobweb
