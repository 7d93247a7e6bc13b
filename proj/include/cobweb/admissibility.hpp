#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/sequence.hpp"

namespace cobweb {

/// Evidence about cobweb-admissibility over a finite prefix. A clean report
/// never says more than "all F-nomials up to row N are nonnegative integers".
struct AdmissibilityReport {
  struct Violation {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    FNomialValue value;
  };

  std::string spec;
  std::uint64_t bound = 0;
  std::optional<Violation> violation;

  bool admissible() const { return !violation.has_value(); }
  std::string verdict() const {
    return admissible() ? "admissible-up-to-" + std::to_string(bound) : "violation";
  }
};

struct GcdMorphismReport {
  struct Violation {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    BigInt gcd;       // gcd(F_n, F_m)
    BigInt expected;  // F_gcd(n,m)
  };

  std::string spec;
  std::uint64_t bound = 0;
  std::optional<Violation> violation;

  bool morphic() const { return !violation.has_value(); }
};

/// Scans (n over k)_F for 0 <= k <= n <= N in row-major order and records the
/// first value that is not a nonnegative integer.
inline AdmissibilityReport is_cobweb_admissible_prefix(const FSequence& F, std::uint64_t N) {
  F.require_nonzero_upto(N);
  AdmissibilityReport report{F.spec(), N, std::nullopt};
  std::vector<BigInt> fact{1};
  for (std::uint64_t j = 1; j <= N; ++j) fact.push_back(fact.back() * F.term(j));
  for (std::uint64_t n = 0; n <= N; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      auto value = FNomialValue::from(ratio(fact[n], fact[k] * fact[n - k]));
      if (!value.integral || value.numerator < 0) {
        report.violation = AdmissibilityReport::Violation{n, k, std::move(value)};
        return report;
      }
    }
  }
  return report;
}

/// Checks gcd(F_n, F_m) = F_gcd(n,m) for 1 <= m <= n <= N; first failure by
/// (n ascending, m ascending).
inline GcdMorphismReport is_gcd_morphic_prefix(const FSequence& F, std::uint64_t N) {
  if (N < 1) throw DomainError("is_gcd_morphic_prefix: bound must be >= 1");
  F.require_positive_upto(N);
  std::vector<BigInt> terms{0};
  for (std::uint64_t j = 1; j <= N; ++j) terms.push_back(F.term(j));
  GcdMorphismReport report{F.spec(), N, std::nullopt};
  for (std::uint64_t n = 1; n <= N; ++n) {
    for (std::uint64_t m = 1; m <= n; ++m) {
      BigInt g = gcd(terms[n], terms[m]);
      const std::uint64_t idx = std::gcd(n, m);
      if (g != terms[idx]) {
        report.violation = GcdMorphismReport::Violation{n, m, std::move(g), terms[idx]};
        return report;
      }
    }
  }
  return report;
}

/// One entry per candidate, in input order. A failing candidate carries its
/// error message instead of a report; the scan continues.
struct ScanEntry {
  std::string spec;
  std::optional<AdmissibilityReport> report;
  std::string error;
};

inline std::vector<ScanEntry> admissibility_scan(std::span<const FSequence> candidates, std::uint64_t N) {
  std::vector<ScanEntry> out;
  out.reserve(candidates.size());
  for (const auto& F : candidates) {
    ScanEntry entry{F.spec(), std::nullopt, {}};
    try {
      entry.report = is_cobweb_admissible_prefix(F, N);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

/// Spec-string form; parse failures are reported per entry as well.
inline std::vector<ScanEntry> admissibility_scan(std::span<const std::string> specs, std::uint64_t N) {
  std::vector<ScanEntry> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) {
    ScanEntry entry{spec, std::nullopt, {}};
    try {
      entry.report = is_cobweb_admissible_prefix(parse_sequence(spec), N);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace cobweb
