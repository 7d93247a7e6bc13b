#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/numeric.hpp"

namespace cobweb {

/// An integer sequence n -> F_n. Immutable; safe to share across threads.
///
/// Index 0 is never consulted by factorial or poset logic (0_F! = 1 and the
/// bottom level has one vertex by convention), so term(0) is whatever the
/// family naturally gives, possibly 0.
class FSequence {
 public:
  using TermFn = std::function<BigInt(std::uint64_t)>;

  FSequence(std::string name, std::string spec, TermFn term,
            std::optional<std::uint64_t> length = std::nullopt)
      : name_(std::move(name)), spec_(std::move(spec)), term_(std::move(term)), length_(length) {}

  const std::string& name() const { return name_; }
  const std::string& spec() const { return spec_; }

  /// Number of provided terms F_1..F_len for finite (custom/file) sequences.
  std::optional<std::uint64_t> length() const { return length_; }

  BigInt term(std::uint64_t n) const {
    if (length_ && n > *length_) {
      throw DomainError("sequence '" + spec_ + "' has only " + std::to_string(*length_) +
                        " terms; index " + std::to_string(n) + " requested");
    }
    return term_(n);
  }

  BigInt operator()(std::uint64_t n) const { return term(n); }

  /// Throws DomainError if F_j == 0 for some 1 <= j <= n.
  void require_nonzero_upto(std::uint64_t n) const {
    for (std::uint64_t j = 1; j <= n; ++j) {
      if (term(j) == 0) {
        throw DomainError("sequence '" + spec_ + "' has zero term at n=" + std::to_string(j));
      }
    }
  }

  /// Throws DomainError unless F_j >= 1 for 1 <= j <= n.
  void require_positive_upto(std::uint64_t n) const {
    for (std::uint64_t j = 1; j <= n; ++j) {
      if (term(j) < 1) {
        throw DomainError("sequence '" + spec_ + "' has nonpositive term at n=" + std::to_string(j));
      }
    }
  }

 private:
  std::string name_;
  std::string spec_;
  TermFn term_;
  std::optional<std::uint64_t> length_;
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view text, std::string_view spec) {
  if (text.empty() || text.size() > 18) {
    throw InputError("malformed sequence spec '" + std::string(spec) + "': bad unsigned parameter");
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InputError("malformed sequence spec '" + std::string(spec) + "': bad unsigned parameter");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

inline FSequence finite_sequence(std::string name, std::string spec, std::vector<BigInt> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) {
      throw InputError("sequence '" + spec + "' has zero term at n=" + std::to_string(i + 1));
    }
  }
  auto shared = std::make_shared<const std::vector<BigInt>>(std::move(values));
  const auto len = static_cast<std::uint64_t>(shared->size());
  return FSequence(std::move(name), std::move(spec),
                   [shared](std::uint64_t n) -> BigInt {
                     if (n == 0) return 0;
                     return (*shared)[n - 1];
                   },
                   len);
}

inline std::vector<BigInt> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sequence file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("sequence file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw InputError("sequence file '" + path + "' must hold a nonempty JSON array of integers");
  }
  std::vector<BigInt> values;
  values.reserve(doc.size());
  for (const auto& item : doc) {
    if (item.is_number_integer()) {
      values.emplace_back(item.is_number_unsigned() ? BigInt(item.get<std::uint64_t>())
                                                    : BigInt(item.get<std::int64_t>()));
    } else if (item.is_string()) {
      // Decimal strings carry values beyond 64 bits.
      values.push_back(parse_bigint(item.get<std::string>()));
    } else {
      throw InputError("sequence file '" + path + "' contains a non-integer entry");
    }
  }
  return values;
}

}  // namespace detail

inline BigInt fibonacci_number(std::uint64_t n) {
  BigInt a = 0;
  BigInt b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

/// Builds a sequence from its spec string:
///   natural | even | mult:<uint> | fibonacci | gauss:<uint>=2> | bg:<uint>=2>
///   | const:<nonzero int> | custom:<int>(,<int>)* | file:<path>
/// file content is a JSON array of integers read as F_1, F_2, ...
inline FSequence parse_sequence(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;

  auto no_arg = [&]() {
    if (has_arg) throw InputError("malformed sequence spec '" + spec + "': '" + head + "' takes no parameter");
  };

  if (head == "natural") {
    no_arg();
    return FSequence("natural", spec, [](std::uint64_t n) { return BigInt(n); });
  }
  if (head == "even") {
    no_arg();
    return FSequence("even", spec, [](std::uint64_t n) { return BigInt(2) * n; });
  }
  if (head == "fibonacci") {
    no_arg();
    return FSequence("fibonacci", spec, [](std::uint64_t n) { return fibonacci_number(n); });
  }
  if (!has_arg) throw InputError("malformed sequence spec '" + spec + "'");

  if (head == "mult") {
    const BigInt c = detail::parse_uint(arg, spec);
    if (c == 0) throw InputError("sequence '" + spec + "' has zero term at n=1");
    return FSequence("mult:" + c.str(), spec, [c](std::uint64_t n) { return c * n; });
  }
  if (head == "gauss") {
    const std::uint64_t q = detail::parse_uint(arg, spec);
    if (q < 2) throw InputError("malformed sequence spec '" + spec + "': gauss needs q >= 2");
    return FSequence("gauss:" + std::to_string(q), spec, [q](std::uint64_t n) {
      return (pow_int(BigInt(q), n) - 1) / (q - 1);
    });
  }
  if (head == "bg") {
    const std::uint64_t q = detail::parse_uint(arg, spec);
    if (q < 2) throw InputError("malformed sequence spec '" + spec + "': bg needs q >= 2");
    return FSequence("bg:" + std::to_string(q), spec, [q](std::uint64_t n) -> BigInt {
      if (n == 0) return 0;
      return (pow_int(BigInt(q), n) - 1) * pow_int(BigInt(q), n - 1);
    });
  }
  if (head == "const") {
    const BigInt c = parse_bigint(arg);
    if (c == 0) throw InputError("malformed sequence spec '" + spec + "': const needs a nonzero value");
    return FSequence("const:" + c.str(), spec, [c](std::uint64_t) { return c; });
  }
  if (head == "custom") {
    std::vector<BigInt> values;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_bigint(item));
    if (values.empty() || arg.back() == ',') {
      throw InputError("malformed sequence spec '" + spec + "': empty custom list");
    }
    return detail::finite_sequence("custom", spec, std::move(values));
  }
  if (head == "file") {
    if (arg.empty()) throw InputError("malformed sequence spec '" + spec + "': empty path");
    return detail::finite_sequence("file:" + arg, spec, detail::read_sequence_file(arg));
  }
  throw InputError("unknown sequence family '" + head + "' in spec '" + spec + "'");
}

}  // namespace cobweb
