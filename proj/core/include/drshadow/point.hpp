#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "drshadow/errors.hpp"

namespace drshadow {

// An eventually periodic point prefix·cycle^∞ of {0,1}^ℕ, kept canonical:
// the cycle is primitive and the prefix minimal, so == is point equality.
class CantorPoint {
 public:
  // Both arguments are strings over {'0','1'}; cycle must be nonempty.
  CantorPoint(std::string prefix, std::string cycle);

  // Parses `<prefix-bits>(<cycle-bits>)*`, e.g. "01(10)*".
  static CantorPoint parse(std::string_view text);

  static CantorPoint constant(char bit) { return CantorPoint("", std::string(1, bit)); }

  const std::string& prefix() const { return prefix_; }
  const std::string& cycle() const { return cycle_; }

  char bit(std::uint64_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
  }

  std::string head(std::size_t n) const;
  bool starts_with(std::string_view word) const;

  // σ^k.
  CantorPoint shifted(std::uint64_t k) const;
  // word·x.
  CantorPoint prepended(std::string_view word) const;
  // Flips bit i.
  CantorPoint flipped(std::uint64_t i) const;

  // Smallest index where the bit sequences differ, or nullopt when equal.
  std::optional<std::uint64_t> first_difference(const CantorPoint& other) const;

  std::string to_string() const;

  bool operator==(const CantorPoint&) const = default;

 private:
  std::string prefix_;
  std::string cycle_;
};

struct NatPoint {
  std::uint64_t value = 0;
  bool operator==(const NatPoint&) const = default;
};

// The point at infinity of a one-point compactification.
struct InfinityPoint {
  bool operator==(const InfinityPoint&) const = default;
};

using Point = std::variant<NatPoint, CantorPoint, InfinityPoint>;

inline Point nat(std::uint64_t n) { return NatPoint{n}; }
inline Point cantor(std::string_view literal) { return CantorPoint::parse(literal); }
inline Point infinity() { return InfinityPoint{}; }

inline bool is_infinity(const Point& p) { return std::holds_alternative<InfinityPoint>(p); }

// Point literals: `Nat:<n>`, `inf`, or a Cantor literal such as `01(10)*`.
Point parse_point(std::string_view text);
std::string to_string(const Point& p);

}  // namespace drshadow
