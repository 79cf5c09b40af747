#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace drshadow {

// Exponent form of a dyadic distance: finite level n stands for 2^-n and the
// infinite level stands for distance 0. Larger level means closer points.
class Level {
 public:
  constexpr Level() = default;

  static constexpr Level finite(std::uint64_t n) { return Level(n); }
  static constexpr Level infinite() { return Level(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return value_ != kInfinite; }

  // Only meaningful for finite levels.
  constexpr std::uint64_t value() const { return value_; }

  // Saturating shift used for contraction gains.
  constexpr Level plus(std::uint64_t gain) const {
    if (is_infinite() || value_ >= kInfinite - gain) return infinite();
    return Level(value_ + gain);
  }

  // Strict comparison against a finite threshold: d < 2^-n  <=>  level > n.
  constexpr bool exceeds(std::uint64_t n) const { return value_ > n; }

  constexpr auto operator<=>(const Level&) const = default;

  // "0" for distance zero, "2^-n" otherwise.
  std::string to_string() const {
    return is_infinite() ? std::string("0") : "2^-" + std::to_string(value_);
  }

 private:
  static constexpr std::uint64_t kInfinite =
      std::numeric_limits<std::uint64_t>::max();

  constexpr explicit Level(std::uint64_t v) : value_(v) {}

  std::uint64_t value_ = kInfinite;
};

constexpr Level min(Level a, Level b) { return a < b ? a : b; }

}  // namespace drshadow
