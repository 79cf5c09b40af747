#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drshadow/base_space.hpp"
#include "drshadow/eventually_periodic.hpp"
#include "drshadow/point.hpp"

namespace drshadow {

// A finitely described infinite sequence of coordinates. Implementations are
// immutable; coordinate() must be safe to call concurrently.
class CoordinateGenerator {
 public:
  virtual ~CoordinateGenerator() = default;

  // 1-based.
  virtual Point coordinate(std::uint64_t i) const = 0;
  virtual std::vector<Point> head(std::uint64_t n) const;

  // True when no coordinate is Infinity.
  virtual bool certified_finite() const = 0;
  // The sequence as prefix·cycle^∞, when it is eventually periodic and that
  // can be decided.
  virtual std::optional<EventuallyPeriodic<Point>> periodic_form() const = 0;
  // The sequence with its first coordinate removed.
  virtual std::shared_ptr<const CoordinateGenerator> tail() const = 0;

  // Sequence equality. The default compares periodic forms.
  virtual bool same_as(const CoordinateGenerator& other) const;
  virtual std::string to_string() const = 0;
};

class PeriodicCoordinates final : public CoordinateGenerator {
 public:
  explicit PeriodicCoordinates(EventuallyPeriodic<Point> seq) : seq_(std::move(seq)) {}

  Point coordinate(std::uint64_t i) const override;
  bool certified_finite() const override;
  std::optional<EventuallyPeriodic<Point>> periodic_form() const override { return seq_; }
  std::shared_ptr<const CoordinateGenerator> tail() const override;
  std::string to_string() const override;

  const EventuallyPeriodic<Point>& sequence() const { return seq_; }

 private:
  EventuallyPeriodic<Point> seq_;
};

// Element of W₀: the zero word, a finite word, or an infinite word.
class W0Word {
 public:
  enum class Kind { kZero, kFinite, kInfinite };

  W0Word() = default;  // Zero

  static W0Word zero() { return W0Word(); }
  static W0Word finite(std::vector<Point> letters);
  static W0Word infinite(std::shared_ptr<const CoordinateGenerator> gen);
  static W0Word periodic(std::vector<Point> prefix, std::vector<Point> cycle);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::kZero; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }

  // nullopt stands for ω.
  std::optional<std::uint64_t> length() const;
  bool length_at_least(std::uint64_t k) const;

  // 1-based; Infinity beyond the length.
  Point coordinate(std::uint64_t i) const;
  // The first min(n, length) coordinates.
  std::vector<Point> head(std::uint64_t n) const;

  const std::vector<Point>& letters() const { return letters_; }
  const std::shared_ptr<const CoordinateGenerator>& generator() const { return gen_; }

  bool operator==(const W0Word& other) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::kZero;
  std::vector<Point> letters_;
  std::shared_ptr<const CoordinateGenerator> gen_;
};

// `Zero`, `[p1; p2]` (finite) or `[p1; p2 | c1; c2]` (infinite, cycle after |).
W0Word parse_word(std::string_view text);

// An element of (X ∪ {∞})^ℕ written `[p1; p2 | c1; c2]`; `inf` is allowed.
EventuallyPeriodic<Point> parse_sequence(std::string_view text);
std::string sequence_to_string(const EventuallyPeriodic<Point>& seq);

// Q: all coordinates finite -> infinite word; first ∞ at position n+1 ->
// the word of the first n coordinates (Zero when n = 0). On a Cantor space
// minus a point, that point plays the role of ∞.
W0Word q_normalize(const BaseSpace& space, const EventuallyPeriodic<Point>& seq);
W0Word q_normalize(const BaseSpace& space, const std::shared_ptr<const CoordinateGenerator>& gen);

// Shift on words: drops the first letter; a one-letter word becomes Zero.
W0Word word_shift(const W0Word& w);

}  // namespace drshadow
