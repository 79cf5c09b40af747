#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "drshadow/convergence.hpp"
#include "drshadow/enumeration.hpp"
#include "drshadow/eventually_periodic.hpp"
#include "drshadow/systems.hpp"
#include "drshadow/words.hpp"

namespace drshadow {

// Infinite backward f-path x_1 = seed, x_{t+1} = g_{s_t}(x_t), where the
// branch stream s is eventually periodic. Construction validates the chain
// to max(32, |pre| + 2|cycle|) coordinates and caches them.
class BackwardPath final : public CoordinateGenerator {
 public:
  static constexpr std::uint64_t kDefaultValidationDepth = 32;

  BackwardPath(std::shared_ptr<const DRSystem> sys, Point seed, EventuallyPeriodic<std::uint64_t> stream,
               std::uint64_t validation_depth = kDefaultValidationDepth);

  const std::shared_ptr<const DRSystem>& system() const { return sys_; }
  const Point& seed() const { return coords_.front(); }
  const EventuallyPeriodic<std::uint64_t>& stream() const { return stream_; }

  Point coordinate(std::uint64_t i) const override;
  std::vector<Point> head(std::uint64_t n) const override;
  bool certified_finite() const override { return true; }
  std::optional<EventuallyPeriodic<Point>> periodic_form() const override;
  std::shared_ptr<const CoordinateGenerator> tail() const override;
  bool same_as(const CoordinateGenerator& other) const override;
  // `inf(<seed>;<pre,...>(<cycle,...>)*)`.
  std::string to_string() const override;

  // The path f(seed), seed, x_2, ...
  std::shared_ptr<const BackwardPath> prefixed_by_image() const;

 private:
  std::shared_ptr<const DRSystem> sys_;
  EventuallyPeriodic<std::uint64_t> stream_;
  std::vector<Point> coords_;  // validated coordinates; coords_[0] is the seed
};

std::string stream_to_string(const EventuallyPeriodic<std::uint64_t>& stream);

// n -> the n-th path of a family converging to a finite word.
using PathFamily = std::function<W0Word(std::uint64_t)>;

struct LimitWord {
  W0Word word;
  PathFamily witness;
};

// Closed-form description of D_lim for a bundled system.
class LimitSet {
 public:
  explicit LimitSet(std::shared_ptr<const DRSystem> sys);

  const std::shared_ptr<const DRSystem>& system() const { return sys_; }
  bool contains(const W0Word& word) const;
  // Throws not-in-limit-set for words outside D_lim.
  LimitWord limit_word(const W0Word& word) const;
  // The distinguished members: Zero and the words named for the system.
  std::vector<LimitWord> landmarks() const;
  std::string description() const;

 private:
  std::shared_ptr<const DRSystem> sys_;
};

LimitSet limit_words(std::shared_ptr<const DRSystem> sys);

// An element of X̃ = D_∞ ∪ D_lim: an infinite backward path, or a finite
// word of D_lim (Zero included).
class ShiftPoint {
 public:
  static ShiftPoint path(std::shared_ptr<const BackwardPath> p);
  // Validates membership in D_lim.
  static ShiftPoint finite(std::shared_ptr<const DRSystem> sys, W0Word word);
  static ShiftPoint zero(std::shared_ptr<const DRSystem> sys) { return finite(std::move(sys), W0Word::zero()); }

  // `inf(<seed>;<pre>(<cycle>)*)`, `fin[<p1>; ...]` or `zero`.
  static ShiftPoint parse(std::shared_ptr<const DRSystem> sys, std::string_view text);

  const std::shared_ptr<const DRSystem>& system() const { return sys_; }
  const W0Word& word() const { return word_; }
  bool is_infinite() const { return word_.is_infinite(); }
  bool is_zero() const { return word_.is_zero(); }
  std::optional<std::uint64_t> length() const { return word_.length(); }
  // Only for infinite points.
  const BackwardPath& backward_path() const;

  bool operator==(const ShiftPoint& other) const { return word_ == other.word_; }
  std::string to_string() const;

 private:
  ShiftPoint(std::shared_ptr<const DRSystem> sys, W0Word word) : sys_(std::move(sys)), word_(std::move(word)) {}

  std::shared_ptr<const DRSystem> sys_;
  W0Word word_;
};

// π_t: the t-th coordinate, Infinity beyond the length.
Point path_coordinate(const ShiftPoint& p, std::uint64_t t);
// Tail shift, defined for length >= 1.
ShiftPoint sigma(const ShiftPoint& p);
// σ restricted to length >= 2.
ShiftPoint sigma_hat(const ShiftPoint& p);
// y -> f(y_1) y.
ShiftPoint alpha_f(const ShiftPoint& p);

W0Distance xtilde_distance(const W0Metric& metric, const ShiftPoint& p, const ShiftPoint& q, std::uint64_t bound);
W0Distance xtilde_distance(const ShiftPoint& p, const ShiftPoint& q, std::uint64_t bound);

// Random infinite path: random seed in D, a few random admissible branches,
// then a cycle that composes forever.
std::shared_ptr<const BackwardPath> random_backward_path(const std::shared_ptr<const DRSystem>& sys,
                                                          std::mt19937_64& rng);
// Random element of X̃ of positive length (infinite or finite).
ShiftPoint random_shift_point(const std::shared_ptr<const DRSystem>& sys, std::mt19937_64& rng);

}  // namespace drshadow
