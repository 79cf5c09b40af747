#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace drshadow {

// Reduces prefix·cycle^∞ to its normal form: the cycle is primitive and the
// prefix is as short as possible. Works for std::string and std::vector<T>.
template <class Seq>
void canonicalize_periodic(Seq& prefix, Seq& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = cycle[i] == cycle[i - d];
    }
    if (periodic) {
      cycle.resize(d);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
  }
}

// An eventually periodic sequence prefix·cycle·cycle·…, always held in
// normal form so that == is sequence equality.
template <class T>
class EventuallyPeriodic {
 public:
  EventuallyPeriodic(std::vector<T> prefix, std::vector<T> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) {
      throw std::invalid_argument("eventually periodic sequence needs a nonempty cycle");
    }
    canonicalize_periodic(prefix_, cycle_);
  }

  static EventuallyPeriodic constant(T value) { return EventuallyPeriodic({}, {std::move(value)}); }

  const std::vector<T>& prefix() const { return prefix_; }
  const std::vector<T>& cycle() const { return cycle_; }

  // Zero-based access.
  const T& at(std::uint64_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
  }

  EventuallyPeriodic dropped(std::uint64_t k) const {
    if (k <= prefix_.size()) {
      return EventuallyPeriodic(std::vector<T>(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()),
                                cycle_);
    }
    std::vector<T> rotated = cycle_;
    const auto shift = static_cast<std::ptrdiff_t>((k - prefix_.size()) % cycle_.size());
    std::rotate(rotated.begin(), rotated.begin() + shift, rotated.end());
    return EventuallyPeriodic({}, std::move(rotated));
  }

  EventuallyPeriodic prepended(const std::vector<T>& head) const {
    std::vector<T> prefix = head;
    prefix.insert(prefix.end(), prefix_.begin(), prefix_.end());
    return EventuallyPeriodic(std::move(prefix), cycle_);
  }

  // Every position where two normal forms can first differ lies below this.
  std::uint64_t comparison_horizon(const EventuallyPeriodic& other) const {
    return std::max(prefix_.size(), other.prefix_.size()) +
           std::lcm(cycle_.size(), other.cycle_.size());
  }

  bool operator==(const EventuallyPeriodic&) const = default;

 private:
  std::vector<T> prefix_;
  std::vector<T> cycle_;
};

}  // namespace drshadow
