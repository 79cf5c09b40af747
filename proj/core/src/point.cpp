#include "drshadow/point.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "drshadow/eventually_periodic.hpp"

namespace drshadow {

namespace {

bool is_bit_string(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

CantorPoint::CantorPoint(std::string prefix, std::string cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty() || !is_bit_string(prefix_) || !is_bit_string(cycle_)) {
    throw DynamicsError(ErrorCode::kParse,
                        "Cantor point needs bit strings and a nonempty cycle");
  }
  canonicalize_periodic(prefix_, cycle_);
}

CantorPoint CantorPoint::parse(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 ||
      text.substr(text.size() - 2) != ")*") {
    throw DynamicsError(ErrorCode::kParse,
                        "expected <bits>(<bits>)* but got '" + std::string(text) + "'");
  }
  const auto prefix = text.substr(0, open);
  const auto cycle = text.substr(open + 1, text.size() - open - 3);
  if (!is_bit_string(prefix) || !is_bit_string(cycle) || cycle.empty()) {
    throw DynamicsError(ErrorCode::kParse, "bad Cantor literal '" + std::string(text) + "'");
  }
  return CantorPoint(std::string(prefix), std::string(cycle));
}

std::string CantorPoint::head(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(bit(i));
  return out;
}

bool CantorPoint::starts_with(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (bit(i) != word[i]) return false;
  }
  return true;
}

CantorPoint CantorPoint::shifted(std::uint64_t k) const {
  if (k <= prefix_.size()) return CantorPoint(prefix_.substr(k), cycle_);
  std::string rotated = cycle_;
  const auto shift = static_cast<std::ptrdiff_t>((k - prefix_.size()) % cycle_.size());
  std::rotate(rotated.begin(), rotated.begin() + shift, rotated.end());
  return CantorPoint("", std::move(rotated));
}

CantorPoint CantorPoint::prepended(std::string_view word) const {
  return CantorPoint(std::string(word) + prefix_, cycle_);
}

CantorPoint CantorPoint::flipped(std::uint64_t i) const {
  std::string head_bits = head(i + 1);
  head_bits.back() = head_bits.back() == '0' ? '1' : '0';
  return shifted(i + 1).prepended(head_bits);
}

std::optional<std::uint64_t> CantorPoint::first_difference(const CantorPoint& other) const {
  if (*this == other) return std::nullopt;
  const std::uint64_t horizon = std::max(prefix_.size(), other.prefix_.size()) +
                                std::lcm(cycle_.size(), other.cycle_.size());
  for (std::uint64_t i = 0; i < horizon; ++i) {
    if (bit(i) != other.bit(i)) return i;
  }
  // Unreachable for canonical forms.
  throw std::logic_error("distinct canonical Cantor points agree on their horizon");
}

std::string CantorPoint::to_string() const { return prefix_ + "(" + cycle_ + ")*"; }

Point parse_point(std::string_view text) {
  text = trim(text);
  if (text == "inf") return InfinityPoint{};
  if (text.starts_with("Nat:")) {
    const auto digits = text.substr(4);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw DynamicsError(ErrorCode::kParse, "bad natural-number literal '" + std::string(text) + "'");
    }
    return NatPoint{value};
  }
  return CantorPoint::parse(text);
}

std::string to_string(const Point& p) {
  struct Visitor {
    std::string operator()(const NatPoint& n) const { return "Nat:" + std::to_string(n.value); }
    std::string operator()(const CantorPoint& c) const { return c.to_string(); }
    std::string operator()(const InfinityPoint&) const { return "inf"; }
  };
  return std::visit(Visitor{}, p);
}

}  // namespace drshadow
