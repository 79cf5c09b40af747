#include "drshadow/words.hpp"

#include <algorithm>

namespace drshadow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  text = trim(text);
  while (!text.empty()) {
    const auto semi = text.find(';');
    const auto item = trim(text.substr(0, semi));
    if (item.empty()) throw DynamicsError(ErrorCode::kParse, "empty coordinate in word literal");
    out.push_back(parse_point(item));
    text = semi == std::string_view::npos ? std::string_view{} : trim(text.substr(semi + 1));
  }
  return out;
}

std::string join(const std::vector<Point>& points) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += "; ";
    out += to_string(p);
  }
  return out;
}

std::string bracketed(const std::vector<Point>& prefix, const std::vector<Point>& cycle) {
  std::string out = "[" + join(prefix);
  out += prefix.empty() ? "| " : " | ";
  return out + join(cycle) + "]";
}

bool acts_as_infinity(const BaseSpace& space, const Point& p) {
  if (is_infinity(p)) return true;
  if (!space.contains_compactified(p)) {
    throw DynamicsError(ErrorCode::kPointNotInSpace, to_string(p) + " is not a point of " + space.to_string());
  }
  return space.excluded() && std::get<CantorPoint>(p) == *space.excluded();
}

}  // namespace

std::vector<Point> CoordinateGenerator::head(std::uint64_t n) const {
  std::vector<Point> out;
  out.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) out.push_back(coordinate(i));
  return out;
}

bool CoordinateGenerator::same_as(const CoordinateGenerator& other) const {
  const auto mine = periodic_form();
  const auto theirs = other.periodic_form();
  if (mine && theirs) return *mine == *theirs;
  if (mine || theirs) return false;
  throw DynamicsError(ErrorCode::kInvalidArgument,
                      "cannot decide equality of " + to_string() + " and " + other.to_string());
}

Point PeriodicCoordinates::coordinate(std::uint64_t i) const {
  if (i == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "coordinates are 1-based");
  return seq_.at(i - 1);
}

bool PeriodicCoordinates::certified_finite() const {
  const auto finite = [](const Point& p) { return !is_infinity(p); };
  return std::all_of(seq_.prefix().begin(), seq_.prefix().end(), finite) &&
         std::all_of(seq_.cycle().begin(), seq_.cycle().end(), finite);
}

std::shared_ptr<const CoordinateGenerator> PeriodicCoordinates::tail() const {
  return std::make_shared<PeriodicCoordinates>(seq_.dropped(1));
}

std::string PeriodicCoordinates::to_string() const {
  return bracketed(seq_.prefix(), seq_.cycle());
}

W0Word W0Word::finite(std::vector<Point> letters) {
  if (letters.empty()) return zero();
  if (std::any_of(letters.begin(), letters.end(), is_infinity)) {
    throw DynamicsError(ErrorCode::kInvalidArgument, "finite words have no infinite coordinates");
  }
  W0Word w;
  w.kind_ = Kind::kFinite;
  w.letters_ = std::move(letters);
  return w;
}

W0Word W0Word::infinite(std::shared_ptr<const CoordinateGenerator> gen) {
  if (!gen || !gen->certified_finite()) {
    throw DynamicsError(ErrorCode::kInvalidArgument, "infinite words need a generator of finite coordinates");
  }
  W0Word w;
  w.kind_ = Kind::kInfinite;
  w.gen_ = std::move(gen);
  return w;
}

W0Word W0Word::periodic(std::vector<Point> prefix, std::vector<Point> cycle) {
  return infinite(std::make_shared<PeriodicCoordinates>(
      EventuallyPeriodic<Point>(std::move(prefix), std::move(cycle))));
}

std::optional<std::uint64_t> W0Word::length() const {
  if (kind_ == Kind::kInfinite) return std::nullopt;
  return letters_.size();
}

bool W0Word::length_at_least(std::uint64_t k) const {
  return kind_ == Kind::kInfinite || letters_.size() >= k;
}

Point W0Word::coordinate(std::uint64_t i) const {
  if (i == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "coordinates are 1-based");
  if (kind_ == Kind::kInfinite) return gen_->coordinate(i);
  if (i <= letters_.size()) return letters_[i - 1];
  return InfinityPoint{};
}

std::vector<Point> W0Word::head(std::uint64_t n) const {
  if (kind_ == Kind::kInfinite) return gen_->head(n);
  const auto k = std::min<std::uint64_t>(n, letters_.size());
  return {letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k)};
}

bool W0Word::operator==(const W0Word& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::kInfinite) return gen_ == other.gen_ || gen_->same_as(*other.gen_);
  return letters_ == other.letters_;
}

std::string W0Word::to_string() const {
  switch (kind_) {
    case Kind::kZero:
      return "Zero";
    case Kind::kFinite:
      return "[" + join(letters_) + "]";
    case Kind::kInfinite:
      return gen_->to_string();
  }
  return "";
}

W0Word parse_word(std::string_view text) {
  text = trim(text);
  if (text == "Zero") return W0Word::zero();
  if (!text.starts_with("[") || !text.ends_with("]")) {
    throw DynamicsError(ErrorCode::kParse, "expected Zero or [..] but got '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  if (body.find('|') != std::string_view::npos) {
    const auto seq = parse_sequence(text);
    if (!PeriodicCoordinates(seq).certified_finite()) {
      throw DynamicsError(ErrorCode::kParse, "infinite word literal contains inf");
    }
    return W0Word::infinite(std::make_shared<PeriodicCoordinates>(seq));
  }
  auto letters = parse_points(body);
  if (letters.empty()) throw DynamicsError(ErrorCode::kParse, "use Zero for the empty word");
  if (std::any_of(letters.begin(), letters.end(), is_infinity)) {
    throw DynamicsError(ErrorCode::kParse, "finite word literal contains inf");
  }
  return W0Word::finite(std::move(letters));
}

EventuallyPeriodic<Point> parse_sequence(std::string_view text) {
  text = trim(text);
  if (!text.starts_with("[") || !text.ends_with("]")) {
    throw DynamicsError(ErrorCode::kParse, "expected [prefix | cycle] but got '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  const auto bar = body.find('|');
  if (bar == std::string_view::npos) {
    throw DynamicsError(ErrorCode::kParse, "sequence literal needs '|' before its cycle");
  }
  auto cycle = parse_points(body.substr(bar + 1));
  if (cycle.empty()) throw DynamicsError(ErrorCode::kParse, "sequence literal has an empty cycle");
  return EventuallyPeriodic<Point>(parse_points(body.substr(0, bar)), std::move(cycle));
}

std::string sequence_to_string(const EventuallyPeriodic<Point>& seq) {
  return bracketed(seq.prefix(), seq.cycle());
}

W0Word q_normalize(const BaseSpace& space, const EventuallyPeriodic<Point>& seq) {
  const auto& prefix = seq.prefix();
  const auto& cycle = seq.cycle();
  std::optional<std::uint64_t> first;
  for (std::uint64_t i = 0; i < prefix.size() + cycle.size() && !first; ++i) {
    if (acts_as_infinity(space, seq.at(i))) first = i;
  }
  if (!first) return W0Word::infinite(std::make_shared<PeriodicCoordinates>(seq));
  std::vector<Point> letters;
  for (std::uint64_t i = 0; i < *first; ++i) letters.push_back(seq.at(i));
  return W0Word::finite(std::move(letters));
}

W0Word q_normalize(const BaseSpace& space, const std::shared_ptr<const CoordinateGenerator>& gen) {
  if (const auto form = gen->periodic_form()) return q_normalize(space, *form);
  if (gen->certified_finite()) return W0Word::infinite(gen);
  throw DynamicsError(ErrorCode::kUndetectableInfinity,
                      "cannot locate the first infinite coordinate of " + gen->to_string());
}

W0Word word_shift(const W0Word& w) {
  switch (w.kind()) {
    case W0Word::Kind::kZero:
      throw DynamicsError(ErrorCode::kZeroWordNotInDomain, "the shift is undefined on Zero");
    case W0Word::Kind::kFinite:
      return W0Word::finite({w.letters().begin() + 1, w.letters().end()});
    case W0Word::Kind::kInfinite:
      return W0Word::infinite(w.generator()->tail());
  }
  return W0Word::zero();
}

}  // namespace drshadow
