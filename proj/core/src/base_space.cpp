#include "drshadow/base_space.hpp"

#include <algorithm>

namespace drshadow {

namespace {

char flip(char bit) { return bit == '0' ? '1' : '0'; }

std::string bits_of(std::uint64_t value, std::uint64_t length) {
  std::string out(length, '0');
  for (std::uint64_t k = 0; k < length; ++k) {
    if ((value >> (length - 1 - k)) & 1U) out[k] = '1';
  }
  return out;
}

std::uint64_t value_of(std::string_view bits) {
  std::uint64_t v = 0;
  for (char c : bits) v = (v << 1U) | (c == '1' ? 1U : 0U);
  return v;
}

// Maps a point of a Cantor space (or its compactification) to a bit sequence.
CantorPoint as_cantor(const BaseSpace& space, const Point& p) {
  if (is_infinity(p)) {
    if (!space.excluded()) {
      throw DynamicsError(ErrorCode::kPointNotInSpace, "the full Cantor space has no point at infinity");
    }
    return *space.excluded();
  }
  const auto* c = std::get_if<CantorPoint>(&p);
  if (c == nullptr || !c->starts_with(space.root())) {
    throw DynamicsError(ErrorCode::kPointNotInSpace,
                        to_string(p) + " is not a point of " + space.to_string());
  }
  return *c;
}

// ∞ is encoded as the largest level so that min() gives the metric directly.
std::uint64_t as_nat_level(const Point& p) {
  if (is_infinity(p)) return UINT64_MAX;
  const auto* n = std::get_if<NatPoint>(&p);
  if (n == nullptr) {
    throw DynamicsError(ErrorCode::kPointNotInSpace, to_string(p) + " is not a point of nat");
  }
  if (n->value == UINT64_MAX) throw DynamicsError(ErrorCode::kPointNotInSpace, "natural number too large");
  return n->value;
}

std::uint64_t common_prefix(const std::string& a, const std::string& b) {
  const auto limit = std::min(a.size(), b.size());
  std::uint64_t k = 0;
  while (k < limit && a[k] == b[k]) ++k;
  return k;
}

}  // namespace

BaseSpace BaseSpace::cantor_minus(CantorPoint excluded, std::string root) {
  if (!excluded.starts_with(root)) {
    throw DynamicsError(ErrorCode::kInvalidArgument, "excluded point must lie in Z(" + root + ")");
  }
  return BaseSpace(Kind::kCantorMinus, std::move(excluded), std::move(root));
}

BaseSpace BaseSpace::parse(std::string_view text) {
  if (text == "nat") return nat();
  if (text == "cantor") return cantor();
  constexpr std::string_view kMinus = "cantor-minus:";
  if (text.starts_with(kMinus)) {
    auto rest = text.substr(kMinus.size());
    std::string root;
    if (const auto at = rest.find('@'); at != std::string_view::npos) {
      root = std::string(rest.substr(at + 1));
      rest = rest.substr(0, at);
    }
    return cantor_minus(CantorPoint::parse(rest), std::move(root));
  }
  throw DynamicsError(ErrorCode::kParse, "unknown space '" + std::string(text) + "'");
}

bool BaseSpace::contains(const Point& p) const {
  switch (kind_) {
    case Kind::kNat:
      return std::holds_alternative<NatPoint>(p);
    case Kind::kCantorFull:
      return std::holds_alternative<CantorPoint>(p);
    case Kind::kCantorMinus: {
      const auto* c = std::get_if<CantorPoint>(&p);
      return c != nullptr && c->starts_with(root_) && *c != *excluded_;
    }
  }
  return false;
}

bool BaseSpace::contains_compactified(const Point& p) const {
  if (is_infinity(p)) return kind_ != Kind::kCantorFull;
  if (kind_ == Kind::kCantorMinus) {
    const auto* c = std::get_if<CantorPoint>(&p);
    return c != nullptr && c->starts_with(root_);
  }
  return contains(p);
}

std::string BaseSpace::to_string() const {
  switch (kind_) {
    case Kind::kNat:
      return "nat";
    case Kind::kCantorFull:
      return "cantor";
    case Kind::kCantorMinus:
      return "cantor-minus:" + excluded_->to_string() + (root_.empty() ? "" : "@" + root_);
  }
  return "";
}

Level point_distance(const BaseSpace& space, const Point& x, const Point& y) {
  if (space.is_nat()) {
    const auto a = as_nat_level(x);
    const auto b = as_nat_level(y);
    if (a == b) return Level::infinite();
    return Level::finite(std::min(a, b));
  }
  const auto diff = as_cantor(space, x).first_difference(as_cantor(space, y));
  return diff ? Level::finite(*diff) : Level::infinite();
}

bool clopen_member(const BaseSpace& /*space*/, const ClopenSet& s, const Point& x) {
  return s.contains(x);
}

ClopenSet clopen_intersect(const BaseSpace& /*space*/, const ClopenSet& s, const ClopenSet& t) {
  return s.intersect(t);
}

ClopenSet enumerate_basis(const BaseSpace& space, std::uint64_t i) {
  if (i == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "basis indices start at 1");
  if (space.is_nat()) return ClopenSet::nats({i - 1});

  // Strings v of length L contribute 2^L cylinders, one fewer when a point is
  // excluded (exactly one cylinder per length contains it).
  const bool minus = space.excluded().has_value();
  std::uint64_t remaining = i - 1;
  for (std::uint64_t length = 1; length < 63; ++length) {
    const std::uint64_t count = (std::uint64_t{1} << length) - (minus ? 1 : 0);
    if (remaining < count) {
      std::uint64_t rank = remaining;
      if (minus) {
        const auto skipped = value_of(space.excluded()->head(space.root().size() + length))
                             & ((std::uint64_t{1} << length) - 1);
        if (rank >= skipped) ++rank;
      }
      return ClopenSet::cylinder(space.root() + bits_of(rank, length));
    }
    remaining -= count;
  }
  throw DynamicsError(ErrorCode::kInvalidArgument, "basis index out of range");
}

ClopenSet ball_atom(const BaseSpace& space, const Point& x, std::uint64_t n) {
  if (space.is_nat()) {
    const auto m = as_nat_level(x);
    if (m <= n) return ClopenSet::nats({m});
    return ClopenSet::nats({}, n + 1);
  }
  return ClopenSet::cylinder(as_cantor(space, x).head(n + 1));
}

Level clopen_diameter(const BaseSpace& space, const ClopenSet& s) {
  if (s.is_empty()) return Level::infinite();
  if (s.is_nat()) {
    if (!space.is_nat()) throw DynamicsError(ErrorCode::kPointNotInSpace, "set of naturals in a Cantor space");
    const auto& set = s.as_nat();
    const std::size_t points = set.elements().size() + (set.tail_from() ? 2 : 0);
    if (points < 2) return Level::infinite();
    if (!set.elements().empty()) return Level::finite(set.elements().front());
    return Level::finite(*set.tail_from());
  }
  const auto& words = s.as_cylinders().words();
  std::uint64_t level = UINT64_MAX;
  for (std::size_t a = 0; a < words.size(); ++a) {
    level = std::min<std::uint64_t>(level, words[a].size());
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      level = std::min(level, common_prefix(words[a], words[b]));
    }
  }
  return Level::finite(level);
}

std::optional<Level> separation_from_complement(const BaseSpace& space, const ClopenSet& s) {
  if (s.is_nat()) {
    const auto& set = s.as_nat();
    if (!set.tail_from()) {
      if (set.elements().empty()) return std::nullopt;
      return Level::finite(set.elements().back());
    }
    // Complement is a finite set below the tail.
    std::optional<std::uint64_t> best;
    for (std::uint64_t y = 0; y < *set.tail_from(); ++y) {
      if (!set.contains(NatPoint{y})) best = y;
    }
    if (!best) return std::nullopt;
    return Level::finite(*best);
  }
  // Nearest outside points sit just across a boundary: w[0..j) followed by
  // the flipped bit w[j], for a cylinder Z(w) of the union.
  std::optional<std::uint64_t> best;
  for (const auto& w : s.as_cylinders().words()) {
    for (std::uint64_t j = space.root().size(); j < w.size(); ++j) {
      std::string across = w.substr(0, j);
      across.push_back(flip(w[j]));
      const auto piece = ClopenSet::cylinder(across);
      if (piece.intersect(s) == piece) continue;
      if (!best || j > *best) best = j;
    }
  }
  if (!best) return std::nullopt;  // s is all of Z(root)
  return Level::finite(*best);
}

}  // namespace drshadow
