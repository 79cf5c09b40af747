#include "drshadow/inverse_limit.hpp"

#include <charconv>

#include "drshadow/sampling.hpp"

namespace drshadow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::uint64_t> parse_index_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DynamicsError(ErrorCode::kParse, "bad branch index '" + std::string(item) + "'");
    }
    out.push_back(v);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

std::string join_indices(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

bool is_cantor_system(const DRSystem& sys) { return sys.name() == "vls" || sys.name() == "frm"; }

std::uint64_t require_branch(const DRSystem& sys, const Point& x) {
  const auto r = sys.branch_index_of(x);
  if (!r) throw DynamicsError(ErrorCode::kNotInDomain, to_string(x) + " is not in the domain of " + sys.name());
  return *r;
}

W0Word path_word(const std::shared_ptr<const DRSystem>& sys, Point seed, std::vector<std::uint64_t> pre,
                 std::vector<std::uint64_t> cycle) {
  return W0Word::infinite(std::make_shared<BackwardPath>(
      sys, std::move(seed), EventuallyPeriodic<std::uint64_t>(std::move(pre), std::move(cycle))));
}

}  // namespace

BackwardPath::BackwardPath(std::shared_ptr<const DRSystem> sys, Point seed,
                           EventuallyPeriodic<std::uint64_t> stream, std::uint64_t validation_depth)
    : sys_(std::move(sys)), stream_(std::move(stream)) {
  if (!sys_->in_domain(seed)) {
    throw DynamicsError(ErrorCode::kNotInDomain, drshadow::to_string(seed) + " is not in the domain of " + sys_->name());
  }
  const auto depth = std::max<std::uint64_t>(
      validation_depth, stream_.prefix().size() + 2 * stream_.cycle().size() + 1);
  coords_.reserve(depth);
  coords_.push_back(std::move(seed));
  for (std::uint64_t t = 0; coords_.size() < depth; ++t) {
    coords_.push_back(branch_inverse(*sys_, sys_->branch(stream_.at(t)), coords_.back()));
  }
}

Point BackwardPath::coordinate(std::uint64_t i) const {
  if (i == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "coordinates are 1-based");
  if (i <= coords_.size()) return coords_[i - 1];
  Point c = coords_.back();
  for (std::uint64_t t = coords_.size() - 1; t + 1 < i; ++t) {
    c = branch_inverse(*sys_, sys_->branch(stream_.at(t)), c);
  }
  return c;
}

std::vector<Point> BackwardPath::head(std::uint64_t n) const {
  if (n <= coords_.size()) return {coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(n)};
  std::vector<Point> out = coords_;
  out.reserve(n);
  for (std::uint64_t t = coords_.size() - 1; out.size() < n; ++t) {
    out.push_back(branch_inverse(*sys_, sys_->branch(stream_.at(t)), out.back()));
  }
  return out;
}

std::optional<EventuallyPeriodic<Point>> BackwardPath::periodic_form() const {
  // Once the stream is periodic, one full period acts as a fixed injective
  // map F, so the path is periodic iff some F^m fixes the coordinate where the
  // stream cycle starts. Bundled systems only need m = 1; a few more are tried.
  const auto pre = stream_.prefix().size();
  const auto q = stream_.cycle().size();
  constexpr std::uint64_t kMaxPowers = 4;
  const auto coords = head(pre + kMaxPowers * q + 1);
  for (std::uint64_t m = 1; m <= kMaxPowers; ++m) {
    if (coords[pre] == coords[pre + m * q]) {
      return EventuallyPeriodic<Point>({coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(pre)},
                                       {coords.begin() + static_cast<std::ptrdiff_t>(pre),
                                        coords.begin() + static_cast<std::ptrdiff_t>(pre + m * q)});
    }
  }
  return std::nullopt;
}

std::shared_ptr<const CoordinateGenerator> BackwardPath::tail() const {
  return std::make_shared<BackwardPath>(sys_, coords_[1], stream_.dropped(1));
}

bool BackwardPath::same_as(const CoordinateGenerator& other) const {
  if (const auto* p = dynamic_cast<const BackwardPath*>(&other)) {
    return p->sys_->name() == sys_->name() && p->seed() == seed() && p->stream_ == stream_;
  }
  return CoordinateGenerator::same_as(other);
}

std::string BackwardPath::to_string() const {
  return "inf(" + drshadow::to_string(seed()) + ";" + stream_to_string(stream_) + ")";
}

std::shared_ptr<const BackwardPath> BackwardPath::prefixed_by_image() const {
  const auto r = require_branch(*sys_, seed());
  Point image = sys_->branch(r).forward(seed());
  if (!sys_->space().contains(image)) {
    throw DynamicsError(ErrorCode::kNotInDomain,
                        "f(" + drshadow::to_string(seed()) + ") = " + drshadow::to_string(image) + " is outside D");
  }
  return std::make_shared<BackwardPath>(sys_, std::move(image), stream_.prepended({r}));
}

std::string stream_to_string(const EventuallyPeriodic<std::uint64_t>& stream) {
  return join_indices(stream.prefix()) + "(" + join_indices(stream.cycle()) + ")*";
}

LimitSet::LimitSet(std::shared_ptr<const DRSystem> sys) : sys_(std::move(sys)) {
  const auto& n = sys_->name();
  if (n != "vls" && n != "frm" && n != "halving" && n != "nat-identity") {
    throw DynamicsError(ErrorCode::kUnsupportedSystem, "no closed form for the limit words of " + n);
  }
}

bool LimitSet::contains(const W0Word& word) const {
  if (word.is_zero()) return true;
  if (!word.is_finite()) return false;
  const auto& a = word.letters();
  if (sys_->name() == "nat-identity") return false;
  if (sys_->name() == "halving") {
    return std::all_of(a.begin(), a.end(), [](const Point& p) { return p == Point(NatPoint{1}); });
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!sys_->in_domain(a[i])) return false;
    if (i + 1 < a.size() && drshadow::apply(*sys_, a[i + 1]) != a[i]) return false;
  }
  return true;
}

LimitWord LimitSet::limit_word(const W0Word& word) const {
  if (!contains(word)) {
    throw DynamicsError(ErrorCode::kNotInLimitSet, word.to_string() + " is not a limit word of " + sys_->name());
  }
  const auto sys = sys_;
  PathFamily witness;
  if (sys->name() == "nat-identity") {
    witness = [sys](std::uint64_t n) { return path_word(sys, NatPoint{n}, {}, {n}); };
  } else if (sys->name() == "halving") {
    const auto k = word.letters().size();
    if (k == 0) {
      witness = [sys](std::uint64_t n) { return path_word(sys, NatPoint{n}, {}, {0}); };
    } else {
      // (1, ..., 1, 2n+1, 2(2n+1), ...): the branch of 2n+1 is n+1.
      witness = [sys, k](std::uint64_t n) {
        std::vector<std::uint64_t> pre(k - 1, 1);
        pre.push_back(n + 1);
        return path_word(sys, NatPoint{1}, pre, {0});
      };
    }
  } else if (word.is_zero()) {
    const bool vls = sys->name() == "vls";
    witness = [sys, vls](std::uint64_t n) {
      const std::string ones(n, '1');
      return path_word(sys, vls ? CantorPoint(ones + "0", "0") : CantorPoint("0" + ones, "0"), {}, {0});
    };
  } else {
    // Follow the word, then branch n forever; coordinate k+1 tends to the
    // missing point.
    std::vector<std::uint64_t> pre;
    const auto& a = word.letters();
    for (std::size_t i = 1; i < a.size(); ++i) pre.push_back(require_branch(*sys, a[i]));
    const Point seed = a.front();
    witness = [sys, seed, pre](std::uint64_t n) { return path_word(sys, seed, pre, {n}); };
  }
  return LimitWord{word, std::move(witness)};
}

std::vector<LimitWord> LimitSet::landmarks() const {
  std::vector<LimitWord> out{limit_word(W0Word::zero())};
  const auto& n = sys_->name();
  if (n == "vls") out.push_back(limit_word(W0Word::finite({CantorPoint("1", "0")})));
  if (n == "frm") out.push_back(limit_word(W0Word::finite({CantorPoint("", "01")})));
  if (n == "halving") {
    for (std::uint64_t k = 1; k <= 3; ++k) out.push_back(limit_word(W0Word::finite(std::vector<Point>(k, NatPoint{1}))));
  }
  return out;
}

std::string LimitSet::description() const {
  const auto& n = sys_->name();
  if (n == "nat-identity") return "{Zero}";
  if (n == "halving") return "{Zero} + {(1,...,1)}";
  return "{Zero} + finite backward paths in D";
}

LimitSet limit_words(std::shared_ptr<const DRSystem> sys) { return LimitSet(std::move(sys)); }

ShiftPoint ShiftPoint::path(std::shared_ptr<const BackwardPath> p) {
  auto sys = p->system();
  return ShiftPoint(std::move(sys), W0Word::infinite(std::move(p)));
}

ShiftPoint ShiftPoint::finite(std::shared_ptr<const DRSystem> sys, W0Word word) {
  if (word.is_infinite()) {
    auto p = std::dynamic_pointer_cast<const BackwardPath>(word.generator());
    if (!p || p->system()->name() != sys->name()) {
      throw DynamicsError(ErrorCode::kInvalidArgument, "infinite shift points must be backward paths of " + sys->name());
    }
    return path(std::move(p));
  }
  if (!LimitSet(sys).contains(word)) {
    throw DynamicsError(ErrorCode::kNotInLimitSet, word.to_string() + " is not a limit word of " + sys->name());
  }
  return ShiftPoint(std::move(sys), std::move(word));
}

ShiftPoint ShiftPoint::parse(std::shared_ptr<const DRSystem> sys, std::string_view text) {
  text = trim(text);
  if (text == "zero") return zero(std::move(sys));
  if (text.starts_with("fin[") && text.ends_with("]")) {
    return finite(std::move(sys), parse_word(text.substr(3)));
  }
  if (text.starts_with("inf(") && text.ends_with(")")) {
    const auto body = text.substr(4, text.size() - 5);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw DynamicsError(ErrorCode::kParse, "inf(..) needs '<seed>;<stream>'");
    const Point seed = parse_point(body.substr(0, semi));
    const auto stream = trim(body.substr(semi + 1));
    const auto open = stream.find('(');
    if (open == std::string_view::npos || !stream.ends_with(")*")) {
      throw DynamicsError(ErrorCode::kParse, "branch stream must look like <pre>(<cycle>)*");
    }
    auto cycle = parse_index_list(stream.substr(open + 1, stream.size() - open - 3));
    if (cycle.empty()) throw DynamicsError(ErrorCode::kParse, "branch stream has an empty cycle");
    return path(std::make_shared<BackwardPath>(
        sys, seed, EventuallyPeriodic<std::uint64_t>(parse_index_list(stream.substr(0, open)), std::move(cycle))));
  }
  throw DynamicsError(ErrorCode::kParse, "bad shift point literal '" + std::string(text) + "'");
}

const BackwardPath& ShiftPoint::backward_path() const {
  if (!is_infinite()) throw DynamicsError(ErrorCode::kInvalidArgument, "not an infinite shift point");
  return static_cast<const BackwardPath&>(*word_.generator());
}

std::string ShiftPoint::to_string() const {
  if (word_.is_zero()) return "zero";
  if (word_.is_finite()) return "fin" + word_.to_string();
  return word_.to_string();
}

Point path_coordinate(const ShiftPoint& p, std::uint64_t t) { return p.word().coordinate(t); }

ShiftPoint sigma(const ShiftPoint& p) {
  if (p.is_zero()) throw DynamicsError(ErrorCode::kZeroWordNotInDomain, "sigma is undefined on Zero");
  if (p.is_infinite()) {
    return ShiftPoint::path(std::static_pointer_cast<const BackwardPath>(p.backward_path().tail()));
  }
  return ShiftPoint::finite(p.system(), word_shift(p.word()));
}

ShiftPoint sigma_hat(const ShiftPoint& p) {
  if (!p.word().length_at_least(2)) {
    throw DynamicsError(ErrorCode::kLengthBelowTwo, "sigma_hat needs length at least 2");
  }
  return sigma(p);
}

ShiftPoint alpha_f(const ShiftPoint& p) {
  if (p.is_zero()) throw DynamicsError(ErrorCode::kZeroWordNotInDomain, "alpha_f is undefined on Zero");
  if (p.is_infinite()) return ShiftPoint::path(p.backward_path().prefixed_by_image());
  const auto& sys = *p.system();
  const auto& letters = p.word().letters();
  Point image = drshadow::apply(sys, letters.front());
  if (!sys.space().contains(image)) {
    throw DynamicsError(ErrorCode::kNotInDomain,
                        "f(" + to_string(letters.front()) + ") = " + to_string(image) + " is outside D");
  }
  std::vector<Point> out{std::move(image)};
  out.insert(out.end(), letters.begin(), letters.end());
  return ShiftPoint::finite(p.system(), W0Word::finite(std::move(out)));
}

W0Distance xtilde_distance(const W0Metric& metric, const ShiftPoint& p, const ShiftPoint& q, std::uint64_t bound) {
  return metric.distance(p.word(), q.word(), bound);
}

W0Distance xtilde_distance(const ShiftPoint& p, const ShiftPoint& q, std::uint64_t bound) {
  return xtilde_distance(W0Metric(p.system()->space()), p, q, bound);
}

std::shared_ptr<const BackwardPath> random_backward_path(const std::shared_ptr<const DRSystem>& sys,
                                                          std::mt19937_64& rng) {
  const auto& space = sys->space();
  const auto pick = [&](const Point& c) -> std::uint64_t {
    std::vector<std::uint64_t> admissible;
    for (std::uint64_t r = 0; r <= 5; ++r) {
      if (sys->branch(r).in_image(c)) admissible.push_back(r);
    }
    if (admissible.empty()) return require_branch(*sys, c);
    return admissible[uniform(rng, 0, admissible.size() - 1)];
  };
  for (;;) {
    Point c = random_point(space, rng);
    if (!sys->in_domain(c)) continue;
    const Point seed = c;
    std::vector<std::uint64_t> pre;
    const auto pre_len = uniform(rng, 0, 4);
    for (std::uint64_t t = 0; t < pre_len; ++t) {
      pre.push_back(pick(c));
      c = branch_inverse(*sys, sys->branch(pre.back()), c);
    }
    std::vector<std::uint64_t> cycle;
    const auto cycle_len = uniform(rng, 1, 2);
    for (std::uint64_t t = 0; t < cycle_len; ++t) {
      cycle.push_back(pick(c));
      c = branch_inverse(*sys, sys->branch(cycle.back()), c);
    }
    try {
      return std::make_shared<BackwardPath>(sys, seed,
                                            EventuallyPeriodic<std::uint64_t>(std::move(pre), std::move(cycle)));
    } catch (const DynamicsError&) {
      // The cycle does not compose forever from here; draw again.
    }
  }
}

ShiftPoint random_shift_point(const std::shared_ptr<const DRSystem>& sys, std::mt19937_64& rng) {
  const bool finite = uniform(rng, 0, 1) == 0;
  if (finite && sys->name() == "halving") {
    return ShiftPoint::finite(sys, W0Word::finite(std::vector<Point>(uniform(rng, 1, 4), NatPoint{1})));
  }
  if (finite && is_cantor_system(*sys)) {
    Point c = random_point(sys->space(), rng);
    std::vector<Point> letters{c};
    const auto len = uniform(rng, 1, 4);
    while (letters.size() < len) {
      c = branch_inverse(*sys, sys->branch(uniform(rng, 0, 5)), c);
      letters.push_back(c);
    }
    return ShiftPoint::finite(sys, W0Word::finite(std::move(letters)));
  }
  return ShiftPoint::path(random_backward_path(sys, rng));
}

}  // namespace drshadow
