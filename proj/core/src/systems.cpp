#include "drshadow/systems.hpp"

#include "drshadow/sampling.hpp"

namespace drshadow {

namespace {

const CantorPoint& as_cantor_point(const Point& p) {
  const auto* c = std::get_if<CantorPoint>(&p);
  if (c == nullptr) throw DynamicsError(ErrorCode::kPointNotInSpace, to_string(p) + " is not a Cantor point");
  return *c;
}

std::uint64_t as_nat(const Point& p) {
  const auto* n = std::get_if<NatPoint>(&p);
  if (n == nullptr) throw DynamicsError(ErrorCode::kPointNotInSpace, to_string(p) + " is not a natural number");
  return n->value;
}

bool is_cantor(const Point& p) { return std::holds_alternative<CantorPoint>(p); }
bool is_nat(const Point& p) { return std::holds_alternative<NatPoint>(p); }

// Number of leading ones of x starting at position `from`; nullopt if all ones.
std::optional<std::uint64_t> ones_run(const CantorPoint& x, std::uint64_t from) {
  const auto diff = x.shifted(from).first_difference(CantorPoint::constant('1'));
  return diff;
}

Branch cantor_prefix_branch(std::uint64_t index, const std::string& label, const std::string& word,
                            const std::string& image_root, std::uint64_t strip) {
  Branch b;
  b.index = index;
  b.label = label;
  b.domain = ClopenSet::cylinder(word);
  b.image = ClopenSet::cylinder(image_root);
  b.in_domain = [word](const Point& p) { return is_cantor(p) && std::get<CantorPoint>(p).starts_with(word); };
  b.in_image = [image_root](const Point& p) {
    return is_cantor(p) && std::get<CantorPoint>(p).starts_with(image_root);
  };
  b.forward = [strip](const Point& p) -> Point { return as_cantor_point(p).shifted(strip); };
  const std::string glue = word.substr(0, strip);
  b.inverse = [glue](const Point& p) -> Point { return as_cantor_point(p).prepended(glue); };
  b.contraction_gain = strip;
  b.exact_gain = strip;
  return b;
}

}  // namespace

DRSystem::DRSystem(std::string name, BaseSpace space, BranchFactory branches, BranchLocator locate,
                   std::optional<std::uint64_t> branch_count, std::optional<std::uint64_t> theta_gain,
                   std::optional<std::uint64_t> r_level)
    : name_(std::move(name)),
      space_(std::move(space)),
      branches_(std::move(branches)),
      locate_(std::move(locate)),
      branch_count_(branch_count),
      theta_gain_(theta_gain),
      r_level_(r_level) {}

Branch DRSystem::branch(std::uint64_t r) const {
  if (branch_count_ && r >= *branch_count_) {
    throw DynamicsError(ErrorCode::kInvalidArgument, name_ + " has no branch " + std::to_string(r));
  }
  Branch b = branches_(r);
  if (const auto it = claimed_gains_.find(r); it != claimed_gains_.end()) b.contraction_gain = it->second;
  return b;
}

std::optional<std::uint64_t> DRSystem::branch_index_of(const Point& x) const {
  if (!space_.contains(x)) return std::nullopt;
  return locate_(x);
}

bool DRSystem::in_domain(const Point& x) const { return branch_index_of(x).has_value(); }

DRSystem DRSystem::with_claimed_gain(std::uint64_t r, std::uint64_t gain) const {
  DRSystem copy = *this;
  copy.claimed_gains_[r] = gain;
  return copy;
}

Branch branch_of(const DRSystem& sys, const Point& x) {
  const auto r = sys.branch_index_of(x);
  if (!r) throw DynamicsError(ErrorCode::kNotInDomain, to_string(x) + " is not in the domain of " + sys.name());
  return sys.branch(*r);
}

Point apply_system(const DRSystem& sys, const Point& x) { return branch_of(sys, x).forward(x); }

Point branch_inverse(const DRSystem& sys, const Branch& b, const Point& y) {
  const Point target = is_infinity(y) && sys.space().excluded() ? Point(*sys.space().excluded()) : y;
  if (!b.in_image(target)) {
    throw DynamicsError(ErrorCode::kNotInImage,
                        to_string(y) + " is not in the image of branch " + std::to_string(b.index) + " of " +
                            sys.name());
  }
  return b.inverse(target);
}

std::uint64_t return_time(const CantorPoint& x) {
  if (!x.starts_with("0")) throw DynamicsError(ErrorCode::kNotInDomain, x.to_string() + " is not in Z(0)");
  const auto k = ones_run(x, 1);
  if (!k) throw DynamicsError(ErrorCode::kInfiniteReturnTime, x.to_string() + " never returns to Z(0)");
  return *k + 1;
}

DRSystem variable_length_shift() {
  auto branches = [](std::uint64_t n) {
    return cantor_prefix_branch(n, "Z(1^" + std::to_string(n) + " 0)", std::string(n, '1') + "0", "", n + 1);
  };
  auto locate = [](const Point& x) -> std::optional<std::uint64_t> {
    if (!is_cantor(x)) return std::nullopt;
    return ones_run(std::get<CantorPoint>(x), 0);
  };
  return DRSystem("vls", BaseSpace::cantor_minus(CantorPoint::constant('1')), branches, locate, std::nullopt, 1, 0);
}

DRSystem first_return_map() {
  auto branches = [](std::uint64_t k) {
    return cantor_prefix_branch(k, "Z(0 1^" + std::to_string(k) + " 0)", "0" + std::string(k, '1') + "0", "0",
                                k + 1);
  };
  auto locate = [](const Point& x) -> std::optional<std::uint64_t> {
    if (!is_cantor(x) || !std::get<CantorPoint>(x).starts_with("0")) return std::nullopt;
    return ones_run(std::get<CantorPoint>(x), 1);
  };
  return DRSystem("frm", BaseSpace::cantor_minus(CantorPoint("0", "1"), "0"), branches, locate, std::nullopt, 1, 0);
}

DRSystem halving_map() {
  auto branches = [](std::uint64_t r) {
    Branch b;
    b.index = r;
    if (r == 0) {
      b.label = "even";
      b.in_domain = [](const Point& p) { return is_nat(p) && as_nat(p) % 2 == 0; };
      b.in_image = [](const Point& p) { return is_nat(p); };
      b.forward = [](const Point& p) -> Point { return NatPoint{as_nat(p) / 2}; };
      b.inverse = [](const Point& p) -> Point { return NatPoint{2 * as_nat(p)}; };
      return b;
    }
    const std::uint64_t odd = 2 * r - 1;
    b.label = "{" + std::to_string(odd) + "}";
    b.domain = ClopenSet::nats({odd});
    b.image = ClopenSet::nats({1});
    b.in_domain = [odd](const Point& p) { return is_nat(p) && as_nat(p) == odd; };
    b.in_image = [](const Point& p) { return is_nat(p) && as_nat(p) == 1; };
    b.forward = [](const Point&) -> Point { return NatPoint{1}; };
    b.inverse = [odd](const Point&) -> Point { return NatPoint{odd}; };
    return b;
  };
  auto locate = [](const Point& x) -> std::optional<std::uint64_t> {
    if (!is_nat(x)) return std::nullopt;
    const auto m = as_nat(x);
    return m % 2 == 0 ? 0 : (m + 1) / 2;
  };
  return DRSystem("halving", BaseSpace::nat(), branches, locate, std::nullopt, std::nullopt, std::nullopt);
}

DRSystem nat_identity() {
  auto branches = [](std::uint64_t n) {
    Branch b;
    b.index = n;
    b.label = "{" + std::to_string(n) + "}";
    b.domain = ClopenSet::nats({n});
    b.image = ClopenSet::nats({n});
    b.in_domain = [n](const Point& p) { return is_nat(p) && as_nat(p) == n; };
    b.in_image = b.in_domain;
    b.forward = [](const Point& p) { return p; };
    b.inverse = [](const Point& p) { return p; };
    return b;
  };
  auto locate = [](const Point& x) -> std::optional<std::uint64_t> {
    if (!is_nat(x)) return std::nullopt;
    return as_nat(x);
  };
  return DRSystem("nat-identity", BaseSpace::nat(), branches, locate, std::nullopt, std::nullopt, std::nullopt);
}

std::shared_ptr<const DRSystem> system_by_name(const std::string& name) {
  if (name == "vls") return std::make_shared<const DRSystem>(variable_length_shift());
  if (name == "frm") return std::make_shared<const DRSystem>(first_return_map());
  if (name == "halving") return std::make_shared<const DRSystem>(halving_map());
  if (name == "nat-identity") return std::make_shared<const DRSystem>(nat_identity());
  throw DynamicsError(ErrorCode::kUnsupportedSystem, "no bundled system named '" + name + "'");
}

SeparationReport verify_separation(const DRSystem& sys, std::uint64_t samples, std::mt19937_64& rng,
                                   std::uint64_t branches) {
  SeparationReport report;
  report.system = sys.name();
  const auto& space = sys.space();
  if (sys.branch_count()) branches = std::min(branches, *sys.branch_count());

  const auto fail = [&](std::uint64_t r, std::string check, const Point& a, const Point& b, std::string detail) {
    report.pass = false;
    if (report.failures.size() < 16) {
      report.failures.push_back({r, std::move(check), to_string(a), to_string(b), std::move(detail)});
    }
  };

  for (std::uint64_t r = 0; r < branches; ++r) {
    const Branch br = sys.branch(r);
    ++report.branches_checked;
    const auto sample_image = [&]() -> Point {
      if (br.image) return random_point_in(space, *br.image, rng);
      for (;;) {
        Point p = random_point(space, rng);
        if (br.in_image(p)) return p;
      }
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Point a = sample_image();
      Point b = sample_image();
      // Half of the pairs share a long prefix so that deep levels are exercised.
      if (space.is_cantor() && uniform(rng, 0, 1) == 0) {
        const auto& ca = std::get<CantorPoint>(a);
        const auto at = uniform(rng, space.root().size(), space.root().size() + 12);
        Point flipped = ca.flipped(at);
        if (br.in_image(flipped) && space.contains(flipped)) b = flipped;
      }
      ++report.pairs_checked;

      const Point ga = branch_inverse(sys, br, a);
      const Point gb = branch_inverse(sys, br, b);
      if (!br.in_domain(ga) || br.forward(ga) != a) {
        fail(r, "inverse-law", a, ga, "f(g(a)) != a");
        continue;
      }
      if (br.inverse(br.forward(ga)) != ga) fail(r, "inverse-law", ga, a, "g(f(x)) != x");

      const auto before = point_distance(space, a, b);
      const auto after = point_distance(space, ga, gb);
      if (after < before.plus(br.contraction_gain)) {
        fail(r, "gain", a, b,
             "level " + std::to_string(after.value()) + " < " + before.to_string() + " shifted by " +
                 std::to_string(br.contraction_gain));
      }
      if (sys.theta_gain() && after < before.plus(*sys.theta_gain())) {
        fail(r, "uniform-gain", a, b, "gain below theta");
      }
      if (br.exact_gain && after != before.plus(*br.exact_gain)) {
        fail(r, "exact-gain", a, b, "expected " + before.plus(*br.exact_gain).to_string() + ", got " + after.to_string());
      }
      if (sys.r_level() && br.image) {
        const auto ball = ball_atom(space, a, *sys.r_level());
        if (!ball.subset_of(*br.image)) fail(r, "interior-radius", a, a, ball.to_string() + " leaves the image");
      }
    }
  }
  return report;
}

}  // namespace drshadow
