#include "drshadow/shadowing.hpp"

#include <algorithm>
#include <set>

#include "drshadow/sampling.hpp"

namespace drshadow {

namespace {

void require_domain(const DRSystem& sys, const Point& x) {
  if (!sys.in_domain(x)) {
    throw DynamicsError(ErrorCode::kNotInDomain, to_string(x) + " is not in the domain of " + sys.name());
  }
}

void require_constants(const DRSystem& sys) {
  if (!sys.has_separation_constants()) {
    throw DynamicsError(ErrorCode::kUnsupportedSystem, sys.name() + " has no separation constants");
  }
}

// A point of B(y, 2^-m) chosen by the policy; y itself when the ball is {y}.
Point perturb(const Point& y, std::uint64_t m, Perturbation policy, Rng& rng) {
  if (policy == Perturbation::kNone) return y;
  if (const auto* n = std::get_if<NatPoint>(&y)) {
    if (n->value <= m) return y;
    if (policy == Perturbation::kBoundaryFlip) return NatPoint{m + 1};
    return NatPoint{m + 1 + uniform(rng, 0, 12)};
  }
  const auto& c = std::get<CantorPoint>(y);
  switch (policy) {
    case Perturbation::kFlipBit:
      return c.flipped(uniform(rng, m + 1, m + 8));
    case Perturbation::kBoundaryFlip:
      return c.flipped(m + 1);
    case Perturbation::kResampleTail:
      return random_cantor(rng, c.head(m + 1));
    case Perturbation::kNone:
      break;
  }
  return y;
}

}  // namespace

PseudoOrbit PseudoOrbit::make(const DRSystem& sys, std::vector<Point> points, std::uint64_t delta_level) {
  if (points.empty()) throw DynamicsError(ErrorCode::kInvalidArgument, "pseudo-orbits are nonempty");
  if (delta_level == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "delta_level must be positive");
  for (const auto& p : points) require_domain(sys, p);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto level = point_distance(sys.space(), drshadow::apply(sys, points[i]), points[i + 1]);
    if (!level.exceeds(delta_level)) {
      throw DynamicsError(ErrorCode::kNotPseudoOrbit,
                          "step " + std::to_string(i) + " jumps by " + level.to_string() + ", not below 2^-" +
                              std::to_string(delta_level));
    }
  }
  return PseudoOrbit(std::move(points), delta_level);
}

Perturbation parse_perturbation(const std::string& name) {
  if (name == "none") return Perturbation::kNone;
  if (name == "flip") return Perturbation::kFlipBit;
  if (name == "resample") return Perturbation::kResampleTail;
  if (name == "boundary") return Perturbation::kBoundaryFlip;
  throw DynamicsError(ErrorCode::kParse, "unknown perturbation '" + name + "'");
}

std::string to_string(Perturbation p) {
  switch (p) {
    case Perturbation::kNone: return "none";
    case Perturbation::kFlipBit: return "flip";
    case Perturbation::kResampleTail: return "resample";
    case Perturbation::kBoundaryFlip: return "boundary";
  }
  return "";
}

PseudoOrbit make_pseudo_orbit(const DRSystem& sys, std::size_t length, std::uint64_t delta_level,
                              Perturbation policy, std::uint64_t seed) {
  if (length == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "length must be positive");
  if (delta_level == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "delta_level must be positive");
  Rng rng(seed);
  const auto& space = sys.space();
  for (;;) {
    std::vector<Point> points{random_point(space, rng)};
    if (!sys.in_domain(points.front())) continue;
    bool restart = false;
    while (points.size() < length && !restart) {
      const Point y = drshadow::apply(sys, points.back());
      if (!sys.in_domain(y)) {
        restart = true;
        break;
      }
      Point next = y;
      for (int attempt = 0; attempt < 16; ++attempt) {
        Point candidate = perturb(y, delta_level, policy, rng);
        if (sys.in_domain(candidate)) {
          next = std::move(candidate);
          break;
        }
      }
      points.push_back(std::move(next));
    }
    if (!restart) return PseudoOrbit::make(sys, std::move(points), delta_level);
  }
}

bool is_u_pseudo_orbit(const std::vector<Point>& seq, const PartitionSpec& spec, const DRSystem& sys) {
  for (const auto& p : seq) require_domain(sys, p);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!ball_atom(sys.space(), drshadow::apply(sys, seq[i]), spec.radius_level).contains(seq[i + 1])) return false;
  }
  return true;
}

bool u_shadow_check(const Point& z, const std::vector<Point>& seq, const PartitionSpec& spec, const DRSystem& sys) {
  require_domain(sys, z);
  Point current = z;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!ball_atom(sys.space(), seq[i], spec.radius_level).contains(current)) return false;
    if (i + 1 == seq.size()) break;
    if (!sys.in_domain(current)) {
      throw DynamicsError(ErrorCode::kOrbitLeavesDomain, "f^" + std::to_string(i) + "(z) = " + to_string(current) +
                                                             " is outside the domain");
    }
    current = drshadow::apply(sys, current);
  }
  return true;
}

Shadow shadow_point(const DRSystem& sys, const PseudoOrbit& po) {
  require_constants(sys);
  if (po.delta_level() < *sys.r_level()) {
    throw DynamicsError(ErrorCode::kRhoTooLarge, "delta exceeds the interior radius R");
  }
  const auto& x = po.points();
  const auto n = x.size();
  std::vector<Point> orbit(n);
  orbit[n - 1] = x[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    const Branch b = branch_of(sys, x[i]);
    if (!b.in_image(orbit[i + 1])) {
      throw DynamicsError(ErrorCode::kBallEscapesImage,
                          to_string(orbit[i + 1]) + " is outside the image of branch " + std::to_string(b.index));
    }
    orbit[i] = branch_inverse(sys, b, orbit[i + 1]);
  }
  Shadow s{orbit.front(), orbit, {}};
  s.levels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.levels.push_back(point_distance(sys.space(), orbit[i], x[i]));
  return s;
}

std::optional<std::uint64_t> rho_f_level(const BaseSpace& space, std::uint64_t l) {
  std::set<std::uint64_t> family;
  for (std::uint64_t j = 1; j <= l; ++j) {
    for (auto e : enumerate_tuples(j).entries) family.insert(e);
  }
  std::optional<std::uint64_t> best;
  for (auto e : family) {
    const auto sep = separation_from_complement(space, enumerate_basis(space, e));
    if (sep && (!best || sep->value() > *best)) best = sep->value();
  }
  return best;
}

std::uint64_t min_lift_delta_level(const DRSystem& sys, std::uint64_t l) {
  require_constants(sys);
  // ρ = 2δ has level m-1; need ρ <= R and ρ < ρ_l.
  std::uint64_t m = std::max<std::uint64_t>(1, *sys.r_level() + 1);
  if (const auto rho = rho_f_level(sys.space(), l)) m = std::max(m, *rho + 2);
  return m;
}

UpstairsPseudoOrbit lift_pseudo_orbit(const std::shared_ptr<const DRSystem>& sys, const PseudoOrbit& po,
                                      std::uint64_t l, std::uint64_t depth, std::optional<std::size_t> skip_at) {
  require_constants(*sys);
  if (l == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "l must be positive");
  if (po.delta_level() < min_lift_delta_level(*sys, l)) {
    throw DynamicsError(ErrorCode::kRhoTooLarge,
                        "delta_level " + std::to_string(po.delta_level()) + " is below the minimum " +
                            std::to_string(min_lift_delta_level(*sys, l)) + " for l = " + std::to_string(l));
  }
  if (depth < tuple_depth(l)) {
    throw DynamicsError(ErrorCode::kInvalidArgument,
                        "depth " + std::to_string(depth) + " is shorter than the tuples p_1..p_l");
  }
  const auto& x = po.points();
  UpstairsPseudoOrbit out;
  out.level_bound = l;
  out.depth = depth;
  out.points.push_back(ShiftPoint::path(
      std::make_shared<BackwardPath>(sys, x.front(), EventuallyPeriodic<std::uint64_t>::constant(0))));

  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const auto& y = out.points.back().backward_path();
    // Branch stream of α_f(y_i): r_{i,0} is the branch of x_i.
    const auto alpha_stream = y.stream().prepended({branch_of(*sys, x[i]).index});
    const std::uint64_t offset = skip_at && *skip_at == i ? 1 : 0;
    std::vector<std::uint64_t> pre;
    for (std::uint64_t t = 0; t + 1 < depth; ++t) pre.push_back(alpha_stream.at(t + offset));
    try {
      out.points.push_back(ShiftPoint::path(std::make_shared<BackwardPath>(
          sys, x[i + 1], EventuallyPeriodic<std::uint64_t>(std::move(pre), {0}))));
    } catch (const DynamicsError& e) {
      if (e.code() != ErrorCode::kNotInImage) throw;
      throw DynamicsError(ErrorCode::kBallEscapesImage, std::string("lift step ") + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

LiftCheck verify_lift(const W0Metric& metric, const UpstairsPseudoOrbit& upo, std::uint64_t scan_bound) {
  LiftCheck check;
  const auto l = upo.level_bound;
  const auto bound = scan_bound == 0 ? 4 * l : std::max(scan_bound, l);
  for (std::size_t i = 0; i + 1 < upo.points.size(); ++i) {
    const auto a = alpha_f(upo.points[i]);
    const auto& b = upo.points[i + 1];
    ++check.pairs_checked;
    for (std::uint64_t j = 1; j <= l && check.ok; ++j) {
      if (metric.alpha_bit(a.word(), j) != metric.alpha_bit(b.word(), j)) {
        check.ok = false;
        check.failed_step = i;
        check.failed_tuple = j;
      }
    }
    const auto d = xtilde_distance(metric, a, b, bound);
    if (d.level && !d.level->exceeds(l) && check.ok) {
      check.ok = false;
      check.failed_step = i;
    }
    check.distances.push_back(d);
  }
  return check;
}

std::vector<DefiningLevel> defining_sequence_report(const BaseSpace& space, std::uint64_t max_n,
                                                    std::uint64_t samples, std::mt19937_64& rng) {
  std::vector<DefiningLevel> out;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    DefiningLevel row;
    row.n = n;
    row.diameter = Level::infinite();
    row.separation = Level::finite(0);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Point x = random_point(space, rng);
      const auto atom = ball_atom(space, x, n);
      const auto diam = clopen_diameter(space, atom);
      row.diameter = min(row.diameter, diam);
      // A second point of the same atom never lies farther than the diameter.
      const Point inside = random_point_in(space, atom, rng);
      if (point_distance(space, x, inside) < diam || diam < Level::finite(n)) row.diameter_ok = false;

      // A point just across the atom boundary, and an unrelated point.
      Point across = random_point(space, rng);
      if (const auto* c = std::get_if<CantorPoint>(&x); c != nullptr && uniform(rng, 0, 1) == 0) {
        Point flipped = c->flipped(uniform(rng, space.root().size(), n));
        if (space.contains(flipped)) across = flipped;
      } else if (const auto* k = std::get_if<NatPoint>(&x); k != nullptr && uniform(rng, 0, 1) == 0) {
        const bool up = k->value == 0 || uniform(rng, 0, 1) == 1;
        across = NatPoint{up ? k->value + 1 : k->value - 1};
      }
      if (!atom.contains(across)) {
        const auto level = point_distance(space, x, across);
        row.separation = std::max(row.separation, level);
        if (level.exceeds(n)) row.separation_ok = false;
      }
      if (!ball_atom(space, x, n + 1).subset_of(atom)) row.refines = false;
    }
    out.push_back(row);
  }
  return out;
}

bool ProbeReport::all_shadowed() const {
  return std::all_of(trials.begin(), trials.end(), [](const ProbeTrial& t) { return t.shadowed; });
}

ProbeReport partition_shadowing_probe(const DRSystem& sys, std::uint64_t n, std::uint64_t m, std::uint64_t trials,
                                      std::uint64_t seed, Perturbation policy) {
  if (m < n) throw DynamicsError(ErrorCode::kInvalidArgument, "the probe needs m >= n");
  ProbeReport report{sys.name(), n, m, policy, {}};
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t length = uniform(rng, 3, 12);
    const auto po = make_pseudo_orbit(sys, length, m, policy, rng());
    ProbeTrial trial{t, length, false, ""};
    if (is_u_pseudo_orbit(po.points(), PartitionSpec{m}, sys)) {
      const auto shadow = shadow_point(sys, po);
      trial.shadowed = u_shadow_check(shadow.start, po.points(), PartitionSpec{n}, sys);
      trial.witness = to_string(shadow.start);
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace drshadow
