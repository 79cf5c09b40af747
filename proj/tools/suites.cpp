#include "suites.hpp"

#include <optional>
#include <vector>

#include "drshadow/base_space.hpp"
#include "drshadow/enumeration.hpp"
#include "drshadow/errors.hpp"
#include "drshadow/inverse_limit.hpp"
#include "drshadow/sampling.hpp"
#include "drshadow/shadowing.hpp"
#include "drshadow/systems.hpp"

namespace drshadow::cli {
namespace {

// A failure witness is kept for the first violation only; later ones are counted.
struct Tally {
  std::uint64_t failures = 0;
  Json witness;

  void fail(Json w) {
    if (failures++ == 0) witness = std::move(w);
  }
  void finish(SuiteResult& r) {
    r.record["failures"] = failures;
    if (failures > 0) r.record["witness"] = witness;
    r.pass = failures == 0;
    r.record["verdict"] = r.pass ? "pass" : "fail";
  }
};

Json header(const SuiteOptions& o) {
  Json j;
  j["command"] = "verify";
  j["suite"] = o.suite;
  return j;
}

// Letters for sampled W0 words come from a small pool so that equal letters
// and shared prefixes are common.
Point small_letter(const BaseSpace& space, Rng& rng) {
  if (space.is_nat()) return nat(uniform(rng, 0, 2));
  for (;;) {
    Point p = random_cantor(rng, space.root(), 2, 1);
    if (space.contains(p)) return p;
  }
}

W0Word small_word(const BaseSpace& space, Rng& rng) {
  const auto kind = uniform(rng, 0, 4);
  if (kind == 0) return W0Word::zero();
  std::vector<Point> letters;
  const auto len = uniform(rng, 1, 3);
  for (std::uint64_t k = 0; k < len; ++k) letters.push_back(small_letter(space, rng));
  if (kind == 4) return W0Word::periodic(letters, {small_letter(space, rng)});
  return W0Word::finite(letters);
}

SuiteResult ultrametric(const SuiteOptions& o) {
  const auto space = BaseSpace::parse(o.space);
  Rng rng(o.seed);
  SuiteResult r{true, header(o)};
  r.record["space"] = space.to_string();
  Tally t;
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const auto x = random_compactified_point(space, rng);
    const auto y = random_compactified_point(space, rng);
    const auto z = random_compactified_point(space, rng);
    const auto dxy = point_distance(space, x, y), dyz = point_distance(space, y, z), dxz = point_distance(space, x, z);
    const auto w = [&](const char* check) {
      return Json{{"check", check}, {"x", to_string(x)}, {"y", to_string(y)}, {"z", to_string(z)}};
    };
    if (dxz < min(dxy, dyz)) t.fail(w("ultrametric"));
    if (dxy != point_distance(space, y, x)) t.fail(w("symmetry"));
    if (dxy.is_infinite() != (x == y)) t.fail(w("identity"));
  }
  r.record["point_triples"] = o.samples;

  const W0Metric metric(space);
  std::uint64_t resolved = 0;
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const auto x = small_word(space, rng), y = small_word(space, rng), z = small_word(space, rng);
    const auto dxy = metric.distance(x, y, o.bound);
    const auto dyz = metric.distance(y, z, o.bound);
    const auto dxz = metric.distance(x, z, o.bound);
    const auto w = [&](const char* check) {
      return Json{{"check", check}, {"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}};
    };
    if (dxy.level != metric.distance(y, x, o.bound).level) t.fail(w("word-symmetry"));
    if (x == y && !(dxy.level && dxy.level->is_infinite())) t.fail(w("word-identity"));
    if (!dxy.resolved() || !dyz.resolved() || !dxz.resolved()) continue;
    ++resolved;
    if (*dxz.level < min(*dxy.level, *dyz.level)) t.fail(w("word-ultrametric"));
    if (dxy.level->is_infinite() != (x == y)) t.fail(w("word-identity"));
  }
  r.record["word_triples"] = o.samples;
  r.record["word_triples_resolved"] = resolved;
  r.record["bound"] = o.bound;
  t.finish(r);
  return r;
}

SuiteResult balls(const SuiteOptions& o) {
  const auto space = BaseSpace::parse(o.space);
  Rng rng(o.seed);
  SuiteResult r{true, header(o)};
  r.record["space"] = space.to_string();
  Tally t;
  std::uint64_t equal = 0;
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const auto n = uniform(rng, 0, 8);
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto a = ball_atom(space, x, n);
    const auto b = ball_atom(space, y, n);
    const auto w = [&](const char* check) {
      return Json{{"check", check}, {"n", n}, {"x", to_string(x)}, {"y", to_string(y)}};
    };
    const bool same = a == b;
    equal += same;
    if (!same && !clopen_intersect(space, a, b).is_empty()) t.fail(w("dichotomy"));
    if (!clopen_member(space, a, x)) t.fail(w("center"));
    if (same != point_distance(space, x, y).exceeds(n)) t.fail(w("radius"));
    if (clopen_diameter(space, a) < Level::finite(n)) t.fail(w("diameter"));
  }
  r.record["pairs"] = o.samples;
  r.record["equal_pairs"] = equal;
  t.finish(r);
  return r;
}

SuiteResult branches(const SuiteOptions& o) {
  auto sys = *system_by_name(o.sys);
  if (o.corrupt) sys = sys.with_claimed_gain(0, sys.branch(0).contraction_gain + 1);
  Rng rng(o.seed);
  const auto rep = verify_separation(sys, o.samples, rng);
  SuiteResult r{rep.pass, header(o)};
  r.record["system"] = rep.system;
  r.record["corrupted"] = o.corrupt;
  r.record["branches"] = rep.branches_checked;
  r.record["pairs"] = rep.pairs_checked;
  r.record["failures"] = rep.failures.size();
  if (!rep.failures.empty()) {
    const auto& f = rep.failures.front();
    r.record["witness"] = Json{{"branch", f.branch}, {"check", f.check}, {"a", f.a}, {"b", f.b}, {"detail", f.detail}};
  }
  r.record["verdict"] = rep.pass ? "pass" : "fail";
  return r;
}

SuiteResult inverse_limit(const SuiteOptions& o) {
  const auto sys = system_by_name(o.sys);
  Rng rng(o.seed);
  SuiteResult r{true, header(o)};
  r.record["system"] = sys->name();
  Tally t;
  std::uint64_t left = 0, right = 0, undefined = 0;
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const auto p = random_shift_point(sys, rng);
    if (p.word().length_at_least(2)) {
      ++left;
      if (!(alpha_f(sigma_hat(p)) == p)) t.fail(Json{{"check", "alpha-after-sigma"}, {"p", p.to_string()}});
    }
    std::optional<ShiftPoint> a;
    try {
      a = alpha_f(p);
    } catch (const DynamicsError& e) {
      if (e.code() != ErrorCode::kNotInDomain) throw;
      ++undefined;
      continue;
    }
    ++right;
    if (!(sigma_hat(*a) == p)) t.fail(Json{{"check", "sigma-after-alpha"}, {"p", p.to_string()}});
  }
  const std::uint64_t depth = std::max<std::uint64_t>(o.depth, BackwardPath::kDefaultValidationDepth);
  const std::uint64_t paths = std::max<std::uint64_t>(1, o.samples / 10);
  for (std::uint64_t i = 0; i < paths; ++i) {
    const auto p = random_backward_path(sys, rng);
    for (std::uint64_t k = 1; k < depth; ++k) {
      if (!(apply(*sys, p->coordinate(k + 1)) == p->coordinate(k))) {
        t.fail(Json{{"check", "backward-path"}, {"path", p->to_string()}, {"t", k}});
        break;
      }
    }
  }
  r.record["alpha_after_sigma"] = left;
  r.record["sigma_after_alpha"] = right;
  r.record["alpha_undefined"] = undefined;
  r.record["paths"] = paths;
  r.record["path_depth"] = depth;
  t.finish(r);
  return r;
}

SuiteResult lift(const SuiteOptions& o) {
  const auto sys = system_by_name(o.sys);
  const W0Metric metric(sys->space());
  Rng rng(o.seed);
  SuiteResult r{true, header(o)};
  r.record["system"] = sys->name();
  Tally t;
  std::uint64_t pairs = 0, detected = 0, controls = 0;
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const auto l = uniform(rng, 1, 8);
    const auto m = min_lift_delta_level(*sys, l) + uniform(rng, 0, 2);
    const auto len = uniform(rng, 3, 12);
    const auto po = make_pseudo_orbit(*sys, len, m, Perturbation::kFlipBit, rng());
    const auto depth = tuple_depth(l) + 1;
    const auto check = verify_lift(metric, lift_pseudo_orbit(sys, po, l, depth));
    pairs += check.pairs_checked;
    bool ok = check.ok;
    for (const auto& d : check.distances) ok = ok && (!d.level || d.level->exceeds(l));
    if (!ok) t.fail(Json{{"l", l}, {"delta_level", m}, {"len", len}, {"step", check.failed_step.value_or(0)}});
    // Negative control: dropping one branch choice must be caught.
    if (i % 4 == 0) {
      ++controls;
      detected += !verify_lift(metric, lift_pseudo_orbit(sys, po, l, depth, 1)).ok;
    }
  }
  if (controls > 0 && detected == 0) t.fail(Json{{"check", "skip-control-undetected"}});
  r.record["lifts"] = o.samples;
  r.record["pairs"] = pairs;
  r.record["skip_controls"] = controls;
  r.record["skip_detected"] = detected;
  t.finish(r);
  return r;
}

SuiteResult shadow(const SuiteOptions& o) {
  const auto sys = system_by_name(o.sys);
  Rng rng(o.seed);
  SuiteResult r{true, header(o)};
  r.record["system"] = sys->name();
  Tally t;
  const auto theta = sys->theta_gain().value_or(0);
  std::uint64_t steps = 0;
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const auto len = uniform(rng, 3, 12);
    const auto delta = uniform(rng, 1, 6);
    const auto po = make_pseudo_orbit(*sys, len, delta, Perturbation::kFlipBit, rng());
    const auto s = shadow_point(*sys, po);
    for (std::size_t k = 0; k < s.levels.size(); ++k) {
      ++steps;
      if (s.levels[k] < Level::finite(delta + theta)) {
        t.fail(Json{{"check", "level"}, {"start", to_string(s.start)}, {"step", k}, {"delta_level", delta}});
      }
      if (k + 1 < s.orbit.size() && !(apply(*sys, s.orbit[k]) == s.orbit[k + 1])) {
        t.fail(Json{{"check", "orbit"}, {"start", to_string(s.start)}, {"step", k}});
      }
    }
  }
  r.record["pseudo_orbits"] = o.samples;
  r.record["steps"] = steps;
  t.finish(r);
  return r;
}

SuiteResult defseq(const SuiteOptions& o) {
  const auto space = BaseSpace::parse(o.space);
  Rng rng(o.seed);
  SuiteResult r{true, header(o)};
  r.record["space"] = space.to_string();
  Tally t;
  Json levels = Json::array();
  for (const auto& row : defining_sequence_report(space, o.depth, o.samples, rng)) {
    levels.push_back(Json{{"n", row.n}, {"diameter", row.diameter.to_string()},
                          {"separation", row.separation.to_string()}, {"refines", row.refines}});
    if (!row.diameter_ok || !row.separation_ok || !row.refines || row.separation != Level::finite(row.n)) {
      t.fail(Json{{"n", row.n}});
    }
  }
  r.record["levels"] = levels;
  t.finish(r);
  return r;
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& opts) {
  if (opts.suite == "ultrametric") return ultrametric(opts);
  if (opts.suite == "balls") return balls(opts);
  if (opts.suite == "branches") return branches(opts);
  if (opts.suite == "inverse-limit") return inverse_limit(opts);
  if (opts.suite == "lift") return lift(opts);
  if (opts.suite == "shadow") return shadow(opts);
  if (opts.suite == "defseq") return defseq(opts);
  throw DynamicsError(ErrorCode::kInvalidArgument, "unknown suite '" + opts.suite + "'");
}

}  // namespace drshadow::cli
