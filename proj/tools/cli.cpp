#include "cli.hpp"

#include <CLI11.hpp>
#include <optional>

#include "drshadow/base_space.hpp"
#include "drshadow/convergence.hpp"
#include "drshadow/cylinder.hpp"
#include "drshadow/enumeration.hpp"
#include "drshadow/errors.hpp"
#include "drshadow/inverse_limit.hpp"
#include "drshadow/shadowing.hpp"
#include "drshadow/systems.hpp"
#include "suites.hpp"

namespace drshadow::cli {
namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string space = "cantor";
  std::string sys = "vls";
  std::string x, y, set, cyl, word, policy = "flip", suite;
  std::uint64_t bound = 1000;
  std::optional<std::uint64_t> depth, delta_level, skip_at, alpha;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> samples;
  std::uint64_t index = 1, count = 1, steps = 5, len = 5, l = 4;
  bool tuples = false, corrupt = false;
};

class Emitter {
 public:
  explicit Emitter(std::ostream& out) : out_(out) {}
  void operator()(const Json& j) { out_ << j.dump() << '\n'; }

 private:
  std::ostream& out_;
};

std::optional<Point> try_point(const std::string& text) {
  try {
    return parse_point(text);
  } catch (const DynamicsError& e) {
    if (e.code() != ErrorCode::kParse) throw;
    return std::nullopt;
  }
}

void usage(const std::string& what) { throw DynamicsError(ErrorCode::kInvalidArgument, what); }

int cmd_dist(const Flags& f, Emitter& emit) {
  const auto space = BaseSpace::parse(f.space);
  Json j;
  j["command"] = "dist";
  j["space"] = space.to_string();
  const auto px = try_point(f.x), py = try_point(f.y);
  if (px && py) {
    j["x"] = to_string(*px);
    j["y"] = to_string(*py);
    j["distance"] = point_distance(space, *px, *py).to_string();
    emit(j);
    return 0;
  }
  const auto wx = parse_word(f.x), wy = parse_word(f.y);
  const W0Metric metric(space);
  j["x"] = wx.to_string();
  j["y"] = wy.to_string();
  j["bound"] = f.bound;
  j["distance"] = metric.distance(wx, wy, f.bound).to_string();
  if (f.alpha) {
    j["alpha_x"] = metric.alpha_bits(wx, *f.alpha);
    j["alpha_y"] = metric.alpha_bits(wy, *f.alpha);
  }
  emit(j);
  return 0;
}

int cmd_member(const Flags& f, Emitter& emit) {
  Json j;
  j["command"] = "member";
  if (!f.cyl.empty()) {
    const auto c = GeneralizedCylinder::parse(f.cyl);
    const auto w = parse_word(f.word);
    j["cylinder"] = c.to_string();
    j["word"] = w.to_string();
    j["member"] = cyl_member(c, w);
  } else {
    if (f.set.empty()) usage("member needs --set with --x, or --cyl with --word");
    const auto space = BaseSpace::parse(f.space);
    const auto s = ClopenSet::parse(f.set);
    const auto x = parse_point(f.x);
    j["space"] = space.to_string();
    j["set"] = s.to_string();
    j["x"] = to_string(x);
    j["member"] = clopen_member(space, s, x);
  }
  emit(j);
  return 0;
}

int cmd_basis(const Flags& f, Emitter& emit) {
  const auto space = BaseSpace::parse(f.space);
  for (std::uint64_t i = f.index; i < f.index + f.count; ++i) {
    Json j;
    j["command"] = "basis";
    if (f.tuples) {
      const auto t = enumerate_tuples(i);
      Json sets = Json::array();
      for (auto e : t.entries) sets.push_back(enumerate_basis(space, e).to_string());
      j["j"] = i;
      j["tuple"] = t.entries;
      j["sets"] = sets;
    } else {
      j["i"] = i;
      j["set"] = enumerate_basis(space, i).to_string();
    }
    emit(j);
  }
  return 0;
}

int cmd_orbit(const Flags& f, Emitter& emit) {
  if (f.sys == "otw-full") {
    // The full shift over ℕ acts on words by dropping the first letter.
    auto w = parse_word(f.x);
    for (std::uint64_t i = 0; i <= f.steps; ++i) {
      emit(Json{{"command", "orbit"}, {"system", "otw-full"}, {"step", i}, {"word", w.to_string()}});
      if (w.is_zero()) break;
      w = word_shift(w);
    }
    return 0;
  }
  const auto sys = system_by_name(f.sys);
  auto x = parse_point(f.x);
  if (!sys->space().contains(x)) usage(to_string(x) + " is not a point of " + sys->space().to_string());
  for (std::uint64_t i = 0; i <= f.steps; ++i) {
    Json j{{"command", "orbit"}, {"system", sys->name()}, {"step", i}, {"point", to_string(x)}};
    const bool inside = sys->in_domain(x);
    if (inside) {
      j["branch"] = branch_of(*sys, x).index;
    } else {
      j["in_domain"] = false;
    }
    emit(j);
    if (!inside || i == f.steps) break;
    x = apply(*sys, x);
  }
  return 0;
}

int cmd_pseudo(const Flags& f, Emitter& emit) {
  const auto sys = system_by_name(f.sys);
  const auto delta = f.delta_level.value_or(3);
  const auto policy = parse_perturbation(f.policy);
  const auto po = make_pseudo_orbit(*sys, f.len, delta, policy, f.seed);
  emit(Json{{"command", "pseudo"}, {"system", sys->name()}, {"length", po.size()}, {"delta_level", delta},
            {"policy", to_string(policy)}, {"seed", f.seed}});
  for (std::size_t i = 0; i < po.size(); ++i) {
    Json j{{"i", i}, {"point", to_string(po.points()[i])}};
    if (i > 0) j["jump"] = point_distance(sys->space(), apply(*sys, po.points()[i - 1]), po.points()[i]).to_string();
    emit(j);
  }
  return 0;
}

int cmd_shadow(const Flags& f, Emitter& emit) {
  const auto sys = system_by_name(f.sys);
  const auto delta = f.delta_level.value_or(3);
  const auto policy = parse_perturbation(f.policy);
  const auto po = make_pseudo_orbit(*sys, f.len, delta, policy, f.seed);
  const auto s = shadow_point(*sys, po);
  const auto theta = sys->theta_gain().value_or(0);
  emit(Json{{"command", "shadow"}, {"system", sys->name()}, {"length", po.size()}, {"delta_level", delta},
            {"theta", theta}, {"seed", f.seed}, {"start", to_string(s.start)}});
  bool ok = true;
  Level worst = Level::infinite();
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    emit(Json{{"i", i}, {"x", to_string(po.points()[i])}, {"z", to_string(s.orbit[i])},
              {"distance", s.levels[i].to_string()}});
    worst = min(worst, s.levels[i]);
    ok = ok && !(s.levels[i] < Level::finite(delta + theta));
  }
  emit(Json{{"verdict", ok ? "pass" : "fail"}, {"max_distance", worst.to_string()},
            {"required", Level::finite(delta + theta).to_string()}});
  return ok ? 0 : kFail;
}

int cmd_lift(const Flags& f, Emitter& emit) {
  const auto sys = system_by_name(f.sys);
  const auto delta = f.delta_level.value_or(min_lift_delta_level(*sys, f.l));
  const auto depth = f.depth.value_or(tuple_depth(f.l) + 1);
  const auto po = make_pseudo_orbit(*sys, f.len, delta, parse_perturbation(f.policy), f.seed);
  std::optional<std::size_t> skip;
  if (f.skip_at) skip = static_cast<std::size_t>(*f.skip_at);
  const auto upo = lift_pseudo_orbit(sys, po, f.l, depth, skip);
  const auto check = verify_lift(W0Metric(sys->space()), upo);
  emit(Json{{"command", "lift"}, {"system", sys->name()}, {"l", f.l}, {"delta_level", delta},
            {"depth", upo.depth}, {"seed", f.seed}});
  for (std::size_t i = 0; i < upo.points.size(); ++i) {
    Json j{{"i", i}, {"y", upo.points[i].to_string()}};
    if (i < check.distances.size()) j["next_distance"] = check.distances[i].to_string();
    emit(j);
  }
  bool ok = check.ok;
  for (const auto& d : check.distances) ok = ok && (!d.level || d.level->exceeds(f.l));
  Json v{{"verdict", ok ? "pass" : "fail"}, {"pairs", check.pairs_checked}};
  if (check.failed_step) v["failed_step"] = *check.failed_step;
  if (check.failed_tuple) v["failed_tuple"] = *check.failed_tuple;
  emit(v);
  return ok ? 0 : kFail;
}

Json certificate(const ConvergenceReport& rep) {
  Json w = Json::array();
  for (const auto& c : rep.witnesses) w.push_back(Json{{"clause", c.clause}, {"from", c.from}});
  Json j{{"certified", rep.certified}, {"depth", rep.depth}, {"horizon", rep.horizon}, {"witnesses", w}};
  if (!rep.certified) {
    j["failed_clause"] = rep.failed_clause;
    if (rep.counterexample) j["counterexample"] = *rep.counterexample;
  }
  return j;
}

int cmd_limits(const Flags& f, Emitter& emit) {
  const auto sys = system_by_name(f.sys);
  const LimitSet ls(sys);
  const auto depth = f.depth.value_or(6);
  emit(Json{{"command", "limits"}, {"system", sys->name()}, {"description", ls.description()}});
  std::vector<LimitWord> words;
  if (!f.word.empty()) {
    const auto w = parse_word(f.word);
    const bool member = ls.contains(w);
    emit(Json{{"word", w.to_string()}, {"member", member}});
    if (!member) return 0;
    words.push_back(ls.limit_word(w));
  } else {
    words = ls.landmarks();
  }
  bool ok = true;
  for (const auto& lw : words) {
    const auto rep = check_convergence(sys->space(), lw.witness, lw.word, depth);
    Json j{{"word", lw.word.to_string()}};
    j.update(certificate(rep));
    emit(j);
    ok = ok && rep.certified;
  }
  return ok ? 0 : kFail;
}

int cmd_verify(const Flags& f, Emitter& emit) {
  SuiteOptions o;
  o.suite = f.suite;
  o.space = f.space;
  o.sys = f.sys;
  o.seed = f.seed;
  o.bound = f.bound;
  o.corrupt = f.corrupt;
  if (f.samples) o.samples = *f.samples;
  if (f.depth) o.depth = *f.depth;
  const auto r = run_suite(o);
  emit(r.record);
  return r.pass ? 0 : kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact experiments on compactified word spaces and their shift systems", "drshadow"};
  app.require_subcommand(1);
  Flags f;

  const auto space = [&](CLI::App* c) { c->add_option("--space", f.space, "nat | cantor | cantor-minus:<point>"); };
  const auto system = [&](CLI::App* c) {
    c->add_option("--sys", f.sys, "vls | frm | halving | nat-identity | otw-full");
  };
  const auto seed = [&](CLI::App* c) { c->add_option("--seed", f.seed, "generator seed"); };
  const auto pseudo_flags = [&](CLI::App* c) {
    system(c);
    seed(c);
    c->add_option("--len", f.len, "pseudo-orbit length")->check(CLI::Range(1, 100000));
    c->add_option("--delta-level", f.delta_level, "jumps stay below 2^-k");
    c->add_option("--policy", f.policy, "none | flip | resample | boundary");
  };

  auto* dist = app.add_subcommand("dist", "distance of two points, or of two W0 words");
  space(dist);
  dist->add_option("--x", f.x)->required();
  dist->add_option("--y", f.y)->required();
  dist->add_option("--bound", f.bound, "search bound for word distances");
  dist->add_option("--alpha", f.alpha, "also print the first k alpha bits of both words");

  auto* member = app.add_subcommand("member", "clopen-set or generalized-cylinder membership");
  space(member);
  member->add_option("--set", f.set);
  member->add_option("--x", f.x);
  member->add_option("--cyl", f.cyl);
  member->add_option("--word", f.word);

  auto* basis = app.add_subcommand("basis", "enumerated basis sets, or basis tuples");
  space(basis);
  basis->add_option("--index", f.index)->check(CLI::PositiveNumber);
  basis->add_option("--count", f.count);
  basis->add_flag("--tuples", f.tuples);

  auto* orbit = app.add_subcommand("orbit", "forward orbit of a point");
  system(orbit);
  orbit->add_option("--x", f.x)->required();
  orbit->add_option("--steps", f.steps);

  auto* pseudo = app.add_subcommand("pseudo", "sample a pseudo-orbit");
  pseudo_flags(pseudo);

  auto* shadow = app.add_subcommand("shadow", "shadow a sampled pseudo-orbit");
  pseudo_flags(shadow);

  auto* lift = app.add_subcommand("lift", "lift a sampled pseudo-orbit to the inverse limit");
  pseudo_flags(lift);
  lift->add_option("--l", f.l, "partition index")->check(CLI::PositiveNumber);
  lift->add_option("--depth", f.depth, "backward coordinates fixed per point");
  lift->add_option("--skip-at", f.skip_at, "drop the branch choice at this step");

  auto* limits = app.add_subcommand("limits", "limit words of finite backward paths");
  system(limits);
  limits->add_option("--depth", f.depth);
  limits->add_option("--word", f.word, "check one word instead of the landmarks");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", f.suite)
      ->required()
      ->check(CLI::IsMember({"ultrametric", "balls", "branches", "inverse-limit", "lift", "shadow", "defseq"}));
  space(verify);
  system(verify);
  seed(verify);
  verify->add_option("--samples", f.samples);
  verify->add_option("--bound", f.bound);
  verify->add_option("--depth", f.depth);
  verify->add_flag("--corrupt", f.corrupt, "claim a wrong gain on branch 0");

  std::vector<const char*> argv{"drshadow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Emitter emit(out);
  try {
    if (dist->parsed()) return cmd_dist(f, emit);
    if (member->parsed()) return cmd_member(f, emit);
    if (basis->parsed()) return cmd_basis(f, emit);
    if (orbit->parsed()) return cmd_orbit(f, emit);
    if (pseudo->parsed()) return cmd_pseudo(f, emit);
    if (shadow->parsed()) return cmd_shadow(f, emit);
    if (lift->parsed()) return cmd_lift(f, emit);
    if (limits->parsed()) return cmd_limits(f, emit);
    if (verify->parsed()) return cmd_verify(f, emit);
  } catch (const DynamicsError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace drshadow::cli
