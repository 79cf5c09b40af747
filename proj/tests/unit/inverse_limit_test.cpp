#include <gtest/gtest.h>

#include "drshadow/errors.hpp"
#include "drshadow/inverse_limit.hpp"
#include "drshadow/sampling.hpp"

namespace drshadow {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DynamicsError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

std::shared_ptr<const BackwardPath> path(const std::shared_ptr<const DRSystem>& sys, Point seed,
                                         std::vector<std::uint64_t> pre, std::vector<std::uint64_t> cycle) {
  return std::make_shared<BackwardPath>(sys, std::move(seed), EventuallyPeriodic<std::uint64_t>(pre, cycle));
}

TEST(BackwardPath, CoordinatesFollowTheStream) {
  const auto vls = system_by_name("vls");
  const auto p = path(vls, cantor("(0)*"), {}, {0});
  EXPECT_EQ(p->coordinate(1), cantor("(0)*"));
  EXPECT_EQ(p->coordinate(2), cantor("00(0)*"));
  const auto q = path(vls, cantor("1(0)*"), {2}, {1});
  EXPECT_EQ(q->coordinate(2), cantor("1101(0)*"));
  EXPECT_EQ(q->coordinate(3), cantor("101101(0)*"));
  for (std::uint64_t t = 1; t < 60; ++t) EXPECT_EQ(apply(*vls, q->coordinate(t + 1)), q->coordinate(t));
  EXPECT_EQ(q->to_string(), "inf(1(0)*;2(1)*)");
}

TEST(BackwardPath, RejectsBadSeedsAndStreams) {
  const auto frm = system_by_name("frm");
  EXPECT_EQ(code_of([&] { path(frm, cantor("1(0)*"), {}, {0}); }), ErrorCode::kNotInDomain);
  const auto h = system_by_name("halving");
  // Branch 2 only accepts 1, so the cycle (2) cannot continue past 3.
  EXPECT_EQ(code_of([&] { path(h, nat(1), {}, {2}); }), ErrorCode::kNotInImage);
}

TEST(BackwardPath, PeriodicFormWhenItExists) {
  const auto h = system_by_name("halving");
  const auto ones = path(h, nat(1), {}, {1});
  ASSERT_TRUE(ones->periodic_form().has_value());
  EXPECT_EQ(*ones->periodic_form(), EventuallyPeriodic<Point>::constant(nat(1)));
  EXPECT_FALSE(path(h, nat(3), {}, {0})->periodic_form().has_value());
  EXPECT_EQ(W0Word::infinite(ones), W0Word::periodic({}, {nat(1)}));
}

TEST(ShiftPoint, ParseAndPrint) {
  const auto vls = system_by_name("vls");
  for (const char* t : {"zero", "fin[1(0)*]", "inf(1(0)*;2(1)*)", "inf((0)*;(0)*)"}) {
    EXPECT_EQ(ShiftPoint::parse(vls, t).to_string(), t);
  }
  EXPECT_EQ(code_of([&] { ShiftPoint::parse(vls, "fin[1(0)*; 1(0)*]"); }), ErrorCode::kNotInLimitSet);
  EXPECT_EQ(code_of([&] { ShiftPoint::parse(vls, "inf(1(0)*;2)"); }), ErrorCode::kParse);
}

TEST(PathCoordinate, Examples) {
  const auto vls = system_by_name("vls");
  const auto p = ShiftPoint::path(path(vls, cantor("(0)*"), {}, {0}));
  EXPECT_EQ(path_coordinate(p, 2), cantor("00(0)*"));
  EXPECT_EQ(path_coordinate(p, 1), cantor("(0)*"));
  const auto f = ShiftPoint::finite(vls, W0Word::finite({cantor("1(0)*")}));
  EXPECT_TRUE(is_infinity(path_coordinate(f, 2)));
}

TEST(Sigma, Examples) {
  const auto vls = system_by_name("vls");
  const auto w = cantor("1(0)*");
  EXPECT_TRUE(sigma(ShiftPoint::finite(vls, W0Word::finite({w}))).is_zero());
  const auto x2 = branch_inverse(*vls, vls->branch(0), w);
  const auto x3 = branch_inverse(*vls, vls->branch(3), x2);
  EXPECT_EQ(sigma(ShiftPoint::finite(vls, W0Word::finite({w, x2, x3}))).word(), W0Word::finite({x2, x3}));
  const auto inf = ShiftPoint::path(path(vls, w, {0}, {3}));
  EXPECT_EQ(sigma(inf).to_string(), "inf(01(0)*;(3)*)");
  EXPECT_EQ(code_of([&] { sigma(ShiftPoint::zero(vls)); }), ErrorCode::kZeroWordNotInDomain);
  EXPECT_EQ(code_of([&] { sigma_hat(ShiftPoint::finite(vls, W0Word::finite({w}))); }), ErrorCode::kLengthBelowTwo);
  EXPECT_EQ(sigma_hat(inf), sigma(inf));
}

TEST(AlphaF, Examples) {
  const auto vls = system_by_name("vls");
  const auto p = ShiftPoint::path(path(vls, cantor("01(0)*"), {}, {0}));
  const auto a = alpha_f(p);
  EXPECT_EQ(path_coordinate(a, 1), cantor("1(0)*"));
  EXPECT_EQ(a.backward_path().stream(), EventuallyPeriodic<std::uint64_t>::constant(0));
  const auto f = ShiftPoint::finite(vls, W0Word::finite({cantor("01(0)*")}));
  EXPECT_EQ(alpha_f(f).word(), W0Word::finite({cantor("1(0)*"), cantor("01(0)*")}));
  EXPECT_EQ(code_of([&] { alpha_f(ShiftPoint::zero(vls)); }), ErrorCode::kZeroWordNotInDomain);
  // f(01^∞) = 1^∞ is outside D.
  const auto edge = ShiftPoint::finite(vls, W0Word::finite({cantor("0(1)*")}));
  EXPECT_EQ(code_of([&] { alpha_f(edge); }), ErrorCode::kNotInDomain);
}

TEST(ShiftLaws, MutuallyInverseOnSamples) {
  for (const char* name : {"vls", "frm", "halving", "nat-identity"}) {
    const auto sys = system_by_name(name);
    Rng rng(31);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
      const auto p = random_shift_point(sys, rng);
      if (p.word().length_at_least(2)) {
        EXPECT_EQ(alpha_f(sigma_hat(p)), p) << p.to_string();
      }
      std::optional<ShiftPoint> a;
      try {
        a = alpha_f(p);
      } catch (const DynamicsError& e) {
        ASSERT_EQ(e.code(), ErrorCode::kNotInDomain);
        continue;
      }
      EXPECT_EQ(sigma_hat(*a), p) << p.to_string();
      ++checked;
    }
    EXPECT_GT(checked, 200) << name;
  }
}

TEST(ShiftLaws, BackwardPathLawToDepth32) {
  for (const char* name : {"vls", "frm", "halving", "nat-identity"}) {
    const auto sys = system_by_name(name);
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      const auto p = random_backward_path(sys, rng);
      for (std::uint64_t t = 1; t < 32; ++t) EXPECT_EQ(apply(*sys, p->coordinate(t + 1)), p->coordinate(t));
    }
  }
}

TEST(LimitSet, MembershipByClosedForm) {
  const auto vls = LimitSet(system_by_name("vls"));
  EXPECT_TRUE(vls.contains(W0Word::zero()));
  EXPECT_TRUE(vls.contains(W0Word::finite({cantor("1(0)*")})));
  EXPECT_TRUE(vls.contains(W0Word::finite({cantor("1(0)*"), cantor("01(0)*")})));
  EXPECT_FALSE(vls.contains(W0Word::finite({cantor("1(0)*"), cantor("1(0)*")})));
  const auto h = LimitSet(system_by_name("halving"));
  EXPECT_TRUE(h.contains(W0Word::finite({nat(1), nat(1)})));
  EXPECT_FALSE(h.contains(W0Word::finite({nat(2)})));
  EXPECT_FALSE(h.contains(W0Word::finite({nat(2), nat(4)})));
  const auto id = LimitSet(system_by_name("nat-identity"));
  EXPECT_TRUE(id.contains(W0Word::zero()));
  EXPECT_FALSE(id.contains(W0Word::finite({nat(3)})));
  EXPECT_EQ(code_of([&] { id.limit_word(W0Word::finite({nat(3)})); }), ErrorCode::kNotInLimitSet);
}

TEST(LimitSet, WitnessFamiliesConverge) {
  for (const char* name : {"vls", "frm", "halving", "nat-identity"}) {
    const auto sys = system_by_name(name);
    for (const auto& lw : LimitSet(sys).landmarks()) {
      const auto r = check_convergence(sys->space(), lw.witness, lw.word, 6);
      EXPECT_TRUE(r.certified) << name << " " << lw.word.to_string() << " " << r.failed_clause;
    }
  }
}

TEST(LimitSet, WitnessesOfRandomFiniteWords) {
  for (const char* name : {"vls", "frm"}) {
    const auto sys = system_by_name(name);
    const LimitSet ls(sys);
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
      auto p = random_shift_point(sys, rng);
      if (!p.word().is_finite()) continue;
      const auto lw = ls.limit_word(p.word());
      EXPECT_TRUE(check_convergence(sys->space(), lw.witness, lw.word, 6).certified) << p.to_string();
    }
  }
}

TEST(LimitSet, UnsupportedSystem) {
  const auto sys = std::make_shared<const DRSystem>(
      "custom", BaseSpace::nat(), [](std::uint64_t) { return Branch{}; },
      [](const Point&) -> std::optional<std::uint64_t> { return 0; }, 1, std::nullopt, std::nullopt);
  EXPECT_EQ(code_of([&] { LimitSet ls(sys); }), ErrorCode::kUnsupportedSystem);
}

TEST(XtildeDistance, EqualAndSeparated) {
  const auto vls = system_by_name("vls");
  const W0Metric m(vls->space());
  const auto p = ShiftPoint::path(path(vls, cantor("(0)*"), {}, {0}));
  EXPECT_TRUE(xtilde_distance(m, p, p, 100).level->is_infinite());
  const auto q = ShiftPoint::path(path(vls, cantor("1(0)*"), {}, {0}));
  const auto d = xtilde_distance(m, p, q, 100);
  ASSERT_TRUE(d.resolved());
  // Z(0) is basis element 1 and p_1 = (1): the first α bit already differs.
  EXPECT_EQ(*d.level, Level::finite(1));
}

}  // namespace
}  // namespace drshadow
