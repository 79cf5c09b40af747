#include <gtest/gtest.h>

#include "drshadow/errors.hpp"
#include "drshadow/sampling.hpp"
#include "drshadow/systems.hpp"
#include "oracles.hpp"

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

TEST(Apply, Examples) {
  const auto vls = variable_length_shift();
  const auto frm = first_return_map();
  const auto halving = halving_map();
  EXPECT_EQ(apply(vls, cantor("110(0)*")), cantor("(0)*"));
  EXPECT_EQ(apply(frm, cantor("01110(01)*")), cantor("0(01)*"));
  EXPECT_EQ(apply(halving, nat(7)), nat(1));
  EXPECT_EQ(apply(halving, nat(6)), nat(3));
  EXPECT_EQ(apply(nat_identity(), nat(6)), nat(6));
  EXPECT_EQ(code_of([&] { apply(vls, cantor("(1)*")); }), ErrorCode::kNotInDomain);
  EXPECT_EQ(code_of([&] { apply(frm, cantor("1(0)*")); }), ErrorCode::kNotInDomain);
  EXPECT_EQ(code_of([&] { apply(frm, cantor("0(1)*")); }), ErrorCode::kNotInDomain);
}

TEST(ReturnTime, Examples) {
  EXPECT_EQ(return_time(CantorPoint::parse("00(0)*")), 1u);
  EXPECT_EQ(return_time(CantorPoint::parse("01110(0)*")), 4u);
  EXPECT_EQ(code_of([] { return_time(CantorPoint::parse("0(1)*")); }), ErrorCode::kInfiniteReturnTime);
  EXPECT_EQ(code_of([] { return_time(CantorPoint::parse("1(0)*")); }), ErrorCode::kNotInDomain);
}

TEST(ReturnTime, MatchesCylinderOfBranch) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_cantor(rng, "0");
    if (x == CantorPoint("0", "1")) continue;
    const auto tau = return_time(x);
    for (std::uint64_t k = 0; k <= 12; ++k) {
      EXPECT_EQ(tau == k + 1, x.starts_with("0" + std::string(k, '1') + "0")) << x.to_string();
    }
    // Direct scan for the least n >= 1 with x_n = 0.
    const auto bits = oracle::expand(x, 100);
    EXPECT_EQ(tau, bits.find('0', 1));
  }
}

TEST(BranchOf, Examples) {
  EXPECT_EQ(branch_of(variable_length_shift(), cantor("10(0)*")).index, 1u);
  EXPECT_EQ(branch_of(first_return_map(), cantor("00(1)*")).index, 0u);
  EXPECT_EQ(branch_of(halving_map(), nat(9)).index, 5u);
  EXPECT_EQ(branch_of(halving_map(), nat(0)).index, 0u);
  EXPECT_EQ(branch_of(variable_length_shift(), cantor("1110(1)*")).label, "Z(1^3 0)");
}

TEST(BranchInverse, Examples) {
  const auto vls = variable_length_shift();
  const auto frm = first_return_map();
  EXPECT_EQ(branch_inverse(vls, vls.branch(2), cantor("0(1)*")), cantor("1100(1)*"));
  EXPECT_EQ(branch_inverse(frm, frm.branch(1), cantor("0(0)*")), cantor("010(0)*"));
  EXPECT_EQ(code_of([&] { branch_inverse(frm, frm.branch(1), cantor("1(0)*")); }), ErrorCode::kNotInImage);
  const auto h = halving_map();
  EXPECT_EQ(branch_inverse(h, h.branch(3), nat(1)), nat(5));
  EXPECT_EQ(code_of([&] { branch_inverse(h, h.branch(3), nat(2)); }), ErrorCode::kNotInImage);
  // ∞ is read as the excluded point.
  EXPECT_EQ(branch_inverse(vls, vls.branch(0), infinity()), cantor("0(1)*"));
}

TEST(Atlas, BranchesCoverAndAreDisjoint) {
  Rng rng(8);
  for (const auto& sys : {variable_length_shift(), first_return_map(), halving_map(), nat_identity()}) {
    for (int i = 0; i < 400; ++i) {
      const auto x = random_point(sys.space(), rng);
      const auto r = sys.branch_index_of(x);
      ASSERT_TRUE(r.has_value()) << sys.name() << " " << to_string(x);
      int owners = 0;
      for (std::uint64_t b = 0; b <= 40; ++b) owners += sys.branch(b).in_domain(x);
      EXPECT_EQ(owners, *r <= 40 ? 1 : 0);
      EXPECT_TRUE(sys.branch(*r).in_domain(x));
      EXPECT_EQ(branch_inverse(sys, sys.branch(*r), apply(sys, x)), x);
    }
  }
}

TEST(Atlas, BranchZeroWitnessesSurjectivity) {
  Rng rng(12);
  for (const auto& sys : {variable_length_shift(), first_return_map(), halving_map()}) {
    for (int i = 0; i < 300; ++i) {
      const auto y = random_point(sys.space(), rng);
      const auto x = branch_inverse(sys, sys.branch(0), y);
      EXPECT_TRUE(sys.in_domain(x));
      EXPECT_EQ(apply(sys, x), y);
    }
  }
}

TEST(Branch, ExactGainOnCantorExamples) {
  Rng rng(2);
  for (const auto& sys : {variable_length_shift(), first_return_map()}) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const auto b = sys.branch(n);
      EXPECT_EQ(b.exact_gain, n + 1);
      for (int i = 0; i < 100; ++i) {
        const auto a = random_point(sys.space(), rng);
        const auto c = random_point(sys.space(), rng);
        if (!b.in_image(a) || !b.in_image(c)) continue;
        const auto before = point_distance(sys.space(), a, c);
        EXPECT_EQ(point_distance(sys.space(), b.inverse(a), b.inverse(c)), before.plus(n + 1));
      }
    }
  }
}

TEST(VerifySeparation, CantorExamplesPass) {
  for (const auto& sys : {variable_length_shift(), first_return_map()}) {
    Rng rng(1);
    const auto rep = verify_separation(sys, 200, rng);
    EXPECT_TRUE(rep.pass) << sys.name() << " " << (rep.failures.empty() ? "" : rep.failures[0].detail);
    EXPECT_EQ(rep.branches_checked, 9u);
    EXPECT_EQ(rep.pairs_checked, 1800u);
    EXPECT_EQ(sys.theta_gain(), 1u);
    EXPECT_EQ(sys.r_level(), 0u);
  }
}

TEST(VerifySeparation, CorruptedGainFailsWithWitness) {
  Rng rng(1);
  const auto bad = variable_length_shift().with_claimed_gain(0, 2);
  const auto rep = verify_separation(bad, 200, rng);
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.failures.empty());
  EXPECT_EQ(rep.failures[0].branch, 0u);
  EXPECT_EQ(rep.failures[0].check, "gain");
}

TEST(SystemByName, KnownAndUnknown) {
  EXPECT_EQ(system_by_name("vls")->name(), "vls");
  EXPECT_EQ(system_by_name("frm")->space().root(), "0");
  EXPECT_FALSE(system_by_name("halving")->has_separation_constants());
  EXPECT_EQ(code_of([] { system_by_name("tent"); }), ErrorCode::kUnsupportedSystem);
}

}  // namespace
}  // namespace drshadow
