#include <gtest/gtest.h>

#include "drshadow/base_space.hpp"
#include "drshadow/clopen_set.hpp"
#include "drshadow/cylinder.hpp"
#include "drshadow/errors.hpp"
#include "drshadow/sampling.hpp"
#include "drshadow/words.hpp"

namespace drshadow {
namespace {

TEST(CylinderUnion, Canonicalization) {
  EXPECT_EQ(CylinderUnion({"0", "01"}), CylinderUnion({"0"}));
  EXPECT_EQ(CylinderUnion({"10", "11"}), CylinderUnion({"1"}));
  EXPECT_EQ(CylinderUnion({"00", "01", "1"}), CylinderUnion({""}));
  EXPECT_EQ(CylinderUnion({"1", "0"}).words(), std::vector<std::string>{""});
  EXPECT_THROW(CylinderUnion({"012"}), DynamicsError);
}

TEST(NatSet, TailAbsorbsLargeElements) {
  EXPECT_EQ(NatSet({2, 5, 9}, 5), NatSet({2}, 5));
  EXPECT_EQ(NatSet({3, 4}, 5), NatSet({}, 3));
  EXPECT_EQ(NatSet({5, 2, 2}), NatSet({2, 5}));
  EXPECT_TRUE(NatSet({}, 3).contains(infinity()));
  EXPECT_FALSE(NatSet({3}).contains(infinity()));
}

TEST(ClopenSet, ParseAndPrintRoundTrip) {
  for (const char* text : {"Z(01)+Z(1)", "{2,5}", "{2,5,9..}", "empty", "Z(0)", "{0}"}) {
    const auto s = ClopenSet::parse(text);
    EXPECT_EQ(ClopenSet::parse(s.to_string()), s) << text;
  }
  EXPECT_EQ(ClopenSet::parse("Z(00)+Z(01)").to_string(), "Z(0)");
  EXPECT_THROW(ClopenSet::parse("Z(0"), DynamicsError);
  EXPECT_THROW(ClopenSet::parse("{a}"), DynamicsError);
}

TEST(ClopenSet, EmptyEqualityAcrossRepresentations) {
  EXPECT_EQ(ClopenSet::empty_set(), ClopenSet::nats({}));
  EXPECT_TRUE(ClopenSet::parse("empty").is_empty());
}

TEST(ClopenSet, IntersectionLaws) {
  Rng rng(9);
  const auto random_union = [&] {
    std::vector<std::string> words;
    const auto k = uniform(rng, 0, 3);
    for (std::uint64_t i = 0; i < k; ++i) {
      std::string w;
      const auto len = uniform(rng, 1, 4);
      for (std::uint64_t j = 0; j < len; ++j) w += uniform(rng, 0, 1) ? '1' : '0';
      words.push_back(w);
    }
    return ClopenSet(CylinderUnion(words));
  };
  const auto random_nats = [&] {
    std::vector<std::uint64_t> e;
    const auto k = uniform(rng, 0, 4);
    for (std::uint64_t i = 0; i < k; ++i) e.push_back(uniform(rng, 0, 10));
    std::optional<std::uint64_t> tail;
    if (uniform(rng, 0, 2) == 0) tail = uniform(rng, 0, 12);
    return ClopenSet::nats(e, tail);
  };
  for (int i = 0; i < 400; ++i) {
    const bool cyl = i % 2 == 0;
    const auto a = cyl ? random_union() : random_nats();
    const auto b = cyl ? random_union() : random_nats();
    const auto c = cyl ? random_union() : random_nats();
    EXPECT_EQ(a.intersect(b), b.intersect(a));
    EXPECT_EQ(a.intersect(b).intersect(c), a.intersect(b.intersect(c)));
    EXPECT_EQ(a.intersect(a), a);
    EXPECT_TRUE(a.intersect(b).subset_of(a));
    // Pointwise agreement with membership.
    const auto space = cyl ? BaseSpace::cantor() : BaseSpace::nat();
    for (int t = 0; t < 20; ++t) {
      const auto p = random_point(space, rng);
      EXPECT_EQ(a.intersect(b).contains(p), a.contains(p) && b.contains(p));
    }
  }
}

TEST(GeneralizedCylinder, ParseAndMembership) {
  const auto z = GeneralizedCylinder::parse("Z[{1} x {2,3} | {0}]");
  EXPECT_EQ(z.prefix().size(), 2u);
  EXPECT_TRUE(cyl_member(z, W0Word::finite({nat(1), nat(2)})));
  EXPECT_TRUE(cyl_member(z, W0Word::finite({nat(1), nat(3), nat(4)})));
  EXPECT_FALSE(cyl_member(z, W0Word::finite({nat(1), nat(3), nat(0)})));
  EXPECT_FALSE(cyl_member(z, W0Word::finite({nat(1)})));
  EXPECT_FALSE(cyl_member(z, W0Word::zero()));
  EXPECT_TRUE(cyl_member(z, W0Word::periodic({nat(1), nat(2)}, {nat(5)})));

  const auto c = GeneralizedCylinder::parse("C[{0,1}]");
  EXPECT_TRUE(cyl_member(c, W0Word::zero()));
  EXPECT_TRUE(cyl_member(c, W0Word::finite({nat(2)})));
  EXPECT_FALSE(cyl_member(c, W0Word::finite({nat(1), nat(9)})));

  EXPECT_EQ(GeneralizedCylinder::parse(z.to_string()).to_string(), z.to_string());
  EXPECT_THROW(GeneralizedCylinder::parse("Z[{1} | {3..}]"), DynamicsError);
}

TEST(GeneralizedCylinder, CantorFactors) {
  const auto z = GeneralizedCylinder::parse("Z[Z(0) | empty]");
  EXPECT_TRUE(cyl_member(z, W0Word::finite({cantor("0(1)*")})));
  EXPECT_FALSE(cyl_member(z, W0Word::finite({cantor("1(0)*")})));
  const auto c = GeneralizedCylinder::c(ClopenSet::cylinder("1"));
  EXPECT_TRUE(cyl_member(c, W0Word::finite({cantor("0(1)*")})));
  EXPECT_FALSE(cyl_member(c, W0Word::finite({cantor("1(1)*")})));
}

}  // namespace
}  // namespace drshadow
