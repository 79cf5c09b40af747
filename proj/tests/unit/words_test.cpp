#include <gtest/gtest.h>

#include "drshadow/cylinder.hpp"
#include "drshadow/errors.hpp"
#include "drshadow/words.hpp"

namespace drshadow {
namespace {

const BaseSpace kNat = BaseSpace::nat();
const BaseSpace kVls = BaseSpace::cantor_minus(CantorPoint::constant('1'));

TEST(W0Word, LengthsAndCoordinates) {
  EXPECT_EQ(W0Word::zero().length(), 0u);
  const auto f = W0Word::finite({nat(1), nat(2)});
  EXPECT_EQ(f.length(), 2u);
  EXPECT_TRUE(is_infinity(f.coordinate(3)));
  EXPECT_EQ(f.coordinate(2), nat(2));
  const auto w = W0Word::periodic({nat(1)}, {nat(4), nat(5)});
  EXPECT_FALSE(w.length().has_value());
  EXPECT_TRUE(w.length_at_least(1000));
  EXPECT_EQ(w.coordinate(3), nat(5));
  EXPECT_EQ(w.coordinate(4), nat(4));
  EXPECT_TRUE(W0Word::finite({}).is_zero());
  EXPECT_THROW(W0Word::finite({nat(1), infinity()}), DynamicsError);
}

TEST(W0Word, ParseAndPrint) {
  EXPECT_TRUE(parse_word("Zero").is_zero());
  EXPECT_EQ(parse_word("[Nat:1; Nat:2]"), W0Word::finite({nat(1), nat(2)}));
  EXPECT_EQ(parse_word("[Nat:1 | Nat:2]"), W0Word::periodic({nat(1)}, {nat(2)}));
  EXPECT_EQ(parse_word("[| 1(0)*]"), W0Word::periodic({}, {cantor("1(0)*")}));
  for (const char* t : {"Zero", "[Nat:1; Nat:2]", "[Nat:1 | Nat:2; Nat:3]", "[0(1)*; 1(0)*]"}) {
    EXPECT_EQ(parse_word(parse_word(t).to_string()), parse_word(t)) << t;
  }
  EXPECT_THROW(parse_word("[Nat:1; inf]"), DynamicsError);
  EXPECT_THROW(parse_word("[Nat:1"), DynamicsError);
}

TEST(W0Word, PeriodicEqualityUsesNormalForm) {
  EXPECT_EQ(parse_word("[Nat:1 | Nat:1]"), parse_word("[| Nat:1]"));
  EXPECT_EQ(parse_word("[Nat:2 | Nat:3; Nat:2]"), parse_word("[| Nat:2; Nat:3]"));
  EXPECT_NE(parse_word("[Nat:1]"), parse_word("[| Nat:1]"));
  EXPECT_NE(parse_word("Zero"), parse_word("[Nat:0]"));
}

TEST(QNormalize, ThreeCases) {
  EXPECT_EQ(q_normalize(kNat, parse_sequence("[Nat:4; inf; Nat:2 | Nat:3]")), W0Word::finite({nat(4)}));
  EXPECT_TRUE(q_normalize(kNat, parse_sequence("[inf; Nat:4 | Nat:1]")).is_zero());
  EXPECT_EQ(q_normalize(kNat, parse_sequence("[Nat:4 | Nat:1; Nat:2]")),
            W0Word::periodic({nat(4)}, {nat(1), nat(2)}));
  EXPECT_EQ(q_normalize(kNat, parse_sequence("[Nat:4; Nat:5 | inf]")), W0Word::finite({nat(4), nat(5)}));
}

TEST(QNormalize, ExcludedPointActsAsInfinity) {
  EXPECT_EQ(q_normalize(kVls, parse_sequence("[0(0)*; (1)* | 1(0)*]")), W0Word::finite({cantor("0(0)*")}));
  EXPECT_THROW(q_normalize(kNat, parse_sequence("[0(0)* | inf]")), DynamicsError);
  // ∞ is isolated next to the full Cantor space.
  EXPECT_TRUE(q_normalize(BaseSpace::cantor(), parse_sequence("[inf | 0(0)*]")).is_zero());
}

TEST(QNormalize, IsARetractionOntoWords) {
  const std::vector<W0Word> words = {W0Word::zero(), W0Word::finite({nat(3)}),
                                     W0Word::finite({nat(0), nat(7), nat(2)}),
                                     W0Word::periodic({nat(1)}, {nat(2), nat(3)})};
  for (const auto& w : words) {
    // Coordinate sequence: the letters then ∞ forever, or the periodic form.
    EventuallyPeriodic<Point> seq = w.is_infinite() ? *w.generator()->periodic_form()
                                                    : EventuallyPeriodic<Point>(w.letters(), {infinity()});
    EXPECT_EQ(q_normalize(kNat, seq), w) << w.to_string();
  }
}

TEST(QNormalize, UndetectableInfinity) {
  struct Opaque : CoordinateGenerator {
    Point coordinate(std::uint64_t) const override { return nat(1); }
    bool certified_finite() const override { return false; }
    std::optional<EventuallyPeriodic<Point>> periodic_form() const override { return std::nullopt; }
    std::shared_ptr<const CoordinateGenerator> tail() const override { return std::make_shared<Opaque>(); }
    std::string to_string() const override { return "opaque"; }
  };
  try {
    q_normalize(kNat, std::make_shared<Opaque>());
    FAIL();
  } catch (const DynamicsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndetectableInfinity);
  }
}

TEST(WordShift, DropsFirstLetter) {
  EXPECT_EQ(word_shift(W0Word::finite({nat(1), nat(2)})), W0Word::finite({nat(2)}));
  EXPECT_TRUE(word_shift(W0Word::finite({nat(1)})).is_zero());
  EXPECT_EQ(word_shift(W0Word::periodic({nat(1)}, {nat(2)})), W0Word::periodic({}, {nat(2)}));
  EXPECT_THROW(word_shift(W0Word::zero()), DynamicsError);
}

TEST(CylMember, Examples) {
  const auto z0 = GeneralizedCylinder::z({ClopenSet::cylinder("0")}, ClopenSet::empty_set());
  EXPECT_TRUE(cyl_member(z0, W0Word::finite({cantor("01(0)*")})));
  EXPECT_TRUE(cyl_member(GeneralizedCylinder::c(ClopenSet::cylinder("0")), W0Word::zero()));
  const auto zk = GeneralizedCylinder::z({ClopenSet::cylinder("0")}, ClopenSet::cylinder("1"));
  EXPECT_FALSE(cyl_member(zk, W0Word::finite({cantor("0(0)*"), cantor("1(0)*")})));
}

TEST(CylMember, ComplementIdentity) {
  // C[K] = W₀ \ Z[K, ∅] for K in the basis.
  const std::vector<W0Word> words = {W0Word::zero(), W0Word::finite({nat(0)}), W0Word::finite({nat(3), nat(1)}),
                                     W0Word::periodic({}, {nat(2)}), W0Word::periodic({nat(5)}, {nat(0)})};
  for (std::uint64_t k = 0; k < 6; ++k) {
    const auto K = ClopenSet::nats({k});
    for (const auto& w : words) {
      EXPECT_NE(cyl_member(GeneralizedCylinder::c(K), w), cyl_member(GeneralizedCylinder::z({K}, ClopenSet::empty_set()), w));
    }
  }
}

}  // namespace
}  // namespace drshadow
