#include <gtest/gtest.h>

#include <set>

#include "drshadow/cylinder.hpp"
#include "drshadow/enumeration.hpp"
#include "drshadow/sampling.hpp"
#include "oracles.hpp"

namespace drshadow {
namespace {

using Entries = std::vector<std::uint64_t>;

TEST(CantorPair, RoundTrip) {
  for (std::uint64_t a = 0; a < 60; ++a) {
    for (std::uint64_t b = 0; b < 60; ++b) {
      EXPECT_EQ(cantor_unpair(cantor_pair(a, b)), std::make_pair(a, b));
    }
  }
  for (std::uint64_t z = 0; z < 5000; ++z) EXPECT_EQ(cantor_pair(cantor_unpair(z).first, cantor_unpair(z).second), z);
  const std::uint64_t big = 4000000000ULL;
  EXPECT_EQ(cantor_unpair(cantor_pair(big, 17)), std::make_pair(big, std::uint64_t{17}));
}

TEST(EnumerateTuples, FirstTuplesByHand) {
  EXPECT_EQ(enumerate_tuples(1).entries, Entries({1}));
  EXPECT_EQ(enumerate_tuples(2).entries, Entries({2}));
  EXPECT_EQ(enumerate_tuples(3).entries, Entries({1, 1}));
  EXPECT_EQ(enumerate_tuples(4).entries, Entries({3}));
  EXPECT_EQ(enumerate_tuples(5).entries, Entries({2, 1}));
  EXPECT_EQ(enumerate_tuples(6).entries, Entries({1, 1, 1}));
  EXPECT_EQ(enumerate_tuples(8).entries, Entries({1, 2}));
  EXPECT_EQ(enumerate_tuples(6).enum_index, 6u);
}

TEST(EnumerateTuples, MatchesBruteForceOrder) {
  std::map<std::uint64_t, std::vector<Entries>> by_length;
  for (std::uint64_t k = 1; k <= 6; ++k) by_length[k] = oracle::first_tuples(k, 400);
  for (std::uint64_t j = 1; j <= 10000; ++j) {
    const auto [a, r] = cantor_unpair(j - 1);
    const auto k = a + 1;
    if (k > 6 || r >= 400) continue;
    EXPECT_EQ(enumerate_tuples(j).entries, by_length[k][r]) << "j=" << j;
  }
}

TEST(EnumerateTuples, InjectiveOverFirstTenThousand) {
  std::set<Entries> seen;
  for (std::uint64_t j = 1; j <= 10000; ++j) {
    const auto t = enumerate_tuples(j);
    ASSERT_FALSE(t.entries.empty());
    for (auto e : t.entries) ASSERT_GE(e, 1u);
    EXPECT_TRUE(seen.insert(t.entries).second) << "j=" << j;
  }
}

TEST(EnumerateTuples, DepthOfPrefixFamilies) {
  EXPECT_EQ(tuple_depth(1), 1u);
  EXPECT_EQ(tuple_depth(3), 2u);
  EXPECT_EQ(tuple_depth(6), 3u);
  for (std::uint64_t l = 1; l < 200; ++l) {
    std::uint64_t d = 0;
    for (std::uint64_t j = 1; j <= l; ++j) d = std::max<std::uint64_t>(d, enumerate_tuples(j).entries.size());
    EXPECT_EQ(tuple_depth(l), d);
  }
}

TEST(AlphaBits, ZeroWordIsAllZero) {
  W0Metric m(BaseSpace::nat());
  EXPECT_EQ(m.alpha_bits(W0Word::zero(), 12), std::string(12, '0'));
}

TEST(AlphaBits, LengthOneWordMissesLongTuples) {
  W0Metric m(BaseSpace::nat());
  const auto x = W0Word::finite({nat(0)});
  for (std::uint64_t j = 1; j <= 50; ++j) {
    if (m.tuple(j).entries.size() >= 2) EXPECT_FALSE(m.alpha_bit(x, j));
  }
}

TEST(AlphaBits, AgreesWithCylinderMembership) {
  for (const auto& space : {BaseSpace::nat(), BaseSpace::cantor_minus(CantorPoint::constant('1'))}) {
    W0Metric m(space);
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
      std::vector<Point> letters;
      const auto len = uniform(rng, 1, 4);
      for (std::uint64_t k = 0; k < len; ++k) letters.push_back(random_point(space, rng));
      const auto x = i % 3 == 0 ? W0Word::periodic(letters, {random_point(space, rng)}) : W0Word::finite(letters);
      const auto bits = m.alpha_bits(x, 64);
      for (std::uint64_t j = 1; j <= 64; ++j) {
        std::vector<ClopenSet> prefix;
        for (auto e : m.tuple(j).entries) prefix.push_back(enumerate_basis(space, e));
        const bool want = cyl_member(GeneralizedCylinder::z(prefix, ClopenSet::empty_set()), x);
        EXPECT_EQ(bits[j - 1] == '1', want) << x.to_string() << " j=" << j;
      }
    }
  }
}

TEST(AlphaBits, CantorExampleVector) {
  W0Metric m(BaseSpace::cantor_minus(CantorPoint::constant('1')));
  // Basis: Z(0), Z(00), Z(01), Z(10), ...; tuples (1),(2),(1,1),(3),(2,1),(1,1,1),(4),(1,2).
  EXPECT_EQ(m.alpha_bits(W0Word::finite({cantor("0(0)*")}), 8), "11000000");
}

TEST(W0Distance, Examples) {
  W0Metric m(BaseSpace::nat());
  const auto a = W0Word::finite({nat(2)});
  EXPECT_TRUE(m.distance(a, a, 100).level->is_infinite());
  EXPECT_EQ(m.distance(W0Word::zero(), W0Word::finite({nat(0)}), 100).level, Level::finite(1));
  EXPECT_EQ(m.distance(W0Word::zero(), W0Word::finite({nat(1)}), 100).level, Level::finite(2));
  EXPECT_EQ(m.distance(W0Word::zero(), a, 100).level, Level::finite(4));
  const auto far = m.distance(W0Word::zero(), W0Word::finite({nat(200)}), 100);
  EXPECT_FALSE(far.resolved());
  EXPECT_EQ(far.to_string(), "indistinguishable@100");
  EXPECT_EQ(m.distance(W0Word::zero(), a, 100).to_string(), "2^-4");
}

TEST(W0Distance, DistinctLengthOneWordsSeparateBelowBound) {
  // A first difference at index d is caught by the basis cylinder of length
  // d+1, whose length-one tuple sits below 1000 for d <= 3.
  W0Metric m(BaseSpace::cantor_minus(CantorPoint::constant('1')));
  Rng rng(13);
  int resolved = 0;
  for (int i = 0; i < 400; ++i) {
    const auto x = random_cantor(rng, "", 3, 2);
    const auto y = random_cantor(rng, "", 3, 2);
    if (x == y || x == CantorPoint::constant('1') || y == CantorPoint::constant('1')) continue;
    if (*x.first_difference(y) > 3) continue;
    const auto d = m.distance(W0Word::finite({x}), W0Word::finite({y}), 1000);
    EXPECT_TRUE(d.resolved()) << x.to_string() << " " << y.to_string();
    resolved += d.resolved();
  }
  EXPECT_GT(resolved, 100);
}

TEST(W0Distance, UltrametricAndSeparationBound) {
  W0Metric m(BaseSpace::nat());
  Rng rng(17);
  const auto word = [&] {
    const auto kind = uniform(rng, 0, 4);
    if (kind == 0) return W0Word::zero();
    std::vector<Point> letters;
    const auto len = uniform(rng, 1, 3);
    for (std::uint64_t k = 0; k < len; ++k) letters.push_back(nat(uniform(rng, 0, 2)));
    if (kind == 4) return W0Word::periodic(letters, {nat(uniform(rng, 0, 2))});
    return W0Word::finite(letters);
  };
  for (int i = 0; i < 2000; ++i) {
    const auto x = word(), y = word(), z = word();
    const auto dxy = m.distance(x, y, 1000), dyz = m.distance(y, z, 1000), dxz = m.distance(x, z, 1000);
    EXPECT_EQ(dxy.level, m.distance(y, x, 1000).level);
    if (dxy.resolved() && dyz.resolved() && dxz.resolved()) {
      EXPECT_GE(*dxz.level, min(*dxy.level, *dyz.level));
      EXPECT_EQ(dxy.level->is_infinite(), x == y);
    }
    if (dxy.resolved() && dxy.level->is_finite()) {
      const auto j = dxy.level->value();
      EXPECT_NE(m.alpha_bit(x, j), m.alpha_bit(y, j));
      for (std::uint64_t i2 = 1; i2 < j; ++i2) EXPECT_EQ(m.alpha_bit(x, i2), m.alpha_bit(y, i2));
    }
  }
}

}  // namespace
}  // namespace drshadow
