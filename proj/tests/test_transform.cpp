#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rootsc/errors.hpp"
#include "rootsc/transform.hpp"

using namespace rootsc;

namespace {

const Transformation kAlpha{2, 1, 4, 5, 3};
const Transformation kBeta{2, 3, 4, 1, 2};

Transformation random_map(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pt(1, static_cast<unsigned>(n));
  std::vector<unsigned> v(n);
  for (auto& x : v) x = pt(rng);
  return Transformation(v);
}

}  // namespace

TEST(Transform, Identity) {
  EXPECT_EQ(identity(3).images(), (std::vector<unsigned>{1, 2, 3}));
  EXPECT_EQ(identity(1).images(), (std::vector<unsigned>{1}));
  EXPECT_THROW(identity(0), InvalidArgument);
}

TEST(Transform, ConstructionValidates) {
  EXPECT_THROW((Transformation{1, 4, 2}), InvalidArgument);
  EXPECT_THROW((Transformation{0, 1}), InvalidArgument);
  EXPECT_THROW(Transformation(std::vector<unsigned>{}), InvalidArgument);
  EXPECT_EQ(Transformation({3, 1, 2})(1), 3u);
}

TEST(Transform, ComposeAppliesLeftOperandFirst) {
  const auto expected = oracle::compose(kAlpha.images(), kBeta.images());
  EXPECT_EQ(expected, (std::vector<unsigned>{3, 2, 1, 2, 4}));
  EXPECT_EQ(compose(kAlpha, kBeta).images(), expected);
  EXPECT_EQ(compose(identity(5), kBeta), kBeta);
  EXPECT_EQ(compose(kBeta, identity(5)), kBeta);
  EXPECT_THROW(compose(identity(4), kBeta), InvalidArgument);
}

TEST(Transform, ImageAndRank) {
  EXPECT_EQ(image(kBeta), (std::vector<unsigned>{1, 2, 3, 4}));
  EXPECT_EQ(image(identity(4)), (std::vector<unsigned>{1, 2, 3, 4}));
  EXPECT_EQ(image(Transformation{1, 1, 1}), (std::vector<unsigned>{1}));
  EXPECT_EQ(rank(kBeta), 4u);
  EXPECT_EQ(rank(identity(7)), 7u);
  EXPECT_EQ(rank(Transformation{3, 3, 3, 3, 3}), 1u);
}

TEST(Transform, Power) {
  // alpha has cycles of length 2 and 3.
  Transformation iterated = identity(5);
  for (int i = 0; i < 6; ++i) iterated = compose(iterated, kAlpha);
  EXPECT_EQ(iterated, identity(5));
  EXPECT_EQ(power(kAlpha, 6), identity(5));
  EXPECT_NE(power(kAlpha, 3), identity(5));
  EXPECT_EQ(power(kBeta, 1), kBeta);
  EXPECT_EQ(power(kBeta, 0), identity(5));
}

TEST(Transform, Uniqueness) {
  EXPECT_TRUE(is_unique(Transformation{3, 2, 2}, 3));
  EXPECT_FALSE(is_unique(Transformation{2, 2, 3}, 2));
  EXPECT_FALSE(is_unique(kBeta, 2));
  EXPECT_TRUE(is_unique(kBeta, 1));
  // Points outside the image are not unique.
  EXPECT_FALSE(is_unique(kBeta, 5));
}

TEST(Transform, Complement) {
  const Transformation rho{3, 3, 2, 2, 2, 2};
  EXPECT_EQ(complement(rho), (Transformation{2, 2, 3, 3, 3, 3}));
  EXPECT_EQ(complement(complement(rho)), rho);
  EXPECT_EQ(rank(complement(rho)), 2u);
  EXPECT_THROW(complement(kBeta), InvalidArgument);
  EXPECT_THROW(complement(Transformation{1, 1}), InvalidArgument);
}

TEST(Transform, CyclePair) {
  EXPECT_EQ(cycle_pair(2, 3), kAlpha);
  EXPECT_EQ(cycle_pair(1, 1), (Transformation{1, 2}));
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::size_t l = 1; l <= 5; ++l) {
      EXPECT_EQ(power(cycle_pair(k, l), std::lcm(k, l)), identity(k + l));
    }
  }
}

TEST(Transform, TextForm) { EXPECT_EQ(to_string(kAlpha), "[2 1 4 5 3]"); }

TEST(TransformProperty, AlgebraOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto f = random_map(n, rng), g = random_map(n, rng), h = random_map(n, rng);
    ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    ASSERT_EQ(compose(identity(n), f), f);
    ASSERT_EQ(compose(f, identity(n)), f);

    // Image of fg is g applied to the image of f.
    std::vector<unsigned> pushed;
    for (auto p : image(f)) pushed.push_back(g(p));
    std::sort(pushed.begin(), pushed.end());
    pushed.erase(std::unique(pushed.begin(), pushed.end()), pushed.end());
    ASSERT_EQ(image(compose(f, g)), pushed);
    ASSERT_LE(rank(compose(f, g)), std::min(rank(f), rank(g)));

    const auto a = static_cast<std::uint64_t>(trial % 7), b = static_cast<std::uint64_t>(trial % 5);
    ASSERT_EQ(power(f, a + b), compose(power(f, a), power(f, b)));

    if (rank(f) == 2) {
      ASSERT_EQ(complement(complement(f)), f);
      ASSERT_EQ(image(complement(f)), image(f));
    }
  }
}

TEST(TransformProperty, OrderingIsLexicographic) {
  EXPECT_LT((Transformation{1, 1, 1}), (Transformation{1, 2, 3}));
  EXPECT_LT((Transformation{1, 3, 1}), (Transformation{2, 1, 1}));
  EXPECT_EQ(std::hash<Transformation>{}(kAlpha), std::hash<Transformation>{}(Transformation{2, 1, 4, 5, 3}));
}
