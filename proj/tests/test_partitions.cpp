#include <gtest/gtest.h>

#include <set>

#include "steenrod/partitions.hpp"

using namespace steenrod;

TEST(Compositions, SmallCases) {
  const auto one = enumerate_compositions(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].parts(), std::vector<int>{1});
  const auto three = enumerate_compositions(3);
  const std::vector<Composition> want{Composition({1, 1, 1}), Composition({1, 2}), Composition({2, 1}), Composition({3})};
  EXPECT_EQ(three, want);
  EXPECT_EQ(enumerate_compositions(5).size(), 16u);
}

TEST(Compositions, CountIsPowerOfTwo) {
  for (int n = 1; n <= 14; ++n) {
    const auto all = enumerate_compositions(n);
    EXPECT_EQ(all.size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& c : all) EXPECT_EQ(c.total(), n);
  }
}

TEST(Compositions, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_compositions(0), std::invalid_argument);
  EXPECT_THROW(enumerate_compositions(kMaxCompositionSize + 1), std::length_error);
  EXPECT_THROW(Composition({1, 0}), std::invalid_argument);
}

TEST(Compositions, Offsets) {
  const Composition c({2, 1, 3});
  EXPECT_EQ(c.offset(1), 0);
  EXPECT_EQ(c.offset(2), 2);
  EXPECT_EQ(c.offset(3), 3);
  EXPECT_EQ(c.part(3), 3);
}

TEST(Extend, Examples) {
  EXPECT_EQ(extend_composition(Composition({1, 2}), 5), Composition({1, 2, 2}));
  EXPECT_EQ(extend_composition(Composition({1}), 2), Composition({1, 1}));
  EXPECT_THROW(extend_composition(Composition({3}), 3), std::invalid_argument);
}

TEST(Extend, BijectionOntoLongCompositions) {
  for (int m = 2; m <= 10; ++m) {
    std::set<Composition> image;
    std::size_t domain = 0;
    for (int k = 1; k < m; ++k) {
      for (const auto& nu : enumerate_compositions(k)) {
        image.insert(extend_composition(nu, m));
        ++domain;
      }
    }
    std::set<Composition> longer;
    for (const auto& c : enumerate_compositions(m)) {
      if (c.length() >= 2) longer.insert(c);
    }
    EXPECT_EQ(image.size(), domain);
    EXPECT_EQ(image, longer);
    EXPECT_EQ(domain, (std::size_t{1} << (m - 1)) - 1);
  }
}
