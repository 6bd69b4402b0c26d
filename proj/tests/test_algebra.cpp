#include <gtest/gtest.h>

#include <random>

#include "steenrod/algebra.hpp"
#include "steenrod/random.hpp"

using namespace steenrod;

namespace {

PresentationPtr a22() { return make_algebra(2, {{"z1", 1, 4}, {"z2", 3, 2}}); }

}  // namespace

TEST(Presentation, AcceptsExplicitCaps) {
  const auto a = a22();
  EXPECT_EQ(a->size(), 2u);
  EXPECT_EQ(a->generator(0).cap, 4u);
  EXPECT_EQ(a->generator(1).cap, 2u);
  EXPECT_EQ(*a, *steenrod_quotient(2, 2));
}

TEST(Presentation, ClampsOddCapForOddPrime) {
  const auto a = make_algebra(3, {{"t0", 1, 5}});
  EXPECT_EQ(a->generator(0).cap, 2u);
  EXPECT_TRUE(a->sign_relevant(0));
}

TEST(Presentation, RejectsBadInput) {
  EXPECT_THROW(make_algebra(4, {{"x", 2, kNoCap}}), std::invalid_argument);
  EXPECT_THROW(make_algebra(3, {{"x", 2, kNoCap}, {"x", 4, kNoCap}}), std::invalid_argument);
}

TEST(Element, EpsilonSquaresToZero) {
  const auto a = adjoin_epsilon(make_algebra(3, {{"x1", 4, 3}}));
  const auto eps = Element::generator(a, kEpsilonName);
  EXPECT_TRUE((eps * eps).is_zero());
}

TEST(Element, UnitAndEvenOddCommute) {
  const auto a = steenrod_dual(3, 1);
  const auto t0 = Element::generator(a, "t0"), x1 = Element::generator(a, "x1");
  EXPECT_EQ(Element::one(a) * x1, x1);
  EXPECT_EQ(t0 * x1, x1 * t0);
  EXPECT_EQ((t0 * x1).terms().front().coeff, 1u);
}

TEST(Element, OddGeneratorsAnticommute) {
  const auto a = steenrod_dual(3, 1);
  const auto t0 = Element::generator(a, "t0"), t1 = Element::generator(a, "t1");
  EXPECT_EQ(t1 * t0, -(t0 * t1));
  EXPECT_TRUE((t0 * t0).is_zero());
}

TEST(Element, KoszulSignMatchesInversionCount) {
  const auto a = make_algebra(5, {{"u", 1, kNoCap}, {"v", 3, kNoCap}, {"w", 5, kNoCap}, {"y", 2, kNoCap}});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    // A random word in distinct letters; sign = (-1)^(inversions among odd letters).
    std::vector<std::size_t> word{0, 1, 2, 3};
    std::shuffle(word.begin(), word.end(), rng);
    word.resize(1 + rng() % 4);
    Element prod = Element::one(a);
    for (auto i : word) prod = prod * Element::generator(a, i);
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[i] > word[j] && a->sign_relevant(word[i]) && a->sign_relevant(word[j])) ++inversions;
      }
    }
    Monomial m{{0, 0, 0, 0}};
    for (auto i : word) m.exps[i] = 1;
    EXPECT_EQ(prod, Element::monomial(a, m, inversions % 2 ? -1 : 1));
  }
}

TEST(Element, FrobeniusExamples) {
  const auto a = adjoin_epsilon(make_algebra(3, {{"b", 4, kNoCap}}));
  const auto b = Element::generator(a, "b"), eps = Element::generator(a, kEpsilonName);
  EXPECT_EQ(frobenius(Element::one(a) + b * eps, 1), Element::one(a));
  EXPECT_EQ(frobenius(b, 0), b);
  const auto z = steenrod_dual(2, 2);
  const auto z1 = Element::generator(z, "z1"), z2 = Element::generator(z, "z2");
  EXPECT_EQ(frobenius(z1 + z2, 1), z1 * z1 + z2 * z2);
}

TEST(Element, FrobeniusAgreesWithRepeatedMultiplication) {
  Sampler rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto a = sample_algebra(p, 2);
    for (int s = 0; s < 30; ++s) {
      const Element x = rng.element(a, 2 * (static_cast<Degree>(p) - 1)) + Element::scalar(a, 1);
      Element slow = Element::one(a);
      for (unsigned i = 0; i < p; ++i) slow = slow * x;
      EXPECT_EQ(frobenius(x, 1), slow) << x.to_string();
    }
  }
}

TEST(AdjoinEpsilon, Construction) {
  const auto a = adjoin_epsilon(make_algebra(3, {{"x1", 4, 3}}));
  ASSERT_EQ(a->size(), 2u);
  EXPECT_EQ(a->generator(1).name, kEpsilonName);
  EXPECT_THROW(adjoin_epsilon(a), std::invalid_argument);
  const auto two = steenrod_quotient(2, 2);
  EXPECT_EQ(*adjoin_epsilon(two), *two);
}

TEST(EpsReduce, DropsEpsilonPart) {
  const auto a = adjoin_epsilon(make_algebra(3, {{"x1", 4, 3}, {"t0", 1, 2}}));
  const auto x = Element::generator(a, "x1"), t = Element::generator(a, "t0");
  const auto eps = Element::generator(a, kEpsilonName);
  EXPECT_EQ(eps_reduce(x + t * eps), x);
  EXPECT_EQ(eps_reduce(x * x), x * x);
  EXPECT_TRUE(eps_reduce(eps).is_zero());
  EXPECT_EQ(eps_coefficient(x + t * eps), t);
  EXPECT_TRUE(in_eps_ideal(t * eps));
}

TEST(EnumerateComponent, SmallQuotient) {
  const auto a = a22();
  const auto d1 = enumerate_component(a, 1);
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_TRUE(d1[0].is_zero());
  EXPECT_EQ(d1[1], Element::generator(a, "z1"));
  const auto d3 = enumerate_component(a, 3);
  EXPECT_EQ(d3.size(), 4u);
  EXPECT_EQ(component_basis(*a, 3).size(), 2u);
  EXPECT_EQ(enumerate_component(a, 100).size(), 1u);
}

TEST(Element, RingLawsOnRandomElements) {
  Sampler rng(9);
  for (unsigned p : {2u, 3u}) {
    const auto a = sample_algebra(p, 3);
    for (int s = 0; s < 100; ++s) {
      const Degree dx = rng.uniform(12), dy = rng.uniform(12), dz = rng.uniform(12);
      const auto x = rng.element(a, dx), y = rng.element(a, dy), z = rng.element(a, dz);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      const long long sign = (dx * dy) % 2 ? -1 : 1;
      EXPECT_EQ(x * y, (y * x).scaled(sign));
    }
  }
}

TEST(AlgebraMap, IsMultiplicative) {
  const auto src = make_algebra(2, {{"a", 1, kNoCap}, {"b", 3, kNoCap}});
  const auto dst = steenrod_dual(2, 2);
  const auto z1 = Element::generator(dst, "z1"), z2 = Element::generator(dst, "z2");
  const AlgebraMap f(src, dst, {z1, z2 + z1 * z1 * z1});
  const auto a = Element::generator(src, "a"), b = Element::generator(src, "b");
  EXPECT_EQ(f(a * b), f(a) * f(b));
  EXPECT_EQ(f(a * a + b), z1 * z1 + z2 + z1 * z1 * z1);
}

TEST(Coordinates, RoundTrip) {
  const auto a = a22();
  const auto basis = component_basis(*a, 3);
  for (const auto& x : enumerate_component(a, 3)) {
    EXPECT_EQ(from_coordinates(a, basis, coordinates(x, basis)), x);
  }
}
