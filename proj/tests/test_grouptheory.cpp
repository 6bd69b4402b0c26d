#include <gtest/gtest.h>

#include <cstdlib>

#include "steenrod/grouptheory.hpp"
#include "steenrod/kernels.hpp"

using namespace steenrod;

namespace {

EnumerateOptions serial() {
  EnumerateOptions o;
  o.parallel = false;
  return o;
}

}  // namespace

TEST(Enumerate, OrderTwo) {
  const auto g = enumerate_group(make_algebra(2, {{"z1", 1, 2}}), 1, serial());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.element(g.identity()).is_identity());
  EXPECT_TRUE(is_latin_square(g));
}

TEST(Enumerate, OrderEight) {
  const auto g = enumerate_group(steenrod_quotient(2, 2), 2, serial());
  EXPECT_EQ(g.size(), 8u);
  EXPECT_TRUE(is_latin_square(g));
  for (FiniteGroupTable::Index a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.product(a, g.inverse(a)), g.identity());
    for (FiniteGroupTable::Index b = 0; b < g.size(); ++b) EXPECT_EQ(g.product(a, b), g.compute_product(a, b));
  }
}

TEST(Enumerate, TrivialWhenComponentsVanish) {
  const auto g = enumerate_group(make_algebra(2, {{"y", 5, 2}}), 2, serial());
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(lower_central_series(g).length, 0);
}

TEST(Enumerate, RespectsLimit) {
  auto o = serial();
  o.limit = 4;
  EXPECT_THROW(enumerate_group(steenrod_quotient(2, 2), 2, o), std::length_error);
}

TEST(Enumerate, RejectsInfiniteComponents) {
  EXPECT_THROW(enumerate_group(make_algebra(2, {{"y", 0, kNoCap}, {"z1", 1, 2}}), 1, serial()), std::domain_error);
}

TEST(Enumerate, IndexOfRoundTrip) {
  const auto g = enumerate_group(steenrod_quotient(2, 3), 2, serial());
  for (FiniteGroupTable::Index i = 0; i < g.size(); ++i) EXPECT_EQ(g.index_of(g.element(i)), i);
}

TEST(Series, LowerCentralOrderEight) {
  const auto g = enumerate_group(steenrod_quotient(2, 2), 2, serial());
  const auto r = lower_central_series(g, "A(2)");
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.filtration_ok);
  ASSERT_TRUE(r.length.has_value());
  EXPECT_LE(*r.length, 3);
  EXPECT_EQ(r.bound, 3);
  const auto d = derived_series(g, "A(2)");
  EXPECT_TRUE(d.ok);
  ASSERT_TRUE(d.length.has_value());
  EXPECT_LE(*d.length, 2);
  EXPECT_EQ(d.chain.at(1), r.chain.at(1));
}

TEST(Series, ChainsAreNested) {
  for (unsigned p : {2u, 3u}) {
    for (const auto& c : standard_cases(p)) {
      const auto g = enumerate_group(c.algebra, c.n, serial());
      const auto l = lower_central_series(g, c.name);
      const auto d = derived_series(g, c.name);
      EXPECT_TRUE(l.ok) << c.name;
      EXPECT_TRUE(d.ok) << c.name;
      for (std::size_t i = 1; i < l.chain.size(); ++i) EXPECT_TRUE(is_subset(l.chain[i], l.chain[i - 1]));
      for (std::size_t i = 1; i < d.chain.size(); ++i) EXPECT_TRUE(is_subset(d.chain[i], d.chain[i - 1]));
      for (std::size_t i = 0; i < std::min(l.chain.size(), d.chain.size()); ++i) EXPECT_TRUE(is_subset(d.chain[i], l.chain[i]));
    }
  }
}

TEST(Series, EvenSubgroup) {
  const auto a = make_algebra(3, {{"x1", 4, 3}});
  const auto r = ev_subgroup_series(a, 1, serial(), "F_3[x1]/(x1^3)");
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.order, 3u);
  EXPECT_EQ(r.length, 1);
  const auto t = ev_subgroup_series(a, 0, serial());
  EXPECT_EQ(t.order, 1u);
  EXPECT_TRUE(ev_subgroup_series(steenrod_quotient_ev(3, 2), 2, serial()).ok);
  EXPECT_THROW(ev_subgroup_series(steenrod_quotient(2, 1), 1, serial()), std::invalid_argument);
}

TEST(Series, AbelianGroupHasClassOne) {
  const auto g = enumerate_group(make_algebra(3, {{"x1", 4, 3}}), 1, serial());
  const auto r = lower_central_series(g);
  EXPECT_EQ(r.length, 1);
  const auto d = derived_series(g);
  EXPECT_EQ(d.length, 1);
}

TEST(Subgroups, GeneratedAndCommutator) {
  const auto g = enumerate_group(steenrod_quotient(2, 2), 2, serial());
  EXPECT_EQ(generated_subgroup(g, {}), Subgroup{g.identity()});
  const auto all = whole_group(g);
  EXPECT_EQ(all.size(), g.size());
  EXPECT_EQ(commutator_subgroup(g, all, all, false), commutator_subgroup(g, all, all, true));
}

TEST(Zero, AdditiveGroupOfDegreeOne) {
  // G_{3,0}(A) is the additive group of the degree-one component.
  const auto a = make_algebra(3, {{"t0", 1, 2}, {"t1", 5, 2}});
  const auto g = enumerate_group(a, 0, serial());
  EXPECT_EQ(g.size(), 3u);
  for (FiniteGroupTable::Index x = 0; x < g.size(); ++x) {
    for (FiniteGroupTable::Index y = 0; y < g.size(); ++y) {
      const auto& gx = g.element(x).coeff(0);
      const auto& gy = g.element(y).coeff(0);
      const auto& gz = g.element(g.product(x, y)).coeff(0);
      EXPECT_EQ(eps_coefficient(gz), eps_coefficient(gx) + eps_coefficient(gy));
    }
  }
}

TEST(Describe, ReadableName) {
  EXPECT_EQ(describe(*make_algebra(2, {{"z1", 1, 2}, {"z2", 3, kNoCap}})), "F_2[z1:1/2,z2:3]");
}

TEST(Limit, ReadsEnvironment) {
  ::setenv("STEENROD_LIMIT", "17", 1);
  EXPECT_EQ(group_limit_from_env(), 17u);
  ::unsetenv("STEENROD_LIMIT");
  EXPECT_EQ(group_limit_from_env(), kDefaultGroupLimit);
}
