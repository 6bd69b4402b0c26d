#include <gtest/gtest.h>

#include "steenrod/verify.hpp"

using namespace steenrod;

namespace {

VerifyConfig config(unsigned p, std::size_t samples) {
  VerifyConfig c;
  c.p = p;
  c.k = 3;
  c.seed = 7;
  c.samples = samples;
  return c;
}

}  // namespace

TEST(Verify, SuiteNamesSorted) {
  const auto names = suite_names();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_GE(names.size(), 20u);
}

TEST(Verify, AllSuitesPassSmall) {
  for (unsigned p : {2u, 3u}) {
    const auto r = run_verify(config(p, 10));
    for (const auto& s : r.suites) EXPECT_TRUE(s.ok()) << "p=" << p << " " << s.name << " " << to_json(r).dump();
    EXPECT_TRUE(r.ok());
  }
}

TEST(Verify, SameSeedSameReport) {
  auto c = config(3, 8);
  c.only = {"group.axioms", "hopf.rho_diagram", "milnor.duality"};
  const auto a = to_json(run_verify(c)).dump();
  c.parallel = false;
  const auto b = to_json(run_verify(c)).dump();
  EXPECT_EQ(a, b);
}

TEST(Verify, SuiteSeedDependsOnName) {
  EXPECT_NE(suite_seed(1, "group.axioms"), suite_seed(1, "group.star_product"));
  EXPECT_NE(suite_seed(1, "group.axioms"), suite_seed(2, "group.axioms"));
  EXPECT_EQ(suite_seed(5, "x"), suite_seed(5, "x"));
}

TEST(Verify, RejectsBadConfig) {
  auto c = config(4, 1);
  EXPECT_THROW(run_verify(c), std::invalid_argument);
  c = config(2, 1);
  c.only = {"no.such.suite"};
  EXPECT_THROW(run_verify(c), std::invalid_argument);
}
