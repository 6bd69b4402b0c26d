#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "steenrod/cli.hpp"
#include "steenrod/json_io.hpp"

using namespace steenrod;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STEENROD_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, Partitions) {
  const auto r = run({"partitions", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0], Json::parse("[1,1,1]"));
  EXPECT_EQ(run({"partitions", "0"}).code, cli::kExitUsage);
}

TEST(Cli, InverseMethodsByteIdentical) {
  for (const char* file : {"elem_p2.json", "elem_p3.json"}) {
    const auto rec = run({"invert", "--in", data(file), "--method", "recursive"});
    const auto closed = run({"invert", "--in", data(file), "--method", "closed"});
    ASSERT_EQ(rec.code, cli::kExitOk) << rec.err;
    ASSERT_EQ(closed.code, cli::kExitOk) << closed.err;
    EXPECT_EQ(rec.out, closed.out);
  }
  const auto split = run({"invert", "--in", data("elem_p3.json"), "--method", "split"});
  EXPECT_EQ(split.out, run({"invert", "--in", data("elem_p3.json")}).out);
}

TEST(Cli, ComposeAndCommutator) {
  const auto c = run({"compose", "--in", data("pair_p2.json")});
  ASSERT_EQ(c.code, cli::kExitOk) << c.err;
  const auto g = group_element_from_json(Json::parse(c.out));
  EXPECT_EQ(g.truncation(), 2);
  const auto k = run({"commutator", "--in", data("pair_p2.json")});
  ASSERT_EQ(k.code, cli::kExitOk) << k.err;
  const auto f = run({"filtration", "--in", data("elem_p2.json")});
  ASSERT_EQ(f.code, cli::kExitOk) << f.err;
  EXPECT_EQ(run({"rho", "--in", data("elem_p3.json")}).code, cli::kExitOk);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run({"invert", "--in", data("malformed.json")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"invert", "--in", data("missing.json")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compose", "--in", data("elem_p2.json")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"invert"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--p", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"invert", "--in", data("elem_p2.json"), "--method", "split"}).code, cli::kExitUsage);
}

TEST(Cli, LimitExceeded) {
  ::setenv("STEENROD_LIMIT", "4", 1);
  const auto r = run({"lcs", "--p", "2", "--preset", "A2n", "--n", "2"});
  ::unsetenv("STEENROD_LIMIT");
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("limit"), std::string::npos);
}

TEST(Cli, LowerCentralSeries) {
  const auto r = run({"lcs", "--p", "2", "--preset", "A2n", "--n", "2", "--seed", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, SweepCsv) {
  const auto r = run({"sweep", "--p", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("p,n,algebra,|G|,class,bound,ok\n", 0), 0u);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
}

TEST(Cli, HopfAndMilnor) {
  const auto h = run({"hopf", "--p", "3", "--N", "3"});
  EXPECT_EQ(h.code, cli::kExitOk) << h.out << h.err;
  const auto d = run({"hopf", "cocommutativity", "--p", "3", "--N", "2"});
  EXPECT_EQ(d.code, cli::kExitFailure);
  const auto m = run({"milnor", "in-j", "--p", "3", "--k", "0", "--E", "1"});
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  EXPECT_TRUE(Json::parse(m.out)["in_J"].get<bool>());
  EXPECT_EQ(run({"milnor", "sweep", "--p", "2", "--k", "1", "--N", "3"}).code, cli::kExitOk);
}

TEST(Cli, VerifyDeterministic) {
  const std::vector<std::string> args{"verify", "--p", "2", "--k", "3", "--seed", "7", "--samples", "5"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, cli::kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "parts.json";
  ASSERT_EQ(run({"partitions", "2", "--out", path}).code, cli::kExitOk);
  std::ifstream f(path);
  EXPECT_EQ(Json::parse(f).size(), 2u);
}
