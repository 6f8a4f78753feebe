#include <gtest/gtest.h>

#include <sstream>

#include "fhl/cli/cli.hpp"
#include "fhl/io/json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = fhl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fhl::io::Json json_of(const Result& r) { return fhl::io::parse_json(r.out); }

}  // namespace

TEST(Cli, TangentExample) {
  Result r = run({"tangent", "--n", "2", "--d", "5", "--alpha", "1,1", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["classification"], "attains-linear-minimum");
}

TEST(Cli, ScanBoundsExitReflectsAssertions) {
  Result ok = run({"scan-bounds", "--n", "4", "--d", "4"});
  EXPECT_EQ(ok.code, 0);
  auto j = json_of(ok);
  EXPECT_EQ(j["assertions"], fhl::io::Json::parse("[true,true,true,true]"));
  for (const char* key : {"n", "d", "sigma", "min", "min_attainers_count", "second_min", "second_attainers_count"})
    EXPECT_TRUE(j.contains(key)) << key;
  Result degenerate = run({"scan-bounds", "--n", "2", "--d", "4"});
  EXPECT_EQ(degenerate.code, 1);
  EXPECT_EQ(json_of(degenerate)["assertions"], fhl::io::Json::parse("[true,false,false,true]"));
}

TEST(Cli, Prop11) {
  Result i = run({"prop11", "--d", "6", "--a", "i"});
  ASSERT_EQ(i.code, 0) << i.err;
  EXPECT_EQ(json_of(i)["scan"], true);
  EXPECT_EQ(json_of(i)["direct"], true);
  EXPECT_EQ(json_of(i)["cross_ratio_rational"], true);
  Result u = run({"prop11", "--d", "6", "--a", "i*(2+3*z^4)/(2+3*z^8)"});
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(json_of(u)["scan"], true);
  EXPECT_EQ(json_of(u)["direct"], false);
  Result two = run({"prop11", "--d", "5", "--a", "2"});
  EXPECT_EQ(json_of(two)["scan"], false);
  EXPECT_EQ(two.code, 0);
}

TEST(Cli, CertifyCsvRows) {
  Result r = run({"certify", "--n", "2", "--d", "5", "--alpha", "1,3", "--output", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "alpha,pairing,c,flag");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NE(line.find(",rational"), std::string::npos);
  }
  EXPECT_EQ(rows, 25);
  Result bad = run({"certify", "--n", "2", "--d", "5", "--a", "2, z"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json_of(bad)["all_rational"], false);
}

TEST(Cli, VerbsRunAndTableOutput) {
  std::vector<std::vector<std::string>> commands = {
      {"hilbert", "--n", "2", "--d", "5", "--alpha", "1,1", "--pairing-ranks"},
      {"hilbert", "--n", "2", "--d", "5", "--alpha", "1,1", "--degree", "1"},
      {"linear-cycle", "--n", "2", "--d", "3", "--alpha", "1,1"},
      {"pair", "--n", "2", "--d", "5", "--alpha", "1,1", "--with-alpha", "1,3"},
      {"recover", "--n", "2", "--d", "5", "--a", "2, 3/2", "--c-lambda", "7"},
      {"plane", "--n", "2", "--d", "5", "--a", "z, 2"},
      {"dan-ci", "--n", "2", "--d", "5", "--type", "conic"},
      {"special", "--n", "2", "--d", "4", "--a", "z*(3+4*i)/5, z"},
      {"groebner", "--n", "2", "--d", "5", "--a", "z, 3/2", "--order", "split"},
      {"tangent", "--n", "2", "--d", "5", "--random", "--seed", "4"},
  };
  for (auto args : commands) {
    Result r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(json_of(r)) << args[0];
    args.insert(args.end(), {"--output", "table"});
    Result t = run(args);
    EXPECT_EQ(t.code, 0) << args[0];
    EXPECT_FALSE(t.out.empty());
  }
  auto slice = json_of(run({"hilbert", "--n", "2", "--d", "5", "--alpha", "1,1", "--degree", "1"}));
  EXPECT_EQ(slice["dim"], 2);
  auto lin = json_of(run({"plane", "--n", "2", "--d", "5", "--alpha", "1,3"}));
  EXPECT_EQ(lin["contained"], true);
}

TEST(Cli, UsageErrors) {
  std::vector<std::vector<std::string>> corpus = {
      {},
      {"frobnicate"},
      {"tangent", "--n", "3", "--d", "5", "--alpha", "1,1"},
      {"tangent", "--n", "2", "--d", "2", "--alpha", "1,1"},
      {"tangent", "--n", "2", "--d", "5"},
      {"tangent", "--n", "2", "--d", "5", "--alpha", "1,2"},
      {"tangent", "--n", "2", "--d", "5", "--alpha", "1"},
      {"tangent", "--n", "2", "--d", "5", "--alpha", "1,1", "--a", "z,z"},
      {"tangent", "--n", "2", "--d", "5", "--a", "z + (2"},
      {"tangent", "--n", "2", "--d", "5", "--a", "z,z", "--c-lambda", "0"},
      {"tangent", "--n", "2", "--d", "5", "--alpha", "1,1", "--output", "xml"},
      {"tangent", "--n", "2", "--d", "5", "--alpha", "1,1", "--jobs", "0"},
      {"tangent", "--n", "2", "--d", "5", "--alpha", "1,1", "--pairing", "0,0,1,2"},
      {"tangent", "--n", "2", "--d", "5", "--poly", "/nonexistent.json"},
      {"tangent", "--n", "2", "--d", "5", "--poly", "{\"vars\":4,"},
      {"tangent", "--n", "2", "--d", "5", "--expr", "x0^5"},
      {"tangent", "--n", "2", "--d", "5", "--expr", "x7^6"},
      {"hilbert", "--n", "2", "--d", "5", "--alpha", "1,1", "--order", "0,1"},
      {"prop11", "--d", "6", "--a", "i", "--m", "10"},
      {"prop11", "--d", "2", "--a", "1"},
      {"plane", "--n", "2", "--d", "5", "--a", "z"},
      {"plane", "--n", "2", "--d", "5", "--forms", "x0, 2*x0"},
      {"dan-ci", "--n", "2", "--d", "5", "--type", "cubic"},
      {"special", "--n", "2", "--d", "5", "--a", "z, z"},
      {"special", "--n", "2", "--d", "4", "--a", "2, z"},
      {"groebner", "--n", "2"},
      {"groebner", "--n", "2", "--gens", "x0 + 1"},
  };
  for (const auto& args : corpus) {
    Result r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<empty>" : args[0]) << " " << r.err;
    EXPECT_TRUE(r.out.empty() || args.empty()) << r.out;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, ComputationErrors) {
  std::vector<std::vector<std::string>> corpus = {
      {"tangent", "--n", "2", "--d", "5", "--expr", "x0^4*x1^2"},
      {"recover", "--n", "2", "--d", "5", "--expr", "x0^3*x1^3 + x2^3*x3^3 + x0*x1*x2*x3^3"},
      {"dan-ci", "--n", "2", "--d", "5", "--f", "x0, x2", "--g", "x0^4, x2^4"},
  };
  for (const auto& args : corpus) {
    Result r = run(args);
    EXPECT_EQ(r.code, 1) << args[0] << " " << r.err;
    EXPECT_NE(r.err.find("error: "), std::string::npos);
  }
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  std::vector<std::vector<std::string>> commands = {
      {"hilbert", "--n", "2", "--d", "5", "--a", "z, 2"},
      {"certify", "--n", "2", "--d", "4", "--a", "1/2, z", "--output", "csv"},
      {"scan-bounds", "--n", "4", "--d", "5"},
      {"tangent", "--n", "2", "--d", "5", "--random", "--seed", "9", "--shape"},
  };
  for (const auto& base : commands) {
    std::string first;
    for (const char* jobs : {"1", "4", "1", "4"}) {
      auto args = base;
      args.insert(args.end(), {"--jobs", jobs});
      Result r = run(args);
      if (first.empty()) first = r.out;
      EXPECT_EQ(r.out, first) << base[0];
    }
  }
}
