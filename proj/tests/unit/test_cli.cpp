#include "cli.hpp"

#include "nefslope/json_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace nefslope::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = run(args, out, err, env);
  return {code, out.str(), err.str()};
}

TEST(Cli, SlopeIrrationalSurface) {
  const Outcome o = invoke({"slope", "--json", R"({"n":2,"v":[2,3,2]})"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const Json j = parse_json(o.out);
  EXPECT_EQ(j["kind"], "finite");
  EXPECT_EQ(j["rationality"]["verdict"], "irrational");
  const Rational lo = parse_rational(j["slope"]["interval"][0].get<std::string>());
  const Rational hi = parse_rational(j["slope"]["interval"][1].get<std::string>());
  EXPECT_GT(lo, Rational(3819, 10000));
  EXPECT_LT(hi, Rational(3821, 10000));
  EXPECT_NE(o.err.find("irrational"), std::string::npos);
}

TEST(Cli, ScanWithWitnessExits10) {
  const Outcome o = invoke({"scan", "--json", R"([{"n":2,"v":[0,1,2]},{"n":2,"v":[2,3,2]}])"});
  EXPECT_EQ(o.code, kWitnessFound) << o.err;
  EXPECT_EQ(parse_json(o.out)["overall"], "non-simple-witness-found");
  EXPECT_EQ(invoke({"scan", "--json", R"([{"n":2,"v":[2,3,2]}])"}).code, kSuccess);
  EXPECT_EQ(invoke({"scan", "--jobs", "3", "--json", R"([{"n":2,"v":[2,3,2]},{"n":2,"v":[8,4,2]}])"}).code,
            kSuccess);
}

TEST(Cli, BoundPreconditionExits3) {
  const Outcome o = invoke({"bound", "--json", R"({"n":2,"v":[2,-3,2]})"});
  EXPECT_EQ(o.code, kPreconditionViolation);
  EXPECT_NE(o.err.find("NegationIsNef"), std::string::npos);
  const Outcome ok = invoke({"bound", "--json", R"({"n":2,"v":[2,3,2]})"});
  ASSERT_EQ(ok.code, kSuccess);
  EXPECT_EQ(parse_json(ok.out)["bound"], "1/4");
}

TEST(Cli, CertifyAndNef) {
  Outcome o = invoke({"certify", "--json", R"({"n":2,"v":[3,5,3]})"});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_EQ(parse_json(o.out)["q"], "3");
  EXPECT_EQ(invoke({"certify", "--json", R"({"n":2,"v":[2,-3,2]})"}).code, kPreconditionViolation);

  o = invoke({"nef", "--json", R"({"n":2,"v":[0,4,3]})"});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_EQ(parse_json(o.out)["verdict"], "nef");
  EXPECT_EQ(parse_json(o.out)["ample"], false);
  o = invoke({"nef", "--json", R"({"n":2,"v":[3,5,3],"a":3,"b":-1})"});
  EXPECT_EQ(parse_json(o.out)["values"], parse_json(R"(["0","4","3"])"));
}

TEST(Cli, MatrixInput) {
  const Outcome o = invoke({"slope", "--json", R"({"n":3,"F":[["9",0,0],[0,0,0],[0,0,0]]})"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  EXPECT_EQ(parse_json(o.out)["slope"]["exact"], "1/9");
}

TEST(Cli, InputErrorsExit2) {
  EXPECT_EQ(invoke({"slope", "--json", R"({"n":2,"v":[2,3,})"}).code, kInputError);
  const Outcome bad = invoke({"slope", "--json", R"({"n":2,"v":[2,3,})"});
  EXPECT_NE(bad.err.find("byte"), std::string::npos);
  EXPECT_EQ(invoke({"slope", "--json", R"({"n":2,"v":[2,3,2]})", "--frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"slope"}).code, kInputError);
  EXPECT_EQ(invoke({"explode"}).code, kInputError);
  EXPECT_EQ(invoke({"slope", "--json", R"({"n":2,"v":[2,1,2]})", "--level", "hodge"}).code, kInputError);
  EXPECT_EQ(invoke({"scan", "--json", R"([{"n":2,"v":[0,1,2]},{"n":2,"v":[3,5,3]}])"}).code, kInputError);
  EXPECT_EQ(invoke({"slope", "--input", "/nonexistent/file.json"}).code, kInputError);
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::string> args{"slope", "--json", R"({"n":3,"v":[1,2,3,6]})"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> gen{"gen", "--kind", "product-matrix", "--n", "3", "--seed", "5", "--count", "4"};
  EXPECT_EQ(invoke(gen).out, invoke(gen).out);
  const std::vector<std::string> sc{"scan", "--jobs", "4", "--json",
                                    R"([{"n":2,"v":[0,1,2]},{"n":2,"v":[2,3,2]},{"n":2,"v":[8,4,2]}])"};
  EXPECT_EQ(invoke(sc).out, invoke(sc).out);
}

TEST(Cli, WidthFromFlagAndEnvironment) {
  const std::string input = R"({"n":2,"v":[2,3,2]})";
  auto width_of = [](const Outcome& o) {
    const Json j = parse_json(o.out);
    return parse_rational(j["zeta"]["interval"][1].get<std::string>()) -
           parse_rational(j["zeta"]["interval"][0].get<std::string>());
  };
  EXPECT_LE(width_of(invoke({"slope", "--json", input, "--width", "1/8"})), Rational(1, 8));
  EXPECT_GT(width_of(invoke({"slope", "--json", input, "--width", "1/8"})), Rational(1, 64));
  EXPECT_LE(width_of(invoke({"slope", "--json", input}, "1e-3")), Rational(1, 1000));
  EXPECT_GT(width_of(invoke({"slope", "--json", input}, "1e-3")), Rational(1, 1000000));
  // the flag wins over the environment
  EXPECT_GT(width_of(invoke({"slope", "--json", input, "--width", "1/8"}, "1e-9")), Rational(1, 64));
  EXPECT_LE(width_of(invoke({"slope", "--json", input})), Rational(1, Integer(1) << 64));
  EXPECT_EQ(invoke({"slope", "--json", input, "--width", "0"}).code, kInputError);
}

TEST(Cli, GenEmitsArray) {
  const Outcome o = invoke({"gen", "--kind", "surface", "--bound", "10", "--seed", "1", "--count", "5"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const Json j = parse_json(o.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(invoke({"gen", "--kind", "nonsense"}).code, kInputError);
}

}  // namespace
}  // namespace nefslope::cli
