#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "dqf/cli.hpp"
#include "dqf/expr.hpp"
#include "generators.hpp"

using namespace dqf;

namespace {

const char* kExample = "(t-i)*(t-k) + eps*(t-j)";
const char* kBennett = "t^2 - ((1+2*eps)*i + k + eps*j)*t - j + eps*(i-2)";
const char* kQuadratic = "t^2 - t*(i+k) - j + eps*((2*k - 4*i - 1)*t + (i - j - 1))";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parser, UnitsAndOrder) {
  EXPECT_EQ(parse_poly("i*k"), DQPoly{-DualQuaternion::j()});
  EXPECT_EQ(parse_poly("k*i"), DQPoly{DualQuaternion::j()});
  EXPECT_EQ(parse_poly("eps*eps"), DQPoly{});
  EXPECT_EQ(parse_poly("1"), DQPoly{DualQuaternion(1.0)});
  EXPECT_EQ(parse_poly("t*i"), parse_poly("i*t"));
  EXPECT_EQ(parse_poly("2^3"), DQPoly{DualQuaternion(8.0)});
  EXPECT_EQ(parse_poly("1.5e1"), DQPoly{DualQuaternion(15.0)});
  EXPECT_EQ(parse_poly("-t").degree(), 1);
}

TEST(Parser, ReferencePolynomials) {
  auto m = parse_poly(kExample);
  ASSERT_EQ(m.degree(), 2);
  EXPECT_EQ(m[2], DualQuaternion(1.0));
  EXPECT_EQ(m[1], DualQuaternion(Quaternion(0, -1, 0, -1), Quaternion(1)));
  EXPECT_EQ(m[0], DualQuaternion(Quaternion(0, 0, -1, 0), Quaternion(0, 0, -1, 0)));  // i k = -j

  auto b = parse_poly(kBennett);
  EXPECT_EQ(b[1], DualQuaternion(Quaternion(0, -1, 0, -1), Quaternion(0, -2, -1, 0)));
  EXPECT_EQ(b[0], DualQuaternion(Quaternion(0, 0, -1, 0), Quaternion(-2, 1, 0, 0)));
}

TEST(Parser, SyntaxErrorsCarryPosition) {
  for (const char* bad : {"", "t +", "2 t", "(t", "t^-1", "x", "t/2", "i**j", "3)"}) {
    try {
      (void)parse_poly(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SyntaxError) << bad;
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
  }
}

TEST(Render, RoundTripCorpus) {
  std::vector<std::string> corpus{kExample,
                                  kBennett,
                                  kQuadratic,
                                  "1",
                                  "0",
                                  "t + k + eps",
                                  "(t^2 + 1)*(t + k) + eps*(1 - t*k)",
                                  "t - i + 3*eps*k",
                                  "t - k - eps*(1 + 4*i + k)",
                                  "-eps*t - 2.5*i + 1e-3"};
  gen::Rng rng(71);
  for (int n = 0; n < 50; ++n) corpus.push_back(render(rng.poly(rng.integer(0, 3))));
  for (const auto& text : corpus) {
    std::string once = render(parse_poly(text));
    std::string twice = render(parse_poly(once));
    EXPECT_EQ(once, twice) << text;
    EXPECT_LE(distance(parse_poly(once), parse_poly(text)), 1e-11 * (1.0 + parse_poly(text).scale())) << text;
  }
}

TEST(Render, Formatting) {
  EXPECT_EQ(render(parse_poly("t - i - eps*j")), "t - i - eps*j");
  EXPECT_EQ(render(parse_poly("t - k - 2*eps*i")), "t - k - 2*eps*i");
  EXPECT_EQ(render(parse_poly("0*i")), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(render(make_dual(RealPoly{1.0, 0.0, 1.0}, RealPoly{-3.0, -4.0})), "t^2 + 1 + eps*(-4*t - 3)");
}

TEST(Cli, NormOfExample) {
  auto r = run({"norm", kExample});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t^4 + 2*t^2 + 1 + eps*(2*t^3 + 2)\n");
}

TEST(Cli, ExampleIsInfeasible) {
  auto r = run({"factor", kExample});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("t^2 + 1"), std::string::npos);
}

TEST(Cli, BennettLambda) {
  auto r = run({"factor", kBennett, "--lambda", "3,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("F1 = t - i + eps*(-2 + 1.5*i - 3*j + 1.5*k)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F2 = t - k + eps*(2 - 3.5*i + 2*j - 1.5*k)"), std::string::npos) << r.out;
}

TEST(Cli, BennettMechanismJson) {
  auto r = run({"mechanism", kBennett, "--legs", "motion,lambda:3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["label"], "RRCC");
  std::vector<double> d;
  for (const auto& l : j["links"]) d.push_back(l["distance"].get<double>());
  EXPECT_EQ(d, (std::vector<double>{2.0, 2.0, 2.5, 2.5}));
  EXPECT_EQ(j["legs"][1]["joints"][0]["axis"]["point_on_axis"], Json::parse("[0, -1.5, -3]"));
}

TEST(Cli, QuadraticMechanism) {
  auto r = run({"mechanism", kQuadratic, "--legs", "motion-first,motion-last"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["label"], "RCRC");
}

TEST(Cli, JsonIsDeterministic) {
  std::vector<std::string> args{"enumerate", kBennett, "--family-samples", "3", "--json"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto m1 = run({"mechanism", kQuadratic, "--legs", "motion-first,motion-last"});
  auto m2 = run({"mechanism", kQuadratic, "--legs", "motion-first,motion-last"});
  EXPECT_EQ(m1.out, m2.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"norm", "2 t"}).code, 1);
  EXPECT_EQ(run({"factor", kBennett, "--lambda", "3"}).code, 1);
  EXPECT_EQ(run({"mechanism", kBennett, "--legs", "motion"}).code, 1);
  EXPECT_EQ(run({"mechanism", kBennett, "--legs", "motion,bogus"}).code, 1);
  EXPECT_EQ(run({"factor", "(t-1)^2*(t-i) + eps*(t-j)"}).code, 2);
  EXPECT_EQ(run({"factor", "t^2 + 1 + eps*i"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ProjectReduce) {
  auto full = run({"project", kQuadratic, "--json"});
  auto reduced = run({"project", kQuadratic, "--reduce", "--json"});
  ASSERT_EQ(full.code, 0);
  EXPECT_EQ(Json::parse(full.out)["coefficients"].size(), 7u);
  EXPECT_EQ(Json::parse(reduced.out)["coefficients"].size(), 5u);
}

TEST(Cli, TrajectoryCsv) {
  auto r = run({"trajectory", "t - i - eps*j", "--point", "0,0,0", "--t-min", "0", "--t-max", "1", "--steps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  // t = 0: rotation by pi about the axis (0,0,-1) + R(1,0,0) sends the origin to (0,0,-2)
  EXPECT_EQ(r.out, "t,x,y,z\n0,0,0,-2\n1,0,1,-1\n");
}

TEST(Cli, Circularity) {
  auto r = run({"circularity", "((t-i)*(t-k) + eps*(t-j))*(t-k)^2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["entirely_circular"].get<bool>());
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("DQF_TOLERANCE", "garbage", 1);
  EXPECT_EQ(run({"norm", "t"}).code, 1);
  ::setenv("DQF_TOLERANCE", "1e-10", 1);
  EXPECT_EQ(run({"norm", "t"}).code, 0);
  ::unsetenv("DQF_TOLERANCE");
}
