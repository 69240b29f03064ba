#include "conecat/cli.hpp"
#include "conecat/io.hpp"
#include "conecat/model.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using conecat::Json;
using conecat::kPi;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = conecat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, ParseAngle) {
  EXPECT_DOUBLE_EQ(conecat::cli::parse_angle("pi/2").value, kPi / 2);
  EXPECT_DOUBLE_EQ(conecat::cli::parse_angle("2pi/3").value, 2 * kPi / 3);
  EXPECT_DOUBLE_EQ(conecat::cli::parse_angle("2*pi/3").value, 2 * kPi / 3);
  EXPECT_DOUBLE_EQ(conecat::cli::parse_angle("pi").value, kPi);
  const auto d = conecat::cli::parse_angle("3.14159265");
  EXPECT_NEAR(d.tolerance, 5e-9, 1e-15);
  EXPECT_EQ(conecat::cli::parse_angle("1.5").tolerance, 0.05);
  EXPECT_THROW(conecat::cli::parse_angle("tau"), std::exception);
}

TEST(Cli, TrigSolveOctant) {
  const auto j = run_json({"trig", "solve", "--kappa", "4", "--angles", "pi/2,pi/2,pi/2"});
  for (const auto& s : j["sides"]) EXPECT_NEAR(s.get<double>(), kPi / 4, 1e-12);
  EXPECT_NEAR(j["area"].get<double>(), kPi / 8, 1e-12);
  EXPECT_TRUE(j["large"].get<bool>());
}

TEST(Cli, SurfaceCertifyBuiltins) {
  EXPECT_EQ(run_json({"surface", "certify", "--builtin", "octa-cover"})["verdict"], "CAT_CONFIRMED");
  EXPECT_EQ(run_json({"surface", "certify", "--builtin", "round4"})["verdict"], "CAT_CONFIRMED");
  EXPECT_EQ(run_json({"surface", "certify", "--builtin", "octant-double"}, 1)["verdict"], "NOT_CAT");
}

TEST(Cli, CoverSaveAndReload) {
  const auto path = (std::filesystem::temp_directory_path() / "conecat_cli_octa.json").string();
  const auto built = run_json({"surface", "cover", "--kappa", "4", "--angles", "pi/2,pi/2,pi/2", "--mult", "2,2,2", "--save", path});
  EXPECT_EQ(built["triangles"], 8);
  EXPECT_EQ(built["euler_characteristic"], 2);
  const auto loaded = run_json({"surface", "build", "--file", path});
  EXPECT_EQ(loaded["fingerprint"], built["fingerprint"]);
  EXPECT_EQ(run_json({"surface", "certify", "--file", path})["verdict"], "CAT_CONFIRMED");
  std::remove(path.c_str());
}

TEST(Cli, ArrangementCommands) {
  const auto chern = run_json({"arrangement", "chern", "--name", "A3_0_3", "--b", "2"});
  EXPECT_EQ(chern["c1_squared"], "9/4");
  EXPECT_EQ(chern["euler_e"], "3/4");
  EXPECT_EQ(chern["verdict"], "BALL_QUOTIENT_EQUALITY");
  const auto kummer = run_json({"arrangement", "kummer", "--name", "A1_6", "--n", "2"}, 1);
  EXPECT_EQ(kummer["verdict"], "NOT_CAT");
  EXPECT_EQ(run_json({"arrangement", "certify", "--name", "A1_7", "--b", "2"})["verdict"], "CAT_CONFIRMED");
  EXPECT_EQ(run({"arrangement", "chern", "--name", "A3_0_3", "--b", "3"}).code, 2);
}

TEST(Cli, ConeCommands) {
  EXPECT_EQ(run_json({"cone", "noncat", "--alpha-min", "3.14159265", "--n", "2"}, 1)["verdict"], "NOT_CAT");
  EXPECT_EQ(run_json({"cone", "noncat", "--alpha-min", "pi/2", "--n", "3"})["verdict"], "UNDETERMINED");
  EXPECT_EQ(run({"cone", "hemisphere", "--points", "1,0,0;-1,0,0"}).code, 0);
  EXPECT_EQ(run({"cone", "fiber", "--builtin", "round4"}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"trig", "solve", "--kappa", "4", "--angles", "1,1"}).code, 2);
  EXPECT_EQ(run({"surface", "build", "--file", "/nonexistent/surface.json"}).code, 2);
  EXPECT_EQ(run({"family", "member", "--builtin", "octant-double", "--kappa2", "9"}).code, 2);
  const auto r = run({"trig", "solve", "--kappa", "4", "--angles", "1,1"});
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "surface", "geodesics", "--builtin", "octant-double"},
        std::vector<std::string>{"--format", "json", "arrangement", "incidence", "--name", "A3_0_3"},
        std::vector<std::string>{"--format", "json", "family", "lipschitz", "--angles", "pi/2,pi/2,pi/2", "--kappa2", "0"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(static_cast<void>(Json::parse(a.out)));
  }
}

TEST(Cli, SerialFlagGivesSameAnswer) {
  const auto a = run({"--format", "json", "surface", "geodesics", "--builtin", "octa-cover"});
  const auto b = run({"--serial", "--format", "json", "surface", "geodesics", "--builtin", "octa-cover"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SvgOutput) {
  const auto r = run({"--format", "svg", "arrangement", "incidence", "--name", "A1_6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
  EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}
