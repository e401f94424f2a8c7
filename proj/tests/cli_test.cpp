#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "args.hpp"
#include "cli.hpp"
#include "cohgeom/errors.hpp"
#include "support.hpp"

using cohgeom::Complex;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cohgeom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content)
      : path_(std::filesystem::temp_directory_path() /
              ("cohgeom_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
               std::to_string(counter_++) + ".json")) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  [[nodiscard]] std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

// ---------------------------------------------------------------- argument parsing

TEST(CliArgs, ParseComplex) {
  using cohgeom::cli::parse_complex;
  EXPECT_EQ(parse_complex("2"), Complex(2, 0));
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("0.5i"), Complex(0, 0.5));
  EXPECT_EQ(parse_complex("1-2i"), Complex(1, -2));
  EXPECT_EQ(parse_complex("1e-3+2j"), Complex(1e-3, 2));
  EXPECT_EQ(parse_complex("-1.5e+2-1e-1i"), Complex(-150, -0.1));
  EXPECT_THROW(parse_complex(""), cohgeom::UsageError);
  EXPECT_THROW(parse_complex("abc"), cohgeom::UsageError);
  EXPECT_THROW(parse_complex("1+"), cohgeom::UsageError);
}

TEST(CliArgs, ParseLists) {
  using cohgeom::cli::parse_complex_list;
  using cohgeom::cli::parse_real_list;
  EXPECT_EQ(parse_complex_list("1,i,0.5-0.5i"), (std::vector<Complex>{1.0, Complex(0, 1), Complex(0.5, -0.5)}));
  EXPECT_EQ(parse_real_list("0.1,2"), (std::vector<double>{0.1, 2.0}));
  EXPECT_TRUE(parse_real_list("").empty());
  EXPECT_THROW(parse_real_list("1,,2"), cohgeom::UsageError);
}

// ---------------------------------------------------------------- subcommands

TEST(Cli, EmbedConic) {
  const Outcome r = run({"embed", "--p", "1,i", "-N", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["labels"], json::parse("[[2,0],[1,1],[0,2]]"));
  EXPECT_EQ(j["state"]["re"], json::parse("[1.0,0.0,-1.0]"));
  EXPECT_NEAR(j["state"]["im"][1].get<double>(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(j["pseudo_norm"].get<double>(), 4.0);
}

TEST(Cli, EmbedWithSignature) {
  const Outcome r = run({"embed", "--p", "1,0.5", "-N", "3", "--signs", "-1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["space"]["positive"], 2);
  EXPECT_EQ(j["space"]["negative"], 2);
  EXPECT_NEAR(j["pseudo_norm"].get<double>(), std::pow(-1 + 0.25, 3), 1e-14);
}

TEST(Cli, CoherentFamilies) {
  const Outcome su2 = run({"coherent", "--family", "su2", "-N", "2", "--theta", "1", "--phi", "0"});
  ASSERT_EQ(su2.code, 0) << su2.err;
  EXPECT_NEAR(su2.parsed()["state"]["re"][0].get<double>(), std::cos(0.5) * std::cos(0.5), 1e-15);

  const Outcome gl = run({"coherent", "--family", "glauber", "--a", "0.5", "--cutoff", "10"});
  ASSERT_EQ(gl.code, 0) << gl.err;
  EXPECT_EQ(gl.parsed()["state"]["re"].size(), 11u);

  const Outcome ind = run({"coherent", "--family", "indefinite-su11", "-N", "3", "--tau", "1", "--phi", "0"});
  ASSERT_EQ(ind.code, 0) << ind.err;
  EXPECT_NEAR(ind.parsed()["pseudo_norm"].get<double>(), -1.0, 1e-12);

  EXPECT_EQ(run({"coherent", "--family", "su11", "--xi", "1.2"}).code, 2);
  EXPECT_EQ(run({"coherent", "--family", "nonsense"}).code, 2);
}

TEST(Cli, MetricAtTheOrigin) {
  const Outcome r = run({"metric", "--chart", "fs", "--zeta", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["real_form"], json::parse("[[4.0,0.0],[0.0,4.0]]"));
  const Outcome h = run({"metric", "--chart", "hyperbolic", "--zeta", "0.5"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_NEAR(h.parsed()["real_form"][0][0].get<double>(), 4.0 / 0.5625, 1e-14);
  EXPECT_EQ(run({"metric", "--chart", "hyperbolic", "--zeta", "1.5"}).code, 2);
}

TEST(Cli, PullbackAndCurvature) {
  const Outcome p = run({"pullback", "--family", "veronese", "-N", "2", "--point", "0,0"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_NEAR(p.parsed()["metric"][0][0].get<double>(), 8.0, 1e-6);

  const Outcome c = run({"curvature", "--family", "veronese", "-N", "3", "--zeta", "0.4+0.1i"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NEAR(c.parsed()["curvature"].get<double>(), 2.0 / 3.0, 1e-4);

  EXPECT_EQ(run({"pullback", "--family", "su2", "-N", "2", "--point", "1"}).code, 2);
}

TEST(Cli, DistanceAndKernel) {
  const Outcome d = run({"distance", "--v", "1,0", "--w", "0,1"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out, "{\"distance\":3.141592653589793}\n");

  const Outcome k = run({"kernel", "--zeta", "0.5", "--chi", "0.5"});
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_NEAR(k.parsed()["kernel"]["re"].get<double>(), 0.56588, 1e-5);
  EXPECT_EQ(run({"kernel", "--zeta", "1", "--chi", "0"}).code, 2);
  EXPECT_EQ(run({"distance", "--v", "1,0", "--w", "0,0"}).code, 2);
}

TEST(Cli, Hierarchy) {
  const Outcome r = run({"hierarchy", "--k0", "1", "--depth", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed(), json::parse("[1,2,5,20,230]"));
  EXPECT_EQ(run({"hierarchy", "--k0", "4", "--depth", "3"}).parsed().back(), 7259);
  EXPECT_EQ(run({"hierarchy", "--k0", "1", "--depth", "12"}).code, 2);
}

TEST(Cli, SweepOverDegree) {
  const Outcome r = run({"sweep", "--family", "veronese", "--param", "N", "--from", "1", "--to", "4", "--count", "4",
                         "--quantity", "curvature", "--point", "0.3,0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rows = r.parsed()["rows"];
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(rows[i]["value"].get<double>(), 2.0 / (i + 1.0), 1e-4);
}

TEST(Cli, SweepOverAParameterIsFlatForHomogeneousFamilies) {
  const Outcome r = run({"sweep", "--family", "su2", "-N", "3", "--param", "theta", "--values", "0.5,1,2",
                         "--quantity", "metric", "--point", "0,0", "--entry", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : r.parsed()["rows"]) EXPECT_NEAR(row["value"].get<double>(), 3.0, 1e-6);
}

TEST(Cli, SweepEmptyGridIsNotAnError) {
  const Outcome r = run({"sweep", "--family", "veronese", "--param", "N", "--values", "", "--quantity", "curvature"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.parsed()["rows"].empty());

  const Outcome csv = run({"--format", "csv", "sweep", "--family", "veronese", "--param", "N", "--values", "",
                           "--quantity", "curvature"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 1);
}

TEST(Cli, MalformedSweepsAreUsageErrors) {
  EXPECT_EQ(run({"sweep", "--family", "veronese", "--param", "N", "--values", "1,x", "--quantity", "curvature"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "veronese", "--param", "bogus", "--values", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "veronese", "--param", "N", "--values", "1", "--quantity", "bogus"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "veronese", "--param", "N", "--from", "1"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const Outcome ok = run({"verify", "conic", "--samples", "3"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(ok.parsed()["pass"].get<bool>());

  const Outcome strict = run({"--tol", "1e-18", "verify", "conic", "--samples", "3"});
  EXPECT_EQ(strict.code, 1);
  EXPECT_FALSE(strict.parsed()["pass"].get<bool>());
  EXPECT_NE(strict.err.find("FAIL"), std::string::npos);

  EXPECT_EQ(run({"verify", "no-such-check"}).code, 2);
  EXPECT_EQ(run({"verify", "conic", "--samples", "0"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"embed", "--p", "1,1"}).code, 0);
  EXPECT_EQ(run({"embed", "--p", "1,1", "-N", "0"}).code, 2);
  EXPECT_EQ(run({"embed", "--p", "0,0", "-N", "2"}).code, 2);
  EXPECT_EQ(run({"embed", "--p", "1,q", "-N", "2"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "hierarchy"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SameSeedGivesIdenticalBytes) {
  const Outcome a = run({"--seed", "9", "verify", "rational", "--samples", "4"});
  const Outcome b = run({"--seed", "9", "verify", "rational", "--samples", "4"});
  const Outcome c = run({"--seed", "10", "verify", "rational", "--samples", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, CsvOutput) {
  const Outcome r = run({"--format", "csv", "hierarchy", "--k0", "1", "--depth", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(r.out.find('\n') + 1), "0,1\n1,2\n2,5\n");

  const Outcome v = run({"--format", "csv", "verify", "conic", "--samples", "2"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out.substr(0, v.out.find('\n')), "name,pass,max_deviation,tolerance");
}

TEST(Cli, ConfigFileSuppliesDefaultsAndFlagsWin) {
  const TempFile cfg(R"({"k0": 1, "depth": 3})");
  const Outcome r = run({"hierarchy", "--config", cfg.path()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed(), json::parse("[1,2,5,20]"));

  const Outcome over = run({"hierarchy", "--config=" + cfg.path(), "--depth", "1"});
  ASSERT_EQ(over.code, 0) << over.err;
  EXPECT_EQ(over.parsed(), json::parse("[1,2]"));

  const TempFile bad("[1,2]");
  EXPECT_EQ(run({"hierarchy", "--config", bad.path()}).code, 2);
  EXPECT_EQ(run({"hierarchy", "--config", "/nonexistent/cohgeom.json"}).code, 2);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("COHGEOM_TOL", "1e-18", 1);
  const Outcome strict = run({"verify", "conic", "--samples", "2"});
  ::unsetenv("COHGEOM_TOL");
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(run({"verify", "conic", "--samples", "2"}).code, 0);
}
