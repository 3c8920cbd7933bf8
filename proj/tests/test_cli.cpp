#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "expasym/cli/cli.hpp"
#include "json.hpp"

using namespace expasym;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "expasym");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("moments table") {
  const auto r = run({"moments", "--family", "bernstein", "--s-max", "4", "--format", "text"});
  CHECK(r.code == kExitPass);
  // 3 phi^2/n^2 + (phi phi'^2 + phi^2 phi'')/n^3 with phi = x - x^2
  CHECK(r.out.find("mu_{n,4}(x) = (3*x^2 - 6*x^3 + 3*x^4)/n^2 + (x - 7*x^2 + 12*x^3 - 6*x^4)/n^3\n") !=
        std::string::npos);
  CHECK(r.out.find("mu_{n,2}(x) = (x - x^2)/n\n") != std::string::npos);
  CHECK(r.out.find("mu_{n,1}(x) = 0\n") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"moments", "--family", "szasz", "--s-max", "4", "--format", "json"}).out);
  CHECK(j["family"] == "szasz");
  CHECK(j["moments"][4]["expansion"] == "3*x^2/n^2 + x/n^3");
  CHECK(j["moments"][4]["vanishing_order"] == 2);
  CHECK(j["moments"][1]["vanishing_order"].is_null());

  const auto synthetic = run({"moments", "--family", "synthetic", "--s-max", "2"});
  CHECK(synthetic.code == kExitPass);
  CHECK(synthetic.out.find("O(1/n^3)") != std::string::npos);
  CHECK(synthetic.out.find("exact: ") != std::string::npos);
}

TEST_CASE("evaluate") {
  const auto r = run({"evaluate", "--family", "szasz", "--f", "poly:0,0,1", "--x", "1", "--n", "10"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("value: 1.1\n") != std::string::npos);
  const auto exact = run({"evaluate", "--family", "bernstein", "--f", "poly:0,0,1", "--x", "1/2", "--n", "2"});
  CHECK(exact.out.find("value: 3/8\n") != std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"evaluate", "--family", "baskakov", "--f", "poly:0,0,1", "--x", "1", "--n", "10", "--r", "1", "--format", "json"})
          .out);
  CHECK(j["value"] == "2.3");
  CHECK(j["exact"] == false);
  CHECK(j["config"]["precision_bits"] == 256);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--family", "bernstein", "--f", "exp:1", "--x", "2/5", "--r", "2", "--q", "1", "--grid",
                      "64:6", "--format", "json"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["fitted_order"].get<double>() == doctest::Approx(-2.0).epsilon(0.05));
  CHECK(j["grid"].size() == 6);

  const auto csv = run({"verify", "--family", "szasz", "--f", "sin:1,0", "--x", "1", "--r", "1", "--grid", "64:4",
                        "--format", "csv"});
  CHECK(csv.code == kExitPass);
  CHECK(csv.out.rfind("n,value,prediction,residual,ratio\n", 0) == 0);
}

TEST_CASE("failing study exits 1") {
  // A fast oscillation on a tiny grid is far from the asymptotic regime.
  const auto r = run({"verify", "--family", "bernstein", "--f", "sin:30,0", "--x", "1/2", "--q", "2", "--grid", "2:4"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("voronovskaja, extrapolate and identities") {
  const auto v = run({"voronovskaja", "--family", "bernstein", "--f", "exp:1", "--x", "1/4", "--r", "1", "--grid", "512:5"});
  CHECK(v.code == kExitPass);
  const auto e = run({"extrapolate", "--family", "bernstein", "--f", "exp:1", "--x", "1/2", "--grid", "64:6",
                      "--orders", "1", "--format", "json"});
  CHECK(e.code == kExitPass);
  const auto je = nlohmann::json::parse(e.out);
  CHECK(je["levels"].size() == 2);
  CHECK(je["levels"][1]["fitted_order"].get<double>() <= je["levels"][0]["fitted_order"].get<double>() - 0.8);

  const auto exact = run({"identities", "--family", "bernstein", "--f", "poly:1,2,3", "--x", "1/3", "--grid", "4:4",
                          "--format", "json"});
  CHECK(exact.code == kExitPass);
  const auto ji = nlohmann::json::parse(exact.out);
  for (const auto& row : ji["defects"]) {
    CHECK(row["defect"] == "0");
    CHECK(row["exact"] == true);
  }
  const auto approx = run({"identities", "--family", "baskakov", "--f", "poly:0,0,0,1", "--x", "1", "--grid", "8:3"});
  CHECK(approx.code == kExitPass);
  const auto synthetic = run({"identities", "--family", "synthetic", "--f", "poly:0,1", "--x", "1/2", "--grid", "4:2"});
  CHECK(synthetic.code == kExitPass);
  CHECK(synthetic.out.find("ode check skipped") != std::string::npos);
}

TEST_CASE("expansion table") {
  const auto r = run({"expansion", "--family", "szasz", "--k-max", "2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("a_2(f, x) = (x/6) f^(3)(x) + (x^2/8) f^(4)(x)\n") != std::string::npos);
  const auto bad = run({"expansion", "--family", "synthetic"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("NotPureExponentialIndex") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with the error name") {
  struct Case {
    std::vector<std::string> args;
    const char* needle;
  };
  const std::vector<Case> cases{
      {{}, "usage error"},
      {{"bogus"}, "usage error"},
      {{"verify", "--family", "nope", "--x", "1/2"}, "InvalidArgument"},
      {{"verify", "--x", "3"}, "OutOfDomain"},
      {{"verify", "--x", "1/2", "--grid", "64"}, "grid must look like"},
      {{"verify", "--x", "1/2", "--grid", "a:b"}, "grid must look like"},
      {{"verify", "--x", "1/2", "--q", "0"}, "q must lie"},
      {{"verify", "--x", "1/2", "--f", "cos:1"}, "ParseError"},
      {{"verify", "--x", "x"}, "ParseError"},
      {{"verify"}, "--x is required"},
      {{"evaluate", "--family", "szasz", "--f", "exp:1", "--x", "1"}, "GrowthBoundViolated"},
      {{"evaluate", "--family", "bernstein", "--x", "1/2", "--n", "2", "--r", "3"}, "DerivativeOrderExceedsDegree"},
      {{"evaluate", "--family", "synthetic", "--x", "1/2"}, "NoEvaluator"},
      {{"voronovskaja", "--family", "synthetic", "--x", "1/2"}, "NoEvaluator"},
      {{"identities", "--family", "bernstein", "--x", "0"}, "OutOfDomain"},
      {{"identities", "--family", "synthetic", "--f", "exp:1", "--x", "1/2"}, "NoEvaluator"},
      {{"moments", "--format", "xml"}, "usage error"},
      {{"moments", "--precision", "8"}, "precision must be"},
      {{"moments", "--tol", "-1"}, "tol must be positive"},
      {{"extrapolate", "--x", "1/2", "--grid", "64:2", "--orders", "1,2"}, "more grid levels"},
      {{"extrapolate", "--x", "1/2", "--orders", "0"}, "orders must be"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.needle);
    const auto r = run(c.args);
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find(c.needle) != std::string::npos);
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output files are byte-identical across runs") {
  const auto dir = std::filesystem::temp_directory_path() / "expasym_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  const std::vector<std::string> args{"verify", "--family", "baskakov", "--f", "exp:-1", "--x", "1", "--r", "1",
                                      "--q", "2", "--grid", "32:5", "--format", "json", "--output"};
  auto with = [&](const std::filesystem::path& p) {
    auto v = args;
    v.push_back(p.string());
    return run(v);
  };
  const auto ra = with(a);
  const auto rb = with(b);
  CHECK(ra.code == kExitPass);
  CHECK(ra.out.empty());
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("precision from the environment") {
  ::setenv("EXPASYM_PRECISION_BITS", "128", 1);
  const auto r = run({"verify", "--x", "1/2", "--grid", "16:3", "--format", "json"});
  const auto flag = run({"verify", "--x", "1/2", "--grid", "16:3", "--format", "json", "--precision", "192"});
  ::setenv("EXPASYM_PRECISION_BITS", "zero", 1);
  const auto bad = run({"moments"});
  ::unsetenv("EXPASYM_PRECISION_BITS");
  CHECK(nlohmann::json::parse(r.out)["config"]["precision_bits"] == 128);
  CHECK(nlohmann::json::parse(flag.out)["config"]["precision_bits"] == 192);
  CHECK(bad.code == kExitUsage);
}
