#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvop/cli.hpp"
#include "curvop/curvature.hpp"
#include "curvop/forms.hpp"
#include "curvop/tensor_io.hpp"
#include "doctest.h"
#include "json.hpp"

using curvop::BundleForm;
using curvop::CurvatureTensor;
using curvop::Fiber;
using curvop::MultiIndex;
using curvop::run_cli;
using nlohmann::json;
using cx = std::complex<double>;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult res;
  res.code = run_cli(args, out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string write_file(const std::string& name, const std::string& body) {
  const std::string path = temp_path(name);
  std::ofstream f(path);
  REQUIRE(static_cast<bool>(f));
  f << body;
  return path;
}

// c_{1111} = 2 at n = r = 1: operator spectrum [2] at (1,1), [-2] at (0,0).
const char* kLineTensor = "curvop-tensor v1\nn 1\nr 1\nc 1 1 1 1 2 0\n";

// dz (x) e at n = r = 1, bidegree (1,0) on E.
const char* kHolForm =
    "curvop-form v1\nn 1\nr 1\np 1\nq 0\nu [1] [] 1 1 0\n";

const json* find_cell(const json& cells, int p, int q) {
  for (const auto& c : cells)
    if (c.at("bidegree")[0] == p && c.at("bidegree")[1] == q) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("cli version and help") {
  const CliResult ver = cli({"--version"});
  CHECK(ver.code == 0);
  CHECK(ver.out == "curvop 1.0.0\n");
  CHECK(ver.err.empty());

  const CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("matrix") != std::string::npos);
  CHECK(help.out.find("classify") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2 with a message on stderr") {
  const CliResult none = cli({});
  CHECK(none.code == 2);
  CHECK(none.err.find("error:") != std::string::npos);

  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"matrix"}).code == 2);  // missing required options

  const CliResult missing =
      cli({"matrix", "--input", temp_path("curvop_clitest_absent.t"), "--p",
           "1", "--q", "1"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  CHECK(cli({"--format", "yaml", "verify", "--n", "1", "--r", "1"}).code == 2);
  CHECK(cli({"example", "fubini-study", "--n", "0"}).code == 2);
}

TEST_CASE("matrix text output") {
  const std::string path = write_file("curvop_clitest_line.t", kLineTensor);

  const CliResult top = cli({"matrix", "--input", path, "--p", "1", "--q", "1"});
  CHECK(top.code == 0);
  CHECK(top.err.empty());
  CHECK(top.out.find("operator matrix: n=1 r=1 bidegree=(1,1) dim=1") !=
        std::string::npos);
  CHECK(top.out.find("(2+0i)") != std::string::npos);
  CHECK(top.out.find("spectrum: [2]") != std::string::npos);
  CHECK(top.out.find("class: positive") != std::string::npos);

  const CliResult bottom =
      cli({"matrix", "--input", path, "--p", "0", "--q", "0"});
  CHECK(bottom.code == 0);
  CHECK(bottom.out.find("spectrum: [-2]") != std::string::npos);
  CHECK(bottom.out.find("class: negative") != std::string::npos);
}

TEST_CASE("matrix json output") {
  const std::string path = write_file("curvop_clitest_line.t", kLineTensor);
  const CliResult res = cli(
      {"--format", "json", "matrix", "--input", path, "--p", "1", "--q", "1"});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("command") == "matrix");
  CHECK(j.at("input") == path);
  CHECK(j.at("n") == 1);
  CHECK(j.at("r") == 1);
  CHECK(j.at("bidegree") == json::array({1, 1}));
  CHECK(j.at("dim") == 1);
  CHECK(j.at("matrix")[0][0][0].get<double>() == doctest::Approx(2.0));
  CHECK(j.at("matrix")[0][0][1].get<double>() == doctest::Approx(0.0));
  CHECK(j.at("spectrum")[0].get<double>() == doctest::Approx(2.0));
  CHECK(j.at("class") == "positive");
  CHECK(j.contains("tol"));
}

TEST_CASE("matrix rejects out-of-range bidegree and asymmetric input") {
  const std::string path = write_file("curvop_clitest_line.t", kLineTensor);
  const CliResult range =
      cli({"matrix", "--input", path, "--p", "2", "--q", "1"});
  CHECK(range.code == 2);
  CHECK(range.err.find("bidegree (2,1) out of range for n=1") !=
        std::string::npos);

  const std::string bad = write_file("curvop_clitest_skew.t",
                                     "curvop-tensor v1\nn 1\nr 1\n"
                                     "c 1 1 1 1 0 1\n");
  const CliResult rejected =
      cli({"matrix", "--input", bad, "--p", "1", "--q", "1"});
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("Hermitian symmetry violated") != std::string::npos);

  // The Hermitian part of i*delta is zero, so the repaired operator vanishes.
  const CliResult repaired = cli(
      {"matrix", "--input", bad, "--p", "1", "--q", "1", "--symmetrize"});
  CHECK(repaired.code == 0);
  CHECK(repaired.out.find("spectrum: [0]") != std::string::npos);
  CHECK(repaired.out.find("class: zero") != std::string::npos);
}

TEST_CASE("classify json on the projective-space example") {
  const std::string fs_path = temp_path("curvop_clitest_fs2.t");
  const CliResult emit =
      cli({"example", "fubini-study", "--n", "2", "--emit", fs_path});
  REQUIRE(emit.code == 0);
  CHECK(emit.out.find("emitted tensor file: " + fs_path) != std::string::npos);

  const CliResult res =
      cli({"--format", "json", "classify", "--input", fs_path});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("command") == "classify");
  CHECK(j.at("n") == 2);
  CHECK(j.at("r") == 2);

  CHECK(j.at("nakano").at("class") == "semi_positive");
  const json& nspec = j.at("nakano").at("spectrum");
  REQUIRE(nspec.size() == 4);
  CHECK(nspec[0].get<double>() == doctest::Approx(0.0));
  CHECK(nspec[3].get<double>() == doctest::Approx(2.0));

  CHECK(j.at("dual_nakano").at("class") == "positive");
  const json& dspec = j.at("dual_nakano").at("spectrum");
  REQUIRE(dspec.size() == 4);
  CHECK(dspec[0].get<double>() == doctest::Approx(1.0));
  CHECK(dspec[3].get<double>() == doctest::Approx(3.0));

  CHECK(j.at("griffiths").at("heuristic") == true);
  CHECK(j.at("griffiths").at("value").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(j.at("griffiths").at("restarts") == 8);

  CHECK(j.at("chain").at("consistent") == true);
  CHECK(j.at("chain").at("members").size() == 5);
  CHECK(j.at("chain").at("violations").empty());
  CHECK(j.at("chain").at("residuals").at("block").get<double>() <= 1e-13);

  const json& cells = j.at("cells");
  REQUIRE(cells.size() == 9);
  const json* c21 = find_cell(cells, 2, 1);
  REQUIRE(c21 != nullptr);
  CHECK(c21->at("l2_estimate_inferred") == true);
  const json* c22 = find_cell(cells, 2, 2);
  REQUIRE(c22 != nullptr);
  CHECK(c22->at("l2_estimate_inferred") == true);
  CHECK(c22->at("class") == "positive");
  CHECK(c22->at("spectrum")[0].get<double>() == doctest::Approx(3.0));
  const json* c02 = find_cell(cells, 0, 2);
  REQUIRE(c02 != nullptr);
  CHECK(c02->at("class") == "zero");
  CHECK(c02->at("l2_estimate_inferred") == true);  // vanishing operator is >= 0
  const json* c11 = find_cell(cells, 1, 1);
  REQUIRE(c11 != nullptr);
  CHECK(c11->at("l2_estimate_inferred").is_null());
}

TEST_CASE("classify reports a failed top-degree condition for negative input") {
  const std::string path = write_file(
      "curvop_clitest_neg.t", "curvop-tensor v1\nn 1\nr 1\nc 1 1 1 1 -2 0\n");
  const CliResult res = cli({"--format", "json", "classify", "--input", path});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("nakano").at("class") == "negative");
  const json* c11 = find_cell(j.at("cells"), 1, 1);
  REQUIRE(c11 != nullptr);
  CHECK(c11->at("class") == "negative");
  CHECK(c11->at("l2_estimate_inferred") == false);

  const CliResult text = cli({"classify", "--input", path});
  CHECK(text.code == 0);
  CHECK(text.out.find("L2-estimate condition (1,1): inferred to fail") !=
        std::string::npos);
}

TEST_CASE("classify text output") {
  const std::string fs_path = temp_path("curvop_clitest_fs2.t");
  REQUIRE(cli({"example", "fubini-study", "--n", "2", "--emit", fs_path})
              .code == 0);
  const CliResult res = cli({"classify", "--input", fs_path});
  REQUIRE(res.code == 0);
  CHECK(res.out.find("classification: n=2 r=2") != std::string::npos);
  CHECK(res.out.find("class=semi_positive") != std::string::npos);
  CHECK(res.out.find("positivity chain: consistent") != std::string::npos);
  CHECK(res.out.find("coefficient block") != std::string::npos);
  CHECK(res.out.find("operator cones by bidegree (fiber E):") !=
        std::string::npos);
  CHECK(res.out.find("L2-estimate condition (2,1): inferred to hold") !=
        std::string::npos);
}

TEST_CASE("star command writes the dual form") {
  const std::string path = write_file("curvop_clitest_dz.f", kHolForm);

  // Without --output the resulting form file itself goes to stdout.
  const CliResult raw = cli({"star", "--input-form", path});
  REQUIRE(raw.code == 0);
  CHECK(raw.out.rfind("curvop-form v1", 0) == 0);
  std::istringstream in(raw.out);
  const BundleForm v = curvop::read_form(in);
  CHECK(v.hol_degree() == 0);
  CHECK(v.antihol_degree() == 1);
  CHECK(v.fiber() == Fiber::dual);
  CHECK(v.coeff(MultiIndex(1, {}), MultiIndex(1, {1}), 1) == cx(0.0, 1.0));

  const std::string out_path = temp_path("curvop_clitest_stardz.f");
  const CliResult saved =
      cli({"star", "--input-form", path, "--output", out_path});
  REQUIRE(saved.code == 0);
  CHECK(saved.out ==
        "star: wrote (0,1)-form on E* to " + out_path + "\n");
  const BundleForm w = curvop::read_form_file(out_path);
  CHECK(w.coeff(MultiIndex(1, {}), MultiIndex(1, {1}), 1) == cx(0.0, 1.0));

  const CliResult js =
      cli({"--format", "json", "star", "--input-form", path});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("command") == "star");
  CHECK(j.at("input_bidegree") == json::array({1, 0}));
  CHECK(j.at("input_fiber") == "E");
  CHECK(j.at("bidegree") == json::array({0, 1}));
  CHECK(j.at("fiber") == "E*");
  CHECK(j.at("output_file").is_null());
  REQUIRE(j.at("entries").size() == 1);
  const json& e = j.at("entries")[0];
  CHECK(e.at("hol").empty());
  CHECK(e.at("antihol") == json::array({1}));
  CHECK(e.at("lambda") == 1);
  CHECK(e.at("value")[0].get<double>() == doctest::Approx(0.0));
  CHECK(e.at("value")[1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("tilde command keeps the fiber and flips the sign of dz") {
  const std::string path = write_file("curvop_clitest_dz.f", kHolForm);
  const CliResult js =
      cli({"--format", "json", "tilde", "--input-form", path});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("command") == "tilde");
  CHECK(j.at("bidegree") == json::array({1, 0}));  // (n-q, n-p) at n=1
  CHECK(j.at("fiber") == "E");
  REQUIRE(j.at("entries").size() == 1);
  CHECK(j.at("entries")[0].at("value")[0].get<double>() ==
        doctest::Approx(-1.0));
  CHECK(j.at("entries")[0].at("value")[1].get<double>() ==
        doctest::Approx(0.0));
}

TEST_CASE("dual command negates the transposed coefficients") {
  const std::string path = write_file("curvop_clitest_line.t", kLineTensor);

  const CliResult raw = cli({"dual", "--input", path});
  REQUIRE(raw.code == 0);
  CHECK(raw.out.rfind("curvop-tensor v1", 0) == 0);
  // Negation carries 0.0 to -0.0 and the writer is exact, hence "-0".
  CHECK(raw.out.find("c 1 1 1 1 -2 -0") != std::string::npos);

  const std::string out_path = temp_path("curvop_clitest_dual.t");
  const CliResult saved =
      cli({"dual", "--input", path, "--output", out_path});
  REQUIRE(saved.code == 0);
  CHECK(saved.out == "dual: wrote tensor to " + out_path + "\n");
  const CurvatureTensor d = curvop::read_tensor_file(out_path);
  CHECK(d.at(1, 1, 1, 1) == cx(-2.0, 0.0));

  const CliResult js = cli({"--format", "json", "dual", "--input", path});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("command") == "dual");
  CHECK(j.at("output_file").is_null());
  REQUIRE(j.at("entries").size() == 1);
  const json& e = j.at("entries")[0];
  CHECK(e.at("j") == 1);
  CHECK(e.at("k") == 1);
  CHECK(e.at("lambda") == 1);
  CHECK(e.at("mu") == 1);
  CHECK(e.at("value")[0].get<double>() == doctest::Approx(-2.0));
}

TEST_CASE("example fubini-study emits and classifies") {
  // '-' sends the tensor file itself to stdout, replacing the report.
  const CliResult piped =
      cli({"example", "fubini-study", "--n", "2", "--emit", "-"});
  REQUIRE(piped.code == 0);
  CHECK(piped.out.rfind("curvop-tensor v1", 0) == 0);
  CHECK(piped.out.find("classification:") == std::string::npos);
  std::istringstream in(piped.out);
  const CurvatureTensor c = curvop::read_tensor(in);
  const CurvatureTensor want = curvop::fubini_study_tensor(2);
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int m = 1; m <= 2; ++m)
          CHECK(c.at(j, k, l, m) == want.at(j, k, l, m));

  const std::string fs_path = temp_path("curvop_clitest_fs_emit.t");
  const CliResult both =
      cli({"example", "fubini-study", "--n", "2", "--emit", fs_path});
  REQUIRE(both.code == 0);
  CHECK(both.out.find("classification:") != std::string::npos);
  CHECK(both.out.find("emitted tensor file: " + fs_path) != std::string::npos);

  const CliResult js = cli({"--format", "json", "example", "fubini-study",
                            "--n", "2", "--emit", fs_path});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("command") == "example-fubini-study");
  CHECK(j.at("emitted") == fs_path);
  CHECK(j.at("nakano").at("class") == "semi_positive");
}

TEST_CASE("verify command runs the property suite") {
  const CliResult res =
      cli({"verify", "--n", "1", "--r", "1", "--trials", "3", "--seed", "5"});
  CHECK(res.code == 0);
  CHECK(res.out.find("verify: n=1 r=1 trials=3 seed=5") != std::string::npos);
  CHECK(res.out.find("[PASS]") != std::string::npos);
  CHECK(res.out.find("[FAIL]") == std::string::npos);
  CHECK(res.out.find("properties: 15 passed, 0 failed") != std::string::npos);

  const CliResult js = cli({"--format", "json", "verify", "--n", "1", "--r",
                            "1", "--trials", "3", "--seed", "5"});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("command") == "verify");
  CHECK(j.at("all_pass") == true);
  REQUIRE(j.at("properties").size() == 15);
  CHECK(j.at("properties")[0].at("name") == "commutator-oracle-equivalence");
  for (const auto& p : j.at("properties")) CHECK(p.at("pass") == true);
}

TEST_CASE("verify exits 1 when a property fails its tolerance") {
  // A negative tolerance can never be met, so the checks that use it fail.
  const CliResult res = cli(
      {"verify", "--n", "1", "--r", "1", "--trials", "2", "--tol-oracle=-1"});
  CHECK(res.code == 1);
  CHECK(res.out.find("[FAIL]") != std::string::npos);
  CHECK(res.out.find("properties: 13 passed, 2 failed") != std::string::npos);

  const CliResult js =
      cli({"--format", "json", "verify", "--n", "1", "--r", "1", "--trials",
           "2", "--tol-oracle=-1"});
  CHECK(js.code == 1);
  const json j = json::parse(js.out);
  CHECK(j.at("all_pass") == false);
  CHECK(j.at("properties")[0].at("name") == "commutator-oracle-equivalence");
  CHECK(j.at("properties")[0].at("pass") == false);
}
