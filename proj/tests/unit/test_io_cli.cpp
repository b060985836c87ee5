#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aniso/cli.hpp"
#include "aniso/errors.hpp"
#include "aniso/io.hpp"

using namespace aniso;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("aniso_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("integrand spec parsing is strict") {
  CHECK(parse_integrand_spec(Json::parse(R"({"kind": "hexic2d"})")).n == 1);
  CHECK(parse_integrand_spec(Json::parse(R"({"kind": "hexic3d", "derivative_mode": "numeric", "h": 1e-5})")).h ==
        1e-5);
  const IntegrandSpec c =
      parse_integrand_spec(Json::parse(R"({"n": 1, "kind": "custom-polynomial", "coefficients": [[1, 6, 0], [1, 0, 6]]})"));
  REQUIRE(c.coefficients.size() == 2);
  CHECK(c.coefficients[1].exponents[1] == 6);
  CHECK_THROWS_AS(parse_integrand_spec(Json::parse(R"({"kind": "hexic2d", "colour": 1})")), ValidationError);
  CHECK_THROWS_AS(parse_integrand_spec(Json::parse(R"({"kind": "hexic2d", "n": 2})")), ValidationError);
  CHECK_THROWS_AS(parse_integrand_spec(Json::parse(R"({"kind": "isotropic"})")), ValidationError);
  CHECK_THROWS_AS(parse_integrand_spec(Json::parse(R"({"n": 1, "kind": "custom-polynomial", "coefficients": [[1, 6]]})")),
                  ValidationError);
  CHECK_THROWS_AS(parse_integrand_spec(Json::parse(R"({"kind": "hexic2d", "derivative_mode": "symbolic"})")),
                  ValidationError);
}

TEST_CASE("arc spec parsing is strict") {
  const ArcSpec s = parse_arc_spec(Json::parse(R"({"arcs": [{"from": 0.5, "to": 1.0}], "units": "radians"})"));
  REQUIRE(s.arcs.size() == 1);
  CHECK(s.arcs[0].to == 1.0);
  CHECK_THROWS_AS(parse_arc_spec(Json::parse(R"({"arcs": [{"from": 0.5, "to": 1.0}], "units": "degrees"})")),
                  ValidationError);
  CHECK_THROWS_AS(parse_arc_spec(Json::parse(R"({"arcs": [{"from": 0.5, "upto": 1.0}]})")), ValidationError);
  CHECK_THROWS_AS(parse_arc_spec(Json::parse(R"({"arcs": []})")), ValidationError);
}

TEST_CASE("JSON output has sorted keys and 17 significant digits") {
  const std::string s = dump_json(Json{{"b", 0.1}, {"a", 1}});
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("0.10000000000000001") != std::string::npos);
}

TEST_CASE("cli frontier report carries the landmarks and is deterministic") {
  const auto dir = scratch("frontier");
  std::string report;
  REQUIRE(run({"frontier", "--integrand", "hexic2d", "--out", dir.string(), "--report", "--svg"}, &report) == 0);
  const Json j = Json::parse(report);
  CHECK(std::abs(j["theta1_over_pi"].get<double>() - 0.1161397636) < 1e-9);
  const std::string csv1 = read_file(dir / "frontier.csv");
  const std::string json1 = read_file(dir / "report.json");
  CHECK(read_file(dir / "frontier.svg").find("stroke-dasharray") != std::string::npos);
  REQUIRE(run({"frontier", "--integrand", "hexic2d", "--out", dir.string()}) == 0);
  CHECK(read_file(dir / "frontier.csv") == csv1);
  CHECK(read_file(dir / "report.json") == json1);
}

TEST_CASE("cli classify and flow") {
  const auto dir = scratch("classify");
  std::string report;
  REQUIRE(run({"classify", "--curve", "Cgamma1", "--out", dir.string(), "--report"}, &report) == 0);
  CHECK(Json::parse(report)["verdict"] == "CAMC");
  REQUIRE(run({"classify", "--curve", "Cgamma5", "--out", dir.string(), "--report"}, &report) == 0);
  CHECK(Json::parse(report)["verdict"] == "NotCAMC");
  REQUIRE(run({"flow", "--base", "wulff", "--dissipation", "--out", dir.string(), "--report"}, &report) == 0);
  const Json f = Json::parse(report);
  CHECK(f["within_tolerance"] == true);
  CHECK(f["richardson_ratio"].get<double>() > 50.0);
  REQUIRE(run({"flow", "--base", "circle-isotropic", "--out", dir.string(), "--report"}, &report) == 0);
  CHECK(std::abs(Json::parse(report)["lambda_expected"].get<double>() + 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("cli exit codes") {
  const auto dir = scratch("codes");
  CHECK(run({"frontier", "--integrand", "nope", "--out", dir.string()}) == 2);
  CHECK(run({"classify", "--curve", "Cgamma9", "--out", dir.string()}) == 2);
  CHECK(run({"flow", "--t", "2", "--out", dir.string()}) == 2);
  CHECK(run({"enumerate", "--cap", "3", "--out", dir.string()}) == 4);
  CHECK(run({"bogus"}) == 2);
  std::ofstream(dir / "bad.json") << R"({"kind": "hexic2d", "extra": true})";
  CHECK(run({"wulff", "--integrand", (dir / "bad.json").string(), "--out", dir.string()}) == 2);
}
