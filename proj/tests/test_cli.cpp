#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "univalent/cli.hpp"

using namespace univalent;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"univalent"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("coeffs and value for n = 2") {
  const Outcome c = invoke({"coeffs", "--n", "2"});
  CHECK(c.code == 0);
  const Json j = Json::parse(c.out);
  CHECK(j["n"] == 2);
  CHECK(j["coeffs"][0].get<double>() == 1.0);
  CHECK(j["coeffs"][1].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(c.out.rfind("{\"n\":2,\"coeffs\":[1.0,0.333333333333333", 0) == 0);

  const Outcome v = invoke({"value", "--n", "2"});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["j_n"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto* cmd : {"coeffs", "value", "verify", "oracle"}) {
    const Outcome o = invoke({cmd, "--n", "3", "--grid", "512"});
    REQUIRE(!o.out.empty());
    CHECK(Json::parse(o.out).dump() + "\n" == o.out);
  }
}

TEST_CASE("repeated runs are byte identical") {
  const Outcome a = invoke({"boundary", "--n", "5", "--grid", "64"});
  const Outcome b = invoke({"boundary", "--n", "5", "--grid", "64"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("boundary CSV layout") {
  const Outcome o = invoke({"boundary", "--n", "2", "--grid", "16"});
  CHECK(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,u,v");
  std::string last;
  int rows = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 16);
  CHECK(o.out.back() == '\n');
  CHECK(last.rfind("1.5707963267948966,", 0) == 0);
  CHECK(last.find(",0.66666666666666") != std::string::npos);
}

TEST_CASE("boundary JSON") {
  const Outcome o = invoke({"boundary", "--n", "1", "--grid", "16", "--format", "json"});
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["samples"].size() == 16);
  CHECK(j["samples"][0][1].get<double>() == 1.0);
}

TEST_CASE("verify aggregates every certificate") {
  const Outcome o = invoke({"verify", "--n", "4", "--grid", "4096"});
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["passed"] == true);
  std::vector<std::string> names;
  for (const auto& r : j["certificates"]) names.push_back(r["statement"].get<std::string>());
  CHECK(names == std::vector<std::string>{"A", "B", "C", "D", "AUX", "SIMPLE_CURVE",
                                          "NONNEGATIVITY", "ORACLE_AGREEMENT"});
  const Outcome one = invoke({"verify", "--n", "1", "--grid", "512"});
  CHECK(one.code == 0);
}

TEST_CASE("verify CSV") {
  const Outcome o = invoke({"verify", "--n", "2", "--grid", "512", "--format", "csv"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("statement,passed,", 0) == 0);
}

TEST_CASE("certificate failure exits 2 after writing the artifact") {
  // the coarse grid cannot resolve the oracle to 5e-4
  const Outcome o = invoke({"oracle", "--n", "12", "--grid", "96"});
  CHECK(o.code == 2);
  CHECK(Json::parse(o.out)["agreement"]["passed"] == false);
  CHECK(Json::parse(o.err)["error"] == "certificate");
}

TEST_CASE("oracle JSON") {
  const Outcome o = invoke({"oracle", "--n", "3", "--grid", "8192"});
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["c"].size() == 2);
  CHECK(std::abs(j["c"][0].get<double>() - j["fejer_bound"].get<double>()) <= 1e-5);
}

TEST_CASE("T-fold commands") {
  const Outcome c = invoke({"coeffs", "--n", "7", "--t", "4"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["t_fold"] == 4);
  const Outcome v = invoke({"value", "--n", "3", "--t", "1"});
  CHECK(Json::parse(v.out).contains("koebe_radius"));
  const Outcome o = invoke({"oracle", "--n", "3", "--t", "4"});
  CHECK(o.code == 1);
}

TEST_CASE("render writes an SVG file") {
  const auto path = std::filesystem::temp_directory_path() / "univalent_test_render.svg";
  const std::string arg = path.string();
  const Outcome o = invoke({"render", "--n", "7", "--t", "4", "--grid", "1024", "--out", arg.c_str()});
  CHECK(o.code == 0);
  const std::string svg = slurp(path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("fill=\"none\"") != std::string::npos);
  CHECK(svg.find(" Z\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("usage and domain errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"coeffs"}).code == 1);
  CHECK(invoke({"bogus", "--n", "2"}).code == 1);
  CHECK(invoke({"coeffs", "--n", "2", "--format", "svg"}).code == 1);
  CHECK(invoke({"render", "--n", "2", "--format", "json"}).code == 1);
  CHECK(invoke({"coeffs", "--n", "two"}).code == 1);

  const Outcome zero = invoke({"coeffs", "--n", "0"});
  CHECK(zero.code == 1);
  CHECK(Json::parse(zero.err)["error"] == "domain");
  CHECK(invoke({"boundary", "--n", "2", "--grid", "8"}).code == 1);
}

TEST_CASE("help exits 0") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("coeffs") != std::string::npos);
}

TEST_CASE("unwritable output exits 3") {
  const Outcome o = invoke({"coeffs", "--n", "2", "--out", "/nonexistent-dir/x.json"});
  CHECK(o.code == 3);
  CHECK(Json::parse(o.err)["error"] == "io");
}

TEST_CASE("format defaults and allowed pairs") {
  CHECK(cli::default_format(cli::Command::Render) == cli::Format::Svg);
  CHECK(cli::default_format(cli::Command::Boundary) == cli::Format::Csv);
  CHECK(cli::default_format(cli::Command::Oracle) == cli::Format::Json);
  CHECK(cli::format_allowed(cli::Command::Verify, cli::Format::Csv));
  CHECK_FALSE(cli::format_allowed(cli::Command::Coeffs, cli::Format::Svg));
  CHECK_FALSE(cli::format_allowed(cli::Command::Render, cli::Format::Csv));
  const char* argv[] = {"univalent", "render", "--n", "3"};
  const cli::RunConfig cfg = cli::parse_args(4, argv);
  CHECK(cfg.command == cli::Command::Render);
  CHECK(cfg.format == cli::Format::Svg);
  CHECK(cfg.grid_size == 4096);
  CHECK(cfg.t_fold == 2);
  CHECK(cfg.output_path == "-");
}
