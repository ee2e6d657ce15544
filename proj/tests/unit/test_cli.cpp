#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <cycaut_cli/cli.hpp>

using namespace cycaut;
using cycaut::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("cycaut_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("classify") {
  const auto ham = write_temp("ham", R"({"n":7,"q":2,"defining_set":[1]})");
  auto r = run({"classify", ham});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "PGammaL(3,2), order 168\n");
  r = run({"classify", ham, "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)["order"] == 168);
  r = run({"--format=json", "classify", ham});
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)["name"] == "PGammaL(3,2)");
}

TEST_CASE("equiv") {
  const auto a = write_temp("a", R"({"n":9,"connection":[1,8]})");
  const auto b = write_temp("b", R"({"n":9,"connection":[2,7]})");
  const auto c = write_temp("c", R"({"n":9,"connection":[1,8,3,6]})");
  auto r = run({"equiv", a, b});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "equivalent, witness multiplier a=2\n");
  r = run({"equiv", a, c, "--jobs", "2"});
  CHECK(r.code == cli::kNegative);
  const auto code = write_temp("code", R"({"n":9,"q":2,"defining_set":[1]})");
  CHECK(run({"equiv", a, code}).code == cli::kParseError);
}

TEST_CASE("errors and unsupported inputs") {
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"bogus"}).code == cli::kParseError);
  CHECK(run({"classify", "/nonexistent/x.json"}).code == cli::kParseError);
  const auto bad = write_temp("bad", "{not json");
  const auto r = run({"classify", bad});
  CHECK(r.code == cli::kParseError);
  CHECK(r.err.find("error:") == 0);
  const auto six = write_temp("six", R"({"n":6,"q":5,"defining_set":[1]})");
  CHECK(run({"classify", six}).code == cli::kUnsupported);
  const auto x = write_temp("x16", R"({"n":16,"connection":[1,15]})");
  CHECK(run({"equiv", x, x}).code == cli::kUnsupported);
  CHECK(run({"brand", "5", "3", "4", "list", "--cap", "100"}).code == cli::kUnsupported);
  CHECK(run({"--format", "xml", "table2"}).code == cli::kParseError);
}

TEST_CASE("brand") {
  auto r = run({"brand", "3", "2", "2", "count"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("|Q^2| formula 162, enumerated 162") != std::string::npos);
  CHECK(r.out.find("|Q_1^2| formula 81, enumerated 81") != std::string::npos);
  r = run({"brand", "5", "2", "1", "count", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["Q"]["enumerated"] == 500);
  CHECK(j["Q_1"]["enumerated"] == 125);
  r = run({"brand", "3", "2", "1", "list"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 54);
  r = run({"brand", "7", "2", "3", "check", "--seed", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "Q^3: 200 samples, 0 failures\n");
  CHECK(run({"brand", "2", "3", "1", "count"}).code == cli::kParseError);
}

TEST_CASE("table2 exit code reflects the comparison") {
  const auto cells = cli::compute_table2();
  CHECK(cells.size() == 42);
  const bool all = std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.match(); });
  const auto r = run({"table2", "--format", "json"});
  CHECK(r.code == (all ? cli::kOk : cli::kNegative));
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cells"].size() == 42);
  CHECK(j["all_match"] == all);
}
