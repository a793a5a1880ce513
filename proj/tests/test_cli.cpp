#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "ceuler/cli.hpp"

using namespace ceuler;
using namespace ceuler::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("parsing and per-command defaults") {
  auto cfg = parse_args({"table"}).config;
  REQUIRE(cfg);
  CHECK(cfg->command == Command::Table);
  CHECK(cfg->n == IntRange{2, 6});
  CHECK(cfg->alpha == IntRange{2, 2});
  CHECK(cfg->format == Format::Csv);

  cfg = parse_args({"verify"}).config;
  CHECK(cfg->n == IntRange{1, 6});
  CHECK(cfg->alpha == IntRange{1, 3});
  CHECK(cfg->format == Format::Json);

  cfg = parse_args({"recurrence", "--n", "3", "--alpha", "3", "--amended"}).config;
  CHECK(cfg->n == IntRange{3, 3});
  CHECK(cfg->amended);

  cfg = parse_args({"complex", "--n", "3", "--alpha", "2", "--export-geometry", "x.off", "--precision", "4",
                    "--budget", "500", "-j", "3"})
            .config;
  CHECK(cfg->export_geometry == "x.off");
  CHECK(cfg->precision == 4);
  CHECK(cfg->budget == 500u);
  CHECK(cfg->parallelism == 3u);

  CHECK(parse_args({"table", "--route", "gamma"}).config->route == Route::Gamma);
  CHECK(parse_args({"enumerate", "--kind", "permutations"}).config->kind == EnumerateKind::Permutations);
  CHECK(parse_args({"--help"}).help.find("table") != std::string::npos);
  CHECK_FALSE(parse_args({"table", "--help"}).config.has_value());
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_WITH_AS(parse_args({"frobnicate"}), doctest::Contains("frobnicate"), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--n", "5..2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--n", "x"}), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--alpha", "0"}), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--route", "magic"}), UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "--format", "latex"}), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--amended"}), UsageError);
  const auto r = invoke({"table", "--n", "banana"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("banana") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("table output") {
  auto r = invoke({"table", "--n", "2..3", "--alpha", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,alpha,k,coefficient\n2,2,0,1\n2,2,1,3\n3,2,0,1\n3,2,1,10\n3,2,2,13\n");
  for (const char* route : {"closed", "descents", "complex", "gamma"}) {
    const auto alt = invoke({"table", "--n", "2..3", "--alpha", "2", "--route", route});
    CHECK(alt.out == r.out);
  }
  r = invoke({"table", "--n", "2..3", "--format", "latex"});
  CHECK(r.out.find("2 & $3t+1$\\\\") != std::string::npos);
  CHECK(r.out.find("3 & $13t^2+10t+1$\\\\") != std::string::npos);
  r = invoke({"table", "--n", "4", "--alpha", "1..2", "--format", "json"});
  const auto doc = Json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["coefficients"] == Json::array({1, 11, 11, 1}));
  CHECK(doc[1]["coefficients"] == Json::array({1, 25, 91, 75}));
}

TEST_CASE("enumerate output and budget refusal") {
  auto r = invoke({"enumerate", "--n", "2", "--alpha", "2"});
  CHECK(r.code == 0);
  const auto lines = json_lines(r.out);
  CHECK(lines.size() == 5);
  CHECK(lines[0] == Json::parse(R"({"blocks":[[1],[2]],"colors":[0,0]})"));
  r = invoke({"enumerate", "--n", "3", "--alpha", "2", "--kind", "permutations"});
  CHECK(json_lines(r.out).size() == 24);
  r = invoke({"enumerate", "--n", "8", "--alpha", "3", "--budget", "1000"});
  CHECK(r.code == kExitBudget);
  CHECK(r.out.empty());
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("complex census and geometry export") {
  const auto dir = std::filesystem::temp_directory_path() / "ceuler_cli_test";
  std::filesystem::create_directories(dir);
  const auto off = (dir / "p32.off").string();
  auto r = invoke({"complex", "--n", "3", "--alpha", "2", "--export-geometry", off, "--precision", "2"});
  CHECK(r.code == 0);
  const auto census = json_lines(r.out);
  REQUIRE(census.size() == 1);
  CHECK(census[0]["components"] == 13);
  CHECK(census[0]["f_dim"] == Json::array({24, 12, 1}));
  CHECK(census[0]["euler_char"] == 13);
  std::ifstream off_in(off);
  std::string first;
  std::getline(off_in, first);
  CHECK(first == "OFF");
  std::ifstream json_in((dir / "p32.json").string());
  CHECK(Json::parse(json_in)["components"].size() == 13);
  r = invoke({"complex", "--n", "6", "--alpha", "4", "--budget", "100"});
  CHECK(r.code == kExitBudget);
  r = invoke({"complex", "--n", "2..3", "--export-geometry", off});
  CHECK(r.code == kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("roots and recurrence reports") {
  auto r = invoke({"roots", "--n", "2..4", "--alpha", "3"});
  for (const auto& line : json_lines(r.out)) CHECK(line["all_real"] == true);
  r = invoke({"recurrence", "--n", "3..5", "--alpha", "3"});
  CHECK(r.code == 0);
  const auto rep = json_lines(r.out).at(0);
  CHECK(rep["consistent"] == false);
  CHECK(rep["discrepancies"][0]["n"] == 3);
  CHECK(rep["discrepancies"][0]["k"] == 1);
  CHECK(rep["discrepancies"][0]["recurrence"] == 18);
  CHECK(rep["discrepancies"][0]["oracle"] == 16);
  r = invoke({"recurrence", "--n", "2..7", "--alpha", "1..4", "--amended"});
  for (const auto& line : json_lines(r.out)) CHECK(line["consistent"] == true);
}

TEST_CASE("verify") {
  RunConfig cfg = *parse_args({"verify", "--n", "1..4", "--alpha", "1..3", "-j", "4"}).config;
  const auto parallel = run_verification(cfg);
  cfg.parallelism = 1;
  const auto serial = run_verification(cfg);
  CHECK(parallel.passed());
  CHECK(parallel.to_json() == serial.to_json());
  std::set<std::string> names;
  for (const auto& rec : serial.sorted()) names.insert(rec.name);
  for (const char* required : {"colored_fubini_identity", "fubini_half", "routes_agree", "q_count", "real_rooted",
                               "euler_characteristic", "face_lattice", "recurrence_amended"})
    CHECK(names.count(required) == 1);
  const auto r = invoke({"verify", "--n", "1..3", "--alpha", "1..2", "--format", "jsonl"});
  CHECK(r.code == 0);
  for (const auto& line : json_lines(r.out)) CHECK(line["status"] == "pass");
}

TEST_CASE("verification report bookkeeping") {
  VerificationReport rep;
  rep.add("b", Json{{"n", 1}}, true);
  rep.add("a", Json{{"n", 2}}, false, Json{{"why", "x"}});
  rep.add("a", Json{{"n", 1}}, true, Json{{"ignored", true}});
  CHECK_FALSE(rep.passed());
  const auto s = rep.sorted();
  CHECK(s[0].name == "a");
  CHECK(s[0].params["n"] == 1);
  CHECK(s[0].witness.is_null());
  const auto j = rep.to_json();
  CHECK(j["passed"] == false);
  CHECK(j["checks"][1]["witness"]["why"] == "x");
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "ceuler_table.csv").string();
  const auto r = invoke({"table", "--n", "2", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,alpha,k,coefficient");
  std::filesystem::remove(path);
}

TEST_CASE("golden table files") {
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string dir = CEULER_GOLDEN_DIR;
  const auto csv = slurp(dir + "/table_a2.csv");
  for (const char* route : {"closed", "descents", "complex", "gamma"})
    CHECK(invoke({"table", "--n", "2..6", "--alpha", "2", "--route", route}).out == csv);
  CHECK(invoke({"table", "--n", "2..6", "--alpha", "2", "--format", "latex"}).out == slurp(dir + "/table_a2.tex"));
}
