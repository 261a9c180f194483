#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "scalc/error.hpp"
#include "scalc/script.hpp"

using namespace scalc;

namespace {

const char* const kCorpus[] = {"theorem1", "theorem2", "section5", "k3", "remark42", "mcg"};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string scenario(const std::string& name) {
  return read_file(std::filesystem::path(SCALC_SCENARIO_DIR) / (name + ".scn"));
}

std::string parse_error(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path temp_script(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("scalc_" + name + ".scn");
  std::ofstream(path) << text;
  return path;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(SURGERY_CALC_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("parse_script on the corpus") {
  CHECK(parse_script(scenario("theorem1")).statements.size() == 9);
  for (const char* name : kCorpus) {
    const std::string text = scenario(name);
    const Script s = parse_script(text);
    CHECK(!s.statements.empty());
    const Script again = parse_script(format_script(s));
    CHECK(same_statements(s, again));
    CHECK(format_script(again) == format_script(s));
  }
}

TEST_CASE("statement shapes") {
  const Script s = parse_script(
      "# header\n"
      "param p 2\n"
      "block A elliptic {\"n\": 1}   # trailing\n"
      "block T surface {\"genus\": 1,\n"
      "  \"generators\": [\"c\", \"d#\"]}\n"
      "report A T\n");
  REQUIRE(s.statements.size() == 4);
  CHECK(s.statements[0].args == 2);
  CHECK(s.statements[1].args == Json::parse(R"({"type": "elliptic", "n": 1})"));
  CHECK(s.statements[2].line == 4);
  CHECK(s.statements[2].args["generators"][1] == "d#");
  CHECK(s.statements[3].args == Json::parse(R"(["A", "T"])"));

  const Script doc = parse_script(R"({"statements": [
      {"kind": "param", "name": "p", "args": 2},
      {"kind": "block", "name": "A", "args": {"type": "elliptic", "n": 1}},
      {"kind": "block", "name": "T", "args": {"type": "surface", "genus": 1, "generators": ["c", "d#"]}},
      {"kind": "report", "args": ["A", "T"]}]})");
  CHECK(same_statements(s, doc));
}

TEST_CASE("empty scripts") {
  CHECK(parse_script("").statements.empty());
  CHECK(parse_script("\n  # only a comment\n\n").statements.empty());
  const Report r = run_script(parse_script(""));
  CHECK(r.failed() == 0);
  const Json j = Json::parse(emit_report(r, ReportFormat::Json));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["records"].empty());
  CHECK(j["summary"]["assertions"] == 0);
  CHECK(emit_report(r, ReportFormat::Text).find("0 assertions") != std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  const std::string undefined = parse_error("block W1 elliptic {\"n\": 1}\n\nproduct W2 {\"factors\": [\"W1\", \"W3\"]}\n");
  CHECK(undefined.find("W3") != std::string::npos);
  CHECK(undefined.find("line 3") != std::string::npos);

  const std::string duplicate = parse_error("block A elliptic {\"n\": 1}\nblock A elliptic {\"n\": 2}\n");
  CHECK(duplicate.find("duplicate name 'A'") != std::string::npos);
  CHECK(duplicate.find("line 2") != std::string::npos);

  CHECK(parse_error("blok A elliptic {}\n").find("unknown statement kind 'blok'") != std::string::npos);
  CHECK(parse_error("report X\nblock X elliptic {\"n\": 1}\n").find("undefined name 'X'") != std::string::npos);
  CHECK(parse_error("block A elliptic {\"n\": 1\n").find("unterminated") != std::string::npos);
  CHECK(parse_error("block A elliptic {\"n\": 1} extra\n").find("column 27") != std::string::npos);
  CHECK(parse_error("block A elliptic {\"n\": 1,\n  \"k\" 2}\n").find("line 2") != std::string::npos);
  CHECK(parse_error("block A elliptic {\"n\": \"$p\"}\n").find("undefined parameter '$p'") != std::string::npos);
  CHECK(parse_error("block 9A elliptic {}\n").find("invalid name") != std::string::npos);
  CHECK(parse_error("block A\n").find("needs a type") != std::string::npos);
  CHECK(parse_error("{\"statements\": [{\"kind\": \"nope\"}]}").find("unknown statement kind") != std::string::npos);
}

TEST_CASE("run_script is deterministic") {
  for (const char* name : kCorpus) {
    const Script s = parse_script(scenario(name));
    const Report a = run_script(s);
    const Report b = run_script(s);
    CHECK(a.failed() == 0);
    CHECK(emit_report(a, ReportFormat::Json) == emit_report(b, ReportFormat::Json));
    CHECK(emit_report(a, ReportFormat::Text) == emit_report(b, ReportFormat::Text));
  }
  const Json j = Json::parse(emit_report(run_script(parse_script(scenario("theorem1"))), ReportFormat::Json));
  CHECK(j["records"][0]["chern"]["c1_cubed"] == 0);
  CHECK(j["records"][0]["pi1"] == "trivial");
  CHECK(j["records"][0]["cy"]["verdict"] == "CY_certified");
}

TEST_CASE("assertions and statement errors") {
  const std::string base = "block E1 elliptic {\"n\": 1}\n";
  const Report r = run_script(parse_script(base + "assert E1.chern.c2 {\"equals\": 11}\n"
                                                  "assert E1.signature {\"equals\": -8}\n"));
  REQUIRE(r.assertions.size() == 2);
  CHECK_FALSE(r.assertions[0].passed);
  CHECK(r.assertions[0].actual == 12);
  CHECK(r.assertions[1].passed);
  CHECK(r.failed() == 1);
  CHECK(emit_report(r, ReportFormat::Text).find("FAIL  line 2") != std::string::npos);

  CHECK_THROWS_AS(run_script(parse_script(base + "assert E1.nothing {\"equals\": 1}\n")), StatementError);
  try {
    run_script(parse_script(base + "glue g {\"from\": \"E1.F\", \"to\": \"E1.F\", \"map\": {\"a\": \"b'\", \"b\": \"b'\"}}\n"));
    FAIL("singular gluing accepted");
  } catch (const StatementError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("glue g") != std::string::npos);
  }
  CHECK_THROWS_AS(run_script(parse_script("block X torus {\"generators\": [\"a\"]}\n")), StatementError);
}

TEST_CASE("parameters") {
  const Script s = parse_script(scenario("section5"));
  RunOptions options;
  options.params["p"] = 2;
  options.params["q"] = 3;
  const Report r = run_script(s, options);
  CHECK(r.failed() == 0);
  CHECK(r.params["p"] == 2);
  CHECK(r.records[2]["pi1_detail"]["abelianization"]["torsion"] == Json::parse("[6]"));
  // Conditional assertions for (1, 1) and (1, 0) are skipped.
  CHECK(r.assertions.size() == 4);

  options.params["r"] = 1;
  CHECK_THROWS_AS(run_script(s, options), Error);
}

TEST_CASE("command line exit codes") {
  const auto dir = std::filesystem::path(SCALC_SCENARIO_DIR);
  CHECK(cli("run " + (dir / "theorem1.scn").string()) == 0);
  CHECK(cli("check " + (dir / "section5.scn").string()) == 0);
  CHECK(cli("run " + (dir / "section5.scn").string() + " --param p=1 --param q=0 --format json") == 0);
  const auto failing = temp_script("failing", "block E1 elliptic {\"n\": 1}\nassert E1.chern.c2 {\"equals\": 0}\n");
  CHECK(cli("run " + failing.string()) == 1);
  const auto broken = temp_script("broken", "product P {\"factors\": [\"W3\", \"W3\"]}\n");
  CHECK(cli("run " + broken.string()) == 2);
  CHECK(cli("check " + broken.string()) == 2);
  CHECK(cli("run /nonexistent.scn") == 2);
  CHECK(cli("run " + failing.string() + " --max-cosets 0") == 2);

  const auto out = std::filesystem::temp_directory_path() / "scalc_report.json";
  CHECK(cli("run " + (dir / "k3.scn").string() + " --format json --out " + out.string()) == 0);
  CHECK(Json::parse(read_file(out))["summary"]["failed"] == 0);
}
