// surgery-calc: run or check construction scripts.
//
//   surgery-calc run <script> [--format text|json] [--max-cosets N] [--out FILE] [--param k=v]...
//   surgery-calc check <script>
//
// Exit status: 0 when every assertion passes, 1 on a failed assertion, 2 on a
// script error. SURGERY_CALC_MAX_COSETS sets the default coset budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scalc/error.hpp"
#include "scalc/script.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scalc::Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Values are JSON when they parse as JSON and strings otherwise.
std::pair<std::string, scalc::Json> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw scalc::Error("--param expects NAME=VALUE, got '" + text + "'");
  const std::string value = text.substr(eq + 1);
  scalc::Json j = scalc::Json::parse(value, nullptr, false);
  if (j.is_discarded() || j.is_structured()) j = value;
  return {text.substr(0, eq), j};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant calculator for symplectic surgery constructions"};
  app.require_subcommand(1);

  std::string script_path;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> params;
  std::size_t max_cosets = scalc::kDefaultMaxCosets;
  if (const char* env = std::getenv("SURGERY_CALC_MAX_COSETS")) {
    try {
      max_cosets = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: SURGERY_CALC_MAX_COSETS must be a positive integer\n";
      return 2;
    }
  }

  auto* run = app.add_subcommand("run", "Execute a script and print its report");
  run->add_option("script", script_path, "Script file")->required();
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--max-cosets", max_cosets, "Coset table limit for enumerations")->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Write the report to FILE");
  run->add_option("--param", params, "Override a script parameter, NAME=VALUE");

  auto* check = app.add_subcommand("check", "Parse and validate a script without running it");
  check->add_option("script", script_path, "Script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const scalc::Script script = scalc::parse_script(slurp(script_path));
    if (check->parsed()) {
      std::cout << script_path << ": " << script.statements.size() << " statements\n";
      return 0;
    }
    scalc::RunOptions options;
    options.max_cosets = max_cosets;
    for (const auto& p : params) options.params.insert(parse_param(p));
    const scalc::Report report = scalc::run_script(script, options);
    const std::string text =
        scalc::emit_report(report, format == "json" ? scalc::ReportFormat::Json : scalc::ReportFormat::Text);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!(out << text)) throw scalc::Error("cannot write '" + out_path + "'");
    }
    return report.failed() == 0 ? 0 : 1;
  } catch (const scalc::Error& e) {
    std::cerr << script_path << ": " << e.what() << "\n";
    return 2;
  }
}
