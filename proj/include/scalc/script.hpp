#pragma once

// Construction scripts: one statement per entry,
//
//   <kind> <name> [type] [JSON object spanning lines until braces balance]
//
// with '#' comments. A document {"statements": [{"kind", "name", "args"}]}
// is accepted as an alternative input.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scalc/fpgroup.hpp"

namespace scalc {

using Json = nlohmann::ordered_json;

struct Statement {
  std::string kind;  // param block product mark glue fiber_sum luttinger mcg_check family assert report
  std::string name;  // defined name, assertion path, or parameter name
  Json args;         // object; the default value for param; the name list for report
  std::size_t line = 0;
  std::size_t column = 0;

  // Names this statement reads, in order of appearance.
  std::vector<std::string> references() const;
  // True for kinds that define `name`.
  bool defines() const;
};

struct Script {
  std::vector<Statement> statements;
};

// Throws ParseError on syntax errors, unknown kinds, duplicate names and
// references to names not defined by an earlier statement.
Script parse_script(std::string_view text);

// Line-oriented text that parses back to the same statements.
std::string format_script(const Script& script);

// Same statements, ignoring source positions.
bool same_statements(const Script& a, const Script& b);

struct RunOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::map<std::string, Json> params;  // overrides for param statements
};

struct AssertionResult {
  std::size_t line = 0;
  std::string target;
  Json expected;
  Json actual;
  bool passed = false;
};

struct Report {
  Json params = Json::object();
  std::vector<Json> records;  // in report order
  std::vector<AssertionResult> assertions;

  std::size_t failed() const;
  Json to_json() const;
};

// Throws StatementError when a statement fails; assertion failures are
// recorded, not thrown.
Report run_script(const Script& script, const RunOptions& options = {});

enum class ReportFormat { Text, Json };

std::string emit_report(const Report& report, ReportFormat format);

inline constexpr std::string_view kReportSchema = "surgery-calc-report/1";

}  // namespace scalc
