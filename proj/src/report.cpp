#include <algorithm>

#include "scalc/script.hpp"

namespace scalc {
namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); })) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : "; ") + x.get<std::string>();
    return out;
  }
  return v.dump();
}

bool flat(const Json& v) {
  if (!v.is_structured()) return true;
  return std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); });
}

bool table_like(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

// "k v  k v" for flat objects, compact JSON otherwise.
std::string inline_value(const Json& v) {
  if (!v.is_object() || !flat(v)) return cell(v);
  std::string out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!out.empty()) out += "  ";
    out += it.key() + " " + cell(it.value());
  }
  return out;
}

struct Table {
  std::string title;
  const Json* rows = nullptr;
};

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows,
             std::vector<Table>& tables) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    const Json& v = it.value();
    if (table_like(v)) tables.push_back({key, &v});
    else if (v.is_object() && !flat(v)) flatten(v, key + ".", rows, tables);
    else if (v.is_array() && v.empty()) continue;
    else rows.emplace_back(key, inline_value(v));
  }
}

void emit_table(std::string& out, const Table& t) {
  std::vector<std::string> columns;
  for (const auto& row : *t.rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) columns.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : *t.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      line.push_back(row.contains(columns[i]) ? inline_value(row[columns[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit_line = [&](const std::vector<std::string>& line) {
    std::string text = "    ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out += text + "\n";
  };
  out += "  " + t.title + ":\n";
  emit_line(columns);
  for (const auto& line : cells) emit_line(line);
}

void emit_record(std::string& out, const Json& rec) {
  out += "== " + cell(rec.value("name", Json("?"))) + " (" + cell(rec.value("kind", Json("?")));
  if (rec.contains("dim")) out += ", dim " + cell(rec["dim"]);
  out += ") ==\n";
  Json body = rec;
  body.erase("name");
  body.erase("kind");
  body.erase("dim");
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<Table> tables;
  flatten(body, "", rows, tables);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out += "  " + k + std::string(width - k.size() + 2, ' ') + v + "\n";
  for (const auto& t : tables) emit_table(out, t);
  out += "\n";
}

}  // namespace

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(assertions.begin(), assertions.end(), [](const AssertionResult& a) { return !a.passed; }));
}

Json Report::to_json() const {
  Json j = Json::object();
  j["schema"] = kReportSchema;
  j["params"] = params;
  j["records"] = records;
  Json checks = Json::array();
  for (const auto& a : assertions)
    checks.push_back({{"line", a.line},
                      {"target", a.target},
                      {"expected", a.expected},
                      {"actual", a.actual},
                      {"passed", a.passed}});
  j["assertions"] = std::move(checks);
  j["summary"] = {{"assertions", assertions.size()},
                  {"passed", assertions.size() - failed()},
                  {"failed", failed()}};
  return j;
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.to_json().dump(2) + "\n";
  std::string out = "surgery-calc report (" + std::string(kReportSchema) + ")\n";
  if (!report.params.empty()) out += "params: " + inline_value(report.params) + "\n";
  out += "\n";
  for (const auto& rec : report.records) emit_record(out, rec);
  if (!report.assertions.empty()) {
    out += "assertions:\n";
    std::size_t width = 0;
    std::size_t line_width = 0;
    for (const auto& a : report.assertions) {
      width = std::max(width, a.target.size());
      line_width = std::max(line_width, std::to_string(a.line).size());
    }
    for (const auto& a : report.assertions) {
      const std::string line = std::to_string(a.line);
      out += std::string("  ") + (a.passed ? "PASS" : "FAIL") + "  line " + line +
             std::string(line_width - line.size() + 2, ' ') + a.target +
             std::string(width - a.target.size() + 2, ' ') + "= " + cell(a.expected);
      if (!a.passed) out += "  (got " + cell(a.actual) + ")";
      out += "\n";
    }
  }
  out += "summary: " + std::to_string(report.assertions.size()) + " assertions, " +
         std::to_string(report.assertions.size() - report.failed()) + " passed, " +
         std::to_string(report.failed()) + " failed\n";
  return out;
}

}  // namespace scalc
