#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "scalc/error.hpp"
#include "scalc/script.hpp"

namespace scalc {
namespace {

const std::set<std::string> kKinds = {"param", "block", "product", "mark", "glue", "fiber_sum",
                                      "luttinger", "mcg_check", "family", "assert", "report"};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '(' || c == ')' ||
         c == ',' || c == '-' || c == '+';
}

bool valid_name(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), name_char);
}

std::string head(const std::string& path) { return path.substr(0, path.find('.')); }

// Removes a '#' comment that is not inside a JSON string.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

void collect_params(const Json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.size() > 1 && s[0] == '$') out.push_back(s);
  } else if (j.is_structured()) {
    for (const auto& v : j) collect_params(v, out);
  }
}

class LineParser {
 public:
  explicit LineParser(std::string_view text) {
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(strip_comment(line));
    }
  }

  Script parse() {
    Script script;
    while (row_ < lines_.size()) {
      col_ = 0;
      skip_space();
      if (at_end_of_line()) {
        ++row_;
        continue;
      }
      script.statements.push_back(statement());
    }
    return script;
  }

 private:
  const std::string& cur() const { return lines_[row_]; }
  bool at_end_of_line() const { return col_ >= cur().size(); }
  void skip_space() {
    while (!at_end_of_line() && std::isspace(static_cast<unsigned char>(cur()[col_]))) ++col_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, row_ + 1, col_ + 1); }

  std::string token() {
    skip_space();
    const std::size_t start = col_;
    while (!at_end_of_line() && !std::isspace(static_cast<unsigned char>(cur()[col_])) && cur()[col_] != '{')
      ++col_;
    return cur().substr(start, col_ - start);
  }

  // A JSON value starting at the cursor; objects and arrays may span lines.
  Json value() {
    skip_space();
    if (at_end_of_line()) fail("expected a value");
    const std::size_t start_row = row_;
    const std::size_t start_col = col_;
    const char open = cur()[col_];
    std::string body;
    if (open != '{' && open != '[') {
      body = cur().substr(col_);
      col_ = cur().size();
      return parse_json(body, start_row, start_col);
    }
    int depth = 0;
    bool in_string = false;
    for (;;) {
      if (at_end_of_line()) {
        body += '\n';
        if (++row_ >= lines_.size()) {
          row_ = start_row;
          col_ = start_col;
          fail("unterminated JSON object");
        }
        col_ = 0;
        continue;
      }
      const char c = cur()[col_++];
      body += c;
      if (in_string) {
        if (c == '\\' && !at_end_of_line()) body += cur()[col_++];
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      if (c == '{' || c == '[') ++depth;
      if ((c == '}' || c == ']') && --depth == 0) break;
    }
    return parse_json(body, start_row, start_col);
  }

  Json parse_json(const std::string& body, std::size_t start_row, std::size_t start_col) const {
    try {
      return Json::parse(body);
    } catch (const Json::parse_error& e) {
      std::size_t r = start_row;
      std::size_t c = start_col;
      const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, body.size());
      for (std::size_t i = 0; i < limit; ++i) {
        if (body[i] == '\n') {
          ++r;
          c = 0;
        } else {
          ++c;
        }
      }
      std::string what = e.what();
      what = what.substr(what.find(':') == std::string::npos ? 0 : what.rfind(':') + 2);
      throw ParseError("invalid JSON: " + what, r + 1, c + 1);
    }
  }

  void expect_end() {
    skip_space();
    if (!at_end_of_line()) fail("unexpected text after statement");
    ++row_;
  }

  Statement statement() {
    Statement s;
    s.line = row_ + 1;
    s.column = col_ + 1;
    s.kind = token();
    if (!kKinds.count(s.kind)) {
      col_ = s.column - 1;
      fail("unknown statement kind '" + s.kind + "'");
    }
    if (s.kind == "report") {
      s.args = Json::array();
      for (std::string t = token(); !t.empty(); t = token()) s.args.push_back(t);
      ++row_;
      return s;
    }
    s.name = token();
    if (s.name.empty()) fail("statement '" + s.kind + "' needs a name");
    if (s.kind == "param") {
      s.args = value();
      if (s.args.is_structured()) fail("parameter values must be scalars");
      expect_end();
      return s;
    }
    std::string type;
    if (s.kind == "block") {
      type = token();
      if (type.empty()) fail("block '" + s.name + "' needs a type");
    }
    skip_space();
    if (at_end_of_line()) {
      s.args = Json::object();
    } else {
      if (cur()[col_] != '{') fail("expected '{'");
      s.args = value();
    }
    if (!type.empty()) {
      if (s.args.contains("type")) fail("block type given twice");
      Json with_type = Json::object();
      with_type["type"] = type;
      for (auto it = s.args.begin(); it != s.args.end(); ++it) with_type[it.key()] = it.value();
      s.args = std::move(with_type);
    }
    expect_end();
    return s;
  }

  std::vector<std::string> lines_;
  std::size_t row_ = 0;
  std::size_t col_ = 0;
};

Script parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON document: ") + e.what(), 1, 1);
  }
  if (!doc.is_object() || !doc.contains("statements") || !doc["statements"].is_array())
    throw ParseError("a JSON script needs a \"statements\" array", 1, 1);
  Script script;
  std::size_t index = 0;
  for (const auto& j : doc["statements"]) {
    ++index;
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
      throw ParseError("statement needs a \"kind\"", index, 1);
    Statement s;
    s.line = index;
    s.column = 1;
    s.kind = j["kind"].get<std::string>();
    if (!kKinds.count(s.kind)) throw ParseError("unknown statement kind '" + s.kind + "'", index, 1);
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw ParseError("statement name must be a string", index, 1);
      s.name = j["name"].get<std::string>();
    }
    s.args = j.value("args", s.kind == "report" ? Json::array() : Json::object());
    script.statements.push_back(std::move(s));
  }
  return script;
}

void validate(const Script& script) {
  std::map<std::string, std::size_t> defined;
  std::set<std::string> params;
  for (const auto& s : script.statements) {
    auto fail = [&s](const std::string& message) { throw ParseError(message, s.line, s.column); };
    if (s.kind == "report") {
      if (!s.args.is_array()) fail("report takes a list of names");
    } else if (s.kind != "param" && !s.args.is_object()) {
      fail("statement '" + s.name + "' needs a JSON object");
    }
    if (s.kind != "report" && s.kind != "assert" && !valid_name(s.name))
      fail("invalid name '" + s.name + "'");
    if (s.kind == "assert" && !s.args.contains("equals")) fail("assert needs \"equals\"");
    if (s.kind == "block" && !(s.args.contains("type") && s.args["type"].is_string()))
      fail("block '" + s.name + "' needs a type");

    for (const auto& ref : s.references())
      if (!defined.count(ref)) fail("undefined name '" + ref + "'");
    std::vector<std::string> used;
    collect_params(s.args, used);
    for (const auto& p : used)
      if (!params.count(p.substr(1))) fail("undefined parameter '" + p + "'");

    if (s.defines()) {
      if (auto it = defined.find(s.name); it != defined.end())
        fail("duplicate name '" + s.name + "' (first defined on line " + std::to_string(it->second) + ")");
      defined[s.name] = s.line;
      if (s.kind == "param") params.insert(s.name);
    }
  }
}

}  // namespace

bool Statement::defines() const { return kind != "assert" && kind != "report"; }

std::vector<std::string> Statement::references() const {
  std::vector<std::string> out;
  auto add = [&out](const Json& j) {
    if (j.is_string()) out.push_back(head(j.get<std::string>()));
  };
  if (!args.is_structured()) {
    if (kind == "assert") out.push_back(head(name));
    return out;
  }
  if (kind == "product" && args.contains("factors") && args["factors"].is_array())
    for (const auto& f : args["factors"]) add(f);
  if (kind == "mark" && args.contains("on")) add(args["on"]);
  if (kind == "glue") {
    if (args.contains("from")) add(args["from"]);
    if (args.contains("to")) add(args["to"]);
  }
  if (kind == "fiber_sum" && args.contains("glue")) add(args["glue"]);
  if (kind == "luttinger") {
    if (args.contains("on")) add(args["on"]);
    if (args.contains("torus")) add(args["torus"]);
  }
  if (kind == "assert") out.push_back(head(name));
  if (kind == "report")
    for (const auto& n : args) add(n);
  return out;
}

Script parse_script(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  Script script = first != std::string_view::npos && text[first] == '{' ? parse_document(text)
                                                                         : LineParser(text).parse();
  validate(script);
  return script;
}

std::string format_script(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) {
    out += s.kind;
    if (s.kind == "report") {
      for (const auto& n : s.args) out += " " + n.get<std::string>();
      out += "\n";
      continue;
    }
    out += " " + s.name;
    if (s.kind == "block") {
      Json rest = s.args;
      out += " " + rest["type"].get<std::string>();
      rest.erase("type");
      if (!rest.empty()) out += " " + rest.dump();
    } else {
      out += " " + s.args.dump();
    }
    out += "\n";
  }
  return out;
}

bool same_statements(const Script& a, const Script& b) {
  return std::equal(a.statements.begin(), a.statements.end(), b.statements.begin(), b.statements.end(),
                    [](const Statement& x, const Statement& y) {
                      return x.kind == y.kind && x.name == y.name && x.args == y.args;
                    });
}

}  // namespace scalc
