#include "toml_lite.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sysrisk::toml {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("toml: line " + std::to_string(line) + ": " + msg);
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char take() {
    char c = s[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  void skip_ws_comment_to_eol() {
    skip_ws();
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') ++pos;
    if (!eof()) {
      if (peek() != '\n') fail(line, "unexpected trailing characters");
      take();
    }
  }
};

bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_key(Cursor& c) {
  std::string key;
  while (!c.eof() && is_key_char(c.peek())) key.push_back(c.take());
  if (key.empty()) fail(c.line, "expected key");
  return key;
}

std::string parse_string(Cursor& c) {
  c.take();  // opening quote
  std::string out;
  while (true) {
    if (c.eof()) fail(c.line, "unterminated string");
    char ch = c.take();
    if (ch == '"') return out;
    if (ch == '\n') fail(c.line - 1, "newline inside string");
    if (ch == '\\') {
      if (c.eof()) fail(c.line, "unterminated escape");
      char e = c.take();
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        default: fail(c.line, std::string("unsupported escape \\") + e);
      }
    } else {
      out.push_back(ch);
    }
  }
}

Value parse_value(Cursor& c);

Value parse_inline_table(Cursor& c) {
  c.take();  // '{'
  Table t;
  c.skip_ws();
  if (!c.eof() && c.peek() == '}') {
    c.take();
    return Value{t};
  }
  while (true) {
    c.skip_ws();
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.eof() || c.take() != '=') fail(c.line, "expected '=' in inline table");
    c.skip_ws();
    if (!t.emplace(key, parse_value(c)).second) fail(c.line, "duplicate key '" + key + "'");
    c.skip_ws();
    if (c.eof()) fail(c.line, "unterminated inline table");
    char ch = c.take();
    if (ch == '}') return Value{t};
    if (ch != ',') fail(c.line, "expected ',' or '}' in inline table");
  }
}

Value parse_array(Cursor& c) {
  c.take();  // '['
  Array a;
  c.skip_ws();
  if (!c.eof() && c.peek() == ']') {
    c.take();
    return Value{a};
  }
  while (true) {
    c.skip_ws();
    a.push_back(parse_value(c));
    c.skip_ws();
    if (c.eof()) fail(c.line, "unterminated array");
    char ch = c.take();
    if (ch == ']') return Value{a};
    if (ch != ',') fail(c.line, "expected ',' or ']' in array");
  }
}

Value parse_value(Cursor& c) {
  if (c.eof()) fail(c.line, "expected value");
  char ch = c.peek();
  if (ch == '"') return Value{parse_string(c)};
  if (ch == '{') return parse_inline_table(c);
  if (ch == '[') return parse_array(c);
  std::string tok;
  while (!c.eof() && (is_key_char(c.peek()) || c.peek() == '+' || c.peek() == '.'))
    tok.push_back(c.take());
  if (tok == "true") return Value{true};
  if (tok == "false") return Value{false};
  if (tok.empty()) fail(c.line, "expected value");
  char* end = nullptr;
  double d = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size()) fail(c.line, "invalid value '" + tok + "'");
  return Value{d};
}

std::vector<std::string> parse_header_path(Cursor& c) {
  std::vector<std::string> path;
  while (true) {
    c.skip_ws();
    path.push_back(parse_key(c));
    c.skip_ws();
    if (c.eof()) fail(c.line, "unterminated table header");
    if (c.peek() == '.') {
      c.take();
      continue;
    }
    return path;
  }
}

// Walk to (or create) the table addressed by path[0..n-2]; arrays resolve to
// their last element, matching how [[x]] followed by [x.sub] attaches.
Table* descend(Table* root, const std::vector<std::string>& path, std::size_t upto,
               std::size_t line) {
  Table* cur = root;
  for (std::size_t i = 0; i < upto; ++i) {
    auto [it, inserted] = cur->emplace(path[i], Value{Table{}});
    Value& v = it->second;
    if (v.is_array()) {
      Array& a = std::get<Array>(v.data);
      if (a.empty() || !a.back().is_table()) fail(line, "path conflicts with array value");
      cur = &std::get<Table>(a.back().data);
    } else if (v.is_table()) {
      cur = &std::get<Table>(v.data);
    } else {
      fail(line, "path component '" + path[i] + "' is not a table");
    }
  }
  return cur;
}

}  // namespace

double Value::as_number(const std::string& context) const {
  if (!is_number()) throw ParseError(context + ": expected a number");
  return std::get<double>(data);
}
bool Value::as_bool(const std::string& context) const {
  if (!is_bool()) throw ParseError(context + ": expected a boolean");
  return std::get<bool>(data);
}
const std::string& Value::as_string(const std::string& context) const {
  if (!is_string()) throw ParseError(context + ": expected a string");
  return std::get<std::string>(data);
}
const Table& Value::as_table(const std::string& context) const {
  if (!is_table()) throw ParseError(context + ": expected a table");
  return std::get<Table>(data);
}
const Array& Value::as_array(const std::string& context) const {
  if (!is_array()) throw ParseError(context + ": expected an array");
  return std::get<Array>(data);
}

Table parse(std::string_view text) {
  Table root;
  Cursor c{text};
  Table* current = &root;
  while (!c.eof()) {
    c.skip_ws();
    if (c.eof()) break;
    char ch = c.peek();
    if (ch == '\n' || ch == '#') {
      c.skip_ws_comment_to_eol();
      continue;
    }
    if (ch == '[') {
      c.take();
      bool is_array_header = !c.eof() && c.peek() == '[';
      if (is_array_header) c.take();
      auto path = parse_header_path(c);
      if (c.eof() || c.take() != ']') fail(c.line, "expected ']'");
      if (is_array_header && (c.eof() || c.take() != ']')) fail(c.line, "expected ']]'");
      Table* parent = descend(&root, path, path.size() - 1, c.line);
      const std::string& leaf = path.back();
      if (is_array_header) {
        auto [it, inserted] = parent->emplace(leaf, Value{Array{}});
        if (!it->second.is_array()) fail(c.line, "'" + leaf + "' is not an array of tables");
        Array& a = std::get<Array>(it->second.data);
        a.push_back(Value{Table{}});
        current = &std::get<Table>(a.back().data);
      } else {
        auto [it, inserted] = parent->emplace(leaf, Value{Table{}});
        if (!inserted) fail(c.line, "table '" + leaf + "' redefined");
        current = &std::get<Table>(it->second.data);
      }
      c.skip_ws_comment_to_eol();
      continue;
    }
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.eof() || c.take() != '=') fail(c.line, "expected '=' after key '" + key + "'");
    c.skip_ws();
    Value v = parse_value(c);
    if (!current->emplace(key, std::move(v)).second) fail(c.line, "duplicate key '" + key + "'");
    c.skip_ws_comment_to_eol();
  }
  return root;
}

Table parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace sysrisk::toml
