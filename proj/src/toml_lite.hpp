#pragma once

// Minimal TOML subset used for model configs: [table] / [[array-of-tables]]
// headers with dotted paths, key = value pairs with string, number, boolean,
// single-line array, and inline-table values, and # comments. Quoted keys,
// dotted keys, dates, and multi-line strings are not supported.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sysrisk::toml {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Value;
using Table = std::map<std::string, Value>;
using Array = std::vector<Value>;

struct Value {
  std::variant<double, bool, std::string, Table, Array> data;

  bool is_number() const { return std::holds_alternative<double>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }
  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_table() const { return std::holds_alternative<Table>(data); }
  bool is_array() const { return std::holds_alternative<Array>(data); }

  double as_number(const std::string& context) const;
  bool as_bool(const std::string& context) const;
  const std::string& as_string(const std::string& context) const;
  const Table& as_table(const std::string& context) const;
  const Array& as_array(const std::string& context) const;
};

Table parse(std::string_view text);
Table parse_file(const std::string& path);

}  // namespace sysrisk::toml
