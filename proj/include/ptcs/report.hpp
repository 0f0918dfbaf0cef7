#ifndef PTCS_REPORT_HPP
#define PTCS_REPORT_HPP

// Tabular output shared by the verification suites and the command-line
// tool. Numbers are always written with 17 significant digits, so CSV and
// JSON renderings of one table carry the same decimal strings.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ptcs::report {

using Cell = std::variant<double, long long, bool, std::string>;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// JSON has no literal for non-finite numbers; they are written as strings.
inline std::string json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    const std::string s = format_double(*d);
    return std::isfinite(*d) ? s : json_string(s);
  }
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return json_string(std::get<std::string>(c));
}

inline std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return csv_field(std::get<std::string>(c));
}

}  // namespace detail

/// A rectangular table with a header and free-form metadata (the run's
/// inputs). Metadata appears only in the JSON rendering.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  void write_csv(std::ostream& os) const {
    for (std::size_t j = 0; j < columns.size(); ++j) os << (j ? "," : "") << columns[j];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << detail::csv_cell(row[j]);
      os << '\n';
    }
  }

  void write_json(std::ostream& os) const {
    os << "{\n  \"title\": " << detail::json_string(title) << ",\n  \"params\": {";
    for (std::size_t i = 0; i < meta.size(); ++i) {
      os << (i ? ", " : "") << detail::json_string(meta[i].first) << ": " << detail::json_cell(meta[i].second);
    }
    os << "},\n  \"columns\": [";
    for (std::size_t j = 0; j < columns.size(); ++j) os << (j ? ", " : "") << detail::json_string(columns[j]);
    os << "],\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << (i ? ",\n    {" : "\n    {");
      for (std::size_t j = 0; j < rows[i].size() && j < columns.size(); ++j) {
        os << (j ? ", " : "") << detail::json_string(columns[j]) << ": " << detail::json_cell(rows[i][j]);
      }
      os << "}";
    }
    os << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
  }

  [[nodiscard]] std::string csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
  }

  [[nodiscard]] std::string json() const {
    std::ostringstream os;
    write_json(os);
    return os.str();
  }
};

}  // namespace ptcs::report

#endif  // PTCS_REPORT_HPP
