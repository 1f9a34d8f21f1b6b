#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "mockrank/bigfloat.hpp"

namespace mockrank {

// One verified claim: its identifier, the range it was checked on, the worst
// margin (bound minus actual, minimum over the range) and where it occurred.
// pass <=> worst_margin > 0.
struct BoundReport {
  std::string claim_id;
  std::string range;
  Real worst_margin = Real(64);
  std::string worst_location;
  bool pass = false;
};

enum class OutputFormat { csv, json };

// A typed cell so CSV and JSON-lines render from the same row data.
// Big integers always serialize as decimal strings in JSON.
struct Cell {
  std::string text;
  bool json_quote = false;
};

inline Cell cell(const std::string& s) {
  return {s, true};
}
inline Cell cell(const char* s) { return {std::string(s), true}; }
inline Cell cell(long v) { return {std::to_string(v), false}; }
inline Cell cell(int v) { return {std::to_string(v), false}; }
inline Cell cell(bool v) { return {v ? "true" : "false", false}; }
inline Cell cell(const ExactInt& z) { return {z.get_str(), true}; }
inline Cell cell(const Real& r, int sig = 30) { return {r.str(sig), false}; }

namespace report_detail {

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += "\"";
  return out;
}

}  // namespace report_detail

// Streams records as RFC-4180 CSV (header row first) or JSON lines.
class TableWriter {
 public:
  TableWriter(std::ostream& out, OutputFormat fmt, std::vector<std::string> columns)
      : out_(out), fmt_(fmt), columns_(std::move(columns)) {}

  void row(const std::vector<Cell>& cells) {
    if (fmt_ == OutputFormat::csv) {
      if (!header_written_) {
        for (size_t i = 0; i < columns_.size(); ++i)
          out_ << (i ? "," : "") << report_detail::csv_escape(columns_[i]);
        out_ << "\n";
        header_written_ = true;
      }
      for (size_t i = 0; i < cells.size(); ++i)
        out_ << (i ? "," : "") << report_detail::csv_escape(cells[i].text);
      out_ << "\n";
    } else {
      out_ << "{";
      for (size_t i = 0; i < cells.size() && i < columns_.size(); ++i) {
        out_ << (i ? "," : "") << report_detail::json_escape(columns_[i]) << ":";
        out_ << (cells[i].json_quote ? report_detail::json_escape(cells[i].text)
                                     : cells[i].text);
      }
      out_ << "}\n";
    }
  }

 private:
  std::ostream& out_;
  OutputFormat fmt_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
};

inline std::vector<std::string> bound_report_columns() {
  return {"claim", "range", "worst_margin", "worst_location", "pass"};
}

inline std::vector<Cell> bound_report_row(const BoundReport& r) {
  return {cell(r.claim_id), cell(r.range), cell(r.worst_margin), cell(r.worst_location),
          cell(r.pass)};
}

}  // namespace mockrank
