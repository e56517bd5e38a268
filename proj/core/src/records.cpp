#include "snspec/records.hpp"

#include <cmath>
#include <cstdio>

#include "snspec/errors.hpp"

namespace snspec {

std::string format_sci(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format,
                           std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == OutputFormat::csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out_ << ',';
      out_ << csv_quote(columns_[i]);
    }
    out_ << '\n';
  }
}

void RecordWriter::write(const std::vector<FieldValue>& fields) {
  if (fields.size() != columns_.size()) {
    throw DomainError("record width does not match column count");
  }
  if (format_ == OutputFormat::csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      if (const auto* s = std::get_if<std::string>(&fields[i])) {
        out_ << csv_quote(*s);
      } else if (const auto* d = std::get_if<double>(&fields[i])) {
        out_ << format_sci(*d);
      } else {
        out_ << std::get<std::int64_t>(fields[i]);
      }
    }
    out_ << '\n';
    return;
  }
  out_ << '{';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << '"' << json_escape(columns_[i]) << "\":";
    if (const auto* s = std::get_if<std::string>(&fields[i])) {
      out_ << '"' << json_escape(*s) << '"';
    } else if (const auto* d = std::get_if<double>(&fields[i])) {
      if (std::isfinite(*d)) {
        out_ << format_sci(*d);
      } else {
        out_ << "null";
      }
    } else {
      out_ << std::get<std::int64_t>(fields[i]);
    }
  }
  out_ << "}\n";
}

}  // namespace snspec
