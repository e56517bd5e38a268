#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace snspec {

enum class OutputFormat { csv, jsonl };

/// Fixed scientific formatting with 12 significant digits, the contract for
/// byte-identical emitted records.
std::string format_sci(double value);

std::string json_escape(std::string_view s);

using FieldValue = std::variant<std::string, double, std::int64_t>;

/**
 * Streams flat records either as CSV (header row first, '.' decimal
 * separator, no locale dependence) or as JSON lines (one object per record,
 * keys in column order).
 */
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format,
               std::vector<std::string> columns);

  void write(const std::vector<FieldValue>& fields);

  const std::vector<std::string>& columns() const { return columns_; }

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
};

}  // namespace snspec
