#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skeinpf::cli {

enum class Format { Table, Json, Csv };

/// One command's result: ordered metadata, a fixed-header table of rows, and
/// optional extra JSON fields. Every integer is already a decimal string.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::optional<std::string>>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  /// Table-format overrides of columns and rows.
  std::optional<std::vector<std::string>> table_columns;
  std::optional<std::vector<std::vector<std::string>>> table_rows;
  std::vector<std::string> table_footer;
};

void render(const OutputRecord& rec, Format fmt, std::ostream& out);

std::string csv_escape(const std::string& field);

}  // namespace skeinpf::cli
