#include "output.hpp"

#include <algorithm>

namespace skeinpf::cli {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

void render_json(const OutputRecord& rec, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = rec.command;
  for (const auto& [key, value] : rec.meta) {
    if (value) j[key] = *value;
    else j[key] = nullptr;
  }
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
      if (row[i].empty()) r[rec.columns[i]] = nullptr;
      else r[rec.columns[i]] = row[i];
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  for (const auto& [key, value] : rec.extra.items()) j[key] = value;
  out << j.dump(2) << '\n';
}

void render_csv(const OutputRecord& rec, std::ostream& out) {
  for (std::size_t i = 0; i < rec.columns.size(); ++i) out << (i ? "," : "") << csv_escape(rec.columns[i]);
  out << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  }
}

void render_table(const OutputRecord& rec, std::ostream& out) {
  for (const auto& [key, value] : rec.meta) out << key << ": " << value.value_or("-") << '\n';
  const auto& columns = rec.table_columns ? *rec.table_columns : rec.columns;
  const auto& rows = rec.table_rows ? *rec.table_rows : rec.rows;
  if (!columns.empty() && !rows.empty()) {
    if (!rec.meta.empty()) out << '\n';
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << "  ";
        const std::string& c = cells[i].empty() ? std::string("-") : cells[i];
        out << c;
        if (i + 1 < cells.size()) out << std::string(width[i] - std::min(width[i], c.size()), ' ');
      }
      out << '\n';
    };
    line(columns);
    for (const auto& row : rows) line(row);
  }
  for (const auto& f : rec.table_footer) out << f << '\n';
}

}  // namespace

void render(const OutputRecord& rec, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json: render_json(rec, out); break;
    case Format::Csv: render_csv(rec, out); break;
    default: render_table(rec, out);
  }
}

}  // namespace skeinpf::cli
