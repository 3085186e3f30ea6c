#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace confined_atom::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string format_parameter(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_list(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_parameter(values[i]);
  return s;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "1" : "0";
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_number(*d);
  }
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
  out << "# " << report.command;
  for (const auto& [key, value] : report.parameters) out << ' ' << key << '=' << value;
  out << '\n';
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    const Table& table = report.tables[t];
    if (report.tables.size() > 1) out << (t ? "\n" : "") << "# table " << table.name << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
      out << '\n';
    }
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) doc["parameters"][key] = value;
  for (const auto& table : report.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
      rows.push_back(obj);
    }
    doc[table.name] = rows;
  }
  out << doc.dump(2) << '\n';
}

}  // namespace confined_atom::cli
