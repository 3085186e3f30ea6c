#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace confined_atom::cli {

using Cell = std::variant<double, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// One command's output: a '#' header carrying every resolved input, then
// one or more CSV blocks. Numbers are written as %.12e, flags as 0/1.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Table> tables;
};

std::string format_number(double v);
std::string format_parameter(double v);
std::string format_list(const std::vector<double>& values);

void write_csv(const Report& report, std::ostream& out);
// Single JSON document; non-finite numbers become strings ("inf", "nan").
void write_json(const Report& report, std::ostream& out);

}  // namespace confined_atom::cli
