#include "core/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "core/errors.hpp"

namespace eaqt {

CsvBuilder::CsvBuilder(const std::string& schema) {
  out_ = "# schema=" + schema + "\n";
}

void CsvBuilder::comment(const std::string& text) { out_ += "# " + text + "\n"; }

void CsvBuilder::columns(const std::vector<std::string>& names) {
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out_ += ',';
    out_ += names[i];
  }
  out_ += '\n';
}

std::string CsvBuilder::format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

void CsvBuilder::separator() {
  if (row_open_) out_ += ',';
  row_open_ = true;
}

CsvBuilder& CsvBuilder::field(double value) {
  separator();
  out_ += format_double(value);
  return *this;
}

CsvBuilder& CsvBuilder::field(int value) {
  separator();
  out_ += std::to_string(value);
  return *this;
}

CsvBuilder& CsvBuilder::field(const std::string& value) {
  separator();
  out_ += value;
  return *this;
}

CsvBuilder& CsvBuilder::blank() {
  separator();
  return *this;
}

void CsvBuilder::end_row() {
  out_ += '\n';
  row_open_ = false;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw config_error("write failed for '" + path + "'");
}

}  // namespace eaqt
