#pragma once

#include <string>
#include <vector>

namespace eaqt {

/// Builds the flat-file output: `# key=value` preamble lines, one column
/// header row, then data rows. Numbers are written with '.' decimal
/// separator in scientific notation at 17 significant digits, so equal
/// doubles always serialize to equal bytes.
class CsvBuilder {
 public:
  explicit CsvBuilder(const std::string& schema);

  void comment(const std::string& text);
  void columns(const std::vector<std::string>& names);

  CsvBuilder& field(double value);
  CsvBuilder& field(int value);
  CsvBuilder& field(const std::string& value);
  CsvBuilder& blank();
  void end_row();

  const std::string& str() const { return out_; }

  static std::string format_double(double value);

 private:
  void separator();
  std::string out_;
  bool row_open_ = false;
};

/// Writes text to a file, throwing config_error on I/O failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace eaqt
