#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hubloc::csv {

/// Minimal reader for the comma-separated files this project exchanges.
/// No quoting: ids and numbers never contain commas. Handles a UTF-8 BOM,
/// CRLF line endings and skips blank lines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Reads the header row and throws InputError unless it equals `expected`.
  void expect_header(std::string_view expected);
  /// Reads the header row as fields.
  std::vector<std::string> header();

  /// Next data row, or nullopt at end of input.
  std::optional<std::vector<std::string>> next();

  /// 1-based line number of the row returned last.
  std::size_t line() const noexcept { return line_; }

 private:
  bool read_line(std::string& out);

  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::string> split(std::string_view line);

/// Parses a floating point field; throws InputError mentioning `what` and `line`.
double parse_double(std::string_view field, std::string_view what, std::size_t line);
long long parse_int(std::string_view field, std::string_view what, std::size_t line);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace hubloc::csv
