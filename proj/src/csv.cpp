#include "hubloc/csv.hpp"

#include <charconv>
#include <cmath>

#include "hubloc/error.hpp"

namespace hubloc::csv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool Reader::read_line(std::string& out) {
  while (std::getline(in_, out)) {
    ++line_;
    if (line_ == 1 && out.starts_with("\xEF\xBB\xBF")) out.erase(0, 3);
    if (!out.empty() && out.back() == '\r') out.pop_back();
    if (!trim(out).empty()) return true;
  }
  return false;
}

void Reader::expect_header(std::string_view expected) {
  std::string line;
  if (!read_line(line)) {
    throw InputError("missing header, expected '" + std::string(expected) + "'");
  }
  if (trim(line) != expected) {
    throw InputError("bad header '" + line + "', expected '" + std::string(expected) + "'");
  }
}

std::vector<std::string> Reader::header() {
  std::string line;
  if (!read_line(line)) throw InputError("missing header row");
  return split(line);
}

std::optional<std::vector<std::string>> Reader::next() {
  std::string line;
  if (!read_line(line)) return std::nullopt;
  return split(line);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view field =
        line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    fields.emplace_back(trim(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(std::string_view field, std::string_view what, std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw InputError("row " + std::to_string(line) + ": cannot parse " + std::string(what) +
                     " '" + std::string(field) + "'");
  }
  return value;
}

long long parse_int(std::string_view field, std::string_view what, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw InputError("row " + std::to_string(line) + ": cannot parse " + std::string(what) +
                     " '" + std::string(field) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path.string());
  return out;
}

}  // namespace hubloc::csv
