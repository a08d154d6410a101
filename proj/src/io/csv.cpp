#include "ofdrshape/io/csv.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ofdrshape/error.hpp"

namespace ofdrshape::io {
namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view field = line.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
      field.remove_suffix(1);
    }
    out.emplace_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

CsvTable read_csv(const std::filesystem::path& path, std::string_view expected_header) {
  const std::string text = read_text(path);
  std::istringstream in(text);
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  const auto expected = split(expected_header);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split(line);
    if (table.header.empty()) {
      if (fields != expected) {
        throw DomainError(path.string() + ": expected header '" + std::string(expected_header) +
                          "', got '" + line + "'");
      }
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw DomainError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(table.header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.lines.push_back(lineno);
  }
  if (table.header.empty()) throw DomainError(path.string() + ": missing header");
  return table;
}

double parse_double(std::string_view text, std::string_view context) {
  if (text == "inf" || text == "+inf" || text == "Inf") return INFINITY;
  if (text == "-inf" || text == "-Inf") return -INFINITY;
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError(std::string(context) + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

long long parse_int(std::string_view text, std::string_view context) {
  long long value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError(std::string(context) + ": not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  return fmt::format("{:.12g}", value);
}

}  // namespace ofdrshape::io
