#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ofdrshape::io {

/// Minimal reader for the comma-separated formats used here: one header line, no
/// quoting, blank lines ignored.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based source line of each row, for error messages.
  std::vector<std::size_t> lines;
};

/// Throws IoError when the file cannot be read, DomainError when the header differs
/// from `expected_header` or a row has the wrong field count.
CsvTable read_csv(const std::filesystem::path& path, std::string_view expected_header);

/// Parses a double ("inf"/"-inf" accepted). Throws DomainError with `context`.
double parse_double(std::string_view text, std::string_view context);
long long parse_int(std::string_view text, std::string_view context);

/// 12 significant digits; infinities spelled inf / -inf.
std::string format_double(double value);

/// Writes `content` atomically enough for CLI use; throws IoError on failure.
void write_text(const std::filesystem::path& path, std::string_view content);
std::string read_text(const std::filesystem::path& path);

}  // namespace ofdrshape::io
