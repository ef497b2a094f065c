#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hchain::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-named rows that serialize to the CSV and JSON artifact formats.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  /// Header row, comma separated, LF line endings.
  std::string to_csv() const;
  /// {"columns": [...], "rows": [{column: value, ...}, ...]}
  std::string to_json() const;
};

/// Locale-independent, 12 significant digits, negative zero printed as 0.
std::string format_number(double value);

/// Writes to `path.tmp` and renames over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace hchain::cli
