#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bdsim::io {

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

/// RFC-4180 CSV: comma separated, CRLF line endings, header row first.
class CsvWriter {
public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string_view>& cols);
  CsvWriter& add(double v);
  CsvWriter& add(long long v);
  CsvWriter& add(std::string_view v);
  void end_row();

private:
  std::ostream& os_;
  std::vector<std::string> cells_;
  void flush_row();
};

}  // namespace bdsim::io
