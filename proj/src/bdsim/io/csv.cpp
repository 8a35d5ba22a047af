#include "bdsim/io/csv.hpp"

#include <charconv>

namespace bdsim::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void CsvWriter::header(const std::vector<std::string_view>& cols) {
  for (const auto c : cols) cells_.emplace_back(c);
  flush_row();
}

CsvWriter& CsvWriter::add(double v) {
  cells_.push_back(format_double(v));
  return *this;
}

CsvWriter& CsvWriter::add(long long v) {
  cells_.push_back(std::to_string(v));
  return *this;
}

CsvWriter& CsvWriter::add(std::string_view v) {
  cells_.emplace_back(v);
  return *this;
}

void CsvWriter::end_row() { flush_row(); }

void CsvWriter::flush_row() {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) os_ << ',';
    os_ << cells_[i];
  }
  os_ << "\r\n";
  cells_.clear();
}

}  // namespace bdsim::io
