#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace qfc {

/// Shortest exact decimal form kept out: fixed "%.17g" so identical inputs
/// render to identical bytes on every run and platform.
std::string format_g17(double v);

/// Line-oriented CSV emitter with a fixed column schema. Throws IoError on
/// any stream failure.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns);
  ~CsvWriter();

  void row(const std::vector<double>& values);
  void close();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
  std::size_t n_columns_ = 0;
};

}  // namespace qfc
