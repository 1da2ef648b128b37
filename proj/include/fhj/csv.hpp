#ifndef FHJ_CSV_HPP
#define FHJ_CSV_HPP

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace fhj {

/// Shortest decimal representation that round-trips the double exactly
/// (std::to_chars); the fixed choice that makes CSV outputs byte-stable.
std::string format_double(double v);

/// CSV with '\n' line endings and format_double for numeric cells.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            std::span<const std::string> header);
  void row(std::span<const double> values);
  void row(std::span<const std::string> cells);

 private:
  std::ofstream out_;
};

/// Numeric CSV loaded column-wise.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace fhj

#endif
