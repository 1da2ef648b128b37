#include "fhj/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace fhj {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     std::span<const std::string> header)
    : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("cannot open " + path.string());
  row(header);
}

void CsvWriter::row(std::span<const std::string> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_double(values[i]);
  }
  out_ << '\n';
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return columns[i];
  throw std::invalid_argument("csv: no column named " + name);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  CsvTable table;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = s.find(',', start);
      cells.push_back(s.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return cells;
  };
  if (!std::getline(in, line)) throw std::invalid_argument("csv: empty file");
  table.header = split(line);
  table.columns.resize(table.header.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != table.header.size())
      throw std::invalid_argument("csv: ragged row in " + path.string());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double v = 0.0;
      auto [ptr, ec] =
          std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), v);
      if (ec != std::errc())
        throw std::invalid_argument("csv: bad numeric cell '" + cells[i] + "'");
      (void)ptr;
      table.columns[i].push_back(v);
    }
  }
  return table;
}

}  // namespace fhj
