#include "fhj/snapshot.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "fhj/csv.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot binary format assumes a little-endian host");

namespace fhj {

namespace {

constexpr char kMagic[4] = {'F', 'H', 'J', '1'};

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("snapshot: bad ") + what + ": " + s);
  return v;
}

}  // namespace

void write_snapshot_text(const std::filesystem::path& path, const Field& f,
                         double time) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << f.grid.dim() << ' ' << f.grid.points_per_axis() << ' '
      << format_double(f.grid.period()) << ' ' << format_double(time) << '\n';
  for (double v : f.samples) out << format_double(v) << '\n';
}

void write_snapshot_binary(const std::filesystem::path& path, const Field& f,
                           double time) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out.write(kMagic, 4);
  const std::int32_t dim = f.grid.dim();
  const std::int32_t m = f.grid.points_per_axis();
  const double period = f.grid.period();
  out.write(reinterpret_cast<const char*>(&dim), 4);
  out.write(reinterpret_cast<const char*>(&m), 4);
  out.write(reinterpret_cast<const char*>(&period), 8);
  out.write(reinterpret_cast<const char*>(&time), 8);
  out.write(reinterpret_cast<const char*>(f.samples.data()),
            static_cast<std::streamsize>(f.samples.size() * 8));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open snapshot " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0) {
    std::int32_t dim = 0, m = 0;
    double period = 0.0, time = 0.0;
    in.read(reinterpret_cast<char*>(&dim), 4);
    in.read(reinterpret_cast<char*>(&m), 4);
    in.read(reinterpret_cast<char*>(&period), 8);
    in.read(reinterpret_cast<char*>(&time), 8);
    if (!in) throw std::invalid_argument("snapshot: truncated header");
    TorusGrid grid(dim, m, period);
    std::vector<double> samples(grid.size());
    in.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(samples.size() * 8));
    if (!in) throw std::invalid_argument("snapshot: truncated samples");
    return {Field(grid, std::move(samples)), time};
  }

  in.clear();
  in.seekg(0);
  int dim = 0, m = 0;
  std::string l_str, t_str;
  if (!(in >> dim >> m >> l_str >> t_str))
    throw std::invalid_argument("snapshot: bad text header in " + path.string());
  TorusGrid grid(dim, m, parse_double(l_str, "period"));
  const double time = parse_double(t_str, "time");
  std::vector<double> samples(grid.size());
  std::string cell;
  for (auto& v : samples) {
    if (!(in >> cell))
      throw std::invalid_argument("snapshot: truncated text samples");
    v = parse_double(cell, "sample");
  }
  return {Field(grid, std::move(samples)), time};
}

}  // namespace fhj
