#ifndef FHJ_SNAPSHOT_HPP
#define FHJ_SNAPSHOT_HPP

#include <filesystem>

#include "fhj/field.hpp"

namespace fhj {

struct Snapshot {
  Field field;
  double time;
};

/// Text format: header line "N M L t", then M^N samples one per line in
/// shortest round-trip decimal (lossless for doubles).
void write_snapshot_text(const std::filesystem::path& path, const Field& f,
                         double time);

/// Binary format: magic "FHJ1", N and M as little-endian int32, L and t as
/// little-endian float64, then the samples as little-endian float64.
void write_snapshot_binary(const std::filesystem::path& path, const Field& f,
                           double time);

/// Reads either format, sniffing the magic bytes.
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace fhj

#endif
