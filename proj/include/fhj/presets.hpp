#ifndef FHJ_PRESETS_HPP
#define FHJ_PRESETS_HPP

#include <optional>
#include <string>

#include "fhj/field.hpp"

namespace fhj {

/// Named initial data families on a grid:
///   bump    - compactly supported C-infinity bump of the given radius
///   gauss   - smooth rapidly decaying exp(-|x|^2 / R^2)
///   poisson - periodized P_1 profile (unit mass on the torus)
///   dipole  - difference of two bumps at grid-aligned offsets, mass 0
/// When amplitude is given the field is rescaled so its homogeneous
/// B^1_{inf,1} norm equals it; otherwise the natural scale is kept
/// (poisson keeps unit mass).
Field preset_initial_data(const std::string& name, const TorusGrid& grid,
                          std::optional<double> amplitude,
                          double support_radius = 2.0);

}  // namespace fhj

#endif
