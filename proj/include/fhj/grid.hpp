#ifndef FHJ_GRID_HPP
#define FHJ_GRID_HPP

#include <array>
#include <cstddef>
#include <numbers>

namespace fhj {

/// Uniform periodic grid on the box [-L/2, L/2)^N, N in {1,2}.
///
/// Points per axis M must be a power of two with M >= 16 so every axis is
/// FFT-friendly. Wavenumbers are k = 2*pi*m/L with integer m in [-M/2, M/2);
/// the standard DFT layout puts m = i for i < M/2 and m = i - M otherwise.
class TorusGrid {
 public:
  TorusGrid(int dim, int points_per_axis, double period);

  int dim() const { return dim_; }
  int points_per_axis() const { return m_; }
  double period() const { return period_; }
  double spacing() const { return period_ / m_; }
  std::size_t size() const { return size_; }
  /// Cell volume h^N, the quadrature weight of one sample.
  double cell_volume() const;
  /// Box volume L^N.
  double volume() const;

  /// Physical coordinate of axis index i: -L/2 + i*h.
  double coord(int i) const { return -0.5 * period_ + i * spacing(); }
  /// Signed integer mode for axis index i (DFT ordering).
  int signed_mode(int i) const { return i < m_ / 2 ? i : i - m_; }
  /// Wavenumber 2*pi*m/L for axis index i.
  double wavenumber(int i) const {
    return 2.0 * std::numbers::pi * signed_mode(i) / period_;
  }

  /// Per-axis indices of a row-major flat index.
  std::array<int, 2> axis_indices(std::size_t flat) const {
    if (dim_ == 1) return {static_cast<int>(flat), 0};
    return {static_cast<int>(flat / m_), static_cast<int>(flat % m_)};
  }
  /// Wavevector of a flat spectral index; second entry is 0 in 1D.
  std::array<double, 2> wavevector(std::size_t flat) const {
    auto idx = axis_indices(flat);
    if (dim_ == 1) return {wavenumber(idx[0]), 0.0};
    return {wavenumber(idx[0]), wavenumber(idx[1])};
  }
  /// |k| of a flat spectral index.
  double wavenumber_magnitude(std::size_t flat) const;

  bool operator==(const TorusGrid& other) const = default;

 private:
  int dim_;
  int m_;
  double period_;
  std::size_t size_;
};

}  // namespace fhj

#endif
