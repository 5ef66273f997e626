#ifndef NLSLAB_GRID_HPP
#define NLSLAB_GRID_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace nlslab {

// Uniform periodic grid on a centered box [-L/2, L/2)^d, d in {1, 2},
// n points per axis (power of two). Spatial quadrature weight is h^d.
struct Grid {
  int dim = 1;
  int n = 8;
  double length = 1.0;

  Grid() = default;
  Grid(int dim_, int n_, double length_) : dim(dim_), n(n_), length(length_) {
    if (dim != 1 && dim != 2)
      throw std::invalid_argument("grid dimension must be 1 or 2");
    if (n < 8 || (n & (n - 1)) != 0)
      throw std::invalid_argument("grid size must be a power of two >= 8");
    if (!(length > 0.0)) throw std::invalid_argument("box length must be positive");
  }

  double spacing() const { return length / n; }

  std::size_t size() const {
    return dim == 1 ? static_cast<std::size_t>(n)
                    : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }

  // Coordinate along one axis, centered at the box center.
  double coord(int i) const { return -0.5 * length + i * spacing(); }

  // Frequency lattice (2 pi / L) * {-n/2, ..., n/2 - 1} in FFT index order.
  double wavenumber(int i) const {
    const int s = i < n / 2 ? i : i - n;
    return 2.0 * std::numbers::pi / length * s;
  }

  double nyquist() const { return std::numbers::pi / spacing(); }

  bool operator==(const Grid& other) const {
    return dim == other.dim && n == other.n && length == other.length;
  }
};

}  // namespace nlslab

#endif
