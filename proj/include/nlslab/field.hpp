#ifndef NLSLAB_FIELD_HPP
#define NLSLAB_FIELD_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

using Complex = std::complex<double>;

// Complex-valued function sampled on a Grid. Immutable by convention after
// construction; all operations below return new fields or mutate explicit
// output arguments.
struct Field {
  Grid grid;
  std::vector<Complex> values;

  Field() = default;
  explicit Field(const Grid& g) : grid(g), values(g.size(), Complex{0.0, 0.0}) {}
};

template <typename F>
Field sample_field(const Grid& grid, F&& f) {
  Field out(grid);
  if (grid.dim == 1) {
    for (int i = 0; i < grid.n; ++i)
      out.values[i] = f(std::array<double, 2>{grid.coord(i), 0.0});
  } else {
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j)
        out.values[static_cast<std::size_t>(i) * grid.n + j] =
            f(std::array<double, 2>{grid.coord(i), grid.coord(j)});
  }
  return out;
}

inline Field gaussian_profile(const Grid& grid, double amplitude = 1.0, double width = 1.0) {
  const double w2 = 2.0 * width * width;
  return sample_field(grid, [&](const std::array<double, 2>& x) {
    const double r2 = x[0] * x[0] + x[1] * x[1];
    return Complex{amplitude * std::exp(-r2 / w2), 0.0};
  });
}

inline Field sech_profile(const Grid& grid, double amplitude = 1.0, double width = 1.0) {
  return sample_field(grid, [&](const std::array<double, 2>& x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    return Complex{amplitude / std::cosh(r / width), 0.0};
  });
}

inline Field make_profile_field(const Grid& grid, const std::string& name,
                                double amplitude = 1.0, double width = 1.0) {
  if (name == "gaussian") return gaussian_profile(grid, amplitude, width);
  if (name == "sech") return sech_profile(grid, amplitude, width);
  throw std::invalid_argument("unknown profile: " + name);
}

inline bool is_finite(const Field& f) {
  for (const auto& v : f.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

inline void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("grid mismatch");
}

inline Field scaled(const Field& f, Complex c) {
  Field out = f;
  for (auto& v : out.values) v *= c;
  return out;
}

// y += a * x
inline void add_scaled(Field& y, Complex a, const Field& x) {
  require_same_grid(y, x);
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
}

inline Field difference(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

}  // namespace nlslab

#endif
