// External trap potentials and the interaction kernel with its node table.
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hartree/lattice.hpp"

namespace hartree {

// Isotropic harmonic trap c*((x-a)^2 + (y-b)^2).
class HarmonicPotential {
 public:
  HarmonicPotential(double center_x, double center_y, double strength)
      : center_x_(center_x), center_y_(center_y), strength_(strength) {
    if (strength < 0.0)
      throw std::invalid_argument("harmonic potential: strength must be nonnegative");
  }

  double operator()(double x, double y) const {
    const double dx = x - center_x_;
    const double dy = y - center_y_;
    return strength_ * (dx * dx + dy * dy);
  }

  double center_x() const { return center_x_; }
  double center_y() const { return center_y_; }
  double strength() const { return strength_; }

 private:
  double center_x_;
  double center_y_;
  double strength_;
};

// Screened interaction exp(-screening*r) / (r + regularization), finite at
// the origin where it equals 1/regularization.
class YukawaPotential {
 public:
  YukawaPotential(double screening, double regularization)
      : screening_(screening), regularization_(regularization) {
    if (screening < 0.0)
      throw std::invalid_argument("yukawa potential: screening must be nonnegative");
    if (!(regularization > 0.0))
      throw std::invalid_argument("yukawa potential: regularization must be positive");
  }

  double operator()(double x, double y) const {
    const double r = std::sqrt(x * x + y * y);
    return std::exp(-screening_ * r) / (r + regularization_);
  }

  double screening() const { return screening_; }
  double regularization() const { return regularization_; }

 private:
  double screening_;
  double regularization_;
};

// Interaction kernel sampled at every node offset realizable between two
// interior nodes: (dx, dy) in [-(m-3), m-3]^2, value V(h*dx, h*dy).
// Immutable once built; shared read-only across a sweep.
class KernelTable {
 public:
  KernelTable(int max_offset, std::vector<double> values)
      : max_offset_(max_offset),
        stride_(2 * max_offset + 1),
        values_(std::move(values)) {
    if (max_offset < 0 ||
        values_.size() != static_cast<size_t>(stride_) * stride_)
      throw std::invalid_argument("kernel table: size does not match offset range");
  }

  int max_offset() const { return max_offset_; }

  double at(int dx, int dy) const {
    if (dx < -max_offset_ || dx > max_offset_ || dy < -max_offset_ ||
        dy > max_offset_)
      throw std::out_of_range("kernel table: offset out of range");
    return unchecked(dx, dy);
  }

  double unchecked(int dx, int dy) const noexcept {
    return values_[static_cast<size_t>(dy + max_offset_) * stride_ +
                   (dx + max_offset_)];
  }

  // Contiguous row at fixed dy, starting at dx = -max_offset.
  const double* row(int dy) const noexcept {
    return values_.data() + static_cast<size_t>(dy + max_offset_) * stride_;
  }

 private:
  int max_offset_;
  int stride_;
  std::vector<double> values_;
};

// Tabulates any radial kernel with a finite value at the origin. Only the
// dx,dy >= 0 quadrant is evaluated; the rest is mirrored, so the even
// symmetry of the table is exact.
template <class Kernel>
KernelTable build_kernel_table(const LatticeSpec& lat, Kernel&& kernel) {
  const int mo = lat.interior_per_side - 1;
  const int stride = 2 * mo + 1;
  const double h = lat.spacing;
  std::vector<double> values(static_cast<size_t>(stride) * stride);
  auto slot = [&](int dx, int dy) -> double& {
    return values[static_cast<size_t>(dy + mo) * stride + (dx + mo)];
  };
  for (int dy = 0; dy <= mo; ++dy) {
    for (int dx = 0; dx <= mo; ++dx) {
      const double v = kernel(dx * h, dy * h);
      slot(dx, dy) = v;
      slot(-dx, dy) = v;
      slot(dx, -dy) = v;
      slot(-dx, -dy) = v;
    }
  }
  return KernelTable(mo, std::move(values));
}

inline KernelTable build_kernel_table(const YukawaPotential& kernel,
                                      const LatticeSpec& lat) {
  return build_kernel_table(lat, kernel);
}

}  // namespace hartree
