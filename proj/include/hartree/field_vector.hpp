// Coefficient vector of one component's finite element expansion.
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hartree/lattice.hpp"

namespace hartree {

// Real coefficients z_j on the interior nodes, row-major (x fastest).
// The lumped L2 norm is h*|z| since the lumped mass matrix is h^2*I.
class FieldVector {
 public:
  explicit FieldVector(const LatticeSpec& lat, double fill = 0.0)
      : lattice_(lat),
        values_(static_cast<size_t>(lat.interior_count), fill) {}

  FieldVector(const LatticeSpec& lat, std::vector<double> values)
      : lattice_(lat), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(lat.interior_count))
      throw std::invalid_argument("field vector: value count does not match lattice");
  }

  int size() const { return lattice_.interior_count; }
  const LatticeSpec& lattice() const { return lattice_; }

  double operator[](int j) const { return values_[static_cast<size_t>(j)]; }
  double& operator[](int j) { return values_[static_cast<size_t>(j)]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double euclidean_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
  }

  // |z|_2 = h*|z|
  double lumped_norm() const { return lattice_.spacing * euclidean_norm(); }

  // |z|_2^2 = h^2 * sum z_j^2, the discrete L2 mass.
  double mass() const {
    const double ln = lumped_norm();
    return ln * ln;
  }

  void scale(double a) {
    for (double& v : values_) v *= a;
  }

  // Rescales so that mass() == target exactly up to one rounding.
  void normalize_mass(double target) {
    if (!(target > 0.0))
      throw std::invalid_argument("field vector: target mass must be positive");
    const double ln = lumped_norm();
    if (ln == 0.0)
      throw std::invalid_argument("field vector: cannot normalize the zero vector");
    scale(std::sqrt(target) / ln);
  }

 private:
  LatticeSpec lattice_;
  std::vector<double> values_;
};

inline void check_same_lattice(const FieldVector& a, const FieldVector& b,
                               const char* what) {
  if (!same_lattice(a.lattice(), b.lattice()))
    throw std::invalid_argument(std::string(what) + ": lattice mismatch");
}

inline double dot(const FieldVector& a, const FieldVector& b) {
  check_same_lattice(a, b, "dot");
  double s = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (size_t i = 0; i < av.size(); ++i) s += av[i] * bv[i];
  return s;
}

// Lumped L2 pairing <a,b>_2 = h^2 <a,b>.
inline double lumped_dot(const FieldVector& a, const FieldVector& b) {
  return a.lattice().spacing * a.lattice().spacing * dot(a, b);
}

}  // namespace hartree
