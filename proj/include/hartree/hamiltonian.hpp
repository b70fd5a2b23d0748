// Matrix-free discrete Hamiltonian: bilinear stiffness stencil, lumped
// diagonal potential and convolution terms, and the l1 spectral shift.
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hartree/field_vector.hpp"
#include "hartree/lattice.hpp"
#include "hartree/potentials.hpp"

namespace hartree {

// 9-point stencil of the bilinear element stiffness matrix on squares.
// Weights are h-independent in 2D; the interior row sum is zero.
struct StiffnessStencil {
  static constexpr double center = 8.0 / 3.0;
  static constexpr double edge = -1.0 / 3.0;
  static constexpr double corner = -1.0 / 3.0;
};

namespace detail {

// out_j = diag(j)*z_j + off*(sum of the 8 neighbors of j), Dirichlet-zero
// outside the interior grid. Returns <z, out>.
//
// Neighbor contributions are accumulated in antipodal pairs
// (W+E)+(S+N) and (SW+NE)+(SE+NW); any of the 8 square symmetries permutes
// pairs or swaps within a pair, so symmetric input gives bitwise symmetric
// output.
template <class DiagAt>
double stencil_diag_apply(std::span<const double> z, std::span<double> out,
                          int n, DiagAt diag, double off,
                          std::span<const double> zero_row) {
  const double* zp = z.data();
  double* op = out.data();
  const double* zero = zero_row.data();
  double acc = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    const double* zc = zp + static_cast<size_t>(iy) * n;
    const double* zs = iy > 0 ? zc - n : zero;
    const double* zn = iy < n - 1 ? zc + n : zero;
    double* oc = op + static_cast<size_t>(iy) * n;
    const int base = iy * n;
    {
      const double edges = zc[1] + (zs[0] + zn[0]);
      const double corners = zn[1] + zs[1];
      const double v = diag(base) * zc[0] + off * (edges + corners);
      oc[0] = v;
      acc += zc[0] * v;
    }
    for (int ix = 1; ix < n - 1; ++ix) {
      const double edges = (zc[ix - 1] + zc[ix + 1]) + (zs[ix] + zn[ix]);
      const double corners =
          (zs[ix - 1] + zn[ix + 1]) + (zs[ix + 1] + zn[ix - 1]);
      const double v = diag(base + ix) * zc[ix] + off * (edges + corners);
      oc[ix] = v;
      acc += zc[ix] * v;
    }
    {
      const int ix = n - 1;
      const double edges = zc[ix - 1] + (zs[ix] + zn[ix]);
      const double corners = zs[ix - 1] + zn[ix - 1];
      const double v = diag(base + ix) * zc[ix] + off * (edges + corners);
      oc[ix] = v;
      acc += zc[ix] * v;
    }
  }
  return acc;
}

}  // namespace detail

// B z with the 9-point stencil (no 1/h^2 scaling); exact agreement with the
// dense assembly of (grad phi_i, grad phi_j).
inline void stiffness_apply(const FieldVector& z, FieldVector& out) {
  check_same_lattice(z, out, "stiffness apply");
  const int n = z.lattice().interior_per_side;
  std::vector<double> zero_row(static_cast<size_t>(n), 0.0);
  detail::stencil_diag_apply(
      z.values(), out.values(), n, [](int) { return StiffnessStencil::center; },
      StiffnessStencil::edge, zero_row);
}

inline FieldVector stiffness_apply(const FieldVector& z) {
  FieldVector out(z.lattice());
  stiffness_apply(z, out);
  return out;
}

// Lumped mass matrix is h^2 * I: the diagonal entry is the integral of the
// bilinear basis function over the domain.
struct LumpedMass {
  double node_weight;  // h^2
};

inline LumpedMass lumped_mass(const LatticeSpec& lat) {
  return {lat.spacing * lat.spacing};
}

// Diagonal of the lumped external potential matrix Y: entry_j = h^2 V(x_j),
// i.e. V(x_j) after the 1/h^2 prefactor of the assembled operator.
class DiagonalPotential {
 public:
  template <class Pot>
  DiagonalPotential(const LatticeSpec& lat, Pot&& potential) : lattice_(lat) {
    const double w = lumped_mass(lat).node_weight;
    entries_.resize(static_cast<size_t>(lat.interior_count));
    for (int j = 0; j < lat.interior_count; ++j) {
      const auto xy = node_position(j, lat);
      entries_[static_cast<size_t>(j)] = w * potential(xy[0], xy[1]);
    }
  }

  const LatticeSpec& lattice() const { return lattice_; }
  std::span<const double> entries() const { return entries_; }

 private:
  LatticeSpec lattice_;
  std::vector<double> entries_;
};

// H[z1,z2] = (1/h^2) (B + Y + theta*diag(G0[z_own]) + kappa*diag(G0[z_cross]))
// applied matrix-free. The two density vectors are frozen at construction;
// the operator is immutable and symmetric.
class HamiltonianOperator {
 public:
  HamiltonianOperator(const LatticeSpec& lat, const DiagonalPotential& external,
                      double theta_own = 0.0, double kappa = 0.0,
                      std::span<const double> own_density = {},
                      std::span<const double> cross_density = {})
      : lattice_(lat),
        zero_row_(static_cast<size_t>(lat.interior_per_side), 0.0) {
    if (!same_lattice(external.lattice(), lat))
      throw std::invalid_argument("hamiltonian: potential lattice mismatch");
    const size_t m = static_cast<size_t>(lat.interior_count);
    if (!own_density.empty() && own_density.size() != m)
      throw std::invalid_argument("hamiltonian: own density length mismatch");
    if (!cross_density.empty() && cross_density.size() != m)
      throw std::invalid_argument("hamiltonian: cross density length mismatch");
    if (theta_own < 0.0 || kappa < 0.0)
      throw std::invalid_argument("hamiltonian: couplings must be nonnegative");

    const double h2inv = 1.0 / (lat.spacing * lat.spacing);
    off_ = StiffnessStencil::edge * h2inv;
    diag_.resize(m);
    const auto ext = external.entries();
    for (size_t j = 0; j < m; ++j) {
      double d = StiffnessStencil::center + ext[j];
      if (!own_density.empty()) d += theta_own * own_density[j];
      if (!cross_density.empty()) d += kappa * cross_density[j];
      diag_[j] = d * h2inv;
    }

    // s = |H|_1 + 1 with the entrywise l1 norm, assembled from exact
    // neighbor-pair counts instead of a materialized matrix.
    double diag_l1 = 0.0;
    for (double d : diag_) diag_l1 += std::abs(d);
    const double n = static_cast<double>(lat.interior_per_side);
    const double off_pairs = 4.0 * n * (n - 1.0) + 4.0 * (n - 1.0) * (n - 1.0);
    shift_ = diag_l1 + std::abs(off_) * off_pairs + 1.0;
  }

  int size() const { return lattice_.interior_count; }
  const LatticeSpec& lattice() const { return lattice_; }
  std::span<const double> diagonal() const { return diag_; }
  double off_diagonal_coeff() const { return off_; }

  // Spectral shift s = |H|_1 + 1; every eigenvalue of H - s lies in (-2s, 0).
  double shift() const { return shift_; }

  // out = H z; returns <z, out>.
  double apply_dot(std::span<const double> z, std::span<double> out) const {
    if (z.size() != diag_.size() || out.size() != diag_.size())
      throw std::invalid_argument("hamiltonian: vector length mismatch");
    const double* d = diag_.data();
    return detail::stencil_diag_apply(
        z, out, lattice_.interior_per_side, [d](int j) { return d[j]; }, off_,
        zero_row_);
  }

  void apply(std::span<const double> z, std::span<double> out) const {
    apply_dot(z, out);
  }

  void apply(const FieldVector& z, FieldVector& out) const {
    if (!same_lattice(z.lattice(), lattice_) ||
        !same_lattice(out.lattice(), lattice_))
      throw std::invalid_argument("hamiltonian: field lattice mismatch");
    apply_dot(z.values(), out.values());
  }

  FieldVector apply(const FieldVector& z) const {
    FieldVector out(z.lattice());
    apply(z, out);
    return out;
  }

 private:
  LatticeSpec lattice_;
  std::vector<double> diag_;
  std::vector<double> zero_row_;
  double off_ = 0.0;
  double shift_ = 0.0;
};

}  // namespace hartree
