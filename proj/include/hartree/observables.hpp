// Coulomb energy, the discrete energy breakdown, and segregation diagnostics.
#pragma once

#include <algorithm>
#include <cmath>

#include "hartree/context.hpp"
#include "hartree/field_vector.hpp"
#include "hartree/hamiltonian.hpp"
#include "hartree/mss.hpp"

namespace hartree {

// D0[z1,z2] = <z1, diag(G0[z2]) z1> with a precomputed density vector.
inline double coulomb_energy(const FieldVector& z1,
                             const FieldVector& g0_of_z2) {
  check_same_lattice(z1, g0_of_z2, "coulomb energy");
  const auto zv = z1.values();
  const auto gv = g0_of_z2.values();
  double s = 0.0;
  for (size_t j = 0; j < zv.size(); ++j) s += zv[j] * zv[j] * gv[j];
  return s;
}

inline double coulomb_energy(const FieldVector& z1, const FieldVector& z2,
                             ConvolutionEngine& convolution) {
  return coulomb_energy(z1, convolution.apply(z2));
}

struct EnergyBreakdown {
  double kinetic1 = 0.0;  // <z, B z>
  double kinetic2 = 0.0;
  double external1 = 0.0;  // <z, Y z>
  double external2 = 0.0;
  double self1 = 0.0;  // (theta/2) D0[z,z]
  double self2 = 0.0;
  double interaction = 0.0;  // kappa D0[z1,z2]
  double total = 0.0;        // E_kappa
  double decoupled = 0.0;    // E_kappa - interaction
};

namespace detail {

inline double diagonal_quadratic(const FieldVector& z,
                                 const DiagonalPotential& pot) {
  const auto zv = z.values();
  const auto pv = pot.entries();
  double s = 0.0;
  for (size_t j = 0; j < zv.size(); ++j) s += pv[j] * zv[j] * zv[j];
  return s;
}

}  // namespace detail

// All parts use Euclidean pairings of the assembled quadratic forms (before
// the 1/h^2 operator prefactor), which equal the lumped quadrature of the
// continuum integrals.
inline EnergyBreakdown energy_breakdown(const FieldVector& z1,
                                        const FieldVector& z2,
                                        const CouplingSpec& cpl,
                                        const DiagonalPotential& external1,
                                        const DiagonalPotential& external2,
                                        const FieldVector& g1,
                                        const FieldVector& g2) {
  EnergyBreakdown e;
  e.kinetic1 = dot(z1, stiffness_apply(z1));
  e.kinetic2 = dot(z2, stiffness_apply(z2));
  e.external1 = detail::diagonal_quadratic(z1, external1);
  e.external2 = detail::diagonal_quadratic(z2, external2);
  e.self1 = 0.5 * cpl.theta1 * coulomb_energy(z1, g1);
  e.self2 = 0.5 * cpl.theta2 * coulomb_energy(z2, g2);
  e.interaction = cpl.kappa * coulomb_energy(z1, g2);
  e.decoupled = (e.kinetic1 + e.external1 + e.self1) +
                (e.kinetic2 + e.external2 + e.self2);
  e.total = e.decoupled + e.interaction;
  return e;
}

inline EnergyBreakdown energy_breakdown(const FieldVector& z1,
                                        const FieldVector& z2,
                                        const CouplingSpec& cpl,
                                        SolverContext& ctx) {
  const FieldVector g1 = ctx.convolution.apply(z1);
  const FieldVector g2 = ctx.convolution.apply(z2);
  return energy_breakdown(z1, z2, cpl, ctx.external1, ctx.external2, g1, g2);
}

// Overlap of the two densities, h^2 sum_j min(z1_j^2, z2_j^2); equals the
// common mass when the supports coincide and vanishes when they segregate.
inline double min_density_overlap(const FieldVector& z1,
                                  const FieldVector& z2) {
  check_same_lattice(z1, z2, "density overlap");
  const auto a = z1.values();
  const auto b = z2.values();
  double s = 0.0;
  for (size_t j = 0; j < a.size(); ++j)
    s += std::min(a[j] * a[j], b[j] * b[j]);
  const double h = z1.lattice().spacing;
  return h * h * s;
}

}  // namespace hartree
