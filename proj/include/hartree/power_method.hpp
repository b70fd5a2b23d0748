// Shifted power method for the ground state of a fixed symmetric operator.
#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hartree/field_vector.hpp"
#include "hartree/hamiltonian.hpp"

namespace hartree {

class PowerMethodError : public std::runtime_error {
 public:
  PowerMethodError(const std::string& msg, double residual, long iters)
      : std::runtime_error(msg), last_residual(residual), iterations(iters) {}

  double last_residual;
  long iterations;
};

// Anything the iteration needs from the operator: dimension, the spectral
// shift making the ground state dominant, and a fused apply returning the
// Rayleigh numerator.
template <class Op>
concept GroundStateOperator =
    requires(const Op& op, std::span<const double> in, std::span<double> out) {
      { op.size() } -> std::convertible_to<long>;
      { op.shift() } -> std::convertible_to<double>;
      { op.apply_dot(in, out) } -> std::convertible_to<double>;
    };

struct PmScalars {
  double energy = 0.0;    // <z, H z> of the returned unit iterate
  double residual = std::numeric_limits<double>::infinity();
  long iterations = 0;    // operator applications performed
};

namespace detail {

// splitmix64 finalizer mapped to [-0.5, 0.5); deterministic per node index.
inline double index_noise(std::uint64_t j) {
  std::uint64_t x = j + 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  x ^= x >> 31;
  return static_cast<double>(x >> 11) * 0x1.0p-53 - 0.5;
}

inline void normalize_euclidean(std::span<double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  const double inv = 1.0 / std::sqrt(s);
  for (double& v : z) v *= inv;
}

inline void canonicalize_sign(std::span<double> z) {
  size_t k = 0;
  double best = -1.0;
  for (size_t j = 0; j < z.size(); ++j) {
    const double a = std::abs(z[j]);
    if (a > best) {
      best = a;
      k = j;
    }
  }
  if (z[k] < 0.0)
    for (double& v : z) v = -v;
}

}  // namespace detail

// Iterates z <- (H - s) z / |(H - s) z| until the relative residual
// |(H - eps) z| / eps passes the tolerance, eps being the Rayleigh quotient
// of the current unit iterate. The quotient equals the shifted-form
// criterion |(H_hat - eps_hat) z| / |eps_hat + s| and is independent of s.
//
// The residual is evaluated against the unshifted apply, so its floating
// point floor is set by the operator's spectral scale rather than by the
// much larger shift.
//
// z holds the start vector on entry (any nonzero) and the sign-canonical
// unit ground state approximation on exit.
template <GroundStateOperator Op>
PmScalars power_iterate_core(const Op& op, std::span<double> z,
                             double tolerance, long max_iterations) {
  const size_t n = static_cast<size_t>(op.size());
  if (z.size() != n)
    throw std::invalid_argument("power method: start length mismatch");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("power method: tolerance must be positive");

  double start_norm = 0.0;
  for (double v : z) start_norm += v * v;
  if (start_norm == 0.0)
    throw std::invalid_argument("power method: start vector must be nonzero");
  const double inv0 = 1.0 / std::sqrt(start_norm);
  for (size_t j = 0; j < n; ++j)
    z[j] = z[j] * inv0 + 1e-12 * detail::index_noise(j);
  detail::normalize_euclidean(z);

  const double s = op.shift();
  std::vector<double> u(n);
  PmScalars out;
  for (long p = 1; p <= max_iterations; ++p) {
    const double eps = op.apply_dot(z, u);  // u = H z, z unit
    if (eps == 0.0)
      throw std::domain_error("power method: degenerate Rayleigh quotient");
    double r2 = 0.0;
    double y2 = 0.0;
    for (size_t j = 0; j < n; ++j) {
      const double t = u[j] - eps * z[j];
      r2 += t * t;
      const double y = u[j] - s * z[j];
      y2 += y * y;
      u[j] = y;
    }
    out.energy = eps;
    out.residual = std::sqrt(r2) / std::abs(eps);
    out.iterations = p;
    if (out.residual <= tolerance) {
      detail::canonicalize_sign(z);
      return out;
    }
    if (y2 == 0.0)
      throw std::domain_error("power method: shifted iterate vanished");
    const double inv = 1.0 / std::sqrt(y2);
    for (size_t j = 0; j < n; ++j) z[j] = u[j] * inv;
  }
  throw PowerMethodError(
      "power method: no convergence within " +
          std::to_string(max_iterations) +
          " iterations (residual " + std::to_string(out.residual) + ")",
      out.residual, out.iterations);
}

struct PmResult {
  FieldVector ground_vector;  // unit Euclidean norm, sign-canonical
  double shifted_energy;      // eps_hat in (-2s, 0)
  double energy;              // eps = eps_hat + s = <z, H z>
  long iterations;
  double final_residual;
};

inline PmResult power_iterate(const HamiltonianOperator& op,
                              const FieldVector& start, double tolerance,
                              long max_iterations) {
  if (!same_lattice(start.lattice(), op.lattice()))
    throw std::invalid_argument("power method: start lattice mismatch");
  FieldVector z = start;
  const PmScalars sc =
      power_iterate_core(op, z.values(), tolerance, max_iterations);
  return PmResult{std::move(z), sc.energy - op.shift(), sc.energy,
                  sc.iterations, sc.residual};
}

// |(H_hat - eps_hat) z| / |eps_hat + s| for a unit vector z, evaluated as
// |(H - eps) z| / |eps|; any shift change with eps_hat adjusted in step
// leaves the value untouched.
template <GroundStateOperator Op>
double eigen_residual(const Op& op, std::span<const double> unit_z,
                      double eps_hat, double shift) {
  const double eps = eps_hat + shift;
  if (eps == 0.0)
    throw std::domain_error("eigen residual: degenerate denominator");
  std::vector<double> u(unit_z.size());
  op.apply_dot(unit_z, u);
  double r2 = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    const double t = u[j] - eps * unit_z[j];
    r2 += t * t;
  }
  return std::sqrt(r2) / std::abs(eps);
}

inline double eigen_residual(const HamiltonianOperator& op,
                             const FieldVector& unit_z, double eps_hat,
                             double shift) {
  if (!same_lattice(unit_z.lattice(), op.lattice()))
    throw std::invalid_argument("eigen residual: lattice mismatch");
  return eigen_residual<HamiltonianOperator>(op, unit_z.values(), eps_hat,
                                             shift);
}

}  // namespace hartree
