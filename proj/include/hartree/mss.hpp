// Successive substitution: freeze the convolution densities, solve the two
// decoupled linear ground state problems, renormalize the masses, repeat.
#pragma once

#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hartree/context.hpp"
#include "hartree/field_vector.hpp"
#include "hartree/io.hpp"
#include "hartree/power_method.hpp"

namespace hartree {

struct CouplingSpec {
  double theta1 = 0.0;  // self couplings
  double theta2 = 0.0;
  double kappa = 0.0;  // interaction strength
  double mass1 = 1.0;  // L2 mass constraints N_alpha
  double mass2 = 1.0;
};

inline void validate(const CouplingSpec& c) {
  if (c.theta1 < 0.0 || c.theta2 < 0.0)
    throw std::invalid_argument("couplings: self couplings must be nonnegative");
  if (c.kappa < 0.0)
    throw std::invalid_argument("couplings: interaction strength must be nonnegative");
  if (!(c.mass1 > 0.0) || !(c.mass2 > 0.0))
    throw std::invalid_argument("couplings: masses must be positive");
}

struct ToleranceSpec {
  double pm_tolerance = 1e-10;
  long pm_max_iterations = 200000;
  double mss_tolerance = 1e-8;
  long mss_max_outer = 10000;
  double mixing = 1.0;  // Picard damping; 1 is the plain iteration
};

inline void validate(const ToleranceSpec& t) {
  if (!(t.pm_tolerance > 0.0) || !(t.mss_tolerance > 0.0))
    throw std::invalid_argument("tolerances: accuracies must be positive");
  if (t.pm_max_iterations < 1 || t.mss_max_outer < 1)
    throw std::invalid_argument("tolerances: iteration caps must be positive");
  if (!(t.mixing > 0.0) || t.mixing > 1.0)
    throw std::invalid_argument("tolerances: mixing must be in (0,1]");
}

struct MssState {
  FieldVector z1;
  FieldVector z2;
  double mu1 = 0.0;
  double mu2 = 0.0;
  long outer_iteration = 0;
  double residual1 = std::numeric_limits<double>::infinity();
  double residual2 = std::numeric_limits<double>::infinity();
};

struct OuterRecord {
  long n = 0;           // outer level the record belongs to
  double eps1 = 0.0;    // linear ground energies of the level-n operators
  double eps2 = 0.0;
  double mu1 = 0.0;     // nonlinear Rayleigh quotients at level n
  double mu2 = 0.0;
  double residual1 = 0.0;
  double residual2 = 0.0;
  long pm_iterations1 = 0;
  long pm_iterations2 = 0;
};

struct MssReport {
  bool converged = false;
  long outer_iterations = 0;
  long total_pm_iterations = 0;
  std::vector<OuterRecord> history;
};

class MssError : public std::runtime_error {
 public:
  MssError(const std::string& msg, MssReport rep, MssState state)
      : std::runtime_error(msg),
        report(std::move(rep)),
        last_state(std::move(state)) {}

  MssReport report;
  MssState last_state;
};

enum class InitMode { uniform, gaussian, from_file };

// Positive pair with exact mass normalization; deterministic per mode.
inline MssState initial_state(const SolverContext& ctx, const CouplingSpec& cpl,
                              InitMode mode, const std::string& state_path = {}) {
  validate(cpl);
  const LatticeSpec& lat = ctx.lattice;
  FieldVector z1(lat);
  FieldVector z2(lat);
  switch (mode) {
    case InitMode::uniform: {
      const double h = lat.spacing;
      const double m = static_cast<double>(lat.interior_count);
      const double v1 = std::sqrt(cpl.mass1 / (h * h * m));
      const double v2 = std::sqrt(cpl.mass2 / (h * h * m));
      for (int j = 0; j < lat.interior_count; ++j) {
        z1[j] = v1;
        z2[j] = v2;
      }
      break;
    }
    case InitMode::gaussian: {
      auto fill = [&](FieldVector& z, const HarmonicPotential& trap,
                      double mass) {
        const double c = trap.strength();
        const double sigma =
            c > 0.0 ? std::pow(c, -0.25) : lat.side_length / 8.0;
        const double w = 1.0 / (2.0 * sigma * sigma);
        for (int j = 0; j < lat.interior_count; ++j) {
          const auto xy = node_position(j, lat);
          const double dx = xy[0] - trap.center_x();
          const double dy = xy[1] - trap.center_y();
          z[j] = std::exp(-w * (dx * dx + dy * dy));
        }
        z.normalize_mass(mass);
      };
      fill(z1, ctx.trap1, cpl.mass1);
      fill(z2, ctx.trap2, cpl.mass2);
      break;
    }
    case InitMode::from_file: {
      auto pair = read_state(lat, state_path);
      z1 = std::move(pair.first);
      z2 = std::move(pair.second);
      z1.normalize_mass(cpl.mass1);
      z2.normalize_mass(cpl.mass2);
      break;
    }
  }
  return MssState{std::move(z1), std::move(z2)};
}

namespace detail {

struct StepData {
  MssState state;
  OuterRecord record;
  FieldVector g1;  // G0 densities of the new state, reusable at the next level
  FieldVector g2;
};

inline std::pair<PmResult, PmResult> solve_pair(const HamiltonianOperator& h1,
                                                const HamiltonianOperator& h2,
                                                const MssState& cur,
                                                const ToleranceSpec& tol,
                                                int threads) {
  if (threads >= 2) {
    auto f1 = std::async(std::launch::async, [&] {
      return power_iterate(h1, cur.z1, tol.pm_tolerance,
                           tol.pm_max_iterations);
    });
    std::optional<PmResult> r2;
    std::exception_ptr err;
    try {
      r2 = power_iterate(h2, cur.z2, tol.pm_tolerance, tol.pm_max_iterations);
    } catch (...) {
      err = std::current_exception();
    }
    std::optional<PmResult> r1;
    try {
      r1 = f1.get();
    } catch (...) {
      if (!err) err = std::current_exception();
    }
    if (err) std::rethrow_exception(err);
    return {std::move(*r1), std::move(*r2)};
  }
  PmResult r1 =
      power_iterate(h1, cur.z1, tol.pm_tolerance, tol.pm_max_iterations);
  PmResult r2 =
      power_iterate(h2, cur.z2, tol.pm_tolerance, tol.pm_max_iterations);
  return {std::move(r1), std::move(r2)};
}

// One substitution step with the current-level densities already available.
inline StepData mss_step_impl(const MssState& cur, const CouplingSpec& cpl,
                              const ToleranceSpec& tol, SolverContext& ctx,
                              const FieldVector& g1_cur,
                              const FieldVector& g2_cur) {
  const HamiltonianOperator h1(ctx.lattice, ctx.external1, cpl.theta1,
                               cpl.kappa, g1_cur.values(), g2_cur.values());
  const HamiltonianOperator h2(ctx.lattice, ctx.external2, cpl.theta2,
                               cpl.kappa, g2_cur.values(), g1_cur.values());

  auto [r1, r2] = solve_pair(h1, h2, cur, tol, ctx.threads);

  FieldVector z1 = std::move(r1.ground_vector);
  FieldVector z2 = std::move(r2.ground_vector);
  z1.normalize_mass(cpl.mass1);
  z2.normalize_mass(cpl.mass2);
  if (tol.mixing < 1.0) {
    auto mix = [&](FieldVector& znew, const FieldVector& zold, double mass) {
      const double w = tol.mixing;
      auto nv = znew.values();
      const auto ov = zold.values();
      for (size_t j = 0; j < nv.size(); ++j)
        nv[j] = (1.0 - w) * ov[j] + w * nv[j];
      znew.normalize_mass(mass);
    };
    mix(z1, cur.z1, cpl.mass1);
    mix(z2, cur.z2, cpl.mass2);
  }

  // Nonlinear eigenvalues and residuals use the operators rebuilt at the new
  // level; mu = <z, H z>_2 / N with the lumped pairing.
  FieldVector g1 = ctx.convolution.apply(z1);
  FieldVector g2 = ctx.convolution.apply(z2);
  const HamiltonianOperator k1(ctx.lattice, ctx.external1, cpl.theta1,
                               cpl.kappa, g1.values(), g2.values());
  const HamiltonianOperator k2(ctx.lattice, ctx.external2, cpl.theta2,
                               cpl.kappa, g2.values(), g1.values());
  const double h = ctx.lattice.spacing;
  FieldVector work(ctx.lattice);
  auto rayleigh_and_residual = [&](const HamiltonianOperator& op,
                                   const FieldVector& z, double mass,
                                   double& mu, double& residual) {
    const double num = op.apply_dot(z.values(), work.values());
    mu = h * h * num / mass;
    double r2sum = 0.0;
    const auto zv = z.values();
    const auto uv = work.values();
    for (size_t j = 0; j < zv.size(); ++j) {
      const double t = uv[j] - mu * zv[j];
      r2sum += t * t;
    }
    residual = h * std::sqrt(r2sum) / std::abs(mu);
  };

  StepData out{MssState{std::move(z1), std::move(z2), 0.0, 0.0,
                        cur.outer_iteration + 1,
                        std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()},
               OuterRecord{}, std::move(g1), std::move(g2)};
  rayleigh_and_residual(k1, out.state.z1, cpl.mass1, out.state.mu1,
                        out.state.residual1);
  rayleigh_and_residual(k2, out.state.z2, cpl.mass2, out.state.mu2,
                        out.state.residual2);

  out.record = OuterRecord{out.state.outer_iteration,
                           r1.energy,
                           r2.energy,
                           out.state.mu1,
                           out.state.mu2,
                           out.state.residual1,
                           out.state.residual2,
                           r1.iterations,
                           r2.iterations};
  return out;
}

inline void check_state(const MssState& st, const CouplingSpec& cpl,
                        const SolverContext& ctx) {
  if (!same_lattice(st.z1.lattice(), ctx.lattice) ||
      !same_lattice(st.z2.lattice(), ctx.lattice))
    throw std::invalid_argument("mss: state lattice mismatch");
  const double e1 = std::abs(st.z1.mass() - cpl.mass1) / cpl.mass1;
  const double e2 = std::abs(st.z2.mass() - cpl.mass2) / cpl.mass2;
  if (e1 > 1e-10 || e2 > 1e-10)
    throw std::logic_error("mss: state violates the mass constraint");
}

}  // namespace detail

inline MssState mss_step(const MssState& cur, const CouplingSpec& cpl,
                         const ToleranceSpec& tol, SolverContext& ctx) {
  validate(cpl);
  validate(tol);
  detail::check_state(cur, cpl, ctx);
  const FieldVector g1 = ctx.convolution.apply(cur.z1);
  const FieldVector g2 = ctx.convolution.apply(cur.z2);
  return detail::mss_step_impl(cur, cpl, tol, ctx, g1, g2).state;
}

// Runs substitution steps until both components pass the relative residual
// criterion |(H - mu) z|_2 / |mu| <= tolerance.
inline std::pair<MssState, MssReport> mss_solve(MssState state,
                                                const CouplingSpec& cpl,
                                                const ToleranceSpec& tol,
                                                SolverContext& ctx) {
  validate(cpl);
  validate(tol);
  detail::check_state(state, cpl, ctx);
  MssReport report;
  FieldVector g1 = ctx.convolution.apply(state.z1);
  FieldVector g2 = ctx.convolution.apply(state.z2);
  for (long k = 0; k < tol.mss_max_outer; ++k) {
    detail::StepData step =
        detail::mss_step_impl(state, cpl, tol, ctx, g1, g2);
    state = std::move(step.state);
    g1 = std::move(step.g1);
    g2 = std::move(step.g2);
    report.history.push_back(step.record);
    report.outer_iterations += 1;
    report.total_pm_iterations +=
        step.record.pm_iterations1 + step.record.pm_iterations2;
    if (state.residual1 <= tol.mss_tolerance &&
        state.residual2 <= tol.mss_tolerance) {
      report.converged = true;
      return {std::move(state), std::move(report)};
    }
  }
  throw MssError("mss: no convergence within " +
                     std::to_string(tol.mss_max_outer) + " outer iterations",
                 std::move(report), std::move(state));
}

}  // namespace hartree
