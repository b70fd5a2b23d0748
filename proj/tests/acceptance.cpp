// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run from anywhere; all outputs go to a scratch directory.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hartree/config.hpp"
#include "hartree/observables.hpp"
#include "hartree/power_method.hpp"
#include "hartree/sweep.hpp"
#include "support/oracles.hpp"

using namespace hartree;
using clk = std::chrono::steady_clock;

namespace {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CriterionResult> g_results;

void record(int id, const std::string& name, bool pass,
            const std::string& detail) {
  g_results.push_back({id, name, pass, detail});
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

const std::string kWorkDir = "acceptance_work";

// Reference physics shared by most criteria.
const double kTrapCenter = 0.5;
const double kStrongTrap = 1e5;
const double kWeakTrap = 1e3;
const double kScreening = 1e2;
const double kRegularization = 1e-1;

SolverContext reference_context(int m, ConvolutionPath path, int threads = 1) {
  const auto lat = make_lattice(1.0, m);
  return make_context(lat,
                      HarmonicPotential(kTrapCenter, kTrapCenter, kStrongTrap),
                      HarmonicPotential(kTrapCenter, kTrapCenter, kWeakTrap),
                      YukawaPotential(kScreening, kRegularization), path,
                      threads);
}

// ---------------------------------------------------------------------------
// 1. Matrix-free operator application vs dense assembly.
void criterion_1() {
  const auto t0 = clk::now();
  double worst = 0.0;
  const YukawaPotential inter(kScreening, kRegularization);
  for (int m : {5, 8, 10}) {
    const auto lat = make_lattice(1.0, m);
    const HarmonicPotential trap1(kTrapCenter, kTrapCenter, kStrongTrap);
    const HarmonicPotential trap2(kTrapCenter, kTrapCenter, kWeakTrap);
    const auto kernel = build_kernel_table(inter, lat);
    const FieldVector w1 = oracle::random_field(lat, 1000u + m);
    const FieldVector w2 = oracle::random_field(lat, 2000u + m);
    const FieldVector g1 = lumped_convolution(w1, kernel);
    const FieldVector g2 = lumped_convolution(w2, kernel);

    const auto b = oracle::dense_stiffness(lat);
    const auto go1 = oracle::dense_convolution(lat, inter, oracle::to_eigen(w1));
    const auto go2 = oracle::dense_convolution(lat, inter, oracle::to_eigen(w2));

    const struct {
      const HarmonicPotential& trap;
      double theta, kappa;
      const FieldVector &own, &cross;
      const oracle::Vector &down, &dcross;
    } sides[2] = {{trap1, 0.4, 2.5, g1, g2, go1, go2},
                  {trap2, 0.7, 1.3, g2, g1, go2, go1}};
    for (const auto& side : sides) {
      const DiagonalPotential ext(lat, side.trap);
      const HamiltonianOperator h(lat, ext, side.theta, side.kappa,
                                  side.own.values(), side.cross.values());
      const auto hd = oracle::dense_hamiltonian(
          lat, b, oracle::dense_potential_diagonal(lat, side.trap), side.theta,
          side.kappa, side.down, side.dcross);
      for (unsigned k = 0; k < 100; ++k) {
        const FieldVector z = oracle::random_field(lat, 31 * m + 7 * k);
        const oracle::Vector ref = hd * oracle::to_eigen(z);
        const FieldVector got = h.apply(z);
        worst = std::max(worst,
                         (oracle::to_eigen(got) - ref).norm() / ref.norm());
      }
    }
  }
  const double dt = seconds_since(t0);
  record(1, "dense-oracle operator equivalence",
         worst <= 1e-12 && dt < 5.0,
         fmt("max relative deviation %.2e (limit 1e-12), %.1f s (limit 5 s)",
             worst, dt));
}

// ---------------------------------------------------------------------------
// 2. Power iteration vs dense symmetric eigensolver, m = 18, weak trap.
void criterion_2() {
  const auto t0 = clk::now();
  const auto lat = make_lattice(1.0, 18);
  const HarmonicPotential trap(kTrapCenter, kTrapCenter, kWeakTrap);
  const DiagonalPotential ext(lat, trap);
  const HamiltonianOperator h(lat, ext);

  const auto hd = oracle::dense_hamiltonian(
      lat, oracle::dense_stiffness(lat),
      oracle::dense_potential_diagonal(lat, trap));
  const auto [mu_ref, v_ref] = oracle::dense_ground_state(hd);

  const PmResult r = power_iterate(h, FieldVector(lat, 1.0), 1e-10, 5000000L);
  const double vec_err = (oracle::to_eigen(r.ground_vector) - v_ref).norm();
  const double val_err = std::abs(r.energy - mu_ref) / std::abs(mu_ref);
  const double dt = seconds_since(t0);
  record(2, "linear eigensolver oracle",
         vec_err <= 1e-6 && val_err <= 1e-8 && dt < 10.0,
         fmt("vector error %.2e (limit 1e-6), eigenvalue error %.2e (limit "
             "1e-8), %.1f s (limit 10 s)",
             vec_err, val_err, dt));
}

// ---------------------------------------------------------------------------
// 3. Continuum limit of the weak-trap ground energy at m = 129.
//
// The l1-norm shift grows like m^4, so certifying a small residual from a
// cold start at m = 129 is out of reach; the run warm starts from the
// converged m = 65 ground vector prolonged bilinearly to the fine grid.
FieldVector prolong_bilinear(const FieldVector& coarse,
                             const LatticeSpec& fine) {
  const int nf = fine.interior_per_side;
  const int nc = coarse.lattice().interior_per_side;
  FieldVector out(fine);
  auto cval = [&](int cx, int cy) -> double {
    if (cx < 0 || cy < 0 || cx >= nc || cy >= nc) return 0.0;
    return coarse[cx + cy * nc];
  };
  for (int fy = 0; fy < nf; ++fy)
    for (int fx = 0; fx < nf; ++fx) {
      const int gx = fx + 1, gy = fy + 1;
      const bool even_x = (gx % 2) == 0, even_y = (gy % 2) == 0;
      const int cx = gx / 2 - 1, cy = gy / 2 - 1;
      double v;
      if (even_x && even_y)
        v = cval(cx, cy);
      else if (even_y)
        v = 0.5 * (cval(cx, cy) + cval(cx + 1, cy));
      else if (even_x)
        v = 0.5 * (cval(cx, cy) + cval(cx, cy + 1));
      else
        v = 0.25 * ((cval(cx, cy) + cval(cx + 1, cy)) +
                    (cval(cx, cy + 1) + cval(cx + 1, cy + 1)));
      out[fx + fy * nf] = v;
    }
  return out;
}

void criterion_3() {
  const auto t0 = clk::now();
  const HarmonicPotential trap(kTrapCenter, kTrapCenter, kWeakTrap);

  const auto lat_c = make_lattice(1.0, 65);
  const DiagonalPotential ext_c(lat_c, trap);
  const HamiltonianOperator h_c(lat_c, ext_c);
  FieldVector start(lat_c);
  const double sigma = std::pow(kWeakTrap, -0.25);
  for (int j = 0; j < lat_c.interior_count; ++j) {
    const auto xy = node_position(j, lat_c);
    const double dx = xy[0] - kTrapCenter, dy = xy[1] - kTrapCenter;
    start[j] = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
  }
  const PmResult coarse = power_iterate(h_c, start, 1e-5, 100000000L);

  const auto lat_f = make_lattice(1.0, 129);
  const DiagonalPotential ext_f(lat_f, trap);
  const HamiltonianOperator h_f(lat_f, ext_f);
  const FieldVector warm = prolong_bilinear(coarse.ground_vector, lat_f);
  const PmResult fine = power_iterate(h_f, warm, 2e-3, 20000000L);

  const double target = 2.0 * std::sqrt(kWeakTrap);
  const double rel = std::abs(fine.energy - target) / target;
  const double dt = seconds_since(t0);
  record(3, "analytic continuum limit",
         rel <= 0.05 && dt < 120.0,
         fmt("mu = %.4f vs 2*sqrt(c) = %.4f, error %.2e (limit 5e-2), %.0f s "
             "(limit 120 s)",
             fine.energy, target, rel, dt));
}

// ---------------------------------------------------------------------------
// Recomputes residuals and masses of a converged state from scratch.
struct ContractCheck {
  double max_residual = 0.0;
  double max_mass_error = 0.0;
};

ContractCheck recompute_contract(SolverContext& ctx, const CouplingSpec& cpl,
                                 const MssState& st) {
  const FieldVector g1 = ctx.convolution.apply(st.z1);
  const FieldVector g2 = ctx.convolution.apply(st.z2);
  const HamiltonianOperator h1(ctx.lattice, ctx.external1, cpl.theta1,
                               cpl.kappa, g1.values(), g2.values());
  const HamiltonianOperator h2(ctx.lattice, ctx.external2, cpl.theta2,
                               cpl.kappa, g2.values(), g1.values());
  const double h = ctx.lattice.spacing;
  ContractCheck out;
  auto side = [&](const HamiltonianOperator& op, const FieldVector& z,
                  double mass, double mu) {
    FieldVector u(ctx.lattice);
    op.apply(z, u);
    double r2 = 0.0;
    for (int j = 0; j < z.size(); ++j) {
      const double t = u[j] - mu * z[j];
      r2 += t * t;
    }
    out.max_residual =
        std::max(out.max_residual, h * std::sqrt(r2) / std::abs(mu));
    out.max_mass_error =
        std::max(out.max_mass_error, std::abs(z.mass() - mass) / mass);
  };
  side(h1, st.z1, cpl.mass1, st.mu1);
  side(h2, st.z2, cpl.mass2, st.mu2);
  return out;
}

// ---------------------------------------------------------------------------
// 5. Eigenvalue identity N mu = kinetic + external + theta D0 + kappa D0.
void criterion_5() {
  auto ctx = reference_context(33, ConvolutionPath::direct);
  ToleranceSpec tol;
  tol.pm_tolerance = 1e-7;
  tol.mss_tolerance = 1e-6;
  tol.pm_max_iterations = 100000000L;
  CouplingSpec cpl;
  double worst = 0.0;
  double worst_contract_resid = 0.0;
  double worst_contract_mass = 0.0;
  bool all_converged = true;
  MssState state = initial_state(ctx, cpl, InitMode::gaussian);
  for (double kappa : {0.5, 10.0}) {
    cpl.kappa = kappa;
    auto [solved, report] =
        mss_solve(MssState{state.z1, state.z2}, cpl, tol, ctx);
    all_converged = all_converged && report.converged;
    const FieldVector g1 = ctx.convolution.apply(solved.z1);
    const FieldVector g2 = ctx.convolution.apply(solved.z2);
    const EnergyBreakdown e = energy_breakdown(
        solved.z1, solved.z2, cpl, ctx.external1, ctx.external2, g1, g2);
    const double rhs1 = e.kinetic1 + e.external1 +
                        cpl.theta1 * coulomb_energy(solved.z1, g1) +
                        cpl.kappa * coulomb_energy(solved.z1, g2);
    const double rhs2 = e.kinetic2 + e.external2 +
                        cpl.theta2 * coulomb_energy(solved.z2, g2) +
                        cpl.kappa * coulomb_energy(solved.z2, g1);
    worst = std::max(worst, std::abs(cpl.mass1 * solved.mu1 - rhs1) / rhs1);
    worst = std::max(worst, std::abs(cpl.mass2 * solved.mu2 - rhs2) / rhs2);
    const ContractCheck c = recompute_contract(ctx, cpl, solved);
    worst_contract_resid = std::max(worst_contract_resid, c.max_residual);
    worst_contract_mass = std::max(worst_contract_mass, c.max_mass_error);
    state = std::move(solved);
  }
  record(5, "eigenvalue identity",
         all_converged && worst <= 1e-10,
         fmt("max relative identity error %.2e (limit 1e-10) at kappa 0.5, 10",
             worst));
  // feeds criterion 4 as well
  g_results.push_back({4, "", worst_contract_resid <= 1e-6 &&
                               worst_contract_mass <= 1e-12, ""});
  g_results.back().detail =
      fmt("m=33 runs: recomputed residual %.2e (tol 1e-6), mass error %.2e",
          worst_contract_resid, worst_contract_mass);
}

// ---------------------------------------------------------------------------
// 6/7/8 share one m = 65 sweep through the run_sweep driver.
struct SweepData {
  SweepOutcome outcome;
  double o0 = 0.0, o10 = 0.0;       // min-density overlaps
  double sym_err = 0.0;             // kappa=0 density symmetry error
  double moment_ratio = 0.0;        // radial moment ratio at kappa=0
  ContractCheck contract;
  double seconds = 0.0;
  double mss_tolerance = 0.0;
};

double density_symmetry_error(const FieldVector& z) {
  const int n = z.lattice().interior_per_side;
  double peak = 0.0, worst = 0.0;
  for (int j = 0; j < z.size(); ++j) peak = std::max(peak, z[j] * z[j]);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const double d = z[ix + iy * n] * z[ix + iy * n];
      const int rx = n - 1 - ix, ry = n - 1 - iy;
      const int imgs[7][2] = {{rx, iy}, {ix, ry}, {rx, ry}, {iy, ix},
                              {ry, ix}, {iy, rx}, {ry, rx}};
      for (const auto& g : imgs)
        worst = std::max(
            worst, std::abs(d - z[g[0] + g[1] * n] * z[g[0] + g[1] * n]));
    }
  return worst / peak;
}

double radial_second_moment(const FieldVector& z) {
  const auto& lat = z.lattice();
  double num = 0.0, den = 0.0;
  for (int j = 0; j < z.size(); ++j) {
    const auto xy = node_position(j, lat);
    const double dx = xy[0] - kTrapCenter, dy = xy[1] - kTrapCenter;
    num += z[j] * z[j] * (dx * dx + dy * dy);
    den += z[j] * z[j];
  }
  return num / den;
}

SweepData run_reference_sweep() {
  SweepData data;
  const auto t0 = clk::now();
  RunConfig cfg;
  cfg.side_length = 1.0;
  cfg.node_count = 65;
  cfg.kappa_list = {0.0, 0.5, 2.0, 10.0, 50.0};
  cfg.pm_tolerance = 3e-6;
  cfg.mss_tolerance = 3e-5;
  cfg.pm_max_iterations = 1000000000L;
  cfg.mss_max_outer = 10000;
  cfg.init_mode = InitMode::gaussian;
  cfg.convolution = ConvolutionPath::direct;
  cfg.output_dir = kWorkDir + "/sweep65";
  data.mss_tolerance = cfg.mss_tolerance;
  data.outcome = run_sweep(cfg);
  data.seconds = seconds_since(t0);

  const auto lat = make_lattice(cfg.side_length, cfg.node_count);
  auto ctx = reference_context(65, ConvolutionPath::direct);
  const auto s0 = read_state(lat, cfg.output_dir + "/state_kappa_0.dat");
  const auto s10 = read_state(lat, cfg.output_dir + "/state_kappa_10.dat");
  data.o0 = min_density_overlap(s0.first, s0.second);
  data.o10 = min_density_overlap(s10.first, s10.second);
  data.sym_err = std::max(density_symmetry_error(s0.first),
                          density_symmetry_error(s0.second));
  data.moment_ratio =
      radial_second_moment(s0.first) / radial_second_moment(s0.second);

  CouplingSpec cpl;
  for (const auto& rec : data.outcome.records) {
    if (!rec.converged) continue;
    cpl.kappa = rec.kappa;
    char path[256];
    std::snprintf(path, sizeof path, "%s/state_kappa_%g.dat",
                  cfg.output_dir.c_str(), rec.kappa);
    const auto st = read_state(lat, path);
    MssState full{st.first, st.second, rec.mu1, rec.mu2};
    const ContractCheck c = recompute_contract(ctx, cpl, full);
    data.contract.max_residual =
        std::max(data.contract.max_residual, c.max_residual);
    data.contract.max_mass_error =
        std::max(data.contract.max_mass_error, c.max_mass_error);
  }
  return data;
}

void criteria_6_7_8_and_4(const SweepData& data) {
  const auto& recs = data.outcome.records;
  bool all_converged = data.outcome.exit_code == 0 && recs.size() == 5;

  bool d0_decreasing = true;
  for (size_t i = 1; i < recs.size(); ++i)
    d0_decreasing = d0_decreasing && recs[i].d0 < recs[i - 1].d0;
  const double kd0_10 = recs.size() > 3 ? recs[3].kappa_d0 : 0.0;
  const double kd0_50 = recs.size() > 4 ? recs[4].kappa_d0 : 0.0;
  const bool tail_decay = kd0_50 < kd0_10;
  record(6, "segregation decay trend",
         all_converged && d0_decreasing && tail_decay && data.seconds < 600.0,
         fmt("D0 strictly decreasing: %s; kappa*D0(50)=%.4g vs "
             "kappa*D0(10)=%.4g (need <); %.0f s (limit 600 s)",
             d0_decreasing ? "yes" : "no", kd0_50, kd0_10, data.seconds));

  const bool sym_ok = data.sym_err <= 1e-8;
  const double expected_ratio = std::sqrt(kWeakTrap / kStrongTrap);
  const bool shape_ok =
      std::abs(data.moment_ratio / expected_ratio - 1.0) <= 0.15;
  const bool overlap_ok = data.o10 < 0.5 * data.o0;
  record(7, "qualitative figure reproduction",
         sym_ok && shape_ok && overlap_ok,
         fmt("kappa=0 symmetry error %.2e (limit 1e-8); moment ratio %.4f vs "
             "%.2f trap scaling (within 15%%: %s); overlap(10)/overlap(0) = "
             "%.3f (need < 0.5)",
             data.sym_err, data.moment_ratio, expected_ratio,
             shape_ok ? "yes" : "no", data.o10 / data.o0));

  bool energy_monotone = true;
  double worst_drop = 0.0;
  for (size_t i = 1; i < recs.size(); ++i) {
    const double slack =
        10.0 * data.mss_tolerance * std::abs(recs[i].energy.total);
    if (recs[i].energy.total < recs[i - 1].energy.total - slack) {
      energy_monotone = false;
      worst_drop = std::max(
          worst_drop, recs[i - 1].energy.total - recs[i].energy.total);
    }
  }
  record(8, "ground energy monotone in the interaction",
         all_converged && energy_monotone,
         energy_monotone
             ? fmt("E_total nondecreasing over the sweep (slack 10*%.0e)",
                   data.mss_tolerance)
             : fmt("E_total dropped by %.3e beyond the slack", worst_drop));

  // criterion 4 folds in the m=33 part recorded earlier
  bool m33_ok = true;
  std::string m33_detail;
  for (auto it = g_results.begin(); it != g_results.end(); ++it) {
    if (it->id == 4 && it->name.empty()) {
      m33_ok = it->pass;
      m33_detail = it->detail;
      g_results.erase(it);
      break;
    }
  }
  const bool sweep_contract_ok =
      data.contract.max_residual <= data.mss_tolerance &&
      data.contract.max_mass_error <= 1e-12;
  record(4, "stopping contract on converged runs",
         m33_ok && sweep_contract_ok,
         fmt("m=65 sweep: recomputed residual %.2e (tol %.0e), mass error "
             "%.2e (limit 1e-12); %s",
             data.contract.max_residual, data.mss_tolerance,
             data.contract.max_mass_error, m33_detail.c_str()));
}

// ---------------------------------------------------------------------------
// 9. Direct vs fast convolution paths.
void criterion_9() {
  const auto t0 = clk::now();
  const YukawaPotential inter(kScreening, kRegularization);
  double worst = 0.0;
  for (int m : {16, 33, 65}) {
    const auto lat = make_lattice(1.0, m);
    auto kernel =
        std::make_shared<const KernelTable>(build_kernel_table(inter, lat));
    ConvolutionEngine direct(kernel, lat, ConvolutionPath::direct);
    ConvolutionEngine fast(kernel, lat, ConvolutionPath::fast);
    for (unsigned seed = 0; seed < 5; ++seed) {
      const FieldVector w = oracle::random_field(lat, 9000u + 13 * m + seed);
      const FieldVector a = direct.apply(w);
      const FieldVector b = fast.apply(w);
      double num = 0.0, den = 0.0;
      for (int j = 0; j < a.size(); ++j) {
        num += (a[j] - b[j]) * (a[j] - b[j]);
        den += a[j] * a[j];
      }
      worst = std::max(worst, std::sqrt(num / den));
    }
  }
  const double dt = seconds_since(t0);
  record(9, "convolution path equivalence",
         worst <= 1e-10 && dt < 30.0,
         fmt("max relative deviation %.2e (limit 1e-10), %.1f s (limit 30 s)",
             worst, dt));
}

// ---------------------------------------------------------------------------
// 10. Byte determinism of repeated single-threaded runs.
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The sweep table's trailing column is wall time; it is the one permitted
// difference between reruns.
std::string strip_seconds_column(const std::string& table) {
  std::istringstream in(table);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') {
      const auto comma = line.rfind(',');
      if (comma != std::string::npos) line.resize(comma);
    }
    out << line << '\n';
  }
  return out.str();
}

void criterion_10() {
  RunConfig cfg;
  cfg.node_count = 17;
  cfg.kappa_list = {0.0, 0.5, 2.0};
  cfg.pm_tolerance = 1e-7;
  cfg.mss_tolerance = 1e-6;
  cfg.threads = 1;
  cfg.init_mode = InitMode::gaussian;

  cfg.output_dir = kWorkDir + "/det_a";
  run_sweep(cfg);
  cfg.output_dir = kWorkDir + "/det_b";
  run_sweep(cfg);

  bool identical = true;
  std::string first_diff;
  std::vector<std::string> files = {"residuals.csv", "plot.gp"};
  for (double k : cfg.kappa_list) {
    for (int a = 1; a <= 2; ++a)
      files.push_back(fmt("density%d_kappa_%g.dat", a, k));
    files.push_back(fmt("state_kappa_%g.dat", k));
  }
  for (const auto& f : files) {
    if (slurp(kWorkDir + "/det_a/" + f) != slurp(kWorkDir + "/det_b/" + f)) {
      identical = false;
      if (first_diff.empty()) first_diff = f;
    }
  }
  const std::string ta = strip_seconds_column(slurp(kWorkDir + "/det_a/sweep.csv"));
  const std::string tb = strip_seconds_column(slurp(kWorkDir + "/det_b/sweep.csv"));
  if (ta != tb) {
    identical = false;
    if (first_diff.empty()) first_diff = "sweep.csv";
  }
  record(10, "single-threaded determinism",
         identical,
         identical ? fmt("%zu output files byte-identical across reruns "
                         "(sweep table compared without the wall-time column)",
                         files.size() + 1)
                   : fmt("first differing file: %s", first_diff.c_str()));
}

}  // namespace

int main() {
  std::filesystem::create_directories(kWorkDir);
  const auto t0 = clk::now();

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_5();
  criterion_9();
  criterion_10();
  const SweepData sweep = run_reference_sweep();
  criteria_6_7_8_and_4(sweep);

  std::sort(g_results.begin(), g_results.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.id < b.id;
            });
  int failures = 0;
  std::printf("\n== acceptance summary (%.0f s) ==\n", seconds_since(t0));
  for (const auto& r : g_results) {
    std::printf("criterion %2d: %s  (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, g_results.size());
  return failures == 0 ? 0 : 1;
}
