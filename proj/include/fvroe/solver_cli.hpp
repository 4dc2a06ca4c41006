#ifndef FVROE_SOLVER_CLI_HPP
#define FVROE_SOLVER_CLI_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fvroe/integrator.hpp"

namespace fvroe {

enum class ProblemKind { advection, acoustics, euler1d, euler2d };
enum class TimeScheme { euler, heun };

/// Plain-text key=value configuration, '#' comments.
struct SolverConfig {
  ProblemKind problem = ProblemKind::advection;
  double gamma = 1.4;
  double L = 1.0;
  int cells = 100;
  std::string mesh_path;
  double cfl = 0.0;  // 0 means default: 0.9 first order, 0.45 second order + heun
  double t_end = 1.0;
  double fixed_dt = 0.0;  // 0 means adaptive
  int order = 1;
  Limiter limiter = make_limiter(LimiterKind::sts);
  double limiter_k = 0.75;  // 2D limiting strength
  TimeScheme scheme = TimeScheme::euler;
  double a = 1.0;     // advection celerity
  double rho0 = 1.0;  // acoustics reference state
  double c0 = 1.0;
  std::string bc_left = "nonreflecting";
  std::string bc_right = "nonreflecting";
  std::string initial;    // advection / euler1d / euler2d profile
  std::string initial_p;  // acoustics
  std::string initial_u;
  std::string output = "out";
  std::vector<double> snapshot_times;

  double effective_cfl() const;
};

SolverConfig parse_config(const std::string& text);
SolverConfig load_config(const std::string& path);

/// Time profile grammar: constant:<v> | sine:<p0>,<amp>,<freq> (p0 + amp
/// sin(2 pi freq t)) | table:<path> (two-column t,value with linear
/// interpolation, clamped at the ends).
ScalarFn parse_time_profile(const std::string& spec);

/// Space profile grammar on [0, L]: constant:<v> | sine:<offset>,<amp>,<periods>
/// | step:<x0>,<left>,<right>.
ScalarFn parse_space_profile(const std::string& spec, double L);

struct Scenario {
  std::shared_ptr<Problem> problem;
  DynamicState state;
};

Scenario make_scenario(const SolverConfig& cfg);

struct RunResult {
  std::vector<std::string> files;
  DynamicState final_state;
  std::shared_ptr<Problem> problem;
  std::uint64_t steps = 0;
  /// Largest per-step conservation defect, relative to the state scale.
  double max_balance_residual = 0.0;
};

/// Time loop with CFL-stable steps, clipped to land exactly on snapshot
/// times and on t_end; writes one CSV per snapshot. With write_csv unset the
/// snapshots are skipped (used by convergence studies).
RunResult run(const SolverConfig& cfg, bool write_csv = true);

struct ConvergenceRow {
  int cells = 0;
  double dx = 0.0;
  double l1_error = 0.0;
  double observed_order = 0.0;  // vs the previous row; 0 on the first
};

/// Grid-refinement study against the exact solution (advection and
/// acoustics only).
std::vector<ConvergenceRow> convergence(const SolverConfig& cfg,
                                        const std::vector<int>& grids);

/// L1 error of a finished state against the problem's exact solution.
double exact_l1_error(const SolverConfig& cfg, const Scenario& scenario);

}  // namespace fvroe

#endif
