#ifndef FVROE_VERIFICATION_HPP
#define FVROE_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fvroe/linear_hyperbolic.hpp"
#include "fvroe/roe.hpp"

namespace fvroe {

// Independent evaluations of the interaction flux, used to cross-check the
// production path: one-sided sums over the wave decomposition and the
// half-sum assembled from the full matrix absolute value.

Vec3 roe_flux_from_left(const Vec3& wl, const Vec3& wr, const GasModel& gas);
Vec3 roe_flux_from_right(const Vec3& wl, const Vec3& wr, const GasModel& gas);
Vec3 roe_flux_half_sum(const Vec3& wl, const Vec3& wr, const GasModel& gas);

VecN linear_flux_from_left(const LinearSystem& sys, const VecN& wl, const VecN& wr);
VecN linear_flux_from_right(const LinearSystem& sys, const VecN& wl, const VecN& wr);

/// Uniform admissible state with rho in [0.1, 10], u in [-5, 5], p in [0.1, 10].
Vec3 random_admissible_state(std::mt19937_64& rng, const GasModel& gas);

/// Relative infinity-norm discrepancy, floored at absolute scale one.
double rel_diff(const Vec3& a, const Vec3& b);

struct CheckItem {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// The property suite behind `check`: Roe identity, flux-form equivalences,
/// consistency, entropy correction, pressure boundary, limiter axioms,
/// eigenstructure, conservation, stability counterexample.
std::vector<CheckItem> run_check_suite(std::uint64_t seed);

}  // namespace fvroe

#endif
