#ifndef FVROE_ROE_HPP
#define FVROE_ROE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fvroe/gas_model.hpp"

namespace fvroe {

/// Intermediate state of the approximate Riemann solver: sqrt-rho weighted
/// velocity and enthalpy, geometric-mean density, and the eigenstructure of
/// the flux Jacobian evaluated there.
struct RoeAverage {
  double rho_star = 0.0;
  double u_star = 0.0;
  double H_star = 0.0;
  double c_star = 0.0;
  Vec3 lambdas{};
  std::array<Vec3, 3> right{};
};

/// Decomposition of the state jump Wr - Wl on the intermediate eigenvectors.
struct WaveDecomposition {
  Vec3 alphas{};
  Vec3 lambdas{};
  std::array<Vec3, 3> vectors{};
};

/// Intermediate states across the three waves and the indices whose
/// eigenvalue crosses zero from below (transonic expansions).
struct SonicData {
  std::array<Vec3, 4> states{};  // W0 = Wl, W1, W2, W3 = Wr
  std::vector<int> sonic;        // 0-based wave indices
  bool fallback = false;         // an intermediate state was inadmissible
};

RoeAverage roe_average(const Vec3& wl, const Vec3& wr, const GasModel& gas);

/// The linearization matrix: flux Jacobian at the intermediate state. It is
/// diagonalizable, consistent at wl = wr, and maps the state jump to the
/// flux jump exactly.
Mat3 roe_matrix(const Vec3& wl, const Vec3& wr, const GasModel& gas);

WaveDecomposition wave_strengths(const Vec3& wl, const Vec3& wr,
                                 const RoeAverage& avg, const GasModel& gas);

/// Upwind flux of the linearized Riemann problem. Supersonic intermediate
/// states return the one-sided physical flux exactly; the sonic tie
/// u* = 0 falls back to the single-valued half-sum form.
Vec3 roe_flux(const Vec3& wl, const Vec3& wr, const GasModel& gas);

SonicData sonic_indices(const Vec3& wl, const Vec3& wr, const GasModel& gas);

/// Roe flux plus the cubic-interpolation viscosity on the sonic wave
/// families. With no sonic index the result is bit-identical to roe_flux.
Vec3 entropy_fixed_flux(const Vec3& wl, const Vec3& wr, const GasModel& gas);

/// Coefficient added on a sonic wave: the minimum over the wave of the
/// Hermite cubic matching the one-sided wave speeds, expressed per unit wave
/// strength, capped so the correction is never anti-diffusive.
/// Returns 0 unless lam_prev < 0 < lam_next and alpha != 0.
double sonic_viscosity(double lam_star, double lam_prev, double lam_next,
                       double alpha);

/// Minimizer of the Hermite cubic p with p(0)=0, p(alpha)=lam_star*alpha,
/// p'(0)=lam_prev, p'(alpha)=lam_next, strictly between 0 and alpha.
double sonic_cubic_argmin(double lam_star, double lam_prev, double lam_next,
                          double alpha);

/// Value of the Hermite cubic at xi.
double sonic_cubic_eval(double lam_star, double lam_prev, double lam_next,
                        double alpha, double xi);

/// Number of face evaluations that skipped the entropy correction because an
/// intermediate state was inadmissible (strong waves).
std::uint64_t entropy_fix_fallback_count();
void reset_entropy_fix_fallback_count();

/// 2D face flux in the frame of a unit normal: the 1D solver acts on the
/// normal direction while tangential momentum rides on the contact wave.
/// Sonic corrections apply to the two genuinely nonlinear families.
Vec4 euler_face_flux(const Vec4& wl, const Vec4& wr, const Vec2& n,
                     const GasModel& gas);

}  // namespace fvroe

#endif
