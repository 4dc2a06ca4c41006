#ifndef FVROE_LINEAR_HYPERBOLIC_HPP
#define FVROE_LINEAR_HYPERBOLIC_HPP

#include <functional>
#include <utility>

#include "fvroe/core.hpp"
#include "fvroe/smallmat.hpp"

namespace fvroe {

using ScalarFn = std::function<double(double)>;

/// Exact solution of du/dt + a du/dx = 0 on [0, L] with initial profile u0
/// and the time profile bc imposed at the inflow end (x=0 for a>0, x=L for
/// a<0). A characteristic foot landing exactly on the space-time corner uses
/// the initial datum.
double advect_exact(const ScalarFn& u0, const ScalarFn& bc, double a, double L,
                    double x, double t);

/// First order upstream-centered flux for scalar advection.
double upwind_flux_scalar(double a, double wl, double wr);

/// Diagonalizable linear system dW/dt + A dW/dx = 0 with A = R Lambda R^-1.
/// Immutable after construction; R^-1 is computed once with partial pivoting.
class LinearSystem {
public:
  LinearSystem(VecN lambdas, MatN right_vectors);

  int dim() const { return dim_; }
  double lambda(int j) const { return lambdas_[j]; }
  const VecN& lambdas() const { return lambdas_; }
  const MatN& right() const { return right_; }
  const MatN& right_inv() const { return right_inv_; }
  VecN right_vector(int j) const;

  VecN apply(const VecN& w) const;  // A w
  const MatN& matrix() const { return a_; }

private:
  int dim_;
  VecN lambdas_;
  MatN right_;
  MatN right_inv_;
  MatN a_;
};

/// Characteristic amplitudes phi with W = R phi.
VecN characteristic_decompose(const LinearSystem& sys, const VecN& w);

/// |A| = R |Lambda| R^-1.
MatN matrix_abs(const LinearSystem& sys);

/// First order upwind flux, evaluated through the half-sum form
/// 1/2 (F(Wl)+F(Wr)) - 1/2 |A| (Wr - Wl).
VecN linear_upwind_flux(const LinearSystem& sys, const VecN& wl, const VecN& wr);

/// Small-perturbation acoustics around a state at rest.
struct AcousticsModel {
  double rho0 = 1.0;
  double c0 = 1.0;
  double impedance() const { return rho0 * c0; }

  /// System in the (p, u) variables.
  LinearSystem system() const;

  /// Physical flux of the (p, u) system.
  Vec2 flux(const Vec2& w) const {
    return {rho0 * c0 * c0 * w[1], w[0] / rho0};
  }
};

/// Closed-form acoustic field driven by the pressure datum Pi at x=0 with a
/// free output at x=L, valid once both characteristic families have swept the
/// pipe. Returns (pressure, velocity); throws RegimeNotReached for t < L/c0.
std::pair<double, double> acoustics_exact(const AcousticsModel& model,
                                          const ScalarFn& p0, const ScalarFn& u0,
                                          const ScalarFn& Pi, double L, double x,
                                          double t);

/// Upwind boundary fluxes of the acoustic scheme: pressure datum Pi_half on
/// the left, frozen-characteristic free output on the right (using the
/// initial last-cell state). States are (p, u) pairs.
std::pair<Vec2, Vec2> acoustic_boundary_fluxes(const AcousticsModel& model,
                                               double Pi_half, const Vec2& w_first,
                                               const Vec2& w_last,
                                               const Vec2& w_init_last);

enum class Side { left, right };

/// Affine boundary data for the ingoing characteristics:
/// phi_in = g(t) + S(t) phi_out. Components of g and rows/columns of S are
/// ordered by increasing eigenvalue index within each group. At the chosen
/// side, ingoing means lambda > 0 on the left and lambda < 0 on the right;
/// zero-speed characteristics are extrapolated from the interior.
struct ReflectionBoundary {
  Side side = Side::left;
  std::function<VecN(double)> g;
  std::function<MatN(double)> S;
};

/// Boundary flux with outgoing characteristics extrapolated from the
/// adjacent cell and ingoing ones set by the reflection data.
VecN reflection_boundary_flux(const LinearSystem& sys, const ReflectionBoundary& rb,
                              const VecN& w_interior, double t);

}  // namespace fvroe

#endif
