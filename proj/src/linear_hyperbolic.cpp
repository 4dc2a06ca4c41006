#include "fvroe/linear_hyperbolic.hpp"

#include <cmath>

namespace fvroe {

double advect_exact(const ScalarFn& u0, const ScalarFn& bc, double a, double L,
                    double x, double t) {
  if (a == 0.0) throw Error("advect_exact needs a nonzero celerity");
  const double foot = x - a * t;
  if (a > 0.0) {
    if (foot >= 0.0) return u0(foot);
    return bc(t - x / a);
  }
  if (foot <= L) return u0(foot);
  return bc(t + (L - x) / a);
}

double upwind_flux_scalar(double a, double wl, double wr) {
  return a > 0.0 ? a * wl : a * wr;
}

LinearSystem::LinearSystem(VecN lambdas, MatN right_vectors)
    : dim_(lambdas.n), lambdas_(lambdas), right_(right_vectors) {
  if (cond1(right_) > 1e12)
    throw SingularEigenbasis("eigenvector matrix is numerically singular");
  right_inv_ = inverse(right_);
  MatN lam(dim_, dim_);
  for (int j = 0; j < dim_; ++j) lam(j, j) = lambdas_[j];
  a_ = matmul(matmul(right_, lam), right_inv_);
}

VecN LinearSystem::right_vector(int j) const {
  VecN r(dim_);
  for (int k = 0; k < dim_; ++k) r[k] = right_(k, j);
  return r;
}

VecN LinearSystem::apply(const VecN& w) const { return matvec(a_, w); }

VecN characteristic_decompose(const LinearSystem& sys, const VecN& w) {
  return matvec(sys.right_inv(), w);
}

MatN matrix_abs(const LinearSystem& sys) {
  const int m = sys.dim();
  MatN lam(m, m);
  for (int j = 0; j < m; ++j) lam(j, j) = std::fabs(sys.lambda(j));
  return matmul(matmul(sys.right(), lam), sys.right_inv());
}

VecN linear_upwind_flux(const LinearSystem& sys, const VecN& wl, const VecN& wr) {
  const VecN fl = sys.apply(wl);
  const VecN fr = sys.apply(wr);
  const VecN jump = matvec(matrix_abs(sys), wr - wl);
  return 0.5 * (fl + fr) - 0.5 * jump;
}

LinearSystem AcousticsModel::system() const {
  // W = (p, u); characteristic variables p -/+ rho0 c0 u with speeds -/+ c0.
  const double z = impedance();
  VecN lam(2);
  lam[0] = -c0;
  lam[1] = c0;
  MatN r(2, 2);
  r(0, 0) = 0.5;
  r(0, 1) = 0.5;
  r(1, 0) = -0.5 / z;
  r(1, 1) = 0.5 / z;
  return LinearSystem(lam, r);
}

std::pair<double, double> acoustics_exact(const AcousticsModel& model,
                                          const ScalarFn& p0, const ScalarFn& u0,
                                          const ScalarFn& Pi, double L, double x,
                                          double t) {
  if (t < L / model.c0)
    throw RegimeNotReached("acoustic closed form requires t >= L/c0");
  const double pv = Pi(t - x / model.c0);
  const double uv = u0(L) + (pv - p0(L)) / model.impedance();
  return {pv, uv};
}

std::pair<Vec2, Vec2> acoustic_boundary_fluxes(const AcousticsModel& model,
                                               double Pi_half, const Vec2& w_first,
                                               const Vec2& w_last,
                                               const Vec2& w_init_last) {
  const double rho0 = model.rho0;
  const double c0 = model.c0;
  // Left: imposed pressure through the reflection of the outgoing
  // characteristic extrapolated from the first cell.
  Vec2 left{rho0 * c0 * c0 * w_first[1] + c0 * (Pi_half - w_first[0]),
            Pi_half / rho0};
  // Right: interior interface formula with the frozen initial state standing
  // in for the missing right state.
  Vec2 right{0.5 * rho0 * c0 * c0 * (w_last[1] + w_init_last[1]) -
                 0.5 * c0 * (w_init_last[0] - w_last[0]),
             0.5 * (w_last[0] + w_init_last[0]) / rho0 -
                 0.5 * c0 * (w_init_last[1] - w_last[1])};
  return {left, right};
}

VecN reflection_boundary_flux(const LinearSystem& sys, const ReflectionBoundary& rb,
                              const VecN& w_interior, double t) {
  const int m = sys.dim();
  const VecN phi = characteristic_decompose(sys, w_interior);

  int n_in = 0, n_out = 0;
  std::array<int, 4> ingoing{}, outgoing{};
  for (int j = 0; j < m; ++j) {
    const bool in = rb.side == Side::left ? sys.lambda(j) > 0.0 : sys.lambda(j) < 0.0;
    if (in)
      ingoing[static_cast<std::size_t>(n_in++)] = j;
    else
      outgoing[static_cast<std::size_t>(n_out++)] = j;
  }

  const VecN g = rb.g(t);
  const MatN S = rb.S(t);
  if (g.n != n_in || S.rows != n_in || S.cols != n_out)
    throw Error("reflection data does not match the ingoing/outgoing split");

  VecN phi_bnd(m);
  for (int k = 0; k < n_out; ++k) phi_bnd[outgoing[static_cast<std::size_t>(k)]] = phi[outgoing[static_cast<std::size_t>(k)]];
  for (int i = 0; i < n_in; ++i) {
    double v = g[i];
    for (int k = 0; k < n_out; ++k) v += S(i, k) * phi[outgoing[static_cast<std::size_t>(k)]];
    phi_bnd[ingoing[static_cast<std::size_t>(i)]] = v;
  }

  VecN f(m);
  for (int j = 0; j < m; ++j) {
    const double w = sys.lambda(j) * phi_bnd[j];
    for (int k = 0; k < m; ++k) f[k] += w * sys.right()(k, j);
  }
  return f;
}

}  // namespace fvroe
