#ifndef FVROE_GAS_MODEL_HPP
#define FVROE_GAS_MODEL_HPP

#include "fvroe/core.hpp"
#include "fvroe/smallmat.hpp"

namespace fvroe {

/// Polytropic perfect gas, parameterized by the ratio of specific heats.
struct GasModel {
  double gamma = 1.4;
};

/// 1D primitive variables (density, velocity, pressure).
struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

/// 2D primitive variables.
struct Primitive2 {
  double rho = 0.0;
  double ux = 0.0;
  double uy = 0.0;
  double p = 0.0;
};

/// Wave speeds and right eigenvectors of the 1D flux Jacobian,
/// in increasing order u-c, u, u+c.
struct EigenStructure {
  Vec3 lambdas{};
  std::array<Vec3, 3> right{};  // column j of R
};

// Conserved state layout: 1D W = (rho, rho*u, rho*E); 2D W = (rho, rho*ux, rho*uy, rho*E).

Primitive primitive_from_conserved(const Vec3& w, const GasModel& gas);
Vec3 conserved_from_primitive(const Primitive& p, const GasModel& gas);

Primitive2 primitive_from_conserved2(const Vec4& w, const GasModel& gas);
Vec4 conserved_from_primitive2(const Primitive2& p, const GasModel& gas);

Vec3 physical_flux(const Vec3& w, const GasModel& gas);

/// 2D flux through a unit normal n: mass and energy advect with the normal
/// velocity, the momentum carries the pressure along n.
Vec4 physical_flux2(const Vec4& w, const Vec2& n, const GasModel& gas);

double sound_speed(const Primitive& p, const GasModel& gas);
double sound_speed2(const Primitive2& p, const GasModel& gas);

/// Specific total enthalpy H = (rho*E + p) / rho.
double total_enthalpy(const Vec3& w, const GasModel& gas);
double total_enthalpy2(const Vec4& w, const GasModel& gas);

Mat3 flux_jacobian(const Vec3& w, const GasModel& gas);

/// Jacobian written only in terms of velocity and total enthalpy, which is
/// what makes the intermediate-state construction work.
Mat3 flux_jacobian_uH(double u, double H, const GasModel& gas);

EigenStructure eigenstructure(double u, double c, double H);

/// State with momentum reversed (x -> -x symmetry).
Vec3 mirror(const Vec3& w);

/// Builds a conserved state from (rho, u, H); handy for tests and the
/// Roe intermediate state.
Vec3 conserved_from_rho_u_H(double rho, double u, double H, const GasModel& gas);

}  // namespace fvroe

#endif
