#include "fvroe/gas_model.hpp"

#include <cmath>

namespace fvroe {

Primitive primitive_from_conserved(const Vec3& w, const GasModel& gas) {
  const double rho = w[0];
  if (!(rho > rho_floor)) throw NonPositiveDensity(rho);
  const double u = w[1] / rho;
  const double p = (gas.gamma - 1.0) * (w[2] - 0.5 * rho * u * u);
  if (!(p > pressure_floor)) throw NonPositivePressure(p);
  return {rho, u, p};
}

Vec3 conserved_from_primitive(const Primitive& pr, const GasModel& gas) {
  const double q = pr.rho * pr.u;
  const double e = pr.p / (gas.gamma - 1.0) + 0.5 * pr.rho * pr.u * pr.u;
  return {pr.rho, q, e};
}

Primitive2 primitive_from_conserved2(const Vec4& w, const GasModel& gas) {
  const double rho = w[0];
  if (!(rho > rho_floor)) throw NonPositiveDensity(rho);
  const double ux = w[1] / rho;
  const double uy = w[2] / rho;
  const double p = (gas.gamma - 1.0) * (w[3] - 0.5 * rho * (ux * ux + uy * uy));
  if (!(p > pressure_floor)) throw NonPositivePressure(p);
  return {rho, ux, uy, p};
}

Vec4 conserved_from_primitive2(const Primitive2& pr, const GasModel& gas) {
  const double e =
      pr.p / (gas.gamma - 1.0) + 0.5 * pr.rho * (pr.ux * pr.ux + pr.uy * pr.uy);
  return {pr.rho, pr.rho * pr.ux, pr.rho * pr.uy, e};
}

Vec3 physical_flux(const Vec3& w, const GasModel& gas) {
  const Primitive pr = primitive_from_conserved(w, gas);
  return {w[1], w[1] * pr.u + pr.p, pr.u * (w[2] + pr.p)};
}

Vec4 physical_flux2(const Vec4& w, const Vec2& n, const GasModel& gas) {
  const Primitive2 pr = primitive_from_conserved2(w, gas);
  const double un = pr.ux * n[0] + pr.uy * n[1];
  return {w[0] * un,
          w[1] * un + pr.p * n[0],
          w[2] * un + pr.p * n[1],
          un * (w[3] + pr.p)};
}

double sound_speed(const Primitive& p, const GasModel& gas) {
  return std::sqrt(gas.gamma * p.p / p.rho);
}

double sound_speed2(const Primitive2& p, const GasModel& gas) {
  return std::sqrt(gas.gamma * p.p / p.rho);
}

double total_enthalpy(const Vec3& w, const GasModel& gas) {
  const Primitive pr = primitive_from_conserved(w, gas);
  return (w[2] + pr.p) / pr.rho;
}

double total_enthalpy2(const Vec4& w, const GasModel& gas) {
  const Primitive2 pr = primitive_from_conserved2(w, gas);
  return (w[3] + pr.p) / pr.rho;
}

Mat3 flux_jacobian(const Vec3& w, const GasModel& gas) {
  const Primitive pr = primitive_from_conserved(w, gas);
  return flux_jacobian_uH(pr.u, total_enthalpy(w, gas), gas);
}

Mat3 flux_jacobian_uH(double u, double H, const GasModel& gas) {
  const double g = gas.gamma;
  return {Vec3{0.0, 1.0, 0.0},
          Vec3{0.5 * (g - 3.0) * u * u, (3.0 - g) * u, g - 1.0},
          Vec3{0.5 * (g - 1.0) * u * u * u - u * H, H - (g - 1.0) * u * u, g * u}};
}

EigenStructure eigenstructure(double u, double c, double H) {
  EigenStructure es;
  es.lambdas = {u - c, u, u + c};
  es.right[0] = {1.0, u - c, H - u * c};
  es.right[1] = {1.0, u, 0.5 * u * u};
  es.right[2] = {1.0, u + c, H + u * c};
  return es;
}

Vec3 mirror(const Vec3& w) { return {w[0], -w[1], w[2]}; }

Vec3 conserved_from_rho_u_H(double rho, double u, double H, const GasModel& gas) {
  // H = u^2/2 + gamma*e with e the specific internal energy.
  const double e = (H - 0.5 * u * u) / gas.gamma;
  const double p = (gas.gamma - 1.0) * rho * e;
  return conserved_from_primitive({rho, u, p}, gas);
}

}  // namespace fvroe
