#include "fvroe/boundary.hpp"

#include <cmath>

#include "fvroe/roe.hpp"

namespace fvroe {

Vec3 pressure_boundary_state(double Pi, const Vec3& wr, const GasModel& gas) {
  if (!(Pi > pressure_floor)) throw NonPositivePressure(Pi);
  const Primitive pr = primitive_from_conserved(wr, gas);
  const double g = gas.gamma;
  const double denom = (g - 1.0) * Pi + (g + 1.0) * pr.p;
  const double rho_l = pr.rho * ((g + 1.0) * Pi + (g - 1.0) * pr.p) / denom;
  const double u_l = pr.u + (Pi - pr.p) * std::sqrt(2.0 / (pr.rho * denom));
  return conserved_from_primitive({rho_l, u_l, Pi}, gas);
}

Vec3 pressure_boundary_flux(const PressureBoundarySpec& spec, const Vec3& w_adjacent,
                            double t_half, const GasModel& gas) {
  const double Pi = spec.Pi(t_half);
  if (spec.side == Side::left) {
    const Vec3 wl = pressure_boundary_state(Pi, w_adjacent, gas);
    return entropy_fixed_flux(wl, w_adjacent, gas);
  }
  const Vec3 wb = mirror(pressure_boundary_state(Pi, mirror(w_adjacent), gas));
  return entropy_fixed_flux(w_adjacent, wb, gas);
}

Vec3 nonreflecting_flux(const Vec3& w_adjacent, const GasModel& gas) {
  return physical_flux(w_adjacent, gas);
}

}  // namespace fvroe
