#ifndef FVROE_BOUNDARY_HPP
#define FVROE_BOUNDARY_HPP

#include <functional>

#include "fvroe/gas_model.hpp"
#include "fvroe/linear_hyperbolic.hpp"

namespace fvroe {

/// Imposed-pressure boundary: the time-dependent pressure Pi(t) and which
/// end of the pipe it acts on.
struct PressureBoundarySpec {
  ScalarFn Pi;
  Side side = Side::left;
};

/// Boundary state of the partial Riemann problem for a left boundary: the
/// unique state with pressure Pi connected to the interior state Wr by a
/// single ingoing 3-wave of the linearized solver.
Vec3 pressure_boundary_state(double Pi, const Vec3& wr, const GasModel& gas);

/// Boundary flux: entropy-corrected interaction of the constructed boundary
/// state with the adjacent cell. A right boundary uses the mirrored
/// construction (x -> -x, u -> -u).
Vec3 pressure_boundary_flux(const PressureBoundarySpec& spec, const Vec3& w_adjacent,
                            double t_half, const GasModel& gas);

/// Free output: the physical flux of the adjacent state, so no wave is
/// created at the last interface.
Vec3 nonreflecting_flux(const Vec3& w_adjacent, const GasModel& gas);

}  // namespace fvroe

#endif
