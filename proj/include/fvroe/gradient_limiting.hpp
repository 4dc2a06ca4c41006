#ifndef FVROE_GRADIENT_LIMITING_HPP
#define FVROE_GRADIENT_LIMITING_HPP

#include <vector>

#include "fvroe/gas_model.hpp"
#include "fvroe/mesh2d.hpp"

namespace fvroe {

/// The four scalar fields reconstructed on 2D meshes.
inline constexpr int n_recon_fields = 4;  // rho, rho*ux, rho*uy, p

struct ReconFields {
  std::array<double, n_recon_fields> z{};
};

ReconFields recon_fields_of(const Primitive2& pr);

/// Face values of the reconstructed fields at a wall: density and pressure
/// are copied, the momentum loses its normal component.
ReconFields wall_face_values(const Primitive2& cell_prim, const Vec2& n);

/// Per-cell, per-field second order data.
struct CellReconstruction {
  std::array<Vec2, n_recon_fields> gradient{};
  std::array<double, n_recon_fields> alpha{};
  /// face_values[local face index][field]
  std::vector<ReconFields> face_values;
};

/// theta-weighted mean of the field across an internal face; the cell value
/// on a fluid boundary; the impenetrability-adjusted value on a wall.
double face_mean(double theta, double z_cell, double z_neighbor);

/// Gradient of a cell field from its per-face means:
/// (1/|K|) sum |f| zbar n_f with outward normals.
Vec2 green_gradient(const UnstructuredMesh& mesh, int k,
                    const std::vector<double>& face_means);

/// Limiting coefficient: zero when the cell value is a non-strict extremum
/// among its neighbors, one when there is no variation to limit, otherwise
/// the largest factor in [0,1] keeping every face extrapolation within
/// k-scaled bounds.
double limiting_coefficient(const UnstructuredMesh& mesh, int k, double z_cell,
                            const std::vector<double>& neighbor_values,
                            const Vec2& gradient, double strength);

std::vector<double> extrapolate_to_faces(const UnstructuredMesh& mesh, int k,
                                         double z_cell, const Vec2& gradient,
                                         double alpha);

/// Full second order reconstruction of every cell from a snapshot of cell
/// primitives. Two-phase by construction: all means and gradients read only
/// the snapshot. `strength` is the limiting parameter in [1/2, 1].
std::vector<CellReconstruction> reconstruct_all(
    const UnstructuredMesh& mesh, const std::vector<Primitive2>& prim,
    double strength);

/// Maximum violation of the two-sided limiting constraint over all cells,
/// fields, and limitation-relevant faces (0 when fully satisfied).
double reconstruction_bound_violation(const UnstructuredMesh& mesh,
                                      const std::vector<Primitive2>& prim,
                                      const std::vector<CellReconstruction>& recon,
                                      double strength);

}  // namespace fvroe

#endif
