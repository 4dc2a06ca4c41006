#include "fvroe/gradient_limiting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fvroe {

ReconFields recon_fields_of(const Primitive2& pr) {
  return {{pr.rho, pr.rho * pr.ux, pr.rho * pr.uy, pr.p}};
}

ReconFields wall_face_values(const Primitive2& pr, const Vec2& n) {
  const double un = pr.ux * n[0] + pr.uy * n[1];
  return {{pr.rho, pr.rho * (pr.ux - un * n[0]), pr.rho * (pr.uy - un * n[1]), pr.p}};
}

double face_mean(double theta, double z_cell, double z_neighbor) {
  return (1.0 - theta) * z_cell + theta * z_neighbor;
}

Vec2 green_gradient(const UnstructuredMesh& mesh, int k,
                    const std::vector<double>& face_means) {
  const Cell& cell = mesh.cells[static_cast<std::size_t>(k)];
  Vec2 g{0.0, 0.0};
  for (std::size_t i = 0; i < cell.faces.size(); ++i) {
    const int f = cell.faces[i];
    const Vec2 n = mesh.outward_normal(k, f);
    const double w = mesh.faces[static_cast<std::size_t>(f)].length * face_means[i];
    g[0] += w * n[0];
    g[1] += w * n[1];
  }
  return {g[0] / cell.area, g[1] / cell.area};
}

double limiting_coefficient(const UnstructuredMesh& mesh, int k, double z_cell,
                            const std::vector<double>& neighbor_values,
                            const Vec2& gradient, double strength) {
  const Cell& cell = mesh.cells[static_cast<std::size_t>(k)];

  // Largest face excursion of the unlimited extrapolation. Fluid-type
  // boundary faces do not drive the limitation; wall faces do, since they
  // act as pseudo-neighbors.
  double excursion = 0.0;
  for (int f : cell.faces) {
    if (mesh.neighbor(k, f) < 0 &&
        mesh.faces[static_cast<std::size_t>(f)].marker != BoundaryMarker::wall)
      continue;
    const auto [y, theta] = mesh.interface_point(k, f);
    (void)theta;
    excursion = std::max(excursion, std::fabs(gradient[0] * (y[0] - cell.centroid[0]) +
                                              gradient[1] * (y[1] - cell.centroid[1])));
  }
  if (excursion == 0.0) return 1.0;  // nothing to limit

  double m = std::numeric_limits<double>::infinity();
  double M = -std::numeric_limits<double>::infinity();
  for (double z : neighbor_values) {
    m = std::min(m, z);
    M = std::max(M, z);
  }
  if (z_cell <= m || z_cell >= M) return 0.0;  // local extremum

  return std::min(1.0, strength * std::min(M - z_cell, z_cell - m) / excursion);
}

std::vector<double> extrapolate_to_faces(const UnstructuredMesh& mesh, int k,
                                         double z_cell, const Vec2& gradient,
                                         double alpha) {
  const Cell& cell = mesh.cells[static_cast<std::size_t>(k)];
  std::vector<double> out(cell.faces.size());
  for (std::size_t i = 0; i < cell.faces.size(); ++i) {
    const auto [y, theta] = mesh.interface_point(k, cell.faces[i]);
    (void)theta;
    out[i] = z_cell + alpha * (gradient[0] * (y[0] - cell.centroid[0]) +
                               gradient[1] * (y[1] - cell.centroid[1]));
  }
  return out;
}

std::vector<CellReconstruction> reconstruct_all(
    const UnstructuredMesh& mesh, const std::vector<Primitive2>& prim,
    double strength) {
  const int nc = mesh.n_cells();
  std::vector<ReconFields> cell_fields(static_cast<std::size_t>(nc));
  for (int k = 0; k < nc; ++k)
    cell_fields[static_cast<std::size_t>(k)] = recon_fields_of(prim[static_cast<std::size_t>(k)]);

  std::vector<CellReconstruction> out(static_cast<std::size_t>(nc));
  std::vector<double> means;
  std::vector<double> nbrs;
  for (int k = 0; k < nc; ++k) {
    const Cell& cell = mesh.cells[static_cast<std::size_t>(k)];
    CellReconstruction& rc = out[static_cast<std::size_t>(k)];
    rc.face_values.resize(cell.faces.size());

    for (int field = 0; field < n_recon_fields; ++field) {
      const double zk = cell_fields[static_cast<std::size_t>(k)].z[static_cast<std::size_t>(field)];

      means.assign(cell.faces.size(), 0.0);
      for (std::size_t i = 0; i < cell.faces.size(); ++i) {
        const int f = cell.faces[i];
        const Face& face = mesh.faces[static_cast<std::size_t>(f)];
        const int nb = mesh.neighbor(k, f);
        if (nb >= 0) {
          const auto [y, theta] = mesh.interface_point(k, f);
          (void)y;
          means[i] = face_mean(theta, zk,
                               cell_fields[static_cast<std::size_t>(nb)].z[static_cast<std::size_t>(field)]);
        } else if (face.marker == BoundaryMarker::wall) {
          means[i] = wall_face_values(prim[static_cast<std::size_t>(k)],
                                      mesh.outward_normal(k, f))
                         .z[static_cast<std::size_t>(field)];
        } else {
          means[i] = zk;  // fluid-type boundary
        }
      }
      rc.gradient[static_cast<std::size_t>(field)] = green_gradient(mesh, k, means);

      nbrs.clear();
      for (const NeighborRef& ref : mesh.neighbor_set(k, BoundaryMode::wall)) {
        if (ref.kind == NeighborRef::cell) {
          nbrs.push_back(cell_fields[static_cast<std::size_t>(ref.id)].z[static_cast<std::size_t>(field)]);
        } else {
          nbrs.push_back(wall_face_values(prim[static_cast<std::size_t>(k)],
                                          mesh.outward_normal(k, ref.id))
                             .z[static_cast<std::size_t>(field)]);
        }
      }
      rc.alpha[static_cast<std::size_t>(field)] = limiting_coefficient(
          mesh, k, zk, nbrs, rc.gradient[static_cast<std::size_t>(field)], strength);

      const std::vector<double> zf = extrapolate_to_faces(
          mesh, k, zk, rc.gradient[static_cast<std::size_t>(field)],
          rc.alpha[static_cast<std::size_t>(field)]);
      for (std::size_t i = 0; i < cell.faces.size(); ++i)
        rc.face_values[i].z[static_cast<std::size_t>(field)] = zf[i];
    }
  }
  return out;
}

double reconstruction_bound_violation(const UnstructuredMesh& mesh,
                                      const std::vector<Primitive2>& prim,
                                      const std::vector<CellReconstruction>& recon,
                                      double strength) {
  double worst = 0.0;
  for (int k = 0; k < mesh.n_cells(); ++k) {
    const Cell& cell = mesh.cells[static_cast<std::size_t>(k)];
    const ReconFields zk = recon_fields_of(prim[static_cast<std::size_t>(k)]);

    for (int field = 0; field < n_recon_fields; ++field) {
      double m = std::numeric_limits<double>::infinity();
      double M = -std::numeric_limits<double>::infinity();
      for (const NeighborRef& ref : mesh.neighbor_set(k, BoundaryMode::wall)) {
        const double z =
            ref.kind == NeighborRef::cell
                ? recon_fields_of(prim[static_cast<std::size_t>(ref.id)]).z[static_cast<std::size_t>(field)]
                : wall_face_values(prim[static_cast<std::size_t>(k)],
                                   mesh.outward_normal(k, ref.id))
                      .z[static_cast<std::size_t>(field)];
        m = std::min(m, z);
        M = std::max(M, z);
      }
      const double zc = zk.z[static_cast<std::size_t>(field)];
      const bool extremum = zc <= m || zc >= M;
      const double lo = -strength * (zc - m);
      const double hi = strength * (M - zc);
      for (std::size_t i = 0; i < cell.faces.size(); ++i) {
        const int f = cell.faces[i];
        if (mesh.neighbor(k, f) < 0 &&
            mesh.faces[static_cast<std::size_t>(f)].marker != BoundaryMarker::wall)
          continue;
        const double inc =
            recon[static_cast<std::size_t>(k)].face_values[i].z[static_cast<std::size_t>(field)] - zc;
        if (extremum) {
          // Clamped cell: the face values must coincide with the cell value.
          worst = std::max(worst, std::fabs(inc));
        } else {
          worst = std::max(worst, lo - inc);
          worst = std::max(worst, inc - hi);
        }
      }
    }
  }
  return worst;
}

}  // namespace fvroe
