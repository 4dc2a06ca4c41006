#include "fvroe/integrator.hpp"

#include <cmath>
#include <limits>

namespace fvroe {

void Problem::validate(const std::vector<double>&, double) const {}

std::vector<double> assemble_rhs(const Problem& problem, const DynamicState& state,
                                 double t_data, std::vector<double>* boundary_sum) {
  std::vector<double> g(state.values.size());
  problem.rhs(state.values, t_data, g, boundary_sum);
  return g;
}

DynamicState euler_step(const Problem& problem, const DynamicState& state, double dt,
                        StepBalance* balance) {
  std::vector<double> bsum;
  std::vector<double> g(state.values.size());
  // Time-dependent boundary data enters at the half step.
  problem.rhs(state.values, state.time + 0.5 * dt, g, balance ? &bsum : nullptr);
  DynamicState next;
  next.values.resize(state.values.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    next.values[i] = state.values[i] + dt * g[i];
  next.time = state.time + dt;
  problem.validate(next.values, next.time);
  if (balance) {
    balance->boundary_time_integral.assign(bsum.size(), 0.0);
    for (std::size_t c = 0; c < bsum.size(); ++c)
      balance->boundary_time_integral[c] = dt * bsum[c];
  }
  return next;
}

DynamicState heun_step(const Problem& problem, const DynamicState& state, double dt,
                       StepBalance* balance) {
  const std::size_t n = state.values.size();
  std::vector<double> b1, b2;
  std::vector<double> g(n);

  problem.rhs(state.values, state.time, g, balance ? &b1 : nullptr);
  std::vector<double> predictor(n);
  for (std::size_t i = 0; i < n; ++i) predictor[i] = state.values[i] + dt * g[i];
  problem.validate(predictor, state.time + dt);

  problem.rhs(predictor, state.time + dt, g, balance ? &b2 : nullptr);
  DynamicState next;
  next.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    next.values[i] = 0.5 * (state.values[i] + predictor[i] + dt * g[i]);
  next.time = state.time + dt;
  problem.validate(next.values, next.time);
  if (balance) {
    balance->boundary_time_integral.assign(b1.size(), 0.0);
    for (std::size_t c = 0; c < b1.size(); ++c)
      balance->boundary_time_integral[c] = 0.5 * dt * (b1[c] + b2[c]);
  }
  return next;
}

double stable_dt(const Problem& problem, const DynamicState& state, double cfl) {
  return cfl * problem.max_dt(state.values);
}

// ---------------------------------------------------------------------------
// Scalar advection

AdvectionProblem::AdvectionProblem(double a, double L, int cells, int order,
                                   Limiter limiter, ScalarFn inflow)
    : a_(a), L_(L), dx_(L / cells), cells_(cells), order_(order),
      limiter_(limiter), inflow_(std::move(inflow)) {
  if (cells_ < 3) throw ConfigError("advection needs at least 3 cells");
}

void AdvectionProblem::rhs(const std::vector<double>& u, double t_data,
                           std::vector<double>& g,
                           std::vector<double>* boundary_sum) const {
  const int J = cells_;
  std::vector<double> flux(static_cast<std::size_t>(J + 1));

  for (int i = 1; i < J; ++i) {
    double wl = u[static_cast<std::size_t>(i - 1)];
    double wr = u[static_cast<std::size_t>(i)];
    if (order_ == 2 && i >= 2 && i <= J - 2) {
      const auto [zl, zr] =
          muscl_extrapolate(u[static_cast<std::size_t>(i - 2)], wl, wr,
                            u[static_cast<std::size_t>(i + 1)], limiter_);
      wl = zl;
      wr = zr;
    }
    flux[static_cast<std::size_t>(i)] = upwind_flux_scalar(a_, wl, wr);
  }
  if (a_ > 0.0) {
    flux[0] = a_ * inflow_(t_data);
    flux[static_cast<std::size_t>(J)] = a_ * u[static_cast<std::size_t>(J - 1)];
  } else {
    flux[0] = a_ * u[0];
    flux[static_cast<std::size_t>(J)] = a_ * inflow_(t_data);
  }

  for (int i = 0; i < J; ++i)
    g[static_cast<std::size_t>(i)] =
        -(flux[static_cast<std::size_t>(i + 1)] - flux[static_cast<std::size_t>(i)]) / dx_;

  if (boundary_sum) {
    boundary_sum->assign(1, flux[static_cast<std::size_t>(J)] - flux[0]);
  }
}

double AdvectionProblem::max_dt(const std::vector<double>&) const {
  if (a_ == 0.0) return std::numeric_limits<double>::infinity();
  return dx_ / std::fabs(a_);
}

// ---------------------------------------------------------------------------
// Linear acoustics

AcousticsProblem::AcousticsProblem(AcousticsModel model, double L, int cells,
                                   int order, Limiter limiter, Bc1D left, Bc1D right,
                                   const Vec2& init_last_cell)
    : model_(model), sys_(model.system()), L_(L), dx_(L / cells), cells_(cells),
      order_(order), limiter_(limiter), left_(std::move(left)),
      right_(std::move(right)), init_last_(init_last_cell) {
  if (cells_ < 3) throw ConfigError("acoustics needs at least 3 cells");
  if (left_.kind != Bc1D::pressure && left_.kind != Bc1D::reflection)
    throw ConfigError("acoustics left boundary must be pressure or reflection");
  if (right_.kind != Bc1D::nonreflecting && right_.kind != Bc1D::reflection)
    throw ConfigError("acoustics right boundary must be nonreflecting or reflection");
}

void AcousticsProblem::rhs(const std::vector<double>& u, double t_data,
                           std::vector<double>& g,
                           std::vector<double>* boundary_sum) const {
  const int J = cells_;
  auto cell = [&](int k) -> Vec2 {
    return {u[static_cast<std::size_t>(2 * k)], u[static_cast<std::size_t>(2 * k + 1)]};
  };
  std::vector<Vec2> flux(static_cast<std::size_t>(J + 1));

  for (int i = 1; i < J; ++i) {
    Vec2 wl = cell(i - 1), wr = cell(i);
    if (order_ == 2 && i >= 2 && i <= J - 2) {
      const Vec2 wmm = cell(i - 2), wpp = cell(i + 1);
      for (int c = 0; c < 2; ++c) {
        const auto [zl, zr] = muscl_extrapolate(
            wmm[static_cast<std::size_t>(c)], wl[static_cast<std::size_t>(c)],
            wr[static_cast<std::size_t>(c)], wpp[static_cast<std::size_t>(c)], limiter_);
        wl[static_cast<std::size_t>(c)] = zl;
        wr[static_cast<std::size_t>(c)] = zr;
      }
    }
    VecN a(2), b(2);
    a[0] = wl[0]; a[1] = wl[1];
    b[0] = wr[0]; b[1] = wr[1];
    const VecN f = linear_upwind_flux(sys_, a, b);
    flux[static_cast<std::size_t>(i)] = {f[0], f[1]};
  }

  const auto [left_flux, right_flux] = acoustic_boundary_fluxes(
      model_, left_.kind == Bc1D::pressure ? left_.data(t_data) : 0.0, cell(0),
      cell(J - 1), init_last_);
  if (left_.kind == Bc1D::pressure) {
    flux[0] = left_flux;
  } else {
    // Rigid end: the ingoing characteristic mirrors the outgoing one (u = 0).
    ReflectionBoundary rb;
    rb.side = Side::left;
    rb.g = [](double) { VecN z(1); return z; };
    rb.S = [](double) { MatN s(1, 1); s(0, 0) = 1.0; return s; };
    VecN w(2);
    w[0] = cell(0)[0]; w[1] = cell(0)[1];
    const VecN f = reflection_boundary_flux(sys_, rb, w, t_data);
    flux[0] = {f[0], f[1]};
  }
  if (right_.kind == Bc1D::nonreflecting) {
    flux[static_cast<std::size_t>(J)] = right_flux;
  } else {
    ReflectionBoundary rb;
    rb.side = Side::right;
    rb.g = [](double) { VecN z(1); return z; };
    rb.S = [](double) { MatN s(1, 1); s(0, 0) = 1.0; return s; };
    VecN w(2);
    w[0] = cell(J - 1)[0]; w[1] = cell(J - 1)[1];
    const VecN f = reflection_boundary_flux(sys_, rb, w, t_data);
    flux[static_cast<std::size_t>(J)] = {f[0], f[1]};
  }

  for (int i = 0; i < J; ++i)
    for (int c = 0; c < 2; ++c)
      g[static_cast<std::size_t>(2 * i + c)] =
          -(flux[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] -
            flux[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) /
          dx_;

  if (boundary_sum) {
    boundary_sum->assign(2, 0.0);
    for (int c = 0; c < 2; ++c)
      (*boundary_sum)[static_cast<std::size_t>(c)] =
          flux[static_cast<std::size_t>(J)][static_cast<std::size_t>(c)] -
          flux[0][static_cast<std::size_t>(c)];
  }
}

double AcousticsProblem::max_dt(const std::vector<double>&) const {
  return dx_ / model_.c0;
}

// ---------------------------------------------------------------------------
// 1D Euler

Euler1DProblem::Euler1DProblem(GasModel gas, double L, int cells, int order,
                               Limiter limiter, Bc1D left, Bc1D right)
    : gas_(gas), L_(L), dx_(L / cells), cells_(cells), order_(order),
      limiter_(limiter), left_(std::move(left)), right_(std::move(right)) {
  if (cells_ < 3) throw ConfigError("euler1d needs at least 3 cells");
  if (left_.kind == Bc1D::inflow || right_.kind == Bc1D::inflow)
    throw ConfigError("inflow profiles are for advection; use pressure for euler1d");
}

Vec3 Euler1DProblem::cell_state(const std::vector<double>& u, int k) const {
  return {u[static_cast<std::size_t>(3 * k)], u[static_cast<std::size_t>(3 * k + 1)],
          u[static_cast<std::size_t>(3 * k + 2)]};
}

Vec3 Euler1DProblem::boundary_flux(const Bc1D& bc, Side side, const Vec3& adjacent,
                                   double t_data) const {
  switch (bc.kind) {
    case Bc1D::pressure:
      return pressure_boundary_flux({bc.data, side}, adjacent, t_data, gas_);
    case Bc1D::nonreflecting:
      return nonreflecting_flux(adjacent, gas_);
    case Bc1D::reflection:
      return side == Side::left ? entropy_fixed_flux(mirror(adjacent), adjacent, gas_)
                                : entropy_fixed_flux(adjacent, mirror(adjacent), gas_);
    default:
      throw ConfigError("unsupported boundary kind for euler1d");
  }
}

void Euler1DProblem::rhs(const std::vector<double>& u, double t_data,
                         std::vector<double>& g,
                         std::vector<double>* boundary_sum) const {
  const int J = cells_;

  std::vector<Primitive> prim(static_cast<std::size_t>(J));
  for (int k = 0; k < J; ++k) {
    try {
      prim[static_cast<std::size_t>(k)] = primitive_from_conserved(cell_state(u, k), gas_);
    } catch (const InadmissibleState& e) {
      throw InadmissibleState("cell " + std::to_string(k) + ": " + e.what());
    }
  }

  std::vector<Vec3> flux(static_cast<std::size_t>(J + 1));
  for (int i = 1; i < J; ++i) {
    Vec3 wl = cell_state(u, i - 1);
    Vec3 wr = cell_state(u, i);
    if (order_ == 2 && i >= 2 && i <= J - 2) {
      // Slopes act on the primitive variables.
      const Primitive& pmm = prim[static_cast<std::size_t>(i - 2)];
      const Primitive& pm = prim[static_cast<std::size_t>(i - 1)];
      const Primitive& pp = prim[static_cast<std::size_t>(i)];
      const Primitive& ppp = prim[static_cast<std::size_t>(i + 1)];
      const auto [rl, rr] = muscl_extrapolate(pmm.rho, pm.rho, pp.rho, ppp.rho, limiter_);
      const auto [ul, ur] = muscl_extrapolate(pmm.u, pm.u, pp.u, ppp.u, limiter_);
      const auto [pl, pr] = muscl_extrapolate(pmm.p, pm.p, pp.p, ppp.p, limiter_);
      wl = conserved_from_primitive({rl, ul, pl}, gas_);
      wr = conserved_from_primitive({rr, ur, pr}, gas_);
    }
    flux[static_cast<std::size_t>(i)] = entropy_fixed_flux(wl, wr, gas_);
  }
  flux[0] = boundary_flux(left_, Side::left, cell_state(u, 0), t_data);
  flux[static_cast<std::size_t>(J)] =
      boundary_flux(right_, Side::right, cell_state(u, J - 1), t_data);

  for (int k = 0; k < J; ++k)
    for (int c = 0; c < 3; ++c)
      g[static_cast<std::size_t>(3 * k + c)] =
          -(flux[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(c)] -
            flux[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]) /
          dx_;

  if (boundary_sum) {
    boundary_sum->assign(3, 0.0);
    for (int c = 0; c < 3; ++c)
      (*boundary_sum)[static_cast<std::size_t>(c)] =
          flux[static_cast<std::size_t>(J)][static_cast<std::size_t>(c)] -
          flux[0][static_cast<std::size_t>(c)];
  }
}

double Euler1DProblem::max_dt(const std::vector<double>& u) const {
  double speed = 0.0;
  for (int k = 0; k < cells_; ++k) {
    const Primitive pr = primitive_from_conserved(cell_state(u, k), gas_);
    speed = std::max(speed, std::fabs(pr.u) + sound_speed(pr, gas_));
  }
  if (speed == 0.0) return std::numeric_limits<double>::infinity();
  return dx_ / speed;
}

void Euler1DProblem::validate(const std::vector<double>& u, double t) const {
  for (int k = 0; k < cells_; ++k) {
    try {
      primitive_from_conserved(cell_state(u, k), gas_);
    } catch (const InadmissibleState& e) {
      throw InadmissibleState("t=" + std::to_string(t) + " cell " + std::to_string(k) +
                              ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------
// 2D Euler on an unstructured mesh

Euler2DProblem::Euler2DProblem(GasModel gas, UnstructuredMesh mesh, int order,
                               double strength, bool validate_bounds)
    : gas_(gas), mesh_(std::move(mesh)), order_(order), strength_(strength),
      validate_bounds_(validate_bounds) {
  left_local_.assign(static_cast<std::size_t>(mesh_.n_faces()), -1);
  right_local_.assign(static_cast<std::size_t>(mesh_.n_faces()), -1);
  for (int k = 0; k < mesh_.n_cells(); ++k) {
    const Cell& cell = mesh_.cells[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < cell.faces.size(); ++i) {
      const Face& f = mesh_.faces[static_cast<std::size_t>(cell.faces[i])];
      (f.left_cell == k ? left_local_ : right_local_)[static_cast<std::size_t>(cell.faces[i])] =
          static_cast<int>(i);
    }
  }
}

Vec4 Euler2DProblem::cell_state(const std::vector<double>& u, int k) const {
  const std::size_t o = static_cast<std::size_t>(4 * k);
  return {u[o], u[o + 1], u[o + 2], u[o + 3]};
}

namespace {

Vec4 conserved_from_fields(const ReconFields& z, const GasModel& gas) {
  const double rho = z.z[0];
  if (!(rho > rho_floor)) throw NonPositiveDensity(rho);
  const double e = z.z[3] / (gas.gamma - 1.0) +
                   0.5 * (z.z[1] * z.z[1] + z.z[2] * z.z[2]) / rho;
  if (!(z.z[3] > pressure_floor)) throw NonPositivePressure(z.z[3]);
  return {rho, z.z[1], z.z[2], e};
}

Vec4 mirror2(const Vec4& w, const Vec2& n) {
  const double qn = w[1] * n[0] + w[2] * n[1];
  return {w[0], w[1] - 2.0 * qn * n[0], w[2] - 2.0 * qn * n[1], w[3]};
}

}  // namespace

void Euler2DProblem::rhs(const std::vector<double>& u, double,
                         std::vector<double>& g,
                         std::vector<double>* boundary_sum) const {
  const int nc = mesh_.n_cells();

  std::vector<Primitive2> prim(static_cast<std::size_t>(nc));
  for (int k = 0; k < nc; ++k) {
    try {
      prim[static_cast<std::size_t>(k)] = primitive_from_conserved2(cell_state(u, k), gas_);
    } catch (const InadmissibleState& e) {
      throw InadmissibleState("cell " + std::to_string(k) + ": " + e.what());
    }
  }

  std::vector<CellReconstruction> recon;
  if (order_ == 2) {
    recon = reconstruct_all(mesh_, prim, strength_);
    if (validate_bounds_) {
      const double v = reconstruction_bound_violation(mesh_, prim, recon, strength_);
      double scale = 0.0;
      for (const Primitive2& p : prim)
        scale = std::max({scale, std::fabs(p.rho), std::fabs(p.p),
                          std::fabs(p.rho * p.ux), std::fabs(p.rho * p.uy)});
      if (v > 1e-13 * std::max(1.0, scale))
        throw Error("limited reconstruction violates its bounds: " + std::to_string(v));
    }
  }

  auto face_state = [&](int k, int f) -> Vec4 {
    if (order_ != 2) return cell_state(u, k);
    const int local = mesh_.faces[static_cast<std::size_t>(f)].left_cell == k
                          ? left_local_[static_cast<std::size_t>(f)]
                          : right_local_[static_cast<std::size_t>(f)];
    return conserved_from_fields(
        recon[static_cast<std::size_t>(k)].face_values[static_cast<std::size_t>(local)], gas_);
  };

  std::fill(g.begin(), g.end(), 0.0);
  if (boundary_sum) boundary_sum->assign(4, 0.0);

  for (int f = 0; f < mesh_.n_faces(); ++f) {
    const Face& face = mesh_.faces[static_cast<std::size_t>(f)];
    const int L = face.left_cell;
    const int R = face.right_cell;
    Vec4 fl;
    if (R >= 0) {
      fl = euler_face_flux(face_state(L, f), face_state(R, f), face.normal, gas_);
      const double wl = face.length / mesh_.cells[static_cast<std::size_t>(L)].area;
      const double wr = face.length / mesh_.cells[static_cast<std::size_t>(R)].area;
      for (int c = 0; c < 4; ++c) {
        g[static_cast<std::size_t>(4 * L + c)] -= wl * fl[static_cast<std::size_t>(c)];
        g[static_cast<std::size_t>(4 * R + c)] += wr * fl[static_cast<std::size_t>(c)];
      }
    } else {
      const Vec4 wb = face_state(L, f);
      if (face.marker == BoundaryMarker::wall) {
        fl = euler_face_flux(wb, mirror2(wb, face.normal), face.normal, gas_);
      } else {
        // fluid / inflow / outflow: free output of the face state
        fl = physical_flux2(wb, face.normal, gas_);
      }
      const double wl = face.length / mesh_.cells[static_cast<std::size_t>(L)].area;
      for (int c = 0; c < 4; ++c) {
        g[static_cast<std::size_t>(4 * L + c)] -= wl * fl[static_cast<std::size_t>(c)];
        if (boundary_sum)
          (*boundary_sum)[static_cast<std::size_t>(c)] +=
              face.length * fl[static_cast<std::size_t>(c)];
      }
    }
  }
}

double Euler2DProblem::max_dt(const std::vector<double>& u) const {
  double dt = std::numeric_limits<double>::infinity();
  for (int k = 0; k < mesh_.n_cells(); ++k) {
    const Primitive2 pr = primitive_from_conserved2(cell_state(u, k), gas_);
    const double c = sound_speed2(pr, gas_);
    const Cell& cell = mesh_.cells[static_cast<std::size_t>(k)];
    double denom = 0.0;
    for (int f : cell.faces) {
      const Vec2 n = mesh_.outward_normal(k, f);
      denom += mesh_.faces[static_cast<std::size_t>(f)].length *
               (std::fabs(pr.ux * n[0] + pr.uy * n[1]) + c);
    }
    if (denom > 0.0) dt = std::min(dt, cell.area / denom);
  }
  return dt;
}

void Euler2DProblem::validate(const std::vector<double>& u, double t) const {
  for (int k = 0; k < mesh_.n_cells(); ++k) {
    try {
      primitive_from_conserved2(cell_state(u, k), gas_);
    } catch (const InadmissibleState& e) {
      throw InadmissibleState("t=" + std::to_string(t) + " cell " + std::to_string(k) +
                              ": " + e.what());
    }
  }
}

}  // namespace fvroe
