#ifndef FVROE_INTEGRATOR_HPP
#define FVROE_INTEGRATOR_HPP

#include <functional>
#include <memory>
#include <vector>

#include "fvroe/boundary.hpp"
#include "fvroe/gas_model.hpp"
#include "fvroe/gradient_limiting.hpp"
#include "fvroe/linear_hyperbolic.hpp"
#include "fvroe/mesh2d.hpp"
#include "fvroe/reconstruction.hpp"
#include "fvroe/roe.hpp"

namespace fvroe {

/// Cell averages of all cells, flattened with n_comps() values per cell.
struct DynamicState {
  std::vector<double> values;
  double time = 0.0;
};

/// Time integral of the outward boundary flux consumed by a step, one entry
/// per state component. Exact discrete conservation reads
///   sum_K |K| (W_K^{n+1} - W_K^n) + boundary_time_integral = 0.
struct StepBalance {
  std::vector<double> boundary_time_integral;
};

/// A semi-discrete conservation law: dU/dt = G(U, t). Time-dependent
/// boundary data inside G is sampled at the t_data argument, which the
/// steppers choose (half step for forward Euler, stage times for Heun).
class Problem {
public:
  virtual ~Problem() = default;
  virtual int n_cells() const = 0;
  virtual int n_comps() const = 0;
  virtual double cell_volume(int k) const = 0;

  /// Writes G into g (resized by the caller); if boundary_sum is non-null it
  /// receives sum over boundary faces of |f| * outward flux, per component.
  virtual void rhs(const std::vector<double>& u, double t_data,
                   std::vector<double>& g, std::vector<double>* boundary_sum) const = 0;

  /// Largest stable time step at unit Courant number (may be infinite).
  virtual double max_dt(const std::vector<double>& u) const = 0;

  /// Throws InadmissibleState (with the offending cell) on invalid entries.
  virtual void validate(const std::vector<double>& u, double t) const;
};

std::vector<double> assemble_rhs(const Problem& problem, const DynamicState& state,
                                 double t_data,
                                 std::vector<double>* boundary_sum = nullptr);

DynamicState euler_step(const Problem& problem, const DynamicState& state, double dt,
                        StepBalance* balance = nullptr);

/// Two-stage second order step; face states are rebuilt from the predictor.
DynamicState heun_step(const Problem& problem, const DynamicState& state, double dt,
                       StepBalance* balance = nullptr);

double stable_dt(const Problem& problem, const DynamicState& state, double cfl);

// ---------------------------------------------------------------------------
// Problem assemblies

struct Bc1D {
  enum Kind { inflow, pressure, nonreflecting, reflection } kind = nonreflecting;
  ScalarFn data;  // inflow value or imposed pressure, depending on kind
};

class AdvectionProblem : public Problem {
public:
  AdvectionProblem(double a, double L, int cells, int order, Limiter limiter,
                   ScalarFn inflow);

  int n_cells() const override { return cells_; }
  int n_comps() const override { return 1; }
  double cell_volume(int) const override { return dx_; }
  void rhs(const std::vector<double>& u, double t_data, std::vector<double>& g,
           std::vector<double>* boundary_sum) const override;
  double max_dt(const std::vector<double>& u) const override;

  double dx() const { return dx_; }
  double celerity() const { return a_; }

private:
  double a_, L_, dx_;
  int cells_, order_;
  Limiter limiter_;
  ScalarFn inflow_;
};

class AcousticsProblem : public Problem {
public:
  AcousticsProblem(AcousticsModel model, double L, int cells, int order,
                   Limiter limiter, Bc1D left, Bc1D right,
                   const Vec2& init_last_cell);

  int n_cells() const override { return cells_; }
  int n_comps() const override { return 2; }
  double cell_volume(int) const override { return dx_; }
  void rhs(const std::vector<double>& u, double t_data, std::vector<double>& g,
           std::vector<double>* boundary_sum) const override;
  double max_dt(const std::vector<double>& u) const override;

  const AcousticsModel& model() const { return model_; }
  double dx() const { return dx_; }

private:
  AcousticsModel model_;
  LinearSystem sys_;
  double L_, dx_;
  int cells_, order_;
  Limiter limiter_;
  Bc1D left_, right_;
  Vec2 init_last_;
};

class Euler1DProblem : public Problem {
public:
  Euler1DProblem(GasModel gas, double L, int cells, int order, Limiter limiter,
                 Bc1D left, Bc1D right);

  int n_cells() const override { return cells_; }
  int n_comps() const override { return 3; }
  double cell_volume(int) const override { return dx_; }
  void rhs(const std::vector<double>& u, double t_data, std::vector<double>& g,
           std::vector<double>* boundary_sum) const override;
  double max_dt(const std::vector<double>& u) const override;
  void validate(const std::vector<double>& u, double t) const override;

  const GasModel& gas() const { return gas_; }
  double dx() const { return dx_; }

private:
  Vec3 cell_state(const std::vector<double>& u, int k) const;
  Vec3 boundary_flux(const Bc1D& bc, Side side, const Vec3& adjacent,
                     double t_data) const;

  GasModel gas_;
  double L_, dx_;
  int cells_, order_;
  Limiter limiter_;
  Bc1D left_, right_;
};

class Euler2DProblem : public Problem {
public:
  /// order 1 uses cell values at faces; order 2 the limited reconstruction
  /// with the given strength. With validate_bounds set, every reconstruction
  /// is checked against the two-sided limiting constraint.
  Euler2DProblem(GasModel gas, UnstructuredMesh mesh, int order, double strength,
                 bool validate_bounds = false);

  int n_cells() const override { return mesh_.n_cells(); }
  int n_comps() const override { return 4; }
  double cell_volume(int k) const override {
    return mesh_.cells[static_cast<std::size_t>(k)].area;
  }
  void rhs(const std::vector<double>& u, double t_data, std::vector<double>& g,
           std::vector<double>* boundary_sum) const override;
  double max_dt(const std::vector<double>& u) const override;
  void validate(const std::vector<double>& u, double t) const override;

  const UnstructuredMesh& mesh() const { return mesh_; }
  const GasModel& gas() const { return gas_; }

private:
  Vec4 cell_state(const std::vector<double>& u, int k) const;

  GasModel gas_;
  UnstructuredMesh mesh_;
  int order_;
  double strength_;
  bool validate_bounds_;
  // local index of each face within its left/right cell's face list
  std::vector<int> left_local_, right_local_;
};

}  // namespace fvroe

#endif
