#include "fvroe/solver_cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fvroe {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ConfigError("trailing characters in number: " + s);
    return v;
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a number: " + s);
  }
}

std::vector<double> to_doubles(const std::string& s) {
  std::vector<double> out;
  for (const std::string& part : split(s, ','))
    if (!trim(part).empty()) out.push_back(to_double(trim(part)));
  return out;
}

}  // namespace

double SolverConfig::effective_cfl() const {
  if (cfl > 0.0) return cfl;
  return (order == 2 && scheme == TimeScheme::heun) ? 0.45 : 0.9;
}

ScalarFn parse_time_profile(const std::string& spec) {
  const auto pos = spec.find(':');
  const std::string kind = pos == std::string::npos ? spec : spec.substr(0, pos);
  const std::string rest = pos == std::string::npos ? "" : spec.substr(pos + 1);
  if (kind == "constant") {
    const double v = to_double(rest);
    return [v](double) { return v; };
  }
  if (kind == "sine") {
    const std::vector<double> p = to_doubles(rest);
    if (p.size() != 3) throw ConfigError("sine profile needs <p0>,<amplitude>,<frequency>");
    const double p0 = p[0], amp = p[1], freq = p[2];
    return [p0, amp, freq](double t) { return p0 + amp * std::sin(2.0 * M_PI * freq * t); };
  }
  if (kind == "table") {
    std::ifstream in(rest);
    if (!in) throw ConfigError("cannot open table file: " + rest);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      double t, v;
      if (ls >> t >> v) rows.emplace_back(t, v);
    }
    if (rows.size() < 2) throw ConfigError("table needs at least two rows: " + rest);
    if (!std::is_sorted(rows.begin(), rows.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; }))
      throw ConfigError("table times must increase: " + rest);
    return [rows](double t) {
      if (t <= rows.front().first) return rows.front().second;
      if (t >= rows.back().first) return rows.back().second;
      const auto it = std::upper_bound(
          rows.begin(), rows.end(), t,
          [](double x, const auto& row) { return x < row.first; });
      const auto [t1, v1] = *it;
      const auto [t0, v0] = *(it - 1);
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    };
  }
  throw ConfigError("unknown time profile: " + spec);
}

ScalarFn parse_space_profile(const std::string& spec, double L) {
  const auto pos = spec.find(':');
  const std::string kind = pos == std::string::npos ? spec : spec.substr(0, pos);
  const std::string rest = pos == std::string::npos ? "" : spec.substr(pos + 1);
  if (kind == "constant") {
    const double v = to_double(rest);
    return [v](double) { return v; };
  }
  if (kind == "sine") {
    const std::vector<double> p = to_doubles(rest);
    if (p.size() != 3) throw ConfigError("sine profile needs <offset>,<amplitude>,<periods>");
    const double off = p[0], amp = p[1], k = p[2];
    return [off, amp, k, L](double x) { return off + amp * std::sin(2.0 * M_PI * k * x / L); };
  }
  if (kind == "step") {
    const std::vector<double> p = to_doubles(rest);
    if (p.size() != 3) throw ConfigError("step profile needs <x0>,<left>,<right>");
    const double x0 = p[0], l = p[1], r = p[2];
    return [x0, l, r](double x) { return x < x0 ? l : r; };
  }
  throw ConfigError("unknown space profile: " + spec);
}

SolverConfig parse_config(const std::string& text) {
  SolverConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "problem") {
      if (value == "advection") cfg.problem = ProblemKind::advection;
      else if (value == "acoustics") cfg.problem = ProblemKind::acoustics;
      else if (value == "euler1d") cfg.problem = ProblemKind::euler1d;
      else if (value == "euler2d") cfg.problem = ProblemKind::euler2d;
      else throw ConfigError("unknown problem: " + value);
    } else if (key == "gamma") {
      cfg.gamma = to_double(value);
      if (!(cfg.gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    } else if (key == "L") {
      cfg.L = to_double(value);
    } else if (key == "cells") {
      cfg.cells = static_cast<int>(to_double(value));
    } else if (key == "mesh") {
      cfg.mesh_path = value;
    } else if (key == "cfl") {
      cfg.cfl = to_double(value);
      if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ConfigError("cfl must be in (0,1]");
    } else if (key == "t_end") {
      cfg.t_end = to_double(value);
    } else if (key == "fixed_dt") {
      cfg.fixed_dt = to_double(value);
    } else if (key == "order") {
      cfg.order = static_cast<int>(to_double(value));
      if (cfg.order != 1 && cfg.order != 2) throw ConfigError("order must be 1 or 2");
    } else if (key == "reconstruction") {
      if (value == "first") cfg.order = 1;
      else if (value == "second") cfg.order = 2;
      else throw ConfigError("reconstruction must be first or second");
    } else if (key == "limiter") {
      cfg.limiter = limiter_from_token(value);
    } else if (key == "limiter_k") {
      cfg.limiter_k = to_double(value);
      if (cfg.limiter_k < 0.5 || cfg.limiter_k > 1.0)
        throw ConfigError("limiter_k must lie in [0.5, 1]");
    } else if (key == "time") {
      if (value == "euler") cfg.scheme = TimeScheme::euler;
      else if (value == "heun") cfg.scheme = TimeScheme::heun;
      else throw ConfigError("time must be euler or heun");
    } else if (key == "a") {
      cfg.a = to_double(value);
    } else if (key == "rho0") {
      cfg.rho0 = to_double(value);
      if (!(cfg.rho0 > 0.0)) throw ConfigError("rho0 must be positive");
    } else if (key == "c0") {
      cfg.c0 = to_double(value);
      if (!(cfg.c0 > 0.0)) throw ConfigError("c0 must be positive");
    } else if (key == "bc_left") {
      cfg.bc_left = value;
    } else if (key == "bc_right") {
      cfg.bc_right = value;
    } else if (key == "initial") {
      cfg.initial = value;
    } else if (key == "initial_p") {
      cfg.initial_p = value;
    } else if (key == "initial_u") {
      cfg.initial_u = value;
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "snapshots") {
      cfg.snapshot_times = to_doubles(value);
    } else {
      throw ConfigError("unknown key: " + key);
    }
  }
  if (cfg.cells < 1) throw ConfigError("cells must be positive");
  if (!(cfg.L > 0.0)) throw ConfigError("L must be positive");
  if (!(cfg.t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
  return cfg;
}

SolverConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

Bc1D parse_bc(const std::string& spec) {
  Bc1D bc;
  if (spec == "nonreflecting") {
    bc.kind = Bc1D::nonreflecting;
    return bc;
  }
  if (spec == "reflection") {
    bc.kind = Bc1D::reflection;
    return bc;
  }
  const auto pos = spec.find(':');
  const std::string kind = pos == std::string::npos ? spec : spec.substr(0, pos);
  const std::string rest = pos == std::string::npos ? "" : spec.substr(pos + 1);
  if (kind == "pressure") {
    bc.kind = Bc1D::pressure;
    bc.data = parse_time_profile(rest);
    return bc;
  }
  if (kind == "inflow") {
    bc.kind = Bc1D::inflow;
    bc.data = parse_time_profile(rest);
    return bc;
  }
  throw ConfigError("unknown boundary condition: " + spec);
}

// Primitive-valued initial profile for the 1D gas problems.
std::function<Primitive(double)> parse_euler_initial(const std::string& spec, double L) {
  if (spec.empty()) throw ConfigError("euler1d needs an initial condition");
  const auto pos = spec.find(':');
  const std::string kind = pos == std::string::npos ? spec : spec.substr(0, pos);
  const std::string rest = pos == std::string::npos ? "" : spec.substr(pos + 1);
  const std::vector<double> p = to_doubles(rest);
  if (kind == "constant") {
    if (p.size() != 3) throw ConfigError("constant initial needs <rho>,<u>,<p>");
    return [p](double) { return Primitive{p[0], p[1], p[2]}; };
  }
  if (kind == "step") {
    if (p.size() != 7)
      throw ConfigError("step initial needs <x0>,<rhol>,<ul>,<pl>,<rhor>,<ur>,<pr>");
    return [p](double x) {
      return x < p[0] ? Primitive{p[1], p[2], p[3]} : Primitive{p[4], p[5], p[6]};
    };
  }
  if (kind == "sine") {
    if (p.size() != 5)
      throw ConfigError("sine initial needs <rho0>,<amp>,<periods>,<u>,<p>");
    return [p, L](double x) {
      return Primitive{p[0] + p[1] * std::sin(2.0 * M_PI * p[2] * x / L), p[3], p[4]};
    };
  }
  throw ConfigError("unknown initial condition: " + spec);
}

Primitive2 parse_euler2d_initial(const std::string& spec) {
  if (spec.empty()) throw ConfigError("euler2d needs an initial condition");
  const auto pos = spec.find(':');
  if (pos == std::string::npos || spec.substr(0, pos) != "constant")
    throw ConfigError("euler2d supports constant:<rho>,<ux>,<uy>,<p> initial data");
  const std::vector<double> p = to_doubles(spec.substr(pos + 1));
  if (p.size() != 4) throw ConfigError("constant initial needs <rho>,<ux>,<uy>,<p>");
  return {p[0], p[1], p[2], p[3]};
}

}  // namespace

Scenario make_scenario(const SolverConfig& cfg) {
  Scenario sc;
  const GasModel gas{cfg.gamma};

  switch (cfg.problem) {
    case ProblemKind::advection: {
      if (cfg.a == 0.0) throw ConfigError("advection needs a nonzero celerity");
      const Bc1D upstream = parse_bc(cfg.a > 0.0 ? cfg.bc_left : cfg.bc_right);
      const Bc1D downstream = parse_bc(cfg.a > 0.0 ? cfg.bc_right : cfg.bc_left);
      if (upstream.kind != Bc1D::inflow)
        throw ConfigError("advection upstream boundary must be an inflow profile");
      if (downstream.kind != Bc1D::nonreflecting)
        throw ConfigError("advection downstream boundary must be nonreflecting");
      const ScalarFn u0 = parse_space_profile(
          cfg.initial.empty() ? "constant:0" : cfg.initial, cfg.L);
      sc.problem = std::make_shared<AdvectionProblem>(cfg.a, cfg.L, cfg.cells,
                                                      cfg.order, cfg.limiter,
                                                      upstream.data);
      sc.state.values.resize(static_cast<std::size_t>(cfg.cells));
      const double dx = cfg.L / cfg.cells;
      for (int j = 0; j < cfg.cells; ++j)
        sc.state.values[static_cast<std::size_t>(j)] = u0((j + 0.5) * dx);
      break;
    }
    case ProblemKind::acoustics: {
      const AcousticsModel model{cfg.rho0, cfg.c0};
      const ScalarFn p0 = parse_space_profile(
          cfg.initial_p.empty() ? "constant:0" : cfg.initial_p, cfg.L);
      const ScalarFn v0 = parse_space_profile(
          cfg.initial_u.empty() ? "constant:0" : cfg.initial_u, cfg.L);
      const double dx = cfg.L / cfg.cells;
      const Vec2 init_last{p0((cfg.cells - 0.5) * dx), v0((cfg.cells - 0.5) * dx)};
      sc.problem = std::make_shared<AcousticsProblem>(
          model, cfg.L, cfg.cells, cfg.order, cfg.limiter, parse_bc(cfg.bc_left),
          parse_bc(cfg.bc_right), init_last);
      sc.state.values.resize(static_cast<std::size_t>(2 * cfg.cells));
      for (int j = 0; j < cfg.cells; ++j) {
        const double x = (j + 0.5) * dx;
        sc.state.values[static_cast<std::size_t>(2 * j)] = p0(x);
        sc.state.values[static_cast<std::size_t>(2 * j + 1)] = v0(x);
      }
      break;
    }
    case ProblemKind::euler1d: {
      const auto init = parse_euler_initial(cfg.initial, cfg.L);
      sc.problem = std::make_shared<Euler1DProblem>(gas, cfg.L, cfg.cells, cfg.order,
                                                    cfg.limiter, parse_bc(cfg.bc_left),
                                                    parse_bc(cfg.bc_right));
      sc.state.values.resize(static_cast<std::size_t>(3 * cfg.cells));
      const double dx = cfg.L / cfg.cells;
      for (int j = 0; j < cfg.cells; ++j) {
        const Vec3 w = conserved_from_primitive(init((j + 0.5) * dx), gas);
        for (int c = 0; c < 3; ++c)
          sc.state.values[static_cast<std::size_t>(3 * j + c)] = w[static_cast<std::size_t>(c)];
      }
      break;
    }
    case ProblemKind::euler2d: {
      if (cfg.mesh_path.empty()) throw ConfigError("euler2d needs a mesh file");
      UnstructuredMesh mesh = load_mesh(cfg.mesh_path);
      const Primitive2 init = parse_euler2d_initial(cfg.initial);
      const Vec4 w = conserved_from_primitive2(init, gas);
      sc.problem = std::make_shared<Euler2DProblem>(gas, std::move(mesh), cfg.order,
                                                    cfg.limiter_k);
      sc.state.values.resize(static_cast<std::size_t>(4 * sc.problem->n_cells()));
      for (int k = 0; k < sc.problem->n_cells(); ++k)
        for (int c = 0; c < 4; ++c)
          sc.state.values[static_cast<std::size_t>(4 * k + c)] = w[static_cast<std::size_t>(c)];
      break;
    }
  }
  sc.state.time = 0.0;
  return sc;
}

namespace {

void write_snapshot(const SolverConfig& cfg, const Problem& problem,
                    const DynamicState& state, std::vector<std::string>& files) {
  char name[512];
  std::snprintf(name, sizeof(name), "%s_t%.6f.csv", cfg.output.c_str(), state.time);
  std::ofstream out(name);
  if (!out) throw Error(std::string("cannot write snapshot: ") + name);
  char buf[256];
  const GasModel gas{cfg.gamma};

  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };

  const double dx = cfg.L / cfg.cells;
  switch (cfg.problem) {
    case ProblemKind::advection:
      out << "x,rho,u,p\n";
      for (int j = 0; j < cfg.cells; ++j)
        out << num((j + 0.5) * dx) << ',' << num(state.values[static_cast<std::size_t>(j)])
            << ",0,0\n";
      break;
    case ProblemKind::acoustics:
      out << "x,rho,u,p\n";
      for (int j = 0; j < cfg.cells; ++j) {
        const double p = state.values[static_cast<std::size_t>(2 * j)];
        const double u = state.values[static_cast<std::size_t>(2 * j + 1)];
        out << num((j + 0.5) * dx) << ',' << num(p / (cfg.c0 * cfg.c0)) << ',' << num(u)
            << ',' << num(p) << '\n';
      }
      break;
    case ProblemKind::euler1d:
      out << "x,rho,u,p\n";
      for (int j = 0; j < cfg.cells; ++j) {
        const Vec3 w{state.values[static_cast<std::size_t>(3 * j)],
                     state.values[static_cast<std::size_t>(3 * j + 1)],
                     state.values[static_cast<std::size_t>(3 * j + 2)]};
        const Primitive pr = primitive_from_conserved(w, gas);
        out << num((j + 0.5) * dx) << ',' << num(pr.rho) << ',' << num(pr.u) << ','
            << num(pr.p) << '\n';
      }
      break;
    case ProblemKind::euler2d: {
      out << "x,y,rho,u,v,p\n";
      const auto* p2 = dynamic_cast<const Euler2DProblem*>(&problem);
      const UnstructuredMesh& mesh = p2->mesh();
      for (int k = 0; k < mesh.n_cells(); ++k) {
        const Vec4 w{state.values[static_cast<std::size_t>(4 * k)],
                     state.values[static_cast<std::size_t>(4 * k + 1)],
                     state.values[static_cast<std::size_t>(4 * k + 2)],
                     state.values[static_cast<std::size_t>(4 * k + 3)]};
        const Primitive2 pr = primitive_from_conserved2(w, gas);
        const Vec2 c = mesh.cells[static_cast<std::size_t>(k)].centroid;
        out << num(c[0]) << ',' << num(c[1]) << ',' << num(pr.rho) << ',' << num(pr.ux)
            << ',' << num(pr.uy) << ',' << num(pr.p) << '\n';
      }
      break;
    }
  }
  files.push_back(name);
}

double state_scale(const Problem& problem, const DynamicState& state) {
  double s = 0.0;
  for (int k = 0; k < problem.n_cells(); ++k)
    for (int c = 0; c < problem.n_comps(); ++c)
      s = std::max(s, std::fabs(state.values[static_cast<std::size_t>(
                        k * problem.n_comps() + c)]) *
                          problem.cell_volume(k));
  return std::max(1.0, s);
}

}  // namespace

RunResult run(const SolverConfig& cfg, bool write_csv) {
  Scenario sc = make_scenario(cfg);
  RunResult result;
  result.problem = sc.problem;

  std::vector<double> targets = cfg.snapshot_times;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::remove_if(targets.begin(), targets.end(),
                               [&](double t) { return t < 0.0 || t > cfg.t_end; }),
                targets.end());
  if (targets.empty() || targets.back() != cfg.t_end) targets.push_back(cfg.t_end);

  std::size_t next_target = 0;
  if (write_csv && !targets.empty() && targets[0] == 0.0) {
    write_snapshot(cfg, *sc.problem, sc.state, result.files);
    ++next_target;
  } else if (!targets.empty() && targets[0] == 0.0) {
    ++next_target;
  }

  const double cflv = cfg.effective_cfl();
  StepBalance balance;
  while (sc.state.time < cfg.t_end) {
    double dt = cfg.fixed_dt > 0.0 ? cfg.fixed_dt : stable_dt(*sc.problem, sc.state, cflv);
    const double target = targets[next_target];
    bool landing = false;
    if (sc.state.time + dt >= target) {
      dt = target - sc.state.time;
      landing = true;
    }
    if (!(dt > 0.0)) throw Error("time step underflow");

    const DynamicState before = sc.state;
    sc.state = cfg.scheme == TimeScheme::heun
                   ? heun_step(*sc.problem, before, dt, &balance)
                   : euler_step(*sc.problem, before, dt, &balance);
    ++result.steps;

    // Global balance: cell totals change exactly by the boundary flux.
    const int nc = sc.problem->n_cells();
    const int m = sc.problem->n_comps();
    double defect = 0.0;
    for (int c = 0; c < m; ++c) {
      double sum = 0.0;
      for (int k = 0; k < nc; ++k)
        sum += sc.problem->cell_volume(k) *
               (sc.state.values[static_cast<std::size_t>(k * m + c)] -
                before.values[static_cast<std::size_t>(k * m + c)]);
      defect = std::max(defect,
                        std::fabs(sum + balance.boundary_time_integral[static_cast<std::size_t>(c)]));
    }
    result.max_balance_residual =
        std::max(result.max_balance_residual, defect / state_scale(*sc.problem, sc.state));

    if (landing) {
      sc.state.time = target;  // land exactly
      if (write_csv) write_snapshot(cfg, *sc.problem, sc.state, result.files);
      ++next_target;
      if (next_target >= targets.size()) break;
    }
  }

  result.final_state = sc.state;
  return result;
}

double exact_l1_error(const SolverConfig& cfg, const Scenario& sc) {
  const double dx = cfg.L / cfg.cells;
  const double t = sc.state.time;
  double err = 0.0;
  if (cfg.problem == ProblemKind::advection) {
    const ScalarFn u0 = parse_space_profile(
        cfg.initial.empty() ? "constant:0" : cfg.initial, cfg.L);
    const Bc1D upstream = parse_bc(cfg.a > 0.0 ? cfg.bc_left : cfg.bc_right);
    for (int j = 0; j < cfg.cells; ++j) {
      const double x = (j + 0.5) * dx;
      const double exact = advect_exact(u0, upstream.data, cfg.a, cfg.L, x, t);
      err += std::fabs(sc.state.values[static_cast<std::size_t>(j)] - exact) * dx;
    }
    return err;
  }
  if (cfg.problem == ProblemKind::acoustics) {
    const AcousticsModel model{cfg.rho0, cfg.c0};
    const ScalarFn p0 = parse_space_profile(
        cfg.initial_p.empty() ? "constant:0" : cfg.initial_p, cfg.L);
    const ScalarFn v0 = parse_space_profile(
        cfg.initial_u.empty() ? "constant:0" : cfg.initial_u, cfg.L);
    const Bc1D left = parse_bc(cfg.bc_left);
    if (left.kind != Bc1D::pressure)
      throw ConfigError("acoustics exact solution needs a pressure boundary");
    for (int j = 0; j < cfg.cells; ++j) {
      const double x = (j + 0.5) * dx;
      const auto [pe, ue] = acoustics_exact(model, p0, v0, left.data, cfg.L, x, t);
      err += (std::fabs(sc.state.values[static_cast<std::size_t>(2 * j)] - pe) +
              std::fabs(sc.state.values[static_cast<std::size_t>(2 * j + 1)] - ue)) *
             dx;
    }
    return err;
  }
  throw ConfigError("exact solution available for advection and acoustics only");
}

std::vector<ConvergenceRow> convergence(const SolverConfig& cfg,
                                        const std::vector<int>& grids) {
  std::vector<ConvergenceRow> rows;
  for (int J : grids) {
    SolverConfig c = cfg;
    c.cells = J;
    c.snapshot_times.clear();
    RunResult r = run(c, /*write_csv=*/false);
    Scenario sc;
    sc.problem = r.problem;
    sc.state = r.final_state;
    ConvergenceRow row;
    row.cells = J;
    row.dx = c.L / J;
    row.l1_error = exact_l1_error(c, sc);
    if (!rows.empty() && row.l1_error > 0.0 && rows.back().l1_error > 0.0)
      row.observed_order = std::log2(rows.back().l1_error / row.l1_error) /
                           std::log2(static_cast<double>(J) / rows.back().cells);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fvroe
