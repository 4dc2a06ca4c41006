#include "fvroe/verification.hpp"

#include <cmath>

#include "fvroe/boundary.hpp"
#include "fvroe/integrator.hpp"
#include "fvroe/reconstruction.hpp"
#include "fvroe/smallmat.hpp"

namespace fvroe {

Vec3 roe_flux_from_left(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  const RoeAverage avg = roe_average(wl, wr, gas);
  const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
  Vec3 f = physical_flux(wl, gas);
  for (int j = 0; j < 3; ++j)
    f += negative_part(wd.lambdas[j]) * wd.alphas[j] * wd.vectors[j];
  return f;
}

Vec3 roe_flux_from_right(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  const RoeAverage avg = roe_average(wl, wr, gas);
  const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
  Vec3 f = physical_flux(wr, gas);
  for (int j = 0; j < 3; ++j)
    f -= positive_part(wd.lambdas[j]) * wd.alphas[j] * wd.vectors[j];
  return f;
}

Vec3 roe_flux_half_sum(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  // |A| built explicitly as R |Lambda| R^-1 from the intermediate state.
  const RoeAverage avg = roe_average(wl, wr, gas);
  MatN r(3, 3), lam(3, 3);
  for (int j = 0; j < 3; ++j) {
    lam(j, j) = std::fabs(avg.lambdas[static_cast<std::size_t>(j)]);
    for (int k = 0; k < 3; ++k)
      r(k, j) = avg.right[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  const MatN abs_a = matmul(matmul(r, lam), inverse(r));
  VecN dw(3);
  for (int k = 0; k < 3; ++k)
    dw[k] = wr[static_cast<std::size_t>(k)] - wl[static_cast<std::size_t>(k)];
  const VecN visc = matvec(abs_a, dw);
  Vec3 f = 0.5 * (physical_flux(wl, gas) + physical_flux(wr, gas));
  for (int k = 0; k < 3; ++k) f[static_cast<std::size_t>(k)] -= 0.5 * visc[k];
  return f;
}

VecN linear_flux_from_left(const LinearSystem& sys, const VecN& wl, const VecN& wr) {
  const VecN pl = characteristic_decompose(sys, wl);
  const VecN pr = characteristic_decompose(sys, wr);
  VecN f = sys.apply(wl);
  for (int j = 0; j < sys.dim(); ++j) {
    const double w = negative_part(sys.lambda(j)) * (pr[j] - pl[j]);
    for (int k = 0; k < sys.dim(); ++k) f[k] += w * sys.right()(k, j);
  }
  return f;
}

VecN linear_flux_from_right(const LinearSystem& sys, const VecN& wl, const VecN& wr) {
  const VecN pl = characteristic_decompose(sys, wl);
  const VecN pr = characteristic_decompose(sys, wr);
  VecN f = sys.apply(wr);
  for (int j = 0; j < sys.dim(); ++j) {
    const double w = positive_part(sys.lambda(j)) * (pr[j] - pl[j]);
    for (int k = 0; k < sys.dim(); ++k) f[k] -= w * sys.right()(k, j);
  }
  return f;
}

Vec3 random_admissible_state(std::mt19937_64& rng, const GasModel& gas) {
  std::uniform_real_distribution<double> rho(0.1, 10.0);
  std::uniform_real_distribution<double> vel(-5.0, 5.0);
  std::uniform_real_distribution<double> prs(0.1, 10.0);
  return conserved_from_primitive({rho(rng), vel(rng), prs(rng)}, gas);
}

double rel_diff(const Vec3& a, const Vec3& b) {
  return norm_inf(a - b) / std::max({1.0, norm_inf(a), norm_inf(b)});
}

namespace {

CheckItem item(const std::string& name, double residual, double tol) {
  return {name, residual, tol, residual <= tol};
}

// A transonic expansion pair: the first wave speed changes sign between the
// left state and the first intermediate state.
bool find_transonic_pair(std::mt19937_64& rng, const GasModel& gas, Vec3& wl, Vec3& wr) {
  for (int it = 0; it < 100000; ++it) {
    const Vec3 a = random_admissible_state(rng, gas);
    const Vec3 b = random_admissible_state(rng, gas);
    try {
      const SonicData sd = sonic_indices(a, b, gas);
      if (!sd.fallback && sd.sonic.size() == 1 && sd.sonic[0] == 0) {
        wl = a;
        wr = b;
        return true;
      }
    } catch (const InadmissibleState&) {
    }
  }
  return false;
}

}  // namespace

std::vector<CheckItem> run_check_suite(std::uint64_t seed) {
  std::vector<CheckItem> out;
  const GasModel gas;
  std::mt19937_64 rng(seed);

  {  // eigenstructure: dF r_j = lambda_j r_j, ordering, enthalpy identity
    double worst = 0.0, worst_H = 0.0;
    bool ordered = true;
    for (int it = 0; it < 1000; ++it) {
      const Vec3 w = random_admissible_state(rng, gas);
      const Primitive pr = primitive_from_conserved(w, gas);
      const double c = sound_speed(pr, gas);
      const double H = total_enthalpy(w, gas);
      const Mat3 df = flux_jacobian(w, gas);
      const EigenStructure es = eigenstructure(pr.u, c, H);
      for (int j = 0; j < 3; ++j) {
        const Vec3 r = matvec3(df, es.right[static_cast<std::size_t>(j)]) -
                       es.lambdas[static_cast<std::size_t>(j)] * es.right[static_cast<std::size_t>(j)];
        worst = std::max(worst, norm_inf(r) / norm_inf3(df));
      }
      ordered = ordered && es.lambdas[0] < es.lambdas[1] && es.lambdas[1] < es.lambdas[2];
      worst_H = std::max(worst_H,
                         std::fabs(H - 0.5 * pr.u * pr.u - c * c / (gas.gamma - 1.0)) /
                             std::max(1.0, std::fabs(H)));
    }
    out.push_back(item("eigenstructure dF r = lambda r", worst, 1e-12));
    out.push_back(item("eigenvalue ordering strict", ordered ? 0.0 : 1.0, 0.5));
    out.push_back(item("enthalpy identity H - u^2/2 - c^2/(g-1) = 0", worst_H, 1e-13));
  }

  {  // Jacobian vs central differences
    double worst = 0.0;
    for (int it = 0; it < 200; ++it) {
      const Vec3 w = random_admissible_state(rng, gas);
      const Mat3 df = flux_jacobian(w, gas);
      for (int j = 0; j < 3; ++j) {
        const double h = 1e-7 * std::max(1.0, std::fabs(w[static_cast<std::size_t>(j)]));
        Vec3 wp = w, wm = w;
        wp[static_cast<std::size_t>(j)] += h;
        wm[static_cast<std::size_t>(j)] -= h;
        const Vec3 col = (1.0 / (2.0 * h)) * (physical_flux(wp, gas) - physical_flux(wm, gas));
        for (int i = 0; i < 3; ++i)
          worst = std::max(worst, std::fabs(col[static_cast<std::size_t>(i)] -
                                            df[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      }
    }
    out.push_back(item("flux_jacobian matches finite differences", worst, 1e-6));
  }

  {  // Roe identity and wave reconstruction
    double worst = 0.0, worst_rec = 0.0, worst_sum = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const Vec3 wl = random_admissible_state(rng, gas);
      const Vec3 wr = random_admissible_state(rng, gas);
      const Mat3 a = roe_matrix(wl, wr, gas);
      const Vec3 lhs = physical_flux(wr, gas) - physical_flux(wl, gas);
      const Vec3 rhs = matvec3(a, wr - wl);
      const double scale = std::max({1.0, norm_inf(physical_flux(wl, gas)),
                                     norm_inf(physical_flux(wr, gas))});
      worst = std::max(worst, norm_inf(lhs - rhs) / scale);

      const RoeAverage avg = roe_average(wl, wr, gas);
      const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
      Vec3 rec{0.0, 0.0, 0.0};
      for (int j = 0; j < 3; ++j) rec += wd.alphas[j] * wd.vectors[j];
      worst_rec = std::max(worst_rec, rel_diff(rec, wr - wl));
      worst_sum = std::max(
          worst_sum,
          std::fabs(wd.alphas[0] + wd.alphas[1] + wd.alphas[2] - (wr[0] - wl[0])) /
              std::max(1.0, std::fabs(wr[0] - wl[0])));
    }
    out.push_back(item("Roe identity F(Wr)-F(Wl) = A (Wr-Wl)", worst, 1e-11));
    out.push_back(item("wave reconstruction sum alpha_j r_j", worst_rec, 1e-12));
    out.push_back(item("alpha sum equals density jump", worst_sum, 1e-12));
  }

  {  // flux-form equivalences (nonlinear)
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const Vec3 wl = random_admissible_state(rng, gas);
      const Vec3 wr = random_admissible_state(rng, gas);
      const Vec3 f0 = roe_flux(wl, wr, gas);
      worst = std::max({worst, rel_diff(f0, roe_flux_from_left(wl, wr, gas)),
                        rel_diff(f0, roe_flux_from_right(wl, wr, gas)),
                        rel_diff(f0, roe_flux_half_sum(wl, wr, gas))});
    }
    out.push_back(item("Roe flux forms agree", worst, 1e-12));
  }

  {  // flux-form equivalences (linear, random diagonalizable 3x3)
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    std::uniform_real_distribution<double> speed(-3.0, 3.0);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      MatN r(3, 3);
      do {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
      } while (cond1(r) > 1e3);
      VecN lam(3);
      for (int j = 0; j < 3; ++j) lam[j] = speed(rng);
      const LinearSystem sys(lam, r);
      VecN wl(3), wr(3);
      for (int j = 0; j < 3; ++j) {
        wl[j] = entry(rng);
        wr[j] = entry(rng);
      }
      const VecN f0 = linear_upwind_flux(sys, wl, wr);
      const VecN f1 = linear_flux_from_left(sys, wl, wr);
      const VecN f2 = linear_flux_from_right(sys, wl, wr);
      const double scale = std::max({1.0, norm_inf(f0), norm_inf(f1), norm_inf(f2)});
      worst = std::max({worst, norm_inf(f0 - f1) / scale, norm_inf(f0 - f2) / scale});
    }
    out.push_back(item("linear upwind flux forms agree", worst, 1e-12));
  }

  {  // consistency
    double worst = 0.0;
    for (int it = 0; it < 200; ++it) {
      const Vec3 w = random_admissible_state(rng, gas);
      const Vec3 f = physical_flux(w, gas);
      worst = std::max({worst, rel_diff(roe_flux(w, w, gas), f),
                        rel_diff(entropy_fixed_flux(w, w, gas), f)});
    }
    out.push_back(item("consistency Phi(W,W) = F(W)", worst, 0.0));
  }

  {  // entropy correction
    double worst_identity = 0.0;
    for (int it = 0; it < 500; ++it) {
      const Vec3 wl = random_admissible_state(rng, gas);
      const Vec3 wr = random_admissible_state(rng, gas);
      const SonicData sd = sonic_indices(wl, wr, gas);
      if (!sd.sonic.empty() || sd.fallback) continue;
      const Vec3 a = roe_flux(wl, wr, gas);
      const Vec3 b = entropy_fixed_flux(wl, wr, gas);
      for (int c = 0; c < 3; ++c)
        if (a[static_cast<std::size_t>(c)] != b[static_cast<std::size_t>(c)])
          worst_identity = 1.0;
    }
    out.push_back(item("no sonic index: corrected flux identical", worst_identity, 0.0));

    Vec3 wl, wr;
    double hermite = 1.0, argmin_err = 1.0, coeff = 1.0;
    if (find_transonic_pair(rng, gas, wl, wr)) {
      const RoeAverage avg = roe_average(wl, wr, gas);
      const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
      const SonicData sd = sonic_indices(wl, wr, gas);
      const int j = sd.sonic[0];
      const Primitive p0 = primitive_from_conserved(sd.states[static_cast<std::size_t>(j)], gas);
      const Primitive p1 = primitive_from_conserved(sd.states[static_cast<std::size_t>(j + 1)], gas);
      const double lp = p0.u - sound_speed(p0, gas);
      const double ln = p1.u - sound_speed(p1, gas);
      const double alpha = wd.alphas[j];
      const double lam = wd.lambdas[j];
      hermite = std::max(
          {std::fabs(sonic_cubic_eval(lam, lp, ln, alpha, 0.0)),
           std::fabs(sonic_cubic_eval(lam, lp, ln, alpha, alpha) - lam * alpha) /
               std::max(1.0, std::fabs(lam * alpha))});
      const double xi = sonic_cubic_argmin(lam, lp, ln, alpha);
      double best = 0.0, best_val = 1e300;
      for (int i = 1; i < 200000; ++i) {
        const double x = alpha * i / 200000.0;
        const double v = sonic_cubic_eval(lam, lp, ln, alpha, x) / alpha;
        if (v < best_val) {
          best_val = v;
          best = x;
        }
      }
      argmin_err = std::fabs(xi - best) / std::fabs(alpha);
      const double nu = sonic_viscosity(lam, lp, ln, alpha);
      coeff = nu <= 0.0 ? 0.0 : nu;
    }
    out.push_back(item("Hermite cubic endpoint conditions", hermite, 1e-12));
    out.push_back(item("cubic argmin matches dense scan", argmin_err, 1e-4));
    out.push_back(item("sonic correction coefficient <= 0", coeff, 0.0));
  }

  {  // pressure boundary
    std::uniform_real_distribution<double> prs(0.1, 10.0);
    double worst_p = 0.0, worst_a = 0.0, worst_same = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const Vec3 wr = random_admissible_state(rng, gas);
      const double Pi = prs(rng);
      const Vec3 wl = pressure_boundary_state(Pi, wr, gas);
      const Primitive pl = primitive_from_conserved(wl, gas);
      worst_p = std::max(worst_p, std::fabs(pl.p - Pi) / Pi);
      const RoeAverage avg = roe_average(wl, wr, gas);
      const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
      const double bound = 1e-10 * (std::fabs(wd.alphas[2]) + 1.0);
      worst_a = std::max({worst_a, std::fabs(wd.alphas[0]) - bound,
                          std::fabs(wd.alphas[1]) - bound});
      const Primitive pr = primitive_from_conserved(wr, gas);
      worst_same = std::max(worst_same,
                            norm_inf(pressure_boundary_state(pr.p, wr, gas) - wr));
    }
    out.push_back(item("boundary state pressure equals datum", worst_p, 1e-13));
    out.push_back(item("boundary pair is a pure 3-wave", std::max(0.0, worst_a), 0.0));
    out.push_back(item("datum = interior pressure gives Wl = Wr", worst_same, 0.0));
  }

  {  // limiter axioms
    const Limiter lims[] = {make_limiter(LimiterKind::minmod),
                            make_limiter(LimiterKind::sts),
                            make_limiter(LimiterKind::towards4)};
    double worst = 0.0;
    std::uniform_real_distribution<double> rdist(0.01, 10.0);
    for (const Limiter& lim : lims) {
      worst = std::max(worst, std::fabs(limiter_value(lim, 1.0) - 1.0));
      for (double r : {-5.0, -1.0, -1e-9, 0.0})
        worst = std::max(worst, std::fabs(limiter_value(lim, r)));
      for (int it = 0; it < 2000; ++it) {
        const double r = rdist(rng);
        worst = std::max(worst, std::fabs(limiter_value(lim, r) -
                                          r * limiter_value(lim, 1.0 / r)));
        if (limiter_value(lim, r) < 0.0) worst = std::max(worst, 1.0);
      }
    }
    out.push_back(item("limiter axioms (zero, unit, symmetry)", worst, 1e-13));
  }

  {  // instability of the unlimited slope at sampled wavenumbers
    double worst = 1.0;
    for (double xi : {0.001, 0.01, 0.1, 0.5})
      for (double sigma : {0.1, 0.5, 0.9})
        worst = std::min(worst, std::abs(amplification_factor(xi, sigma)));
    out.push_back(item("unlimited slope amplification |g| > 1",
                       worst > 1.0 ? 0.0 : 1.0, 0.0));
  }

  {  // conservation on a short nonlinear run
    Euler1DProblem prob(gas, 1.0, 40, 2, make_limiter(LimiterKind::sts),
                        Bc1D{Bc1D::pressure, [](double t) { return 1.0 + 0.05 * std::sin(20.0 * t); }},
                        Bc1D{Bc1D::nonreflecting, {}});
    DynamicState st;
    st.values.resize(3 * 40);
    for (int k = 0; k < 40; ++k) {
      const Vec3 w = conserved_from_primitive({1.0, 0.1, 1.0}, gas);
      for (int c = 0; c < 3; ++c) st.values[static_cast<std::size_t>(3 * k + c)] = w[static_cast<std::size_t>(c)];
    }
    double worst = 0.0;
    StepBalance bal;
    for (int n = 0; n < 50; ++n) {
      const double dt = stable_dt(prob, st, 0.45);
      const DynamicState next = heun_step(prob, st, dt, &bal);
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int k = 0; k < 40; ++k)
          sum += prob.cell_volume(k) *
                 (next.values[static_cast<std::size_t>(3 * k + c)] -
                  st.values[static_cast<std::size_t>(3 * k + c)]);
        worst = std::max(worst, std::fabs(sum + bal.boundary_time_integral[static_cast<std::size_t>(c)]));
      }
      st = next;
    }
    out.push_back(item("discrete conservation (Heun, 50 steps)", worst, 1e-12));
  }

  return out;
}

}  // namespace fvroe
