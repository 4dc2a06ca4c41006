#include "fvroe/roe.hpp"

#include <atomic>
#include <cmath>

namespace fvroe {

namespace {

std::atomic<std::uint64_t> g_fallbacks{0};

bool admissible(const Vec3& w, const GasModel& gas) {
  if (!(w[0] > rho_floor)) return false;
  const double u = w[1] / w[0];
  const double p = (gas.gamma - 1.0) * (w[2] - 0.5 * w[0] * u * u);
  return p > pressure_floor;
}

double lambda_of_state(const Vec3& w, int wave, const GasModel& gas) {
  const Primitive pr = primitive_from_conserved(w, gas);
  const double c = sound_speed(pr, gas);
  switch (wave) {
    case 0: return pr.u - c;
    case 1: return pr.u;
    default: return pr.u + c;
  }
}

}  // namespace

RoeAverage roe_average(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  const Primitive pl = primitive_from_conserved(wl, gas);
  const Primitive pr = primitive_from_conserved(wr, gas);
  const double sl = std::sqrt(pl.rho);
  const double sr = std::sqrt(pr.rho);
  RoeAverage avg;
  avg.rho_star = sl * sr;
  avg.u_star = (sl * pl.u + sr * pr.u) / (sl + sr);
  const double Hl = total_enthalpy(wl, gas);
  const double Hr = total_enthalpy(wr, gas);
  avg.H_star = (sl * Hl + sr * Hr) / (sl + sr);
  const double rad = (gas.gamma - 1.0) * (avg.H_star - 0.5 * avg.u_star * avg.u_star);
  if (!(rad > 0.0))
    throw InadmissibleState("intermediate state has imaginary sound speed");
  avg.c_star = std::sqrt(rad);
  const EigenStructure es = eigenstructure(avg.u_star, avg.c_star, avg.H_star);
  avg.lambdas = es.lambdas;
  avg.right = es.right;
  return avg;
}

Mat3 roe_matrix(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  const RoeAverage avg = roe_average(wl, wr, gas);
  return flux_jacobian_uH(avg.u_star, avg.H_star, gas);
}

WaveDecomposition wave_strengths(const Vec3& wl, const Vec3& wr,
                                 const RoeAverage& avg, const GasModel& gas) {
  const Primitive pl = primitive_from_conserved(wl, gas);
  const Primitive pr = primitive_from_conserved(wr, gas);
  const double z = avg.rho_star * avg.c_star;  // impedance of the intermediate state
  const double c2 = avg.c_star * avg.c_star;
  WaveDecomposition wd;
  wd.alphas[0] = ((pr.p - z * pr.u) - (pl.p - z * pl.u)) / (2.0 * c2);
  wd.alphas[1] = -((pr.p - c2 * pr.rho) - (pl.p - c2 * pl.rho)) / c2;
  wd.alphas[2] = ((pr.p + z * pr.u) - (pl.p + z * pl.u)) / (2.0 * c2);
  wd.lambdas = avg.lambdas;
  wd.vectors = avg.right;
  return wd;
}

Vec3 roe_flux(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  const RoeAverage avg = roe_average(wl, wr, gas);
  const double u = avg.u_star;
  const double c = avg.c_star;
  if (u - c >= 0.0) return physical_flux(wl, gas);
  if (u + c <= 0.0) return physical_flux(wr, gas);
  const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
  if (u > 0.0)
    return physical_flux(wl, gas) + (u - c) * wd.alphas[0] * wd.vectors[0];
  if (u < 0.0)
    return physical_flux(wr, gas) - (u + c) * wd.alphas[2] * wd.vectors[2];
  // u* = 0 exactly: the half-sum form is single-valued there.
  Vec3 f = 0.5 * (physical_flux(wl, gas) + physical_flux(wr, gas));
  for (int j = 0; j < 3; ++j)
    f -= 0.5 * std::fabs(wd.lambdas[j]) * wd.alphas[j] * wd.vectors[j];
  return f;
}

SonicData sonic_indices(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  const RoeAverage avg = roe_average(wl, wr, gas);
  const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
  SonicData sd;
  sd.states[0] = wl;
  sd.states[1] = wl + wd.alphas[0] * wd.vectors[0];
  sd.states[2] = wr - wd.alphas[2] * wd.vectors[2];
  sd.states[3] = wr;
  if (!admissible(sd.states[1], gas) || !admissible(sd.states[2], gas)) {
    sd.fallback = true;
    return sd;
  }
  for (int k = 0; k < 3; ++k) {
    if (wd.alphas[k] == 0.0) continue;  // zero-strength wave carries no correction
    const double lam_prev = lambda_of_state(sd.states[static_cast<std::size_t>(k)], k, gas);
    const double lam_next = lambda_of_state(sd.states[static_cast<std::size_t>(k + 1)], k, gas);
    if (lam_prev < 0.0 && 0.0 < lam_next) sd.sonic.push_back(k);
  }
  return sd;
}

double sonic_cubic_eval(double lam_star, double lam_prev, double lam_next,
                        double alpha, double xi) {
  const double a3 = (lam_next + lam_prev - 2.0 * lam_star) / (alpha * alpha);
  const double a2 = (3.0 * lam_star - 2.0 * lam_prev - lam_next) / alpha;
  return ((a3 * xi + a2) * xi + lam_prev) * xi;
}

double sonic_cubic_argmin(double lam_star, double lam_prev, double lam_next,
                          double alpha) {
  // Critical points of the cubic: 3 a3 xi^2 + 2 a2 xi + lam_prev = 0. The
  // derivative has opposite signs at the endpoints, so exactly one critical
  // point sits strictly between 0 and alpha.
  const double a3 = (lam_next + lam_prev - 2.0 * lam_star) / (alpha * alpha);
  const double a2 = (3.0 * lam_star - 2.0 * lam_prev - lam_next) / alpha;
  const double lo = std::min(0.0, alpha);
  const double hi = std::max(0.0, alpha);
  const double qa = 3.0 * a3, qb = 2.0 * a2, qc = lam_prev;
  if (qa != 0.0) {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      const double q = -0.5 * (qb + (qb >= 0.0 ? s : -s));
      const double r1 = q / qa;
      const double r2 = (q != 0.0) ? qc / q : r1;
      if (r1 > lo && r1 < hi) return r1;
      if (r2 > lo && r2 < hi) return r2;
    }
  } else if (qb != 0.0) {
    const double r = -qc / qb;
    if (r > lo && r < hi) return r;
  }
  // Bisection on the derivative as a fallback for degenerate coefficients.
  auto dp = [&](double xi) { return (qa * xi + qb) * xi + qc; };
  double x0 = 0.0, x1 = alpha;
  if (dp(x0) > 0.0) std::swap(x0, x1);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (x0 + x1);
    (dp(mid) <= 0.0 ? x0 : x1) = mid;
  }
  return 0.5 * (x0 + x1);
}

double sonic_viscosity(double lam_star, double lam_prev, double lam_next,
                       double alpha) {
  if (alpha == 0.0 || !(lam_prev < 0.0 && 0.0 < lam_next)) return 0.0;
  const double xi = sonic_cubic_argmin(lam_star, lam_prev, lam_next, alpha);
  const double q = sonic_cubic_eval(lam_star, lam_prev, lam_next, alpha, xi) / alpha;
  return std::max(q, q - lam_star);
}

Vec3 entropy_fixed_flux(const Vec3& wl, const Vec3& wr, const GasModel& gas) {
  Vec3 f = roe_flux(wl, wr, gas);
  const SonicData sd = sonic_indices(wl, wr, gas);
  if (sd.fallback) {
    g_fallbacks.fetch_add(1, std::memory_order_relaxed);
    return f;
  }
  if (sd.sonic.empty()) return f;
  const RoeAverage avg = roe_average(wl, wr, gas);
  const WaveDecomposition wd = wave_strengths(wl, wr, avg, gas);
  for (int k : sd.sonic) {
    const double lam_prev = lambda_of_state(sd.states[static_cast<std::size_t>(k)], k, gas);
    const double lam_next = lambda_of_state(sd.states[static_cast<std::size_t>(k + 1)], k, gas);
    const double nu = sonic_viscosity(wd.lambdas[k], lam_prev, lam_next, wd.alphas[k]);
    f += nu * wd.alphas[k] * wd.vectors[k];
  }
  return f;
}

std::uint64_t entropy_fix_fallback_count() { return g_fallbacks.load(); }
void reset_entropy_fix_fallback_count() { g_fallbacks.store(0); }

namespace {

struct Rotated {
  double rho, un, ut, p, H, c;
};

Rotated rotate_state(const Vec4& w, const Vec2& n, const GasModel& gas) {
  const Primitive2 pr = primitive_from_conserved2(w, gas);
  Rotated r;
  r.rho = pr.rho;
  r.un = pr.ux * n[0] + pr.uy * n[1];
  r.ut = -pr.ux * n[1] + pr.uy * n[0];
  r.p = pr.p;
  r.H = total_enthalpy2(w, gas);
  r.c = sound_speed2(pr, gas);
  return r;
}

Vec4 local_flux(const Rotated& s, const GasModel& gas) {
  const double e = s.p / (gas.gamma - 1.0) + 0.5 * s.rho * (s.un * s.un + s.ut * s.ut);
  return {s.rho * s.un, s.rho * s.un * s.un + s.p, s.rho * s.un * s.ut,
          s.un * (e + s.p)};
}

bool admissible_local(const Vec4& w, const GasModel& gas) {
  if (!(w[0] > rho_floor)) return false;
  const double p =
      (gas.gamma - 1.0) * (w[3] - 0.5 * (w[1] * w[1] + w[2] * w[2]) / w[0]);
  return p > pressure_floor;
}

double local_lambda(const Vec4& w, int family, const GasModel& gas) {
  // family 0: un - c, family 3: un + c.
  const double un = w[1] / w[0];
  const double p =
      (gas.gamma - 1.0) * (w[3] - 0.5 * (w[1] * w[1] + w[2] * w[2]) / w[0]);
  const double c = std::sqrt(gas.gamma * p / w[0]);
  return family == 0 ? un - c : un + c;
}

}  // namespace

Vec4 euler_face_flux(const Vec4& wl, const Vec4& wr, const Vec2& n,
                     const GasModel& gas) {
  const Rotated l = rotate_state(wl, n, gas);
  const Rotated r = rotate_state(wr, n, gas);
  const double sl = std::sqrt(l.rho), sr = std::sqrt(r.rho);
  const double rho_s = sl * sr;
  const double un_s = (sl * l.un + sr * r.un) / (sl + sr);
  const double ut_s = (sl * l.ut + sr * r.ut) / (sl + sr);
  const double H_s = (sl * l.H + sr * r.H) / (sl + sr);
  const double rad =
      (gas.gamma - 1.0) * (H_s - 0.5 * (un_s * un_s + ut_s * ut_s));
  if (!(rad > 0.0))
    throw InadmissibleState("intermediate state has imaginary sound speed");
  const double c_s = std::sqrt(rad);
  const double c2 = c_s * c_s;
  const double z = rho_s * c_s;

  const double dp = r.p - l.p;
  const double dun = r.un - l.un;
  const double dut = r.ut - l.ut;
  const double drho = r.rho - l.rho;

  const Vec4 lam{un_s - c_s, un_s, un_s, un_s + c_s};
  const std::array<Vec4, 4> rv{
      Vec4{1.0, un_s - c_s, ut_s, H_s - un_s * c_s},
      Vec4{1.0, un_s, ut_s, 0.5 * (un_s * un_s + ut_s * ut_s)},
      Vec4{0.0, 0.0, 1.0, ut_s},
      Vec4{1.0, un_s + c_s, ut_s, H_s + un_s * c_s}};
  const Vec4 alpha{(dp - z * dun) / (2.0 * c2), drho - dp / c2, rho_s * dut,
                   (dp + z * dun) / (2.0 * c2)};

  // Supersonic intermediate state: the one-sided physical flux, exactly.
  if (un_s - c_s >= 0.0) return physical_flux2(wl, n, gas);
  if (un_s + c_s <= 0.0) return physical_flux2(wr, n, gas);

  Vec4 f;
  {
    f = 0.5 * (local_flux(l, gas) + local_flux(r, gas));
    for (int j = 0; j < 4; ++j)
      f -= 0.5 * std::fabs(lam[j]) * alpha[j] * rv[j];

    // Entropy correction on the two acoustic families.
    const Vec4 wloc_l{l.rho, l.rho * l.un, l.rho * l.ut,
                      l.p / (gas.gamma - 1.0) + 0.5 * l.rho * (l.un * l.un + l.ut * l.ut)};
    const Vec4 wloc_r{r.rho, r.rho * r.un, r.rho * r.ut,
                      r.p / (gas.gamma - 1.0) + 0.5 * r.rho * (r.un * r.un + r.ut * r.ut)};
    const Vec4 w1 = wloc_l + alpha[0] * rv[0];
    const Vec4 w3 = wloc_r - alpha[3] * rv[3];
    if (admissible_local(w1, gas) && admissible_local(w3, gas)) {
      if (alpha[0] != 0.0) {
        const double lp = local_lambda(wloc_l, 0, gas);
        const double ln = local_lambda(w1, 0, gas);
        f += sonic_viscosity(lam[0], lp, ln, alpha[0]) * alpha[0] * rv[0];
      }
      if (alpha[3] != 0.0) {
        const double lp = local_lambda(w3, 3, gas);
        const double ln = local_lambda(wloc_r, 3, gas);
        f += sonic_viscosity(lam[3], lp, ln, alpha[3]) * alpha[3] * rv[3];
      }
    } else {
      g_fallbacks.fetch_add(1, std::memory_order_relaxed);
    }
  }

  // Rotate the momentum flux back to the global frame.
  return {f[0], f[1] * n[0] - f[2] * n[1], f[1] * n[1] + f[2] * n[0], f[3]};
}

}  // namespace fvroe
