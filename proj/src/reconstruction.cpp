#include "fvroe/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace fvroe {

Limiter make_limiter(LimiterKind kind) {
  switch (kind) {
    case LimiterKind::minmod: return {kind, 0.5};
    case LimiterKind::sts: return {kind, 0.75};
    case LimiterKind::towards4: return {kind, 1.0};
    default: return {kind, 0.0};
  }
}

Limiter limiter_from_token(const std::string& token) {
  if (token == "none") return make_limiter(LimiterKind::none);
  if (token == "firstorder") return make_limiter(LimiterKind::firstorder);
  if (token == "minmod") return make_limiter(LimiterKind::minmod);
  if (token == "sts") return make_limiter(LimiterKind::sts);
  if (token == "towards4") return make_limiter(LimiterKind::towards4);
  throw ConfigError("unknown limiter: " + token);
}

double limiter_value(const Limiter& lim, double r) {
  switch (lim.kind) {
    case LimiterKind::none:
      return 0.5 * (1.0 + r);
    case LimiterKind::firstorder:
      return 0.0;
    default:
      return std::max(0.0, std::min(0.5 * (1.0 + r), 2.0 * lim.k * std::min(1.0, r)));
  }
}

std::pair<double, double> muscl_extrapolate(double z_mm, double z_m, double z_p,
                                            double z_pp, const Limiter& lim) {
  const double d = z_p - z_m;
  if (d == 0.0) return {z_m, z_p};
  const double zl = z_m + 0.5 * limiter_value(lim, (z_m - z_mm) / d) * d;
  const double zr = z_p - 0.5 * limiter_value(lim, (z_pp - z_p) / d) * d;
  return {zl, zr};
}

std::complex<double> amplification_factor(double xi, double sigma) {
  const double c = std::cos(xi);
  const double s = std::sin(xi);
  return {1.0 - 0.5 * sigma * (1.0 - c) * (1.0 - c), -0.5 * sigma * s * (3.0 - c)};
}

}  // namespace fvroe
