#ifndef FVROE_RECONSTRUCTION_HPP
#define FVROE_RECONSTRUCTION_HPP

#include <complex>
#include <string>
#include <utility>

#include "fvroe/core.hpp"

namespace fvroe {

enum class LimiterKind {
  none,        // phi(r) = (1+r)/2, the unstable centered slope
  firstorder,  // phi = 0
  minmod,      // k = 1/2
  sts,         // k = 3/4
  towards4,    // k = 1
};

struct Limiter {
  LimiterKind kind = LimiterKind::sts;
  /// Limiting strength for the k-family kinds; set by kind.
  double k = 0.75;
};

Limiter make_limiter(LimiterKind kind);
Limiter limiter_from_token(const std::string& token);  // none|firstorder|minmod|sts|towards4

/// Slope factor phi(r). The limited kinds follow the one-parameter family
/// phi_k(r) = max(0, min((1+r)/2, 2k min(1, r))), which is the uniform-grid
/// specialization of the cell-wise limiting coefficient; k = 3/4 reproduces
/// the piecewise STS curve.
double limiter_value(const Limiter& lim, double r);

/// Limited linear extrapolation of the four cell averages around an
/// interface: returns the states just left and just right of it. A zero
/// central difference leaves the cell values untouched.
std::pair<double, double> muscl_extrapolate(double z_mm, double z_m, double z_p,
                                            double z_pp, const Limiter& lim);

/// Amplification factor of the centered-slope scheme at nondimensional
/// wavenumber xi and Courant number sigma; |g| > 1 off the axis, which is
/// why the unlimited slope is unusable.
std::complex<double> amplification_factor(double xi, double sigma);

}  // namespace fvroe

#endif
