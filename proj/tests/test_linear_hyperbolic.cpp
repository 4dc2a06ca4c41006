#include <cmath>
#include <random>

#include "doctest.h"
#include "fvroe/linear_hyperbolic.hpp"
#include "fvroe/verification.hpp"

using namespace fvroe;

TEST_CASE("advect_exact: initial datum region") {
  const auto u0 = [](double x) { return x * x; };
  const auto bc = [](double) { return -1.0; };
  CHECK(advect_exact(u0, bc, 2.0, 10.0, 3.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("advect_exact: boundary datum region") {
  const auto u0 = [](double) { return 0.0; };
  const auto bc = [](double t) { return t; };
  CHECK(advect_exact(u0, bc, 1.0, 10.0, 0.5, 2.0) == doctest::Approx(1.5));
}

TEST_CASE("advect_exact: sinusoidal inflow over zero initial data") {
  const double omega = 3.0, a = 2.0, T = 1.5, L = 10.0;
  const auto u0 = [](double) { return 0.0; };
  const auto bc = [=](double t) { return std::sin(omega * t); };
  for (double x = 0.1; x < L; x += 0.37) {
    const double v = advect_exact(u0, bc, a, L, x, T);
    if (x > a * T)
      CHECK(v == 0.0);
    else
      CHECK(v == doctest::Approx(std::sin(omega * (T - x / a))));
  }
}

TEST_CASE("advect_exact: negative celerity uses the right-end datum") {
  const auto u0 = [](double x) { return x; };
  const auto bc = [](double t) { return 100.0 + t; };
  const double a = -1.0, L = 1.0;
  // foot inside the domain
  CHECK(advect_exact(u0, bc, a, L, 0.5, 0.2) == doctest::Approx(0.7));
  // foot beyond x = L: datum advected in from the right end
  CHECK(advect_exact(u0, bc, a, L, 0.9, 0.5) ==
        doctest::Approx(100.0 + (0.5 + (L - 0.9) / a)));
}

TEST_CASE("upwind scalar flux picks the upstream value") {
  CHECK(upwind_flux_scalar(1.0, 2.0, 5.0) == doctest::Approx(2.0));
  CHECK(upwind_flux_scalar(-1.0, 2.0, 5.0) == doctest::Approx(-5.0));
  CHECK(upwind_flux_scalar(0.0, 2.0, 5.0) == 0.0);
  for (double a : {-2.0, 0.0, 3.0})
    CHECK(upwind_flux_scalar(a, 7.0, 7.0) == doctest::Approx(7.0 * a));
}

TEST_CASE("characteristic decomposition: identity basis") {
  VecN lam(3);
  lam[0] = -1.0; lam[1] = 0.5; lam[2] = 2.0;
  const LinearSystem sys(lam, MatN::identity(3));
  VecN w(3);
  w[0] = 1.0; w[1] = 2.0; w[2] = 3.0;
  const VecN phi = characteristic_decompose(sys, w);
  for (int i = 0; i < 3; ++i) CHECK(phi[i] == doctest::Approx(w[i]));
}

TEST_CASE("acoustics characteristic variables are p -/+ impedance u") {
  const AcousticsModel model{1.2, 2.5};
  const LinearSystem sys = model.system();
  VecN w(2);
  w[0] = 0.7;   // p
  w[1] = -0.3;  // u
  const VecN phi = characteristic_decompose(sys, w);
  const double z = model.impedance();
  CHECK(phi[0] == doctest::Approx(w[0] - z * w[1]));  // speed -c0
  CHECK(phi[1] == doctest::Approx(w[0] + z * w[1]));  // speed +c0
}

TEST_CASE("decompose then reconstruct is the identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  double worst = 0.0;
  for (int it = 0; it < 500; ++it) {
    MatN r(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
    } while (cond1(r) > 1e3);
    VecN lam(3);
    for (int j = 0; j < 3; ++j) lam[j] = entry(rng);
    const LinearSystem sys(lam, r);
    VecN w(3);
    for (int j = 0; j < 3; ++j) w[j] = entry(rng);
    const VecN back = matvec(sys.right(), characteristic_decompose(sys, w));
    worst = std::max(worst, norm_inf(back - w) / std::max(1.0, norm_inf(w)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("singular eigenbasis is rejected") {
  VecN lam(2);
  lam[0] = 1.0; lam[1] = 2.0;
  MatN r(2, 2);
  r(0, 0) = 1.0; r(0, 1) = 1.0;
  r(1, 0) = 1.0; r(1, 1) = 1.0 + 1e-15;
  CHECK_THROWS_AS(LinearSystem(lam, r), SingularEigenbasis);
}

TEST_CASE("matrix_abs: diagonal case and positive spectrum") {
  VecN lam(2);
  lam[0] = -1.0; lam[1] = 2.0;
  const LinearSystem sys(lam, MatN::identity(2));
  const MatN a = matrix_abs(sys);
  CHECK(a(0, 0) == doctest::Approx(1.0));
  CHECK(a(1, 1) == doctest::Approx(2.0));
  CHECK(a(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("matrix_abs equals A when the spectrum is nonnegative") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.0, 3.0);
  MatN r(3, 3);
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
  } while (cond1(r) > 1e3);
  VecN lam(3);
  for (int j = 0; j < 3; ++j) lam[j] = pos(rng);
  const LinearSystem sys(lam, r);
  const MatN a = sys.matrix();
  const MatN aa = matrix_abs(sys);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(aa(i, j) == doctest::Approx(a(i, j)));
}

TEST_CASE("matrix_abs jump expansion matches the eigen sum") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  double worst = 0.0;
  for (int it = 0; it < 300; ++it) {
    MatN r(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
    } while (cond1(r) > 1e3);
    VecN lam(3);
    for (int j = 0; j < 3; ++j) lam[j] = entry(rng);
    const LinearSystem sys(lam, r);
    VecN wl(3), wr(3);
    for (int j = 0; j < 3; ++j) {
      wl[j] = entry(rng);
      wr[j] = entry(rng);
    }
    const VecN lhs = matvec(matrix_abs(sys), wr - wl);
    const VecN dphi = characteristic_decompose(sys, wr - wl);
    VecN rhs(3);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        rhs[k] += std::fabs(sys.lambda(j)) * dphi[j] * sys.right()(k, j);
    worst = std::max(worst, norm_inf(lhs - rhs) / std::max(1.0, norm_inf(lhs)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("matrix_abs eigenvalues are nonnegative") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int it = 0; it < 100; ++it) {
    MatN r(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
    } while (cond1(r) > 1e3);
    VecN lam(3);
    for (int j = 0; j < 3; ++j) lam[j] = entry(rng);
    const LinearSystem sys(lam, r);
    const MatN aa = matrix_abs(sys);
    // |A| r_j = |lambda_j| r_j: same eigenvectors, absolute eigenvalues
    for (int j = 0; j < 3; ++j) {
      const VecN rj = sys.right_vector(j);
      const VecN res = matvec(aa, rj) - std::fabs(sys.lambda(j)) * rj;
      CHECK(norm_inf(res) <= 1e-10 * std::max(1.0, norm_inf(rj)));
    }
  }
}

TEST_CASE("linear upwind flux: decoupled two-system") {
  VecN lam(2);
  lam[0] = 1.5;   // celerity a > 0 for the first unknown
  lam[1] = -2.5;  // celerity -b < 0 for the second
  const LinearSystem sys(lam, MatN::identity(2));
  VecN wl(2), wr(2);
  wl[0] = 3.0; wl[1] = 4.0;
  wr[0] = -1.0; wr[1] = 7.0;
  const VecN f = linear_upwind_flux(sys, wl, wr);
  CHECK(f[0] == doctest::Approx(1.5 * 3.0));
  CHECK(f[1] == doctest::Approx(-2.5 * 7.0));
}

TEST_CASE("linear upwind flux is consistent") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  MatN r(3, 3);
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
  } while (cond1(r) > 1e3);
  VecN lam(3);
  for (int j = 0; j < 3; ++j) lam[j] = entry(rng);
  const LinearSystem sys(lam, r);
  VecN w(3);
  for (int j = 0; j < 3; ++j) w[j] = entry(rng);
  const VecN f = linear_upwind_flux(sys, w, w);
  const VecN aw = sys.apply(w);
  CHECK(norm_inf(f - aw) <= 1e-14 * std::max(1.0, norm_inf(aw)));
}

TEST_CASE("three upwind flux forms agree on random systems") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    MatN r(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
    } while (cond1(r) > 1e3);
    VecN lam(3);
    for (int j = 0; j < 3; ++j) lam[j] = entry(rng);
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
  CHECK(worst <= 1e-12);
}

TEST_CASE("acoustics exact solution") {
  const AcousticsModel model{1.0, 2.0};
  const double L = 1.0;
  const auto p0 = [](double) { return 0.3; };
  const auto u0 = [](double) { return 0.1; };
  const auto Pi = [](double t) { return 0.3 + 0.2 * std::sin(5.0 * t); };

  SUBCASE("regime guard") {
    CHECK_THROWS_AS(acoustics_exact(model, p0, u0, Pi, L, 0.5, 0.3), RegimeNotReached);
  }
  SUBCASE("pressure trace at the inlet") {
    const auto [p, u] = acoustics_exact(model, p0, u0, Pi, L, 0.0, 2.0);
    CHECK(p == doctest::Approx(Pi(2.0)));
    CHECK(u == doctest::Approx(0.1 + (Pi(2.0) - 0.3) / model.impedance()));
  }
  SUBCASE("constant datum gives the steady state") {
    const auto cpi = [](double) { return 0.3; };
    for (double x : {0.0, 0.4, 1.0}) {
      const auto [p, u] = acoustics_exact(model, p0, u0, cpi, L, x, 3.0);
      CHECK(p == doctest::Approx(0.3));
      CHECK(u == doctest::Approx(0.1));
    }
  }
}

TEST_CASE("acoustic boundary fluxes") {
  const AcousticsModel model{1.3, 0.8};

  SUBCASE("steady uniform state is transparent") {
    const Vec2 w{0.5, 0.25};
    const auto [fl, fr] = acoustic_boundary_fluxes(model, 0.5, w, w, w);
    const Vec2 phys = model.flux(w);
    CHECK(fl[0] == doctest::Approx(phys[0]));
    CHECK(fl[1] == doctest::Approx(phys[1]));
    CHECK(fr[0] == doctest::Approx(phys[0]));
    CHECK(fr[1] == doctest::Approx(phys[1]));
  }

  SUBCASE("left flux second component is the imposed pressure over rho0") {
    const Vec2 w{0.9, -0.2};
    const auto [fl, fr] = acoustic_boundary_fluxes(model, 0.77, w, w, w);
    CHECK(fl[1] == doctest::Approx(0.77 / model.rho0));
    (void)fr;
  }

  SUBCASE("right flux equals the interior formula with the frozen state") {
    const Vec2 wlast{0.4, 0.6};
    const Vec2 winit{0.1, -0.3};
    const auto [fl, fr] = acoustic_boundary_fluxes(model, 0.0, wlast, wlast, winit);
    (void)fl;
    const LinearSystem sys = model.system();
    VecN a(2), b(2);
    a[0] = wlast[0]; a[1] = wlast[1];
    b[0] = winit[0]; b[1] = winit[1];
    const VecN f = linear_upwind_flux(sys, a, b);
    CHECK(fr[0] == doctest::Approx(f[0]));
    CHECK(fr[1] == doctest::Approx(f[1]));
  }
}

TEST_CASE("reflection boundary flux") {
  SUBCASE("transparent data reproduce A W") {
    // 3-system, left side, lambda1 < 0 < lambda2 < lambda3
    VecN lam(3);
    lam[0] = -1.0; lam[1] = 0.5; lam[2] = 2.0;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    MatN r(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
    } while (cond1(r) > 1e3);
    const LinearSystem sys(lam, r);
    VecN w(3);
    w[0] = 0.3; w[1] = -0.8; w[2] = 1.1;
    const VecN phi = characteristic_decompose(sys, w);

    ReflectionBoundary rb;
    rb.side = Side::left;
    rb.g = [phi](double) {
      VecN g(2);
      g[0] = phi[1];
      g[1] = phi[2];
      return g;
    };
    rb.S = [](double) { return MatN(2, 1); };
    const VecN f = reflection_boundary_flux(sys, rb, w, 0.0);
    const VecN aw = sys.apply(w);
    CHECK(norm_inf(f - aw) <= 1e-12 * std::max(1.0, norm_inf(aw)));
  }

  SUBCASE("term-by-term against the assembled formula") {
    VecN lam(3);
    lam[0] = -1.5; lam[1] = 1.0; lam[2] = 2.0;
    MatN r = MatN::identity(3);
    const LinearSystem sys(lam, r);
    VecN w(3);
    w[0] = 2.0; w[1] = -1.0; w[2] = 0.5;  // phi = w with identity basis
    const double beta0 = 0.3, gamma0 = -0.7, pcoef = 0.4, qcoef = -0.2;
    ReflectionBoundary rb;
    rb.side = Side::left;
    rb.g = [&](double) {
      VecN g(2);
      g[0] = beta0;
      g[1] = gamma0;
      return g;
    };
    rb.S = [&](double) {
      MatN s(2, 1);
      s(0, 0) = pcoef;
      s(1, 0) = qcoef;
      return s;
    };
    const VecN f = reflection_boundary_flux(sys, rb, w, 0.0);
    CHECK(f[0] == doctest::Approx(lam[0] * w[0]));
    CHECK(f[1] == doctest::Approx(lam[1] * (beta0 + pcoef * w[0])));
    CHECK(f[2] == doctest::Approx(lam[2] * (gamma0 + qcoef * w[0])));
  }

  SUBCASE("pressure reflection reproduces the acoustic left flux") {
    const AcousticsModel model{1.1, 1.7};
    const LinearSystem sys = model.system();
    const double Pi = 0.42;
    const Vec2 cellv{0.6, -0.15};
    ReflectionBoundary rb;
    rb.side = Side::left;
    rb.g = [Pi](double) {
      VecN g(1);
      g[0] = 2.0 * Pi;
      return g;
    };
    rb.S = [](double) {
      MatN s(1, 1);
      s(0, 0) = -1.0;
      return s;
    };
    VecN w(2);
    w[0] = cellv[0];
    w[1] = cellv[1];
    const VecN f = reflection_boundary_flux(sys, rb, w, 0.0);
    const auto [fl, fr] = acoustic_boundary_fluxes(model, Pi, cellv, cellv, cellv);
    (void)fr;
    CHECK(f[0] == doctest::Approx(fl[0]));
    CHECK(f[1] == doctest::Approx(fl[1]));
  }

  SUBCASE("mismatched reflection data dimensions are rejected") {
    VecN lam(3);
    lam[0] = -1.0; lam[1] = 1.0; lam[2] = 2.0;
    const LinearSystem sys(lam, MatN::identity(3));
    ReflectionBoundary rb;
    rb.side = Side::left;
    rb.g = [](double) { return VecN(1); };  // should be 2 ingoing
    rb.S = [](double) { return MatN(1, 2); };
    VecN w(3);
    CHECK_THROWS_AS(reflection_boundary_flux(sys, rb, w, 0.0), Error);
  }
}

TEST_CASE("characteristic advection reproduces the exact linear solution") {
  // Evolving each characteristic variable by scalar advection and
  // reassembling through R matches the solution of the coupled system.
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  MatN r(3, 3);
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = entry(rng);
  } while (cond1(r) > 1e2);
  VecN lam(3);
  lam[0] = -1.0; lam[1] = 0.3; lam[2] = 1.2;
  const LinearSystem sys(lam, r);

  // W0(x): componentwise smooth profile on the whole line
  const auto w0 = [](double x) {
    VecN w(3);
    w[0] = std::sin(x);
    w[1] = std::cos(2.0 * x);
    w[2] = std::exp(-x * x);
    return w;
  };
  const double x = 0.37, t = 0.85;
  // reference: phi_j(x, t) = phi_j(x - lambda_j t, 0)
  VecN phi(3);
  for (int j = 0; j < 3; ++j) {
    const VecN wj = w0(x - sys.lambda(j) * t);
    phi[j] = characteristic_decompose(sys, wj)[j];
  }
  const VecN w_exact = matvec(sys.right(), phi);

  // independently: advect every characteristic field sampled on a fine grid
  for (int j = 0; j < 3; ++j) {
    const auto phi_j0 = [&](double y) { return characteristic_decompose(sys, w0(y))[j]; };
    CHECK(phi_j0(x - sys.lambda(j) * t) == doctest::Approx(phi[j]));
  }
  CHECK(norm_inf(w_exact) > 0.0);
}
