#include <random>

#include "doctest.h"
#include "fvroe/gas_model.hpp"
#include "fvroe/verification.hpp"

using namespace fvroe;

namespace {
const GasModel gas;  // gamma = 1.4
}

TEST_CASE("primitive from conserved: stagnant and moving gas") {
  const Primitive a = primitive_from_conserved({1.0, 0.0, 2.5}, gas);
  CHECK(a.u == doctest::Approx(0.0));
  CHECK(a.p == doctest::Approx(1.0));

  const Primitive b = primitive_from_conserved({1.0, 1.0, 3.0}, gas);
  CHECK(b.u == doctest::Approx(1.0));
  CHECK(b.p == doctest::Approx(1.0));
}

TEST_CASE("primitive conversion rejects vacuum states") {
  CHECK_THROWS_AS(primitive_from_conserved({-1.0, 0.0, 1.0}, gas), NonPositiveDensity);
  CHECK_THROWS_AS(primitive_from_conserved({0.0, 0.0, 1.0}, gas), NonPositiveDensity);
  // kinetic energy exceeds the total: negative pressure
  CHECK_THROWS_AS(primitive_from_conserved({1.0, 10.0, 1.0}, gas), NonPositivePressure);
}

TEST_CASE("conserved from primitive: direct values") {
  const Vec3 a = conserved_from_primitive({1.0, 0.0, 1.0}, gas);
  CHECK(a[2] == doctest::Approx(2.5));
  const Vec3 b = conserved_from_primitive({2.0, 3.0, 1.0}, gas);
  CHECK(b[1] == doctest::Approx(6.0));
  CHECK(b[2] == doctest::Approx(11.5));
}

TEST_CASE("round trip conserved <-> primitive is the identity") {
  std::mt19937_64 rng(1234);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Vec3 w = random_admissible_state(rng, gas);
    const Vec3 back = conserved_from_primitive(primitive_from_conserved(w, gas), gas);
    worst = std::max(worst, norm_inf(back - w) / norm_inf(w));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("physical flux: stagnant gas carries only pressure") {
  const Vec3 f = physical_flux(conserved_from_primitive({1.0, 0.0, 1.0}, gas), gas);
  CHECK(f[0] == doctest::Approx(0.0));
  CHECK(f[1] == doctest::Approx(1.0));
  CHECK(f[2] == doctest::Approx(0.0));
}

TEST_CASE("physical flux: unit state") {
  // rho=1, u=1, p=1: energy 3, H = 4, flux (1, 2, 4)
  const Vec3 w = conserved_from_primitive({1.0, 1.0, 1.0}, gas);
  CHECK(w[2] == doctest::Approx(3.0));
  const Vec3 f = physical_flux(w, gas);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(2.0));
  CHECK(f[2] == doctest::Approx(4.0));
}

TEST_CASE("sound speed") {
  CHECK(sound_speed({1.4, 0.0, 1.0}, gas) == doctest::Approx(1.0));
  CHECK(sound_speed({1.0, 0.0, 1.0}, gas) == doctest::Approx(std::sqrt(1.4)));
}

TEST_CASE("total enthalpy: direct and scale invariance") {
  CHECK(total_enthalpy(conserved_from_primitive({1.0, 0.0, 1.0}, gas), gas) ==
        doctest::Approx(3.5));
  // intensive: doubling rho and p together leaves H unchanged
  CHECK(total_enthalpy(conserved_from_primitive({2.0, 0.0, 2.0}, gas), gas) ==
        doctest::Approx(3.5));
}

TEST_CASE("enthalpy/sound-speed identity on random states") {
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Vec3 w = random_admissible_state(rng, gas);
    const Primitive pr = primitive_from_conserved(w, gas);
    const double c = sound_speed(pr, gas);
    const double H = total_enthalpy(w, gas);
    worst = std::max(worst, std::fabs(H - 0.5 * pr.u * pr.u - c * c / (gas.gamma - 1.0)));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("flux jacobian at rest") {
  const Mat3 df = flux_jacobian_uH(0.0, 3.5, gas);
  CHECK(df[0][0] == 0.0);
  CHECK(df[0][1] == 1.0);
  CHECK(df[0][2] == 0.0);
  CHECK(df[1][0] == doctest::Approx(0.0));
  CHECK(df[1][1] == doctest::Approx(0.0));
  CHECK(df[1][2] == doctest::Approx(0.4));
  CHECK(df[2][0] == doctest::Approx(0.0));
  CHECK(df[2][1] == doctest::Approx(3.5));
  CHECK(df[2][2] == doctest::Approx(0.0));
}

TEST_CASE("flux jacobian maps eigenvectors to scaled eigenvectors") {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Vec3 w = random_admissible_state(rng, gas);
    const Primitive pr = primitive_from_conserved(w, gas);
    const Mat3 df = flux_jacobian(w, gas);
    const EigenStructure es =
        eigenstructure(pr.u, sound_speed(pr, gas), total_enthalpy(w, gas));
    for (int j = 0; j < 3; ++j) {
      const Vec3 res = matvec3(df, es.right[(std::size_t)j]) -
                       es.lambdas[(std::size_t)j] * es.right[(std::size_t)j];
      worst = std::max(worst, norm_inf(res) / norm_inf3(df));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("flux jacobian matches central finite differences") {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    const Vec3 w = random_admissible_state(rng, gas);
    const Mat3 df = flux_jacobian(w, gas);
    for (int j = 0; j < 3; ++j) {
      const double h = 1e-7 * std::max(1.0, std::fabs(w[(std::size_t)j]));
      Vec3 wp = w, wm = w;
      wp[(std::size_t)j] += h;
      wm[(std::size_t)j] -= h;
      const Vec3 col =
          (1.0 / (2.0 * h)) * (physical_flux(wp, gas) - physical_flux(wm, gas));
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst, std::fabs(col[(std::size_t)i] - df[(std::size_t)i][(std::size_t)j]));
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("eigenstructure: stagnant reference values and ordering") {
  const EigenStructure es = eigenstructure(0.0, 1.0, 3.5);
  CHECK(es.lambdas[0] == doctest::Approx(-1.0));
  CHECK(es.lambdas[1] == doctest::Approx(0.0));
  CHECK(es.lambdas[2] == doctest::Approx(1.0));
  CHECK(es.right[0][1] == doctest::Approx(-1.0));
  CHECK(es.right[0][2] == doctest::Approx(3.5));
  CHECK(es.right[1][2] == doctest::Approx(0.0));
  CHECK(es.right[2][2] == doctest::Approx(3.5));
}

TEST_CASE("eigenvectors are linearly independent") {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 500; ++it) {
    const Vec3 w = random_admissible_state(rng, gas);
    const Primitive pr = primitive_from_conserved(w, gas);
    const double c = sound_speed(pr, gas);
    const EigenStructure es = eigenstructure(pr.u, c, total_enthalpy(w, gas));
    CHECK(es.lambdas[0] < es.lambdas[1]);
    CHECK(es.lambdas[1] < es.lambdas[2]);
    // determinant of R via the scalar triple product
    const Vec3& a = es.right[0];
    const Vec3& b = es.right[1];
    const Vec3& cc = es.right[2];
    const double det = a[0] * (b[1] * cc[2] - b[2] * cc[1]) -
                       b[0] * (a[1] * cc[2] - a[2] * cc[1]) +
                       cc[0] * (a[1] * b[2] - a[2] * b[1]);
    CHECK(std::fabs(det) > 1e-12);
  }
}

TEST_CASE("2D flux reduces to 1D along the x axis") {
  const Vec4 w = conserved_from_primitive2({1.2, 0.7, 0.0, 2.0}, gas);
  const Vec4 f = physical_flux2(w, {1.0, 0.0}, gas);
  const Vec3 f1 = physical_flux(conserved_from_primitive({1.2, 0.7, 2.0}, gas), gas);
  CHECK(f[0] == doctest::Approx(f1[0]));
  CHECK(f[1] == doctest::Approx(f1[1]));
  CHECK(f[2] == doctest::Approx(0.0));
  CHECK(f[3] == doctest::Approx(f1[2]));
}
