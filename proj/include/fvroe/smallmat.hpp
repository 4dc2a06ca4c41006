#ifndef FVROE_SMALLMAT_HPP
#define FVROE_SMALLMAT_HPP

#include <array>
#include <cstddef>

#include "fvroe/core.hpp"

namespace fvroe {

// Dense matrices and vectors up to dimension 4, enough for every system
// handled here (scalar, acoustics, 1D Euler, 2D Euler in a face frame).

struct VecN {
  int n = 0;
  std::array<double, 4> v{};

  VecN() = default;
  explicit VecN(int size) : n(size) {}
  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

struct MatN {
  int rows = 0;
  int cols = 0;
  std::array<double, 16> a{};

  MatN() = default;
  MatN(int r, int c) : rows(r), cols(c) {}
  static MatN identity(int n);

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
};

VecN matvec(const MatN& m, const VecN& x);
MatN matmul(const MatN& a, const MatN& b);

// Solves A x = b by Gaussian elimination with partial pivoting (square A).
VecN solve(MatN a, VecN b);

MatN inverse(const MatN& a);

double norm1(const MatN& a);
double norm_inf(const VecN& a);

// 1-norm condition number estimate ||A||_1 * ||A^-1||_1.
double cond1(const MatN& a);

VecN operator+(const VecN& a, const VecN& b);
VecN operator-(const VecN& a, const VecN& b);
VecN operator*(double s, const VecN& a);

// Fixed 3x3 helpers for the gas-dynamics Jacobians.
using Mat3 = std::array<Vec3, 3>;  // rows

Vec3 matvec3(const Mat3& m, const Vec3& x);
double norm_inf3(const Mat3& m);

}  // namespace fvroe

#endif
