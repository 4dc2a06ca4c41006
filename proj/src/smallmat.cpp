#include "fvroe/smallmat.hpp"

#include <cmath>
#include <utility>

namespace fvroe {

MatN MatN::identity(int n) {
  MatN m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

VecN matvec(const MatN& m, const VecN& x) {
  VecN y(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

MatN matmul(const MatN& a, const MatN& b) {
  MatN c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

VecN solve(MatN a, VecN b) {
  const int n = a.rows;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) throw SingularEigenbasis("singular matrix in solve");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      a(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  VecN x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

MatN inverse(const MatN& a) {
  const int n = a.rows;
  MatN inv(n, n);
  for (int j = 0; j < n; ++j) {
    VecN e(n);
    e[j] = 1.0;
    VecN col = solve(a, e);
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double norm1(const MatN& a) {
  double m = 0.0;
  for (int j = 0; j < a.cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i) s += std::fabs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

double norm_inf(const VecN& a) {
  double m = 0.0;
  for (int i = 0; i < a.n; ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

double cond1(const MatN& a) { return norm1(a) * norm1(inverse(a)); }

VecN operator+(const VecN& a, const VecN& b) {
  VecN r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = a[i] + b[i];
  return r;
}

VecN operator-(const VecN& a, const VecN& b) {
  VecN r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = a[i] - b[i];
  return r;
}

VecN operator*(double s, const VecN& a) {
  VecN r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = s * a[i];
  return r;
}

Vec3 matvec3(const Mat3& m, const Vec3& x) {
  return {dot(m[0], x), dot(m[1], x), dot(m[2], x)};
}

double norm_inf3(const Mat3& m) {
  double r = 0.0;
  for (const Vec3& row : m) r = std::max(r, std::fabs(row[0]) + std::fabs(row[1]) + std::fabs(row[2]));
  return r;
}

}  // namespace fvroe
