#ifndef FVROE_CORE_HPP
#define FVROE_CORE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fvroe {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

// Admissibility floors in scenario units. A state at or below a floor is
// rejected instead of clipped.
inline constexpr double rho_floor = 1e-12;
inline constexpr double pressure_floor = 1e-12;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InadmissibleState : public Error {
public:
  using Error::Error;
};

class NonPositiveDensity : public InadmissibleState {
public:
  explicit NonPositiveDensity(double rho)
      : InadmissibleState("non-positive density: " + std::to_string(rho)) {}
};

class NonPositivePressure : public InadmissibleState {
public:
  explicit NonPositivePressure(double p)
      : InadmissibleState("non-positive pressure: " + std::to_string(p)) {}
};

class SingularEigenbasis : public Error {
public:
  using Error::Error;
};

class RegimeNotReached : public Error {
public:
  using Error::Error;
};

class MalformedMesh : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

template <std::size_t N>
inline std::array<double, N> operator+(const std::array<double, N>& a,
                                       const std::array<double, N>& b) {
  std::array<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator-(const std::array<double, N>& a,
                                       const std::array<double, N>& b) {
  std::array<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator*(double s, const std::array<double, N>& a) {
  std::array<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N>& operator+=(std::array<double, N>& a,
                                         const std::array<double, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
  return a;
}

template <std::size_t N>
inline std::array<double, N>& operator-=(std::array<double, N>& a,
                                         const std::array<double, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] -= b[i];
  return a;
}

template <std::size_t N>
inline double norm_inf(const std::array<double, N>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::fabs(x));
  return m;
}

template <std::size_t N>
inline double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }
inline double negative_part(double x) { return x < 0.0 ? x : 0.0; }

}  // namespace fvroe

#endif
