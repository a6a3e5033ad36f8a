#pragma once

/// @file types.hpp
/// @brief Small value types shared across the solver: 3-vectors, conserved
///        5-vectors, gas model constants and primitive conversions.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgks {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Conserved state or flux: (rho, rho*u, rho*v, rho*w, rho*E).
using State5 = std::array<double, 5>;

inline State5 operator+(const State5& a, const State5& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}
inline State5 operator-(const State5& a, const State5& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}
inline State5 operator*(double s, const State5& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]};
}
inline State5& operator+=(State5& a, const State5& b) {
  for (int i = 0; i < 5; ++i) a[i] += b[i];
  return a;
}

/// Primitive Euler variables.
struct EulerPrim {
  double rho, u, v, w, p;
};

/// Ideal gas with internal degrees of freedom matching the kinetic model.
struct GasModel {
  double gamma = 1.4;
  /// Internal (non-translational) degrees of freedom in 3D.
  double K() const { return (5.0 - 3.0 * gamma) / (gamma - 1.0); }
};

inline double pressure(const State5& q, double gamma) {
  const double ke = 0.5 * (q[1] * q[1] + q[2] * q[2] + q[3] * q[3]) / q[0];
  return (gamma - 1.0) * (q[4] - ke);
}

inline EulerPrim cons_to_prim(const State5& q, double gamma) {
  const double ir = 1.0 / q[0];
  EulerPrim w;
  w.rho = q[0];
  w.u = q[1] * ir;
  w.v = q[2] * ir;
  w.w = q[3] * ir;
  w.p = (gamma - 1.0) * (q[4] - 0.5 * (q[1] * q[1] + q[2] * q[2] + q[3] * q[3]) * ir);
  return w;
}

inline State5 prim_to_cons(const EulerPrim& w, double gamma) {
  State5 q;
  q[0] = w.rho;
  q[1] = w.rho * w.u;
  q[2] = w.rho * w.v;
  q[3] = w.rho * w.w;
  q[4] = w.p / (gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v + w.w * w.w);
  return q;
}

inline double sound_speed(const EulerPrim& w, double gamma) {
  return std::sqrt(gamma * w.p / w.rho);
}

/// Thrown when a cell mean loses positivity; the step controller catches it.
struct NonPhysicalMean : std::runtime_error {
  explicit NonPhysicalMean(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed run configuration input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hgks
