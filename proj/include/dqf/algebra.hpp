#pragma once

// Dual numbers, Hamiltonian quaternions and dual quaternions.
//
// All three are plain values with component order (w, x, y, z) for every
// quaternion part. Equality helpers take an explicit Tolerance; the
// arithmetic itself is exact up to floating point rounding.

#include <algorithm>
#include <array>
#include <cmath>

#include "dqf/error.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

struct DualNumber {
  double re = 0.0;  // primal part
  double du = 0.0;  // dual part

  constexpr DualNumber() = default;
  constexpr explicit DualNumber(double a, double b = 0.0) : re(a), du(b) {}

  constexpr DualNumber operator-() const { return DualNumber(-re, -du); }
  constexpr DualNumber& operator+=(const DualNumber& o) { re += o.re; du += o.du; return *this; }
  constexpr DualNumber& operator-=(const DualNumber& o) { re -= o.re; du -= o.du; return *this; }
  constexpr DualNumber& operator*=(double s) { re *= s; du *= s; return *this; }

  friend constexpr DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
  friend constexpr DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
  friend constexpr DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return DualNumber(a.re * b.re, a.re * b.du + a.du * b.re);
  }
  friend constexpr DualNumber operator*(double s, DualNumber a) { return a *= s; }
  friend constexpr DualNumber operator*(DualNumber a, double s) { return a *= s; }
  friend constexpr bool operator==(const DualNumber&, const DualNumber&) = default;
};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const DualNumber& a) { return std::max(std::abs(a.re), std::abs(a.du)); }

inline bool is_invertible(const DualNumber& a, const Tolerance& tol) {
  return std::abs(a.re) > tol.zero_eps;
}
inline bool is_invertible(double a, const Tolerance& tol) { return std::abs(a) > tol.zero_eps; }

/// (a + eps b)^-1 = (a - eps b) / a^2
inline DualNumber inverse(const DualNumber& a, const Tolerance& tol = {}) {
  if (!is_invertible(a, tol)) throw Error(Errc::NotInvertible, "dual number with zero primal part");
  return DualNumber(1.0 / a.re, -a.du / (a.re * a.re));
}
inline double inverse(double a, const Tolerance& tol = {}) {
  if (!is_invertible(a, tol)) throw Error(Errc::NotInvertible, "zero scalar");
  return 1.0 / a;
}

struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr explicit Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static constexpr Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static constexpr Quaternion k() { return Quaternion(0, 0, 0, 1); }
  static constexpr Quaternion vector(double x, double y, double z) { return Quaternion(0, x, y, z); }

  constexpr std::array<double, 4> components() const { return {w, x, y, z}; }
  constexpr double operator[](int n) const { return n == 0 ? w : n == 1 ? x : n == 2 ? y : z; }
  constexpr double& operator[](int n) { return n == 0 ? w : n == 1 ? x : n == 2 ? y : z; }

  constexpr Quaternion operator-() const { return Quaternion(-w, -x, -y, -z); }
  constexpr Quaternion& operator+=(const Quaternion& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Quaternion& operator-=(const Quaternion& o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Quaternion& operator*=(double s) { w *= s; x *= s; y *= s; z *= s; return *this; }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  // Hamilton product: i^2 = j^2 = k^2 = ijk = -1
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion conj(const Quaternion& q) { return Quaternion(q.w, -q.x, -q.y, -q.z); }
constexpr double norm(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Quaternion vector_part(const Quaternion& q) { return Quaternion(0, q.x, q.y, q.z); }
inline double magnitude(const Quaternion& q) {
  return std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}
inline bool is_invertible(const Quaternion& q, const Tolerance& tol) { return norm(q) > tol.zero_eps; }
inline Quaternion inverse(const Quaternion& q, const Tolerance& tol = {}) {
  if (!is_invertible(q, tol)) throw Error(Errc::NotInvertible, "quaternion with zero norm");
  return conj(q) * (1.0 / norm(q));
}

struct DualQuaternion {
  Quaternion primal;
  Quaternion dual;

  constexpr DualQuaternion() = default;
  constexpr explicit DualQuaternion(double s) : primal(s) {}
  constexpr DualQuaternion(const Quaternion& p, const Quaternion& d = Quaternion()) : primal(p), dual(d) {}
  constexpr explicit DualQuaternion(const DualNumber& a) : primal(a.re), dual(a.du) {}

  static constexpr DualQuaternion i() { return DualQuaternion(Quaternion::i()); }
  static constexpr DualQuaternion j() { return DualQuaternion(Quaternion::j()); }
  static constexpr DualQuaternion k() { return DualQuaternion(Quaternion::k()); }
  static constexpr DualQuaternion eps() { return DualQuaternion(Quaternion(), Quaternion(1.0)); }

  /// Components in the order primal (w, x, y, z), dual (w, x, y, z).
  constexpr std::array<double, 8> components() const {
    return {primal.w, primal.x, primal.y, primal.z, dual.w, dual.x, dual.y, dual.z};
  }
  static constexpr DualQuaternion from_components(const std::array<double, 8>& c) {
    return DualQuaternion(Quaternion(c[0], c[1], c[2], c[3]), Quaternion(c[4], c[5], c[6], c[7]));
  }

  constexpr DualQuaternion operator-() const { return DualQuaternion(-primal, -dual); }
  constexpr DualQuaternion& operator+=(const DualQuaternion& o) { primal += o.primal; dual += o.dual; return *this; }
  constexpr DualQuaternion& operator-=(const DualQuaternion& o) { primal -= o.primal; dual -= o.dual; return *this; }
  constexpr DualQuaternion& operator*=(double s) { primal *= s; dual *= s; return *this; }

  friend constexpr DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
  friend constexpr DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
  friend constexpr DualQuaternion operator*(double s, DualQuaternion a) { return a *= s; }
  friend constexpr DualQuaternion operator*(DualQuaternion a, double s) { return a *= s; }
  friend constexpr DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return DualQuaternion(a.primal * b.primal, a.primal * b.dual + a.dual * b.primal);
  }
  friend constexpr DualQuaternion operator*(const DualNumber& s, const DualQuaternion& a) {
    return DualQuaternion(s) * a;
  }
  friend constexpr DualQuaternion operator*(const DualQuaternion& a, const DualNumber& s) {
    return a * DualQuaternion(s);
  }
  friend constexpr bool operator==(const DualQuaternion&, const DualQuaternion&) = default;
};

constexpr DualQuaternion conj(const DualQuaternion& q) { return DualQuaternion(conj(q.primal), conj(q.dual)); }

/// q * conj(q) = |p|^2 + eps (p conj(d) + d conj(p)); the dual part is 2 <p, d>.
constexpr DualNumber norm(const DualQuaternion& q) {
  return DualNumber(norm(q.primal), 2.0 * dot(q.primal, q.dual));
}

/// Scalar p conj(d) + d conj(p); zero exactly when q satisfies Study's condition.
constexpr double study_defect(const DualQuaternion& q) { return 2.0 * dot(q.primal, q.dual); }

inline double magnitude(const DualQuaternion& q) { return std::max(magnitude(q.primal), magnitude(q.dual)); }

inline bool is_invertible(const DualQuaternion& q, const Tolerance& tol) { return norm(q.primal) > tol.zero_eps; }

inline DualQuaternion inverse(const DualQuaternion& q, const Tolerance& tol = {}) {
  if (!is_invertible(q, tol)) throw Error(Errc::NotInvertible, "dual quaternion with zero primal norm");
  return conj(q) * inverse(norm(q), tol);
}

/// Componentwise comparison, each component within tol.zero_eps.
inline bool approx_equal(const DualQuaternion& a, const DualQuaternion& b, const Tolerance& tol = {}) {
  auto ca = a.components();
  auto cb = b.components();
  for (std::size_t n = 0; n < ca.size(); ++n) {
    if (std::abs(ca[n] - cb[n]) > tol.zero_eps) return false;
  }
  return true;
}
inline bool approx_equal(const DualNumber& a, const DualNumber& b, const Tolerance& tol = {}) {
  return std::abs(a.re - b.re) <= tol.zero_eps && std::abs(a.du - b.du) <= tol.zero_eps;
}

}  // namespace dqf
