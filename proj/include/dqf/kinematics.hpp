#pragma once

// Motions parametrized by dual quaternion polynomials: point action, fiber
// projection onto Study's quadric, trajectories and their behaviour at
// infinity, joint axes and mechanism assembly from factorizations.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dqf/algebra.hpp"
#include "dqf/error.hpp"
#include "dqf/factorize.hpp"
#include "dqf/poly.hpp"
#include "dqf/realfactor.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](int n) const { return n == 0 ? x : n == 1 ? y : z; }
  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using Point3 = Vec3;

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

constexpr Quaternion to_quaternion(const Vec3& v) { return Quaternion::vector(v.x, v.y, v.z); }
constexpr Vec3 vector_of(const Quaternion& q) { return {q.x, q.y, q.z}; }

/// Plucker coordinates of an oriented line with unit direction.
struct Line {
  Vec3 direction;
  Vec3 moment;

  /// Point of the line closest to the origin.
  Vec3 point() const { return cross(direction, moment); }
};

/// Line through point with the given direction; direction is normalized and
/// its first non-negligible component made positive.
inline Line make_line(const Vec3& point, const Vec3& direction, const Tolerance& tol = {}) {
  double len = length(direction);
  if (len <= tol.zero_eps) throw Error(Errc::ZeroDirection, "line direction vanishes");
  Vec3 d = (1.0 / len) * direction;
  for (int n = 0; n < 3; ++n) {
    if (std::abs(d[n]) > tol.zero_eps) {
      if (d[n] < 0) d = -1.0 * d;
      break;
    }
  }
  return {d, cross(point, d)};
}

inline bool approx_equal(const Line& a, const Line& b, double eps) {
  return length(a.direction - b.direction) <= eps && length(a.moment - b.moment) <= eps;
}

inline double angle_between(const Line& a, const Line& b) {
  return std::acos(std::min(1.0, std::abs(dot(a.direction, b.direction))));
}

/// Length of the common normal (distance of parallel lines when the
/// directions agree).
inline double distance_between(const Line& a, const Line& b, const Tolerance& tol = {}) {
  Vec3 n = cross(a.direction, b.direction);
  Vec3 offset = b.point() - a.point();
  double nl = length(n);
  if (nl <= tol.zero_eps) return length(cross(offset, a.direction));
  return std::abs(dot(offset, n)) / nl;
}

// --- action on points ----------------------------------------------------

/// x -> (p - eps d) x (conj(p) + eps conj(d)) / |p| with x = 1 + eps(x1 i + x2 j + x3 k).
inline Point3 act_on_point(const DualQuaternion& q, const Point3& pt, const Tolerance& tol = {}) {
  const Quaternion& p = q.primal;
  const Quaternion& d = q.dual;
  double np = norm(p);
  if (np <= tol.zero_eps) throw Error(Errc::NotInvertible, "displacement with zero primal part");
  Quaternion image = p * to_quaternion(pt) * conj(p) + p * conj(d) - d * conj(p);
  return (1.0 / np) * vector_of(image);
}

/// Study-condition representative of the same displacement.
inline DualQuaternion fiber_project(const DualQuaternion& q) {
  const Quaternion& p = q.primal;
  const Quaternion& d = q.dual;
  return DualQuaternion(norm(p) * p, 0.5 * (d * conj(p) - p * conj(d)) * p);
}

/// |P| P + (eps/2)(D conj(P) - P conj(D)) P, a motion polynomial for the same motion.
inline DQPoly fiber_project(const DQPoly& m, const Tolerance& tol = {}) {
  QuatPoly p = primal(m);
  QuatPoly d = dual(m);
  if (p.trimmed(tol).is_zero()) throw Error(Errc::ZeroPrimal, "primal part vanishes");
  QuatPoly new_primal = to_quat(norm(p, tol)) * p;
  QuatPoly new_dual = Quaternion(0.5) * ((d * conj(p) - p * conj(d)) * p);
  return make_dq(new_primal, new_dual);
}

// --- trajectories -------------------------------------------------------

/// Homogeneous trajectory x0 |P| + eps (P x conj(P) + x0 (P conj(D) - D conj(P))) with x0 = 1.
struct Trajectory {
  RealPoly weight;     // x0 |P|
  QuatPoly position;   // vector-valued numerator

  Point3 at(double t) const {
    double w = eval(weight, t);
    return (1.0 / w) * vector_of(eval(position, t));
  }
};

inline Trajectory trajectory(const DQPoly& m, const Point3& pt, const Tolerance& tol = {}) {
  QuatPoly p = primal(m);
  QuatPoly d = dual(m);
  QuatPoly x = QuatPoly::constant(to_quaternion(pt));
  return {norm(p, tol), p * x * conj(p) + (p * conj(d) - d * conj(p))};
}

struct CircularityEntry {
  RealPoly factor;  // irreducible factor of the weight; its roots are the points at infinity
  int mu = 0;       // multiplicity in the weight
  int nu = 0;       // multiplicity in the norm of the position numerator
};

struct CircularityReport {
  std::vector<CircularityEntry> entries;
  bool property_holds = true;      // mu > 1 implies nu >= mu
  bool entirely_circular = true;   // nu >= mu everywhere
};

namespace detail {

inline int factor_multiplicity(RealPoly value, const RealPoly& factor, int cap, const Tolerance& tol) {
  int count = 0;
  const double scale = 1.0 + value.scale();
  while (count < cap && !value.is_zero()) {
    auto division = right_divide(value, factor, tol);
    if (division.remainder.scale() > kVerifyEps * scale) break;
    value = division.quotient;
    ++count;
  }
  return count;
}

}  // namespace detail

inline CircularityReport circularity_check(const DQPoly& m, const Point3& pt, const Tolerance& tol = {}) {
  Trajectory tr = trajectory(m, pt, tol);
  RealPoly position_norm = norm(tr.position, tol);
  CircularityReport report;
  if (tr.weight.degree() < 1) return report;
  RealFactorization rf = factor_real(tr.weight, tol);
  for (const auto& f : rf.factors) {
    CircularityEntry e{f.poly, f.multiplicity, 0};
    int cap = std::max(0, position_norm.degree() / std::max(1, f.poly.degree()));
    e.nu = detail::factor_multiplicity(position_norm, f.poly, cap, tol);
    if (e.mu > 1 && e.nu < e.mu) report.property_holds = false;
    if (e.nu < e.mu) report.entirely_circular = false;
    report.entries.push_back(e);
  }
  return report;
}

// --- axes and joints ----------------------------------------------------

/// Fixed line of the displacement q. Pure translations raise IsTranslation.
inline Line screw_axis(const DualQuaternion& q, const Tolerance& tol = {}) {
  if (!is_invertible(q, tol)) throw Error(Errc::NotInvertible, "displacement with zero primal part");
  DualQuaternion s = fiber_project(q);
  const Quaternion& p = s.primal;
  double np = norm(p);
  Vec3 axis = vector_of(p);
  if (length(axis) <= tol.zero_eps * std::sqrt(np)) throw Error(Errc::IsTranslation, "no rotational part");
  Vec3 u = (1.0 / length(axis)) * axis;
  Vec3 shift = (1.0 / np) * vector_of(p * conj(s.dual) - s.dual * conj(p));

  // R - I + u u^T maps the plane orthogonal to u onto itself invertibly.
  Eigen::Matrix3d system;
  const std::array<Vec3, 3> basis{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  for (int c = 0; c < 3; ++c) {
    Vec3 rotated = (1.0 / np) * vector_of(p * to_quaternion(basis[c]) * conj(p));
    for (int r = 0; r < 3; ++r) system(r, c) = rotated[r] - basis[c][r] + u[r] * u[c];
  }
  Vec3 rhs = -1.0 * (shift - dot(shift, u) * u);
  Eigen::Vector3d x = system.colPivHouseholderQr().solve(Eigen::Vector3d(rhs.x, rhs.y, rhs.z));
  return make_line({x(0), x(1), x(2)}, u, tol);
}

enum class JointKind { Revolute, Prismatic, Cylindrical };

constexpr char joint_letter(JointKind kind) {
  switch (kind) {
    case JointKind::Revolute: return 'R';
    case JointKind::Prismatic: return 'P';
    case JointKind::Cylindrical: return 'C';
  }
  return '?';
}

struct Joint {
  Line axis;
  JointKind kind = JointKind::Cylindrical;
  DQPoly factor;
};

/// Revolute for linear motion polynomials with rotation, prismatic when the
/// primal part is real, cylindrical (vertical Darboux) otherwise.
inline Joint classify_joint(const DQPoly& f, const Tolerance& tol = {}) {
  DQPoly g = f.trimmed(tol);
  if (g.degree() != 1 || !approx_equal(g.leading(), DualQuaternion(1.0), tol)) {
    throw Error(Errc::DegenerateFactor, "joint factor must be monic linear");
  }
  DualQuaternion h = -g[0];
  Vec3 rot = vector_of(h.primal);
  Vec3 trans = vector_of(h.dual);
  Joint joint{{}, JointKind::Cylindrical, g};
  if (length(rot) <= tol.zero_eps) {
    if (length(trans) <= tol.zero_eps) throw Error(Errc::DegenerateFactor, "factor is a real polynomial");
    joint.kind = JointKind::Prismatic;
    joint.axis = make_line({0, 0, 0}, trans, tol);
    return joint;
  }
  RealPoly defect = study_defect(g, tol);
  bool motion = true;
  for (double c : defect.coeffs()) motion = motion && std::abs(c) <= tol.zero_eps;
  joint.kind = motion ? JointKind::Revolute : JointKind::Cylindrical;
  Line at0 = screw_axis(eval(g, 0.0), tol);
  Line at1 = screw_axis(eval(g, 1.0), tol);
  if (!approx_equal(at0, at1, 1e-7 * (1.0 + g.scale()))) {
    throw Error(Errc::IllConditioned, "axis of a linear factor moved with the parameter");
  }
  joint.axis = at0;
  return joint;
}

/// t + v + (eps/2)(v x - x v): rotation about the line through x with direction v.
inline DQPoly rotation_about(const Vec3& v, const Point3& x, const Tolerance& tol = {}) {
  if (length(v) <= tol.zero_eps) throw Error(Errc::ZeroDirection, "rotation direction vanishes");
  Quaternion vq = to_quaternion(v);
  Quaternion xq = to_quaternion(x);
  return DQPoly{DualQuaternion(vq, 0.5 * (vq * xq - xq * vq)), DualQuaternion(1.0)};
}

struct MechanismLeg {
  std::vector<Joint> joints;
};

struct LinkGeometry {
  std::size_t leg_a = 0, joint_a = 0;
  std::size_t leg_b = 0, joint_b = 0;
  double angle = 0.0;
  double distance = 0.0;
};

struct Mechanism {
  std::vector<MechanismLeg> legs;
  std::vector<LinkGeometry> links;
  std::string label;
};

/// One leg per factorization. Links: consecutive joints in a leg, plus the
/// first joints (base) and the last joints (moving platform) of every pair of
/// legs. The label walks the closed loop: first leg forward, second leg
/// backward, further legs alternating.
inline Mechanism build_mechanism(const DQPoly& m, const std::vector<LinearFactorization>& factorizations,
                                 const Tolerance& tol = {}) {
  Mechanism mech;
  for (const auto& lf : factorizations) {
    if (distance(product(lf), m) > kVerifyEps * (1.0 + m.scale())) {
      throw Error(Errc::IllConditioned, "factorization does not reproduce the polynomial");
    }
    MechanismLeg leg;
    for (const auto& f : lf.factors) leg.joints.push_back(classify_joint(f, tol));
    mech.legs.push_back(std::move(leg));
  }
  auto link = [&](std::size_t la, std::size_t ja, std::size_t lb, std::size_t jb) {
    const Line& a = mech.legs[la].joints[ja].axis;
    const Line& b = mech.legs[lb].joints[jb].axis;
    mech.links.push_back({la, ja, lb, jb, angle_between(a, b), distance_between(a, b, tol)});
  };
  for (std::size_t l = 0; l < mech.legs.size(); ++l) {
    for (std::size_t j = 0; j + 1 < mech.legs[l].joints.size(); ++j) link(l, j, l, j + 1);
  }
  for (std::size_t a = 0; a < mech.legs.size(); ++a) {
    for (std::size_t b = a + 1; b < mech.legs.size(); ++b) {
      if (mech.legs[a].joints.empty() || mech.legs[b].joints.empty()) continue;
      link(a, 0, b, 0);
      link(a, mech.legs[a].joints.size() - 1, b, mech.legs[b].joints.size() - 1);
    }
  }
  for (std::size_t l = 0; l < mech.legs.size(); ++l) {
    std::string letters;
    for (const auto& j : mech.legs[l].joints) letters += joint_letter(j.kind);
    if (l % 2 == 1) std::reverse(letters.begin(), letters.end());
    mech.label += letters;
  }
  return mech;
}

}  // namespace dqf
