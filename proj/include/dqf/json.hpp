#pragma once

// JSON export. Keys are emitted in sorted order and every number is rounded
// to 12 significant digits, so identical inputs give byte-identical output.

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqf/algebra.hpp"
#include "dqf/expr.hpp"
#include "dqf/factorize.hpp"
#include "dqf/kinematics.hpp"
#include "dqf/poly.hpp"

namespace dqf {

using Json = nlohmann::json;

inline double rounded(double x) {
  if (std::abs(x) <= kDisplayFloor) return 0.0;
  return std::stod(format_number(x));
}

inline Json to_json(const Quaternion& q) {
  return Json::array({rounded(q.w), rounded(q.x), rounded(q.y), rounded(q.z)});
}

inline Json to_json(const DualQuaternion& q) { return {{"primal", to_json(q.primal)}, {"dual", to_json(q.dual)}}; }

inline Json to_json(const Vec3& v) { return Json::array({rounded(v.x), rounded(v.y), rounded(v.z)}); }

inline Json to_json(const RealPoly& p) {
  Json out = Json::array();
  for (double c : p.coeffs()) out.push_back(rounded(c));
  return out;
}

/// Coefficient objects in ascending degree.
inline Json to_json(const DQPoly& m) {
  Json out = Json::array();
  for (const auto& c : m.coeffs()) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const DualPoly& p) { return {{"primal", to_json(primal(p))}, {"dual", to_json(dual(p))}}; }

inline Json to_json(const Line& l) {
  return {{"direction", to_json(l.direction)}, {"moment", to_json(l.moment)}, {"point_on_axis", to_json(l.point())}};
}

inline Json to_json(const LinearFactorization& lf, double threshold = 0.0) {
  Json factors = Json::array();
  for (std::size_t n = 0; n < lf.factors.size(); ++n) {
    factors.push_back({{"coefficients", to_json(lf.factors[n])},
                       {"text", render(lf.factors[n], threshold)},
                       {"norm", to_json(lf.norms[n])},
                       {"norm_text", render(lf.norms[n], threshold)}});
  }
  return {{"leading", to_json(lf.leading)}, {"factors", factors}};
}

inline Json to_json(const Joint& j, double threshold = 0.0) {
  return {{"kind", std::string(1, joint_letter(j.kind))},
          {"axis", to_json(j.axis)},
          {"factor", to_json(j.factor)},
          {"factor_text", render(j.factor, threshold)}};
}

inline Json to_json(const Mechanism& mech, double threshold = 0.0) {
  Json legs = Json::array();
  for (const auto& leg : mech.legs) {
    Json joints = Json::array();
    for (const auto& j : leg.joints) joints.push_back(to_json(j, threshold));
    legs.push_back({{"joints", joints}});
  }
  Json links = Json::array();
  for (const auto& l : mech.links) {
    links.push_back({{"a", {{"leg", l.leg_a}, {"joint", l.joint_a}}},
                     {"b", {{"leg", l.leg_b}, {"joint", l.joint_b}}},
                     {"angle", rounded(l.angle)},
                     {"distance", rounded(l.distance)}});
  }
  return {{"label", mech.label}, {"legs", legs}, {"links", links}};
}

inline Json to_json(const CircularityReport& report, double threshold = 0.0) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"factor", to_json(e.factor)},
                       {"factor_text", render(e.factor, threshold)},
                       {"mu", e.mu},
                       {"nu", e.nu}});
  }
  return {{"entries", entries},
          {"property_holds", report.property_holds},
          {"entirely_circular", report.entirely_circular}};
}

}  // namespace dqf
