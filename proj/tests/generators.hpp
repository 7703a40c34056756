#pragma once

// Hand-rolled random generators for the property tests.

#include <random>
#include <vector>

#include "dqf/dqf.hpp"
#include "oracle.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(unsigned seed) : engine_(seed) {}

  double real(double lo = -2.0, double hi = 2.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  dqf::Quaternion quaternion() { return dqf::Quaternion(real(), real(), real(), real()); }
  dqf::Quaternion pure() { return dqf::Quaternion::vector(real(), real(), real()); }
  dqf::DualQuaternion dq() { return {quaternion(), quaternion()}; }
  dqf::DualNumber dual_number() { return dqf::DualNumber(real(), real()); }
  dqf::Vec3 vec() { return {real(), real(), real()}; }

  /// Rigid displacement: Study condition holds by construction.
  dqf::DualQuaternion motion() {
    dqf::Quaternion p = quaternion();
    dqf::Quaternion v = pure();
    return {p, 0.5 * (v * p)};
  }

  dqf::DQPoly poly(int degree) {
    std::vector<dqf::DualQuaternion> c;
    for (int n = 0; n <= degree; ++n) c.push_back(dq());
    return dqf::DQPoly(c);
  }

  dqf::RealPoly real_poly(int degree) {
    std::vector<double> c;
    for (int n = 0; n <= degree; ++n) c.push_back(real());
    return dqf::RealPoly(c);
  }

  std::mt19937& engine() { return engine_; }

 private:
  std::mt19937 engine_;
};

inline oracle::DQ raw(const dqf::DualQuaternion& q) { return q.components(); }

inline oracle::Poly raw(const dqf::DQPoly& m) {
  oracle::Poly out;
  for (const auto& c : m.coeffs()) out.push_back(c.components());
  return out;
}

inline double max_diff(const oracle::Poly& a, const oracle::Poly& b) {
  double d = 0.0;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (int c = 0; c < 8; ++c) {
      double x = r < a.size() ? a[r][c] : 0.0;
      double y = r < b.size() ? b[r][c] : 0.0;
      d = std::max(d, std::abs(x - y));
    }
  }
  return d;
}

/// M = (t - h_1)...(t - h_k) with random h_i; generic, so the norm factors
/// are pairwise coprime with irreducible primal parts.
struct Constructed {
  std::vector<dqf::DQPoly> factors;
  dqf::DQPoly poly;
};

inline Constructed constructed(Rng& rng, int k) {
  Constructed c;
  c.poly = dqf::DQPoly{dqf::DualQuaternion(1.0)};
  for (int n = 0; n < k; ++n) {
    c.factors.push_back(dqf::linear(rng.dq()));
    c.poly = c.poly * c.factors.back();
  }
  return c;
}

/// Same with motion-polynomial factors (Study condition on every h_i).
inline Constructed constructed_motion(Rng& rng, int k) {
  Constructed c;
  c.poly = dqf::DQPoly{dqf::DualQuaternion(1.0)};
  for (int n = 0; n < k; ++n) {
    dqf::DQPoly f = dqf::rotation_about(rng.vec(), rng.vec());
    f.set(0, f[0] - dqf::DualQuaternion(rng.real()));
    c.factors.push_back(f);
    c.poly = c.poly * c.factors.back();
  }
  return c;
}

}  // namespace gen
