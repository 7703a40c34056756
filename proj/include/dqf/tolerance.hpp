#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dqf {

/// Numerical thresholds passed explicitly to every operation that compares
/// floating point values against zero.
struct Tolerance {
  double zero_eps = 1e-9;     // |x| <= zero_eps * (1 + scale) counts as zero
  double cluster_eps = 1e-6;  // radius for merging numerically repeated roots

  constexpr Tolerance() = default;
  Tolerance(double zero, double cluster) : zero_eps(zero), cluster_eps(cluster) {
    if (!(zero > 0.0) || !(cluster > 0.0)) {
      throw std::invalid_argument("tolerances must be strictly positive");
    }
  }

  bool negligible(double value, double scale = 0.0) const {
    return std::abs(value) <= zero_eps * (1.0 + std::abs(scale));
  }

  /// Reads DQF_TOLERANCE (a positive real) to override zero_eps.
  static Tolerance from_env() {
    Tolerance tol;
    if (const char* env = std::getenv("DQF_TOLERANCE")) {
      double v = std::stod(env);
      tol = Tolerance(v, tol.cluster_eps);
    }
    return tol;
  }
};

}  // namespace dqf
