#pragma once

// Factorization of dual quaternion polynomials into monic linear factors.
//
// A reduced primal part (no real polynomial factor) together with a norm
// polynomial that splits over the dual numbers into monic factors with
// irreducible primal parts is both necessary and sufficient. Factors are
// peeled off from the right: for a chosen monic quadratic factor N of the
// norm, the remainder r1 t + r0 of M modulo N has invertible r1 and its zero
// h = -r1^-1 r0 is the unique common right zero of M and N.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dqf/dualfactor.hpp"
#include "dqf/error.hpp"
#include "dqf/poly.hpp"
#include "dqf/realfactor.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

/// Relative bound used when re-verifying computed factorizations.
inline constexpr double kVerifyEps = 1e-8;

struct LinearFactorization {
  DualQuaternion leading{1.0};     // left constant factor pulled out when the input is not monic
  std::vector<DQPoly> factors;     // monic linear, product (left to right) equals the input
  std::vector<DualPoly> norms;     // norms[i] = |factors[i]|
};

/// Selects one run of the factorization algorithm.
struct FactorPlan {
  std::vector<std::size_t> ordering;           // permutation of the quadratic norm factors, left to right
  std::vector<std::vector<RealPoly>> splits;   // per primal factor (canonical order) parts of lambda_i
};

struct FactorabilityReport {
  bool factorable = false;
  bool translational = false;      // primal part carries distinct real linear factors
  std::vector<RealPoly> failing;   // irreducible N_i whose power N_i^(n_i-1) does not divide the dual part
  std::string diagnosis;
};

inline DQPoly product(const std::vector<DQPoly>& factors) {
  DQPoly out{DualQuaternion(1.0)};
  for (const auto& f : factors) out = out * f;
  return out;
}

inline DQPoly product(const LinearFactorization& lf) {
  return DQPoly{lf.leading} * product(lf.factors);
}

/// Splits m = lead * monic with lead the leading coefficient of m.
inline std::pair<DualQuaternion, DQPoly> normalize_monic(const DQPoly& m, const Tolerance& tol = {}) {
  DQPoly trimmed = m.trimmed(tol);
  if (trimmed.is_zero() || !is_invertible(trimmed.leading(), tol)) {
    throw Error(Errc::DivisorNotInvertible, "leading coefficient is not invertible");
  }
  DualQuaternion lead = trimmed.leading();
  DQPoly out = inverse(lead, tol) * trimmed;
  out.set(out.size() - 1, DualQuaternion(1.0));
  return {lead, out};
}

inline std::string to_text(const RealPoly& p) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (int n = p.degree(); n >= 0; --n) {
    double c = p[static_cast<std::size_t>(n)];
    if (c == 0.0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    double a = std::abs(c);
    if (n == 0 || a != 1.0) os << a << (n > 0 ? "*" : "");
    if (n > 0) os << "t";
    if (n > 1) os << "^" << n;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace detail {

struct PrimalAnalysis {
  RealPoly real_factor;            // mrpf of the primal part
  RealFactorization factors;       // of real_factor, when non-trivial
};

inline PrimalAnalysis analyse_primal(const DQPoly& monic_m, const Tolerance& tol) {
  PrimalAnalysis out;
  out.real_factor = mrpf(primal(monic_m), tol);
  if (out.real_factor.degree() > 0) out.factors = factor_real(out.real_factor, tol);
  return out;
}

inline bool has_quadratic(const RealFactorization& rf) {
  return std::any_of(rf.factors.begin(), rf.factors.end(), [](const auto& f) { return f.poly.degree() == 2; });
}
inline bool has_repeated(const RealFactorization& rf) {
  return std::any_of(rf.factors.begin(), rf.factors.end(), [](const auto& f) { return f.multiplicity > 1; });
}

inline bool is_reduced(const DQPoly& m, const Tolerance& tol) { return mrpf(m, tol).degree() == 0; }

}  // namespace detail

/// Decides whether m admits a factorization into linear factors.
/// Throws PrimalHasRealFactor when the primal part has a real factor outside
/// the translational case (distinct real linear factors).
inline FactorabilityReport can_factor(const DQPoly& m, const Tolerance& tol = {}) {
  auto [lead, monic_m] = normalize_monic(m, tol);
  FactorabilityReport report;
  auto primal_info = detail::analyse_primal(monic_m, tol);
  if (primal_info.real_factor.degree() > 0) {
    if (detail::has_quadratic(primal_info.factors)) {
      throw Error(Errc::PrimalHasRealFactor,
                  "primal part has the irreducible real factor " + to_text(primal_info.real_factor));
    }
    if (detail::has_repeated(primal_info.factors)) {
      if (!detail::is_reduced(monic_m, tol)) {
        throw Error(Errc::PrimalHasRealFactor, "primal part has repeated real linear factors and m is not reduced");
      }
      report.factorable = false;
      report.diagnosis = "primal part has a repeated real linear factor; a reduced polynomial of this kind "
                         "has no factorization";
      for (const auto& f : primal_info.factors.factors) {
        if (f.multiplicity > 1) report.failing.push_back(f.poly);
      }
      return report;
    }
    report.translational = true;
  }
  auto check = can_factor_dual(norm(monic_m, tol), tol);
  report.factorable = check.factorable;
  report.failing = check.failing;
  if (report.factorable) {
    report.diagnosis = "norm polynomial splits into monic quadratic factors";
  } else {
    std::string names;
    for (const auto& f : check.failing) names += (names.empty() ? "" : ", ") + to_text(f);
    report.diagnosis = "dual part of the norm polynomial lacks the factor(s) " + names + " (multiplicity excess)";
  }
  return report;
}

/// Monic quadratic factors of |m| over the dual numbers in canonical order.
/// Linear primal factors (translational case) are paired into squares.
inline std::vector<DualPoly> quadratic_norm_factors(const DQPoly& monic_m,
                                                    const std::vector<std::vector<RealPoly>>& splits = {},
                                                    const Tolerance& tol = {}) {
  DualFactorization df = factor_dual(norm(monic_m, tol), splits, tol);
  std::vector<DualPoly> out;
  std::optional<DualQuadFactor> pending;
  for (const auto& f : df.factors) {
    if (f.primal.degree() == 2) {
      out.push_back(f.poly);
      continue;
    }
    if (!pending) {
      pending = f;
      continue;
    }
    if (distance(pending->primal, f.primal) > tol.cluster_eps) {
      throw Error(Errc::NotFactorizable, "real linear norm factor " + to_text(pending->primal) + " is not squared");
    }
    out.push_back(pending->poly * f.poly);
    pending.reset();
  }
  if (pending) {
    throw Error(Errc::NotFactorizable, "real linear norm factor " + to_text(pending->primal) + " is not squared");
  }
  return out;
}

struct LinearExtraction {
  DQPoly quotient;
  DualQuaternion h;
};

/// The unique right factor t - h of m with |t - h| = n, returned with the
/// left quotient.
inline LinearExtraction extract_linear_factor(const DQPoly& m, const DualPoly& n, const Tolerance& tol = {}) {
  auto [lead, monic_m] = normalize_monic(m, tol);
  DualPoly quad = n.trimmed(tol);
  if (quad.degree() != 2 || !approx_equal(quad.leading(), DualNumber(1.0), tol)) {
    throw Error(Errc::NotADivisor, "norm factor must be monic quadratic");
  }
  const double scale = 1.0 + monic_m.scale();

  DualPoly norm_m = norm(monic_m, tol);
  if (right_divide(norm_m, quad, tol).remainder.scale() > kVerifyEps * (1.0 + norm_m.scale())) {
    throw Error(Errc::NotADivisor, "quadratic factor does not divide the norm polynomial");
  }
  QuatPoly p = primal(monic_m);
  if (right_divide(p, to_quat(primal(quad)), tol).remainder.scale() <= tol.zero_eps * scale) {
    throw Error(Errc::PrimalDivides, "primal part of the norm factor divides the primal part");
  }

  DQPoly remainder = right_divide(monic_m, to_dq(quad), tol).remainder;
  DualQuaternion r1 = remainder[1];
  DualQuaternion r0 = remainder[0];
  if (!is_invertible(r1, tol)) throw Error(Errc::NonInvertibleRemainder, "linear remainder coefficient is singular");
  DualQuaternion h = -(inverse(r1, tol) * r0);

  DualPoly norm_h = norm(linear(h), tol);
  if (distance(norm_h, quad) > kVerifyEps * (1.0 + quad.scale())) {
    throw Error(Errc::NonInvertibleRemainder, "extracted factor has the wrong norm");
  }
  DualQuaternion residual = right_eval(monic_m, h);
  double eval_scale = monic_m.scale() * std::pow(std::max(1.0, magnitude(h)), monic_m.degree());
  if (magnitude(residual) > kVerifyEps * (1.0 + eval_scale)) {
    throw Error(Errc::NotAZero, "extracted h is not a right zero");
  }
  DQPoly quotient = right_divide(monic_m, linear(h), tol).quotient;
  return {DQPoly{lead} * quotient, h};
}

/// Peels right factors with the given norms; norms[i] is the norm of the
/// i-th factor from the left.
inline LinearFactorization rfactor(const DQPoly& m, const std::vector<DualPoly>& norms, const Tolerance& tol = {}) {
  auto [lead, current] = normalize_monic(m, tol);
  if (static_cast<int>(norms.size()) != current.degree()) {
    throw Error(Errc::InfeasiblePlan, "plan has " + std::to_string(norms.size()) + " factors for degree " +
                                          std::to_string(current.degree()));
  }
  LinearFactorization out;
  out.leading = lead;
  std::vector<DQPoly> reversed;
  for (std::size_t idx = norms.size(); idx-- > 1;) {
    LinearExtraction step;
    try {
      step = extract_linear_factor(current, norms[idx], tol);
    } catch (const Error& e) {
      if (e.code() == Errc::PrimalDivides) throw Error(Errc::InfeasiblePlan, e.what());
      throw;
    }
    reversed.push_back(linear(step.h));
    current = step.quotient.trimmed(tol);
    current.set(current.size() - 1, DualQuaternion(1.0));
  }
  if (!norms.empty()) {
    if (current.degree() != 1) throw Error(Errc::IllConditioned, "last quotient is not linear");
    if (distance(norm(current, tol), norms[0]) > kVerifyEps * (1.0 + norms[0].scale())) {
      throw Error(Errc::NotADivisor, "last factor has the wrong norm");
    }
    reversed.push_back(current);
  }
  out.factors.assign(reversed.rbegin(), reversed.rend());
  for (const auto& f : out.factors) out.norms.push_back(norm(f, tol));
  if (distance(product(out), m) > kVerifyEps * (1.0 + m.scale())) {
    throw Error(Errc::IllConditioned, "factor product does not reproduce the input");
  }
  return out;
}

/// Norm factors arranged as the plan prescribes.
inline std::vector<DualPoly> plan_norms(const DQPoly& m, const FactorPlan& plan, const Tolerance& tol = {}) {
  auto monic_m = normalize_monic(m, tol).second;
  auto norms = quadratic_norm_factors(monic_m, plan.splits, tol);
  if (plan.ordering.empty()) return norms;
  std::vector<std::size_t> check = plan.ordering;
  std::sort(check.begin(), check.end());
  for (std::size_t n = 0; n < check.size(); ++n) {
    if (check.size() != norms.size() || check[n] != n) {
      throw Error(Errc::InfeasiblePlan, "ordering is not a permutation of the norm factors");
    }
  }
  std::vector<DualPoly> ordered;
  for (std::size_t idx : plan.ordering) ordered.push_back(norms[idx]);
  return ordered;
}

inline LinearFactorization rfactor(const DQPoly& m, const FactorPlan& plan, const Tolerance& tol = {}) {
  FactorabilityReport report = can_factor(m, tol);
  if (!report.factorable) throw Error(Errc::NotFactorizable, report.diagnosis);
  return rfactor(m, plan_norms(m, plan, tol), tol);
}

/// Factorization with translational factors c_i + eps d_i extracted first
/// (they end up rightmost), then the remaining part.
inline LinearFactorization factor_translational(const DQPoly& m, const Tolerance& tol = {}) {
  auto monic_m = normalize_monic(m, tol).second;
  auto primal_info = detail::analyse_primal(monic_m, tol);
  if (detail::has_quadratic(primal_info.factors)) {
    throw Error(Errc::PrimalHasRealFactor, "primal part has an irreducible quadratic real factor");
  }
  if (detail::has_repeated(primal_info.factors)) {
    throw Error(Errc::RepeatedLinearPrimal, "primal part has a repeated real linear factor");
  }
  FactorabilityReport report = can_factor(m, tol);
  if (!report.factorable) throw Error(Errc::NotFactorizable, report.diagnosis);

  std::vector<DualPoly> rest;
  std::vector<DualPoly> translational;
  for (auto& q : quadratic_norm_factors(monic_m, {}, tol)) {
    RealPoly f = primal(q);
    double disc = f[1] * f[1] - 4.0 * f[0];
    (std::abs(disc) <= tol.cluster_eps * (1.0 + f.scale()) ? translational : rest).push_back(q);
  }
  rest.insert(rest.end(), translational.begin(), translational.end());
  return rfactor(m, rest, tol);
}

namespace detail {

inline bool same_factorization(const LinearFactorization& a, const LinearFactorization& b, double eps) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t n = 0; n < a.factors.size(); ++n) {
    if (distance(a.factors[n], b.factors[n]) > eps) return false;
  }
  return true;
}

inline std::vector<double> flatten(const LinearFactorization& lf) {
  std::vector<double> out;
  for (const auto& f : lf.factors) {
    for (const auto& c : f.coeffs()) {
      auto comps = c.components();
      out.insert(out.end(), comps.begin(), comps.end());
    }
  }
  return out;
}

inline bool same_norm_sequence(const std::vector<DualPoly>& a, const std::vector<DualPoly>& b, double eps) {
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (distance(a[n], b[n]) > eps) return false;
  }
  return true;
}

}  // namespace detail

/// Distinct factorizations of m: every ordering of the quadratic norm factors
/// and, where a primal factor is repeated, extremal and randomly sampled
/// members of the infinite family of splits. max_count == 0 means no cap.
/// The result is sorted canonically.
inline std::vector<LinearFactorization> enumerate_factorizations(const DQPoly& m, std::size_t max_count,
                                                                 std::size_t family_samples,
                                                                 const Tolerance& tol = {}) {
  constexpr double dedup_eps = 1e-6;
  FactorabilityReport report = can_factor(m, tol);
  if (!report.factorable) return {};
  auto monic_m = normalize_monic(m, tol).second;
  DualFactorization df = factor_dual(norm(monic_m, tol), {}, tol);

  std::vector<std::vector<std::vector<RealPoly>>> split_choices{{}};
  std::mt19937 rng(0x5eedu);
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  for (std::size_t g = 0; g < df.groups.size(); ++g) {
    const auto& group = df.groups[g];
    const int n = group.primal.multiplicity;
    if (n < 2 || group.primal.poly.degree() < 2) continue;
    for (int hot = 0; hot < n; ++hot) {
      std::vector<std::vector<RealPoly>> splits(df.groups.size());
      splits[g].assign(static_cast<std::size_t>(n), RealPoly{});
      splits[g][static_cast<std::size_t>(hot)] = group.lambda;
      split_choices.push_back(splits);
    }
    for (std::size_t s = 0; s < family_samples; ++s) {
      std::vector<std::vector<RealPoly>> splits(df.groups.size());
      auto parts = even_split(group.lambda, n);
      RealPoly drift;
      for (int k = 0; k + 1 < n; ++k) {
        RealPoly mu{unit(rng), unit(rng)};
        parts[static_cast<std::size_t>(k)] += mu;
        drift += mu;
      }
      parts.back() -= drift;
      splits[g] = parts;
      split_choices.push_back(splits);
    }
  }

  std::vector<LinearFactorization> found;
  for (const auto& splits : split_choices) {
    auto norms = quadratic_norm_factors(monic_m, splits, tol);
    std::vector<std::size_t> perm(norms.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<DualPoly>> tried;
    do {
      std::vector<DualPoly> ordered;
      for (std::size_t idx : perm) ordered.push_back(norms[idx]);
      bool seen = std::any_of(tried.begin(), tried.end(),
                              [&](const auto& t) { return detail::same_norm_sequence(t, ordered, dedup_eps); });
      if (seen) continue;
      tried.push_back(ordered);
      try {
        LinearFactorization lf = rfactor(m, ordered, tol);
        bool duplicate = std::any_of(found.begin(), found.end(),
                                     [&](const auto& f) { return detail::same_factorization(f, lf, dedup_eps); });
        if (!duplicate) found.push_back(std::move(lf));
      } catch (const Error& e) {
        if (e.code() != Errc::InfeasiblePlan && e.code() != Errc::NonInvertibleRemainder) throw;
      }
      if (max_count != 0 && found.size() >= max_count) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (max_count != 0 && found.size() >= max_count) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return detail::flatten(a) < detail::flatten(b);
  });
  return found;
}

}  // namespace dqf
