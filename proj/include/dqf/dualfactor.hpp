#pragma once

// Factorization of monic dual-number polynomials f + eps g into monic factors
// N + eps lambda with irreducible primal part N and deg(lambda) < deg(N).
//
// Such a factorization exists iff prod N_i^(n_i - 1) divides g. After pulling
// that factor out, the lambda_i solve sum lambda_i B_i = lambda with
// B_i = prod_{j != i} N_j; they are found by evaluating at a root z_i of each
// N_i, where every B_j with j != i vanishes. A factor of multiplicity n then
// splits as N^n + eps N^(n-1) lambda_i = prod_k (N + eps lambda_ik) for any
// parts lambda_ik summing to lambda_i.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "dqf/error.hpp"
#include "dqf/poly.hpp"
#include "dqf/realfactor.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

struct DualQuadFactor {
  DualPoly poly;    // primal + eps * lambda
  RealPoly primal;  // irreducible monic, degree 1 or 2
  RealPoly lambda;  // deg(lambda) < deg(primal)
};

inline DualQuadFactor make_dual_factor(const RealPoly& primal, const RealPoly& lambda) {
  return {make_dual(primal, lambda), primal, lambda};
}

/// One irreducible primal factor together with its combined dual part lambda_i.
struct DualFactorGroup {
  IrreducibleFactor primal;
  RealPoly lambda;
};

struct DualFactorization {
  std::vector<DualQuadFactor> factors;  // product reproduces the input
  RealPoly pulled_real;                 // prod N_i^(n_i - 1)
  std::vector<DualFactorGroup> groups;  // canonical order of the primal factors
};

struct DualDivisibility {
  bool factorable = false;
  RealPoly witness;                // g / prod N_i^(n_i - 1) when factorable
  std::vector<RealPoly> failing;   // N_i whose power N_i^(n_i - 1) does not divide g
  RealFactorization primal;
};

inline DualDivisibility can_factor_dual(const DualPoly& p, const Tolerance& tol = {}) {
  DualDivisibility out;
  RealPoly f = primal(p);
  RealPoly g = dual(p);
  out.primal = factor_real(f, tol);
  RealPoly excess = multiplicity_excess(out.primal);
  auto division = right_divide(g, excess, tol);
  double scale = 1.0 + std::max(g.scale(), f.scale());
  out.factorable = division.remainder.scale() <= tol.zero_eps * scale;
  if (out.factorable) {
    out.witness = division.quotient;
    return out;
  }
  for (const auto& factor : out.primal.factors) {
    if (factor.multiplicity < 2) continue;
    RealPoly power = pow(factor.poly, static_cast<unsigned>(factor.multiplicity - 1));
    if (right_divide(g, power, tol).remainder.scale() > tol.zero_eps * scale) out.failing.push_back(factor.poly);
  }
  return out;
}

inline std::vector<RealPoly> even_split(const RealPoly& lambda, int n) {
  return std::vector<RealPoly>(static_cast<std::size_t>(n), (1.0 / n) * lambda);
}

/// Factors N + eps lambda_k, one per part, realizing N^n + eps N^(n-1) lambda.
inline std::vector<DualQuadFactor> split_multiplicity(const IrreducibleFactor& factor, const RealPoly& lambda,
                                                      std::span<const RealPoly> parts, const Tolerance& tol = {}) {
  if (static_cast<int>(parts.size()) != factor.multiplicity) {
    throw Error(Errc::WeightsMismatch, "expected " + std::to_string(factor.multiplicity) + " parts, got " +
                                           std::to_string(parts.size()));
  }
  RealPoly sum;
  std::vector<DualQuadFactor> out;
  for (const RealPoly& part : parts) {
    if (part.trimmed(tol).degree() >= factor.poly.degree()) {
      throw Error(Errc::WeightsMismatch, "split part degree must be below the factor degree");
    }
    sum += part;
    out.push_back(make_dual_factor(factor.poly, part));
  }
  if (distance(sum, lambda) > tol.zero_eps * (1.0 + lambda.scale())) {
    throw Error(Errc::WeightsMismatch, "split parts do not sum to lambda");
  }
  return out;
}

/// splits[i], when present and non-empty, gives the parts for the i-th
/// primal factor in canonical order; otherwise the even split is used.
inline DualFactorization factor_dual(const DualPoly& p, const std::vector<std::vector<RealPoly>>& splits = {},
                                     const Tolerance& tol = {}) {
  DualDivisibility check = can_factor_dual(p, tol);
  if (!check.factorable) {
    throw Error(Errc::NotFactorizable, "dual part is not divisible by the multiplicity excess of the primal part");
  }
  const RealFactorization& rf = check.primal;
  DualFactorization out;
  out.pulled_real = multiplicity_excess(rf);
  const RealPoly& lambda = check.witness;
  const RealPoly base = squarefree_part(rf);

  RealPoly recombined;
  for (std::size_t i = 0; i < rf.factors.size(); ++i) {
    const RealPoly& n_i = rf.factors[i].poly;
    RealPoly b_i = right_divide(base, n_i, tol).quotient;
    std::complex<double> z;
    if (n_i.degree() == 1) {
      z = -n_i[0];
    } else {
      double b = n_i[1];
      double c = n_i[0];
      z = std::complex<double>(-b / 2.0, std::sqrt(std::max(0.0, c - b * b / 4.0)));
    }
    std::complex<double> denom = eval(b_i, z);
    if (std::abs(denom) <= tol.zero_eps * (1.0 + b_i.scale())) {
      throw Error(Errc::SingularSystem, "primal factors are not coprime");
    }
    std::complex<double> w = eval(lambda, z) / denom;
    RealPoly lambda_i;
    if (n_i.degree() == 1) {
      lambda_i = RealPoly{w.real()};
    } else {
      double slope = w.imag() / z.imag();
      lambda_i = RealPoly{w.real() - slope * z.real(), slope};
    }
    recombined += lambda_i * b_i;
    out.groups.push_back({rf.factors[i], lambda_i});
  }
  if (distance(recombined, lambda) > 1e-8 * (1.0 + lambda.scale())) {
    throw Error(Errc::IllConditioned, "interpolated lambda_i do not recombine to lambda");
  }

  for (std::size_t i = 0; i < out.groups.size(); ++i) {
    const auto& group = out.groups[i];
    std::vector<RealPoly> parts = (i < splits.size() && !splits[i].empty())
                                      ? splits[i]
                                      : even_split(group.lambda, group.primal.multiplicity);
    for (auto& f : split_multiplicity(group.primal, group.lambda, parts, tol)) out.factors.push_back(std::move(f));
  }

  DualPoly product{DualNumber(1.0)};
  for (const auto& f : out.factors) product = product * f.poly;
  if (distance(product, p) > 1e-8 * (1.0 + p.scale())) {
    throw Error(Errc::IllConditioned, "dual factorization does not reproduce the input");
  }
  return out;
}

}  // namespace dqf
