#pragma once

// Factorization of monic real polynomials into pairwise coprime, monic,
// irreducible linear and quadratic factors with multiplicities.
//
// Roots come from the eigenvalues of the companion matrix. Numerically
// repeated roots are grouped in two stages: a coarse grouping by proximity,
// then acceptance of a group as one root of multiplicity m only if its spread
// is within the perturbation radius expected for an m-fold root (or within
// cluster_eps). Accepted centroids are Newton-polished on the (m-1)-th
// derivative, where the root is simple.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <tuple>
#include <vector>

#include <Eigen/Eigenvalues>

#include "dqf/error.hpp"
#include "dqf/poly.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

struct IrreducibleFactor {
  RealPoly poly;  // monic, degree 1, or degree 2 with negative discriminant
  int multiplicity = 1;
};

struct RealFactorization {
  std::vector<IrreducibleFactor> factors;
  double residual = 0.0;  // max coefficient deviation of the re-expanded product
};

namespace detail {

inline std::vector<std::complex<double>> companion_roots(const RealPoly& f) {
  const int n = f.degree();
  if (n == 1) return {std::complex<double>(-f[0], 0.0)};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int r = 1; r < n; ++r) c(r, r - 1) = 1.0;
  for (int r = 0; r < n; ++r) c(r, n - 1) = -f[r];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  if (solver.info() != Eigen::Success) throw Error(Errc::IllConditioned, "companion eigenvalue solver failed");
  std::vector<std::complex<double>> roots(n);
  for (int r = 0; r < n; ++r) roots[r] = solver.eigenvalues()[r];
  return roots;
}

inline RealPoly nth_derivative(RealPoly f, int order) {
  for (int k = 0; k < order; ++k) f = derivative(f);
  return f;
}

// Expected spread of the computed roots around an m-fold root at c.
inline double multiple_root_radius(const RealPoly& f, std::complex<double> c, int m) {
  constexpr double safety = 100.0;
  double abs_c = std::abs(c);
  double rounding = 0.0;
  double power = 1.0;
  for (double a : f.coeffs()) {
    rounding += std::abs(a) * power;
    power *= abs_c;
  }
  rounding *= safety * std::numeric_limits<double>::epsilon();
  double factorial = std::tgamma(m + 1.0);
  double taylor = std::abs(eval(nth_derivative(f, m), c)) / factorial;
  if (taylor == 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(rounding / taylor, 1.0 / m);
}

inline std::complex<double> newton_polish(const RealPoly& g, std::complex<double> z, bool real) {
  RealPoly dg = derivative(g);
  double best = std::abs(eval(g, z));
  for (int it = 0; it < 8 && best > 0.0; ++it) {
    std::complex<double> slope = eval(dg, z);
    if (slope == 0.0) break;
    std::complex<double> next = z - eval(g, z) / slope;
    if (real) next = next.real();
    double value = std::abs(eval(g, next));
    if (!(value < best)) break;
    z = next;
    best = value;
  }
  return z;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline std::vector<std::vector<std::complex<double>>> link_groups(const std::vector<std::complex<double>>& pts,
                                                                   double relative_radius) {
  UnionFind uf(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      double scale = 1.0 + std::max(std::abs(pts[a]), std::abs(pts[b]));
      if (std::abs(pts[a] - pts[b]) <= relative_radius * scale) uf.unite(a, b);
    }
  }
  std::vector<std::vector<std::complex<double>>> groups;
  std::vector<long> slot(pts.size(), -1);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    std::size_t r = uf.find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(pts[a]);
  }
  return groups;
}

struct RootCluster {
  std::complex<double> center;
  int multiplicity;
};

inline std::complex<double> centroid(const std::vector<std::complex<double>>& pts) {
  std::complex<double> sum = 0.0;
  for (auto z : pts) sum += z;
  return sum / static_cast<double>(pts.size());
}

inline std::vector<RootCluster> cluster_roots(const RealPoly& f, const std::vector<std::complex<double>>& roots,
                                              const Tolerance& tol) {
  constexpr double coarse = 1e-2;
  std::vector<RootCluster> out;
  for (const auto& group : link_groups(roots, coarse)) {
    std::complex<double> c = centroid(group);
    int m = static_cast<int>(group.size());
    double spread = 0.0;
    for (auto z : group) spread = std::max(spread, std::abs(z - c));
    double accept = std::max(tol.cluster_eps * (1.0 + std::abs(c)), multiple_root_radius(f, c, m));
    if (m == 1 || spread <= accept) {
      out.push_back({c, m});
      continue;
    }
    for (const auto& sub : link_groups(group, tol.cluster_eps)) {
      out.push_back({centroid(sub), static_cast<int>(sub.size())});
    }
  }
  return out;
}

}  // namespace detail

/// Canonical order: ascending by (degree, constant coefficient, linear coefficient).
inline bool canonical_less(const RealPoly& a, const RealPoly& b) {
  return std::make_tuple(a.degree(), a[0], a[1]) < std::make_tuple(b.degree(), b[0], b[1]);
}

inline RealPoly expand(const RealFactorization& rf) {
  RealPoly out{1.0};
  for (const auto& f : rf.factors) out = out * pow(f.poly, static_cast<unsigned>(f.multiplicity));
  return out;
}

/// Factors a monic real polynomial of degree >= 1 (a non-monic input is
/// normalized first).
inline RealFactorization factor_real(const RealPoly& input, const Tolerance& tol = {}) {
  RealPoly f = monic(input.trimmed(tol));
  if (f.degree() < 1) throw std::invalid_argument("factor_real needs a polynomial of degree >= 1");

  auto roots = detail::companion_roots(f);
  auto clusters = detail::cluster_roots(f, roots, tol);

  RealFactorization rf;
  int degree_count = 0;
  for (auto& cl : clusters) {
    double scale = 1.0 + std::abs(cl.center);
    bool real = std::abs(cl.center.imag()) <= tol.cluster_eps * scale;
    if (!real && cl.center.imag() < 0.0) continue;  // represented by its conjugate
    if (real) cl.center = cl.center.real();
    RealPoly g = detail::nth_derivative(f, cl.multiplicity - 1);
    std::complex<double> z = detail::newton_polish(g, cl.center, real);
    if (real) {
      rf.factors.push_back({RealPoly{-z.real(), 1.0}, cl.multiplicity});
      degree_count += cl.multiplicity;
    } else {
      rf.factors.push_back({RealPoly{std::norm(z), -2.0 * z.real(), 1.0}, cl.multiplicity});
      degree_count += 2 * cl.multiplicity;
    }
  }
  if (degree_count != f.degree()) {
    throw Error(Errc::IllConditioned, "complex roots could not be paired with their conjugates");
  }
  std::sort(rf.factors.begin(), rf.factors.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) { return canonical_less(a.poly, b.poly); });

  rf.residual = distance(expand(rf), f);
  if (rf.residual > 1e-7 * (1.0 + f.scale())) {
    throw Error(Errc::IllConditioned, "factorization does not reproduce the input polynomial");
  }
  return rf;
}

/// Product of the distinct irreducible factors.
inline RealPoly squarefree_part(const RealFactorization& rf) {
  RealPoly out{1.0};
  for (const auto& f : rf.factors) out = out * f.poly;
  return out;
}

/// Product of N^(n-1) over the factors N of multiplicity n.
inline RealPoly multiplicity_excess(const RealFactorization& rf) {
  RealPoly out{1.0};
  for (const auto& f : rf.factors) out = out * pow(f.poly, static_cast<unsigned>(f.multiplicity - 1));
  return out;
}

}  // namespace dqf
