#pragma once

// Dense univariate polynomials with a central indeterminate t over the
// coefficient rings of algebra.hpp. Coefficients are stored in ascending
// degree; ring operations strip exactly-zero leading coefficients, while
// tolerance-aware trimming is explicit (trimmed()).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dqf/algebra.hpp"
#include "dqf/error.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { strip(); }
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

  static Polynomial constant(const R& c) { return Polynomial(std::vector<R>{c}); }
  static Polynomial monomial(const R& c, std::size_t n) {
    std::vector<R> v(n + 1, R{});
    v[n] = c;
    return Polynomial(std::move(v));
  }
  /// The indeterminate t.
  static Polynomial t() { return monomial(R(1.0), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<R>& coeffs() const& { return coeffs_; }
  // by value on temporaries, so `for (auto c : f(x).coeffs())` stays valid
  std::vector<R> coeffs() && { return std::move(coeffs_); }

  R operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : R{}; }
  const R& leading() const { return coeffs_.back(); }

  void set(std::size_t n, const R& value) {
    if (n >= coeffs_.size()) coeffs_.resize(n + 1, R{});
    coeffs_[n] = value;
    strip();
  }

  double scale() const {
    double s = 0.0;
    for (const R& c : coeffs_) s = std::max(s, magnitude(c));
    return s;
  }

  /// Drops leading coefficients of magnitude <= zero_eps * (1 + scale()).
  Polynomial trimmed(const Tolerance& tol) const {
    Polynomial out = *this;
    double threshold = tol.zero_eps * (1.0 + scale());
    while (!out.coeffs_.empty() && magnitude(out.coeffs_.back()) <= threshold) out.coeffs_.pop_back();
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (R& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R{});
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    strip();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R{});
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    strip();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  /// Convolution; coefficient products keep operand order.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const R& c, const Polynomial& p) {
    std::vector<R> out(p.coeffs_);
    for (R& x : out) x = c * x;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& p, const R& c) {
    std::vector<R> out(p.coeffs_);
    for (R& x : out) x = x * c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(double s, const Polynomial& p)
    requires(!std::is_same_v<R, double>)
  {
    std::vector<R> out(p.coeffs_);
    for (R& x : out) x = s * x;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void strip() {
    while (!coeffs_.empty() && coeffs_.back() == R{}) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using RealPoly = Polynomial<double>;
using DualPoly = Polynomial<DualNumber>;
using QuatPoly = Polynomial<Quaternion>;
using DQPoly = Polynomial<DualQuaternion>;

template <class R>
double magnitude(const Polynomial<R>& p) {
  return p.scale();
}

/// Largest coefficient-component difference between two polynomials.
template <class R>
double distance(const Polynomial<R>& a, const Polynomial<R>& b) {
  return (a - b).scale();
}

template <class R>
Polynomial<R> pow(const Polynomial<R>& p, unsigned n) {
  Polynomial<R> out = Polynomial<R>::constant(R(1.0));
  for (unsigned k = 0; k < n; ++k) out = out * p;
  return out;
}

template <class T, class R, class F>
Polynomial<T> transform(const Polynomial<R>& p, F f) {
  std::vector<T> out;
  out.reserve(p.size());
  for (const R& c : p.coeffs()) out.push_back(f(c));
  return Polynomial<T>(std::move(out));
}

// --- embeddings and projections -----------------------------------------

inline DQPoly to_dq(const RealPoly& p) {
  return transform<DualQuaternion>(p, [](double c) { return DualQuaternion(c); });
}
inline DQPoly to_dq(const DualPoly& p) {
  return transform<DualQuaternion>(p, [](const DualNumber& c) { return DualQuaternion(c); });
}
inline DQPoly to_dq(const QuatPoly& p) {
  return transform<DualQuaternion>(p, [](const Quaternion& c) { return DualQuaternion(c); });
}
inline DualPoly to_dual(const RealPoly& p) {
  return transform<DualNumber>(p, [](double c) { return DualNumber(c); });
}
inline QuatPoly to_quat(const RealPoly& p) {
  return transform<Quaternion>(p, [](double c) { return Quaternion(c); });
}

inline DQPoly make_dq(const QuatPoly& primal, const QuatPoly& dual) {
  std::size_t n = std::max(primal.size(), dual.size());
  std::vector<DualQuaternion> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = DualQuaternion(primal[k], dual[k]);
  return DQPoly(std::move(out));
}
inline DualPoly make_dual(const RealPoly& primal, const RealPoly& dual) {
  std::size_t n = std::max(primal.size(), dual.size());
  std::vector<DualNumber> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = DualNumber(primal[k], dual[k]);
  return DualPoly(std::move(out));
}

inline QuatPoly primal(const DQPoly& m) {
  return transform<Quaternion>(m, [](const DualQuaternion& c) { return c.primal; });
}
inline QuatPoly dual(const DQPoly& m) {
  return transform<Quaternion>(m, [](const DualQuaternion& c) { return c.dual; });
}
inline RealPoly primal(const DualPoly& p) {
  return transform<double>(p, [](const DualNumber& c) { return c.re; });
}
inline RealPoly dual(const DualPoly& p) {
  return transform<double>(p, [](const DualNumber& c) { return c.du; });
}
/// Component n (0 = w, 1 = x, 2 = y, 3 = z) as a real polynomial.
inline RealPoly component(const QuatPoly& p, int n) {
  return transform<double>(p, [n](const Quaternion& c) { return c[n]; });
}
/// The eight real component polynomials, primal (w, x, y, z) then dual.
inline std::vector<RealPoly> components(const DQPoly& m) {
  std::vector<RealPoly> out;
  QuatPoly p = primal(m);
  QuatPoly d = dual(m);
  for (int n = 0; n < 4; ++n) out.push_back(component(p, n));
  for (int n = 0; n < 4; ++n) out.push_back(component(d, n));
  return out;
}

/// t - h
inline DQPoly linear(const DualQuaternion& h) { return DQPoly{-h, DualQuaternion(1.0)}; }

// --- conjugate and norm -------------------------------------------------

inline QuatPoly conj(const QuatPoly& p) {
  return transform<Quaternion>(p, [](const Quaternion& c) { return conj(c); });
}
inline DQPoly conj(const DQPoly& m) {
  return transform<DualQuaternion>(m, [](const DualQuaternion& c) { return conj(c); });
}

/// P conj(P) as a real polynomial.
inline RealPoly norm(const QuatPoly& p, const Tolerance& tol = {}) {
  QuatPoly n = p * conj(p);
  double s = n.scale();
  for (const Quaternion& c : n.coeffs()) {
    if (!tol.negligible(c.x, s) || !tol.negligible(c.y, s) || !tol.negligible(c.z, s)) {
      throw Error(Errc::NormNotScalar, "quaternion polynomial norm has a vector component");
    }
  }
  return component(n, 0);
}

/// M conj(M) as a dual-number polynomial.
inline DualPoly norm(const DQPoly& m, const Tolerance& tol = {}) {
  DQPoly n = m * conj(m);
  double s = n.scale();
  for (const DualQuaternion& c : n.coeffs()) {
    for (int k = 1; k < 4; ++k) {
      if (!tol.negligible(c.primal[k], s) || !tol.negligible(c.dual[k], s)) {
        throw Error(Errc::NormNotScalar, "dual quaternion polynomial norm has a vector component");
      }
    }
  }
  return transform<DualNumber>(n, [](const DualQuaternion& c) { return DualNumber(c.primal.w, c.dual.w); });
}

/// Coefficientwise Study defect P conj(D) + D conj(P), the dual part of the norm.
inline RealPoly study_defect(const DQPoly& m, const Tolerance& tol = {}) { return dual(norm(m, tol)); }

// --- evaluation ---------------------------------------------------------

/// Right evaluation: sum m_n h^n with the powers written right of the coefficients.
template <class R>
R right_eval(const Polynomial<R>& m, const R& h) {
  R acc{};
  R power(1.0);
  for (const R& c : m.coeffs()) {
    acc += c * power;
    power = power * h;
  }
  return acc;
}

/// Left evaluation: sum h^n m_n.
template <class R>
R left_eval(const Polynomial<R>& m, const R& h) {
  R acc{};
  R power(1.0);
  for (const R& c : m.coeffs()) {
    acc += power * c;
    power = power * h;
  }
  return acc;
}

/// Evaluation at a real parameter value; t is central so no side matters.
template <class R>
R eval(const Polynomial<R>& m, double t) {
  R acc{};
  for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it) acc = t * acc + *it;
  return acc;
}
inline double eval(const RealPoly& m, double t) {
  double acc = 0.0;
  for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it) acc = t * acc + *it;
  return acc;
}
inline std::complex<double> eval(const RealPoly& m, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it) acc = z * acc + *it;
  return acc;
}

inline RealPoly derivative(const RealPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<double> out(p.size() - 1);
  for (std::size_t n = 1; n < p.size(); ++n) out[n - 1] = static_cast<double>(n) * p[n];
  return RealPoly(std::move(out));
}

// --- division -----------------------------------------------------------

template <class R>
struct DivisionResult {
  Polynomial<R> quotient;
  Polynomial<R> remainder;
};

/// Right division a = quotient * b + remainder with deg(remainder) < deg(b).
/// The leading coefficient of b has to be invertible.
template <class R>
DivisionResult<R> right_divide(const Polynomial<R>& a, const Polynomial<R>& b, const Tolerance& tol = {}) {
  if (b.is_zero() || !is_invertible(b.leading(), tol)) {
    throw Error(Errc::DivisorNotInvertible, "divisor leading coefficient is not invertible");
  }
  const std::size_t nb = b.size();
  if (a.size() < nb) return {Polynomial<R>{}, a};
  const R lead_inv = inverse(b.leading(), tol);
  std::vector<R> rem = a.coeffs();
  std::vector<R> quot(a.size() - nb + 1, R{});
  for (std::size_t d = a.size() - 1;; --d) {
    R c = rem[d] * lead_inv;
    quot[d - nb + 1] = c;
    for (std::size_t j = 0; j < nb; ++j) rem[d - nb + 1 + j] -= c * b.coeffs()[j];
    rem[d] = R{};
    if (d == nb - 1) break;
  }
  rem.resize(nb - 1);
  return {Polynomial<R>(std::move(quot)), Polynomial<R>(std::move(rem))};
}

/// Whether b divides a, judged by the remainder relative to a's scale.
template <class R>
bool divides(const Polynomial<R>& b, const Polynomial<R>& a, const Tolerance& tol = {}) {
  auto r = right_divide(a, b, tol);
  return r.remainder.scale() <= tol.zero_eps * (1.0 + a.scale());
}

/// Quotient of right division by t - h, where h must be a right zero of m.
inline DQPoly zero_to_factor(const DQPoly& m, const DualQuaternion& h, const Tolerance& tol = {}) {
  DualQuaternion residual = right_eval(m, h);
  double scale = m.scale() * std::pow(std::max(1.0, magnitude(h)), std::max(0, m.degree()));
  if (magnitude(residual) > tol.zero_eps * (1.0 + scale)) {
    throw Error(Errc::NotAZero, "dual quaternion is not a right zero of the polynomial");
  }
  return right_divide(m, linear(h), tol).quotient;
}

// --- real polynomial helpers --------------------------------------------

inline RealPoly monic(const RealPoly& p) {
  if (p.is_zero()) return p;
  return (1.0 / p.leading()) * p;
}

/// Monic polynomial GCD by Euclid's algorithm on monic remainders.
/// Remainders below zero_eps relative to the current dividend count as zero.
inline RealPoly gcd(const RealPoly& a_in, const RealPoly& b_in, const Tolerance& tol = {}) {
  RealPoly a = monic(a_in.trimmed(tol));
  RealPoly b = monic(b_in.trimmed(tol));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    RealPoly r = right_divide(a, b, tol).remainder;
    double threshold = tol.zero_eps * (1.0 + std::max(a.scale(), b.scale()));
    while (!r.is_zero() && std::abs(r.leading()) <= threshold) {
      std::vector<double> c = r.coeffs();
      c.pop_back();
      r = RealPoly(std::move(c));
    }
    a = b;
    b = monic(r);
  }
  return b.is_zero() ? a : RealPoly{1.0};
}

/// Monic greatest common divisor of a list of real polynomials, verified by
/// trial division.
inline RealPoly common_real_factor(const std::vector<RealPoly>& polys, const Tolerance& tol = {}) {
  RealPoly g;
  for (const RealPoly& p : polys) {
    RealPoly q = p.trimmed(tol);
    if (q.is_zero()) continue;
    g = g.is_zero() ? monic(q) : gcd(g, q, tol);
    if (g.degree() == 0) return RealPoly{1.0};
  }
  if (g.is_zero()) throw Error(Errc::IllConditioned, "zero polynomial has no maximal real factor");
  if (g.degree() == 0) return RealPoly{1.0};
  for (const RealPoly& p : polys) {
    RealPoly q = p.trimmed(tol);
    if (q.is_zero()) continue;
    auto r = right_divide(q, g, tol);
    if (r.remainder.scale() > tol.cluster_eps * (1.0 + q.scale())) {
      throw Error(Errc::IllConditioned, "floating point GCD failed verification");
    }
  }
  return g;
}

/// Maximal real polynomial factor (monic) of a quaternion polynomial.
inline RealPoly mrpf(const QuatPoly& p, const Tolerance& tol = {}) {
  std::vector<RealPoly> parts;
  for (int n = 0; n < 4; ++n) parts.push_back(component(p, n));
  return common_real_factor(parts, tol);
}

/// Maximal real polynomial factor (monic) of a dual quaternion polynomial.
inline RealPoly mrpf(const DQPoly& m, const Tolerance& tol = {}) { return common_real_factor(components(m), tol); }

/// Divides every coefficient component by the real polynomial g (assumed to divide exactly).
inline DQPoly divide_real(const DQPoly& m, const RealPoly& g, const Tolerance& tol = {}) {
  return right_divide(m, to_dq(g), tol).quotient;
}
inline QuatPoly divide_real(const QuatPoly& p, const RealPoly& g, const Tolerance& tol = {}) {
  return right_divide(p, to_quat(g), tol).quotient;
}

}  // namespace dqf
