#pragma once

// Exact calculus on functions P(x) exp(-a |x|^2) over R^{p+1}, where P is a
// polynomial with C_{p+q}-valued coefficients. The family is closed under
// partial derivatives, the Dirac operator D_x, the Laplacian, multiplication
// by coordinates, the unitary Fourier transform and the heat semigroup.
//
// Coefficients multiply the monomials from the right: P(x) = sum_k x^k c_k.
// Differential operators with Clifford symbols (D_x) act from the left.

#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "gsm/clifford.hpp"
#include "gsm/multi_index.hpp"

namespace gsm {

class CliffordPolynomial {
 public:
  using TermMap = std::map<MultiIndex, Multivector>;

  CliffordPolynomial() = default;
  explicit CliffordPolynomial(Signature sig) : sig_(sig) { sig_.validate(); }

  static CliffordPolynomial constant(Signature sig, const Multivector& c) {
    CliffordPolynomial p(sig);
    p.add_term(MultiIndex::zero(sig.x_dim()), c);
    return p;
  }
  static CliffordPolynomial monomial(Signature sig, const MultiIndex& k) {
    CliffordPolynomial p(sig);
    p.add_term(k, Multivector::scalar(sig, 1.0));
    return p;
  }
  /// x_i as a polynomial, 0 <= i <= p.
  static CliffordPolynomial coordinate(Signature sig, int i) {
    return monomial(sig, MultiIndex::unit(sig.x_dim(), i));
  }

  Signature sig() const noexcept { return sig_; }
  int dim() const noexcept { return sig_.x_dim(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  int degree() const noexcept {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.total());
    return d;
  }

  /// Adds x^k c; cancelled terms are removed.
  void add_term(const MultiIndex& k, const Multivector& c) {
    if (k.dim() != dim()) throw ContractViolation("polynomial term has wrong number of variables");
    if (!(c.sig() == sig_)) throw ContractViolation("polynomial coefficient signature mismatch");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Multivector coefficient(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Multivector(sig_) : it->second;
  }

  Multivector evaluate(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim())) throw ContractViolation("polynomial evaluated at point of wrong dimension");
    Multivector out(sig_);
    for (const auto& [k, c] : terms_) {
      double m = 1.0;
      for (int i = 0; i < k.dim(); ++i) m *= std::pow(x[static_cast<std::size_t>(i)], k[i]);
      out.add_scaled(c, m);
    }
    return out;
  }

  CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }

  CliffordPolynomial scaled(cplx s) const {
    CliffordPolynomial out(sig_);
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
  }

  /// c P, coefficientwise left multiplication.
  CliffordPolynomial left_multiplied(const Multivector& c) const {
    CliffordPolynomial out(sig_);
    for (const auto& [k, v] : terms_) out.add_term(k, c * v);
    return out;
  }
  /// P c
  CliffordPolynomial right_multiplied(const Multivector& c) const {
    CliffordPolynomial out(sig_);
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
  }

  CliffordPolynomial derivative(int axis) const {
    check_axis(axis);
    CliffordPolynomial out(sig_);
    for (const auto& [k, c] : terms_) {
      if (k[axis] == 0) continue;
      MultiIndex kk = k;
      kk[axis] -= 1;
      out.add_term(kk, c * static_cast<double>(k[axis]));
    }
    return out;
  }

  CliffordPolynomial times_coordinate(int axis) const {
    check_axis(axis);
    CliffordPolynomial out(sig_);
    for (const auto& [k, c] : terms_) {
      MultiIndex kk = k;
      kk[axis] += 1;
      out.add_term(kk, c);
    }
    return out;
  }

  /// Polynomial product; coefficients multiply in the order (this, other).
  CliffordPolynomial operator*(const CliffordPolynomial& o) const {
    require_same(o);
    CliffordPolynomial out(sig_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) out.add_term(ka + kb, ca * cb);
    return out;
  }

  /// P(-x)
  CliffordPolynomial parity_flipped() const {
    CliffordPolynomial out(sig_);
    for (const auto& [k, c] : terms_) out.add_term(k, (k.total() % 2) ? -c : c);
    return out;
  }

 private:
  void require_same(const CliffordPolynomial& o) const {
    if (!(sig_ == o.sig_)) throw ContractViolation("polynomial signature mismatch");
  }
  void check_axis(int axis) const {
    if (axis < 0 || axis >= dim()) throw ContractViolation("axis index out of range");
  }

  Signature sig_;
  TermMap terms_;
};

/// P(x) exp(-rate |x|^2); rate == 0 means a pure polynomial.
class HermiteGaussian {
 public:
  HermiteGaussian() = default;
  HermiteGaussian(CliffordPolynomial poly, double rate) : poly_(std::move(poly)), rate_(rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) throw ContractViolation("Gaussian rate must be finite and >= 0");
  }

  /// c exp(-rate |x|^2)
  static HermiteGaussian gaussian(Signature sig, double rate, cplx c = 1.0) {
    return {CliffordPolynomial::constant(sig, Multivector::scalar(sig, c)), rate};
  }

  const CliffordPolynomial& poly() const noexcept { return poly_; }
  double rate() const noexcept { return rate_; }
  Signature sig() const noexcept { return poly_.sig(); }
  int dim() const noexcept { return poly_.dim(); }

  Multivector evaluate(std::span<const double> x) const {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    return poly_.evaluate(x) * std::exp(-rate_ * r2);
  }

  HermiteGaussian& operator+=(const HermiteGaussian& o) {
    require_rate(o);
    poly_ += o.poly_;
    return *this;
  }
  HermiteGaussian& operator-=(const HermiteGaussian& o) {
    require_rate(o);
    poly_ -= o.poly_;
    return *this;
  }
  friend HermiteGaussian operator+(HermiteGaussian a, const HermiteGaussian& b) { return a += b; }
  friend HermiteGaussian operator-(HermiteGaussian a, const HermiteGaussian& b) { return a -= b; }

  HermiteGaussian scaled(cplx s) const { return {poly_.scaled(s), rate_}; }
  HermiteGaussian left_multiplied(const Multivector& c) const { return {poly_.left_multiplied(c), rate_}; }
  HermiteGaussian right_multiplied(const Multivector& c) const { return {poly_.right_multiplied(c), rate_}; }

 private:
  void require_rate(const HermiteGaussian& o) const {
    if (o.rate_ != rate_) throw NotInFamily("sum of Gaussians with different rates");
  }

  CliffordPolynomial poly_;
  double rate_ = 0.0;
};

/// d/dx_i (P e^{-a|x|^2}) = (d_i P - 2 a x_i P) e^{-a|x|^2}.
inline HermiteGaussian partial_derivative(const HermiteGaussian& f, int axis) {
  CliffordPolynomial d = f.poly().derivative(axis);
  if (f.rate() != 0.0) d -= f.poly().times_coordinate(axis).scaled(2.0 * f.rate());
  return {std::move(d), f.rate()};
}

/// D_x f = sum_{i=0}^p e_i d_i f, e_0 = 1.
inline HermiteGaussian dirac_dx(const HermiteGaussian& f) {
  const Signature sig = f.sig();
  HermiteGaussian out(CliffordPolynomial(sig), f.rate());
  for (int i = 0; i < sig.x_dim(); ++i)
    out += partial_derivative(f, i).left_multiplied(Multivector::generator(sig, i));
  return out;
}

/// bar(D_x) f = d_0 f - sum_{i=1}^p e_i d_i f. Satisfies bar(D_x) D_x = Laplacian.
inline HermiteGaussian conjugate_dirac_dx(const HermiteGaussian& f) {
  const Signature sig = f.sig();
  HermiteGaussian out = partial_derivative(f, 0);
  for (int i = 1; i < sig.x_dim(); ++i)
    out -= partial_derivative(f, i).left_multiplied(Multivector::generator(sig, i));
  return out;
}

inline HermiteGaussian laplacian(const HermiteGaussian& f) {
  HermiteGaussian out(CliffordPolynomial(f.sig()), f.rate());
  for (int i = 0; i < f.dim(); ++i) out += partial_derivative(partial_derivative(f, i), i);
  return out;
}

/// x_l f
inline HermiteGaussian multiply_coordinate(const HermiteGaussian& f, int axis) {
  return {f.poly().times_coordinate(axis), f.rate()};
}

/// x f with x = sum_l e_l x_l the paravector variable, multiplying from the left.
inline HermiteGaussian multiply_paravector(const HermiteGaussian& f) {
  const Signature sig = f.sig();
  HermiteGaussian out(CliffordPolynomial(sig), f.rate());
  for (int l = 0; l < sig.x_dim(); ++l)
    out += multiply_coordinate(f, l).left_multiplied(Multivector::generator(sig, l));
  return out;
}

/// f(-x)
inline HermiteGaussian parity_flip(const HermiteGaussian& f) { return {f.poly().parity_flipped(), f.rate()}; }

/// Unitary Fourier transform (2 pi)^{-d/2} int e^{-i<xi,x>} f(x) dx, d = p + 1.
///
/// x^k e^{-a|x|^2} maps to (i d_xi)^k [(2a)^{-d/2} e^{-|xi|^2/(4a)}].
inline HermiteGaussian fourier_transform(const HermiteGaussian& f) {
  if (f.rate() <= 0.0) throw NotInFamily("Fourier transform of a pure polynomial");
  const Signature sig = f.sig();
  const int d = f.dim();
  const double a = f.rate();
  const HermiteGaussian base = HermiteGaussian::gaussian(sig, 1.0 / (4.0 * a), std::pow(2.0 * a, -0.5 * d));
  HermiteGaussian out(CliffordPolynomial(sig), base.rate());
  // Derivatives of the base Gaussian are shared between monomials.
  std::map<MultiIndex, HermiteGaussian> cache;
  cache.emplace(MultiIndex::zero(d), base);
  auto derivative_of_base = [&](const MultiIndex& k, auto&& self) -> const HermiteGaussian& {
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    int axis = 0;
    while (k[axis] == 0) ++axis;
    MultiIndex lower = k;
    lower[axis] -= 1;
    HermiteGaussian g = partial_derivative(self(lower, self), axis);
    return cache.emplace(k, std::move(g)).first->second;
  };
  static constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [k, c] : f.poly().terms()) {
    const HermiteGaussian& g = derivative_of_base(k, derivative_of_base);
    out += g.right_multiplied(c).scaled(kIPowers[k.total() % 4]);
  }
  return out;
}

inline HermiteGaussian inverse_fourier_transform(const HermiteGaussian& f) {
  return parity_flip(fourier_transform(f));
}

/// exp(t Delta / 2) f, the heat flow at time t, computed as the Fourier
/// multiplier e^{-t |xi|^2 / 2}.
inline HermiteGaussian heat_semigroup(const HermiteGaussian& f, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ContractViolation("heat_semigroup: time must be finite and > 0");
  if (f.rate() <= 0.0) throw NotInFamily("heat_semigroup of a pure polynomial");
  HermiteGaussian spectrum = fourier_transform(f);
  HermiteGaussian damped(spectrum.poly(), spectrum.rate() + 0.5 * t);
  return inverse_fourier_transform(damped);
}

/// Physicists' Hermite polynomial H_m(s) as coefficient list, via
/// H_{m+1} = 2 s H_m - 2 m H_{m-1}.
inline std::vector<double> hermite_coefficients_1d(int m) {
  std::vector<double> prev{1.0};
  if (m == 0) return prev;
  std::vector<double> cur{0.0, 2.0};
  for (int j = 1; j < m; ++j) {
    std::vector<double> next(static_cast<std::size_t>(j) + 2, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * j * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// H_k(x) = H_{k_0}(x_0) ... H_{k_p}(x_p), scalar coefficients.
inline CliffordPolynomial hermite_polynomial(Signature sig, const MultiIndex& k) {
  if (k.dim() != sig.x_dim()) throw ContractViolation("hermite_polynomial: multi-index dimension must be p + 1");
  CliffordPolynomial out = CliffordPolynomial::constant(sig, Multivector::scalar(sig, 1.0));
  for (int axis = 0; axis < k.dim(); ++axis) {
    const auto h = hermite_coefficients_1d(k[axis]);
    CliffordPolynomial factor(sig);
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] == 0.0) continue;
      MultiIndex e = MultiIndex::zero(k.dim());
      e[axis] = static_cast<int>(j);
      factor.add_term(e, Multivector::scalar(sig, h[j]));
    }
    out = out * factor;
  }
  return out;
}

/// Hermite function phi_k = H_k(x) e^{-|x|^2/2}.
inline HermiteGaussian phi_k(Signature sig, const MultiIndex& k) { return {hermite_polynomial(sig, k), 0.5}; }

/// x^k e^{-rate |x|^2}
inline HermiteGaussian monomial_gaussian(Signature sig, const MultiIndex& k, double rate) {
  return {CliffordPolynomial::monomial(sig, k), rate};
}

namespace detail {

/// int_R s^m e^{-c s^2} ds
inline double gaussian_moment_1d(int m, double c) {
  if (m % 2) return 0.0;
  return std::tgamma(0.5 * (m + 1)) * std::pow(c, -0.5 * (m + 1));
}

inline double gaussian_moment(const MultiIndex& k, double c) {
  double v = 1.0;
  for (int i = 0; i < k.dim(); ++i) {
    v *= gaussian_moment_1d(k[i], c);
    if (v == 0.0) return 0.0;
  }
  return v;
}

}  // namespace detail

/// Clifford-valued pairing int f(x)^dagger g(x) dx, evaluated from closed-form
/// Gaussian moments.
inline Multivector lebesgue_inner_product_clifford(const HermiteGaussian& f, const HermiteGaussian& g) {
  if (!(f.sig() == g.sig())) throw ContractViolation("inner product: signature mismatch");
  const double c = f.rate() + g.rate();
  if (!(c > 0.0)) throw NotInFamily("inner product of non-decaying functions");
  Multivector out(f.sig());
  for (const auto& [ka, ca] : f.poly().terms()) {
    const Multivector cad = hermitian_conjugate(ca);
    for (const auto& [kb, cb] : g.poly().terms()) {
      const double m = detail::gaussian_moment(ka + kb, c);
      if (m != 0.0) out.add_scaled(cad * cb, m);
    }
  }
  return out;
}

/// <f, g> = int Sc(f(x)^dagger g(x)) dx
inline cplx lebesgue_inner_product(const HermiteGaussian& f, const HermiteGaussian& g) {
  if (!(f.sig() == g.sig())) throw ContractViolation("inner product: signature mismatch");
  const double c = f.rate() + g.rate();
  if (!(c > 0.0)) throw NotInFamily("inner product of non-decaying functions");
  cplx out{};
  for (const auto& [ka, ca] : f.poly().terms())
    for (const auto& [kb, cb] : g.poly().terms()) {
      const double m = detail::gaussian_moment(ka + kb, c);
      if (m != 0.0) out += inner_product(ca, cb) * m;
    }
  return out;
}

/// pi^{d/2} 2^{|k|} k!, the squared L^2 norm of phi_k.
inline double hermite_function_norm_sq(const MultiIndex& k) {
  return std::pow(std::numbers::pi, 0.5 * k.dim()) * std::ldexp(1.0, k.total()) * k.factorial();
}

}  // namespace gsm
