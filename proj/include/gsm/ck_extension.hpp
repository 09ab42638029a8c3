#pragma once

// Generalized partial-slice CK-extension CK[f0] = exp(y D_x) f0 and the
// plane-wave kernel e(x + y, xi) = CK[e^{i<x, xi>}].
//
// Three evaluators:
//  * ck_polynomial: the terminating series for polynomial f0.
//  * delta series: with (y D_x)^2 = -|y|^2 Delta the series splits as
//      CK[f0] = sum_K (-r^2 Delta)^K f0 / (2K)!  +  y D_x sum_K (-r^2 Delta)^K f0 / (2K+1)!,
//    and for f0 = x^k e^{-a|x|^2} the powers of Delta factor through 1D
//    derivative tables of s^{k_j} e^{-a s^2}.
//  * Fourier: CK[f0](x + y) = (2 pi)^{-d/2} int e(x + y, xi) f0^(xi) dxi by
//    Gauss-Hermite quadrature in xi.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gsm/clifford.hpp"
#include "gsm/function_algebra.hpp"
#include "gsm/quadrature.hpp"

namespace gsm {

/// sinh(t) / t, with a Taylor expansion near zero.
inline double sinhc(double t) {
  const double a = std::abs(t);
  if (a < 1e-4) {
    const double t2 = t * t;
    return 1.0 + t2 / 6.0 * (1.0 + t2 / 20.0 * (1.0 + t2 / 42.0 * (1.0 + t2 / 72.0 * (1.0 + t2 / 110.0))));
  }
  return std::sinh(a) / a;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ContractViolation("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// e(x + y, xi) = (cosh t + i (y xi) sinhc(t)) e^{i<x, xi>}, t = |y||xi|, where
/// y xi is the Clifford product of the 1-vector y and the paravector xi.
inline Multivector kernel_e(Signature sig, const SplitPoint& bx, std::span<const double> xi) {
  bx.check(sig);
  if (xi.size() != static_cast<std::size_t>(sig.x_dim())) throw ContractViolation("kernel_e: xi must have p + 1 components");
  const double xin = std::sqrt(dot(xi, xi));
  const double t = bx.r() * xin;
  const cplx phase = std::polar(1.0, dot(bx.x, xi));
  Multivector out = Multivector::scalar(sig, std::cosh(t));
  if (t != 0.0) out.add_scaled(y_vector(sig, bx.y) * x_paravector(sig, xi), cplx(0.0, sinhc(t)));
  return out * phase;
}

struct IdentityCheck {
  std::string name;
  std::string formula;
  double deviation = 0.0;
};

/// The multiplicative identities of the kernel at one (x + y, xi). Each
/// entry holds the largest relative deviation among the equalities named.
inline std::vector<IdentityCheck> kernel_identity_suite(Signature sig, const SplitPoint& bx, std::span<const double> xi) {
  const auto e = [&](const SplitPoint& pt, std::span<const double> z) { return kernel_e(sig, pt, z); };
  const auto scaled_xi = [&](double s) {
    std::vector<double> v(xi.begin(), xi.end());
    for (double& c : v) c *= s;
    return v;
  };
  const auto scaled_pt = [&](double sx, double sy) {
    SplitPoint pt = bx;
    for (double& c : pt.x) c *= sx;
    for (double& c : pt.y) c *= sy;
    return pt;
  };
  const SplitPoint xonly = scaled_pt(1.0, 0.0);
  const SplitPoint yonly = scaled_pt(0.0, 1.0);
  const Multivector ebx = e(bx, xi);
  const Multivector ex = e(xonly, xi);
  const Multivector ey = e(yonly, xi);

  std::vector<IdentityCheck> out;
  out.push_back({"kernel.split", "e(x+y,xi) = e(x,xi) e(y,xi) = e(y,xi) e(x,xi)",
                 std::max(relative_deviation(ebx, ex * ey), relative_deviation(ebx, ey * ex))});

  const Multivector dag = hermitian_conjugate(ebx);
  const auto mxi = scaled_xi(-1.0);
  out.push_back({"kernel.dagger", "e(x+y,xi)^dagger = e(-x,xi) e(y,xi) = e(x,-xi) e(y,xi)",
                 std::max(relative_deviation(dag, e(scaled_pt(-1.0, 0.0), xi) * ey),
                          relative_deviation(dag, e(xonly, mxi) * ey))});

  const Multivector gram = dag * ebx;
  out.push_back({"kernel.modulus", "e(x+y,xi)^dagger e(x+y,xi) = e(2y,xi) = e(y,2xi)",
                 std::max(relative_deviation(gram, e(scaled_pt(0.0, 2.0), xi)),
                          relative_deviation(gram, e(yonly, scaled_xi(2.0))))});

  double dev = 0.0;
  for (int k : {2, 3}) {
    const Multivector pw = power(ebx, k);
    dev = std::max(dev, relative_deviation(pw, e(scaled_pt(k, k), xi)));
    dev = std::max(dev, relative_deviation(pw, e(bx, scaled_xi(k))));
  }
  out.push_back({"kernel.power", "e(x+y,xi)^k = e(k(x+y),xi) = e(x+y,k xi), k = 2, 3", dev});
  return out;
}

/// D_x P for a polynomial, e_i acting from the left.
inline CliffordPolynomial dirac_polynomial(const CliffordPolynomial& f) {
  return dirac_dx(HermiteGaussian(f, 0.0)).poly();
}

/// sum_m (y D_x)^m f0 / m! evaluated at x + y; terminates after deg f0 terms.
inline Multivector ck_polynomial(const CliffordPolynomial& f0, const SplitPoint& bx) {
  const Signature sig = f0.sig();
  bx.check(sig);
  const Multivector yv = y_vector(sig, bx.y);
  Multivector out = f0.evaluate(bx.x);
  if (bx.r() == 0.0) return out;
  CliffordPolynomial term = f0;
  for (int m = 1; m <= f0.degree(); ++m) {
    term = dirac_polynomial(term).left_multiplied(yv).scaled(1.0 / m);
    if (term.empty()) break;
    out += term.evaluate(bx.x);
  }
  return out;
}

/// Unit 1-vector direction eta in R^q for a Fueter polynomial.
struct FueterPolynomialSpec {
  MultiIndex k;
  std::vector<double> eta;
};

/// z_l = x_l + r eta e_l (e_0 = 1, eta on the left).
inline Multivector fueter_variable(Signature sig, int l, std::span<const double> x, double r, std::span<const double> eta) {
  if (l < 0 || l > sig.p) throw ContractViolation("fueter_variable: index out of range");
  Multivector z = Multivector::scalar(sig, x[static_cast<std::size_t>(l)]);
  z += (y_vector(sig, eta) * Multivector::generator(sig, l)) * r;
  return z;
}

/// P_k = (1/|k|!) sum over the distinct orderings of the multiset
/// {0^{k_0}, ..., p^{k_p}} of the ordered products of Fueter variables.
inline Multivector fueter_polynomial(Signature sig, const FueterPolynomialSpec& spec, std::span<const double> x, double r) {
  const MultiIndex& k = spec.k;
  if (k.dim() != sig.x_dim()) throw ContractViolation("fueter_polynomial: multi-index must have p + 1 entries");
  if (x.size() != static_cast<std::size_t>(sig.x_dim())) throw ContractViolation("fueter_polynomial: x must have p + 1 entries");
  if (spec.eta.size() != static_cast<std::size_t>(sig.q)) throw ContractViolation("fueter_polynomial: eta must have q entries");
  if (std::abs(std::sqrt(dot(spec.eta, spec.eta)) - 1.0) > 1e-12) throw ContractViolation("fueter_polynomial: eta must be a unit vector");

  std::vector<Multivector> z;
  for (int l = 0; l <= sig.p; ++l) z.push_back(fueter_variable(sig, l, x, r, spec.eta));
  std::vector<int> word;
  for (int l = 0; l < k.dim(); ++l) word.insert(word.end(), static_cast<std::size_t>(k[l]), l);

  Multivector sum(sig);
  do {
    Multivector prod = Multivector::scalar(sig, 1.0);
    for (int l : word) prod = prod * z[static_cast<std::size_t>(l)];
    sum += prod;
  } while (std::next_permutation(word.begin(), word.end()));
  return sum / std::tgamma(k.total() + 1.0);
}

inline Multivector fueter_polynomial(Signature sig, const MultiIndex& k, const SplitPoint& bx) {
  bx.check(sig);
  return fueter_polynomial(sig, FueterPolynomialSpec{k, bx.omega()}, bx.x, bx.r());
}

/// sum_k P_k(x + y) (d^k f0)(0), with the derivatives taken symbolically.
inline Multivector taylor_reconstruction(const CliffordPolynomial& f0, const SplitPoint& bx) {
  const Signature sig = f0.sig();
  bx.check(sig);
  const std::vector<double> origin(static_cast<std::size_t>(sig.x_dim()), 0.0);
  Multivector out(sig);
  for (const MultiIndex& k : multi_indices_up_to(sig.x_dim(), f0.degree())) {
    CliffordPolynomial d = f0;
    for (int axis = 0; axis < k.dim(); ++axis)
      for (int j = 0; j < k[axis]; ++j) d = d.derivative(axis);
    if (d.empty()) continue;
    out += fueter_polynomial(sig, k, bx) * d.evaluate(origin);
  }
  return out;
}

enum class CkRoute { fourier, delta_series };

inline std::string to_string(CkRoute r) { return r == CkRoute::fourier ? "fourier" : "delta_series"; }

struct CkControl {
  double tol = 1e-15;       ///< delta-series relative stopping threshold
  int max_terms = 200;      ///< delta-series cap on K
  int xi_order = 60;        ///< Gauss-Hermite nodes per xi axis
  double max_abs_y = 4.0;   ///< validity bound of the Fourier route
};

/// CK[x^k e^{-a|x|^2}](x + r omega) = A + omega sum_i e_i B_i; A and B_i depend
/// only on (x, r).
struct CkParts {
  cplx a{};
  std::vector<cplx> b;
};

namespace detail {

/// Normalized derivatives T^_n = d^n/ds^n (s^k e^{-a s^2}) / sqrt(n! (2a)^n),
/// n = 0..count-1.
inline std::vector<double> normalized_monomial_gaussian_derivatives(int k, double a, double s, int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  g[0] = std::exp(-a * s * s);
  if (count > 1) g[1] = -s * std::sqrt(2.0 * a) * g[0];
  for (int n = 1; n + 1 < count; ++n)
    g[static_cast<std::size_t>(n + 1)] = -s * std::sqrt(2.0 * a / (n + 1)) * g[static_cast<std::size_t>(n)] -
                                         std::sqrt(static_cast<double>(n) / (n + 1)) * g[static_cast<std::size_t>(n - 1)];
  if (k == 0) return g;
  std::vector<double> t(static_cast<std::size_t>(count), 0.0);
  const double inv_sqrt_2a = 1.0 / std::sqrt(2.0 * a);
  for (int n = 0; n < count; ++n) {
    double acc = 0.0;
    double ratio = 1.0;  // sqrt(n! / (n - j)!) / j! * (2a)^{-j/2} * k! / (k - j)!
    for (int j = 0; j <= std::min(k, n); ++j) {
      if (j > 0) ratio *= std::sqrt(static_cast<double>(n - j + 1)) / j * inv_sqrt_2a * (k - j + 1);
      acc += ratio * std::pow(s, k - j) * g[static_cast<std::size_t>(n - j)];
    }
    t[static_cast<std::size_t>(n)] = acc;
  }
  return t;
}

/// Per-axis Delta-power tables: even[m] = T_{2m} / m!, odd[m] = T_{2m+1} / m!.
struct AxisTable {
  std::vector<double> even;
  std::vector<double> odd;
};

inline AxisTable axis_table(int k, double a, double s, int kmax) {
  const auto t = normalized_monomial_gaussian_derivatives(k, a, s, 2 * kmax + 2);
  AxisTable tab;
  tab.even.resize(static_cast<std::size_t>(kmax) + 1);
  tab.odd.resize(static_cast<std::size_t>(kmax) + 1);
  // even_scale = sqrt((2m)! (2a)^{2m}) / m!, odd_scale = sqrt((2m+1)! (2a)^{2m+1}) / m!
  double even_scale = 1.0;
  double odd_scale = std::sqrt(2.0 * a);
  for (int m = 0; m <= kmax; ++m) {
    tab.even[static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(2 * m)] * even_scale;
    tab.odd[static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(2 * m + 1)] * odd_scale;
    even_scale *= std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0)) * 2.0 * a / (m + 1.0);
    odd_scale *= std::sqrt((2.0 * m + 2.0) * (2.0 * m + 3.0)) * 2.0 * a / (m + 1.0);
  }
  return tab;
}

/// Cauchy product of the sequences, truncated to the common length.
inline std::vector<double> cauchy_product(const std::vector<const std::vector<double>*>& seqs) {
  std::vector<double> acc = *seqs[0];
  const std::size_t n = acc.size();
  for (std::size_t s = 1; s < seqs.size(); ++s) {
    const std::vector<double>& b = *seqs[s];
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (acc[i] == 0.0) continue;
      for (std::size_t j = 0; i + j < n; ++j) next[i + j] += acc[i] * b[j];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Delta series of one monomial Gaussian x^k e^{-a|x|^2} at a fixed x. The
/// Delta-power tables depend on x only, so one instance serves every r.
/// at(r) throws NonConvergence when ctrl.max_terms terms do not meet the
/// stopping rule (three consecutive terms below tol * (1 + |partial sum|)).
class DeltaSeries {
 public:
  DeltaSeries(const MultiIndex& k, double a, std::span<const double> x, const CkControl& ctrl = {})
      : k_(k), a_(a), x_(x.begin(), x.end()), ctrl_(ctrl) {
    if (!(a > 0.0)) throw ContractViolation("delta series requires a positive Gaussian rate");
    if (x.size() != static_cast<std::size_t>(k.dim())) throw ContractViolation("delta series: point dimension mismatch");
  }

  CkParts at(double r) {
    if (kmax_ == 0) build(std::min(32, ctrl_.max_terms));
    double residual = 0.0;
    while (true) {
      CkParts parts;
      if (try_sum(r, parts, residual)) return parts;
      if (kmax_ >= ctrl_.max_terms) break;
      build(std::min(2 * kmax_, ctrl_.max_terms));
    }
    throw NonConvergence("delta series did not converge within " + std::to_string(ctrl_.max_terms) + " terms", residual);
  }

 private:
  void build(int kmax) {
    const int d = k_.dim();
    kmax_ = kmax;
    std::vector<detail::AxisTable> tabs;
    tabs.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) tabs.push_back(detail::axis_table(k_[j], a_, x_[static_cast<std::size_t>(j)], kmax));
    std::vector<const std::vector<double>*> even_seqs;
    for (const auto& t : tabs) even_seqs.push_back(&t.even);
    w_even_ = detail::cauchy_product(even_seqs);
    w_odd_.clear();
    for (int i = 0; i < d; ++i) {
      auto seqs = even_seqs;
      seqs[static_cast<std::size_t>(i)] = &tabs[static_cast<std::size_t>(i)].odd;
      w_odd_.push_back(detail::cauchy_product(seqs));
    }
  }

  bool try_sum(double r, CkParts& parts, double& residual) const {
    const int d = k_.dim();
    parts.a = 0.0;
    parts.b.assign(static_cast<std::size_t>(d), cplx{});
    double c_even = 1.0;  // r^{2K} K! / (2K)!
    int quiet = 0;
    for (int K = 0; K <= kmax_; ++K) {
      const double sign = (K % 2) ? -1.0 : 1.0;
      const double c_odd = c_even * r / (2 * K + 1);
      const double ta = sign * c_even * w_even_[static_cast<std::size_t>(K)];
      parts.a += ta;
      double term_sq = ta * ta;
      if (r != 0.0)
        for (int i = 0; i < d; ++i) {
          const double tb = sign * c_odd * w_odd_[static_cast<std::size_t>(i)][static_cast<std::size_t>(K)];
          parts.b[static_cast<std::size_t>(i)] += tb;
          term_sq += tb * tb;
        }
      double partial_sq = std::norm(parts.a);
      for (const auto& v : parts.b) partial_sq += std::norm(v);
      residual = std::sqrt(term_sq) / (1.0 + std::sqrt(partial_sq));
      quiet = residual < ctrl_.tol ? quiet + 1 : 0;
      if (quiet >= 3) return true;
      c_even *= r * r / (2.0 * (2 * K + 1));
    }
    return false;
  }

  MultiIndex k_;
  double a_;
  std::vector<double> x_;
  CkControl ctrl_;
  int kmax_ = 0;
  std::vector<double> w_even_;
  std::vector<std::vector<double>> w_odd_;
};

/// Delta-series parts for one monomial Gaussian at x + r omega.
inline CkParts ck_monomial_gaussian_parts(const MultiIndex& k, double a, std::span<const double> x, double r,
                                          const CkControl& ctrl = {}) {
  return DeltaSeries(k, a, x, ctrl).at(r);
}

/// Combines parts into the multivector A + omega sum_i e_i B_i.
inline Multivector assemble_ck_parts(Signature sig, const CkParts& parts, std::span<const double> omega) {
  Multivector out = Multivector::scalar(sig, parts.a);
  const Multivector w = y_vector(sig, omega);
  for (int i = 0; i < sig.x_dim(); ++i) {
    const cplx b = parts.b[static_cast<std::size_t>(i)];
    if (b != cplx{}) out.add_scaled(w * Multivector::generator(sig, i), b);
  }
  return out;
}

namespace detail {

/// (2 pi)^{-d/2} int e(x + y, xi) Q(xi) e^{-c|xi|^2} dxi, Q = sum_k xi^k q_k,
/// by Gauss-Hermite quadrature. Accumulates scalar moments so that Clifford
/// products happen once per monomial rather than once per node:
///   int e Q = sum_k [ M0_k + i sum_j (y e_j) M_jk ] q_k,
///   M0_k = int cosh(t) E xi^k,  M_jk = int sinhc(t) E xi_j xi^k,  E = e^{i<x,xi>}.
inline Multivector kernel_integral(Signature sig, const CliffordPolynomial& q_poly, double c, const SplitPoint& bx,
                                   int order) {
  const int d = sig.x_dim();
  const QuadratureRule rule = gaussian_weighted_rule(order, d, c);
  const double r = bx.r();
  std::vector<MultiIndex> ks;
  for (const auto& [k, coeff] : q_poly.terms()) ks.push_back(k);
  const std::size_t nk = ks.size();
  std::vector<cplx> m0(nk, cplx{});
  std::vector<cplx> mj(nk * static_cast<std::size_t>(d), cplx{});
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto xi = rule.node(i);
    const double w = rule.weights[i];
    const double t = r * std::sqrt(dot(xi, xi));
    const cplx e = std::polar(1.0, dot(bx.x, xi));
    const cplx wc = w * std::cosh(t) * e;
    const cplx ws = w * sinhc(t) * e;
    for (std::size_t a = 0; a < nk; ++a) {
      double mono = 1.0;
      for (int j = 0; j < d; ++j) mono *= std::pow(xi[static_cast<std::size_t>(j)], ks[a][j]);
      m0[a] += wc * mono;
      for (int j = 0; j < d; ++j) mj[a * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] += ws * mono * xi[static_cast<std::size_t>(j)];
    }
  }
  const Multivector yv = y_vector(sig, bx.y);
  std::vector<Multivector> ye;
  for (int j = 0; j < d; ++j) ye.push_back(yv * Multivector::generator(sig, j));
  Multivector out(sig);
  std::size_t a = 0;
  for (const auto& [k, coeff] : q_poly.terms()) {
    Multivector left = Multivector::scalar(sig, m0[a]);
    for (int j = 0; j < d; ++j)
      left.add_scaled(ye[static_cast<std::size_t>(j)], cplx(0.0, 1.0) * mj[a * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)]);
    out += left * coeff;
    ++a;
  }
  return out * std::pow(2.0 * std::numbers::pi, -0.5 * d);
}

inline void check_fourier_region(Signature sig, const SplitPoint& bx, const CkControl& ctrl) {
  if (sig.p > 2) throw CapabilityError("Fourier route supports p <= 2");
  if (bx.r() > ctrl.max_abs_y)
    throw RegionError("|y| = " + std::to_string(bx.r()) + " exceeds the Fourier-route validity bound " +
                      std::to_string(ctrl.max_abs_y));
}

}  // namespace detail

/// CK[f0](x + y) for f0 = P e^{-a|x|^2}, a > 0, by the chosen route.
inline Multivector ck_hermite_gaussian(const HermiteGaussian& f0, const SplitPoint& bx, CkRoute route,
                                       const CkControl& ctrl = {}) {
  const Signature sig = f0.sig();
  bx.check(sig);
  if (!(f0.rate() > 0.0)) throw NotInFamily("CK of a Gaussian-weighted input needs a positive rate");
  if (route == CkRoute::fourier) {
    detail::check_fourier_region(sig, bx, ctrl);
    const HermiteGaussian spectrum = fourier_transform(f0);
    return detail::kernel_integral(sig, spectrum.poly(), spectrum.rate(), bx, ctrl.xi_order);
  }
  const double r = bx.r();
  const auto omega = bx.omega();
  Multivector out(sig);
  for (const auto& [k, c] : f0.poly().terms())
    out += assemble_ck_parts(sig, ck_monomial_gaussian_parts(k, f0.rate(), bx.x, r, ctrl), omega) * c;
  return out;
}

/// |D_x f + omega d_r f| at x + r omega by central differences of step h,
/// the radial derivative taken along the fixed direction omega.
inline double monogenicity_residual(Signature sig, const PointFunction& f, const SplitPoint& bx, double h) {
  bx.check(sig);
  const double r = bx.r();
  if (!(h > 0.0)) throw ContractViolation("monogenicity_residual: step must be > 0");
  if (!(r > h)) throw GeometryError("monogenicity_residual: need |y| > h");
  Multivector acc(sig);
  for (int i = 0; i < sig.x_dim(); ++i) {
    SplitPoint plus = bx, minus = bx;
    plus.x[static_cast<std::size_t>(i)] += h;
    minus.x[static_cast<std::size_t>(i)] -= h;
    acc += Multivector::generator(sig, i) * ((f(plus) - f(minus)) / (2.0 * h));
  }
  const auto omega = bx.omega();
  SplitPoint plus = bx, minus = bx;
  for (std::size_t j = 0; j < omega.size(); ++j) {
    plus.y[j] = (r + h) * omega[j];
    minus.y[j] = (r - h) * omega[j];
  }
  acc += y_vector(sig, omega) * ((f(plus) - f(minus)) / (2.0 * h));
  return acc.norm();
}

}  // namespace gsm
