#pragma once

// Deterministic quadrature: tensorized Gauss-Hermite rules on R^{p+1}, a
// folded half-line rule for radial integrals, sphere rules on S^{q-1}, and
// the measure
//
//   dmu = (2 / sqrt(pi)) (1 / |S|) e^{-|y|^2} / |y|^{q-1} dx dy
//
// on R^{p+q+1}.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gsm/clifford.hpp"
#include "gsm/parallel.hpp"

namespace gsm {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const noexcept { return nodes.size(); }
};

namespace detail {

/// Orthonormal Hermite recurrence at z: returns (p_n(z), p_n'(z)).
inline std::pair<double, double> orthonormal_hermite(int n, double z) {
  constexpr double kPiM4 = 0.7511255444649425;  // pi^{-1/4}
  double p1 = kPiM4, p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
  }
  return {p1, std::sqrt(2.0 * n) * p2};
}

}  // namespace detail

/// n-point Gauss-Hermite rule for weight e^{-x^2}, nodes ascending. Nodes
/// start from the Golub-Welsch eigenvalues and are polished by Newton on the
/// orthonormal recurrence; weights are 2 / p_n'(x)^2, which stays accurate
/// for the tiny outer weights.
inline Rule1D gauss_hermite_1d(int n) {
  if (n < 1) throw ContractViolation("gauss_hermite_1d: order must be >= 1");
  if (n > 360) throw CapabilityError("gauss_hermite_1d: orders above 360 underflow the outer weights");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int j = 1; j < n; ++j) sub[j - 1] = std::sqrt(0.5 * j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  Rule1D rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = solver.eigenvalues()[i];
    for (int it = 0; it < 20; ++it) {
      const auto [p, dp] = detail::orthonormal_hermite(n, z);
      const double step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    const double dp = detail::orthonormal_hermite(n, z).second;
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / (dp * dp);
  }
  // Exact symmetry about the origin.
  for (int i = 0; i < n / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(n - 1 - i);
    const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
    const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = rule.weights[hi] = w;
  }
  if (n % 2) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
inline Rule1D gauss_legendre_1d(int n) {
  if (n < 1) throw ContractViolation("gauss_legendre_1d: order must be >= 1");
  Rule1D rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) <= 1e-16) break;
    }
    double p1 = 1.0, p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
    }
    pp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

enum class Domain { x_space, xi_space, y_space, full_space };

inline std::string to_string(Domain d) {
  switch (d) {
    case Domain::x_space: return "x-space";
    case Domain::xi_space: return "xi-space";
    case Domain::y_space: return "y-space";
    case Domain::full_space: return "full-space";
  }
  return "?";
}

/// Nodes in R^dim (flattened row-major) with positive weights.
struct QuadratureRule {
  int dim = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  Domain domain = Domain::x_space;

  std::size_t size() const noexcept { return weights.size(); }
  std::span<const double> node(std::size_t i) const {
    return {nodes.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

namespace detail {

inline QuadratureRule tensorize(const Rule1D& r, int dim, Domain domain) {
  QuadratureRule out;
  out.dim = dim;
  out.domain = domain;
  const std::size_t m = r.size();
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) total *= m;
  out.nodes.reserve(total * static_cast<std::size_t>(dim));
  out.weights.reserve(total);
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  for (std::size_t t = 0; t < total; ++t) {
    double w = 1.0;
    for (int a = 0; a < dim; ++a) {
      out.nodes.push_back(r.nodes[idx[static_cast<std::size_t>(a)]]);
      w *= r.weights[idx[static_cast<std::size_t>(a)]];
    }
    out.weights.push_back(w);
    for (int a = dim - 1; a >= 0; --a) {
      if (++idx[static_cast<std::size_t>(a)] < m) break;
      idx[static_cast<std::size_t>(a)] = 0;
    }
  }
  return out;
}

inline void check_dim(int dim) {
  if (dim < 1) throw ContractViolation("quadrature dimension must be >= 1");
  if (dim > 3) throw CapabilityError("tensorized rules support at most 3 dimensions (p <= 2)");
}

}  // namespace detail

/// Tensorized Gauss-Hermite rule for weight e^{-|x|^2} on R^dim; exact for
/// polynomials of degree <= 2 order - 1 in each variable.
inline QuadratureRule gauss_hermite_rule(int order, int dim) {
  detail::check_dim(dim);
  return detail::tensorize(gauss_hermite_1d(order), dim, Domain::x_space);
}

/// Rule for weight e^{-rate |x|^2}: nodes u / sqrt(rate), weights w / sqrt(rate) per axis.
inline QuadratureRule gaussian_weighted_rule(int order, int dim, double rate, Domain domain = Domain::xi_space) {
  if (!(rate > 0.0)) throw ContractViolation("gaussian_weighted_rule: rate must be > 0");
  detail::check_dim(dim);
  Rule1D r = gauss_hermite_1d(order);
  const double s = 1.0 / std::sqrt(rate);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.nodes[i] *= s;
    r.weights[i] *= s;
  }
  return detail::tensorize(r, dim, domain);
}

/// Rule for plain dx on R^dim, sized for integrands decaying like
/// e^{-rate |x|^2}: the weight e^{-rate x^2} is folded back into the weights.
inline QuadratureRule lebesgue_rule(int order, int dim, double rate) {
  if (!(rate > 0.0)) throw ContractViolation("lebesgue_rule: rate must be > 0");
  detail::check_dim(dim);
  Rule1D r = gauss_hermite_1d(order);
  const double s = 1.0 / std::sqrt(rate);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.weights[i] *= s * std::exp(r.nodes[i] * r.nodes[i]);
    r.nodes[i] *= s;
  }
  return detail::tensorize(r, dim, Domain::x_space);
}

/// Half-line rule: sum_i w_i h(r_i) ~ int_0^inf h(r) e^{-r^2} dr, exact for
/// even polynomials h of degree < 4m, built by folding the 2m-node
/// Gauss-Hermite rule. With rate != 1 the nodes are placed for weight
/// e^{-rate r^2} and the remaining e^{-(1-rate) r^2} goes into the weights.
inline Rule1D half_line_rule(int m, double rate = 1.0) {
  if (m < 1) throw ContractViolation("half_line_rule: order must be >= 1");
  if (!(rate > 0.0)) throw ContractViolation("half_line_rule: rate must be > 0");
  const Rule1D gh = gauss_hermite_1d(2 * m);
  Rule1D out;
  const double s = 1.0 / std::sqrt(rate);
  for (std::size_t i = 0; i < gh.size(); ++i) {
    if (gh.nodes[i] <= 0.0) continue;
    const double u = gh.nodes[i];
    out.nodes.push_back(u * s);
    out.weights.push_back(gh.weights[i] * s * std::exp(-(1.0 / rate - 1.0) * u * u));
  }
  return out;
}

/// |S^{q-1}| = 2 pi^{q/2} / Gamma(q/2).
inline double sphere_area(int q) {
  if (q < 1) throw ContractViolation("sphere_area: q must be >= 1");
  if (q == 1) return 2.0;
  if (q == 2) return 2.0 * std::numbers::pi;
  if (q == 3) return 4.0 * std::numbers::pi;
  return 2.0 * std::pow(std::numbers::pi, 0.5 * q) / std::tgamma(0.5 * q);
}

/// Antipodally symmetric rule on the unit sphere of R^q: q = 1 is {+1, -1};
/// q = 2 the trapezoid rule on an even number of angles; q = 3 Gauss-Legendre
/// in cos(theta) times 2 * order uniform azimuths.
inline QuadratureRule sphere_rule(int q, int order) {
  if (q < 1) throw ContractViolation("sphere_rule: q must be >= 1");
  if (q > 3) throw CapabilityError("sphere rules are implemented for q <= 3");
  QuadratureRule out;
  out.dim = q;
  out.domain = Domain::y_space;
  if (q == 1) {
    out.nodes = {1.0, -1.0};
    out.weights = {1.0, 1.0};
  } else if (q == 2) {
    int m = std::max(order, 2);
    if (m % 2) ++m;
    for (int j = 0; j < m; ++j) {
      const double th = 2.0 * std::numbers::pi * (j + 0.5) / m;
      out.nodes.push_back(std::cos(th));
      out.nodes.push_back(std::sin(th));
      out.weights.push_back(2.0 * std::numbers::pi / m);
    }
  } else {
    const int m = std::max(order, 1);
    const Rule1D gl = gauss_legendre_1d(m);
    const int naz = 2 * m;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double ct = gl.nodes[i];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int j = 0; j < naz; ++j) {
        const double ph = 2.0 * std::numbers::pi * (j + 0.5) / naz;
        out.nodes.push_back(st * std::cos(ph));
        out.nodes.push_back(st * std::sin(ph));
        out.nodes.push_back(ct);
        out.weights.push_back(gl.weights[i] * 2.0 * std::numbers::pi / naz);
      }
    }
  }
  return out;
}

/// Rule on R^q with sum_i w_i g(y_i) ~ int g(y) e^{-|y|^2} / |y|^{q-1} dy.
/// With dy = r^{q-1} dr dsigma the singular factor cancels, leaving a
/// half-line rule times a sphere rule. radial_order is the number of radial
/// nodes.
inline QuadratureRule y_space_rule(int q, int radial_order, int sphere_order, double radial_rate = 1.0) {
  const QuadratureRule sph = sphere_rule(q, sphere_order);
  const Rule1D rad = half_line_rule(radial_order, radial_rate);
  QuadratureRule out;
  out.dim = q;
  out.domain = Domain::y_space;
  for (std::size_t i = 0; i < rad.size(); ++i)
    for (std::size_t j = 0; j < sph.size(); ++j) {
      for (double c : sph.node(j)) out.nodes.push_back(rad.nodes[i] * c);
      out.weights.push_back(rad.weights[i] * sph.weights[j]);
    }
  return out;
}

/// dmu = c e^{-|y|^2} / |y|^{q-1} dx dy with c = (2 / sqrt(pi)) / |S|.
struct MeasureMu {
  int p = 0;
  int q = 1;
  double normalization() const { return 2.0 / std::sqrt(std::numbers::pi) / sphere_area(q); }
};

/// x-rule (plain dx) times y-rule (weight e^{-|y|^2}/|y|^{q-1} included).
struct FullSpaceRule {
  QuadratureRule x;
  QuadratureRule y;
  std::size_t size() const noexcept { return x.size() * y.size(); }

  SplitPoint point(std::size_t i) const {
    const std::size_t ix = i / y.size();
    const std::size_t iy = i % y.size();
    const auto xn = x.node(ix);
    const auto yn = y.node(iy);
    return {std::vector<double>(xn.begin(), xn.end()), std::vector<double>(yn.begin(), yn.end())};
  }
  double weight(std::size_t i) const { return x.weights[i / y.size()] * y.weights[i % y.size()]; }
};

/// Default full-space rule for products of generalized partial-slice
/// monogenic functions of Gaussian type: both the x-rule and the radial rule
/// are placed for e^{-|.|^2 / 2} decay.
inline FullSpaceRule make_full_space_rule(Signature sig, int x_order, int radial_order, int sphere_order) {
  return {lebesgue_rule(x_order, sig.x_dim(), 0.5), y_space_rule(sig.q, radial_order, sphere_order, 0.5)};
}

using PointFunction = std::function<Multivector(const SplitPoint&)>;

/// Gram matrices of a family of functions in L^2(dmu) (x) C_{p+q}.
struct GramMatrices {
  std::size_t n = 0;
  std::vector<cplx> scalar;            ///< int Sc(f_i^dagger f_j) dmu, row-major
  std::vector<Multivector> clifford;   ///< int f_i^dagger f_j dmu
  cplx at(std::size_t i, std::size_t j) const { return scalar[i * n + j]; }
  const Multivector& clifford_at(std::size_t i, std::size_t j) const { return clifford[i * n + j]; }
};

/// Running sums of w Sc(f_a^dagger f_b) and w f_a^dagger f_b over nodes (upper
/// triangle only).
class GramAccumulator {
 public:
  GramAccumulator(Signature sig, std::size_t n) : n_(n), scalar_(n * n, cplx{}), clifford_(n * n, Multivector(sig)) {}

  void add(std::span<const Multivector> vals, double w) {
    daggers_.resize(vals.size());
    for (std::size_t a = 0; a < vals.size(); ++a) daggers_[a] = hermitian_conjugate(vals[a]);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a; b < n_; ++b) {
        scalar_[a * n_ + b] += w * inner_product(vals[a], vals[b]);
        clifford_[a * n_ + b].add_product(daggers_[a], vals[b], w);
      }
  }

  void merge(const GramAccumulator& o) {
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      scalar_[k] += o.scalar_[k];
      clifford_[k] += o.clifford_[k];
    }
  }

  /// Scales by c and fills the lower triangle by Hermitian symmetry.
  GramMatrices finish(double c) const {
    GramMatrices g;
    g.n = n_;
    g.scalar = scalar_;
    g.clifford = clifford_;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a; b < n_; ++b) {
        g.scalar[a * n_ + b] *= c;
        g.clifford[a * n_ + b] *= c;
        if (b != a) {
          g.scalar[b * n_ + a] = std::conj(g.scalar[a * n_ + b]);
          g.clifford[b * n_ + a] = hermitian_conjugate(g.clifford[a * n_ + b]);
        }
      }
    return g;
  }

 private:
  std::size_t n_;
  std::vector<cplx> scalar_;
  std::vector<Multivector> clifford_;
  std::vector<Multivector> daggers_;
};

/// Nodes per reduction block. Block partial sums are combined in block order,
/// which makes Gram results bit-identical for any worker count.
inline constexpr std::size_t kGramBlock = 256;

/// Evaluates every function on every node and forms both Gram matrices.
inline GramMatrices mu_gram(Signature sig, std::span<const PointFunction> fs, const MeasureMu& mu,
                            const FullSpaceRule& rule, int workers = worker_count()) {
  const std::size_t nf = fs.size();
  const std::size_t total = rule.size();
  const std::size_t nblocks = (total + kGramBlock - 1) / kGramBlock;
  std::vector<GramAccumulator> partials(nblocks, GramAccumulator(sig, nf));
  parallel_for(
      nblocks,
      [&](std::size_t b) {
        std::vector<Multivector> vals(nf, Multivector(sig));
        const std::size_t hi = std::min(total, (b + 1) * kGramBlock);
        for (std::size_t i = b * kGramBlock; i < hi; ++i) {
          const SplitPoint pt = rule.point(i);
          for (std::size_t f = 0; f < nf; ++f) vals[f] = fs[f](pt);
          partials[b].add(vals, rule.weight(i));
        }
      },
      workers);
  GramAccumulator total_acc(sig, nf);
  for (const auto& part : partials) total_acc.merge(part);
  return total_acc.finish(mu.normalization());
}

/// <f, g>_mu = c sum_nodes w Sc(f^dagger g).
inline cplx mu_inner_product(Signature sig, const PointFunction& f, const PointFunction& g, const MeasureMu& mu,
                             const FullSpaceRule& rule, int workers = worker_count()) {
  const PointFunction fs[] = {f, g};
  return mu_gram(sig, fs, mu, rule, workers).at(0, 1);
}

/// Clifford-valued int f^dagger g dmu.
inline Multivector mu_inner_product_clifford(Signature sig, const PointFunction& f, const PointFunction& g,
                                             const MeasureMu& mu, const FullSpaceRule& rule,
                                             int workers = worker_count()) {
  const PointFunction fs[] = {f, g};
  return mu_gram(sig, fs, mu, rule, workers).clifford_at(0, 1);
}

}  // namespace gsm
