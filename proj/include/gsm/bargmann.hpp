#pragma once

// Segal-Bargmann transform
//
//   U[f](x + y) = (2 pi)^{-d/2} int e^{-|xi|^2/2} e(x + y, xi) f^(xi) dxi = CK[exp(Delta/2) f](x + y),
//
// d = p + 1, for Gaussian-type inputs f, the basis psi_k = CK[x^k e^{-|x|^2/4}],
// and the checks that U is an isometry onto L^2(dmu) and intertwines X - iP
// with left multiplication by the paravector variable.

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gsm/ck_extension.hpp"
#include "gsm/function_algebra.hpp"
#include "gsm/parallel.hpp"
#include "gsm/quadrature.hpp"

namespace gsm {

enum class TransformRoute {
  fck,      ///< xi-space integral against the kernel
  heat_ck,  ///< heat flow to t = 1, then the delta-series CK
};

inline std::string to_string(TransformRoute r) { return r == TransformRoute::fck ? "fck" : "heat_ck"; }

/// The heat time t with exp(t Delta / 2) = exp(Delta / 2).
inline constexpr double kTransformHeatTime = 1.0;

inline Multivector segal_bargmann(const HermiteGaussian& f, const SplitPoint& bx, TransformRoute route = TransformRoute::fck,
                                  const CkControl& ctrl = {}) {
  const Signature sig = f.sig();
  bx.check(sig);
  if (!(f.rate() > 0.0)) throw NotInFamily("transform input must be Gaussian-weighted");
  if (route == TransformRoute::fck) {
    detail::check_fourier_region(sig, bx, ctrl);
    const HermiteGaussian spectrum = fourier_transform(f);
    return detail::kernel_integral(sig, spectrum.poly(), spectrum.rate() + 0.5, bx, ctrl.xi_order);
  }
  return ck_hermite_gaussian(heat_semigroup(f, kTransformHeatTime), bx, CkRoute::delta_series, ctrl);
}

/// A pointwise evaluator on R^{p+q+1} with a tag naming how it was built.
struct GSMFunction {
  Signature sig;
  PointFunction eval;
  std::string provenance;

  Multivector operator()(const SplitPoint& bx) const { return eval(bx); }
};

inline GSMFunction ck_function(const HermiteGaussian& f0, CkRoute route = CkRoute::delta_series, const CkControl& ctrl = {}) {
  return {f0.sig(), [f0, route, ctrl](const SplitPoint& bx) { return ck_hermite_gaussian(f0, bx, route, ctrl); },
          "ck-of(f)"};
}

inline GSMFunction transform_function(const HermiteGaussian& f, TransformRoute route = TransformRoute::fck,
                                      const CkControl& ctrl = {}) {
  return {f.sig(), [f, route, ctrl](const SplitPoint& bx) { return segal_bargmann(f, bx, route, ctrl); },
          "transform-of(f)"};
}

/// x^k e^{-|x|^2/4}, the restriction of psi_k.
inline HermiteGaussian psi_seed(Signature sig, const MultiIndex& k) { return monomial_gaussian(sig, k, 0.25); }

/// psi_k = CK[x^k e^{-|x|^2/4}] = 2^{d/2} U[phi_k].
inline GSMFunction psi_k(Signature sig, const MultiIndex& k, const CkControl& ctrl = {}) {
  GSMFunction g = ck_function(psi_seed(sig, k), CkRoute::delta_series, ctrl);
  g.provenance = "psi_k";
  return g;
}

/// (X - iP) f = x f - D_x f with P = -i D_x; x and D_x act from the left.
inline HermiteGaussian apply_x_minus_ip(const HermiteGaussian& f) { return multiply_paravector(f) - dirac_dx(f); }

struct GramRules {
  int x_order = 32;
  int radial_order = 16;
  int sphere_order = 8;
};

/// Gram matrices in L^2(dmu) of {CK[f0_a]} evaluated with the delta series.
///
/// The integration grid is (x-rule) x (radial rule) x (sphere rule). The
/// delta-series tables depend on x only and the CK parts on (x, r) only, so
/// both are shared across the nodes that differ in r or omega.
inline GramMatrices ck_gram(Signature sig, const std::vector<HermiteGaussian>& f0s, const GramRules& rules,
                            const CkControl& ctrl = {}, int workers = worker_count()) {
  sig.validate();
  const int d = sig.x_dim();
  const QuadratureRule xr = lebesgue_rule(rules.x_order, d, 0.5);
  const Rule1D rad = half_line_rule(rules.radial_order, 0.5);
  const QuadratureRule sph = sphere_rule(sig.q, rules.sphere_order);
  const std::size_t nf = f0s.size();
  constexpr std::size_t kXPerBlock = 4;
  const std::size_t nblocks = (xr.size() + kXPerBlock - 1) / kXPerBlock;

  // omega e_i for every sphere node and every i.
  std::vector<std::vector<Multivector>> omega_e(sph.size());
  for (std::size_t j = 0; j < sph.size(); ++j) {
    const Multivector w = y_vector(sig, sph.node(j));
    for (int i = 0; i < d; ++i) omega_e[j].push_back(w * Multivector::generator(sig, i));
  }

  std::vector<GramAccumulator> partials(nblocks, GramAccumulator(sig, nf));
  parallel_for(
      nblocks,
      [&](std::size_t b) {
        std::vector<Multivector> scal(nf, Multivector(sig));
        std::vector<std::vector<Multivector>> vec(nf, std::vector<Multivector>(static_cast<std::size_t>(d), Multivector(sig)));
        std::vector<Multivector> vals(nf, Multivector(sig));
        const std::size_t hi = std::min(xr.size(), (b + 1) * kXPerBlock);
        for (std::size_t ix = b * kXPerBlock; ix < hi; ++ix) {
          const auto x = xr.node(ix);
          std::vector<std::vector<DeltaSeries>> series(nf);
          for (std::size_t f = 0; f < nf; ++f)
            for (const auto& [k, c] : f0s[f].poly().terms()) series[f].emplace_back(k, f0s[f].rate(), x, ctrl);
          for (std::size_t ir = 0; ir < rad.size(); ++ir) {
            const double r = rad.nodes[ir];
            for (std::size_t f = 0; f < nf; ++f) {
              scal[f] = Multivector(sig);
              for (auto& v : vec[f]) v = Multivector(sig);
              std::size_t t = 0;
              for (const auto& [k, c] : f0s[f].poly().terms()) {
                const CkParts parts = series[f][t++].at(r);
                scal[f].add_scaled(c, parts.a);
                for (int i = 0; i < d; ++i) vec[f][static_cast<std::size_t>(i)].add_scaled(c, parts.b[static_cast<std::size_t>(i)]);
              }
            }
            const double wxr = xr.weights[ix] * rad.weights[ir];
            for (std::size_t j = 0; j < sph.size(); ++j) {
              for (std::size_t f = 0; f < nf; ++f) {
                vals[f] = scal[f];
                for (int i = 0; i < d; ++i) vals[f].add_product(omega_e[j][static_cast<std::size_t>(i)], vec[f][static_cast<std::size_t>(i)]);
              }
              partials[b].add(vals, wxr * sph.weights[j]);
            }
          }
        }
      },
      workers);
  GramAccumulator acc(sig, nf);
  for (const auto& part : partials) acc.merge(part);
  return acc.finish(MeasureMu{sig.p, sig.q}.normalization());
}

/// Entry (k, l) deviation |G - G_ref| / sqrt(G_ref(k,k) G_ref(l,l)).
struct GramComparison {
  std::vector<MultiIndex> indices;
  double max_deviation = 0.0;       ///< scalar pairing, all entries
  double max_diagonal_deviation = 0.0;
  double max_off_diagonal = 0.0;
  double max_clifford_deviation = 0.0;  ///< Clifford-valued pairing against ref * 1
};

namespace detail {

inline GramComparison compare_gram(Signature sig, const std::vector<MultiIndex>& ks, const GramMatrices& g,
                                   const std::vector<cplx>& ref) {
  GramComparison out;
  out.indices = ks;
  const std::size_t n = ks.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double scale = std::sqrt(std::abs(ref[a * n + a]) * std::abs(ref[b * n + b]));
      const double dev = std::abs(g.at(a, b) - ref[a * n + b]) / scale;
      out.max_deviation = std::max(out.max_deviation, dev);
      if (a == b)
        out.max_diagonal_deviation = std::max(out.max_diagonal_deviation, dev);
      else
        out.max_off_diagonal = std::max(out.max_off_diagonal, dev);
      const Multivector expect = Multivector::scalar(sig, ref[a * n + b]);
      out.max_clifford_deviation = std::max(out.max_clifford_deviation, (g.clifford_at(a, b) - expect).norm() / scale);
    }
  return out;
}

}  // namespace detail

struct IsometryReport {
  GramComparison gram;          ///< Gram of {U phi_k} against Gram of {phi_k}
  double max_norm_formula_deviation = 0.0;  ///< Gram of {phi_k} diagonal against pi^{d/2} 2^{|k|} k!
};

/// <U phi_k, U phi_l>_mu against <phi_k, phi_l> for |k|, |l| <= max_degree,
/// U evaluated by the heat-then-CK route.
inline IsometryReport verify_isometry(Signature sig, int max_degree, const GramRules& rules = {},
                                      const CkControl& ctrl = {}, int workers = worker_count()) {
  if (max_degree < 0 || max_degree > 4) throw ContractViolation("verify_isometry: max_degree must be in [0, 4]");
  if (sig.q > 3) throw CapabilityError("isometry check supports q <= 3");
  if (sig.p > 2) throw CapabilityError("isometry check supports p <= 2");
  const auto ks = multi_indices_up_to(sig.x_dim(), max_degree);
  std::vector<HermiteGaussian> heated;
  std::vector<HermiteGaussian> phis;
  for (const auto& k : ks) {
    phis.push_back(phi_k(sig, k));
    heated.push_back(heat_semigroup(phis.back(), kTransformHeatTime));
  }
  const GramMatrices g = ck_gram(sig, heated, rules, ctrl, workers);
  const std::size_t n = ks.size();
  std::vector<cplx> ref(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ref[a * n + b] = lebesgue_inner_product(phis[a], phis[b]);
  IsometryReport rep;
  rep.gram = detail::compare_gram(sig, ks, g, ref);
  for (std::size_t a = 0; a < n; ++a)
    rep.max_norm_formula_deviation =
        std::max(rep.max_norm_formula_deviation, relative_deviation(ref[a * n + a], cplx(hermite_function_norm_sq(ks[a]))));
  return rep;
}

/// 2^{d} pi^{d/2} 2^{|k|} k!, the squared mu-norm of psi_k.
inline double psi_norm_sq(const MultiIndex& k) { return std::ldexp(1.0, k.dim()) * hermite_function_norm_sq(k); }

/// <psi_k, psi_l>_mu against psi_norm_sq(k) delta_{kl}. The Clifford-valued
/// Gram is compared against the same scalar matrix, which is the statement
/// that {psi_k e_A} is orthogonal as well.
inline GramComparison verify_basis_orthogonality(Signature sig, int max_degree, const GramRules& rules = {},
                                                 const CkControl& ctrl = {}, int workers = worker_count()) {
  if (max_degree < 0 || max_degree > 4) throw ContractViolation("verify_basis_orthogonality: max_degree must be in [0, 4]");
  if (sig.q > 3) throw CapabilityError("basis check supports q <= 3");
  if (sig.p > 2) throw CapabilityError("basis check supports p <= 2");
  const auto ks = multi_indices_up_to(sig.x_dim(), max_degree);
  std::vector<HermiteGaussian> seeds;
  for (const auto& k : ks) seeds.push_back(psi_seed(sig, k));
  const GramMatrices g = ck_gram(sig, seeds, rules, ctrl, workers);
  const std::size_t n = ks.size();
  std::vector<cplx> ref(n * n, cplx{});
  for (std::size_t a = 0; a < n; ++a) ref[a * n + a] = psi_norm_sq(ks[a]);
  return detail::compare_gram(sig, ks, g, ref);
}

struct SchrodingerReport {
  std::vector<double> deviations;  ///< per sample point
  double max_deviation = 0.0;
};

/// Compares 2^{d/2} U[(X - iP) phi_k] (kernel-integral route) with
/// CK[x x^k e^{-|x|^2/4}] (delta series) at the given points.
inline SchrodingerReport verify_schrodinger(Signature sig, const MultiIndex& k, const std::vector<SplitPoint>& points,
                                            const CkControl& ctrl = {}, int workers = worker_count()) {
  if (k.total() > 3) throw ContractViolation("verify_schrodinger: |k| must be <= 3");
  const double pre = std::pow(2.0, 0.5 * sig.x_dim());
  const HermiteGaussian lhs_input = apply_x_minus_ip(phi_k(sig, k));
  const HermiteGaussian rhs_seed = multiply_paravector(psi_seed(sig, k));
  SchrodingerReport rep;
  rep.deviations = parallel_map<double>(
      points.size(),
      [&](std::size_t i) {
        const Multivector lhs = segal_bargmann(lhs_input, points[i], TransformRoute::fck, ctrl) * pre;
        const Multivector rhs = ck_hermite_gaussian(rhs_seed, points[i], CkRoute::delta_series, ctrl);
        return relative_deviation(lhs, rhs);
      },
      workers);
  for (double v : rep.deviations) rep.max_deviation = std::max(rep.max_deviation, v);
  return rep;
}

}  // namespace gsm
