#pragma once

// Named verification suites. Each returns a SuiteReport whose records name
// the identity checked, the largest deviation seen and the tolerance.
// Random inputs come from a Sampler seeded with RunConfig::seed, one fresh
// stream per suite, so every suite is reproducible on its own.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "gsm/bargmann.hpp"
#include "gsm/ck_extension.hpp"
#include "gsm/clifford.hpp"
#include "gsm/function_algebra.hpp"
#include "gsm/parallel.hpp"
#include "gsm/quadrature.hpp"
#include "gsm/report.hpp"
#include "gsm/sampling.hpp"

namespace gsm {

namespace suite_detail {

inline SuiteReport start(const std::string& name, const RunConfig& cfg) {
  cfg.sig().validate();
  SuiteReport rep;
  rep.suite = name;
  rep.config = cfg.to_json();
  return rep;
}

inline void require_quadrature_capability(const RunConfig& cfg) {
  if (cfg.q > 3) throw CapabilityError("quadrature-based suites support q <= 3");
  if (cfg.p > 2) throw CapabilityError("quadrature-based suites support p <= 2");
}

inline CkControl ck_control(const RunConfig& cfg) {
  CkControl c;
  c.tol = cfg.tol;
  c.xi_order = cfg.xi_order;
  return c;
}

inline GramRules gram_rules(const RunConfig& cfg) { return {cfg.x_order, cfg.radial_order, cfg.sphere_order}; }

/// sum_i xi_i x_i as a scalar polynomial.
inline CliffordPolynomial linear_form(Signature sig, std::span<const double> xi) {
  CliffordPolynomial out(sig);
  for (int i = 0; i < sig.x_dim(); ++i)
    out.add_term(MultiIndex::unit(sig.x_dim(), i), Multivector::scalar(sig, xi[static_cast<std::size_t>(i)]));
  return out;
}

inline CliffordPolynomial polynomial_power(const CliffordPolynomial& base, int k) {
  CliffordPolynomial out = CliffordPolynomial::constant(base.sig(), Multivector::scalar(base.sig(), 1.0));
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

}  // namespace suite_detail

/// Algebra laws on random elements: generator relations, associativity, the
/// product norm bound, multiplicativity for paravectors, anti-automorphism of
/// the conjugations and paravector inverses.
inline SuiteReport run_clifford_suite(const RunConfig& cfg, int samples = 1000) {
  SuiteReport rep = suite_detail::start("clifford", cfg);
  const Signature sig = cfg.sig();
  const int n = sig.n();
  Sampler rng(cfg.seed);

  double anti = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Multivector ei = Multivector::generator(sig, i), ej = Multivector::generator(sig, j);
      Multivector s = ei * ej + ej * ei;
      if (i == j) s += Multivector::scalar(sig, 2.0);
      anti = std::max(anti, s.norm());
    }
  rep.add(make_check("clifford.anticommutation", "e_i e_j + e_j e_i = -2 delta_ij", anti, 1e-12));

  double assoc = 0.0, bound = 0.0, triangle = 0.0, multiplicative = 0.0, antiauto = 0.0, inverse = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Multivector a = rng.multivector(sig), b = rng.multivector(sig), c = rng.multivector(sig);
    const double na = a.norm(), nb = b.norm(), nc = c.norm();
    assoc = std::max(assoc, ((a * b) * c - a * (b * c)).norm() / (na * nb * nc));
    const Multivector ab = a * b;
    bound = std::max(bound, ab.norm() / (std::pow(2.0, 0.5 * n) * na * nb) - 1.0);
    triangle = std::max(triangle, (a + b).norm() / (na + nb) - 1.0);
    antiauto = std::max(antiauto, (clifford_conjugate(ab) - clifford_conjugate(b) * clifford_conjugate(a)).norm() / (na * nb));
    antiauto = std::max(antiauto, (hermitian_conjugate(ab) - hermitian_conjugate(b) * hermitian_conjugate(a)).norm() / (na * nb));
    const Multivector x = rng.paravector(sig);
    const double nx = x.norm();
    multiplicative = std::max(multiplicative, std::abs((x * c).norm() - nx * nc) / (nx * nc));
    inverse = std::max(inverse, (x * paravector_inverse(x) - Multivector::scalar(sig, 1.0)).norm());
  }
  rep.add(make_check("clifford.associativity", "(ab)c = a(bc)", assoc, 1e-12));
  rep.add(make_check("clifford.norm_bound", "|ab| <= 2^{n/2} |a||b|", std::max(0.0, bound), 1e-12));
  rep.add(make_check("clifford.triangle", "|a+b| <= |a| + |b|", std::max(0.0, triangle), 1e-12));
  rep.add(make_check("clifford.paravector_norm", "|x a| = |x||a| for paravectors x", multiplicative, 1e-12));
  rep.add(make_check("clifford.conjugation", "bar(ab) = bar(b) bar(a), (ab)^dagger = b^dagger a^dagger", antiauto, 1e-12));
  rep.add(make_check("clifford.inverse", "x x^{-1} = 1", inverse, 1e-12));
  return rep;
}

/// Kernel identities at random (x + y, xi), the y = 0 restriction, and the
/// monogenicity residual by central differences.
inline SuiteReport run_kernel_suite(const RunConfig& cfg, int samples = 200) {
  SuiteReport rep = suite_detail::start("kernel", cfg);
  const Signature sig = cfg.sig();
  Sampler rng(cfg.seed);
  struct Sample {
    SplitPoint bx;
    std::vector<double> xi;
  };
  std::vector<Sample> pts;
  for (int s = 0; s < samples; ++s) {
    Sample smp;
    smp.bx = rng.split_point(sig, 2.0, 0.1, 2.0);
    smp.xi = rng.uniform_vector(static_cast<std::size_t>(sig.x_dim()), -1.5, 1.5);
    pts.push_back(std::move(smp));
  }
  struct Result {
    std::vector<IdentityCheck> ids;
    double restriction = 0.0;
    double monogenic = 0.0;
  };
  const auto results = parallel_map<Result>(pts.size(), [&](std::size_t i) {
    Result r;
    const auto& smp = pts[i];
    r.ids = kernel_identity_suite(sig, smp.bx, smp.xi);
    SplitPoint flat = smp.bx;
    for (double& v : flat.y) v = 0.0;
    r.restriction = relative_deviation(kernel_e(sig, flat, smp.xi), Multivector::scalar(sig, std::polar(1.0, dot(flat.x, smp.xi))));
    const PointFunction f = [&](const SplitPoint& p) { return kernel_e(sig, p, smp.xi); };
    r.monogenic = monogenicity_residual(sig, f, smp.bx, 1e-4) / (1.0 + f(smp.bx).norm());
    return r;
  });
  std::vector<IdentityCheck> worst = results.front().ids;
  double restriction = 0.0, monogenic = 0.0;
  for (const auto& r : results) {
    for (std::size_t k = 0; k < worst.size(); ++k) worst[k].deviation = std::max(worst[k].deviation, r.ids[k].deviation);
    restriction = std::max(restriction, r.restriction);
    monogenic = std::max(monogenic, r.monogenic);
  }
  for (const auto& w : worst) rep.add(make_check(w.name, w.formula, w.deviation, 1e-10));
  rep.add(make_check("kernel.restriction", "e(x,xi) = e^{i<x,xi>}", restriction, 1e-14));
  rep.add(make_check("kernel.monogenicity", "(D_x + omega d_r) e(x+y,xi) = 0", monogenic, 1e-6));
  return rep;
}

/// Polynomial CK identities, Fueter polynomials, Taylor reconstruction and
/// the agreement of the two Gaussian routes.
inline SuiteReport run_ck_suite(const RunConfig& cfg, int points = 5) {
  suite_detail::require_quadrature_capability(cfg);
  SuiteReport rep = suite_detail::start("ck", cfg);
  const Signature sig = cfg.sig();
  const int d = sig.x_dim();
  const CkControl ctrl = suite_detail::ck_control(cfg);
  Sampler rng(cfg.seed);
  std::vector<SplitPoint> pts;
  for (int i = 0; i < points; ++i) pts.push_back(rng.split_point(sig, 2.0, 0.1, 2.0));

  double fueter = 0.0, estimate = 0.0, fnorm = 0.0;
  for (const auto& k : multi_indices_up_to(d, 5))
    for (const auto& bx : pts) {
      const Multivector ck = ck_polynomial(CliffordPolynomial::monomial(sig, k), bx);
      const Multivector pk = fueter_polynomial(sig, k, bx);
      fueter = std::max(fueter, relative_deviation(ck, pk * k.factorial()));
      double bound = 1.0 / k.factorial();
      for (int l = 0; l < d; ++l) bound *= std::pow(fueter_variable(sig, l, bx.x, bx.r(), bx.omega()).norm(), k[l]);
      estimate = std::max(estimate, pk.norm() / bound - 1.0);
      const Multivector pp = pk * clifford_conjugate(pk);
      fnorm = std::max(fnorm, (pp - Multivector::scalar(sig, pk.norm_sq())).norm() / std::max(pk.norm_sq(), 1e-300));
    }
  rep.add(make_check("ck.fueter_identity", "CK[x^k] = k! P_k", fueter, 1e-12));
  rep.add(make_check("ck.fueter_estimate", "|P_k| <= |z_0|^{k_0} ... |z_p|^{k_p} / k!", std::max(0.0, estimate), 1e-12));
  rep.add(make_check("ck.fueter_norm", "P_k bar(P_k) = |P_k|^2", fnorm, 1e-12));

  double plane = 0.0;
  for (const auto& bx : pts) {
    const auto xi = rng.uniform_vector(static_cast<std::size_t>(d), -1.0, 1.0);
    const CliffordPolynomial lin = suite_detail::linear_form(sig, xi);
    const Multivector base = Multivector::scalar(sig, dot(bx.x, xi)) + y_vector(sig, bx.y) * x_paravector(sig, xi);
    for (int k = 0; k <= 5; ++k)
      plane = std::max(plane, relative_deviation(ck_polynomial(suite_detail::polynomial_power(lin, k), bx), power(base, k)));
  }
  rep.add(make_check("ck.plane_wave_power", "CK[<x,xi>^k] = (<x,xi> + y xi)^k", plane, 1e-12));

  CliffordPolynomial poly(sig);
  for (const auto& k : multi_indices_up_to(d, 5)) poly.add_term(k, rng.multivector(sig));
  double taylor = 0.0;
  for (const auto& bx : pts) taylor = std::max(taylor, relative_deviation(taylor_reconstruction(poly, bx), ck_polynomial(poly, bx)));
  rep.add(make_check("ck.taylor_reconstruction", "sum_k P_k d^k f0(0) = CK[f0]", taylor, 1e-12));

  const auto ks = multi_indices_up_to(d, 4);
  struct RouteResult {
    double dual = 0.0;
    double restriction = 0.0;
    double restriction_quadrature = 0.0;
    double monogenic = 0.0;
  };
  const auto route_results = parallel_map<RouteResult>(ks.size(), [&](std::size_t i) {
    RouteResult r;
    const HermiteGaussian f0 = psi_seed(sig, ks[i]);
    for (const auto& bx : pts) {
      const Multivector a = ck_hermite_gaussian(f0, bx, CkRoute::fourier, ctrl);
      const Multivector b = ck_hermite_gaussian(f0, bx, CkRoute::delta_series, ctrl);
      r.dual = std::max(r.dual, relative_deviation(a, b));
      SplitPoint flat = bx;
      for (double& v : flat.y) v = 0.0;
      const Multivector expect = f0.evaluate(flat.x);
      r.restriction = std::max(r.restriction, relative_deviation(ck_hermite_gaussian(f0, flat, CkRoute::delta_series, ctrl), expect));
      r.restriction_quadrature = std::max(
          r.restriction_quadrature,
          (ck_hermite_gaussian(f0, flat, CkRoute::fourier, ctrl) - expect).norm() / std::max(expect.norm(), 1.0));
      const PointFunction fn = [&](const SplitPoint& p) { return ck_hermite_gaussian(f0, p, CkRoute::delta_series, ctrl); };
      r.monogenic = std::max(r.monogenic, monogenicity_residual(sig, fn, bx, 1e-4) / (1.0 + b.norm()));
    }
    return r;
  });
  RouteResult worst;
  for (const auto& r : route_results) {
    worst.dual = std::max(worst.dual, r.dual);
    worst.restriction = std::max(worst.restriction, r.restriction);
    worst.restriction_quadrature = std::max(worst.restriction_quadrature, r.restriction_quadrature);
    worst.monogenic = std::max(worst.monogenic, r.monogenic);
  }
  rep.add(make_check("ck.dual_route", "kernel integral = delta series for CK[x^k e^{-|x|^2/4}], |k| <= 4", worst.dual, 1e-8));
  rep.add(make_check("ck.restriction", "CK[f0](x) = f0(x), delta series", worst.restriction, 1e-12));
  // The quadrature error is absolute, so it is measured against max(|f0(x)|, 1).
  rep.add(make_check("ck.restriction_quadrature", "CK[f0](x) = f0(x), kernel integral", worst.restriction_quadrature, 1e-12));
  rep.add(make_check("ck.monogenicity", "(D_x + omega d_r) CK[x^k e^{-|x|^2/4}] = 0", worst.monogenic, 1e-6));
  return rep;
}

/// Gauss-Hermite exactness, sphere areas, the mass of dmu and the two radial
/// integrals behind the isometry, plus self-convergence under doubling.
inline SuiteReport run_quadrature_suite(const RunConfig& cfg) {
  suite_detail::require_quadrature_capability(cfg);
  SuiteReport rep = suite_detail::start("quadrature", cfg);
  const Signature sig = cfg.sig();
  const int q = sig.q;
  const double sqrt_pi = std::sqrt(std::numbers::pi);

  {
    const QuadratureRule gh = gauss_hermite_rule(cfg.x_order, 1);
    double s0 = 0.0, s2 = 0.0, sh = 0.0;
    for (std::size_t i = 0; i < gh.size(); ++i) {
      const double x = gh.nodes[i], w = gh.weights[i];
      const double h2 = 4.0 * x * x - 2.0;
      s0 += w;
      s2 += w * x * x;
      sh += w * h2 * h2;
    }
    const double dev = std::max({relative_deviation(cplx(s0), cplx(sqrt_pi)), relative_deviation(cplx(s2), cplx(sqrt_pi / 2.0)),
                                 relative_deviation(cplx(sh), cplx(8.0 * sqrt_pi))});
    rep.add(make_check("quadrature.gauss_hermite", "int {1, x^2, H_2^2} e^{-x^2} dx = {sqrt(pi), sqrt(pi)/2, 8 sqrt(pi)}", dev, 1e-14));
  }
  {
    const QuadratureRule xr = lebesgue_rule(cfg.x_order, sig.x_dim(), 0.5);
    double s = 0.0;
    for (std::size_t i = 0; i < xr.size(); ++i) {
      const auto x = xr.node(i);
      s += xr.weights[i] * std::exp(-0.5 * dot(x, x));
    }
    rep.add(make_check("quadrature.x_gaussian", "int e^{-|x|^2/2} dx = (2 pi)^{(p+1)/2}",
                       relative_deviation(cplx(s), cplx(std::pow(2.0 * std::numbers::pi, 0.5 * sig.x_dim()))), 1e-12));
  }
  rep.add(make_check("quadrature.sphere_area", "|S| = 2 pi^{q/2} / Gamma(q/2)",
                     relative_deviation(cplx(sphere_area(q)), cplx(2.0 * std::pow(std::numbers::pi, 0.5 * q) / std::tgamma(0.5 * q))),
                     1e-15));
  {
    const QuadratureRule yr = y_space_rule(q, cfg.radial_order, cfg.sphere_order);
    double mass = 0.0;
    for (double w : yr.weights) mass += w;
    rep.add(make_check("quadrature.mu_mass", "c int e^{-|y|^2} |y|^{1-q} dy = 1",
                       std::abs(MeasureMu{sig.p, q}.normalization() * mass - 1.0), 1e-10));
  }
  double radial = 0.0, odd = 0.0;
  for (double s : {0.5, 1.0, 2.0}) {
    const int order = std::max(80, static_cast<int>(std::ceil(40.0 * s * s)));
    const QuadratureRule yr = y_space_rule(q, order, cfg.sphere_order);
    double val = 0.0, scale = 0.0;
    std::vector<double> vec(static_cast<std::size_t>(q), 0.0);
    for (std::size_t i = 0; i < yr.size(); ++i) {
      const auto y = yr.node(i);
      const double r = std::sqrt(dot(y, y));
      val += yr.weights[i] * std::cosh(2.0 * r * s);
      const double g = yr.weights[i] * std::sinh(2.0 * r * s) / (r * s);
      for (std::size_t j = 0; j < vec.size(); ++j) vec[j] += g * y[j];
      scale += std::abs(g) * r;
    }
    radial = std::max(radial, relative_deviation(cplx(val), cplx(0.5 * sqrt_pi * sphere_area(q) * std::exp(s * s))));
    odd = std::max(odd, std::sqrt(dot(vec, vec)) / scale);
  }
  rep.add(make_check("quadrature.radial_cosh", "int e^{-|y|^2} |y|^{1-q} cosh(2|y|s) dy = (sqrt(pi)/2) |S| e^{s^2}", radial, 1e-8));
  rep.add(make_check("quadrature.radial_odd", "int e^{-|y|^2} |y|^{1-q} sinh(2|y|s)/(|y|s) y dy = 0", odd, 1e-10));

  const auto probe = [&](int radial_order, int sphere_order) {
    const QuadratureRule yr = y_space_rule(q, radial_order, sphere_order);
    double v = 0.0;
    for (std::size_t i = 0; i < yr.size(); ++i) {
      const auto y = yr.node(i);
      v += yr.weights[i] * std::cosh(std::sqrt(dot(y, y))) * (1.0 + y[0] * y[0]);
    }
    return v;
  };
  rep.add(make_check("quadrature.self_convergence", "doubling radial and sphere orders leaves integrals unchanged",
                     relative_deviation(cplx(probe(cfg.radial_order, cfg.sphere_order)),
                                        cplx(probe(2 * cfg.radial_order, 2 * cfg.sphere_order))),
                     1e-8));
  return rep;
}

/// Gram of {U phi_k} against Gram of {phi_k}, plus pointwise properties of U:
/// agreement of its two routes, restriction to the heat flow, monogenicity
/// and right linearity.
inline SuiteReport run_isometry_suite(const RunConfig& cfg, int points = 8) {
  suite_detail::require_quadrature_capability(cfg);
  SuiteReport rep = suite_detail::start("isometry", cfg);
  const Signature sig = cfg.sig();
  const CkControl ctrl = suite_detail::ck_control(cfg);
  const IsometryReport iso = verify_isometry(sig, cfg.max_degree, suite_detail::gram_rules(cfg), ctrl);
  rep.add(make_check("isometry.gram", "<U phi_k, U phi_l>_mu = <phi_k, phi_l>", iso.gram.max_deviation, 1e-6));
  rep.add(make_check("isometry.diagonal", "<U phi_k, U phi_k>_mu = pi^{(p+1)/2} 2^{|k|} k!", iso.gram.max_diagonal_deviation, 1e-6));
  rep.add(make_check("isometry.off_diagonal", "<U phi_k, U phi_l>_mu = 0, k != l", iso.gram.max_off_diagonal, 1e-8));
  rep.add(make_check("isometry.clifford_pairing", "int (U phi_k)^dagger U phi_l dmu = <phi_k, phi_l>", iso.gram.max_clifford_deviation, 1e-6));
  rep.add(make_check("isometry.hermite_norms", "<phi_k, phi_k> = pi^{(p+1)/2} 2^{|k|} k!", iso.max_norm_formula_deviation, 1e-12));

  Sampler rng(cfg.seed);
  std::vector<SplitPoint> pts;
  for (int i = 0; i < points; ++i) pts.push_back(rng.split_point(sig, 2.0, 0.1, 2.0));
  const auto ks = multi_indices_up_to(sig.x_dim(), std::min(cfg.max_degree, 3));
  const Multivector c = rng.multivector(sig);
  struct Result {
    double routes = 0.0, restriction = 0.0, monogenic = 0.0, linear = 0.0;
  };
  const auto results = parallel_map<Result>(ks.size(), [&](std::size_t i) {
    Result r;
    const HermiteGaussian f = phi_k(sig, ks[i]);
    const HermiteGaussian heated = heat_semigroup(f, kTransformHeatTime);
    for (const auto& bx : pts) {
      const Multivector a = segal_bargmann(f, bx, TransformRoute::fck, ctrl);
      r.routes = std::max(r.routes, relative_deviation(a, segal_bargmann(f, bx, TransformRoute::heat_ck, ctrl)));
      SplitPoint flat = bx;
      for (double& v : flat.y) v = 0.0;
      const Multivector expect = heated.evaluate(flat.x);
      r.restriction = std::max(r.restriction, (segal_bargmann(f, flat, TransformRoute::fck, ctrl) - expect).norm() / std::max(expect.norm(), 1.0));
      const PointFunction u = [&](const SplitPoint& p) { return segal_bargmann(f, p, TransformRoute::fck, ctrl); };
      r.monogenic = std::max(r.monogenic, monogenicity_residual(sig, u, bx, 1e-4) / (1.0 + a.norm()));
      r.linear = std::max(r.linear, relative_deviation(segal_bargmann(f.right_multiplied(c), bx, TransformRoute::fck, ctrl), a * c));
    }
    return r;
  });
  Result worst;
  for (const auto& r : results) {
    worst.routes = std::max(worst.routes, r.routes);
    worst.restriction = std::max(worst.restriction, r.restriction);
    worst.monogenic = std::max(worst.monogenic, r.monogenic);
    worst.linear = std::max(worst.linear, r.linear);
  }
  rep.add(make_check("transform.routes", "kernel integral = CK[exp(Delta/2) f]", worst.routes, 1e-7));
  rep.add(make_check("transform.restriction", "U[f](x) = exp(Delta/2) f(x), scaled by max(|f|, 1)", worst.restriction, 1e-10));
  rep.add(make_check("transform.monogenicity", "(D_x + omega d_r) U[f] = 0", worst.monogenic, 1e-6));
  rep.add(make_check("transform.right_linearity", "U[f c] = U[f] c", worst.linear, 1e-12));
  return rep;
}

/// psi_k orthogonality (scalar and blade-multiplied), its two
/// characterizations, and for (p, q) = (0, 1) the holomorphic reduction.
inline SuiteReport run_basis_suite(const RunConfig& cfg, int points = 20, int classical_points = 50) {
  suite_detail::require_quadrature_capability(cfg);
  SuiteReport rep = suite_detail::start("basis", cfg);
  const Signature sig = cfg.sig();
  const CkControl ctrl = suite_detail::ck_control(cfg);
  const GramComparison g = verify_basis_orthogonality(sig, cfg.max_degree, suite_detail::gram_rules(cfg), ctrl);
  rep.add(make_check("basis.gram", "<psi_k, psi_l>_mu = 2^{p+1} pi^{(p+1)/2} 2^{|k|} k! delta_kl", g.max_deviation, 1e-6));
  rep.add(make_check("basis.blade_orthogonality", "int psi_k^dagger psi_l dmu = 2^{p+1} pi^{(p+1)/2} 2^{|k|} k! delta_kl",
                     g.max_clifford_deviation, 1e-6));

  Sampler rng(cfg.seed);
  std::vector<SplitPoint> pts;
  for (int i = 0; i < points; ++i) pts.push_back(rng.split_point(sig, 2.0, 0.1, 2.0));
  const auto ks = multi_indices_up_to(sig.x_dim(), std::min(cfg.max_degree, 3));
  const double pre = std::pow(2.0, 0.5 * sig.x_dim());
  const auto dual = parallel_map<double>(ks.size(), [&](std::size_t i) {
    const GSMFunction psi = psi_k(sig, ks[i], ctrl);
    const HermiteGaussian phi = phi_k(sig, ks[i]);
    double dev = 0.0;
    for (const auto& bx : pts) dev = std::max(dev, relative_deviation(psi(bx), segal_bargmann(phi, bx, TransformRoute::fck, ctrl) * pre));
    return dev;
  });
  double worst = 0.0;
  for (double v : dual) worst = std::max(worst, v);
  rep.add(make_check("basis.dual_characterization", "psi_k = 2^{(p+1)/2} U[phi_k]", worst, 1e-7));

  if (sig.p == 0 && sig.q == 1) {
    double dev = 0.0;
    for (int i = 0; i < classical_points; ++i) {
      const double rad = 2.0 * std::sqrt(rng.uniform());
      const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const std::complex<double> z = std::polar(rad, ang);
      const SplitPoint bx{{z.real()}, {z.imag()}};
      for (int k = 0; k <= std::min(cfg.max_degree, 3); ++k) {
        const std::complex<double> w = std::pow(z, k) * std::exp(-z * z / 4.0);
        Multivector expect(sig);
        expect[0] = w.real();
        expect[1] = w.imag();
        dev = std::max(dev, relative_deviation(psi_k(sig, MultiIndex({k}), ctrl)(bx), expect));
      }
    }
    rep.add(make_check("basis.classical_reduction", "psi_k = z^k e^{-z^2/4}, z = x + i y", dev, 1e-8));
  }
  return rep;
}

/// 2^{(p+1)/2} U[(X - iP) phi_k] = CK[x x^k e^{-|x|^2/4}] at seeded points.
inline SuiteReport run_schrodinger_suite(const RunConfig& cfg, int points = 10, int max_k = 2) {
  suite_detail::require_quadrature_capability(cfg);
  SuiteReport rep = suite_detail::start("schrodinger", cfg);
  const Signature sig = cfg.sig();
  const CkControl ctrl = suite_detail::ck_control(cfg);
  Sampler rng(cfg.seed);
  std::vector<SplitPoint> pts;
  for (int i = 0; i < points; ++i) pts.push_back(rng.split_point(sig, 2.0, 0.1, 2.0));
  for (const auto& k : multi_indices_up_to(sig.x_dim(), max_k)) {
    const SchrodingerReport s = verify_schrodinger(sig, k, pts, ctrl);
    rep.add(make_check("schrodinger.k" + k.to_string(), "U (X - iP) U^{-1} psi_k = CK[x x^k e^{-|x|^2/4}]", s.max_deviation, 1e-6));
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "kernel", "ck", "quadrature", "isometry", "basis", "schrodinger"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "clifford") return run_clifford_suite(cfg);
  if (name == "kernel") return run_kernel_suite(cfg);
  if (name == "ck") return run_ck_suite(cfg);
  if (name == "quadrature") return run_quadrature_suite(cfg);
  if (name == "isometry") return run_isometry_suite(cfg);
  if (name == "basis") return run_basis_suite(cfg);
  if (name == "schrodinger") return run_schrodinger_suite(cfg);
  if (name == "all") {
    SuiteReport all = suite_detail::start("all", cfg);
    for (const auto& n : suite_names()) all.append(run_suite(n, cfg));
    return all;
  }
  throw ContractViolation("unknown suite '" + name + "'");
}

}  // namespace gsm
