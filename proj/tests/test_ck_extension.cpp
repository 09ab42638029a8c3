#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gsm/ck_extension.hpp"
#include "gsm/sampling.hpp"

using namespace gsm;

namespace {

// sum_m T^m(1)/m! with T(c) = i y sum_l e_l c xi_l, the exponential series of
// y D_x applied to e^{i<x,xi>}, truncated at m = terms.
Multivector kernel_series(Signature sig, const SplitPoint& bx, const std::vector<double>& xi, int terms) {
  const Multivector yv = y_vector(sig, bx.y);
  Multivector term = Multivector::scalar(sig, 1.0);
  Multivector sum = term;
  for (int m = 1; m <= terms; ++m) {
    Multivector next(sig);
    for (int l = 0; l < sig.x_dim(); ++l) next += Multivector::generator(sig, l) * term * xi[static_cast<std::size_t>(l)];
    term = (yv * next) * cplx(0.0, 1.0 / m);
    sum += term;
  }
  return sum * std::polar(1.0, dot(bx.x, xi));
}

// Maps a + b i to a + b omega, the slice identification for p = 0.
Multivector on_slice(Signature sig, std::complex<double> w, const std::vector<double>& omega) {
  Multivector m = Multivector::scalar(sig, w.real());
  m.add_scaled(y_vector(sig, omega), w.imag());
  return m;
}

std::vector<Signature> configs() { return {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}}; }

}  // namespace

TEST(Sinhc, SmallArgumentsAndContinuity) {
  EXPECT_EQ(sinhc(0.0), 1.0);
  for (double t : {1e-8, 1e-5, 9.9e-5, 1e-4, 1.01e-4, 0.3, 5.0}) {
    const long double lt = t;
    const double ref = static_cast<double>(std::sinh(lt) / lt);
    EXPECT_NEAR(sinhc(t), ref, 4e-16 * ref) << t;
    EXPECT_EQ(sinhc(-t), sinhc(t));
  }
}

TEST(Kernel, ClosedValues) {
  const Signature sig{0, 1};
  const std::vector<double> xi{1.0};
  const Multivector e0 = kernel_e(sig, SplitPoint{{0.0}, {0.0}}, xi);
  EXPECT_EQ(e0, Multivector::scalar(sig, 1.0));
  const Multivector e1 = kernel_e(sig, SplitPoint{{0.0}, {1.0}}, xi);
  EXPECT_NEAR(e1[0].real(), std::cosh(1.0), 1e-15);
  EXPECT_NEAR(e1[1].imag(), std::sinh(1.0), 1e-15);
  const Multivector epi = kernel_e(sig, SplitPoint{{std::numbers::pi}, {0.0}}, xi);
  EXPECT_NEAR(epi[0].real(), -1.0, 1e-15);
}

class KernelConfig : public ::testing::TestWithParam<Signature> {};

TEST_P(KernelConfig, MatchesExponentialSeries) {
  const Signature sig = GetParam();
  Sampler rng(1);
  for (int s = 0; s < 20; ++s) {
    const SplitPoint bx = rng.split_point(sig, 2.0, 0.0, 1.5);
    const auto xi = rng.uniform_vector(static_cast<std::size_t>(sig.x_dim()), -1.5, 1.5);
    EXPECT_LT(relative_deviation(kernel_e(sig, bx, xi), kernel_series(sig, bx, xi, 60)), 1e-13);
  }
}

TEST_P(KernelConfig, IdentitiesAndMonogenicity) {
  const Signature sig = GetParam();
  Sampler rng(2);
  for (int s = 0; s < 20; ++s) {
    const SplitPoint bx = rng.split_point(sig, 2.0, 0.1, 2.0);
    const auto xi = rng.uniform_vector(static_cast<std::size_t>(sig.x_dim()), -1.5, 1.5);
    for (const auto& c : kernel_identity_suite(sig, bx, xi)) EXPECT_LT(c.deviation, 1e-10) << c.name;
    const PointFunction e = [&](const SplitPoint& p) { return kernel_e(sig, p, xi); };
    EXPECT_LT(monogenicity_residual(sig, e, bx, 1e-4) / (1 + kernel_e(sig, bx, xi).norm()), 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(Configs, KernelConfig, ::testing::ValuesIn(configs()),
                         [](const auto& info) { return "p" + std::to_string(info.param.p) + "q" + std::to_string(info.param.q); });

TEST(Monogenicity, StencilMustFit) {
  const Signature sig{0, 1};
  const PointFunction one = [&](const SplitPoint&) { return Multivector::scalar(sig, 1.0); };
  EXPECT_THROW(monogenicity_residual(sig, one, SplitPoint{{0.0}, {1e-5}}, 1e-4), GeometryError);
}

TEST(Monogenicity, DetectsNonMonogenicInput) {
  // |y|^2 is annihilated by neither D_x nor omega d_r.
  const Signature sig{0, 1};
  const PointFunction f = [&](const SplitPoint& p) { return Multivector::scalar(sig, p.r() * p.r()); };
  EXPECT_GT(monogenicity_residual(sig, f, SplitPoint{{0.0}, {1.0}}, 1e-4), 1.0);
}

TEST(PolynomialCk, SliceCaseIsParavectorPower) {
  // For p = 0, CK[x^k](x + y) = (x + y)^k.
  for (const Signature sig : {Signature{0, 1}, Signature{0, 3}}) {
    Sampler rng(3);
    for (int s = 0; s < 10; ++s) {
      const SplitPoint bx = rng.split_point(sig, 2.0, 0.0, 2.0);
      for (int k = 0; k <= 6; ++k)
        EXPECT_LT(relative_deviation(ck_polynomial(CliffordPolynomial::monomial(sig, MultiIndex({k})), bx), power(embed(sig, bx), k)),
                  1e-13);
    }
  }
}

TEST(PolynomialCk, FueterIdentityAndTaylor) {
  for (const Signature sig : configs()) {
    Sampler rng(4);
    const SplitPoint bx = rng.split_point(sig, 2.0, 0.1, 2.0);
    for (const auto& k : multi_indices_up_to(sig.x_dim(), 5)) {
      const Multivector ck = ck_polynomial(CliffordPolynomial::monomial(sig, k), bx);
      EXPECT_LT(relative_deviation(ck, fueter_polynomial(sig, k, bx) * k.factorial()), 1e-12) << k.to_string();
    }
    CliffordPolynomial poly(sig);
    for (const auto& k : multi_indices_up_to(sig.x_dim(), 4)) poly.add_term(k, rng.multivector(sig));
    EXPECT_LT(relative_deviation(taylor_reconstruction(poly, bx), ck_polynomial(poly, bx)), 1e-12);
  }
}

TEST(PolynomialCk, FueterRejectsBadDirection) {
  const Signature sig{1, 2};
  const std::vector<double> x{0.0, 0.0};
  EXPECT_THROW(fueter_polynomial(sig, FueterPolynomialSpec{MultiIndex({1, 0}), {1.0, 1.0}}, x, 1.0), ContractViolation);
}

TEST(PolynomialCk, ResultIsMonogenic) {
  const Signature sig{2, 1};
  Sampler rng(5);
  CliffordPolynomial poly(sig);
  for (const auto& k : multi_indices_up_to(3, 3)) poly.add_term(k, rng.multivector(sig));
  const PointFunction f = [&](const SplitPoint& p) { return ck_polynomial(poly, p); };
  const SplitPoint bx = rng.split_point(sig, 1.5, 0.2, 1.5);
  EXPECT_LT(monogenicity_residual(sig, f, bx, 1e-4) / (1 + f(bx).norm()), 1e-6);
}

TEST(GaussianCk, SliceCaseIsHolomorphicContinuation) {
  // For p = 0, CK[x^k e^{-a x^2}](x + r omega) is z^k e^{-a z^2}, z = x + i r, with i -> omega.
  for (const Signature sig : {Signature{0, 1}, Signature{0, 2}, Signature{0, 3}}) {
    Sampler rng(6);
    for (int s = 0; s < 10; ++s) {
      const SplitPoint bx = rng.split_point(sig, 2.0, 0.0, 2.5);
      const std::complex<double> z(bx.x[0], bx.r());
      for (int k = 0; k <= 4; ++k)
        for (double a : {0.25, 0.5}) {
          const Multivector expect = on_slice(sig, std::pow(z, k) * std::exp(-a * z * z), bx.omega());
          const Multivector got = ck_hermite_gaussian(monomial_gaussian(sig, MultiIndex({k}), a), bx, CkRoute::delta_series);
          EXPECT_LT(relative_deviation(got, expect), 1e-10) << "k=" << k << " a=" << a;
        }
    }
  }
}

TEST(GaussianCk, RoutesAgree) {
  for (const Signature sig : {Signature{0, 1}, Signature{1, 1}, Signature{2, 1}}) {
    Sampler rng(7);
    const SplitPoint bx = rng.split_point(sig, 2.0, 0.1, 2.0);
    for (const auto& k : multi_indices_up_to(sig.x_dim(), 4)) {
      const HermiteGaussian f0 = monomial_gaussian(sig, k, 0.25);
      EXPECT_LT(relative_deviation(ck_hermite_gaussian(f0, bx, CkRoute::fourier), ck_hermite_gaussian(f0, bx, CkRoute::delta_series)),
                1e-8)
          << k.to_string();
    }
  }
}

TEST(GaussianCk, RestrictionAndRightLinearity) {
  const Signature sig{1, 2};
  Sampler rng(8);
  CliffordPolynomial p(sig);
  for (const auto& k : multi_indices_up_to(2, 3)) p.add_term(k, rng.multivector(sig));
  const HermiteGaussian f0(p, 0.4);
  const SplitPoint flat{{0.3, -0.6}, {0.0, 0.0}};
  EXPECT_LT(relative_deviation(ck_hermite_gaussian(f0, flat, CkRoute::delta_series), f0.evaluate(flat.x)), 1e-14);
  const Multivector c = rng.multivector(sig);
  const SplitPoint bx = rng.split_point(sig, 2.0, 0.1, 2.0);
  EXPECT_LT(relative_deviation(ck_hermite_gaussian(f0.right_multiplied(c), bx, CkRoute::delta_series),
                               ck_hermite_gaussian(f0, bx, CkRoute::delta_series) * c),
            1e-13);
}

TEST(GaussianCk, DeltaSeriesIsMonogenic) {
  for (const Signature sig : {Signature{1, 1}, Signature{2, 1}, Signature{1, 3}}) {
    Sampler rng(9);
    CliffordPolynomial p(sig);
    for (const auto& k : multi_indices_up_to(sig.x_dim(), 2)) p.add_term(k, rng.multivector(sig));
    const HermiteGaussian f0(p, 0.3);
    const PointFunction f = [&](const SplitPoint& pt) { return ck_hermite_gaussian(f0, pt, CkRoute::delta_series); };
    for (int s = 0; s < 3; ++s) {
      const SplitPoint bx = rng.split_point(sig, 2.0, 0.2, 2.0);
      EXPECT_LT(monogenicity_residual(sig, f, bx, 1e-4) / (1 + f(bx).norm()), 1e-6);
    }
  }
}

TEST(GaussianCk, DeltaSeriesReportsNonConvergence) {
  const Signature sig{0, 1};
  CkControl ctrl;
  ctrl.max_terms = 8;
  const SplitPoint far{{0.0}, {6.0}};
  EXPECT_THROW(ck_hermite_gaussian(monomial_gaussian(sig, MultiIndex({2}), 0.5), far, CkRoute::delta_series, ctrl), NonConvergence);
}

TEST(GaussianCk, FourierRouteLimits) {
  const HermiteGaussian f1 = monomial_gaussian(Signature{0, 1}, MultiIndex({0}), 0.25);
  EXPECT_THROW(ck_hermite_gaussian(f1, SplitPoint{{0.0}, {4.5}}, CkRoute::fourier), RegionError);
  EXPECT_NO_THROW(ck_hermite_gaussian(f1, SplitPoint{{0.0}, {4.5}}, CkRoute::delta_series));
  const Signature big{3, 1};
  const HermiteGaussian f3 = monomial_gaussian(big, MultiIndex::zero(4), 0.25);
  EXPECT_THROW(ck_hermite_gaussian(f3, SplitPoint::origin(big), CkRoute::fourier), CapabilityError);
  EXPECT_THROW(ck_hermite_gaussian(HermiteGaussian::gaussian(Signature{0, 1}, 0.0), SplitPoint{{0.0}, {1.0}}, CkRoute::delta_series),
               NotInFamily);
}
