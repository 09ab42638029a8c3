#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gsm/bargmann.hpp"
#include "gsm/quadrature.hpp"

using namespace gsm;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double sum_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST(GaussHermite, TwoPointRule) {
  const Rule1D r = gauss_hermite_1d(2);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r.nodes[0], -std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(r.nodes[1], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(r.weights[0], kSqrtPi / 2, 1e-15);
  EXPECT_NEAR(r.weights[1], kSqrtPi / 2, 1e-15);
}

TEST(GaussHermite, ExactForMomentsBelowTwoN) {
  for (int n : {1, 3, 8, 20, 60}) {
    const Rule1D r = gauss_hermite_1d(n);
    for (int m = 0; m < std::min(2 * n, 40); ++m) {
      double s = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r.weights[i] * std::pow(r.nodes[i], m);
        scale += r.weights[i] * std::pow(std::abs(r.nodes[i]), m);
      }
      const double exact = m % 2 ? 0.0 : std::tgamma(0.5 * (m + 1));
      EXPECT_NEAR(s, exact, 1e-13 * scale) << "n=" << n << " m=" << m;
    }
  }
}

TEST(GaussHermite, HighOrderNodesAreDistinctAndSymmetric) {
  const Rule1D r = gauss_hermite_1d(300);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r.nodes[i], -r.nodes[r.size() - 1 - i]);
  EXPECT_NEAR(sum_of(r.weights), kSqrtPi, 1e-13);
  EXPECT_THROW(gauss_hermite_1d(361), CapabilityError);
  EXPECT_THROW(gauss_hermite_1d(0), ContractViolation);
}

TEST(GaussLegendre, IntegratesPolynomials) {
  const Rule1D r = gauss_legendre_1d(7);
  for (int m = 0; m < 14; ++m) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
    EXPECT_NEAR(s, m % 2 ? 0.0 : 2.0 / (m + 1), 1e-14);
  }
}

TEST(Tensor, GaussianWeightedAndLebesgueRules) {
  const QuadratureRule g = gaussian_weighted_rule(10, 2, 0.5);
  EXPECT_EQ(g.size(), 100u);
  EXPECT_EQ(g.domain, Domain::xi_space);
  // int x0^2 e^{-|x|^2/2} dx = sqrt(2 pi) * sqrt(2 pi)
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * g.node(i)[0] * g.node(i)[0];
  EXPECT_NEAR(s, 2 * std::numbers::pi, 1e-12);

  const QuadratureRule l = lebesgue_rule(40, 3, 0.5);
  double t = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto x = l.node(i);
    t += l.weights[i] * std::exp(-0.7 * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  }
  EXPECT_NEAR(t, std::pow(std::numbers::pi / 0.7, 1.5), 1e-10);
  EXPECT_THROW(lebesgue_rule(4, 4, 0.5), CapabilityError);
  EXPECT_THROW(lebesgue_rule(4, 1, 0.0), ContractViolation);
}

TEST(HalfLine, EvenMomentsAndRate) {
  // At rate 1 the rule is Gauss-Hermite folded onto r >= 0 and exact; at other
  // rates the folded weight is a smooth non-polynomial factor, so only converges.
  for (const auto& [rate, tol] : {std::pair{1.0, 1e-12}, std::pair{0.5, 1e-10}}) {
    const Rule1D r = half_line_rule(20, rate);
    for (int m = 0; m <= 12; m += 2) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
      const double exact = 0.5 * std::tgamma(0.5 * (m + 1));
      EXPECT_NEAR(s, exact, tol * exact) << "rate=" << rate << " m=" << m;
    }
  }
}

TEST(Sphere, AreasAndSecondMoments) {
  EXPECT_EQ(sphere_area(1), 2.0);
  EXPECT_DOUBLE_EQ(sphere_area(2), 2 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(sphere_area(3), 4 * std::numbers::pi);
  EXPECT_NEAR(sphere_area(4), 2 * std::numbers::pi * std::numbers::pi, 1e-14);
  for (int q = 1; q <= 3; ++q) {
    const QuadratureRule s = sphere_rule(q, 8);
    EXPECT_NEAR(sum_of(s.weights), sphere_area(q), 1e-13);
    // int w_0^2 dsigma = |S| / q, int w_0^4 dsigma = 3 |S| / (q (q + 2))
    double m2 = 0.0, m4 = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double w = s.node(i)[0];
      m2 += s.weights[i] * w * w;
      m4 += s.weights[i] * w * w * w * w;
    }
    EXPECT_NEAR(m2, sphere_area(q) / q, 1e-13);
    EXPECT_NEAR(m4, 3 * sphere_area(q) / (q * (q + 2)), 1e-13);
  }
  EXPECT_THROW(sphere_rule(4, 8), CapabilityError);
}

class YRule : public ::testing::TestWithParam<int> {};

TEST_P(YRule, MuMassAndRadialIntegrals) {
  const int q = GetParam();
  const MeasureMu mu{0, q};
  const QuadratureRule yr = y_space_rule(q, 16, 8);
  EXPECT_NEAR(mu.normalization() * sum_of(yr.weights), 1.0, 1e-13);
  for (double s : {0.5, 1.0, 2.0}) {
    const QuadratureRule big = y_space_rule(q, 160, 8);
    double v = 0.0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      const auto y = big.node(i);
      double r2 = 0.0;
      for (double c : y) r2 += c * c;
      v += big.weights[i] * std::cosh(2 * s * std::sqrt(r2));
    }
    EXPECT_NEAR(v, 0.5 * kSqrtPi * sphere_area(q) * std::exp(s * s), 1e-9 * v);
  }
}

INSTANTIATE_TEST_SUITE_P(Q123, YRule, ::testing::Values(1, 2, 3));

TEST(FullSpace, PointsAndWeightsFactor) {
  const Signature sig{1, 2};
  const FullSpaceRule r = make_full_space_rule(sig, 4, 3, 4);
  EXPECT_EQ(r.size(), r.x.size() * r.y.size());
  const SplitPoint pt = r.point(r.y.size() + 2);
  EXPECT_EQ(pt.x.size(), 2u);
  EXPECT_EQ(pt.y.size(), 2u);
  EXPECT_EQ(r.weight(r.y.size() + 2), r.x.weights[1] * r.y.weights[2]);
}

TEST(MuGram, GaussianMassAndWorkerIndependence) {
  // int e^{-x^2/2} dmu = sqrt(2 pi) for any q.
  const Signature sig{0, 2};
  const FullSpaceRule rule = make_full_space_rule(sig, 24, 16, 8);
  const PointFunction g = [&](const SplitPoint& p) { return Multivector::scalar(sig, std::exp(-0.25 * p.x[0] * p.x[0])); };
  const PointFunction h = [&](const SplitPoint& p) { return embed(sig, p) * std::exp(-0.25 * (p.x[0] * p.x[0] + p.r() * p.r())); };
  const PointFunction fs[] = {g, h};
  const GramMatrices a = mu_gram(sig, fs, MeasureMu{0, 2}, rule, 1);
  const GramMatrices b = mu_gram(sig, fs, MeasureMu{0, 2}, rule, 3);
  EXPECT_NEAR(a.at(0, 0).real(), std::sqrt(2 * std::numbers::pi), 1e-11);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(a.at(i, j), b.at(i, j));
      EXPECT_EQ(a.clifford_at(i, j), b.clifford_at(i, j));
      EXPECT_EQ(a.at(i, j), std::conj(a.at(j, i)));
    }
  EXPECT_EQ(mu_inner_product(sig, g, h, MeasureMu{0, 2}, rule), a.at(0, 1));
}

TEST(MuGram, PsiZeroNormForTwoConfigurations) {
  // <psi_0, psi_0>_mu = 2 sqrt(pi) for p = 0 regardless of q.
  for (const Signature sig : {Signature{0, 1}, Signature{0, 2}}) {
    const FullSpaceRule lo = make_full_space_rule(sig, 32, 16, 8);
    const FullSpaceRule hi = make_full_space_rule(sig, 64, 32, 16);
    const PointFunction psi = psi_k(sig, MultiIndex({0})).eval;
    const cplx a = mu_inner_product(sig, psi, psi, MeasureMu{0, sig.q}, lo);
    const cplx b = mu_inner_product(sig, psi, psi, MeasureMu{0, sig.q}, hi);
    EXPECT_NEAR(a.real(), 2 * kSqrtPi, 1e-10);
    EXPECT_NEAR(a.real(), b.real(), 1e-10);
  }
}
