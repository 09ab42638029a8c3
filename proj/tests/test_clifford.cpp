#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "gsm/clifford.hpp"
#include "gsm/sampling.hpp"

using namespace gsm;

namespace {

constexpr double kTol = 1e-12;

std::vector<Signature> small_signatures() {
  std::vector<Signature> out;
  for (int n = 1; n <= 6; ++n)
    for (int q = 1; q <= n; ++q) out.push_back({n - q, q});
  return out;
}

// Hamilton product on (w, x, y, z).
std::array<double, 4> hamilton(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

}  // namespace

TEST(Signature, ValidatesRanges) {
  EXPECT_THROW((Signature{-1, 1}.validate()), ContractViolation);
  EXPECT_THROW((Signature{0, 0}.validate()), ContractViolation);
  EXPECT_THROW((Signature{6, 7}.validate()), CapabilityError);
  EXPECT_NO_THROW((Signature{0, 12}.validate()));
}

TEST(Multivector, GeneratorsSquareToMinusOneAndAnticommute) {
  for (const Signature sig : small_signatures())
    for (int i = 1; i <= sig.n(); ++i)
      for (int j = 1; j <= sig.n(); ++j) {
        const auto ei = Multivector::generator(sig, i);
        const auto ej = Multivector::generator(sig, j);
        const Multivector expect = i == j ? Multivector::scalar(sig, -2.0) : Multivector(sig);
        EXPECT_LT((ei * ej + ej * ei - expect).norm(), kTol);
      }
}

TEST(Multivector, GeneratorZeroIsTheUnit) {
  const Signature sig{1, 2};
  EXPECT_EQ(Multivector::generator(sig, 0), Multivector::scalar(sig, 1.0));
}

TEST(Multivector, QuaternionOracle) {
  // C_2: e1, e2, e1e2 multiply like i, j, k.
  const Signature sig{1, 1};
  Sampler rng(7);
  for (int s = 0; s < 200; ++s) {
    std::array<double, 4> a{}, b{};
    for (auto& v : a) v = rng.uniform(-1, 1);
    for (auto& v : b) v = rng.uniform(-1, 1);
    auto to_mv = [&](const std::array<double, 4>& c) {
      Multivector m(sig);
      m[0b00] = c[0];
      m[0b01] = c[1];
      m[0b10] = c[2];
      m[0b11] = c[3];
      return m;
    };
    const auto h = hamilton(a, b);
    const Multivector prod = to_mv(a) * to_mv(b);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(prod[static_cast<BladeMask>(i)].real(), h[static_cast<std::size_t>(i)], 1e-15);
  }
}

TEST(Multivector, SignTableMatchesDirectSign) {
  for (int n = 0; n <= detail::kSignTableMaxN; ++n) {
    const auto& t = detail::sign_table(n);
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        ASSERT_EQ(t[a * dim + b], blade_product_sign(static_cast<BladeMask>(a), static_cast<BladeMask>(b)));
  }
}

TEST(Multivector, AssociativityAboveTableSize) {
  const Signature sig{3, 6};
  Sampler rng(11);
  const auto a = rng.multivector(sig), b = rng.multivector(sig), c = rng.multivector(sig);
  EXPECT_LT(relative_deviation((a * b) * c, a * (b * c)), kTol);
}

TEST(Multivector, AddProductAccumulates) {
  const Signature sig{1, 2};
  Sampler rng(3);
  const auto a = rng.multivector(sig), b = rng.multivector(sig), c = rng.multivector(sig);
  Multivector acc = c;
  acc.add_product(a, b, cplx(0.5, -2.0));
  EXPECT_LT(relative_deviation(acc, c + (a * b) * cplx(0.5, -2.0)), 1e-15);
}

class CliffordLaws : public ::testing::TestWithParam<Signature> {};

TEST_P(CliffordLaws, RandomSamples) {
  const Signature sig = GetParam();
  Sampler rng(20240611);
  const double bound = std::pow(2.0, 0.5 * sig.n());
  for (int s = 0; s < 100; ++s) {
    const auto a = rng.multivector(sig), b = rng.multivector(sig), c = rng.multivector(sig);
    EXPECT_LT(relative_deviation((a * b) * c, a * (b * c)), kTol);
    EXPECT_LE((a * b).norm(), bound * a.norm() * b.norm() * (1 + kTol));
    EXPECT_LE((a + b).norm(), a.norm() + b.norm() + kTol);
    EXPECT_LT(relative_deviation(clifford_conjugate(a * b), clifford_conjugate(b) * clifford_conjugate(a)), kTol);
    EXPECT_LT(relative_deviation(hermitian_conjugate(a * b), hermitian_conjugate(b) * hermitian_conjugate(a)), kTol);
    EXPECT_LT(std::abs(inner_product(a, b) - (hermitian_conjugate(a) * b).scalar_part()), kTol * (1 + a.norm() * b.norm()));
    EXPECT_NEAR(inner_product(a, a).real(), a.norm_sq(), kTol * a.norm_sq());

    const auto u = rng.paravector(sig), v = rng.paravector(sig);
    EXPECT_NEAR((u * v).norm(), u.norm() * v.norm(), kTol * u.norm() * v.norm());
    EXPECT_LT((u * paravector_inverse(u) - Multivector::scalar(sig, 1.0)).norm(), kTol);
    EXPECT_LT((u * clifford_conjugate(u) - Multivector::scalar(sig, u.norm_sq())).norm(), kTol * u.norm_sq());
  }
}

INSTANTIATE_TEST_SUITE_P(AllSmall, CliffordLaws, ::testing::ValuesIn(small_signatures()),
                         [](const auto& info) { return "p" + std::to_string(info.param.p) + "q" + std::to_string(info.param.q); });

TEST(Multivector, InverseRejectsHigherGradeAndZero) {
  const Signature sig{0, 2};
  EXPECT_THROW(paravector_inverse(Multivector::blade(sig, 0b11)), ContractViolation);
  EXPECT_THROW(paravector_inverse(Multivector(sig)), DivisionByZero);
}

TEST(Multivector, SignatureMismatchThrows) {
  EXPECT_THROW(Multivector(Signature{0, 1}) + Multivector(Signature{0, 2}), ContractViolation);
  EXPECT_THROW(inner_product(Multivector(Signature{0, 1}), Multivector(Signature{1, 1})), ContractViolation);
}

TEST(Multivector, ConjugationSignsByGrade) {
  const Signature sig{0, 3};
  const int expect[] = {1, -1, -1, 1};
  for (std::size_t m = 0; m < sig.blade_count(); ++m) {
    const auto mask = static_cast<BladeMask>(m);
    EXPECT_EQ(clifford_conjugate(Multivector::blade(sig, mask))[mask].real(), expect[blade_grade(mask)]);
  }
}

TEST(Multivector, PowerMatchesRepeatedProduct) {
  const Signature sig{1, 1};
  Sampler rng(5);
  const auto a = rng.multivector(sig);
  EXPECT_EQ(power(a, 0), Multivector::scalar(sig, 1.0));
  EXPECT_LT(relative_deviation(power(a, 3), a * a * a), 1e-15);
  EXPECT_THROW(power(a, -1), ContractViolation);
}

TEST(SplitPoint, EmbeddingAndDirection) {
  const Signature sig{1, 2};
  const SplitPoint pt{{1.0, 2.0}, {3.0, 4.0}};
  const Multivector x = embed(sig, pt);
  EXPECT_EQ(x[0], cplx(1.0));
  EXPECT_EQ(x[0b001], cplx(2.0));
  EXPECT_EQ(x[0b010], cplx(3.0));
  EXPECT_EQ(x[0b100], cplx(4.0));
  EXPECT_DOUBLE_EQ(pt.r(), 5.0);
  const auto w = pt.omega();
  EXPECT_DOUBLE_EQ(w[0], 0.6);
  EXPECT_DOUBLE_EQ(w[1], 0.8);
  const auto w0 = SplitPoint::origin(sig).omega();
  EXPECT_EQ(w0, (std::vector<double>{1.0, 0.0}));
  EXPECT_THROW(embed(Signature{0, 2}, pt), ContractViolation);
}

TEST(SplitPoint, VectorPartSquaresToMinusRadius) {
  const Signature sig{0, 3};
  const std::vector<double> y{0.3, -1.2, 0.7};
  const Multivector yv = y_vector(sig, y);
  EXPECT_LT((yv * yv + Multivector::scalar(sig, 0.09 + 1.44 + 0.49)).norm(), 1e-15);
}

TEST(BladeLabel, AscendingOneBasedIndices) {
  EXPECT_EQ(blade_label(0), "e{}");
  EXPECT_EQ(blade_label(0b101), "e{1,3}");
}

TEST(Sampler, SameSeedSameStream) {
  Sampler a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform(), b.uniform());
  const auto u = a.unit_vector(3);
  EXPECT_NEAR(u[0] * u[0] + u[1] * u[1] + u[2] * u[2], 1.0, 1e-15);
  const auto pt = a.split_point(Signature{1, 2}, 2.0, 0.1, 2.0);
  EXPECT_GE(pt.r(), 0.1);
  EXPECT_LE(pt.r(), 2.0);
  EXPECT_LE(std::hypot(pt.x[0], pt.x[1]), 2.0);
}
