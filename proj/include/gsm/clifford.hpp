#pragma once

// Dense arithmetic in the complexified Clifford algebra C_n, n = p + q, with
// generators e_1..e_n satisfying e_i e_j + e_j e_i = -2 delta_ij.
//
// Coefficients are indexed by blade bitmask: bit i set means e_{i+1} is a
// factor of the blade, mask 0 is the scalar part. Paravectors
// x_0 + sum_i x_i e_i live in the scalar slot plus the n single-bit slots.

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsm/error.hpp"

namespace gsm {

using cplx = std::complex<double>;
using BladeMask = std::uint32_t;

inline constexpr int kMaxGenerators = 12;

/// Split n = p + q of the generator set. The first p generators pair with the
/// x-coordinates x_1..x_p, the last q with the y-coordinates.
struct Signature {
  int p = 0;
  int q = 1;

  constexpr int n() const noexcept { return p + q; }
  constexpr std::size_t blade_count() const noexcept { return std::size_t{1} << n(); }
  /// Number of x-coordinates x_0..x_p.
  constexpr int x_dim() const noexcept { return p + 1; }

  void validate() const {
    if (p < 0) throw ContractViolation("signature: p must be >= 0");
    if (q < 1) throw ContractViolation("signature: q must be >= 1");
    if (n() > kMaxGenerators)
      throw CapabilityError("signature: p + q = " + std::to_string(n()) + " exceeds 12");
  }

  friend constexpr bool operator==(Signature, Signature) = default;
};

/// Sign of e_A e_B in the negative-definite algebra: (-1)^(swaps) from
/// reordering, times (-1)^|A & B| from contracting e_i^2 = -1.
constexpr int blade_product_sign(BladeMask a, BladeMask b) noexcept {
  int swaps = 0;
  for (BladeMask s = a >> 1; s != 0; s >>= 1) swaps += std::popcount(s & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

constexpr int blade_grade(BladeMask a) noexcept { return std::popcount(a); }

namespace detail {

inline constexpr int kSignTableMaxN = 8;

/// Product signs for all blade pairs of C_n, n <= kSignTableMaxN, row-major
/// by the left mask.
inline const std::vector<signed char>& sign_table(int n) {
  static const auto tables = [] {
    std::vector<std::vector<signed char>> t(kSignTableMaxN + 1);
    for (int m = 0; m <= kSignTableMaxN; ++m) {
      const std::size_t dim = std::size_t{1} << m;
      t[static_cast<std::size_t>(m)].resize(dim * dim);
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
          t[static_cast<std::size_t>(m)][a * dim + b] =
              static_cast<signed char>(blade_product_sign(static_cast<BladeMask>(a), static_cast<BladeMask>(b)));
    }
    return t;
  }();
  return tables[static_cast<std::size_t>(n)];
}

}  // namespace detail

/// Sign picked up by a grade-k blade under Clifford conjugation.
constexpr int conjugation_sign(int grade) noexcept {
  return ((grade * (grade + 1) / 2) & 1) ? -1 : 1;
}

class Multivector {
 public:
  Multivector() : Multivector(Signature{}) {}
  explicit Multivector(Signature sig) : sig_(sig) {
    sig_.validate();
    coeff_.assign(sig_.blade_count(), cplx{});
  }

  static Multivector scalar(Signature sig, cplx value) {
    Multivector m(sig);
    m.coeff_[0] = value;
    return m;
  }

  static Multivector blade(Signature sig, BladeMask mask, cplx value = 1.0) {
    Multivector m(sig);
    if (mask >= m.coeff_.size()) throw ContractViolation("blade mask out of range");
    m.coeff_[mask] = value;
    return m;
  }

  /// Generator e_i, 1 <= i <= n; i = 0 gives the unit (e_0 = 1).
  static Multivector generator(Signature sig, int i) {
    if (i < 0 || i > sig.n()) throw ContractViolation("generator index out of range");
    return blade(sig, i == 0 ? 0u : BladeMask{1} << (i - 1));
  }

  /// x_0 + sum_{i=1}^{m-1} x_i e_i for a coordinate vector of length m <= n + 1.
  static Multivector paravector(Signature sig, std::span<const double> x) {
    Multivector m(sig);
    if (x.size() > static_cast<std::size_t>(sig.n()) + 1)
      throw ContractViolation("paravector: too many components");
    for (std::size_t i = 0; i < x.size(); ++i)
      m.coeff_[i == 0 ? 0 : (BladeMask{1} << (i - 1))] = x[i];
    return m;
  }

  Signature sig() const noexcept { return sig_; }
  std::size_t size() const noexcept { return coeff_.size(); }
  std::span<const cplx> coeffs() const noexcept { return coeff_; }
  std::span<cplx> coeffs() noexcept { return coeff_; }

  const cplx& operator[](BladeMask mask) const { return coeff_[mask]; }
  cplx& operator[](BladeMask mask) { return coeff_[mask]; }

  cplx scalar_part() const noexcept { return coeff_[0]; }

  double norm_sq() const noexcept {
    double s = 0.0;
    for (const auto& c : coeff_) s += std::norm(c);
    return s;
  }
  double norm() const noexcept { return std::sqrt(norm_sq()); }

  bool is_zero() const noexcept {
    for (const auto& c : coeff_)
      if (c != cplx{}) return false;
    return true;
  }

  /// True when only grades 0 and 1 carry nonzero coefficients.
  bool is_paravector_like() const noexcept {
    for (std::size_t a = 0; a < coeff_.size(); ++a)
      if (blade_grade(static_cast<BladeMask>(a)) > 1 && coeff_[a] != cplx{}) return false;
    return true;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (std::size_t a = 0; a < coeff_.size(); ++a) coeff_[a] += o.coeff_[a];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (std::size_t a = 0; a < coeff_.size(); ++a) coeff_[a] -= o.coeff_[a];
    return *this;
  }
  Multivector& operator*=(cplx s) noexcept {
    for (auto& c : coeff_) c *= s;
    return *this;
  }
  Multivector& operator/=(cplx s) noexcept {
    for (auto& c : coeff_) c /= s;
    return *this;
  }

  /// Adds s * o without a temporary.
  void add_scaled(const Multivector& o, cplx s) {
    require_same(o);
    for (std::size_t a = 0; a < coeff_.size(); ++a) coeff_[a] += s * o.coeff_[a];
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (auto& c : a.coeff_) c = -c;
    return a;
  }
  friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
  friend Multivector operator*(cplx s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, double s) { return a *= cplx(s); }
  friend Multivector operator*(double s, Multivector a) { return a *= cplx(s); }
  friend Multivector operator/(Multivector a, cplx s) { return a /= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= cplx(s); }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector out(a.sig_);
    out.add_product(a, b);
    return out;
  }

  /// this += s a b without temporaries.
  void add_product(const Multivector& a, const Multivector& b, cplx s = 1.0) {
    require_same(a);
    require_same(b);
    const std::size_t dim = coeff_.size();
    const int n = sig_.n();
    const signed char* table = n <= detail::kSignTableMaxN ? detail::sign_table(n).data() : nullptr;
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx ai = a.coeff_[i];
      if (ai == cplx{}) continue;
      const cplx sai = s * ai;
      const auto mi = static_cast<BladeMask>(i);
      for (std::size_t j = 0; j < dim; ++j) {
        const cplx bj = b.coeff_[j];
        if (bj == cplx{}) continue;
        const auto mj = static_cast<BladeMask>(j);
        const int sign = table ? table[i * dim + j] : blade_product_sign(mi, mj);
        if (sign > 0)
          coeff_[mi ^ mj] += sai * bj;
        else
          coeff_[mi ^ mj] -= sai * bj;
      }
    }
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coeff_ == b.coeff_;
  }

 private:
  void require_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw ContractViolation("multivector signature mismatch");
  }

  Signature sig_;
  std::vector<cplx> coeff_;
};

/// Clifford conjugation (bar): reverses products, e_j -> -e_j.
inline Multivector clifford_conjugate(const Multivector& a) {
  Multivector out = a;
  for (std::size_t m = 0; m < out.size(); ++m)
    if (conjugation_sign(blade_grade(static_cast<BladeMask>(m))) < 0) out[static_cast<BladeMask>(m)] = -out[static_cast<BladeMask>(m)];
  return out;
}

/// Hermitian conjugation (dagger): complex conjugate of each coefficient
/// combined with Clifford conjugation of the blade.
inline Multivector hermitian_conjugate(const Multivector& a) {
  Multivector out = a;
  for (std::size_t m = 0; m < out.size(); ++m) {
    const auto mask = static_cast<BladeMask>(m);
    out[mask] = static_cast<double>(conjugation_sign(blade_grade(mask))) * std::conj(out[mask]);
  }
  return out;
}

/// (a, b) = Sc(a^dagger b) = sum_A conj(a_A) b_A.
inline cplx inner_product(const Multivector& a, const Multivector& b) {
  if (!(a.sig() == b.sig())) throw ContractViolation("inner_product: signature mismatch");
  cplx s{};
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t m = 0; m < ca.size(); ++m) s += std::conj(ca[m]) * cb[m];
  return s;
}

/// x^{-1} = bar(x) / |x|^2 for a paravector x.
inline Multivector paravector_inverse(const Multivector& x) {
  if (!x.is_paravector_like())
    throw ContractViolation("paravector_inverse: argument has grade > 1 components");
  const double n2 = x.norm_sq();
  if (n2 == 0.0) throw DivisionByZero("paravector_inverse: zero paravector");
  return clifford_conjugate(x) / n2;
}

inline Multivector power(const Multivector& a, int k) {
  if (k < 0) throw ContractViolation("power: negative exponent");
  Multivector out = Multivector::scalar(a.sig(), 1.0);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

/// A point x + y of R^{p+1} (+) R^q. x holds x_0..x_p, y holds x_{p+1}..x_{p+q}.
struct SplitPoint {
  std::vector<double> x;
  std::vector<double> y;

  static SplitPoint origin(Signature sig) {
    return {std::vector<double>(static_cast<std::size_t>(sig.x_dim()), 0.0),
            std::vector<double>(static_cast<std::size_t>(sig.q), 0.0)};
  }

  void check(Signature sig) const {
    if (x.size() != static_cast<std::size_t>(sig.x_dim()) ||
        y.size() != static_cast<std::size_t>(sig.q))
      throw ContractViolation("split point: coordinate counts do not match signature");
  }

  double r() const noexcept {
    double s = 0.0;
    for (double v : y) s += v * v;
    return std::sqrt(s);
  }

  /// y / |y|; falls back to the first y-axis direction at y = 0.
  std::vector<double> omega() const {
    std::vector<double> w(y.size(), 0.0);
    const double rr = r();
    if (rr == 0.0) {
      if (!w.empty()) w[0] = 1.0;
      return w;
    }
    for (std::size_t i = 0; i < y.size(); ++i) w[i] = y[i] / rr;
    return w;
  }
};

/// The 1-vector sum_j c_j e_{p+1+j} built from a q-vector.
inline Multivector y_vector(Signature sig, std::span<const double> c) {
  if (c.size() != static_cast<std::size_t>(sig.q)) throw ContractViolation("y_vector: expected q components");
  Multivector m(sig);
  for (std::size_t j = 0; j < c.size(); ++j) m[BladeMask{1} << (sig.p + static_cast<int>(j))] = c[j];
  return m;
}

/// The paravector sum_{i=0}^p c_i e_i built from a (p+1)-vector.
inline Multivector x_paravector(Signature sig, std::span<const double> c) {
  if (c.size() != static_cast<std::size_t>(sig.x_dim()))
    throw ContractViolation("x_paravector: expected p + 1 components");
  return Multivector::paravector(sig, c);
}

/// Embeds x + y as a paravector of R^{p+q+1}.
inline Multivector embed(Signature sig, const SplitPoint& pt) {
  pt.check(sig);
  return x_paravector(sig, pt.x) + y_vector(sig, pt.y);
}

/// |a - b| / max(|a|, |b|), zero when both vanish.
inline double relative_deviation(const Multivector& a, const Multivector& b) {
  const double scale = std::max(a.norm(), b.norm());
  if (scale == 0.0) return 0.0;
  return (a - b).norm() / scale;
}

inline double relative_deviation(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

/// Label of a blade such as "e{}" or "e{1,3}".
inline std::string blade_label(BladeMask mask) {
  std::string s = "e{";
  bool first = true;
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (mask & (BladeMask{1} << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  }
  s += '}';
  return s;
}

}  // namespace gsm
