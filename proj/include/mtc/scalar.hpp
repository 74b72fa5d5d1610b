#pragma once

#include <complex>
#include <numbers>
#include <numeric>
#include <string>
#include <variant>

#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"

namespace mtc {

/// Margin used when deciding the sign of an exactly-real scalar numerically.
inline constexpr double kPositivityMargin = 1e-9;

/// An S/T entry: either an exact cyclotomic number or a double-precision
/// complex number read from a float file. Arithmetic never mixes the two.
class Scalar {
 public:
  Scalar() : value_(Cyclotomic()) {}
  Scalar(int v) : value_(Cyclotomic(v)) {}
  Scalar(long v) : value_(Cyclotomic(v)) {}
  Scalar(Cyclotomic c) : value_(std::move(c)) {}
  explicit Scalar(Rational r) : value_(Cyclotomic(std::move(r))) {}

  static Scalar numeric(std::complex<double> z) {
    Scalar s;
    s.value_ = z;
    return s;
  }

  /// Zero of the same kind (exact or float) as `x`, for starting sums.
  static Scalar zero_like(const Scalar& x) { return x.is_exact() ? Scalar() : numeric({}); }

  bool is_exact() const { return std::holds_alternative<Cyclotomic>(value_); }

  const Cyclotomic& exact() const {
    if (!is_exact()) throw InputError("exact value required but scalar is a float");
    return std::get<Cyclotomic>(value_);
  }

  std::complex<double> to_complex() const {
    if (is_exact()) return std::get<Cyclotomic>(value_).to_complex();
    return std::get<std::complex<double>>(value_);
  }

  /// Field order N for exact values, 0 for floats.
  int order() const { return is_exact() ? exact().order() : 0; }

  bool is_zero() const {
    return is_exact() ? exact().is_zero() : to_complex() == std::complex<double>{};
  }

  Scalar conj() const {
    if (is_exact()) return Scalar(exact().conj());
    return numeric(std::conj(to_complex()));
  }

  Scalar inverse() const {
    if (is_exact()) return Scalar(exact().inverse());
    if (to_complex() == std::complex<double>{}) throw ArithmeticError("division by zero");
    return numeric(1.0 / to_complex());
  }

  Scalar pow(long long e) const {
    if (is_exact()) return Scalar(exact().pow(e));
    return numeric(std::pow(to_complex(), static_cast<double>(e)));
  }

  std::string to_string() const {
    if (is_exact()) return exact().to_string();
    const auto z = to_complex();
    return std::to_string(z.real()) + (z.imag() < 0 ? "-" : "+") +
           std::to_string(std::abs(z.imag())) + "i";
  }

  Scalar operator-() const {
    if (is_exact()) return Scalar(-exact());
    return numeric(-to_complex());
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    require_same_variant(a, b);
    if (a.is_exact()) return a.exact() == b.exact();
    return a.to_complex() == b.to_complex();
  }

 private:
  static void require_same_variant(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact())
      throw ArithmeticError("mixed exact/float arithmetic; convert explicitly");
  }

  template <class Op>
  static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    require_same_variant(a, b);
    if (a.is_exact()) return Scalar(op(a.exact(), b.exact()));
    return numeric(op(a.to_complex(), b.to_complex()));
  }

  std::variant<Cyclotomic, std::complex<double>> value_;
};

/// Exact e^{2 pi i numer/denom}, living in Q(zeta_d) for the reduced denominator d.
inline Scalar root_of_unity(long long numer, long long denom) {
  if (denom < 1) throw InputError("root_of_unity: denominator must be >= 1");
  const long long g = std::gcd(numer < 0 ? -numer : numer, denom);
  const long long n = numer / g, d = denom / g;
  if (d > kMaxCyclotomicOrder)
    throw ArithmeticError("root_of_unity: order " + std::to_string(d) + " exceeds cap");
  return Scalar(Cyclotomic::zeta(static_cast<int>(d), n));
}

/// sqrt(2) = zeta_8 + zeta_8^7.
inline Scalar sqrt2() { return root_of_unity(1, 8) + root_of_unity(7, 8); }

/// Exactly real (conj(x) == x) for exact values; |Im| <= margin for floats.
inline bool is_real(const Scalar& x) {
  if (x.is_exact()) return x.conj() == x;
  return std::abs(x.to_complex().imag()) <= kPositivityMargin;
}

/// Exact realness first, then a numeric sign decision with a safety margin.
inline bool is_positive_real(const Scalar& x) {
  return is_real(x) && x.to_complex().real() > kPositivityMargin;
}

/// True iff x^k = 1 for some k >= 1. Roots of unity in Q(zeta_N) have order
/// dividing lcm(2, N), so one exact power test decides it.
inline bool is_root_of_unity(const Scalar& x) {
  if (!x.is_exact()) return std::abs(std::abs(x.to_complex()) - 1.0) <= kPositivityMargin;
  const long long period = std::lcm(2LL, static_cast<long long>(x.order()));
  return x.pow(period) == Scalar(1);
}

/// Exact positive square root of a positive real scalar, when it can be
/// found: rational perfect squares, then (given a Gauss-sum-like `hint` with
/// hint * conj(hint) == x) the real positive rotation of `hint` by a root of
/// unity. Throws ArithmeticError otherwise.
inline Scalar exact_positive_sqrt(const Scalar& x, const Scalar* hint = nullptr) {
  const Cyclotomic& c = x.exact();
  if (!is_positive_real(x)) throw ArithmeticError("square root of a non-positive value");
  if (c.is_rational()) {
    const Rational& r = c.rational_value();
    const Integer num = r.get_num(), den = r.get_den();
    const Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn == num && sd * sd == den) return Scalar(Rational(sn, sd));
  }
  if (hint != nullptr && !hint->is_zero() && (*hint) * hint->conj() == x) {
    const double target = std::arg(hint->to_complex());
    const int base = std::lcm(std::max(hint->order(), 1), 8);
    for (int m = base; m <= kMaxCyclotomicOrder; m += base) {
      const double k_real = target * m / (2 * std::numbers::pi);
      const long long k = std::llround(k_real);
      if (std::abs(k_real - static_cast<double>(k)) > 1e-6) continue;
      const Scalar rotated = (*hint) * root_of_unity(-k, m);
      if (is_positive_real(rotated) && rotated * rotated == x) return rotated;
    }
  }
  throw ArithmeticError("no exact square root found for " + x.to_string());
}

}  // namespace mtc
