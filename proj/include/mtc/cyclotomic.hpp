#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element of Q(zeta_N) is stored as N rational coefficients over the
// powers zeta_N^0 .. zeta_N^{N-1}. After every operation the vector is
// reduced modulo the N-th cyclotomic polynomial, so only the first phi(N)
// entries can be nonzero and two elements of the same field are equal iff
// their coefficient vectors are equal. Binary operations on elements of
// different fields first embed both operands into Q(zeta_lcm).

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mtc/errors.hpp"

namespace mtc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest field order any computation may reach.
inline constexpr int kMaxCyclotomicOrder = 1024;

namespace detail {

using IntPoly = std::vector<Integer>;  // index i multiplies x^i

inline void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division by a monic divisor; the remainder must vanish.
inline IntPoly poly_divexact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return IntPoly{Integer(0)};
  IntPoly q(num.size() - dd, Integer(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}.
inline IntPoly cyclotomic_polynomial(int n) {
  IntPoly num{Integer(1)}, den{Integer(1)};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    IntPoly f(static_cast<std::size_t>(d) + 1, Integer(0));
    f[0] = -1;
    f[d] = 1;
    (mu > 0 ? num : den) = poly_mul(mu > 0 ? num : den, f);
  }
  // den is a product of monic polynomials up to sign; normalise to monic.
  if (den.back() < 0) {
    for (auto& c : den) c = -c;
    for (auto& c : num) c = -c;
  }
  return poly_divexact(std::move(num), den);
}

struct ReductionTable {
  int order = 1;
  int degree = 1;  // phi(order)
  IntPoly phi;
  // powers[k] = zeta^k in the basis zeta^0..zeta^{degree-1}, sparse.
  std::vector<std::vector<std::pair<int, Integer>>> powers;
};

inline std::unique_ptr<ReductionTable> build_table(int n) {
  auto t = std::make_unique<ReductionTable>();
  t->order = n;
  t->phi = cyclotomic_polynomial(n);
  t->degree = static_cast<int>(t->phi.size()) - 1;
  const int deg = t->degree;
  IntPoly cur(static_cast<std::size_t>(deg) + 1, Integer(0));
  cur[0] = 1;
  t->powers.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& row = t->powers[static_cast<std::size_t>(k)];
    for (int j = 0; j < deg; ++j)
      if (cur[j] != 0) row.emplace_back(j, cur[j]);
    // multiply by x and reduce x^deg = -sum phi_j x^j
    for (int j = deg; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    const Integer top = cur[deg];
    if (top != 0) {
      for (int j = 0; j <= deg; ++j) cur[j] -= top * t->phi[j];
    }
  }
  return t;
}

inline const ReductionTable& reduction_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ReductionTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_table(n)).first;
  return *it->second;
}

inline int checked_lcm(int a, int b) {
  const long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > kMaxCyclotomicOrder)
    throw ArithmeticError("cyclotomic order " + std::to_string(l) + " exceeds cap " +
                          std::to_string(kMaxCyclotomicOrder));
  return static_cast<int>(l);
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}
  explicit Cyclotomic(Rational r) : order_(1), coeffs_{std::move(r)} { coeffs_[0].canonicalize(); }

  /// Builds sum_k coeffs[k] zeta_N^k; `coeffs` must hold exactly N entries.
  static Cyclotomic from_coefficients(int order, std::vector<Rational> coeffs) {
    check_order(order);
    if (coeffs.size() != static_cast<std::size_t>(order))
      throw InputError("cyclotomic element of order " + std::to_string(order) + " needs " +
                       std::to_string(order) + " coefficients, got " +
                       std::to_string(coeffs.size()));
    for (auto& c : coeffs) c.canonicalize();
    Cyclotomic r;
    r.order_ = order;
    r.coeffs_ = std::move(coeffs);
    r.reduce();
    return r;
  }

  /// zeta_order^power.
  static Cyclotomic zeta(int order, long long power = 1) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    long long k = power % order;
    if (k < 0) k += order;
    c[static_cast<std::size_t>(k)] = 1;
    return from_coefficients(order, std::move(c));
  }

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// The same element viewed in Q(zeta_target); target must be a multiple of order().
  Cyclotomic embed(int target) const {
    check_order(target);
    if (target == order_) return *this;
    if (target % order_ != 0)
      throw ArithmeticError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                            std::to_string(target) + ")");
    const int step = target / order_;
    std::vector<Rational> c(static_cast<std::size_t>(target));
    for (int k = 0; k < order_; ++k) c[static_cast<std::size_t>(k * step)] = coeffs_[k];
    Cyclotomic r;
    r.order_ = target;
    r.coeffs_ = std::move(c);
    r.reduce();
    return r;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  bool is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
  }

  /// Valid only when is_rational().
  const Rational& rational_value() const {
    if (!is_rational()) throw ArithmeticError("element is not rational: " + to_string());
    return coeffs_[0];
  }

  /// Complex conjugation: zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    std::vector<Rational> c(static_cast<std::size_t>(order_));
    for (int k = 0; k < order_; ++k) {
      if (coeffs_[k] == 0) continue;
      c[static_cast<std::size_t>((order_ - k) % order_)] = coeffs_[k];
    }
    Cyclotomic r;
    r.order_ = order_;
    r.coeffs_ = std::move(c);
    r.reduce();
    return r;
  }

  Cyclotomic inverse() const;

  Cyclotomic pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    result = result.embed(order_);
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  std::complex<double> to_complex() const {
    long double re = 0, im = 0;
    for (int k = 0; k < order_; ++k) {
      if (coeffs_[k] == 0) continue;
      const long double c = coeffs_[k].get_d();
      const long double ang = 2.0L * std::numbers::pi_v<long double> * k / order_;
      re += c * std::cos(ang);
      im += c * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  std::string to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order_; ++k) {
      if (coeffs_[k] == 0) continue;
      if (!first) os << (coeffs_[k] > 0 ? " + " : " - ");
      else if (coeffs_[k] < 0) os << "-";
      first = false;
      const Rational mag = abs(coeffs_[k]);
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << order_ << "^" << k;
    }
    return os.str();
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = add(*this, b, 1); }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = add(*this, b, -1); }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = mul(*this, b); }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = mul(*this, b.inverse()); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, 1); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, -1); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return mul(a, b); }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return mul(a, b.inverse());
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const int n = detail::checked_lcm(a.order_, b.order_);
    return a.embed(n).coeffs_ == b.embed(n).coeffs_;
  }

 private:
  static void check_order(int order) {
    if (order < 1) throw InputError("cyclotomic order must be positive");
    if (order > kMaxCyclotomicOrder)
      throw ArithmeticError("cyclotomic order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(kMaxCyclotomicOrder));
  }

  void reduce() {
    const auto& t = detail::reduction_table(order_);
    if (t.degree == order_) return;  // order 1 (and only then) has phi(N) = N
    for (int k = t.degree; k < order_; ++k) {
      if (coeffs_[k] == 0) continue;
      const Rational c = coeffs_[k];
      coeffs_[k] = 0;
      for (const auto& [j, v] : t.powers[static_cast<std::size_t>(k)]) coeffs_[j] += c * v;
    }
  }

  static Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b, int sign) {
    if (a.order_ != b.order_) {
      const int n = detail::checked_lcm(a.order_, b.order_);
      return add(a.embed(n), b.embed(n), sign);
    }
    Cyclotomic r = a;
    for (int k = 0; k < a.order_; ++k) {
      if (b.coeffs_[k] == 0) continue;
      if (sign > 0) r.coeffs_[k] += b.coeffs_[k];
      else r.coeffs_[k] -= b.coeffs_[k];
    }
    return r;
  }

  static Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
      const int n = detail::checked_lcm(a.order_, b.order_);
      return mul(a.embed(n), b.embed(n));
    }
    const int n = a.order_;
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        c[static_cast<std::size_t>((i + j) % n)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    Cyclotomic r;
    r.order_ = n;
    r.coeffs_ = std::move(c);
    r.reduce();
    return r;
  }

  int order_;
  std::vector<Rational> coeffs_;
};

// Solves (b * x) = 1 for x as a phi(N) x phi(N) rational linear system whose
// j-th column is b * zeta^j.
inline Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]).embed(order_);
  const auto& t = detail::reduction_table(order_);
  const int d = t.degree;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d),
                                       std::vector<Rational>(static_cast<std::size_t>(d) + 1));
  for (int j = 0; j < d; ++j) {
    const Cyclotomic col = *this * zeta(order_, j);
    for (int i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw ArithmeticError("singular multiplication matrix");
    std::swap(m[c], m[piv]);
    const Rational inv = Rational(1) / m[c][c];
    for (int k = c; k <= d; ++k) m[c][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(order_));
  for (int i = 0; i < d; ++i) x[i] = m[i][d];
  return from_coefficients(order_, std::move(x));
}

}  // namespace mtc
