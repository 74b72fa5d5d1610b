#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/scalar.hpp"

using namespace mtc;
using Catch::Matchers::WithinAbs;

namespace {

// Independent numeric evaluation of sum c_k e^{2 pi i k / n}.
std::complex<double> naive_value(const Cyclotomic& x) {
  std::complex<double> z = 0;
  const auto& c = x.coefficients();
  for (int k = 0; k < x.order(); ++k)
    z += c[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * k / x.order());
  return z;
}

double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("root_of_unity basic values") {
  CHECK(root_of_unity(0, 1) == Scalar(1));
  const auto i = root_of_unity(1, 4).to_complex();
  CHECK_THAT(i.real(), WithinAbs(0.0, 1e-15));
  CHECK_THAT(i.imag(), WithinAbs(1.0, 1e-15));
  CHECK(root_of_unity(1, 16) * root_of_unity(1, 16) == root_of_unity(1, 8));
  CHECK(root_of_unity(2, 16).order() == 8);  // reduced fraction sets the field
  CHECK(root_of_unity(-1, 16) == root_of_unity(15, 16));
  CHECK(root_of_unity(17, 16) == root_of_unity(1, 16));
  CHECK_THROWS_AS(root_of_unity(1, 0), InputError);
  CHECK_THROWS_AS(root_of_unity(1, -3), InputError);
  CHECK_THROWS_AS(root_of_unity(1, 2048), ArithmeticError);
}

TEST_CASE("field operation examples") {
  const Scalar s = root_of_unity(1, 8) + root_of_unity(7, 8);
  CHECK(s * s == Scalar(2));
  CHECK(sqrt2() == s);
  const Scalar z16 = root_of_unity(1, 16);
  CHECK(z16.conj() * z16 == Scalar(1));
  CHECK(root_of_unity(1, 3) + root_of_unity(2, 3) + Scalar(1) == Scalar(0));
  CHECK((root_of_unity(1, 3) + root_of_unity(2, 3) + Scalar(1)).is_zero());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
}

TEST_CASE("to_complex examples") {
  CHECK(Scalar(1).to_complex() == std::complex<double>(1.0, 0.0));
  const auto r2 = sqrt2().to_complex();
  CHECK_THAT(r2.real(), WithinAbs(std::sqrt(2.0), 1e-14));
  CHECK_THAT(r2.imag(), WithinAbs(0.0, 1e-14));
  const auto z = root_of_unity(1, 16).to_complex();
  CHECK_THAT(z.real(), WithinAbs(std::cos(std::numbers::pi / 8), 1e-14));
  CHECK_THAT(z.imag(), WithinAbs(std::sin(std::numbers::pi / 8), 1e-14));
}

TEST_CASE("reduction gives canonical coefficients") {
  // zeta_5^4 = -(1 + zeta + zeta^2 + zeta^3)
  const Cyclotomic z4 = Cyclotomic::zeta(5, 4);
  CHECK(z4.coefficients()[4] == 0);
  CHECK(z4.coefficients()[0] == -1);
  // zeta_12^6 = -1 is rational after reduction
  CHECK(Cyclotomic::zeta(12, 6).is_rational());
  CHECK(Cyclotomic::zeta(12, 6).rational_value() == -1);
  CHECK_THROWS_AS(Cyclotomic::zeta(12, 1).rational_value(), ArithmeticError);
  CHECK_THROWS_AS(Cyclotomic::from_coefficients(4, {1, 2}), InputError);
  CHECK(Cyclotomic::from_coefficients(4, {1, 0, 1, 0}).is_zero());
}

TEST_CASE("root_of_unity(k, n)^n = 1 for n <= 64") {
  for (int n = 1; n <= 64; ++n)
    for (int k = 0; k < n; ++k) {
      INFO("k=" << k << " n=" << n);
      REQUIRE(root_of_unity(k, n).pow(n) == Scalar(1));
    }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20240611);
  const int orders[] = {1, 3, 4, 5, 8, 12, 15, 16, 20, 24};
  for (int trial = 0; trial < 150; ++trial) {
    const int na = orders[trial % 10], nb = orders[(trial * 7 + 3) % 10], nc = orders[(trial * 3 + 1) % 10];
    const Scalar a(fixtures::random_cyclotomic(rng, na));
    const Scalar b(fixtures::random_cyclotomic(rng, nb));
    const Scalar c(fixtures::random_cyclotomic(rng, nc));
    INFO("a=" << a.to_string() << " b=" << b.to_string() << " c=" << c.to_string());
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE((a * b).conj() == a.conj() * b.conj());
    REQUIRE(a - a == Scalar(0));
    if (!b.is_zero()) {
      REQUIRE((a / b) * b == a);
      REQUIRE(b * b.inverse() == Scalar(1));
    }
    // order is the lcm (or a divisor after reduction), never truncated below the operands' needs
    const int l = std::lcm(std::lcm(na, nb), nc);
    REQUIRE(l % (a * b * c).order() == 0);
  }
}

TEST_CASE("to_complex is a ring homomorphism") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Cyclotomic a = fixtures::random_cyclotomic(rng, n, 5);
    const Cyclotomic b = fixtures::random_cyclotomic(rng, n, 5);
    REQUIRE(rel_err(a.to_complex(), naive_value(a)) < 1e-12);
    REQUIRE(rel_err((a + b).to_complex(), a.to_complex() + b.to_complex()) < 1e-12);
    REQUIRE(rel_err((a * b).to_complex(), a.to_complex() * b.to_complex()) < 1e-12);
    REQUIRE(rel_err(a.conj().to_complex(), std::conj(a.to_complex())) < 1e-12);
  }
}

TEST_CASE("to_complex with large coefficients") {
  std::vector<Rational> c(16);
  c[1] = Rational(999999);
  c[3] = Rational(-1000000, 3);
  const Cyclotomic x = Cyclotomic::from_coefficients(16, c);
  const auto want = 999999.0 * std::polar(1.0, 2 * std::numbers::pi / 16) -
                    (1000000.0 / 3) * std::polar(1.0, 6 * std::numbers::pi / 16);
  CHECK(rel_err(x.to_complex(), want) < 1e-12);
}

TEST_CASE("mixed exact and float operands are rejected") {
  const Scalar f = Scalar::numeric({1.0, 0.0});
  CHECK_THROWS_AS(f + Scalar(1), ArithmeticError);
  CHECK_THROWS_AS(Scalar(1) * f, ArithmeticError);
  CHECK_THROWS_AS(f == Scalar(1), ArithmeticError);
  CHECK_THROWS_AS(f.exact(), InputError);
  CHECK((f + f).to_complex() == std::complex<double>(2.0, 0.0));
  CHECK(f.order() == 0);
}

TEST_CASE("field order cap") {
  // lcm(512, 3) = 1536 > 1024
  CHECK_THROWS_AS(root_of_unity(1, 512) * root_of_unity(1, 3), ArithmeticError);
  CHECK_NOTHROW(root_of_unity(1, 512) * root_of_unity(1, 4));
}

TEST_CASE("realness, positivity and roots of unity") {
  CHECK(is_real(sqrt2()));
  CHECK(is_positive_real(sqrt2()));
  CHECK_FALSE(is_positive_real(-sqrt2()));
  CHECK_FALSE(is_real(root_of_unity(1, 16)));
  CHECK_FALSE(is_positive_real(root_of_unity(1, 16)));
  CHECK(is_root_of_unity(root_of_unity(3, 7)));
  CHECK(is_root_of_unity(-root_of_unity(3, 7)));  // a 14th root
  CHECK_FALSE(is_root_of_unity(Scalar(2)));
  CHECK_FALSE(is_root_of_unity(sqrt2() * root_of_unity(1, 8)));
  // (1 + i)/sqrt2 is a root of unity
  CHECK(is_root_of_unity((Scalar(1) + root_of_unity(1, 4)) * sqrt2().inverse()));
}

TEST_CASE("exact positive square roots") {
  CHECK(exact_positive_sqrt(Scalar(Rational(9, 4))) == Scalar(Rational(3, 2)));
  const Scalar tau = Scalar(2) * root_of_unity(1, 16);
  CHECK(exact_positive_sqrt(Scalar(4), &tau) == Scalar(2));
  // sqrt 2 via a Gauss-sum-like hint 1 + i
  const Scalar hint = Scalar(1) + root_of_unity(1, 4);
  CHECK(exact_positive_sqrt(Scalar(2), &hint) == sqrt2());
  CHECK_THROWS_AS(exact_positive_sqrt(Scalar(2)), ArithmeticError);
  CHECK_THROWS_AS(exact_positive_sqrt(Scalar(-4)), ArithmeticError);
}
