#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "fixtures.hpp"
#include "mtc/extension.hpp"
#include "mtc/free_fermion.hpp"

using namespace mtc;

namespace {

// Balancing sum evaluated in floating point from scratch, normalised by 1/2.
std::complex<double> numeric_s(const FusionTensor& n, const std::vector<std::complex<double>>& theta,
                               const std::vector<double>& d, std::size_t a, std::size_t b,
                               std::size_t a_dual) {
  std::complex<double> sum = 0;
  for (std::size_t c = 0; c < d.size(); ++c) sum += static_cast<double>(n(a_dual, b, c)) * theta[c] * d[c];
  double dim = 0;
  for (double x : d) dim += x * x;
  return sum / (theta[a] * theta[b]) / std::sqrt(dim);
}

std::complex<double> phase(double turns) { return std::polar(1.0, 2 * std::numbers::pi * turns); }

}  // namespace

TEST_CASE("s_from_twists on F_1 inputs") {
  const std::vector<Scalar> twists{Scalar(1), Scalar(-1), root_of_unity(1, 16)};
  const std::vector<Scalar> dims{Scalar(1), Scalar(1), sqrt2()};
  const Matrix<Scalar> s = s_from_twists(ising_fusion(), twists, dims);
  const Scalar h = fixtures::half(), r = sqrt2() * h;
  Matrix<Scalar> want(3, 3);
  want(0, 0) = h, want(0, 1) = h, want(0, 2) = r;
  want(1, 0) = h, want(1, 1) = h, want(1, 2) = -r;
  want(2, 0) = r, want(2, 1) = -r, want(2, 2) = Scalar(0);
  CHECK(s == want);
}

TEST_CASE("s_from_twists on trivial inputs") {
  FusionTensor n(1);
  n.at(0, 0, 0) = 1;
  const Matrix<Scalar> s = s_from_twists(n, {Scalar(1)}, {Scalar(1)});
  CHECK(s == Matrix<Scalar>(1, 1, Scalar(1)));
}

TEST_CASE("s_from_twists agrees with a floating-point balancing sum for every F_l") {
  for (long l = 1; l <= 16; ++l) {
    const ModularData m = ising_like(l).base;
    const FusionTensor& n = *m.fusion();
    std::vector<std::complex<double>> theta;
    std::vector<double> d;
    for (std::size_t a = 0; a < m.rank(); ++a) {
      theta.push_back(phase(static_cast<double>(l % 2 && a == 2 ? l : (a >= 2 ? l : 8 * a)) / 16.0));
      d.push_back(l % 2 && a == 2 ? std::sqrt(2.0) : 1.0);
    }
    for (std::size_t a = 0; a < m.rank(); ++a) {
      std::size_t dual = 0;
      for (std::size_t c = 0; c < m.rank(); ++c)
        if (n(a, c, 0) == 1) dual = c;
      for (std::size_t b = 0; b < m.rank(); ++b)
        REQUIRE(std::abs(m.S(a, b).to_complex() - numeric_s(n, theta, d, a, b, dual)) < 1e-12);
    }
  }
}

TEST_CASE("s_from_twists reports non-modular inputs") {
  // sVec: {1, psi} with theta_psi = -1 is degenerate
  FusionTensor n(2);
  n.at(0, 0, 0) = n.at(0, 1, 1) = n.at(1, 0, 1) = n.at(1, 1, 0) = 1;
  try {
    s_from_twists(n, {Scalar(1), Scalar(-1)}, {Scalar(1), Scalar(1)});
    FAIL("expected NotModularError");
  } catch (const NotModularError& e) {
    CHECK(std::string(e.what()).find("s_from_twists") != std::string::npos);
  }
  // Z2 x Z2 with all twists trivial: S is the all-ones matrix over 2, not unitary
  try {
    s_from_twists(klein_fusion(), std::vector<Scalar>(4, Scalar(1)), std::vector<Scalar>(4, Scalar(1)));
    FAIL("expected NotModularError");
  } catch (const NotModularError& e) {
    CHECK(std::string(e.what()).find("defect norm") != std::string::npos);
  }
  CHECK_THROWS_AS(s_from_twists(n, {Scalar(1)}, {Scalar(1), Scalar(1)}), InputError);
}

TEST_CASE("ising_like examples") {
  const GradedData f1 = ising_like(1);
  CHECK(f1.base.rank() == 3);
  CHECK(f1.base.labels() == std::vector<std::string>{"1", "psi", "sigma"});
  CHECK(f1.base.twist(2) == root_of_unity(1, 16));
  CHECK(gauss_sum(f1.base) == Scalar(2) * root_of_unity(1, 16));

  const GradedData f2 = ising_like(2);
  CHECK(f2.base.rank() == 4);
  CHECK(*f2.base.fusion() == z4_fusion());
  CHECK(f2.base.twists() == std::vector<Scalar>{Scalar(1), Scalar(-1), root_of_unity(1, 8), root_of_unity(1, 8)});

  const GradedData f16 = ising_like(16);
  CHECK(*f16.base.fusion() == klein_fusion());
  CHECK(f16.base.twists() == std::vector<Scalar>{Scalar(1), Scalar(-1), Scalar(1), Scalar(1)});
  CHECK(gauss_sum(f16.base) == Scalar(2));

  CHECK_THROWS_AS(ising_like(0), InputError);
  CHECK_THROWS_AS(ising_like(-3), InputError);
}

TEST_CASE("even family: the group is forced by the parity of k") {
  for (long k = 1; k <= 8; ++k) {
    const long l = 2 * k;
    int validating = 0;
    for (const FusionTensor& ring : {z4_fusion(), klein_fusion()}) {
      // both candidate rings give a unitary balancing S; only one matches Verlinde
      const ModularData m = family_candidate(l, ring);
      if (validate(m).passed()) {
        ++validating;
        CHECK((ring == z4_fusion()) == (k % 2 == 1));
      } else {
        CHECK_FALSE(validate(m).find("fusion matches Verlinde")->passed);
      }
    }
    CHECK(validating == 1);
    CHECK(*ising_like(l).base.fusion() == (k % 2 ? z4_fusion() : klein_fusion()));
  }
}

TEST_CASE("odd family: sigma^2 = 1 + psi is the only consistent ring") {
  // Alternatives for sigma x sigma on (1, psi, sigma) with d_sigma = sqrt2: 1 + psi, 2*1, 2*psi.
  const long options[3][2] = {{1, 1}, {2, 0}, {0, 2}};
  for (long l = 1; l <= 15; l += 2) {
    int validating = 0;
    for (const auto& opt : options) {
      FusionTensor n = ising_fusion();
      n.at(2, 2, 0) = opt[0];
      n.at(2, 2, 1) = opt[1];
      bool ok = false;
      try {
        ok = validate(family_candidate(l, n)).passed();
      } catch (const Error&) {
        ok = false;
      }
      if (ok) {
        ++validating;
        CHECK(opt[0] == 1);
        CHECK(opt[1] == 1);
      }
    }
    CHECK(validating == 1);
  }
}

TEST_CASE("family invariants for l = 1..32") {
  for (long l = 1; l <= 32; ++l) {
    INFO("l = " << l);
    const GradedData g = ising_like(l);
    REQUIRE(validate(g.base).passed());
    REQUIRE(global_dim(g.base) == Scalar(4));
    if (l <= 16) {
      const GradedData h = ising_like(l + 16);
      REQUIRE(same_objects(table_of(g), table_of(h)));
      REQUIRE(gauss_sum(g.base) == gauss_sum(h.base));
    }
    const Scalar tau = gauss_sum(g.base);
    REQUIRE(tau == Scalar(2) * root_of_unity(l, 16));
    // multiplicative central charge: tau / sqrt(dim) = e^{2 pi i (l/2) / 8}
    REQUIRE(tau * Scalar(Rational(1, 2)) == root_of_unity(l, 16));
  }
}

TEST_CASE("quantum dimensions of the family") {
  for (long l = 1; l <= 16; ++l) {
    const auto d = quantum_dims(ising_like(l).base);
    if (l % 2) CHECK(d == std::vector<Scalar>{Scalar(1), Scalar(1), sqrt2()});
    else CHECK(d == std::vector<Scalar>(4, Scalar(1)));
  }
}

TEST_CASE("family weights") {
  CHECK(family_weights(1) == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 16)});
  CHECK(family_weights(6) == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(3, 8), Rational(3, 8)});
  CHECK(family_central_charge(3) == Rational(3, 2));
  CHECK_THROWS_AS(family_weights(0), InputError);
}

TEST_CASE("F_a (x) F_b condenses to F_{a+b}") {
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b) {
      INFO("a=" << a << " b=" << b);
      REQUIRE(same_objects(extend(ising_like(a), b), table_of(ising_like(a + b))));
    }
}
