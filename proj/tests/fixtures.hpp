#pragma once

// Hand-written modular data and seeded generators shared by the unit tests.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "mtc/free_fermion.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/scalar.hpp"

namespace fixtures {

using mtc::Cyclotomic;
using mtc::Matrix;
using mtc::ModularData;
using mtc::Rational;
using mtc::Scalar;

inline Scalar half() { return Scalar(Rational(1, 2)); }

inline mtc::FusionTensor klein() { return mtc::klein_fusion(); }

/// D(Z2): 1, e, m, f with theta = (1, 1, 1, -1).
inline ModularData toric_code() {
  const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  Matrix<Scalar> s(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s(a, b) = Scalar(sign[a][b]) * half();
  // labels in (1, psi, tw0, tw1) order of klein(): psi = f, tw0 = e, tw1 = m
  Matrix<Scalar> p(4, 4);
  const int perm[4] = {0, 3, 1, 2};  // file label i -> toric index
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) p(a, b) = s(perm[a], perm[b]);
  return ModularData("toric", {"1", "f", "e", "m"}, 0, p, {Scalar(1), Scalar(-1), Scalar(1), Scalar(1)},
                     klein());
}

/// Semion: S = [[1,1],[1,-1]]/sqrt2, theta_s = i.
inline ModularData semion() {
  const Scalar r = mtc::sqrt2().inverse();
  Matrix<Scalar> s(2, 2);
  s(0, 0) = r;
  s(0, 1) = r;
  s(1, 0) = r;
  s(1, 1) = -r;
  return ModularData("semion", {"1", "s"}, 0, s, {Scalar(1), mtc::root_of_unity(1, 4)});
}

/// Golden ratio 1 + zeta5 + zeta5^4.
inline Scalar golden() {
  return Scalar(1) + mtc::root_of_unity(1, 5) + mtc::root_of_unity(4, 5);
}

inline mtc::FusionTensor fibonacci_fusion() {
  mtc::FusionTensor n(2);
  n.at(0, 0, 0) = 1;
  n.at(0, 1, 1) = 1;
  n.at(1, 0, 1) = 1;
  n.at(1, 1, 0) = 1;
  n.at(1, 1, 1) = 1;
  return n;
}

/// Fibonacci with theta_tau = e^{4 pi i / 5}; S built by balancing.
inline ModularData fibonacci() {
  const std::vector<Scalar> twists{Scalar(1), mtc::root_of_unity(2, 5)};
  const std::vector<Scalar> dims{Scalar(1), golden()};
  return ModularData("fib", {"1", "tau"}, 0, mtc::s_from_twists(fibonacci_fusion(), twists, dims),
                     twists, fibonacci_fusion());
}

/// Random element of Q(zeta_n) with small rational coefficients.
inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int n, int density = 3) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pos(0, n - 1);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < density; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    c[static_cast<std::size_t>(pos(rng))] += r;
  }
  return Cyclotomic::from_coefficients(n, std::move(c));
}

}  // namespace fixtures
