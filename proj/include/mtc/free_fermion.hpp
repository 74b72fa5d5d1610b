#pragma once

// Modular data of the even part of the rank-l free fermion, F_l, and the
// balancing construction of S from fusion, twists and dimensions.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "mtc/errors.hpp"
#include "mtc/fermionic.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/scalar.hpp"

namespace mtc {

namespace detail {

inline std::size_t fusion_unit(const FusionTensor& n) {
  for (std::size_t u = 0; u < n.rank(); ++u)
    if (!n.unit_violation(u)) return u;
  throw InputError("fusion tensor has no unit");
}

inline double unitarity_defect(const Matrix<Scalar>& s) {
  const std::size_t r = s.rows();
  double norm2 = 0;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      std::complex<double> sum = a == b ? -1.0 : 0.0;
      for (std::size_t x = 0; x < r; ++x) sum += s(a, x).to_complex() * std::conj(s(b, x).to_complex());
      norm2 += std::norm(sum);
    }
  return std::sqrt(norm2);
}

}  // namespace detail

/// S = s~ / sqrt(sum d^2) with the balancing sum
///   s~_ab = theta_a^-1 theta_b^-1 sum_c N_{a* b}^c theta_c d_c.
/// Throws NotModularError (with the Frobenius norm of S S^dagger - 1) when
/// the result is not unitary or no exact square root of sum d^2 exists.
inline Matrix<Scalar> s_from_twists(const FusionTensor& fusion, const std::vector<Scalar>& twists,
                                    const std::vector<Scalar>& dims) {
  const std::size_t r = fusion.rank();
  if (twists.size() != r || dims.size() != r)
    throw InputError("s_from_twists: fusion, twists and dims disagree in size");
  const std::size_t u = detail::fusion_unit(fusion);
  std::vector<std::size_t> dual(r);
  for (std::size_t a = 0; a < r; ++a) {
    const auto d = fusion.dual(a, u);
    if (!d) throw InputError("s_from_twists: no dual for label " + std::to_string(a));
    dual[a] = *d;
  }

  Scalar dim(0), tau(0);
  for (std::size_t a = 0; a < r; ++a) {
    if (!is_positive_real(dims[a])) throw InputError("s_from_twists: dimensions must be positive");
    dim += dims[a] * dims[a];
    tau += dims[a] * dims[a] * twists[a];
  }
  Scalar root;
  try {
    root = exact_positive_sqrt(dim, &tau);
  } catch (const ArithmeticError& e) {
    throw NotModularError(std::string("s_from_twists: ") + e.what());
  }
  const Scalar inv_root = root.inverse();

  Matrix<Scalar> s(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    const Scalar ia = twists[a].inverse();
    for (std::size_t b = a; b < r; ++b) {
      Scalar sum(0);
      for (std::size_t c = 0; c < r; ++c) {
        const long long n = fusion(dual[a], b, c);
        if (n != 0) sum += Scalar(static_cast<long>(n)) * twists[c] * dims[c];
      }
      s(a, b) = s(b, a) = sum * ia * twists[b].inverse() * inv_root;
    }
  }

  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      Scalar sum(0);
      for (std::size_t x = 0; x < r; ++x) sum += s(a, x) * s(b, x).conj();
      if (!(sum == Scalar(a == b ? 1 : 0)))
        throw NotModularError("s_from_twists: result not unitary, defect norm " +
                              std::to_string(detail::unitarity_defect(s)));
    }
  return s;
}

/// Fusion tensor of a finite group from its multiplication table.
inline FusionTensor group_fusion(const std::vector<std::vector<std::size_t>>& product) {
  const std::size_t r = product.size();
  FusionTensor n(r);
  for (std::size_t a = 0; a < r; ++a) {
    if (product[a].size() != r) throw InputError("group table is not square");
    for (std::size_t b = 0; b < r; ++b) n.at(a, b, product[a][b]) = 1;
  }
  return n;
}

/// Z4 on (1, psi, tw0, tw1) = (g^0, g^2, g^1, g^3).
inline FusionTensor z4_fusion() {
  const std::size_t pw[] = {0, 2, 1, 3};  // label -> exponent
  std::size_t lab[4];
  for (std::size_t i = 0; i < 4; ++i) lab[pw[i]] = i;
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = lab[(pw[a] + pw[b]) % 4];
  return group_fusion(t);
}

/// Z2 x Z2 on (1, psi, tw0, tw1) with tw0 tw1 = psi.
inline FusionTensor klein_fusion() {
  return group_fusion({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

/// psi^2 = 1, psi sigma = sigma, sigma^2 = 1 + psi on (1, psi, sigma).
inline FusionTensor ising_fusion() {
  FusionTensor n(3);
  const std::size_t one = 0, psi = 1, sig = 2;
  for (std::size_t a = 0; a < 3; ++a) {
    n.at(one, a, a) = 1;
    n.at(a, one, a) = 1;
  }
  n.at(psi, psi, one) = 1;
  n.at(psi, sig, sig) = 1;
  n.at(sig, psi, sig) = 1;
  n.at(sig, sig, one) = 1;
  n.at(sig, sig, psi) = 1;
  return n;
}

/// Conformal weights of the simple modules in canonical label order:
/// (0, 1/2, l/16) for odd l, (0, 1/2, l/16, l/16) for even l.
inline std::vector<Rational> family_weights(long l) {
  if (l < 1) throw InputError("free fermion rank must be >= 1, got " + std::to_string(l));
  std::vector<Rational> w{Rational(0), Rational(1, 2), Rational(l, 16)};
  if (l % 2 == 0) w.push_back(Rational(l, 16));
  for (auto& x : w) x.canonicalize();
  return w;
}

inline Rational family_central_charge(long l) { return Rational(l, 2); }

inline std::vector<std::string> family_labels(long l) {
  if (l % 2) return {"1", "psi", "sigma"};
  return {"1", "psi", "tw0", "tw1"};
}

/// Modular data of F_l for a given fusion ring guess; throws NotModularError
/// if the balancing S is not unitary.
inline ModularData family_candidate(long l, const FusionTensor& fusion) {
  const auto weights = family_weights(l);
  std::vector<Scalar> twists;
  for (const auto& w : weights)
    twists.push_back(root_of_unity(w.get_num().get_si(), w.get_den().get_si()));
  std::vector<Scalar> dims(weights.size(), Scalar(1));
  if (l % 2) dims[2] = sqrt2();
  Matrix<Scalar> s = s_from_twists(fusion, twists, dims);
  return ModularData("F_" + std::to_string(l), family_labels(l), 0, std::move(s),
                     std::move(twists), fusion);
}

/// F_l graded by psi. Odd l uses the Ising ring; for even l both abelian
/// groups of order 4 are tried and the one whose data validates is kept.
inline GradedData ising_like(long l) {
  if (l < 1) throw InputError("ising_like: l must be >= 1, got " + std::to_string(l));
  if (l % 2) {
    ModularData m = family_candidate(l, ising_fusion());
    if (!validate(m).passed()) throw StructuralError("F_" + std::to_string(l) + " fails validation");
    return sector_grading(m, 1);
  }
  std::optional<ModularData> chosen;
  for (const FusionTensor& ring : {z4_fusion(), klein_fusion()}) {
    try {
      ModularData m = family_candidate(l, ring);
      if (!validate(m).passed()) continue;
      if (chosen) throw StructuralError("F_" + std::to_string(l) + ": both fusion groups validate");
      chosen = std::move(m);
    } catch (const NotModularError&) {
    }
  }
  if (!chosen) throw StructuralError("F_" + std::to_string(l) + ": no fusion group validates");
  return sector_grading(*chosen, 1);
}

}  // namespace mtc
