#pragma once

// Free-fermion characters as truncated q-products, and numeric checks of
// their S and T transformations against the exact F_l data.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mtc/errors.hpp"
#include "mtc/free_fermion.hpp"
#include "mtc/matrix.hpp"
#include "mtc/report.hpp"

namespace mtc {

using Complex = std::complex<double>;

/// q^prefactor * prod_{n=1}^{terms} factor(n)^power with q = e^{2 pi i tau}.
struct QProduct {
  enum class Kind {
    NeveuSchwarzPlus,   // 1 + q^{n-1/2}
    NeveuSchwarzMinus,  // 1 - q^{n-1/2}
    Ramond,             // 1 + q^n
    Eta,                // 1 - q^n
  };
  Rational prefactor;
  Kind kind = Kind::Eta;
  long power = 1;
};

namespace detail {

inline void require_upper_half(Complex tau, long terms) {
  if (!(tau.imag() > 0)) throw InputError("tau must lie in the upper half plane");
  if (terms < 1) throw InputError("need at least one product term");
}

// e^{2 pi i tau x}
inline Complex q_power(Complex tau, double x) {
  return std::exp(Complex(0, 2 * std::numbers::pi) * tau * x);
}

}  // namespace detail

inline Complex evaluate(const QProduct& p, Complex tau, long terms) {
  detail::require_upper_half(tau, terms);
  if (p.power < 1) throw InputError("q-product power must be >= 1");
  const Complex q = detail::q_power(tau, 1.0);
  const Complex q_half = detail::q_power(tau, 0.5);
  using K = QProduct::Kind;
  Complex prod = 1.0;
  Complex qn = 1.0;  // q^{n-1}
  for (long n = 1; n <= terms; ++n) {
    Complex f;
    switch (p.kind) {
      case K::NeveuSchwarzPlus: f = 1.0 + qn * q_half; break;
      case K::NeveuSchwarzMinus: f = 1.0 - qn * q_half; break;
      case K::Ramond: f = 1.0 + qn * q; break;
      case K::Eta: f = 1.0 - qn * q; break;
    }
    prod *= f;
    qn *= q;
  }
  Complex powered = 1.0;
  for (long i = 0; i < p.power; ++i) powered *= prod;
  return detail::q_power(tau, p.prefactor.get_d()) * powered;
}

/// Characters of the simple modules of F_l, in the label order of ising_like(l).
inline std::vector<Complex> character_vector(long l, Complex tau, long terms) {
  if (l < 1) throw InputError("character_vector: l must be >= 1");
  using K = QProduct::Kind;
  const Rational ns_shift(-l, 48), r_shift(l, 24);
  const Complex plus = evaluate({ns_shift, K::NeveuSchwarzPlus, l}, tau, terms);
  const Complex minus = evaluate({ns_shift, K::NeveuSchwarzMinus, l}, tau, terms);
  const Complex ramond = evaluate({r_shift, K::Ramond, l}, tau, terms);
  std::vector<Complex> chi{(plus + minus) / 2.0, (plus - minus) / 2.0};
  if (l % 2) {
    chi.push_back(std::pow(2.0, static_cast<double>((l - 1) / 2)) * ramond);
  } else {
    const Complex half = std::pow(2.0, static_cast<double>(l / 2 - 1)) * ramond;
    chi.push_back(half);
    chi.push_back(half);
  }
  return chi;
}

/// f(tau) = q^{1/24} prod (1 - q^n).
inline Complex eta(Complex tau, long terms) {
  return evaluate({Rational(1, 24), QProduct::Kind::Eta, 1}, tau, terms);
}

inline Matrix<Complex> to_numeric(const Matrix<Scalar>& s) {
  return s.map([](const Scalar& x) { return x.to_complex(); });
}

namespace detail {

inline std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace detail

/// max |chi(-1/tau) - S chi(tau)| < tol with S from F_l (or `s_override`),
/// and the weight-1/2 law eta(-1/tau) = sqrt(-i tau) eta(tau).
inline Report check_s_transform(long l, Complex tau, long terms, double tol,
                                const std::optional<Matrix<Complex>>& s_override = std::nullopt) {
  detail::require_upper_half(tau, terms);
  const Matrix<Complex> s = s_override ? *s_override : to_numeric(ising_like(l).base.S());
  const auto chi = character_vector(l, tau, terms);
  const Complex tau_s = -1.0 / tau;
  const auto chi_s = character_vector(l, tau_s, terms);
  if (s.rows() != chi.size() || s.cols() != chi.size())
    throw InputError("S override has the wrong shape");
  double residual = 0;
  for (std::size_t a = 0; a < chi.size(); ++a) {
    Complex sum = 0;
    for (std::size_t b = 0; b < chi.size(); ++b) sum += s(a, b) * chi[b];
    residual = std::max(residual, std::abs(chi_s[a] - sum));
  }
  const double eta_residual =
      std::abs(eta(tau_s, terms) - std::sqrt(Complex(0, -1) * tau) * eta(tau, terms));
  Report rep;
  rep.title = "S-transform F_" + std::to_string(l);
  rep.add("chi(-1/tau) = S chi(tau)", residual < tol, "residual " + detail::sci(residual));
  rep.add("eta(-1/tau) = sqrt(-i tau) eta(tau)", eta_residual < tol,
          "residual " + detail::sci(eta_residual));
  return rep;
}

/// chi(tau + 1) = e^{2 pi i (weight - c/24)} chi(tau), c = l/2.
inline Report check_t_transform(long l, Complex tau, long terms, double tol) {
  detail::require_upper_half(tau, terms);
  const auto weights = family_weights(l);
  const Rational c = family_central_charge(l);
  const auto chi = character_vector(l, tau, terms);
  const auto chi_t = character_vector(l, tau + 1.0, terms);
  double residual = 0;
  for (std::size_t a = 0; a < chi.size(); ++a) {
    const Rational e = weights[a] - c / 24;
    const Complex phase = std::polar(1.0, 2 * std::numbers::pi * e.get_d());
    residual = std::max(residual, std::abs(chi_t[a] - phase * chi[a]));
  }
  Report rep;
  rep.title = "T-transform F_" + std::to_string(l);
  rep.add("chi(tau+1) = T chi(tau)", residual < tol, "residual " + detail::sci(residual));
  return rep;
}

/// Parses "RE+IMi", "IMi", "i", "-0.5+2i" or a plain real number.
inline Complex parse_tau(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  auto fail = [&]() -> Complex { throw InputError("cannot parse tau '" + text + "'"); };
  if (s.empty()) return fail();
  auto num = [&](const std::string& t, double dflt) {
    if (t.empty() || t == "+") return dflt;
    if (t == "-") return -dflt;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) fail();
    return v;
  };
  if (s.back() != 'i') return {num(s, 0), 0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  if (split == std::string::npos) return {0, num(s, 1)};
  return {num(s.substr(0, split), 0), num(s.substr(split), 1)};
}

}  // namespace mtc
