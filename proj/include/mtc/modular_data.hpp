#pragma once

// The (S, T) presentation of a modular tensor category: axiom validation,
// Verlinde fusion, quantum dimensions, Gauss sums and Deligne products.
//
// Conventions: S is the normalised (unitary) S-matrix with a positive unit
// row; s~ = S / S[unit][unit] is derived on demand; twists are the diagonal
// of the categorical T. The balancing relation is
//   theta_a theta_b s~_ab = sum_c N_{a* b}^c theta_c d_c.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mtc/errors.hpp"
#include "mtc/matrix.hpp"
#include "mtc/report.hpp"
#include "mtc/scalar.hpp"

namespace mtc {

/// Fusion multiplicities N_{ab}^c, index order [a][b][c].
class FusionTensor {
 public:
  FusionTensor() = default;
  explicit FusionTensor(std::size_t rank) : rank_(rank), coeffs_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }

  long long operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return coeffs_[(a * rank_ + b) * rank_ + c];
  }
  long long& at(std::size_t a, std::size_t b, std::size_t c) {
    return coeffs_[(a * rank_ + b) * rank_ + c];
  }

  /// Unique c with N_{a c}^{unit} = 1, or nullopt when a has no dual.
  std::optional<std::size_t> dual(std::size_t a, std::size_t unit) const {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < rank_; ++c) {
      const long long n = (*this)(a, c, unit);
      if (n == 0) continue;
      if (n != 1 || found) return std::nullopt;
      found = c;
    }
    return found;
  }

  /// First violation of N_{unit,a}^b = delta_ab, as "(a,b)".
  std::optional<std::string> unit_violation(std::size_t unit) const {
    for (std::size_t a = 0; a < rank_; ++a)
      for (std::size_t b = 0; b < rank_; ++b)
        if ((*this)(unit, a, b) != (a == b ? 1 : 0) || (*this)(a, unit, b) != (a == b ? 1 : 0))
          return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return std::nullopt;
  }

  std::optional<std::string> commutativity_violation() const {
    for (std::size_t a = 0; a < rank_; ++a)
      for (std::size_t b = a + 1; b < rank_; ++b)
        for (std::size_t c = 0; c < rank_; ++c)
          if ((*this)(a, b, c) != (*this)(b, a, c))
            return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
  }

  /// sum_e N_ab^e N_ec^d == sum_f N_bc^f N_af^d for all a, b, c, d.
  std::optional<std::string> associativity_violation() const {
    const std::size_t r = rank_;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c)
          for (std::size_t d = 0; d < r; ++d) {
            long long lhs = 0, rhs = 0;
            for (std::size_t e = 0; e < r; ++e) {
              lhs += (*this)(a, b, e) * (*this)(e, c, d);
              rhs += (*this)(b, c, e) * (*this)(a, e, d);
            }
            if (lhs != rhs)
              return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                     "," + std::to_string(d) + ")";
          }
    return std::nullopt;
  }

  friend bool operator==(const FusionTensor&, const FusionTensor&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<long long> coeffs_;
};

class ModularData {
 public:
  ModularData(std::string name, std::vector<std::string> labels, std::size_t unit,
              Matrix<Scalar> s, std::vector<Scalar> twists,
              std::optional<FusionTensor> fusion = std::nullopt)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        unit_(unit),
        s_(std::move(s)),
        twists_(std::move(twists)),
        fusion_(std::move(fusion)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw InputError("modular data needs at least one label");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != r)
      throw InputError("duplicate labels");
    if (unit_ >= r) throw InputError("unit index out of range");
    if (s_.rows() != r || s_.cols() != r)
      throw InputError("S must be " + std::to_string(r) + "x" + std::to_string(r) + ", got " +
                       std::to_string(s_.rows()) + "x" + std::to_string(s_.cols()));
    if (twists_.size() != r)
      throw InputError("expected " + std::to_string(r) + " twists, got " +
                       std::to_string(twists_.size()));
    if (fusion_ && fusion_->rank() != r) throw InputError("fusion tensor rank mismatch");
  }

  const std::string& name() const { return name_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t unit() const { return unit_; }
  const Matrix<Scalar>& S() const { return s_; }
  const Scalar& S(std::size_t a, std::size_t b) const { return s_(a, b); }
  const std::vector<Scalar>& twists() const { return twists_; }
  const Scalar& twist(std::size_t a) const { return twists_.at(a); }
  const std::optional<FusionTensor>& fusion() const { return fusion_; }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw InputError("unknown label '" + label + "'");
  }

  void check_index(std::size_t a) const {
    if (a >= rank()) throw InputError("label index " + std::to_string(a) + " out of range");
  }

  bool is_exact() const {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (!twists_[i].is_exact()) return false;
      for (std::size_t j = 0; j < rank(); ++j)
        if (!s_(i, j).is_exact()) return false;
    }
    return true;
  }

  ModularData with_name(std::string name) const {
    ModularData m = *this;
    m.name_ = std::move(name);
    return m;
  }

  ModularData with_twist(std::size_t a, Scalar theta) const {
    check_index(a);
    ModularData m = *this;
    m.twists_[a] = std::move(theta);
    return m;
  }

  ModularData with_S(Matrix<Scalar> s) const {
    return ModularData(name_, labels_, unit_, std::move(s), twists_, fusion_);
  }

  /// Exact comparison of every field; float entries compare only with float entries.
  friend bool operator==(const ModularData& a, const ModularData& b) {
    auto same = [](const Scalar& x, const Scalar& y) {
      return x.is_exact() == y.is_exact() && x == y;
    };
    if (a.name_ != b.name_ || a.labels_ != b.labels_ || a.unit_ != b.unit_ ||
        a.fusion_ != b.fusion_)
      return false;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (!same(a.twists_[i], b.twists_[i])) return false;
      for (std::size_t j = 0; j < a.rank(); ++j)
        if (!same(a.s_(i, j), b.s_(i, j))) return false;
    }
    return true;
  }

  ModularData without_fusion() const {
    ModularData m = *this;
    m.fusion_.reset();
    return m;
  }

  /// Sub-data on the given labels (S, twists and fusion restricted). The
  /// result is generally not modular; it is what "viewing a subcategory"
  /// means at the level of raw data.
  ModularData restricted(std::span<const std::size_t> keep) const {
    std::vector<std::string> labels;
    std::vector<Scalar> twists;
    std::optional<std::size_t> unit;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_index(keep[i]);
      labels.push_back(labels_[keep[i]]);
      twists.push_back(twists_[keep[i]]);
      if (keep[i] == unit_) unit = i;
    }
    if (!unit) throw InputError("restricted data must contain the unit");
    Matrix<Scalar> s(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) s(i, j) = s_(keep[i], keep[j]);
    std::optional<FusionTensor> fusion;
    if (fusion_) {
      FusionTensor f(keep.size());
      for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
          for (std::size_t c = 0; c < keep.size(); ++c)
            f.at(a, b, c) = (*fusion_)(keep[a], keep[b], keep[c]);
      fusion = std::move(f);
    }
    return ModularData(name_ + "|sub", std::move(labels), *unit, std::move(s), std::move(twists),
                       std::move(fusion));
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::size_t unit_;
  Matrix<Scalar> s_;
  std::vector<Scalar> twists_;
  std::optional<FusionTensor> fusion_;
};

namespace detail {

inline std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline std::vector<std::size_t> all_labels(const ModularData& m) {
  std::vector<std::size_t> v(m.rank());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace detail

/// N_{ab}^c = sum_x S_ax S_bx conj(S_cx) / S_{unit,x}. Throws NotModularError
/// when a coefficient is not a nonnegative integer or S_{unit,x} vanishes.
inline FusionTensor verlinde_fusion(const ModularData& m) {
  const std::size_t r = m.rank(), u = m.unit();
  std::vector<Scalar> inv_unit_row(r);
  for (std::size_t x = 0; x < r; ++x) {
    if (m.S(u, x).is_zero())
      throw NotModularError("Verlinde: S[unit][" + std::to_string(x) + "] is zero");
    inv_unit_row[x] = m.S(u, x).inverse();
  }
  Matrix<Scalar> conj_s = m.S().map([](const Scalar& z) { return z.conj(); });
  FusionTensor n(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      std::vector<Scalar> w(r);
      for (std::size_t x = 0; x < r; ++x) w[x] = m.S(a, x) * m.S(b, x) * inv_unit_row[x];
      for (std::size_t c = 0; c < r; ++c) {
        Scalar sum(0);
        for (std::size_t x = 0; x < r; ++x) sum += w[x] * conj_s(c, x);
        const Cyclotomic& e = sum.exact();
        if (!e.is_rational() || e.rational_value().get_den() != 1 || e.rational_value() < 0)
          throw NotModularError("Verlinde coefficient N_{" + m.label(a) + "," + m.label(b) + "}^{" +
                                m.label(c) + "} = " + e.to_string() +
                                " is not a nonnegative integer");
        const long long v = e.rational_value().get_num().get_si();
        n.at(a, b, c) = v;
        n.at(b, a, c) = v;
      }
    }
  return n;
}

/// The stored fusion tensor, or the Verlinde one when the data carries none.
inline FusionTensor fusion_of(const ModularData& m) {
  return m.fusion() ? *m.fusion() : verlinde_fusion(m);
}

/// d_a = S_{a,unit} / S_{unit,unit}.
inline std::vector<Scalar> quantum_dims(const ModularData& m) {
  const Scalar inv = m.S(m.unit(), m.unit()).inverse();
  std::vector<Scalar> d(m.rank());
  for (std::size_t a = 0; a < m.rank(); ++a) d[a] = m.S(a, m.unit()) * inv;
  return d;
}

/// Labels whose dimension lies outside {1} U {2cos(pi/n) : n >= 3} U [2, inf).
/// Advisory only; such data is not rejected.
inline std::vector<std::string> quantum_dim_warnings(const ModularData& m) {
  std::vector<std::string> out;
  const auto d = quantum_dims(m);
  for (std::size_t a = 0; a < m.rank(); ++a) {
    const double x = d[a].to_complex().real();
    bool ok = std::abs(x - 1.0) < 1e-9 || x >= 2.0 - 1e-9;
    if (!ok) {
      // 2cos(pi/n) approaches 2 from below; solve for n and test the nearest integers.
      const double n_real = std::numbers::pi / std::acos(std::clamp(x / 2.0, -1.0, 1.0));
      for (long n = std::max(3L, std::lround(n_real) - 1); n <= std::lround(n_real) + 1; ++n)
        if (std::abs(2.0 * std::cos(std::numbers::pi / static_cast<double>(n)) - x) < 1e-9) ok = true;
    }
    if (!ok) out.push_back(m.label(a) + ": dimension " + std::to_string(x) + " outside the allowed set");
  }
  return out;
}

/// sum_a d_a^2.
inline Scalar global_dim(const ModularData& m) {
  const auto d = quantum_dims(m);
  Scalar sum = Scalar::zero_like(d[0]);
  for (const auto& x : d) sum += x * x;
  return sum;
}

/// tau_n restricted to `subset`: sum_{X in subset} d_X^2 theta_X^n.
inline Scalar gauss_sum(const ModularData& m, long long degree,
                        std::span<const std::size_t> subset) {
  if (degree == 0) throw InputError("gauss_sum: degree must be nonzero");
  const auto d = quantum_dims(m);
  Scalar sum = Scalar::zero_like(d[0]);
  for (std::size_t a : subset) {
    m.check_index(a);
    sum += d[a] * d[a] * m.twist(a).pow(degree);
  }
  return sum;
}

inline Scalar gauss_sum(const ModularData& m, long long degree = 1) {
  const auto all = detail::all_labels(m);
  return gauss_sum(m, degree, all);
}

/// Kronecker product: labels "(a,b)", S = S_A (x) S_B, twists multiply.
inline ModularData deligne_product(const ModularData& a, const ModularData& b) {
  const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
  std::vector<std::string> labels;
  std::vector<Scalar> twists;
  labels.reserve(r);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      twists.push_back(a.twist(i) * b.twist(j));
    }
  Matrix<Scalar> s(r, r);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j)
      for (std::size_t k = 0; k < ra; ++k)
        for (std::size_t l = 0; l < rb; ++l) s(i * rb + j, k * rb + l) = a.S(i, k) * b.S(j, l);
  std::optional<FusionTensor> fusion;
  if (a.fusion() && b.fusion()) {
    FusionTensor f(r);
    const auto& fa = *a.fusion();
    const auto& fb = *b.fusion();
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        for (std::size_t z = 0; z < r; ++z)
          f.at(x, y, z) = fa(x / rb, y / rb, z / rb) * fb(x % rb, y % rb, z % rb);
    fusion = std::move(f);
  }
  return ModularData(a.name() + " x " + b.name(), std::move(labels), a.unit() * rb + b.unit(),
                     std::move(s), std::move(twists), std::move(fusion));
}

/// Checks every modular-data axiom exactly. Shape problems and float data are
/// input errors (thrown); axiom failures are reported with a witness.
inline ValidationReport validate(const ModularData& m) {
  if (!m.is_exact()) throw InputError("validate requires exact (cyclotomic) data");
  ValidationReport rep;
  rep.title = "validate " + m.name();
  const std::size_t r = m.rank(), u = m.unit();
  const auto& s = m.S();

  {
    std::string w;
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      for (std::size_t b = a + 1; b < r && w.empty(); ++b)
        if (!(s(a, b) == s(b, a))) w = detail::pair_str(a, b);
    rep.add("S symmetric", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      for (std::size_t b = 0; b < r && w.empty(); ++b) {
        Scalar sum(0);
        for (std::size_t x = 0; x < r; ++x) sum += s(a, x) * s(b, x).conj();
        if (!(sum == Scalar(a == b ? 1 : 0))) w = detail::pair_str(a, b);
      }
    rep.add("S unitary", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      if (!is_positive_real(s(u, a))) w = m.label(a);
    rep.add("unit row positive", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      if (!is_root_of_unity(m.twist(a))) w = m.label(a);
    rep.add("twists are roots of unity", w.empty(), w);
  }

  std::optional<FusionTensor> verlinde;
  try {
    verlinde = verlinde_fusion(m);
    rep.add("Verlinde integrality", true);
  } catch (const NotModularError& e) {
    rep.add("Verlinde integrality", false, e.what());
  }
  if (m.fusion()) {
    std::string w;
    if (!verlinde) {
      w = "Verlinde fusion unavailable";
    } else {
      for (std::size_t a = 0; a < r && w.empty(); ++a)
        for (std::size_t b = 0; b < r && w.empty(); ++b)
          for (std::size_t c = 0; c < r && w.empty(); ++c)
            if ((*m.fusion())(a, b, c) != (*verlinde)(a, b, c))
              w = "N_{" + m.label(a) + "," + m.label(b) + "}^{" + m.label(c) + "}";
    }
    rep.add("fusion matches Verlinde", w.empty(), w);
  }
  const std::optional<FusionTensor> fusion = m.fusion() ? m.fusion() : verlinde;
  if (fusion) {
    const auto uv = fusion->unit_violation(u);
    rep.add("fusion unit", !uv, uv.value_or(""));
    const auto cv = fusion->commutativity_violation();
    rep.add("fusion commutative", !cv, cv.value_or(""));
    const auto av = fusion->associativity_violation();
    rep.add("fusion associative", !av, av.value_or(""));
  }

  const Scalar s_uu = s(u, u);
  if (s_uu.is_zero()) {
    rep.add("twist equation", false, "S[unit][unit] = 0");
    return rep;
  }
  const auto d = quantum_dims(m);
  if (fusion) {
    std::string w;
    std::vector<std::size_t> dual(r);
    for (std::size_t a = 0; a < r && w.empty(); ++a) {
      const auto da = fusion->dual(a, u);
      if (!da) w = "no dual for " + m.label(a);
      else dual[a] = *da;
    }
    const Scalar inv_uu = s_uu.inverse();
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      for (std::size_t b = 0; b < r && w.empty(); ++b) {
        const Scalar lhs = m.twist(a) * m.twist(b) * s(a, b) * inv_uu;
        Scalar rhs(0);
        for (std::size_t c = 0; c < r; ++c) {
          const long long n = (*fusion)(dual[a], b, c);
          if (n != 0) rhs += Scalar(static_cast<long>(n)) * m.twist(c) * d[c];
        }
        if (!(lhs == rhs)) w = "(" + m.label(a) + "," + m.label(b) + ")";
      }
    rep.add("twist equation", w.empty(), w);
  } else {
    rep.add("twist equation", false, "fusion unavailable");
  }

  {
    const Scalar dim = global_dim(m);
    rep.add("global dimension = 1/S_uu^2", dim * s_uu * s_uu == Scalar(1), dim.to_string());
  }
  {
    const Matrix<Scalar> s2 = s * s;
    std::string w;
    std::vector<std::size_t> perm(r, r);
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      for (std::size_t b = 0; b < r && w.empty(); ++b) {
        if (s2(a, b) == Scalar(1)) {
          if (perm[a] != r) w = "row " + m.label(a) + " has two units";
          perm[a] = b;
        } else if (!s2(a, b).is_zero()) {
          w = "S^2" + detail::pair_str(a, b) + " = " + s2(a, b).to_string();
        }
      }
    for (std::size_t a = 0; a < r && w.empty(); ++a) {
      if (perm[a] == r) w = "row " + m.label(a) + " is zero";
      else if (perm[perm[a]] != a) w = "C^2 != 1 at " + m.label(a);
      else if (fusion && fusion->dual(a, u) != perm[a]) w = "C disagrees with duality at " + m.label(a);
    }
    rep.add("charge conjugation S^2 = C", w.empty(), w);
  }
  {
    const Scalar tau = gauss_sum(m, 1);
    const Scalar lambda = tau * s_uu;  // tau_1 / D with D = 1 / S_uu
    Matrix<Scalar> st = s;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) st(a, b) *= m.twist(b);
    const Matrix<Scalar> st3 = st * st * st;
    const Matrix<Scalar> s2 = s * s;
    std::string w;
    for (std::size_t a = 0; a < r && w.empty(); ++a)
      for (std::size_t b = 0; b < r && w.empty(); ++b)
        if (!(st3(a, b) == lambda * s2(a, b))) w = detail::pair_str(a, b);
    rep.add("modular relation (ST)^3 = lambda S^2", w.empty(), w);
    rep.add("Gauss sum |tau_1|^2 = dim", tau * tau.conj() == global_dim(m), tau.to_string());
  }
  return rep;
}

}  // namespace mtc
