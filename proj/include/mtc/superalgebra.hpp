#pragma once

// Bookkeeping for finite-dimensional simple superalgebras (types Q_k and
// M_{m,n}) and for how sigma-twisted modules behave under tensor products.
//
// Dictionary: a Q-type algebra corresponds to a sigma-unstable pair of
// twisted modules (a q-type object of the even part); an M-type algebra to
// a sigma-stable module (an m-type pair of the even part).

#include <ostream>
#include <string>
#include <utility>

#include "mtc/errors.hpp"

namespace mtc {

struct SuperAlgType {
  enum class Kind { Q, M };
  Kind kind = Kind::M;
  long a = 1;  // k for Q_k, m for M_{m,n}
  long b = 0;  // n for M_{m,n}, unused for Q_k

  static SuperAlgType q(long k) {
    if (k < 1) throw InputError("Q_k needs k >= 1");
    return {Kind::Q, k, 0};
  }
  /// M_{m,n} normalised so that m >= n.
  static SuperAlgType mat(long m, long n) {
    if (m < 0 || n < 0 || m + n < 1) throw InputError("M_{m,n} needs m, n >= 0 and m + n >= 1");
    if (m < n) std::swap(m, n);
    return {Kind::M, m, n};
  }

  /// Total dimension: 2k^2 for Q_k, (m+n)^2 for M_{m,n}.
  long dim() const { return kind == Kind::Q ? 2 * a * a : (a + b) * (a + b); }
  /// dim even - dim odd: 0 for Q_k, (m-n)^2 for M_{m,n}.
  long sdim() const { return kind == Kind::Q ? 0 : (a - b) * (a - b); }

  std::string to_string() const {
    if (kind == Kind::Q) return "Q_" + std::to_string(a);
    return "M_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }

  friend bool operator==(const SuperAlgType&, const SuperAlgType&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SuperAlgType& t) {
    return os << t.to_string();
  }
};

/// Q_m (x) Q_n = M_{mn,mn};  Q_k (x) M_{m,n} = Q_{(m+n)k};
/// M_{m,n} (x) M_{k,l} = M_{mk+nl, ml+nk}.
inline SuperAlgType tensor_type(const SuperAlgType& x, const SuperAlgType& y) {
  using K = SuperAlgType::Kind;
  if (x.kind == K::Q && y.kind == K::Q) return SuperAlgType::mat(x.a * y.a, x.a * y.a);
  if (x.kind == K::Q) return SuperAlgType::q((y.a + y.b) * x.a);
  if (y.kind == K::Q) return SuperAlgType::q((x.a + x.b) * y.a);
  return SuperAlgType::mat(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a);
}

/// Parses "Q:k" or "M:m,n".
inline SuperAlgType parse_superalg(const std::string& s) {
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty()) throw InputError("bad superalgebra type '" + s + "'");
    return v;
  };
  if (s.size() > 2 && s.rfind("Q:", 0) == 0) return SuperAlgType::q(number(s.substr(2)));
  if (s.size() > 2 && s.rfind("M:", 0) == 0) {
    const std::string rest = s.substr(2);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw InputError("bad superalgebra type '" + s + "'");
    return SuperAlgType::mat(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  }
  throw InputError("bad superalgebra type '" + s + "' (expected Q:k or M:m,n)");
}

/// Twisted sector of a theory up to isomorphism: `pairs` sigma-unstable
/// pairs and `stable` sigma-stable modules.
struct StabilityProfile {
  long pairs = 0;
  long stable = 0;

  friend bool operator==(const StabilityProfile&, const StabilityProfile&) = default;
  friend std::ostream& operator<<(std::ostream& os, const StabilityProfile& p) {
    return os << "(pairs " << p.pairs << ", stable " << p.stable << ")";
  }
};

/// pair (x) pair -> one stable; pair (x) stable -> one pair; stable (x) stable -> one stable.
/// The unit is (0, 1).
inline StabilityProfile twisted_product_profile(const StabilityProfile& u, const StabilityProfile& v) {
  if (u.pairs < 0 || u.stable < 0 || v.pairs < 0 || v.stable < 0)
    throw InputError("stability profile counts must be nonnegative");
  return {u.pairs * v.stable + u.stable * v.pairs, u.stable * v.stable + u.pairs * v.pairs};
}

inline StabilityProfile parse_profile(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma != std::string::npos) {
      std::size_t u1 = 0, u2 = 0;
      const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
      const long p = std::stol(a, &u1), q = std::stol(b, &u2);
      if (u1 == a.size() && u2 == b.size() && p >= 0 && q >= 0) return {p, q};
    }
  } catch (const std::exception&) {
  }
  throw InputError("bad stability profile '" + s + "' (expected PAIRS,STABLE)");
}

}  // namespace mtc
