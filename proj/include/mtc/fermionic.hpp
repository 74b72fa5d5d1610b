#pragma once

// Fermions, Mueger centralizers, the Z2 sector grading they induce,
// super-modularity and minimal-modular-extension checks, and assembly of the
// super S-matrix blocks S^(sigma,sigma), S^(sigma,1), S^(1,sigma), S^(1,1)
// from the S-matrix of the even part.

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtc/errors.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/report.hpp"
#include "mtc/scalar.hpp"

namespace mtc {

/// Modular data with a chosen fermion f and the grading it induces.
///
/// Sector 0 is the centralizer of f; f pairs its labels into orbits
/// {x, f x}. In sector 1 a label is q-type when f x = x and otherwise belongs
/// to an m-type pair {x, f x}. Pairs are stored (representative, partner);
/// the representative is the unit when the orbit holds it, else the
/// lexicographically smaller label. Only sector_grading() builds these.
struct GradedData {
  ModularData base;
  std::size_t fermion = 0;
  std::vector<int> sector;
  std::vector<std::size_t> fermion_action;
  std::vector<Scalar> dims;
  std::vector<std::pair<std::size_t, std::size_t>> sector0_orbits;
  std::vector<std::size_t> q_types;
  std::vector<std::pair<std::size_t, std::size_t>> m_pairs;

  std::vector<std::size_t> labels_in(int s) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < sector.size(); ++a)
      if (sector[a] == s) out.push_back(a);
    return out;
  }
};

namespace detail {

inline bool braids_trivially(const ModularData& m, const std::vector<Scalar>& d,
                             const Scalar& inv_uu, std::size_t x, std::size_t y) {
  return m.S(x, y) * inv_uu == d[x] * d[y];
}

inline std::pair<std::size_t, std::size_t> ordered_orbit(const ModularData& m, std::size_t x,
                                                         std::size_t y) {
  if (x == m.unit()) return {x, y};
  if (y == m.unit()) return {y, x};
  return m.label(x) < m.label(y) ? std::pair{x, y} : std::pair{y, x};
}

inline std::string triple(const ModularData& m, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + m.label(a) + "," + m.label(b) + "," + m.label(c) + ")";
}

}  // namespace detail

/// Labels in `universe` braiding trivially with every label in `of`
/// (s~_xy = d_x d_y). No closure check.
inline std::vector<std::size_t> centralizer_within(const ModularData& m,
                                                   std::span<const std::size_t> universe,
                                                   std::span<const std::size_t> of) {
  for (std::size_t y : of) m.check_index(y);
  for (std::size_t x : universe) m.check_index(x);
  const auto d = quantum_dims(m);
  const Scalar inv_uu = m.S(m.unit(), m.unit()).inverse();
  std::vector<std::size_t> out;
  for (std::size_t x : universe) {
    bool ok = true;
    for (std::size_t y : of)
      if (!detail::braids_trivially(m, d, inv_uu, x, y)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

/// Mueger centralizer of `of` in the whole category; verified fusion-closed.
inline std::vector<std::size_t> centralizer(const ModularData& m, std::span<const std::size_t> of) {
  const auto all = detail::all_labels(m);
  auto out = centralizer_within(m, all, of);
  const auto fusion = fusion_of(m);
  const std::set<std::size_t> in(out.begin(), out.end());
  for (std::size_t a : out)
    for (std::size_t b : out)
      for (std::size_t c = 0; c < m.rank(); ++c)
        if (fusion(a, b, c) != 0 && !in.count(c))
          throw StructuralError("centralizer not closed under fusion at " +
                                detail::triple(m, a, b, c));
  return out;
}

inline bool is_fermion(const ModularData& m, const FusionTensor& fusion,
                       const std::vector<Scalar>& d, std::size_t f) {
  return d[f] == Scalar(1) && fusion(f, f, m.unit()) == 1 && m.twist(f) == Scalar(-1);
}

/// Every label with d_f = 1, f (x) f = 1 and theta_f = -1.
inline std::vector<std::size_t> find_fermions(const ModularData& m) {
  const auto fusion = fusion_of(m);
  const auto d = quantum_dims(m);
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < m.rank(); ++f)
    if (is_fermion(m, fusion, d, f)) out.push_back(f);
  return out;
}

/// Builds the graded structure for fermion `f`, establishing every
/// invariant of GradedData or throwing StructuralError naming the witness.
inline GradedData sector_grading(const ModularData& m, std::size_t f) {
  m.check_index(f);
  const auto fusion = fusion_of(m);
  GradedData g{m, f, {}, {}, quantum_dims(m), {}, {}, {}};
  if (!is_fermion(m, fusion, g.dims, f))
    throw InputError("label '" + m.label(f) + "' is not a fermion");
  const std::size_t r = m.rank();

  const std::size_t of[] = {f};
  const auto sector0 = centralizer(m, of);
  g.sector.assign(r, 1);
  for (std::size_t x : sector0) g.sector[x] = 0;

  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        if (fusion(a, b, c) != 0 && g.sector[c] != (g.sector[a] + g.sector[b]) % 2)
          throw StructuralError("grading closure violated at " + detail::triple(m, a, b, c));

  g.fermion_action.resize(r);
  for (std::size_t x = 0; x < r; ++x) {
    std::optional<std::size_t> image;
    for (std::size_t c = 0; c < r; ++c) {
      const long long n = fusion(f, x, c);
      if (n == 0) continue;
      if (n != 1 || image)
        throw StructuralError("fermion does not act as a simple current on " + m.label(x));
      image = c;
    }
    if (!image) throw StructuralError("f x is zero for " + m.label(x));
    g.fermion_action[x] = *image;
  }

  std::vector<bool> seen(r, false);
  for (std::size_t x = 0; x < r; ++x) {
    if (seen[x]) continue;
    const std::size_t fx = g.fermion_action[x];
    seen[x] = seen[fx] = true;
    if (g.sector[x] == 0) {
      if (fx == x) throw StructuralError("fermion fixes " + m.label(x) + " in sector 0");
      if (!(m.twist(fx) == -m.twist(x)))
        throw StructuralError("theta_{f x} != -theta_x for x = " + m.label(x));
      g.sector0_orbits.push_back(detail::ordered_orbit(m, x, fx));
    } else if (fx == x) {
      g.q_types.push_back(x);
    } else {
      if (!(m.twist(fx) == m.twist(x)))
        throw StructuralError("twists differ inside m-type pair of " + m.label(x));
      g.m_pairs.push_back(detail::ordered_orbit(m, x, fx));
    }
  }

  Scalar sum0(0), sum1(0);
  for (std::size_t a = 0; a < r; ++a) (g.sector[a] == 0 ? sum0 : sum1) += g.dims[a] * g.dims[a];
  if (!(sum0 == sum1))
    throw StructuralError("sector dimensions differ: " + sum0.to_string() + " vs " +
                          sum1.to_string());
  if (g.sector0_orbits.size() != g.q_types.size() + g.m_pairs.size())
    throw StructuralError("orbit count identity fails: " + std::to_string(g.sector0_orbits.size()) +
                          " sector-0 orbits vs " + std::to_string(g.q_types.size()) + " q + " +
                          std::to_string(g.m_pairs.size()) + " m-pairs");
  return g;
}

inline GradedData sector_grading(const ModularData& m, const std::string& fermion) {
  return sector_grading(m, m.index_of(fermion));
}

/// Passes iff the Mueger center of the sub-data on `subset` is exactly {unit, f}
/// and theta_f = -1.
inline Report check_supermodular(const ModularData& m, std::span<const std::size_t> subset,
                                 std::size_t f) {
  Report rep;
  rep.title = "supermodular " + m.name();
  m.check_index(f);
  rep.add("fermion twist -1", m.twist(f) == Scalar(-1), m.twist(f).to_string());
  const auto center = centralizer_within(m, subset, subset);
  const std::set<std::size_t> got(center.begin(), center.end());
  const std::set<std::size_t> want{m.unit(), f};
  std::string names;
  for (std::size_t x : center) names += (names.empty() ? "" : ",") + m.label(x);
  rep.add("Mueger center = {unit, f}", got == want, "{" + names + "}");
  return rep;
}

inline Report check_supermodular(const GradedData& g) {
  const auto s0 = g.labels_in(0);
  return check_supermodular(g.base, s0, g.fermion);
}

namespace detail {

inline Report minimal_extension_report(const ModularData& m, std::size_t f,
                                       std::span<const std::size_t> sector0) {
  Report rep;
  rep.title = "minimal modular extension " + m.name();
  const auto v = validate(m);
  std::string failed;
  for (const auto& c : v.checks)
    if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
  rep.add("(a) base is modular", v.passed(), failed);
  rep.add("(b) sector 0 is super-modular", check_supermodular(m, sector0, f).passed());
  const auto d = quantum_dims(m);
  Scalar dim0(0);
  for (std::size_t x : sector0) dim0 += d[x] * d[x];
  const Scalar dim = global_dim(m);
  rep.add("(c) dim C = 2 dim C0", dim == Scalar(2) * dim0,
          dim.to_string() + " vs 2*" + dim0.to_string());
  const Scalar tau0 = gauss_sum(m, 1, sector0);
  rep.add("(d) tau_1(C0) = 0", tau0.is_zero(), tau0.to_string());
  return rep;
}

}  // namespace detail

inline Report check_minimal_extension(const GradedData& g) {
  const auto s0 = g.labels_in(0);
  return detail::minimal_extension_report(g.base, g.fermion, s0);
}

/// Report-only variant for raw data that may not even admit a grading.
inline Report check_minimal_extension(const ModularData& m, std::size_t f) {
  m.check_index(f);
  const auto all = detail::all_labels(m);
  const std::size_t of[] = {f};
  const auto s0 = centralizer_within(m, all, of);
  return detail::minimal_extension_report(m, f, s0);
}

/// Super S-matrix blocks reconstructed from the even part.
///
/// Row/column order: sector-0 orbits; "twisted" = q-type labels then m-pairs;
/// "stable" = m-pairs only.
struct SuperSBlocks {
  std::vector<std::string> orbit_labels;
  std::vector<std::string> twisted_labels;
  std::vector<std::string> stable_labels;
  Matrix<Scalar> sigma_sigma;  // orbits x orbits
  Matrix<Scalar> sigma_one;    // orbits x twisted
  Matrix<Scalar> one_sigma;    // twisted x orbits
  Matrix<Scalar> one_one;      // stable x stable
  Report report;
};

namespace detail {

struct Member {
  std::size_t label;
  int parity;  // r in (-1)^r
};

using Orbit = std::vector<Member>;

inline Orbit pair_members(const std::pair<std::size_t, std::size_t>& p) {
  return {{p.first, 0}, {p.second, 1}};
}

inline Scalar sign(int parity) { return parity % 2 ? Scalar(-1) : Scalar(1); }

// Every representative combination must give the same block entry.
template <class F>
Scalar well_defined(const Orbit& rows, const Orbit& cols, F entry, const std::string& where) {
  std::optional<Scalar> value;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      Scalar v = entry(r, c);
      if (!value) value = std::move(v);
      else if (!(*value == v))
        throw StructuralError("super S entry " + where + " depends on the representative");
    }
  return *value;
}

inline bool is_unitary(const Matrix<Scalar>& b) {
  if (!b.square()) return false;
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar sum(0);
      for (std::size_t k = 0; k < n; ++k) sum += b(i, k) * b(j, k).conj();
      if (!(sum == Scalar(i == j ? 1 : 0))) return false;
    }
  return true;
}

}  // namespace detail

inline SuperSBlocks assemble_super_s(const GradedData& g) {
  const ModularData& m = g.base;
  const Scalar root2 = sqrt2();
  SuperSBlocks out;
  std::vector<detail::Orbit> orbits, twisted, stable;
  for (const auto& p : g.sector0_orbits) {
    orbits.push_back(detail::pair_members(p));
    out.orbit_labels.push_back("{" + m.label(p.first) + "," + m.label(p.second) + "}");
  }
  for (std::size_t q : g.q_types) {
    twisted.push_back({{q, 0}});
    out.twisted_labels.push_back(m.label(q));
  }
  for (const auto& p : g.m_pairs) {
    twisted.push_back(detail::pair_members(p));
    stable.push_back(detail::pair_members(p));
    const std::string name = "{" + m.label(p.first) + "," + m.label(p.second) + "}";
    out.twisted_labels.push_back(name);
    out.stable_labels.push_back(name);
  }
  const std::size_t no = orbits.size(), nt = twisted.size(), ns = stable.size();
  auto where = [](const char* block, std::size_t i, std::size_t j) {
    return std::string(block) + detail::pair_str(i, j);
  };

  out.sigma_sigma = Matrix<Scalar>(no, no);
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t j = 0; j < no; ++j)
      out.sigma_sigma(i, j) = detail::well_defined(
          orbits[i], orbits[j],
          [&](const detail::Member& x, const detail::Member& y) {
            return Scalar(2) * m.S(x.label, y.label);
          },
          where("S(sigma,sigma)", i, j));

  // q-type entries carry sqrt2, m-pair entries 2; the (-1)^r sign follows the sector-0 member.
  out.sigma_one = Matrix<Scalar>(no, nt);
  out.one_sigma = Matrix<Scalar>(nt, no);
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t j = 0; j < nt; ++j) {
      const Scalar scale = twisted[j].size() == 1 ? root2 : Scalar(2);
      out.sigma_one(i, j) = detail::well_defined(
          orbits[i], twisted[j],
          [&](const detail::Member& x, const detail::Member& y) {
            return scale * detail::sign(x.parity) * m.S(x.label, y.label);
          },
          where("S(sigma,1)", i, j));
      out.one_sigma(j, i) = detail::well_defined(
          twisted[j], orbits[i],
          [&](const detail::Member& y, const detail::Member& x) {
            return scale * detail::sign(x.parity) * m.S(y.label, x.label);
          },
          where("S(1,sigma)", j, i));
    }

  out.one_one = Matrix<Scalar>(ns, ns);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      out.one_one(i, j) = detail::well_defined(
          stable[i], stable[j],
          [&](const detail::Member& x, const detail::Member& y) {
            return Scalar(2) * detail::sign(x.parity + y.parity) * m.S(x.label, y.label);
          },
          where("S(1,1)", i, j));

  Report& rep = out.report;
  rep.title = "super S-matrix " + m.name();
  {
    std::string w;
    const auto s1 = g.labels_in(1);
    for (std::size_t q : g.q_types)
      for (std::size_t y : s1)
        if (w.empty() && !m.S(q, y).is_zero()) w = "(" + m.label(q) + "," + m.label(y) + ")";
    rep.add("q-type rows vanish on sector 1", w.empty(), w);
  }
  rep.add("S(sigma,sigma) unitary", detail::is_unitary(out.sigma_sigma));
  rep.add("S(sigma,1) unitary", detail::is_unitary(out.sigma_one));
  rep.add("S(1,sigma) unitary", detail::is_unitary(out.one_sigma));
  rep.add("S(1,1) unitary", detail::is_unitary(out.one_one));

  // Quantum dimensions recovered from the super blocks must match the base.
  std::size_t uo = 0;
  for (std::size_t i = 0; i < no; ++i)
    if (g.sector0_orbits[i].first == m.unit()) uo = i;
  if (no > 0) {
    const Scalar svv = out.sigma_sigma(uo, uo);
    std::string w;
    Scalar glob_v(0);
    for (std::size_t i = 0; i < no; ++i) {
      const Scalar qd = out.sigma_sigma(i, uo) / svv;
      glob_v += qd * qd;
      for (const auto& mem : orbits[i])
        if (!(g.dims[mem.label] == qd)) w = m.label(mem.label);
    }
    for (std::size_t j = 0; j < nt; ++j) {
      const bool q = twisted[j].size() == 1;
      // qdim over the superalgebra; the even part sees twice that for q-type.
      const Scalar qd_v = q ? out.one_sigma(j, uo) / (root2 * svv) : out.one_sigma(j, uo) / svv;
      const Scalar expect = q ? Scalar(2) * qd_v : qd_v;
      for (const auto& mem : twisted[j])
        if (!(g.dims[mem.label] == expect)) w = m.label(mem.label);
    }
    rep.add("quantum dimensions from super S", w.empty(), w);
    const Scalar glob0 = global_dim(m);
    rep.add("glob(V0) = 4 glob(V)", glob0 == Scalar(4) * glob_v,
            glob0.to_string() + " vs 4*" + glob_v.to_string());
  }
  return out;
}

}  // namespace mtc
