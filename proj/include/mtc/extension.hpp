#pragma once

// Object-level data of the even part of V (x) V(l, Z+1/2): the untwisted
// sector is kept, the twisted sector is rebuilt from pairs of twisted
// objects of the two factors. Only dimensions and twists are produced; the
// twisted-sector S-matrix is out of scope.

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "mtc/errors.hpp"
#include "mtc/fermionic.hpp"
#include "mtc/free_fermion.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/scalar.hpp"
#include "mtc/superalgebra.hpp"

namespace mtc {

/// How an object sits relative to the fermion: in a sector-0 orbit {x, f x},
/// a fixed (q-type) sector-1 object, or one half of a sector-1 m-type pair.
enum class OrbitKind { Sector0, Q, MPair };

inline const char* kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::Sector0: return "orbit";
    case OrbitKind::Q: return "q";
    case OrbitKind::MPair: return "m";
  }
  return "?";
}

struct ExtensionObject {
  std::string label;
  int sector = 0;
  Scalar dim;
  Scalar twist;
  OrbitKind kind = OrbitKind::Sector0;
  std::size_t orbit_id = 0;  // numbered separately within each kind
};

struct ExtensionSource {
  std::string base;
  long l = 0;
};

struct ExtensionData {
  std::string name;
  std::vector<ExtensionObject> objects;
  Scalar gauss;                  // sum over sector 1 of d^2 theta
  std::array<Scalar, 2> dims;    // sum of d^2 per sector
  ExtensionSource source;

  std::size_t count(OrbitKind k) const {
    std::size_t n = 0;
    for (const auto& o : objects)
      if (o.kind == k) ++n;
    return k == OrbitKind::Q ? n : n / 2;
  }
};

namespace detail {

inline void finish_totals(ExtensionData& e) {
  e.dims = {Scalar(0), Scalar(0)};
  e.gauss = Scalar(0);
  for (const auto& o : e.objects) {
    const Scalar d2 = o.dim * o.dim;
    e.dims[o.sector] += d2;
    if (o.sector == 1) e.gauss += d2 * o.twist;
  }
}

// Sector-1 orbits: one member for q-type, two for an m-type pair.
inline std::vector<std::vector<const ExtensionObject*>> twisted_orbits(const ExtensionData& e) {
  std::vector<std::vector<const ExtensionObject*>> q, m;
  for (const auto& o : e.objects) {
    if (o.kind == OrbitKind::Q) {
      q.push_back({&o});
    } else if (o.kind == OrbitKind::MPair) {
      if (m.size() <= o.orbit_id) m.resize(o.orbit_id + 1);
      m[o.orbit_id].push_back(&o);
    }
  }
  for (const auto& pair : m)
    if (pair.size() != 2) throw StructuralError("m-type pair without exactly two members");
  q.insert(q.end(), m.begin(), m.end());
  return q;
}

}  // namespace detail

/// G's own object table: every label with its sector, dimension, twist and kind.
inline ExtensionData table_of(const GradedData& g) {
  const ModularData& m = g.base;
  ExtensionData e;
  e.name = m.name();
  e.source = {m.name(), 0};
  auto add = [&](std::size_t x, OrbitKind k, std::size_t id) {
    e.objects.push_back({m.label(x), g.sector[x], g.dims[x], m.twist(x), k, id});
  };
  for (std::size_t i = 0; i < g.sector0_orbits.size(); ++i) {
    add(g.sector0_orbits[i].first, OrbitKind::Sector0, i);
    add(g.sector0_orbits[i].second, OrbitKind::Sector0, i);
  }
  for (std::size_t i = 0; i < g.q_types.size(); ++i) add(g.q_types[i], OrbitKind::Q, i);
  for (std::size_t i = 0; i < g.m_pairs.size(); ++i) {
    add(g.m_pairs[i].first, OrbitKind::MPair, i);
    add(g.m_pairs[i].second, OrbitKind::MPair, i);
  }
  detail::finish_totals(e);
  return e;
}

/// Tensors the table with F_l. Sector 0 is copied; each (twisted orbit of
/// the table, twisted orbit of F_l) pair contributes:
///   q x q: an m-type pair of objects with dimension d_x d_y / 2,
///   q x m, m x q: one q-type object with dimension d_x d_y,
///   m x m: an m-type pair (the two diagonal orbits) with dimension d_x d_y,
/// all with twist theta_x theta_y.
inline ExtensionData extend(const ExtensionData& base, long l) {
  if (l < 0) throw InputError("extend: l must be >= 0, got " + std::to_string(l));
  if (l == 0) return base;
  const ExtensionData fl = table_of(ising_like(l));
  const auto left = detail::twisted_orbits(base);
  const auto right = detail::twisted_orbits(fl);

  ExtensionData e;
  e.source = {base.source.base, base.source.l + l};
  e.name = e.source.base + "+V(" + std::to_string(e.source.l) + ")";
  for (const auto& o : base.objects)
    if (o.sector == 0) e.objects.push_back(o);

  std::size_t q_id = 0, m_id = 0;
  const Scalar half = Scalar(Rational(1, 2));
  for (const auto& x : left)
    for (const auto& y : right) {
      const auto& x0 = *x[0];
      const auto& y0 = *y[0];
      const Scalar twist = x0.twist * y0.twist;
      const Scalar d = x0.dim * y0.dim;
      const std::string name = x0.label + "*" + y0.label;
      if (x.size() == 1 && y.size() == 1) {
        e.objects.push_back({name + ":0", 1, d * half, twist, OrbitKind::MPair, m_id});
        e.objects.push_back({name + ":1", 1, d * half, twist, OrbitKind::MPair, m_id});
        ++m_id;
      } else if (x.size() == 1 || y.size() == 1) {
        const std::string pair = x.size() == 1 ? x0.label + "*{" + y0.label + "," + y[1]->label + "}"
                                               : "{" + x0.label + "," + x[1]->label + "}*" + y0.label;
        e.objects.push_back({pair, 1, d, twist, OrbitKind::Q, q_id++});
      } else {
        e.objects.push_back({name, 1, d, twist, OrbitKind::MPair, m_id});
        e.objects.push_back({x0.label + "*" + y[1]->label, 1, d, twist, OrbitKind::MPair, m_id});
        ++m_id;
      }
    }
  detail::finish_totals(e);

  if (!(e.gauss == base.gauss * root_of_unity(l, 16)))
    throw StructuralError("extend: Gauss sum ladder identity fails for " + e.name);
  if (!(e.dims[0] == e.dims[1])) throw StructuralError("extend: sector dimensions differ for " + e.name);
  return e;
}

/// Requires G to be a minimal modular extension of its sector 0.
inline ExtensionData extend(const GradedData& g, long l) {
  if (l < 0) throw InputError("extend: l must be >= 0, got " + std::to_string(l));
  const Report pre = check_minimal_extension(g);
  if (!pre.passed()) {
    std::string failed;
    for (const auto& c : pre.checks)
      if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
    throw StructuralError("extend: " + g.base.name() + " is not a minimal modular extension (" +
                          failed + ")");
  }
  return extend(table_of(g), l);
}

/// Multiset equality of (dim, twist, sector, kind), exact.
inline bool same_objects(const ExtensionData& a, const ExtensionData& b) {
  if (a.objects.size() != b.objects.size()) return false;
  std::vector<bool> used(b.objects.size(), false);
  for (const auto& x : a.objects) {
    bool found = false;
    for (std::size_t j = 0; j < b.objects.size() && !found; ++j) {
      const auto& y = b.objects[j];
      if (!used[j] && x.sector == y.sector && x.kind == y.kind && x.dim == y.dim &&
          x.twist == y.twist)
        used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

struct SixteenRow {
  long l = 0;
  Scalar gauss;
  Scalar ratio;  // gauss / gauss at l = 0
  std::array<Scalar, 2> dims;
  std::size_t sector0_orbits = 0, q_types = 0, m_pairs = 0;
};

struct SixteenTable {
  std::string base;
  std::vector<SixteenRow> rows;
  bool distinct = false;  // the 16 Gauss sums are pairwise different
  bool ladder = false;    // ratio at row l is exactly e^{2 pi i l / 16}

  friend std::ostream& operator<<(std::ostream& os, const SixteenTable& t) {
    os << "sixteen extensions of " << t.base << "\n";
    os << "l\ttau_1\tratio\tdim0\tdim1\torbits0\tq\tm\n";
    for (const auto& r : t.rows)
      os << r.l << "\t" << r.gauss.to_string() << "\t" << r.ratio.to_string() << "\t"
         << r.dims[0].to_string() << "\t" << r.dims[1].to_string() << "\t" << r.sector0_orbits
         << "\t" << r.q_types << "\t" << r.m_pairs << "\n";
    os << "distinct: " << (t.distinct ? "yes" : "NO") << "\n";
    os << "ladder: " << (t.ladder ? "yes" : "NO") << "\n";
    return os;
  }
};

inline SixteenTable sixteen_table(const GradedData& g) {
  SixteenTable t;
  t.base = g.base.name();
  const ExtensionData e0 = extend(g, 0);
  const Scalar inv0 = e0.gauss.inverse();
  t.ladder = true;
  for (long l = 0; l < 16; ++l) {
    const ExtensionData e = extend(e0, l);
    SixteenRow r{l, e.gauss, e.gauss * inv0, e.dims, e.count(OrbitKind::Sector0),
                 e.count(OrbitKind::Q), e.count(OrbitKind::MPair)};
    if (!(r.ratio == root_of_unity(l, 16))) t.ladder = false;
    t.rows.push_back(std::move(r));
  }
  t.distinct = true;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i + 1; j < t.rows.size(); ++j)
      if (t.rows[i].gauss == t.rows[j].gauss) t.distinct = false;
  return t;
}

/// q-type objects count as unstable pairs, m-type pairs as stable modules.
inline StabilityProfile profile_of(const ExtensionData& e) {
  return {static_cast<long>(e.count(OrbitKind::Q)), static_cast<long>(e.count(OrbitKind::MPair))};
}

inline StabilityProfile profile_of(const GradedData& g) {
  return {static_cast<long>(g.q_types.size()), static_cast<long>(g.m_pairs.size())};
}

}  // namespace mtc
