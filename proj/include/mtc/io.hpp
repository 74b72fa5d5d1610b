#pragma once

// The "mtc-data/1" text format: UTF-8 JSON holding labels, unit, S, twists,
// and optionally fusion, a fermion label and a sector grading. Exact scalars
// are {"c": [[p, q], ...]} with one [numerator, denominator] pair per power
// of zeta_N; float scalars are {"re": x, "im": y}.

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtc/errors.hpp"
#include "mtc/extension.hpp"
#include "mtc/fermionic.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/scalar.hpp"

namespace mtc {

inline constexpr const char* kFormatTag = "mtc-data/1";

/// Parsed file contents: the data plus the optional fermion and grading.
struct MtcFile {
  ModularData data;
  std::optional<std::string> fermion;
  std::optional<std::map<std::string, int>> grading;

  friend bool operator==(const MtcFile&, const MtcFile&) = default;
};

namespace detail {

using nlohmann::json;

inline json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline json scalar_json(const Scalar& x, int order) {
  if (!x.is_exact()) {
    const auto z = x.to_complex();
    return json{{"re", z.real()}, {"im", z.imag()}};
  }
  json coeffs = json::array();
  const Cyclotomic c = x.exact().embed(order);
  for (const auto& r : c.coefficients())
    coeffs.push_back(json::array({integer_json(r.get_num()), integer_json(r.get_den())}));
  return json{{"c", std::move(coeffs)}};
}

inline int common_order(const ModularData& m) {
  int n = 1;
  auto absorb = [&](const Scalar& x) {
    if (x.is_exact()) n = checked_lcm(n, x.order());
  };
  for (std::size_t a = 0; a < m.rank(); ++a) {
    absorb(m.twist(a));
    for (std::size_t b = 0; b < m.rank(); ++b) absorb(m.S(a, b));
  }
  return n;
}

class Reader {
 public:
  const json& at(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) fail("expected an object", path);
    const auto it = obj.find(key);
    if (it == obj.end()) fail("missing key '" + key + "'", path);
    return *it;
  }

  const json& array(const json& v, const std::string& path, std::optional<std::size_t> size) const {
    if (!v.is_array()) fail("expected an array", path);
    if (size && v.size() != *size)
      fail("expected " + std::to_string(*size) + " entries, got " + std::to_string(v.size()), path);
    return v;
  }

  long long integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail("expected an integer", path);
    return v.get<long long>();
  }

  Integer big_integer(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
      Integer z;
      if (z.set_str(v.get<std::string>(), 10) == 0) return z;
    }
    fail("expected an integer", path);
  }

  std::string string(const json& v, const std::string& path) const {
    if (!v.is_string()) fail("expected a string", path);
    return v.get<std::string>();
  }

  Scalar scalar(const json& v, int order, const std::string& path) const {
    if (!v.is_object()) fail("expected a scalar object", path);
    if (v.contains("c")) {
      const json& c = array(v["c"], path + "/c", static_cast<std::size_t>(order));
      std::vector<Rational> coeffs;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const std::string p = path + "/c/" + std::to_string(k);
        const json& pq = array(c[k], p, 2);
        const Integer num = big_integer(pq[0], p + "/0"), den = big_integer(pq[1], p + "/1");
        if (den == 0) fail("zero denominator", p + "/1");
        Rational r(num, den);
        r.canonicalize();
        coeffs.push_back(r);
      }
      return Scalar(Cyclotomic::from_coefficients(order, std::move(coeffs)));
    }
    if (v.contains("re") && v.contains("im")) {
      if (!v["re"].is_number() || !v["im"].is_number()) fail("re/im must be numbers", path);
      return Scalar::numeric({v["re"].get<double>(), v["im"].get<double>()});
    }
    fail("scalar needs \"c\" or \"re\"/\"im\"", path);
  }

  [[noreturn]] void fail(const std::string& what, const std::string& path) const {
    throw ParseError(what, path.empty() ? "/" : path);
  }
};

}  // namespace detail

inline std::string emit(const ModularData& m, const std::optional<std::string>& fermion = {},
                        const std::optional<std::map<std::string, int>>& grading = {}) {
  using detail::json;
  const int n = detail::common_order(m);
  json doc;
  doc["format"] = kFormatTag;
  doc["name"] = m.name();
  doc["cyclotomic_order"] = n;
  doc["labels"] = m.labels();
  doc["unit"] = m.unit();
  json s = json::array();
  for (std::size_t a = 0; a < m.rank(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.rank(); ++b) row.push_back(detail::scalar_json(m.S(a, b), n));
    s.push_back(std::move(row));
  }
  doc["S"] = std::move(s);
  json twists = json::array();
  for (const auto& t : m.twists()) twists.push_back(detail::scalar_json(t, n));
  doc["twists"] = std::move(twists);
  if (m.fusion()) {
    json f = json::array();
    for (std::size_t a = 0; a < m.rank(); ++a) {
      json fa = json::array();
      for (std::size_t b = 0; b < m.rank(); ++b) {
        json fb = json::array();
        for (std::size_t c = 0; c < m.rank(); ++c) fb.push_back((*m.fusion())(a, b, c));
        fa.push_back(std::move(fb));
      }
      f.push_back(std::move(fa));
    }
    doc["fusion"] = std::move(f);
  }
  if (fermion) doc["fermion"] = *fermion;
  if (grading) doc["grading"] = *grading;
  return doc.dump(1) + "\n";
}

inline std::string emit(const MtcFile& f) { return emit(f.data, f.fermion, f.grading); }

/// Data plus its fermion label and sector map.
inline std::string emit(const GradedData& g) {
  std::map<std::string, int> grading;
  for (std::size_t a = 0; a < g.base.rank(); ++a) grading[g.base.label(a)] = g.sector[a];
  return emit(g.base, g.base.label(g.fermion), grading);
}

/// Object table of an extension as an "mtc-extension/1" document.
inline std::string emit(const ExtensionData& e) {
  using detail::json;
  int n = 1;
  for (const auto& o : e.objects) {
    n = detail::checked_lcm(n, o.dim.order());
    n = detail::checked_lcm(n, o.twist.order());
  }
  n = detail::checked_lcm(n, e.gauss.order());
  json objects = json::array();
  for (const auto& o : e.objects)
    objects.push_back({{"label", o.label},
                       {"sector", o.sector},
                       {"kind", kind_name(o.kind)},
                       {"orbit", o.orbit_id},
                       {"dim", detail::scalar_json(o.dim, n)},
                       {"twist", detail::scalar_json(o.twist, n)}});
  json doc{{"format", "mtc-extension/1"},
           {"name", e.name},
           {"source", {{"base", e.source.base}, {"l", e.source.l}}},
           {"cyclotomic_order", n},
           {"objects", std::move(objects)},
           {"gauss", detail::scalar_json(e.gauss, n)},
           {"dims", json::array({detail::scalar_json(e.dims[0], n), detail::scalar_json(e.dims[1], n)})}};
  return doc.dump(1) + "\n";
}

inline MtcFile parse(const std::string& text) {
  using detail::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), "byte " + std::to_string(e.byte));
  }
  detail::Reader rd;
  const std::string format = rd.string(rd.at(root, "format", ""), "/format");
  if (format != kFormatTag) rd.fail("unsupported format '" + format + "'", "/format");
  const std::string name = rd.string(rd.at(root, "name", ""), "/name");
  const long long order = rd.integer(rd.at(root, "cyclotomic_order", ""), "/cyclotomic_order");
  if (order < 1 || order > kMaxCyclotomicOrder)
    rd.fail("cyclotomic_order out of range", "/cyclotomic_order");
  const int n = static_cast<int>(order);

  const json& lab = rd.array(rd.at(root, "labels", ""), "/labels", std::nullopt);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lab.size(); ++i)
    labels.push_back(rd.string(lab[i], "/labels/" + std::to_string(i)));
  const std::size_t r = labels.size();
  if (r == 0) rd.fail("no labels", "/labels");
  const long long unit = rd.integer(rd.at(root, "unit", ""), "/unit");
  if (unit < 0 || static_cast<std::size_t>(unit) >= r) rd.fail("unit index out of range", "/unit");

  const json& sj = rd.array(rd.at(root, "S", ""), "/S", r);
  Matrix<Scalar> s(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    const std::string pa = "/S/" + std::to_string(a);
    const json& row = rd.array(sj[a], pa, r);
    for (std::size_t b = 0; b < r; ++b) s(a, b) = rd.scalar(row[b], n, pa + "/" + std::to_string(b));
  }
  const json& tj = rd.array(rd.at(root, "twists", ""), "/twists", r);
  std::vector<Scalar> twists;
  for (std::size_t a = 0; a < r; ++a) twists.push_back(rd.scalar(tj[a], n, "/twists/" + std::to_string(a)));

  std::optional<FusionTensor> fusion;
  if (root.contains("fusion")) {
    FusionTensor f(r);
    const json& fj = rd.array(root["fusion"], "/fusion", r);
    for (std::size_t a = 0; a < r; ++a) {
      const std::string pa = "/fusion/" + std::to_string(a);
      const json& fa = rd.array(fj[a], pa, r);
      for (std::size_t b = 0; b < r; ++b) {
        const std::string pb = pa + "/" + std::to_string(b);
        const json& fb = rd.array(fa[b], pb, r);
        for (std::size_t c = 0; c < r; ++c) {
          const long long v = rd.integer(fb[c], pb + "/" + std::to_string(c));
          if (v < 0) rd.fail("negative fusion multiplicity", pb + "/" + std::to_string(c));
          f.at(a, b, c) = v;
        }
      }
    }
    fusion = std::move(f);
  }

  MtcFile out{ModularData(name, labels, static_cast<std::size_t>(unit), std::move(s),
                          std::move(twists), std::move(fusion)),
              std::nullopt, std::nullopt};
  if (root.contains("fermion")) {
    out.fermion = rd.string(root["fermion"], "/fermion");
    out.data.index_of(*out.fermion);
  }
  if (root.contains("grading")) {
    const json& g = root["grading"];
    if (!g.is_object()) rd.fail("expected an object", "/grading");
    std::map<std::string, int> grading;
    for (const auto& [key, value] : g.items()) {
      const long long v = rd.integer(value, "/grading/" + key);
      if (v != 0 && v != 1) rd.fail("sector must be 0 or 1", "/grading/" + key);
      out.data.index_of(key);
      grading[key] = static_cast<int>(v);
    }
    out.grading = std::move(grading);
  }
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MtcFile load(const std::string& path) {
  try {
    return parse(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(e.message, path + ":" + e.location);
  }
}

inline void save(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace mtc
