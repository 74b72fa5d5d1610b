#pragma once

// Command-line front end. run() is separate from main() so tests can drive
// it with in-memory streams.
//
// Exit codes: 0 success, 1 a check failed, 2 input or parse error.

#include <CLI11.hpp>
#include <gmp.h>

#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mtc/catalog.hpp"
#include "mtc/characters.hpp"
#include "mtc/extension.hpp"
#include "mtc/fermionic.hpp"
#include "mtc/free_fermion.hpp"
#include "mtc/io.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/superalgebra.hpp"

namespace mtc::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

namespace detail {

inline std::string show(const Scalar& x) {
  const auto z = x.to_complex();
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::abs(z.imag()) << "i";
  if (!x.is_exact()) return os.str();
  return x.to_string() + "  (" + os.str() + ")";
}

inline std::string show(const Complex& z) { return show(Scalar::numeric(z)); }

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::size_t resolve_fermion(const MtcFile& f, const std::string& flag) {
  if (!flag.empty()) return f.data.index_of(flag);
  if (f.fermion) return f.data.index_of(*f.fermion);
  throw InputError("no fermion given (use --fermion LABEL)");
}

inline int report_exit(std::ostream& out, const Report& r) {
  out << r;
  return r.passed() ? kOk : kCheckFailed;
}

}  // namespace detail

struct Options {
  bool verbose = false;
  std::string file;
  std::string fermion;
  std::string of;
  long degree = 1;
  long l = 1;
  std::string emit_path;
  std::string tau = "i";
  long terms = 400;
  bool check_s = false;
  double tol = 1e-8;
  std::string op;
  std::string a, b, u, v;
  std::string write_dir;
};

inline int cmd_check(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const Report r = validate(f.data);
  out << r;
  bool ok = r.passed();
  for (const auto& w : quantum_dim_warnings(f.data)) out << "warning: " << w << "\n";
  if (f.grading && r.passed()) {
    const std::size_t fer = detail::resolve_fermion(f, o.fermion);
    const GradedData g = sector_grading(f.data, fer);
    std::string w;
    for (std::size_t a = 0; a < f.data.rank(); ++a) {
      const auto it = f.grading->find(f.data.label(a));
      if (it == f.grading->end() || it->second != g.sector[a]) w = f.data.label(a);
    }
    out << (w.empty() ? "  PASS  " : "  FAIL  ") << "stored grading matches fermion "
        << f.data.label(fer) << (w.empty() ? "" : "  [" + w + "]") << "\n";
    ok = ok && w.empty();
  }
  return ok ? kOk : kCheckFailed;
}

inline int cmd_fusion(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const ModularData& m = f.data;
  const FusionTensor n = fusion_of(m);
  out << "fusion rules of " << m.name() << (m.fusion() ? " (stored)" : " (Verlinde)") << "\n";
  for (std::size_t a = 0; a < m.rank(); ++a)
    for (std::size_t b = a; b < m.rank(); ++b) {
      std::string rhs;
      for (std::size_t c = 0; c < m.rank(); ++c) {
        const long long k = n(a, b, c);
        if (k == 0) continue;
        if (!rhs.empty()) rhs += " + ";
        if (k != 1) rhs += std::to_string(k) + " ";
        rhs += m.label(c);
      }
      out << m.label(a) << " x " << m.label(b) << " = " << (rhs.empty() ? "0" : rhs) << "\n";
    }
  return kOk;
}

inline int cmd_fermions(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const auto found = find_fermions(f.data);
  out << "fermions of " << f.data.name() << ":";
  for (std::size_t x : found) out << " " << f.data.label(x);
  out << (found.empty() ? " none" : "") << "\n";
  return kOk;
}

inline int cmd_centralizer(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  std::vector<std::size_t> of;
  for (const auto& name : detail::split(o.of, ',')) of.push_back(f.data.index_of(name));
  const auto c = centralizer(f.data, of);
  out << "centralizer of {" << o.of << "}:";
  for (std::size_t x : c) out << " " << f.data.label(x);
  out << "\n";
  return kOk;
}

inline int cmd_supermodular(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const std::size_t fer = detail::resolve_fermion(f, o.fermion);
  const auto all = mtc::detail::all_labels(f.data);
  const std::size_t of[] = {fer};
  const auto sector0 = centralizer_within(f.data, all, of);
  const Report sm = check_supermodular(f.data, sector0, fer);
  const Report me = check_minimal_extension(f.data, fer);
  out << sm << me;
  return sm.passed() && me.passed() ? kOk : kCheckFailed;
}

inline int cmd_gauss(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const Scalar tau = gauss_sum(f.data, o.degree);
  out << "tau_" << o.degree << "(" << f.data.name() << ") = " << detail::show(tau) << "\n";
  return kOk;
}

inline void print_graded(std::ostream& out, const GradedData& g) {
  const ModularData& m = g.base;
  out << m.name() << ": rank " << m.rank() << ", fermion " << m.label(g.fermion) << "\n";
  out << "label\tsector\tdim\ttwist\n";
  for (std::size_t a = 0; a < m.rank(); ++a)
    out << m.label(a) << "\t" << g.sector[a] << "\t" << g.dims[a].to_string() << "\t"
        << m.twist(a).to_string() << "\n";
  out << "global dimension = " << global_dim(m).to_string() << "\n";
  out << "tau_1 = " << detail::show(gauss_sum(m)) << "\n";
}

inline int cmd_ising(const Options& o, std::ostream& out) {
  const GradedData g = ising_like(o.l);
  print_graded(out, g);
  const Report r = validate(g.base);
  out << r;
  if (!o.emit_path.empty()) {
    save(o.emit_path, emit(g));
    out << "wrote " << o.emit_path << "\n";
  }
  return r.passed() ? kOk : kCheckFailed;
}

inline void print_extension(std::ostream& out, const ExtensionData& e) {
  out << e.name << "\n";
  out << "label\tsector\tkind\torbit\tdim\ttwist\n";
  for (const auto& x : e.objects)
    out << x.label << "\t" << x.sector << "\t" << kind_name(x.kind) << "\t" << x.orbit_id << "\t"
        << x.dim.to_string() << "\t" << x.twist.to_string() << "\n";
  out << "sector dimensions = " << e.dims[0].to_string() << ", " << e.dims[1].to_string() << "\n";
  out << "tau_1 = " << detail::show(e.gauss) << "\n";
}

inline int cmd_extend(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const GradedData g = sector_grading(f.data, detail::resolve_fermion(f, o.fermion));
  const ExtensionData e = extend(g, o.l);
  print_extension(out, e);
  if (!o.emit_path.empty()) {
    save(o.emit_path, emit(e));
    out << "wrote " << o.emit_path << "\n";
  }
  return kOk;
}

inline int cmd_sixteen(const Options& o, std::ostream& out) {
  const MtcFile f = load_input(o.file);
  const GradedData g = sector_grading(f.data, detail::resolve_fermion(f, o.fermion));
  const SixteenTable t = sixteen_table(g);
  out << t;
  return t.distinct && t.ladder ? kOk : kCheckFailed;
}

inline int cmd_chars(const Options& o, std::ostream& out) {
  const Complex tau = parse_tau(o.tau);
  const auto chi = character_vector(o.l, tau, o.terms);
  const auto labels = family_labels(o.l);
  out << "characters of F_" << o.l << " at tau = " << detail::show(tau) << ", " << o.terms
      << " terms\n";
  for (std::size_t a = 0; a < chi.size(); ++a)
    out << "chi_" << labels[a] << " = " << std::setprecision(12) << detail::show(chi[a]) << "\n";
  if (!o.check_s) return kOk;
  Report r = check_s_transform(o.l, tau, o.terms, o.tol);
  for (const auto& c : check_t_transform(o.l, tau, o.terms, o.tol).checks) r.checks.push_back(c);
  return detail::report_exit(out, r);
}

inline int cmd_superalg(const Options& o, std::ostream& out) {
  if (o.op == "tensor") {
    if (o.a.empty() || o.b.empty()) throw InputError("--op tensor needs --a and --b");
    const SuperAlgType x = parse_superalg(o.a), y = parse_superalg(o.b);
    const SuperAlgType t = tensor_type(x, y);
    out << x << " (x) " << y << " = " << t << "\n";
    out << "dim " << t.dim() << ", sdim " << t.sdim() << "\n";
    return kOk;
  }
  if (o.op == "profile") {
    if (o.u.empty() || o.v.empty()) throw InputError("--op profile needs --u and --v");
    const StabilityProfile x = parse_profile(o.u), y = parse_profile(o.v);
    out << x << " (x) " << y << " = " << twisted_product_profile(x, y) << "\n";
    return kOk;
  }
  throw InputError("--op must be 'tensor' or 'profile'");
}

inline int cmd_catalog(const Options& o, std::ostream& out) {
  if (!o.write_dir.empty()) {
    for (const auto& e : write_catalog(o.write_dir)) out << e.name << "\t" << e.path << "\t" << e.checksum << "\n";
    return kOk;
  }
  const auto dir = catalog_dir();
  bool ok = true;
  for (const auto& e : read_index(dir)) {
    bool good = verify(dir, e);
    if (good) good = validate(load((dir / e.path).string()).data).passed();
    ok = ok && good;
    out << (good ? "  PASS  " : "  FAIL  ") << e.name << "\t" << e.path << "\t" << e.checksum << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular data, fermionic gradings and the sixteen-fold way", "mtc"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--verbose", o.verbose, "Print environment details");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("FILE", o.file, "mtc-data file or catalog name (e.g. F_3)")->required();
    return c;
  };
  CLI::App* check = file_cmd("check", "Validate modular data");
  check->add_option("--fermion", o.fermion, "Fermion label for the stored grading");
  CLI::App* fusion = file_cmd("fusion", "Print fusion rules");
  CLI::App* fermions = file_cmd("fermions", "List fermions");
  CLI::App* central = file_cmd("centralizer", "Mueger centralizer of a set of labels");
  central->add_option("--of", o.of, "Comma-separated labels")->required();
  CLI::App* supermod = file_cmd("supermodular", "Check the fermion's centralizer is super-modular");
  supermod->add_option("--fermion", o.fermion, "Fermion label");
  CLI::App* gauss = file_cmd("gauss", "Gauss sum tau_n");
  gauss->add_option("--degree", o.degree, "n (nonzero)");
  CLI::App* ising = app.add_subcommand("ising", "Build F_l");
  ising->add_option("--l", o.l, "Rank l >= 1")->required();
  ising->add_option("--emit", o.emit_path, "Write an mtc-data file");
  CLI::App* ext = file_cmd("extend", "Tensor with the rank-l free fermion");
  ext->add_option("--fermion", o.fermion, "Fermion label");
  ext->add_option("--l", o.l, "l >= 0")->required();
  ext->add_option("--emit", o.emit_path, "Write an mtc-extension file");
  CLI::App* sixteen = file_cmd("sixteen", "Gauss sums of the sixteen extensions");
  sixteen->add_option("--fermion", o.fermion, "Fermion label");
  CLI::App* chars = app.add_subcommand("chars", "Free-fermion characters");
  chars->add_option("--l", o.l, "Rank l >= 1")->required();
  chars->add_option("--tau", o.tau, "Point in the upper half plane, e.g. 0.1+1.2i");
  chars->add_option("--terms", o.terms, "Number of product factors");
  chars->add_flag("--check-s", o.check_s, "Check the S and T transformations");
  chars->add_option("--tol", o.tol, "Tolerance for --check-s");
  CLI::App* superalg = app.add_subcommand("superalg", "Superalgebra and stability-profile products");
  superalg->add_option("--op", o.op, "tensor | profile")->required();
  superalg->add_option("--a", o.a, "Q:k or M:m,n");
  superalg->add_option("--b", o.b, "Q:k or M:m,n");
  superalg->add_option("--u", o.u, "PAIRS,STABLE");
  superalg->add_option("--v", o.v, "PAIRS,STABLE");
  CLI::App* catalog = app.add_subcommand("catalog", "Verify (or --write) the bundled catalog");
  catalog->add_option("--write", o.write_dir, "Regenerate the catalog into DIR");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (o.verbose) {
    out << "catalog: " << catalog_dir().string() << "\n";
    out << "gmp: " << gmp_version << "\n";
  }
  try {
    if (check->parsed()) return cmd_check(o, out);
    if (fusion->parsed()) return cmd_fusion(o, out);
    if (fermions->parsed()) return cmd_fermions(o, out);
    if (central->parsed()) return cmd_centralizer(o, out);
    if (supermod->parsed()) return cmd_supermodular(o, out);
    if (gauss->parsed()) return cmd_gauss(o, out);
    if (ising->parsed()) return cmd_ising(o, out);
    if (ext->parsed()) return cmd_extend(o, out);
    if (sixteen->parsed()) return cmd_sixteen(o, out);
    if (chars->parsed()) return cmd_chars(o, out);
    if (superalg->parsed()) return cmd_superalg(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace mtc::cli
