#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sgspec/closed_form.hpp"
#include "sgspec/graph_family.hpp"
#include "sgspec/simd/kernels.hpp"
#include "sgspec/verify.hpp"

namespace sgspec::cli {

namespace {

using json = nlohmann::ordered_json;

struct FamilyOpts {
  int h = 0;
  int p = 0;
  int k = 0;
  std::string format = "human";
  double tol = verify::kDefaultTol;
  std::string kernel = "auto";
};

void add_family_flags(CLI::App* cmd, FamilyOpts& o) {
  cmd->add_option("--h", o.h, "clique order h")->required();
  cmd->add_option("--p", o.p, "private vertices per clique p")->required();
  cmd->add_option("--k", o.k, "number of cliques k")->required();
}

void add_kernel_flag(CLI::App* cmd, std::string& kernel) {
  cmd->add_option("--kernel", kernel, "eigensolver kernel: auto, scalar, avx2, neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
}

void apply_kernel(const std::string& kernel) {
  if (kernel == "auto") {
    simd::reset_active_isa();
  } else {
    simd::set_active_isa(simd::parse_isa(kernel));
  }
}

json json_int(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json json_real(double v) { return json(std::strtod(format_real(v).c_str(), nullptr)); }

json json_coeffs(const UniPoly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(json_int(c));
  return arr;
}

json json_cubic(const CubicCoeffs& c) {
  json arr = json::array();
  for (const Int& v : c) arr.push_back(json_int(v));
  return arr;
}

std::string cubic_text(const CubicCoeffs& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
  return s + "]";
}

std::string coeff_text(const UniPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + p.coeffs()[i].get_str();
  return s + "]";
}

json params_json(const family::FamilyParams& fp) {
  return json{{"h", fp.h()}, {"p", fp.p()}, {"k", fp.k()}, {"n", fp.n()}};
}

std::string params_text(const family::FamilyParams& fp) {
  return "h=" + std::to_string(fp.h()) + " p=" + std::to_string(fp.p()) + " k=" + std::to_string(fp.k()) +
         " (n=" + std::to_string(fp.n()) + ")";
}

std::string value_text(const SpectrumEntry& e) {
  if (const auto* r = std::get_if<RatScalar>(&e.value)) return r->to_string();
  return format_real(e.numeric());
}

json entry_json(const SpectrumEntry& e) {
  json j;
  if (const auto* r = std::get_if<RatScalar>(&e.value)) {
    j["value"] = r->is_integer() ? json_int(r->numerator()) : json_real(r->to_double());
    j["multiplicity"] = e.multiplicity;
    j["exact"] = true;
    if (!r->is_integer()) j["rational"] = r->to_string();
  } else {
    const auto& root = std::get<CubicRoot>(e.value);
    j["value"] = json_real(root.approx);
    j["multiplicity"] = e.multiplicity;
    j["exact"] = false;
    j["cubic_root_index"] = root.index;
  }
  return j;
}

int cmd_spectrum(const FamilyOpts& o, std::ostream& out) {
  const auto fp = family::make_params(o.h, o.p, o.k);
  const auto f = closed::charpoly_closed(fp);
  const Spectrum spec = closed::spectrum_closed(fp, o.tol);
  if (o.format == "json") {
    json j = params_json(fp);
    json eig = json::array();
    for (const auto& e : spec.entries()) eig.push_back(entry_json(e));
    j["eigenvalues"] = std::move(eig);
    j["cubic"] = json_cubic(f.cubic);
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "value,multiplicity,exact\n";
    for (const auto& e : spec.entries())
      out << value_text(e) << ',' << e.multiplicity << ',' << (e.is_exact() ? "true" : "false") << '\n';
  } else {
    out << "spectrum of S(G), " << params_text(fp) << '\n';
    for (const auto& e : spec.entries()) {
      out << "  " << value_text(e) << "  (x" << e.multiplicity << ")";
      if (!e.is_exact()) out << "  root " << std::get<CubicRoot>(e.value).index << " of s";
      out << '\n';
    }
    out << "cubic s coefficients (ascending) = " << cubic_text(f.cubic) << '\n';
  }
  return kExitOk;
}

int cmd_charpoly(const FamilyOpts& o, bool expanded, std::ostream& out) {
  const auto fp = family::make_params(o.h, o.p, o.k);
  const auto f = closed::charpoly_closed(fp);
  const UniPoly full = f.expand();
  if (o.format == "json") {
    json j = params_json(fp);
    j["convention"] = "det(S - lambda I)";
    j["degree"] = full.degree();
    json factors = json::array();
    factors.push_back({{"root", json_int(f.root1)}, {"exponent", f.e1}});
    factors.push_back({{"root", json_int(f.root2)}, {"exponent", f.e2}});
    j["linear_factors"] = std::move(factors);
    j["cubic"] = json_cubic(f.cubic);
    if (expanded) j["coefficients"] = json_coeffs(full);
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    if (expanded) {
      out << "degree,coefficient\n";
      for (int d = 0; d <= full.degree(); ++d) out << d << ',' << full.coeff(d).get_str() << '\n';
    } else {
      out << "factor,root,exponent\n";
      out << "linear," << f.root1.get_str() << ',' << f.e1 << '\n';
      out << "linear," << f.root2.get_str() << ',' << f.e2 << '\n';
      out << "cubic," << cubic_text(f.cubic) << ",1\n";
    }
  } else if (expanded) {
    out << coeff_text(full) << '\n';
    out << "degree " << full.degree() << '\n';
  } else {
    out << f.to_string() << '\n';
    out << "degree " << f.degree() << '\n';
  }
  return kExitOk;
}

json report_json(const verify::VerificationReport& r) {
  json j = params_json(r.params);
  j["charpoly_exact_match"] = r.charpoly_exact_match;
  json diffs = json::array();
  for (const auto& d : r.coefficient_diffs)
    diffs.push_back({{"degree", d.degree}, {"closed_form", json_int(d.closed_form)}, {"oracle", json_int(d.oracle)}});
  j["coefficient_diffs"] = std::move(diffs);
  j["spectrum_max_deviation"] = json_real(r.spectrum_max_deviation);
  json inv = json::object();
  for (const auto& c : r.invariants) inv[c.name] = c.passed;
  j["invariants"] = std::move(inv);
  const auto& a = r.forced;
  j["forced_eigenvalues"] = {
      {"factor_root", a.factor_root},
      {"factor_exponent", a.factor_exponent},
      {"observed_factor_root_multiplicity", a.observed_factor_root},
      {"stated_label", a.stated_label},
      {"observed_stated_label_multiplicity", a.observed_stated_label},
      {"label_sign_inconsistent", a.label_sign_inconsistent},
      {"stated_multiplicity_violated", a.stated_multiplicity_violated},
      {"one_stated_bound", a.one_stated_bound},
      {"one_factor_exponent", a.one_factor_exponent},
      {"observed_one_multiplicity", a.observed_one},
  };
  j["closed_form"] = r.closed_form.to_string();
  j["elapsed_ms"] = json_real(r.elapsed.count());
  return j;
}

void report_human(const verify::VerificationReport& r, double tol, std::ostream& out) {
  out << "verification for " << params_text(r.params) << '\n';
  out << "  closed form F(λ) = " << r.closed_form.to_string() << '\n';
  out << "  charpoly exact match: " << (r.charpoly_exact_match ? "yes" : "NO") << '\n';
  if (!r.coefficient_diffs.empty()) {
    out << "  degree  closed_form  oracle\n";
    for (const auto& d : r.coefficient_diffs)
      out << "  " << d.degree << "  " << d.closed_form.get_str() << "  " << d.oracle.get_str() << '\n';
  }
  out << "  spectrum max deviation: " << format_real(r.spectrum_max_deviation) << " (tol " << format_real(tol)
      << ")\n";
  for (const auto& c : r.invariants) out << "  invariant " << c.name << ": " << (c.passed ? "ok" : "FAILED") << '\n';
  const auto& a = r.forced;
  out << "  eigenvalue 1-2p = " << a.factor_root << ": factor exponent " << a.factor_exponent
      << ", observed multiplicity " << a.observed_factor_root << '\n';
  out << "  stated label 2p-1 = " << a.stated_label << ": observed multiplicity " << a.observed_stated_label
      << " (stated at least " << a.factor_exponent << ")";
  if (a.label_sign_inconsistent) {
    out << "\n  FLAG: label 2p-1 is inconsistent with the factor (1-2p-λ) of F, which vanishes at 1-2p = "
        << a.factor_root;
    if (a.stated_multiplicity_violated) out << "; the stated multiplicity for 2p-1 is not attained";
  }
  out << '\n';
  out << "  eigenvalue 1: stated lower bound " << a.one_stated_bound << ", factor exponent " << a.one_factor_exponent
      << ", observed multiplicity " << a.observed_one << '\n';
}

int cmd_verify(const FamilyOpts& o, std::ostream& out) {
  apply_kernel(o.kernel);
  const auto fp = family::make_params(o.h, o.p, o.k);
  const auto report = verify::verify_instance(fp, o.tol);
  if (o.format == "json") {
    out << report_json(report).dump() << '\n';
  } else if (o.format == "csv") {
    out << "h,p,k,n,exact_match,max_dev,elapsed_ms\n";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", report.elapsed.count());
    out << fp.h() << ',' << fp.p() << ',' << fp.k() << ',' << fp.n() << ','
        << (report.charpoly_exact_match ? "true" : "false") << ',' << format_real(report.spectrum_max_deviation)
        << ',' << ms << '\n';
  } else {
    report_human(report, o.tol, out);
  }
  return report.passed(o.tol) ? kExitOk : kExitMismatch;
}

struct SweepOpts {
  int h_max = 0;
  int k_max = 0;
  int n_cap = verify::kDefaultNCap;
  std::string out_path;
  std::string format = "csv";
  double tol = verify::kDefaultTol;
  unsigned threads = 0;
  std::string kernel = "auto";
};

int cmd_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
  if (o.h_max < 2 || o.k_max < 2) throw InvalidParams("--h-max and --k-max must be >= 2");
  apply_kernel(o.kernel);
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << o.out_path << "' for writing\n";
    return kExitIo;
  }
  const auto summary = verify::sweep(o.h_max, o.k_max, o.tol, o.n_cap, o.threads);

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& pt : summary.points) {
      if (pt.status == verify::SweepPoint::Status::skipped) continue;
      json row{{"h", pt.h}, {"p", pt.p}, {"k", pt.k}, {"n", pt.n}};
      if (pt.report) {
        row["exact_match"] = pt.report->charpoly_exact_match;
        row["max_dev"] = json_real(pt.report->spectrum_max_deviation);
        row["elapsed_ms"] = json_real(pt.report->elapsed.count());
      } else {
        row["exact_match"] = false;
        row["error"] = pt.error;
      }
      arr.push_back(std::move(row));
    }
    file << arr.dump(2) << '\n';
  } else {
    file << "h,p,k,n,exact_match,max_dev,elapsed_ms\n";
    for (const auto& pt : summary.points) {
      if (pt.status == verify::SweepPoint::Status::skipped) continue;
      file << pt.h << ',' << pt.p << ',' << pt.k << ',' << pt.n << ',';
      if (pt.report) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", pt.report->elapsed.count());
        file << (pt.report->charpoly_exact_match ? "true" : "false") << ','
             << format_real(pt.report->spectrum_max_deviation) << ',' << ms << '\n';
      } else {
        file << "false,,\n";
      }
    }
  }
  file.flush();
  if (!file) {
    err << "error: failed writing '" << o.out_path << "'\n";
    return kExitIo;
  }

  for (const auto& pt : summary.points) {
    if (pt.status == verify::SweepPoint::Status::skipped) {
      err << "skipped h=" << pt.h << " p=" << pt.p << " k=" << pt.k << " (n=" << pt.n << " > " << o.n_cap << ")\n";
    }
  }
  if (const auto* bad = summary.first_failure()) {
    err << "first failure: h=" << bad->h << " p=" << bad->p << " k=" << bad->k << '\n';
    if (bad->report) {
      for (const auto& d : bad->report->coefficient_diffs)
        err << "  degree " << d.degree << ": closed form " << d.closed_form.get_str() << ", oracle "
            << d.oracle.get_str() << '\n';
    } else {
      err << "  " << bad->error << '\n';
    }
  }
  out << summary.summary_line() << '\n';
  return summary.failed == 0 ? kExitOk : kExitMismatch;
}

int cmd_export(const FamilyOpts& o, std::ostream& out) {
  const auto fp = family::make_params(o.h, o.p, o.k);
  const auto edges = family::signed_edges(fp);
  if (o.format == "json") {
    json neg = json::array();
    for (const auto& e : edges)
      if (e.sign < 0) neg.push_back(json::array({e.u, e.v}));
    out << json{{"n", fp.n()}, {"negative_edges", std::move(neg)}}.dump() << '\n';
    return kExitOk;
  }
  out << "graph signed_complete_h" << fp.h() << "_p" << fp.p() << "_k" << fp.k() << " {\n";
  for (int v = 0; v < fp.n(); ++v) {
    const auto lbl = family::label_of(fp, v);
    out << "  " << v << " [label=\"";
    if (lbl.kind == family::VertexLabel::Kind::private_vertex) {
      out << "v" << lbl.clique << "_" << lbl.slot;
    } else {
      out << "hub" << lbl.slot;
    }
    out << "\"];\n";
  }
  for (const auto& e : edges) {
    out << "  " << e.u << " -- " << e.v;
    if (e.sign < 0) {
      out << " [sign=\"-\", color=\"red\", style=\"dashed\"];\n";
    } else {
      out << " [sign=\"+\"];\n";
    }
  }
  out << "}\n";
  return kExitOk;
}

int default_n_cap() {
  if (const char* env = std::getenv("SGSPEC_N_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return verify::kDefaultNCap;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra of signed complete graphs whose negative edges form k cliques sharing a common clique",
               "sgspec"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  FamilyOpts spec_opts;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities from the closed form");
  add_family_flags(spectrum, spec_opts);
  spectrum->add_option("--format", spec_opts.format)->check(CLI::IsMember({"human", "json", "csv"}));
  spectrum->add_option("--tol", spec_opts.tol, "cubic root tolerance");

  FamilyOpts cp_opts;
  bool expanded = false;
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial det(S - λI)");
  add_family_flags(charpoly, cp_opts);
  charpoly->add_flag("--expanded", expanded, "print all coefficients, ascending degree");
  charpoly->add_option("--format", cp_opts.format)->check(CLI::IsMember({"human", "json", "csv"}));

  FamilyOpts ver_opts;
  auto* verify_cmd = app.add_subcommand("verify", "compare the closed forms with the exact and numeric oracles");
  add_family_flags(verify_cmd, ver_opts);
  verify_cmd->add_option("--format", ver_opts.format)->check(CLI::IsMember({"human", "json", "csv"}));
  verify_cmd->add_option("--tol", ver_opts.tol, "numeric tolerance");
  add_kernel_flag(verify_cmd, ver_opts.kernel);

  SweepOpts sw;
  sw.n_cap = default_n_cap();
  auto* sweep_cmd = app.add_subcommand("sweep", "verify every family member in a parameter grid");
  sweep_cmd->add_option("--h-max", sw.h_max)->required();
  sweep_cmd->add_option("--k-max", sw.k_max)->required();
  sweep_cmd->add_option("--n-cap", sw.n_cap, "skip points with n above this (env SGSPEC_N_CAP)");
  sweep_cmd->add_option("--out", sw.out_path)->required();
  sweep_cmd->add_option("--format", sw.format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--tol", sw.tol, "numeric tolerance");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads (0 = hardware)");
  add_kernel_flag(sweep_cmd, sw.kernel);

  FamilyOpts ex_opts;
  ex_opts.format = "dot";
  auto* export_cmd = app.add_subcommand("export", "serialize the signed complete graph");
  add_family_flags(export_cmd, ex_opts);
  export_cmd->add_option("--format", ex_opts.format)->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("sgspec");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*spectrum) return cmd_spectrum(spec_opts, out);
    if (*charpoly) return cmd_charpoly(cp_opts, expanded, out);
    if (*verify_cmd) return cmd_verify(ver_opts, out);
    if (*sweep_cmd) return cmd_sweep(sw, out, err);
    if (*export_cmd) return cmd_export(ex_opts, out);
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DegenerateFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const UnsupportedShape& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitInvalidInput;
}

}  // namespace sgspec::cli
