#include "hombra/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hombra/antipode.hpp"
#include "hombra/convolution.hpp"
#include "hombra/errors.hpp"
#include "hombra/qmatrix.hpp"
#include "hombra/report.hpp"
#include "hombra/structure_file.hpp"

namespace hombra::cli {

namespace {

std::size_t power_of(const FiniteGroup& g, std::size_t a, long k) {
  if (k < 0) {
    a = g.inverse(a);
    k = -k;
  }
  std::size_t out = g.identity;
  for (long i = 0; i < k; ++i) out = g.mul(out, a);
  return out;
}

std::string kind_of(const StructureFile& s) {
  if (s.antipode && s.algebra && s.coalgebra) return "hopf";
  if (s.algebra && s.coalgebra) return "bialgebra";
  return s.algebra ? "algebra" : "coalgebra";
}

Report base_report(const StructureFile& s, const std::string& source, const std::string& kind) {
  Report r;
  r.source = source;
  r.kind = kind;
  r.dim = s.dim;
  r.basis = s.basis;
  return r;
}

void print(std::ostream& out, const Report& r, bool as_json) { out << (as_json ? render_json(r) : render_text(r)); }

void write_structure(const StructureFile& s, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << emit_structure(s);
  } else {
    save_structure(s, path);
  }
}

std::string failing_names(const AxiomReport& r) {
  std::string out;
  for (const auto& e : r.entries) {
    if (e.verdict == Verdict::Fail) out += (out.empty() ? "" : ", ") + e.name;
  }
  return out;
}

LinMap parse_matrix_text(const std::string& text, std::size_t n) {
  // reuse the structure-file reader through a throwaway document
  const std::string doc = R"({"dim":)" + std::to_string(n) + R"(,"antipode":)" + text + "}";
  try {
    return *parse_structure(doc).antipode;
  } catch (const ParseError& e) {
    throw ParseError(std::string("--phi: ") + e.what());
  }
}

int cmd_check(const std::string& file, std::string kind, unsigned k_max, bool as_json, std::ostream& out) {
  const StructureFile s = load_structure(file);
  if (kind.empty()) kind = kind_of(s);
  Report r = base_report(s, file, kind);
  bool ok = true;
  if (kind == "algebra") {
    if (!s.algebra) throw DimensionMismatch("structure has no algebra part");
    r.axioms = check_axioms(*s.algebra);
  } else if (kind == "coalgebra") {
    if (!s.coalgebra) throw DimensionMismatch("structure has no coalgebra part");
    r.axioms = check_axioms(*s.coalgebra);
  } else {
    const HomBialgebra b = s.bialgebra();
    r.axioms = check_axioms(b);
    r.flags = compute_flags(b);
    if (kind == "hopf") {
      const HomHopfCandidate h = s.hopf();
      r.strict = verify_strict_antipode(h);
      r.relative = verify_relative_antipode(h, k_max);
      ok = r.relative->all_pass();
    }
  }
  ok = ok && r.axioms.all_pass();
  print(out, r, as_json);
  return ok ? kExitOk : kExitFail;
}

int cmd_antipode_find(const std::string& file, unsigned k_max, const std::string& output, bool as_json,
                      std::ostream& out, std::ostream& err) {
  StructureFile s = load_structure(file);
  const HomBialgebra b = s.bialgebra();
  const AxiomReport axioms = check_axioms(b);
  if (!axioms.all_pass()) err << "warning: bialgebra axioms fail: " << failing_names(axioms) << "\n";
  const auto result = find_antipode(b, k_max);
  if (!result) {
    if (as_json) {
      out << nlohmann::json{{"found", false}, {"k_max", k_max}}.dump(2) << "\n";
    } else {
      err << "no antipode with k <= " << k_max << "\n";
    }
    return kExitNotFound;
  }
  s.antipode = result->inverse;
  s.antipode_exponent = result->exponent;
  const std::string summary = "antipode found at k = " + std::to_string(result->exponent) +
                              " (nullspace dimension " + std::to_string(result->nullspace_dim) + ")";
  if (as_json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < s.dim; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < s.dim; ++j) row.push_back(result->inverse(i, j).to_string());
      rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"found", true},
                          {"k", result->exponent},
                          {"nullspace_dim", result->nullspace_dim},
                          {"antipode", rows}}
               .dump(2)
        << "\n";
    if (!output.empty() && output != "-") save_structure(s, output);
  } else if (output.empty() || output == "-") {
    err << summary << "\n";
    out << emit_structure(s);
  } else {
    save_structure(s, output);
    out << summary << "\n";
  }
  return kExitOk;
}

int cmd_antipode_verify(const std::string& file, unsigned k_max, bool as_json, std::ostream& out) {
  const StructureFile s = load_structure(file);
  const HomHopfCandidate h = s.hopf();
  Report r = base_report(s, file, "hopf");
  r.flags = compute_flags(h.bialgebra);
  r.strict = verify_strict_antipode(h);
  r.relative = verify_relative_antipode(h, k_max);
  print(out, r, as_json);
  return r.relative->all_pass() ? kExitOk : kExitFail;
}

int cmd_props(const std::string& file, unsigned k_max, bool as_json, std::ostream& out) {
  const StructureFile s = load_structure(file);
  const HomHopfCandidate h = s.hopf();
  Report r = base_report(s, file, "hopf");
  r.propositions = run_proposition_suite(h, k_max);
  r.flags = r.propositions->flags;
  r.relative = verify_relative_antipode(h, k_max);
  print(out, r, as_json);
  const auto& v = r.propositions->verdicts;
  const bool all_found = std::all_of(v.begin(), v.end(), [](const auto& p) { return p.min_exponent.has_value(); });
  return all_found ? kExitOk : kExitFail;
}

}  // namespace

unsigned default_kmax() {
  const char* env = std::getenv("HOMBRA_KMAX");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw ParseError(std::string("HOMBRA_KMAX is not a non-negative integer: ") + env);
  return static_cast<unsigned>(v);
}

FiniteGroup parse_group(const std::string& text) {
  const auto x = text.find('x');
  if (x != std::string::npos) return direct_product(parse_group(text.substr(0, x)), parse_group(text.substr(x + 1)));
  if (text == "S3") return symmetric_group_3();
  if (text.size() >= 2 && text[0] == 'C') {
    char* end = nullptr;
    const long n = std::strtol(text.c_str() + 1, &end, 10);
    if (*end == '\0' && n > 0) return cyclic_group(static_cast<std::size_t>(n));
  }
  throw ParseError("unknown group \"" + text + "\" (expected Cn, S3 or a product GxH)");
}

std::vector<std::size_t> parse_twist(const FiniteGroup& g, const std::string& text) {
  std::vector<std::size_t> phi(g.order());
  long k = 1;
  if (text == "id") {
    k = 1;
  } else if (text == "inv") {
    k = -1;
  } else if (text.rfind("pow:", 0) == 0) {
    char* end = nullptr;
    k = std::strtol(text.c_str() + 4, &end, 10);
    if (*end != '\0' || text.size() == 4) throw ParseError("bad twist \"" + text + "\"");
  } else {
    throw ParseError("unknown twist \"" + text + "\" (expected id, inv or pow:k)");
  }
  for (std::size_t a = 0; a < g.order(); ++a) phi[a] = power_of(g, a, k);
  return phi;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for finite-dimensional Hom-algebraic structures", "hombra"};
  app.require_subcommand(1);

  unsigned k_max = 0;
  bool as_json = false;
  std::string file;
  std::string output;

  std::vector<CLI::Option*> kmax_opts;
  auto add_kmax = [&](CLI::App* sub) {
    kmax_opts.push_back(sub->add_option("--kmax", k_max, "largest twist exponent searched (default 8 or HOMBRA_KMAX)"));
  };

  std::string kind;
  auto* check = app.add_subcommand("check", "check the axioms of a structure file");
  check->add_option("file", file, "structure file")->required();
  check->add_option("--kind", kind, "algebra, coalgebra, bialgebra or hopf")
      ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra", "hopf"}));
  add_kmax(check);
  check->add_flag("--json", as_json, "machine-readable report");

  std::string mode;
  auto* antipode = app.add_subcommand("antipode", "find or verify an antipode");
  antipode->add_option("mode", mode, "find or verify")->required()->check(CLI::IsMember({"find", "verify"}));
  antipode->add_option("file", file, "structure file")->required();
  antipode->add_option("-o,--output", output, "where find writes the completed structure file");
  add_kmax(antipode);
  antipode->add_flag("--json", as_json, "machine-readable output");

  auto* props = app.add_subcommand("props", "run the proposition suite on a Hom-Hopf candidate");
  props->add_option("file", file, "structure file")->required();
  add_kmax(props);
  props->add_flag("--json", as_json, "machine-readable report");

  auto* construct = app.add_subcommand("construct", "build a structure file");
  construct->require_subcommand(1);
  construct->add_option("-o,--output", output, "output path (default stdout)");

  std::string group_spec = "C2";
  std::string twist_spec = "id";
  std::string phi_text;
  long power = 1;
  auto* twist = construct->add_subcommand("twist", "Yau twist of a classical bialgebra");
  twist->add_option("file", file, "classical structure file (default: the group algebra of --group)");
  twist->add_option("--phi", phi_text, "bialgebra endomorphism as a JSON matrix of coefficient strings");
  twist->add_option("--group", group_spec, "group when no file is given");
  twist->add_option("--power", power, "twist the group algebra by g -> g^power");
  twist->add_option("-o,--output", output, "output path (default stdout)");

  std::vector<std::string> factors;
  auto* tensor = construct->add_subcommand("tensor", "tensor product of two Hom-Hopf candidates");
  tensor->add_option("files", factors, "two structure files")->required()->expected(2);
  tensor->add_option("-o,--output", output, "output path (default stdout)");

  bool alpha_comul = false;
  auto* group_algebra_cmd = construct->add_subcommand("group-algebra", "Hom-group algebra of a twisted group");
  group_algebra_cmd->add_option("--group", group_spec, "Cn, S3 or a product GxH")->required();
  group_algebra_cmd->add_option("--twist", twist_spec, "id, inv or pow:k");
  group_algebra_cmd->add_flag("--alpha-comul", alpha_comul, "use Delta(g) = alpha(g) (x) alpha(g), beta = alpha");
  group_algebra_cmd->add_option("-o,--output", output, "output path (default stdout)");

  std::string q_text = "2";
  std::string lambda_text = "3";
  unsigned degree = 2;
  auto* qmatrix = construct->add_subcommand("qmatrix", "degree-truncated quantum matrices");
  qmatrix->add_option("--q", q_text, "rational q (default 2)");
  qmatrix->add_option("--lambda", lambda_text, "rational lambda (default 3)");
  qmatrix->add_option("--degree", degree, "degree cut D >= 2 (default 2)");
  qmatrix->add_option("-o,--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    const bool kmax_given =
        std::any_of(kmax_opts.begin(), kmax_opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
    if (!kmax_given) k_max = default_kmax();

    if (*check) return cmd_check(file, kind, k_max, as_json, out);
    if (*antipode) {
      return mode == "find" ? cmd_antipode_find(file, k_max, output, as_json, out, err)
                            : cmd_antipode_verify(file, k_max, as_json, out);
    }
    if (*props) return cmd_props(file, k_max, as_json, out);

    if (*twist) {
      HomHopfCandidate base;
      std::vector<std::string> names;
      if (!file.empty()) {
        const StructureFile s = load_structure(file);
        base = {s.bialgebra(), s.antipode ? *s.antipode : LinMap::identity(s.dim)};
        names = s.basis;
        const LinMap phi = phi_text.empty() ? LinMap::identity(s.dim) : parse_matrix_text(phi_text, s.dim);
        StructureFile result = StructureFile::of(yau_twist(base.bialgebra, phi), names);
        if (s.antipode) result.antipode = s.antipode;
        write_structure(result, output, out);
        return kExitOk;
      }
      const FiniteGroup g = parse_group(group_spec);
      base = group_algebra(g);
      const LinMap phi = phi_text.empty() ? element_map(g.order(), parse_twist(g, "pow:" + std::to_string(power)))
                                          : parse_matrix_text(phi_text, g.order());
      write_structure(StructureFile::of(yau_twist(base, phi), g.names), output, out);
      return kExitOk;
    }
    if (*tensor) {
      const StructureFile a = load_structure(factors[0]);
      const StructureFile b = load_structure(factors[1]);
      std::vector<std::string> names;
      for (const auto& x : a.basis) {
        for (const auto& y : b.basis) names.push_back(x + "⊗" + y);
      }
      write_structure(StructureFile::of(tensor_hopf(a.hopf(), b.hopf()), names), output, out);
      return kExitOk;
    }
    if (*group_algebra_cmd) {
      const FiniteGroup g = parse_group(group_spec);
      const HomGroup hg = twist_group(g, parse_twist(g, twist_spec));
      write_structure(StructureFile::of(hom_group_algebra(hg, alpha_comul), g.names), output, out);
      return kExitOk;
    }
    if (*qmatrix) {
      const QParams p{Scalar::parse(q_text), Scalar::parse(lambda_text)};
      std::vector<std::string> names;
      for (const auto& m : qmatrix_basis(degree)) names.push_back(m.to_string());
      StructureFile s = StructureFile::of(to_hom_bialgebra(p, degree), names);
      s.params = {{"q", p.q}, {"lambda", p.lambda}, {"degree", Scalar(static_cast<long>(degree))}};
      write_structure(s, output, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace hombra::cli
