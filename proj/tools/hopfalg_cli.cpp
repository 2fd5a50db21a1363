// hopfalg: load algebra and action definitions, build product algebras, and
// run the verification suite with text or JSON reports.
//
// Exit status: 0 when every executed clause passed or was skipped, 1 on a
// failed clause or an input that fails its axioms, 2 on malformed input or
// usage errors.

#include "hopfalg/hopfalg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace hopfalg;

namespace {

struct Options {
  std::string field;
  std::string convention = "auto";
  bool json = false;
  bool skip_validate = false;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kClaims = {"prop21", "prop22", "prop23", "cor24", "thm25",
                                          "remark26", "ex27", "prop31", "thm32"};

LoadOptions load_options(const Options& o, bool validate) {
  LoadOptions lo;
  if (!o.field.empty()) {
    try {
      lo.field = FieldSpec::from_name(o.field);
    } catch (const FieldError& e) {
      throw ParseError(std::string("--field: ") + e.what());
    }
  }
  lo.validate = validate && !o.skip_validate;
  return lo;
}

std::optional<BaseConvention> convention_of(const Options& o) {
  if (o.convention == "auto") return std::nullopt;
  try {
    return parse_convention(o.convention);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

const char* kind_name(const Definition& d) {
  switch (d.index()) {
    case 0: return "algebra";
    case 1: return "hopf";
    case 2: return "module-algebra";
    default: return "bimodule-algebra";
  }
}

const LeftModuleAlgebra& need_module(const Definition& d, const std::string& claim) {
  if (const auto* m = std::get_if<LeftModuleAlgebra>(&d)) return *m;
  throw UsageError(claim + " needs a module-algebra definition, got " + kind_name(d));
}

int emit(const std::vector<CheckReport>& reports, const Options& o) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.json) {
    Json out;
    out["passed"] = ok;
    out["clauses"] = report_json(reports, o.timing);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << report_text(r, o.timing);
    std::cout << (ok ? "RESULT PASS" : "RESULT FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

CheckReport run_claim(const std::string& claim, const Definition& d, const Options& o) {
  auto conv = convention_of(o);
  if (claim == "prop21") {
    if (const auto* b = std::get_if<BimoduleAlgebra>(&d)) return verify_nu_isomorphism(*b);
    return verify_nu_isomorphism(enveloping_bimodule_algebra(need_module(d, claim)));
  }
  if (claim == "ex27") {
    if (const auto* h = std::get_if<HopfAlgebra>(&d)) return cibils_rosso_bialgebroid(*h, conv).report;
    return cibils_rosso_bialgebroid(need_module(d, claim).hopf, conv).report;
  }
  const LeftModuleAlgebra& m = need_module(d, claim);
  if (claim == "prop22") return check_prop22_equality(m);
  if (claim == "prop23") return verify_cm_diagonal_isomorphism(m);
  if (claim == "cor24") return verify_diamond_odot_isomorphism(m);
  if (claim == "thm25") return verify_theorem_main(m, conv);
  if (claim == "remark26") return verify_bialgebroid_antipodes(m);
  if (claim == "prop31") return verify_universal_property(m);
  if (claim == "thm32") return verify_theorem_32(m, conv);
  throw UsageError("unknown claim '" + claim + "'");
}

int cmd_check(const std::string& kind, const std::string& file, const Options& o) {
  Definition d = load_definition(file, load_options(o, false));
  std::vector<CheckReport> reps;
  if (kind == "hopf") {
    const auto* h = std::get_if<HopfAlgebra>(&d);
    if (!h) throw UsageError(std::string("expected a hopf definition, got ") + kind_name(d));
    reps.push_back(check_hopf(*h));
    CheckReport inv;
    inv.claim = "involutivity";
    inv.run(is_involutive(*h) ? "involutive" : "not_involutive", [](Clause&) {});
    reps.push_back(std::move(inv));
  } else if (kind == "module-algebra") {
    if (const auto* m = std::get_if<LeftModuleAlgebra>(&d)) {
      reps.push_back(check_hopf(m->hopf));
      reps.push_back(check_algebra(m->alg));
      reps.push_back(check_left_module_algebra(*m));
    } else if (const auto* b = std::get_if<BimoduleAlgebra>(&d)) {
      reps.push_back(check_hopf(b->hopf));
      reps.push_back(check_algebra(b->alg));
      reps.push_back(check_bimodule_algebra(*b));
    } else {
      throw UsageError(std::string("expected a module-algebra definition, got ") + kind_name(d));
    }
  } else {
    throw UsageError("unknown check kind '" + kind + "'");
  }
  return emit(reps, o);
}

int cmd_build(const std::string& product, const std::string& file, const std::string& out, const Options& o) {
  Definition d = load_definition(file, load_options(o, true));
  auto bimodule = [&]() -> BimoduleAlgebra {
    if (const auto* b = std::get_if<BimoduleAlgebra>(&d)) return *b;
    return enveloping_bimodule_algebra(need_module(d, product));
  };
  ProductAlgebra p = [&] {
    if (product == "lr-smash") return lr_smash(bimodule());
    if (product == "diagonal") return diagonal_crossed(bimodule());
    if (product == "diamond") return kadison_diamond(need_module(d, product));
    if (product == "odot") return cm_odot(need_module(d, product));
    throw UsageError("unknown product '" + product + "'");
  }();
  Json j = to_json(p.underlying);
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << j.dump(1) << '\n';
  std::cerr << "wrote " << product_kind_name(p.kind) << " product of dimension " << p.underlying.dim << " to "
            << out << '\n';
  return 0;
}

int cmd_verify(const std::string& claim, const std::string& file, const Options& o) {
  Definition d;
  try {
    d = load_definition(file, load_options(o, true));
  } catch (const ValidationError& e) {
    std::cerr << "input fails validation: " << e.what() << '\n';
    emit({e.report}, o);
    return 1;
  }
  std::vector<CheckReport> reps;
  if (claim == "all") {
    bool module = std::holds_alternative<LeftModuleAlgebra>(d);
    for (const auto& c : kClaims) {
      if (!module && !(c == "ex27" && std::holds_alternative<HopfAlgebra>(d)) &&
          !(c == "prop21" && std::holds_alternative<BimoduleAlgebra>(d)))
        continue;
      reps.push_back(run_claim(c, d, o));
    }
    if (reps.empty()) throw UsageError(std::string("nothing to verify for a ") + kind_name(d) + " definition");
  } else {
    reps.push_back(run_claim(claim, d, o));
  }
  return emit(reps, o);
}

int cmd_catalog_list(const Options& o) {
  FieldSpec f = o.field.empty() ? FieldSpec::rationals() : FieldSpec::from_name(o.field);
  for (const auto& inst : all_instances(f))
    std::cout << inst.name << "\tdim A = " << inst.module.alg.dim << ", dim H = " << inst.module.hopf.dim() << "\t"
              << inst.description << '\n';
  return 0;
}

int cmd_catalog_export(const std::string& name, const std::string& out, bool hopf_only, const Options& o) {
  FieldSpec f = o.field.empty() ? FieldSpec::rationals() : FieldSpec::from_name(o.field);
  LeftModuleAlgebra m;
  try {
    m = instance_by_name(name, f);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json j = hopf_only ? to_json(m.hopf) : to_json(m);
  if (out.empty() || out == "-") {
    std::cout << j.dump(1) << '\n';
    return 0;
  }
  std::ofstream fo(out);
  if (!fo) throw UsageError("cannot write " + out);
  fo << j.dump(1) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Hopf algebras, their smash-type products, and bialgebroids"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "ground field: q or fp:<p> (overrides the file)");
    sub->add_flag("--json", o.json, "machine-readable report");
    sub->add_flag("--skip-validate", o.skip_validate, "do not check the input's axioms on load");
    sub->add_flag("--timing", o.timing, "include per-clause wall time");
  };

  std::string kind, file, product, out, claim, name;
  bool hopf_only = false;

  auto* check = app.add_subcommand("check", "run the axiom checker on a definition");
  check->add_option("kind", kind, "hopf | module-algebra")->required()->check(CLI::IsMember({"hopf", "module-algebra"}));
  check->add_option("file", file)->required();
  common(check);

  auto* build = app.add_subcommand("build", "write the structure constants of a product algebra");
  build->add_option("product", product, "lr-smash | diagonal | diamond | odot")
      ->required()
      ->check(CLI::IsMember({"lr-smash", "diagonal", "diamond", "odot"}));
  build->add_option("file", file)->required();
  build->add_option("-o,--output", out, "output file")->required();
  common(build);

  auto* verify = app.add_subcommand("verify", "verify a claim on a definition");
  std::vector<std::string> choices = kClaims;
  choices.push_back("all");
  verify->add_option("claim", claim, "prop21 | prop22 | prop23 | cor24 | thm25 | remark26 | ex27 | prop31 | thm32 | all")
      ->required()
      ->check(CLI::IsMember(choices));
  verify->add_option("file", file)->required();
  verify->add_option("--convention", o.convention, "T⊗_A T convention: auto | xt-sy | tx-sy | xt-ys | tx-ys")
      ->check(CLI::IsMember({"auto", "xt-sy", "tx-sy", "xt-ys", "tx-ys"}));
  common(verify);

  auto* cat = app.add_subcommand("catalog", "built-in instances");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list instances");
  list->add_option("--field", o.field, "ground field: q or fp:<p>");
  auto* exp = cat->add_subcommand("export", "write an instance as a definition file");
  exp->add_option("name", name)->required();
  exp->add_option("-o,--output", out, "output file (default stdout)");
  exp->add_flag("--hopf-only", hopf_only, "export only the acting Hopf algebra");
  exp->add_option("--field", o.field, "ground field: q or fp:<p>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(kind, file, o);
    if (*build) return cmd_build(product, file, out, o);
    if (*verify) return cmd_verify(claim, file, o);
    if (*list) return cmd_catalog_list(o);
    if (*exp) return cmd_catalog_export(name, out, hopf_only, o);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    emit({e.report}, o);
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const InvolutivityRequired& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
