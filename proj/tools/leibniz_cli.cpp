#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leibniz/catalog.hpp"
#include "leibniz/deformation.hpp"
#include "leibniz/lba.hpp"

namespace {

using namespace leibniz;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, machine };

struct Report {
  OutputFormat format = OutputFormat::text;

  void kv(const std::string& machine_key, const std::string& text_key,
          const std::string& value) const {
    if (format == OutputFormat::machine)
      std::cout << machine_key << "=" << value << "\n";
    else
      std::cout << text_key << " = " << value << "\n";
  }
  void kv(const std::string& machine_key, const std::string& text_key, Index value) const {
    kv(machine_key, text_key, std::to_string(value));
  }
  void text_line(const std::string& s) const {
    if (format == OutputFormat::text) std::cout << s << "\n";
  }
  void raw(const std::string& s) const { std::cout << s; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParamMap parse_params(const std::vector<std::string>& kvs) {
  ParamMap out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects k=v, got '" + kv + "'");
    try {
      out[kv.substr(0, eq)] = GaussianRational::parse(kv.substr(eq + 1));
    } catch (const ParseError& e) {
      throw UsageError("bad parameter value in '" + kv + "': " + e.what());
    }
  }
  return out;
}

Vec parse_coeffs(const std::string& text) {
  std::vector<Scalar> vals;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    try {
      vals.push_back(GaussianRational::parse(cur));
    } catch (const ParseError& e) {
      throw UsageError("bad coefficient '" + cur + "': " + e.what());
    }
  }
  Vec v = Vec::Constant(static_cast<Index>(vals.size()), Scalar(0));
  for (Index i = 0; i < v.size(); ++i) v[i] = vals[i];
  return v;
}

/// Input resolution: an existing file parses as an LBA document; otherwise
/// the name is looked up in the catalog.
struct ResolvedInput {
  std::optional<LbaDocument> doc;  // present for file inputs
  std::optional<CatalogItem> item;
};

ResolvedInput resolve_input(const std::string& input, const ParamMap& params) {
  ResolvedInput r;
  if (std::filesystem::exists(input)) {
    try {
      r.doc = lba_parse(read_file(input));
    } catch (const ParseError& e) {
      throw UsageError(std::string("parse error in ") + input + ": " + e.what());
    }
    return r;
  }
  if (catalog_find(input)) {
    r.item = catalog_build(input, params);
    return r;
  }
  throw UsageError("'" + input + "' is neither a file nor a catalog entry");
}

Algebra resolve_algebra(const ResolvedInput& r, const std::string& name) {
  if (r.item) {
    if (auto* a = std::get_if<Algebra>(&*r.item)) return *a;
    throw UsageError("catalog entry is not an algebra");
  }
  if (!name.empty()) {
    const Algebra* a = r.doc->find_algebra(name);
    if (!a) throw UsageError("no algebra named '" + name + "' in document");
    return *a;
  }
  const Algebra* a = r.doc->first_algebra();
  if (!a) throw UsageError("document contains no algebra block");
  return *a;
}

RightModule resolve_module(const ResolvedInput& r, const std::string& name) {
  if (r.item) {
    if (auto* m = std::get_if<RightModule>(&*r.item)) return *m;
    throw UsageError("catalog entry is not a module");
  }
  if (!name.empty()) {
    const RightModule* m = r.doc->find_module(name);
    if (!m) throw UsageError("no module named '" + name + "' in document");
    return *m;
  }
  const RightModule* m = r.doc->first_module();
  if (!m) throw UsageError("document contains no module block");
  return *m;
}

std::string defect_witness(const Algebra& a, const TripleDefect& d) {
  return describe_triple(a, d) + " -> " + format_vector(d.defect);
}

void print_defects(const Report& rep, const Algebra& a, const std::vector<TripleDefect>& defects,
                   std::size_t limit = 5) {
  rep.kv("defects", "defect count", static_cast<Index>(defects.size()));
  for (std::size_t t = 0; t < defects.size() && t < limit; ++t)
    rep.kv("witness", "witness", defect_witness(a, defects[t]));
}

/// Cochains for obstruction/deform: named document cochains, else all
/// document cochains over the algebra, else computed HL2 representatives.
std::vector<Cochain2> gather_cocycles(const ResolvedInput& r, const Algebra& a,
                                      const std::string& names_csv) {
  std::vector<Cochain2> out;
  if (!names_csv.empty()) {
    if (!r.doc) throw UsageError("--cocycles requires a document input");
    std::istringstream is(names_csv);
    std::string name;
    while (std::getline(is, name, ',')) {
      const Cochain2* f = r.doc->find_cochain(name);
      if (!f) throw UsageError("no cochain named '" + name + "' in document");
      out.push_back(*f);
    }
    return out;
  }
  if (r.doc) {
    for (const auto& s : r.doc->sections)
      if (auto* f = std::get_if<Cochain2>(&s))
        if (f->base == a.name) out.push_back(*f);
    if (!out.empty()) return out;
  }
  return hl2(a).hl2_reps;
}

// ---- subcommand bodies -----------------------------------------------------

int run_check(const ResolvedInput& r, const Report& rep) {
  bool all_ok = true;
  auto check_algebra = [&](const Algebra& a) {
    auto defects = leibniz_defects(a);
    rep.kv("algebra", "algebra", a.name);
    print_defects(rep, a, defects);
    if (!defects.empty()) all_ok = false;
  };
  if (r.item) {
    if (auto* a = std::get_if<Algebra>(&*r.item)) {
      check_algebra(*a);
    } else if (auto* m = std::get_if<RightModule>(&*r.item)) {
      auto defects = right_module_defects(m->base, *m);
      rep.kv("module", "module", m->name);
      rep.kv("defects", "defect count", static_cast<Index>(defects.size()));
      if (!defects.empty()) all_ok = false;
    } else {
      auto v = embedding_defects(std::get<MatrixEmbedding>(*r.item));
      rep.kv("defects", "defect count", static_cast<Index>(v.defects.size()));
      if (!v.ok()) all_ok = false;
    }
    return all_ok ? kExitOk : kExitFail;
  }
  for (const auto& s : r.doc->sections) {
    if (auto* a = std::get_if<Algebra>(&s)) {
      check_algebra(*a);
    } else if (auto* m = std::get_if<RightModule>(&s)) {
      rep.kv("module", "module", m->name);
      if (!is_lie(m->base).ok()) {
        rep.kv("base_is_lie", "base is Lie", "false");
        all_ok = false;
        continue;
      }
      auto defects = right_module_defects(m->base, *m);
      rep.kv("defects", "defect count", static_cast<Index>(defects.size()));
      for (std::size_t t = 0; t < defects.size() && t < 5; ++t)
        rep.kv("witness", "witness",
               "(" + m->basis[defects[t].p] + "," + m->base.basis[defects[t].j] + "," +
                   m->base.basis[defects[t].k] + ")");
      if (!defects.empty()) all_ok = false;
    } else if (auto* f = std::get_if<Cochain2>(&s)) {
      const Algebra* base = r.doc->find_algebra(f->base);
      rep.kv("cochain", "cochain", f->name);
      auto defects = cocycle_defects(*base, *f);
      rep.kv("defects", "defect count", static_cast<Index>(defects.size()));
      if (!defects.empty()) all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitFail;
}

int run_catalog_list(const Report& rep) {
  for (const auto& e : catalog_entries()) {
    if (rep.format == OutputFormat::machine) {
      std::ostringstream os;
      os << "entry=" << e.name << " kind=" << catalog_kind_name(e.kind) << " params=";
      for (std::size_t i = 0; i < e.params.size(); ++i)
        os << (i ? "," : "") << e.params[i].name << "=" << e.params[i].default_value.str();
      std::cout << os.str() << "\n";
    } else {
      std::ostringstream os;
      os << e.name << "  [" << catalog_kind_name(e.kind) << "]";
      if (!e.params.empty()) {
        os << " (";
        for (std::size_t i = 0; i < e.params.size(); ++i)
          os << (i ? ", " : "") << e.params[i].name << "=" << e.params[i].default_value.str();
        os << ")";
      }
      os << "  " << e.description;
      std::cout << os.str() << "\n";
    }
  }
  return kExitOk;
}

int run_catalog_emit(const std::string& name, const ParamMap& params, const Report& rep) {
  CatalogItem item = catalog_build(name, params);
  if (auto* a = std::get_if<Algebra>(&item)) {
    rep.raw(lba_format(*a));
  } else if (auto* m = std::get_if<RightModule>(&item)) {
    rep.raw(lba_format(*m));
  } else {
    auto& e = std::get<MatrixEmbedding>(item);
    rep.raw(lba_format(e.domain));
    for (Index i = 0; i < e.domain.dim(); ++i) {
      std::cout << "\n";
      rep.raw(lba_format(NamedMatrix{e.name + "." + e.domain.basis[i], e.images[i]}));
    }
  }
  return kExitOk;
}

int run_cohomology(const Algebra& a, const std::string& space, const Report& rep) {
  rep.kv("algebra", "algebra", a.name);
  if (space == "bl2") {
    auto bl2 = bl2_basis(a);
    rep.kv("dim_bl2", "dim BL2", bl2.dim());
    for (Index i = 0; i < bl2.dim(); ++i) {
      std::cout << "\n";
      rep.raw(lba_format(a, cochain_from_flat(a, "bl2_" + std::to_string(i + 1), bl2.basis_row(i))));
    }
    return kExitOk;
  }
  if (space == "zl2") {
    auto zl2 = zl2_basis(a);
    rep.kv("dim_zl2", "dim ZL2", zl2.dim());
    for (Index i = 0; i < zl2.dim(); ++i) {
      std::cout << "\n";
      rep.raw(lba_format(a, cochain_from_flat(a, "zl2_" + std::to_string(i + 1), zl2.basis_row(i))));
    }
    return kExitOk;
  }
  auto spaces = hl2(a);
  rep.kv("dim_bl2", "dim BL2", spaces.dim_bl2());
  rep.kv("dim_zl2", "dim ZL2", spaces.dim_zl2());
  rep.kv("dim_hl2", "dim HL2", spaces.dim_hl2());
  for (const auto& f : spaces.hl2_reps) {
    std::cout << "\n";
    rep.raw(lba_format(a, f));
  }
  return kExitOk;
}

int run_obstruction(const Algebra& a, const std::vector<Cochain2>& cocycles, const Report& rep) {
  auto report = obstruction_report(a, cocycles);
  std::ostringstream names;
  for (std::size_t i = 0; i < cocycles.size(); ++i) names << (i ? "," : "") << cocycles[i].name;
  rep.kv("algebra", "algebra", a.name);
  rep.kv("cocycles", "cocycles", names.str());
  std::string sig = support_signature(report);
  rep.kv("support", "quadratic support", sig.empty() ? "(empty)" : sig);
  for (const auto& [i, j, t] : report.sym_tensors) {
    Index nnz = t.nonzero_count();
    if (nnz > 0)
      rep.kv("pair_a" + std::to_string(i + 1) + "a" + std::to_string(j + 1),
             "pair a" + std::to_string(i + 1) + "*a" + std::to_string(j + 1) + " nonzero entries",
             nnz);
  }
  return report.quadratic_support.empty() ? kExitOk : kExitFail;
}

int run_deform(const Algebra& a, const std::vector<Cochain2>& cocycles, const Vec& coeffs,
               const Report& rep) {
  if (coeffs.size() != static_cast<Index>(cocycles.size()))
    throw UsageError("--coeffs count (" + std::to_string(coeffs.size()) + ") must match cocycle count (" +
                     std::to_string(cocycles.size()) + ")");
  auto result = deform(a, cocycles, coeffs);
  rep.kv("algebra", "algebra", a.name);
  rep.kv("leibniz", "deformed bracket satisfies the Leibniz identity",
         result.ok() ? "true" : "false");
  print_defects(rep, result.algebra, result.defects);
  if (rep.format == OutputFormat::text) {
    std::cout << "\n";
    rep.raw(lba_format(result.algebra));
  }
  return result.ok() ? kExitOk : kExitFail;
}

int run_quotient(const Algebra& a, const Report& rep) {
  auto ideal = squares_ideal(a);
  rep.kv("algebra", "algebra", a.name);
  rep.kv("dim_squares_ideal", "dim I", ideal.dim());
  Algebra q = quotient_algebra(a, ideal);
  std::cout << "\n";
  rep.raw(lba_format(q));
  return kExitOk;
}

int run_invariants(const Algebra& a, bool with_cohomology, const Report& rep) {
  Fingerprint f = fingerprint(a);
  if (with_cohomology) {
    auto spaces = hl2(a);
    f.dim_hl2 = spaces.dim_hl2();
    f.obstruction_support = support_signature(obstruction_report(a, spaces.hl2_reps));
  }
  rep.kv("algebra", "algebra", a.name);
  rep.kv("dim", "dim", f.dim);
  rep.kv("dim_product_space", "dim product space", f.dim_product_space);
  rep.kv("dim_right_annihilator", "dim right annihilator", f.dim_right_annihilator);
  rep.kv("dim_left_annihilator", "dim left annihilator", f.dim_left_annihilator);
  rep.kv("dim_center", "dim center", f.dim_center);
  rep.kv("dim_squares_ideal", "dim squares ideal", f.dim_squares_ideal);
  rep.kv("is_lie", "is Lie", f.is_lie ? "true" : "false");
  if (f.dim_hl2) rep.kv("dim_hl2", "dim HL2", *f.dim_hl2);
  if (f.obstruction_support)
    rep.kv("obstruction_support", "obstruction support",
           f.obstruction_support->empty() ? "(empty)" : *f.obstruction_support);
  return kExitOk;
}

int run_isocheck(const Algebra& a, const Algebra& b, const Mat& p, const Report& rep) {
  auto v = check_morphism(a, b, p);
  rep.kv("homomorphism", "bracket-compatible", v.homomorphism ? "true" : "false");
  rep.kv("invertible", "invertible", v.invertible ? "true" : "false");
  for (std::size_t t = 0; t < v.defects.size() && t < 5; ++t)
    rep.kv("witness", "witness",
           "(" + a.basis[v.defects[t].i] + "," + a.basis[v.defects[t].j] + ") -> " +
               format_vector(v.defects[t].defect));
  rep.kv("isomorphism", "isomorphism", v.isomorphism() ? "true" : "false");
  return v.isomorphism() ? kExitOk : kExitFail;
}

int run_semidirect(const RightModule& m, const Report& rep) {
  if (!is_lie(m.base).ok()) {
    rep.kv("base_is_lie", "base is Lie", "false");
    return kExitFail;
  }
  auto defects = right_module_defects(m.base, m);
  if (!defects.empty()) {
    rep.kv("module_defects", "module defect count", static_cast<Index>(defects.size()));
    return kExitFail;
  }
  rep.raw(lba_format(semidirect(m.base, m)));
  return kExitOk;
}

int run_embed_check(const std::string& name, const Report& rep) {
  MatrixEmbedding e = catalog_embedding(name);
  auto v = embedding_defects(e);
  rep.kv("embedding", "embedding", e.name);
  rep.kv("homomorphism", "bracket-compatible", v.homomorphism ? "true" : "false");
  rep.kv("injective", "injective", v.injective ? "true" : "false");
  for (std::size_t t = 0; t < v.defects.size() && t < 5; ++t)
    rep.kv("witness", "witness",
           "(" + e.domain.basis[v.defects[t].i] + "," + e.domain.basis[v.defects[t].j] + ")");
  return v.ok() ? kExitOk : kExitFail;
}

int run_fock(Index degree, const std::string& kind, bool verify, const Report& rep) {
  if (kind == "module") {
    RightModule m = fock_module(degree);
    if (verify) {
      auto defects = right_module_defects_if(
          m.base, m, [degree](Index p, Index, Index) { return p <= degree - 2; });
      rep.kv("scoped_defects", "defects on degrees <= N-2", static_cast<Index>(defects.size()));
      return defects.empty() ? kExitOk : kExitFail;
    }
    rep.raw(lba_format(m));
    return kExitOk;
  }
  Algebra a = fock_algebra(degree);
  if (verify) {
    auto defects = leibniz_defects_if(a, truncation_scope(4, degree));
    rep.kv("scoped_defects", "defects on degrees <= N-2", static_cast<Index>(defects.size()));
    return defects.empty() ? kExitOk : kExitFail;
  }
  rep.raw(lba_format(a));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant calculator for Leibniz algebras"};
  app.require_subcommand(1);

  Report rep;
  std::string format = "text";
  app.add_option("--format", format, "output format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string input, block_name, space = "hl2", cocycle_names, coeffs_text, matrix_file;
  std::string catalog_action, emit_name, embed_name, fock_kind = "algebra";
  std::string iso_a, iso_b;
  std::vector<std::string> param_kvs;
  bool skip_cohomology = false, fock_verify = false;
  Index fock_degree = 4;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "LBA file or catalog entry name")->required();
    cmd->add_option("--param", param_kvs, "catalog parameter k=v (repeatable)");
    cmd->add_option("--name", block_name, "select a named block from a document");
  };

  CLI::App* c_check = app.add_subcommand("check", "verify identities for every block");
  add_input(c_check);

  CLI::App* c_catalog = app.add_subcommand("catalog", "list or emit built-in entries");
  CLI::App* c_list = c_catalog->add_subcommand("list", "list catalog entries");
  CLI::App* c_emit = c_catalog->add_subcommand("emit", "emit a catalog entry as LBA text");
  c_emit->add_option("name", emit_name, "catalog entry name")->required();
  c_emit->add_option("--param", param_kvs, "catalog parameter k=v (repeatable)");
  c_catalog->require_subcommand(1);

  CLI::App* c_cohomology = app.add_subcommand("cohomology", "second-cohomology dimensions and bases");
  add_input(c_cohomology);
  c_cohomology->add_option("--space", space, "zl2|bl2|hl2 (default hl2)")
      ->check(CLI::IsMember({"zl2", "bl2", "hl2"}));

  CLI::App* c_obstruction =
      app.add_subcommand("obstruction", "quadratic integrability obstruction of a cocycle family");
  add_input(c_obstruction);
  c_obstruction->add_option("--cocycles", cocycle_names, "comma-separated cochain names");

  CLI::App* c_deform = app.add_subcommand("deform", "deform the bracket by a cocycle combination");
  add_input(c_deform);
  c_deform->add_option("--cocycles", cocycle_names, "comma-separated cochain names");
  c_deform->add_option("--coeffs", coeffs_text, "comma-separated coefficients")->required();

  CLI::App* c_quotient = app.add_subcommand("quotient", "quotient by the squares ideal");
  add_input(c_quotient);

  CLI::App* c_invariants = app.add_subcommand("invariants", "isomorphism-invariant fingerprint");
  add_input(c_invariants);
  c_invariants->add_flag("--skip-cohomology", skip_cohomology, "omit HL2 and obstruction data");

  CLI::App* c_isocheck = app.add_subcommand("isocheck", "verify a claimed isomorphism matrix");
  c_isocheck->add_option("a", iso_a, "first algebra (file or catalog)")->required();
  c_isocheck->add_option("b", iso_b, "second algebra (file or catalog)")->required();
  c_isocheck->add_option("--matrix", matrix_file, "LBA file holding the matrix block")->required();
  c_isocheck->add_option("--param", param_kvs, "catalog parameter k=v (repeatable)");

  CLI::App* c_semidirect = app.add_subcommand("semidirect", "attach a module to its base algebra");
  c_semidirect->add_option("input", input, "module: LBA file or catalog entry")->required();
  c_semidirect->add_option("--param", param_kvs, "catalog parameter k=v (repeatable)");
  c_semidirect->add_option("--module", block_name, "select a named module from a document");

  CLI::App* c_embed = app.add_subcommand("embed-check", "verify a catalog matrix embedding");
  c_embed->add_option("name", embed_name, "catalog embedding name")->required();

  CLI::App* c_fock = app.add_subcommand("fock", "emit or verify the truncated polynomial objects");
  c_fock->add_option("--degree", fock_degree, "truncation degree N >= 2")->required();
  c_fock->add_option("--kind", fock_kind, "algebra|module (default algebra)")
      ->check(CLI::IsMember({"algebra", "module"}));
  c_fock->add_flag("--verify", fock_verify, "run the degree-scoped identity check");

  // let global options like --format appear after the subcommand
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }
  rep.format = format == "machine" ? OutputFormat::machine : OutputFormat::text;

  try {
    ParamMap params = parse_params(param_kvs);
    if (c_check->parsed()) return run_check(resolve_input(input, params), rep);
    if (c_list->parsed()) return run_catalog_list(rep);
    if (c_emit->parsed()) return run_catalog_emit(emit_name, params, rep);
    if (c_cohomology->parsed()) {
      auto r = resolve_input(input, params);
      return run_cohomology(resolve_algebra(r, block_name), space, rep);
    }
    if (c_obstruction->parsed()) {
      auto r = resolve_input(input, params);
      Algebra a = resolve_algebra(r, block_name);
      return run_obstruction(a, gather_cocycles(r, a, cocycle_names), rep);
    }
    if (c_deform->parsed()) {
      auto r = resolve_input(input, params);
      Algebra a = resolve_algebra(r, block_name);
      return run_deform(a, gather_cocycles(r, a, cocycle_names), parse_coeffs(coeffs_text), rep);
    }
    if (c_quotient->parsed()) {
      auto r = resolve_input(input, params);
      return run_quotient(resolve_algebra(r, block_name), rep);
    }
    if (c_invariants->parsed()) {
      auto r = resolve_input(input, params);
      return run_invariants(resolve_algebra(r, block_name), !skip_cohomology, rep);
    }
    if (c_isocheck->parsed()) {
      Algebra a = resolve_algebra(resolve_input(iso_a, params), "");
      Algebra b = resolve_algebra(resolve_input(iso_b, params), "");
      LbaDocument mdoc = lba_parse(read_file(matrix_file));
      const NamedMatrix* nm = nullptr;
      for (const auto& s : mdoc.sections)
        if (auto* m = std::get_if<NamedMatrix>(&s)) {
          nm = m;
          break;
        }
      if (!nm) throw UsageError("matrix file contains no matrix block");
      return run_isocheck(a, b, nm->matrix, rep);
    }
    if (c_semidirect->parsed())
      return run_semidirect(resolve_module(resolve_input(input, params), block_name), rep);
    if (c_embed->parsed()) return run_embed_check(embed_name, rep);
    if (c_fock->parsed()) {
      if (fock_degree < 2) throw UsageError("--degree must be at least 2");
      return run_fock(fock_degree, fock_kind, fock_verify, rep);
    }
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
