// command-line front end: validate, ideal-gen, bracket, colon, classify,
// enumerate, check-theorems
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "glie/corpus.hpp"
#include "glie/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace glie;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw semantic_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GlobalOpts {
  bool json_out = false;
  std::string variant = "literal";
  bool allow_invalid = false;
  int max_dim = 6;
  int jobs = 1;
  bool timings = false;
  std::uint64_t seed = 0;  // reserved; all procedures are deterministic

  QuantifierVariant quantifier() const {
    return variant == "proper" ? QuantifierVariant::proper()
                               : QuantifierVariant::literal();
  }
  EnumLimits limits() const {
    EnumLimits l;
    l.max_dim = max_dim;
    return l;
  }
};

AlgebraPtr load_algebra(const std::string& path, const GlobalOpts& g) {
  return parse_algebra(slurp(path), g.allow_invalid);
}

std::string rows_text(const Subspace& s) {
  json rows = json::array();
  for (const Vector& r : s.rows()) rows.push_back(vector_json(r));
  return rows.dump();
}

json verdict_json(const Verdict& v) {
  json out{{"holds", v.holds},
           {"method", method_name(v.method)},
           {"instances", v.instances},
           {"vacuous", v.vacuous},
           {"witness", nullptr}};
  if (v.witness) {
    json items = json::array();
    for (const WitnessItem& it : v.witness->items) {
      json entry{{"label", it.label}};
      if (const Vector* vec = std::get_if<Vector>(&it.value)) {
        entry["kind"] = "vector";
        entry["value"] = vector_json(*vec);
      } else if (const Subspace* sub = std::get_if<Subspace>(&it.value)) {
        entry["kind"] = "subspace";
        entry["value"] = subspace_json(*sub);
      } else {
        entry["kind"] = "text";
        entry["value"] = std::get<std::string>(it.value);
      }
      items.push_back(std::move(entry));
    }
    out["witness"] = std::move(items);
  }
  return out;
}

std::string verdict_text(const Verdict& v) {
  std::string out = v.holds ? "yes" : "no";
  if (v.vacuous) out += " (empty domain)";
  if (v.witness) {
    out += "  [witness";
    for (const WitnessItem& it : v.witness->items) {
      out += " " + it.label + "=";
      if (const Vector* vec = std::get_if<Vector>(&it.value))
        out += vector_json(*vec).dump();
      else if (const Subspace* sub = std::get_if<Subspace>(&it.value))
        out += rows_text(*sub);
      else
        out += std::get<std::string>(it.value);
    }
    out += "]";
  }
  return out;
}

int cmd_validate(const std::string& path, const GlobalOpts& g) {
  AlgebraPtr L = parse_algebra(slurp(path), /*allow_invalid=*/true);
  std::vector<Violation> bad = validate(*L);
  if (g.json_out) {
    json v = json::array();
    for (const Violation& viol : bad) v.push_back(viol.str());
    json doc{{"algebra", L->name()}, {"valid", bad.empty()}, {"violations", v}};
    std::cout << doc.dump(2) << "\n";
  } else {
    if (bad.empty()) {
      std::cout << L->name() << ": valid (dim " << L->dim() << " over "
                << L->field().name() << ")\n";
    } else {
      std::cout << L->name() << ": " << bad.size() << " violation(s)\n";
      for (const Violation& viol : bad) std::cout << "  " << viol.str() << "\n";
    }
  }
  return bad.empty() ? 0 : 2;
}

int cmd_ideal_gen(const std::string& path, const std::string& spec,
                  const GlobalOpts& g) {
  AlgebraPtr L = load_algebra(path, g);
  Subspace seed = parse_ideal_spec(spec, L);
  GeneratedTrace t = generated_ideal_trace(L, seed.rows());
  bool graded = is_graded_subspace(*L, t.ideal.space());
  if (g.json_out) {
    json doc{{"algebra", L->name()},
             {"ideal", subspace_json(t.ideal.space())},
             {"dim", t.ideal.dim()},
             {"steps", t.steps},
             {"is_graded", graded}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "generated ideal: rows " << rows_text(t.ideal.space()) << "\n"
              << "dim: " << t.ideal.dim() << "\n"
              << "stabilized after " << t.steps << " growth step(s)\n"
              << "is_graded: " << (graded ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_bracket(const std::string& path, const std::string& va,
                const std::string& vb, const std::string& ia,
                const std::string& ib, const GlobalOpts& g) {
  AlgebraPtr L = load_algebra(path, g);
  if (!va.empty() != !vb.empty() || !ia.empty() != !ib.empty() ||
      va.empty() == ia.empty())
    throw std::invalid_argument(
        "bracket needs either -v and -w vectors or --ideal-a and --ideal-b");
  if (!va.empty()) {
    Vector out = L->bracket(parse_vector(va, *L), parse_vector(vb, *L));
    if (g.json_out)
      std::cout << json{{"bracket", vector_json(out)}}.dump(2) << "\n";
    else
      std::cout << vector_json(out).dump() << "\n";
    return 0;
  }
  IdealHandle A(L, parse_ideal_spec(ia, L));
  IdealHandle B(L, parse_ideal_spec(ib, L));
  IdealHandle out = ideal_bracket(A, B);
  bool graded = is_graded_subspace(*L, out.space());
  if (g.json_out) {
    json doc{{"algebra", L->name()},
             {"bracket", subspace_json(out.space())},
             {"dim", out.dim()},
             {"is_ideal", out.is_ideal()},
             {"is_graded", graded}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ideal bracket: rows " << rows_text(out.space()) << " (dim "
              << out.dim() << ")\n";
  }
  return 0;
}

int cmd_colon(const std::string& path, const std::string& ideal,
              const std::string& by, const std::string& by_vec,
              const GlobalOpts& g) {
  AlgebraPtr L = load_algebra(path, g);
  IdealHandle I(L, parse_ideal_spec(ideal, L));
  if (!I.is_ideal())
    throw std::invalid_argument("colon requires --ideal to be an ideal");
  if (by.empty() == by_vec.empty())
    throw std::invalid_argument("colon needs exactly one of --by or --by-vector");
  IdealHandle out = by.empty()
                        ? colon(I, parse_vector(by_vec, *L))
                        : colon(I, IdealHandle(L, parse_ideal_spec(by, L)));
  bool graded = is_graded_subspace(*L, out.space());
  if (g.json_out) {
    json doc{{"algebra", L->name()},
             {"colon", subspace_json(out.space())},
             {"dim", out.dim()},
             {"is_ideal", out.is_ideal()},
             {"is_graded", graded}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "colon: rows " << rows_text(out.space()) << " (dim " << out.dim()
              << ")\n"
              << "is_ideal: " << (out.is_ideal() ? "yes" : "no") << "\n"
              << "is_graded: " << (graded ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, const std::string& ideal,
                 const GlobalOpts& g) {
  AlgebraPtr L = load_algebra(path, g);
  IdealHandle P(L, parse_ideal_spec(ideal, L));
  bool ideal_flag = P.is_ideal();
  bool graded_flag = P.is_graded();

  json doc{{"algebra", L->name()},
           {"ideal", subspace_json(P.space())},
           {"is_ideal", ideal_flag},
           {"is_graded", graded_flag},
           {"variant", g.quantifier().name()},
           {"decisions", nullptr}};
  if (!g.json_out) {
    std::cout << "algebra: " << L->name() << " (" << L->field().name() << ", dim "
              << L->dim() << ")\n"
              << "ideal: rows " << rows_text(P.space()) << " (dim " << P.dim()
              << ")\n"
              << "is_ideal: " << (ideal_flag ? "yes" : "no") << "\n"
              << "is_graded: " << (graded_flag ? "yes" : "no") << "\n";
  }

  if (!L->field().finite()) {
    if (g.json_out) std::cout << doc.dump(2) << "\n";
    std::cerr << "error: decision requires a finite field\n";
    return 1;
  }
  if (!ideal_flag || !graded_flag) {
    if (g.json_out) std::cout << doc.dump(2) << "\n";
    std::cerr << "note: decision procedures apply to graded ideals only\n";
    return 0;
  }

  QuantifierVariant v = g.quantifier();
  EnumLimits lim = g.limits();
  struct Row {
    const char* name;
    Verdict verdict;
  };
  std::vector<Row> rows;
  rows.push_back({"prime/definition", is_graded_prime(P, Method::definition, v, lim)});
  rows.push_back({"prime/element", is_graded_prime(P, Method::element, v, lim)});
  rows.push_back({"prime/colon", is_graded_prime(P, Method::colon, v, lim)});
  rows.push_back(
      {"semiprime/definition", is_semiprime(P, Method::definition, v, lim)});
  rows.push_back({"semiprime/element", is_semiprime(P, Method::element, v, lim)});
  rows.push_back({"irreducible", is_graded_irreducible(P, v, lim)});
  rows.push_back(
      {"total-prime/definition", is_total_prime(P, Method::definition, lim)});
  rows.push_back({"total-prime/generated", is_total_prime(P, Method::generated, lim)});
  rows.push_back({"complement-closed", complement_mult_closed(P, lim)});

  if (g.json_out) {
    json decisions = json::object();
    for (const Row& r : rows) decisions[r.name] = verdict_json(r.verdict);
    doc["decisions"] = std::move(decisions);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "variant: " << v.name() << "\n";
    for (const Row& r : rows)
      std::cout << r.name << ": " << verdict_text(r.verdict) << "\n";
  }
  return 0;
}

int cmd_enumerate(const std::string& path, std::int64_t field_p, int dim,
                  bool graded_only, bool all_ideals, const GlobalOpts& g) {
  EnumLimits lim = g.limits();
  if (path.empty()) {
    if (field_p <= 0 || dim < 0)
      throw std::invalid_argument("enumerate needs an algebra or --field and --dim");
    std::vector<Subspace> all =
        enumerate_subspaces(FieldSpec::prime(field_p), dim, lim);
    if (g.json_out) {
      json spaces = json::array();
      for (const Subspace& s : all) spaces.push_back(subspace_json(s));
      std::cout << json{{"count", all.size()}, {"subspaces", spaces}}.dump(2) << "\n";
    } else {
      std::cout << all.size() << " subspaces of F_" << field_p << "^" << dim << "\n";
      for (const Subspace& s : all)
        std::cout << "  dim " << s.dim() << ": " << rows_text(s) << "\n";
    }
    return 0;
  }
  AlgebraPtr L = load_algebra(path, g);
  std::vector<IdealHandle> out = all_ideals && !graded_only
                                     ? enumerate_ideals(L, lim)
                                     : enumerate_graded_ideals(L, lim);
  const char* what = all_ideals && !graded_only ? "ideals" : "graded ideals";
  if (g.json_out) {
    json spaces = json::array();
    for (const IdealHandle& s : out) spaces.push_back(subspace_json(s.space()));
    std::cout << json{{"algebra", L->name()},
                      {"count", out.size()},
                      {"kind", what},
                      {"ideals", spaces}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << out.size() << " " << what << " of " << L->name() << "\n";
    for (const IdealHandle& s : out)
      std::cout << "  dim " << s.dim() << ": " << rows_text(s.space()) << "\n";
  }
  return 0;
}

int cmd_check_theorems(const std::string& corpus_dir, const GlobalOpts& g) {
  std::vector<AlgebraPtr> corpus;
  if (corpus_dir.empty()) {
    corpus = builtin_corpus();
  } else {
    std::vector<fs::path> files;
    if (!fs::is_directory(corpus_dir))
      throw semantic_error("corpus directory '" + corpus_dir + "' does not exist");
    for (const auto& entry : fs::directory_iterator(corpus_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw semantic_error("no corpus entries in '" + corpus_dir + "'");
    for (const fs::path& f : files) corpus.push_back(parse_algebra(slurp(f.string())));
  }

  SuiteOptions opts;
  opts.jobs = g.jobs;
  opts.timings = g.timings;
  opts.limits = g.limits();
  SuiteRun run = theorem_suite(corpus, g.quantifier(), opts);
  if (g.json_out)
    std::cout << emit_report_json(run.report);
  else
    std::cout << emit_report_text(run);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ideal arithmetic and primality checking for graded Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--variant", g.variant, "ideal quantifier variant")
      ->check(CLI::IsMember({"literal", "proper"}))
      ->capture_default_str();
  app.add_flag("--allow-invalid", g.allow_invalid,
               "load algebras that fail axiom validation");
  app.add_option("--max-dim", g.max_dim, "enumeration dimension guard")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for check-theorems")
      ->capture_default_str();
  app.add_flag("--timings", g.timings,
               "fill report timing fields (not byte-reproducible)");
  app.add_option("--seed", g.seed, "reserved and unused; every procedure is deterministic");

  std::string algebra_path, gens, vec_a, vec_b, ideal_a, ideal_b, ideal_spec, by,
      by_vec, corpus_dir;
  std::int64_t field_p = 0;
  int dim = -1;
  bool graded_only = false, all_ideals = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the algebra axioms");
  validate_cmd->add_option("algebra", algebra_path, "algebra document")->required();

  CLI::App* gen_cmd =
      app.add_subcommand("ideal-gen", "smallest ideal containing the generators");
  gen_cmd->add_option("algebra", algebra_path)->required();
  gen_cmd->add_option("--gens", gens, "generator vectors or preset")->required();

  CLI::App* bracket_cmd = app.add_subcommand("bracket", "bracket of vectors or ideals");
  bracket_cmd->add_option("algebra", algebra_path)->required();
  bracket_cmd->add_option("-v", vec_a, "left vector");
  bracket_cmd->add_option("-w", vec_b, "right vector");
  bracket_cmd->add_option("--ideal-a", ideal_a, "left ideal");
  bracket_cmd->add_option("--ideal-b", ideal_b, "right ideal");

  CLI::App* colon_cmd = app.add_subcommand("colon", "colon subspace (I : J) or (I : x)");
  colon_cmd->add_option("algebra", algebra_path)->required();
  colon_cmd->add_option("--ideal", ideal_spec, "the ideal I")->required();
  colon_cmd->add_option("--by", by, "ideal J");
  colon_cmd->add_option("--by-vector", by_vec, "single vector x");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "ideal flags and primality decisions");
  classify_cmd->add_option("algebra", algebra_path)->required();
  classify_cmd->add_option("--ideal", ideal_spec, "subspace to classify")->required();

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "subspaces of F_p^n or ideals of an algebra");
  enum_cmd->add_option("algebra", algebra_path, "algebra document (ideal modes)");
  enum_cmd->add_option("--field", field_p, "prime modulus (subspace mode)");
  enum_cmd->add_option("--dim", dim, "ambient dimension (subspace mode)");
  enum_cmd->add_flag("--graded-ideals", graded_only, "list graded ideals");
  enum_cmd->add_flag("--all-ideals", all_ideals, "list every ideal");

  CLI::App* check_cmd =
      app.add_subcommand("check-theorems", "run the exhaustive statement checks");
  check_cmd->add_option("corpus", corpus_dir, "directory of algebra documents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(algebra_path, g);
    if (gen_cmd->parsed()) return cmd_ideal_gen(algebra_path, gens, g);
    if (bracket_cmd->parsed())
      return cmd_bracket(algebra_path, vec_a, vec_b, ideal_a, ideal_b, g);
    if (colon_cmd->parsed()) return cmd_colon(algebra_path, ideal_spec, by, by_vec, g);
    if (classify_cmd->parsed()) return cmd_classify(algebra_path, ideal_spec, g);
    if (enum_cmd->parsed())
      return cmd_enumerate(algebra_path, field_p, dim, graded_only, all_ideals, g);
    if (check_cmd->parsed()) return cmd_check_theorems(corpus_dir, g);
  } catch (const guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const semantic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
