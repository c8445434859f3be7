#include "glie/io.hpp"

#include <sstream>

namespace glie {

using nlohmann::json;

parse_error::parse_error(const std::string& msg, int line, int col)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(col)),
      line_(line),
      col_(col) {}

validation_error::validation_error(std::string msg, std::vector<Violation> violations)
    : std::runtime_error(std::move(msg)), violations_(std::move(violations)) {}

namespace {

// byte offset -> 1-based line/column
std::pair<int, int> locate(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw parse_error(e.what(), line, col);
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw semantic_error("missing field '" + path + key + "'");
  return obj.at(key);
}

std::int64_t require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer())
    throw semantic_error("field '" + path + "' must be an integer");
  return v.get<std::int64_t>();
}

Scalar scalar_from_json(const FieldSpec& f, const json& v, const std::string& path) {
  if (f.finite()) {
    if (!v.is_number_integer())
      throw semantic_error("field '" + path + "' must be an integer for " + f.name());
    std::int64_t n = v.get<std::int64_t>();
    if (n < 0 || n >= f.modulus())
      throw semantic_error("field '" + path + "' out of range [0," +
                           std::to_string(f.modulus()) + ") for " + f.name());
    return Scalar::residue(n);
  }
  if (v.is_number_integer())
    return f.from_int(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return f.parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw semantic_error("field '" + path + "': " + e.what());
    }
  }
  throw semantic_error("field '" + path + "' must be a rational \"n/d\" string");
}

FieldSpec field_from_json(const json& v) {
  std::string kind = require(v, "kind", "field.").get<std::string>();
  if (kind == "prime") {
    std::int64_t p = require_int(require(v, "p", "field."), "field.p");
    try {
      return FieldSpec::prime(p);
    } catch (const std::invalid_argument& e) {
      throw semantic_error(std::string("field 'field.p': ") + e.what());
    }
  }
  if (kind == "rational") return FieldSpec::rational();
  throw semantic_error("field 'field.kind' must be \"prime\" or \"rational\"");
}

}  // namespace

AlgebraPtr parse_algebra(const std::string& text, bool allow_invalid) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw semantic_error("document root must be an object");

  std::string name = require(doc, "name", "").get<std::string>();
  FieldSpec field = field_from_json(require(doc, "field", ""));

  const json& jgroup = require(doc, "group", "");
  int free_rank =
      static_cast<int>(require_int(require(jgroup, "free_rank", "group."), "group.free_rank"));
  std::vector<std::int64_t> torsion;
  for (const json& m : require(jgroup, "torsion", "group."))
    torsion.push_back(require_int(m, "group.torsion[]"));
  AbelianGroup group = [&] {
    try {
      return AbelianGroup(free_rank, torsion);
    } catch (const std::invalid_argument& e) {
      throw semantic_error(std::string("field 'group': ") + e.what());
    }
  }();

  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (const json& b : require(doc, "basis", "")) {
    names.push_back(require(b, "name", "basis[].").get<std::string>());
    Degree d;
    for (const json& c : require(b, "degree", "basis[]."))
      d.coords.push_back(require_int(c, "basis[].degree[]"));
    if (static_cast<int>(d.coords.size()) != group.arity())
      throw semantic_error("field 'basis[].degree' must have " +
                           std::to_string(group.arity()) + " coordinates");
    degrees.push_back(std::move(d));
  }
  const int dim = static_cast<int>(names.size());

  std::vector<GradedLieAlgebra::TableEntry> entries;
  if (doc.contains("brackets")) {
    for (const json& e : doc.at("brackets")) {
      int i = static_cast<int>(require_int(require(e, "i", "brackets[]."), "brackets[].i"));
      int j = static_cast<int>(require_int(require(e, "j", "brackets[]."), "brackets[].j"));
      if (i == j) throw semantic_error("diagonal bracket must be omitted");
      if (i > j) throw semantic_error("bracket entries must satisfy i < j");
      if (i < 0 || j >= dim)
        throw semantic_error("field 'brackets[].i/j' out of range");
      GradedLieAlgebra::TableEntry entry{i, j, {}};
      for (const auto& [key, val] : require(e, "coeffs", "brackets[].").items()) {
        int k;
        try {
          std::size_t pos = 0;
          k = std::stoi(key, &pos);
          if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw semantic_error("field 'brackets[].coeffs' has non-integer key '" +
                               key + "'");
        }
        if (k < 0 || k >= dim)
          throw semantic_error("field 'brackets[].coeffs' index " + key +
                               " out of range");
        entry.coeffs[k] = scalar_from_json(field, val, "brackets[].coeffs." + key);
      }
      entries.push_back(std::move(entry));
    }
  }

  AlgebraPtr out = [&] {
    try {
      return std::make_shared<GradedLieAlgebra>(name, field, group, names, degrees,
                                                entries);
    } catch (const std::invalid_argument& e) {
      throw semantic_error(e.what());
    }
  }();

  if (!allow_invalid) {
    std::vector<Violation> bad = validate(*out);
    if (!bad.empty()) {
      std::string msg = "algebra '" + name + "' fails validation:";
      for (const Violation& v : bad) msg += "\n  " + v.str();
      throw validation_error(std::move(msg), std::move(bad));
    }
  }
  return out;
}

std::string serialize_algebra(const GradedLieAlgebra& L) {
  json field;
  field["kind"] = L.field().finite() ? "prime" : "rational";
  if (L.field().finite()) field["p"] = L.field().modulus();

  json basis = json::array();
  for (int i = 0; i < L.dim(); ++i) {
    json d = json::array();
    for (std::int64_t c : L.degree(i).coords) d.push_back(c);
    basis.push_back(json{{"name", L.basis_names()[i]}, {"degree", d}});
  }

  json brackets = json::array();
  for (const auto& e : L.upper_entries()) {
    json coeffs = json::object();
    for (const auto& [k, c] : e.coeffs) coeffs[std::to_string(k)] = scalar_json(c);
    brackets.push_back(json{{"i", e.i}, {"j", e.j}, {"coeffs", coeffs}});
  }

  json doc{{"name", L.name()},
           {"field", field},
           {"group",
            {{"free_rank", L.group().free_rank()}, {"torsion", L.group().torsion()}}},
           {"basis", basis},
           {"brackets", brackets}};
  return doc.dump(2) + "\n";
}

Subspace parse_ideal_spec(const std::string& text, const AlgebraPtr& L) {
  std::string trimmed = text;
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();

  auto preset_space = [&](const std::string& p) -> std::optional<Subspace> {
    if (p == "zero") return Subspace::zero(L->field(), L->dim());
    if (p == "full") return Subspace::full(L->field(), L->dim());
    if (p == "derived") {
      IdealHandle full(L, Subspace::full(L->field(), L->dim()), true, true);
      return derived_ideal(full).space();
    }
    return std::nullopt;
  };

  if (auto s = preset_space(trimmed)) return *s;

  json doc = parse_json(trimmed);
  const json* gens = nullptr;
  if (doc.is_array()) {
    gens = &doc;
  } else if (doc.is_object() && doc.contains("preset")) {
    auto s = preset_space(doc.at("preset").get<std::string>());
    if (!s)
      throw semantic_error("field 'preset' must be \"zero\", \"full\" or \"derived\"");
    return *s;
  } else if (doc.is_object() && doc.contains("generators")) {
    gens = &doc.at("generators");
  } else {
    throw semantic_error("ideal spec needs 'generators' or 'preset'");
  }

  std::vector<Vector> rows;
  for (const json& g : *gens) {
    if (!g.is_array() || static_cast<int>(g.size()) != L->dim())
      throw semantic_error("field 'generators[]' must be vectors of length " +
                           std::to_string(L->dim()));
    Vector v;
    for (std::size_t c = 0; c < g.size(); ++c)
      v.push_back(scalar_from_json(L->field(), g[c], "generators[][]"));
    rows.push_back(std::move(v));
  }
  return Subspace::span(L->field(), L->dim(), rows);
}

Vector parse_vector(const std::string& text, const GradedLieAlgebra& L) {
  json doc = parse_json(text);
  if (!doc.is_array() || static_cast<int>(doc.size()) != L.dim())
    throw semantic_error("vector must be an array of length " +
                         std::to_string(L.dim()));
  Vector v;
  for (std::size_t c = 0; c < doc.size(); ++c)
    v.push_back(scalar_from_json(L.field(), doc[c], "vector[]"));
  return v;
}

std::string emit_report_json(const TheoremReport& report) {
  json entries = json::array();
  for (const TheoremEntryResult& e : report.entries)
    entries.push_back(json{{"id", e.id},
                           {"status", status_name(e.status)},
                           {"witness", e.witness},
                           {"instances", e.instances},
                           {"millis", e.millis}});
  json doc{{"version", report.version},
           {"variant", report.variant.name()},
           {"entries", entries}};
  return doc.dump(2) + "\n";
}

TheoremReport parse_report_json(const std::string& text) {
  json doc = parse_json(text);
  TheoremReport out;
  out.version = require_int(require(doc, "version", ""), "version");
  std::string variant = require(doc, "variant", "").get<std::string>();
  if (variant != "literal" && variant != "proper")
    throw semantic_error("field 'variant' must be \"literal\" or \"proper\"");
  out.variant =
      variant == "proper" ? QuantifierVariant::proper() : QuantifierVariant::literal();
  for (const json& e : require(doc, "entries", "")) {
    TheoremEntryResult entry;
    entry.id = require(e, "id", "entries[].").get<std::string>();
    std::string status = require(e, "status", "entries[].").get<std::string>();
    if (status != "VERIFIED" && status != "COUNTEREXAMPLE")
      throw semantic_error("field 'entries[].status' is invalid");
    entry.status = status == "VERIFIED" ? TheoremStatus::verified
                                        : TheoremStatus::counterexample;
    entry.witness = require(e, "witness", "entries[].");
    entry.instances = require_int(require(e, "instances", "entries[]."),
                                  "entries[].instances");
    entry.millis = require_int(require(e, "millis", "entries[]."), "entries[].millis");
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string witness_text(const json& witness) {
  if (witness.is_null()) return "";
  std::ostringstream out;
  out << "algebra=" << witness.at("algebra").get<std::string>();
  for (const json& it : witness.at("items")) {
    out << " " << it.at("label").get<std::string>() << "=";
    const json& v = it.at("value");
    if (it.at("kind") == "subspace")
      out << v.at("rows").dump();
    else if (it.at("kind") == "vector")
      out << v.dump();
    else
      out << v.get<std::string>();
  }
  return out.str();
}

std::string emit_report_text(const SuiteRun& run) {
  std::ostringstream out;
  out << "check-theorems report (variant: " << run.report.variant.name() << ")\n";
  out << "corpus:";
  for (const std::string& n : run.corpus) out << " " << n;
  out << "\n";
  if (!run.skipped.empty()) {
    out << "skipped (decision procedures need a finite field):";
    for (const std::string& n : run.skipped) out << " " << n;
    out << "\n";
  }
  out << "\n";

  auto catalog = theorem_catalog();
  for (std::size_t i = 0; i < run.report.entries.size(); ++i) {
    const TheoremEntryResult& e = run.report.entries[i];
    out << e.id;
    for (std::size_t pad = e.id.size(); pad < 5; ++pad) out << ' ';
    std::string st = status_name(e.status);
    out << st;
    for (std::size_t pad = st.size(); pad < 16; ++pad) out << ' ';
    out << "checked " << e.instances << " instances in " << e.millis << " ms";
    if (i < catalog.size()) out << "  (" << catalog[i].summary << ")";
    out << "\n";
    if (!e.witness.is_null()) out << "     witness: " << witness_text(e.witness) << "\n";
  }
  return out.str();
}

}  // namespace glie
