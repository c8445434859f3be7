#include "glie/theorems.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace glie {

using nlohmann::json;

std::string status_name(TheoremStatus s) {
  return s == TheoremStatus::verified ? "VERIFIED" : "COUNTEREXAMPLE";
}

json scalar_json(const Scalar& s) {
  if (s.is_residue()) return json(s.residue_value());
  return json(s.str());
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(scalar_json(s));
  return out;
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (const Vector& r : s.rows()) rows.push_back(vector_json(r));
  return json{{"ambient", s.ambient_dim()}, {"rows", rows}};
}

json witness_json(const std::string& algebra, const Witness& w) {
  json items = json::array();
  for (const WitnessItem& it : w.items) {
    json entry{{"label", it.label}};
    if (const Vector* v = std::get_if<Vector>(&it.value)) {
      entry["kind"] = "vector";
      entry["value"] = vector_json(*v);
    } else if (const Subspace* s = std::get_if<Subspace>(&it.value)) {
      entry["kind"] = "subspace";
      entry["value"] = subspace_json(*s);
    } else {
      entry["kind"] = "text";
      entry["value"] = std::get<std::string>(it.value);
    }
    items.push_back(std::move(entry));
  }
  return json{{"algebra", algebra}, {"items", items}};
}

namespace {

struct CellResult {
  long long instances = 0;
  std::optional<json> witness;
};

Witness item(const char* label, Subspace s) {
  Witness w;
  w.items.push_back({label, std::move(s)});
  return w;
}

Witness& add(Witness& w, const char* label, Subspace s) {
  w.items.push_back({label, std::move(s)});
  return w;
}

Witness& add(Witness& w, const char* label, Vector v) {
  w.items.push_back({label, std::move(v)});
  return w;
}

Witness& add(Witness& w, const char* label, std::string text) {
  w.items.push_back({label, std::move(text)});
  return w;
}

Witness& append(Witness& w, const Witness& other) {
  for (const WitnessItem& it : other.items) w.items.push_back(it);
  return w;
}

bool graded_prime(const IdealHandle& P, QuantifierVariant v, const EnumLimits& lim) {
  return is_graded_prime(P, Method::definition, v, lim).holds;
}

// T2: the ideal-pair and element characterizations of graded prime agree
CellResult cell_T2(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    ++out.instances;
    Verdict d = is_graded_prime(P, Method::definition, v, lim);
    Verdict e = is_graded_prime(P, Method::element, v, lim);
    if (d.holds == e.holds) continue;
    Witness w = item("P", P.space());
    add(w, "definition", d.holds ? std::string("prime") : std::string("not prime"));
    add(w, "element", e.holds ? std::string("prime") : std::string("not prime"));
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// L3: (P : x) is graded for every graded ideal P and homogeneous x outside P
CellResult cell_L3(const AlgebraPtr& L, QuantifierVariant, const EnumLimits& lim) {
  CellResult out;
  std::vector<Vector> homs = homogeneous_elements(*L, lim);
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    for (const Vector& x : homs) {
      if (P.space().contains(x)) continue;
      ++out.instances;
      IdealHandle c = colon(P, x);
      if (is_graded_subspace(*L, c.space())) continue;
      Witness w = item("P", P.space());
      add(w, "x", x);
      add(w, "colon(P:x)", c.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
  }
  return out;
}

// T4: graded prime iff (P:x) = P for every homogeneous x outside P
CellResult cell_T4(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    ++out.instances;
    Verdict lhs = is_graded_prime(P, Method::definition, v, lim);
    Verdict rhs = is_graded_prime(P, Method::colon, v, lim);
    if (lhs.holds == rhs.holds) continue;
    Witness w = item("P", P.space());
    if (rhs.witness)
      append(w, *rhs.witness);  // x and the offending colon subspace
    else if (lhs.witness)
      append(w, *lhs.witness);
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// T5: the image of a graded prime containing the kernel is graded prime
CellResult cell_T5(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  std::vector<IdealHandle> ideals = enumerate_graded_ideals(L, lim);
  for (const IdealHandle& I : ideals) {
    Quotient q = quotient(L, I.space());
    for (const IdealHandle& P : ideals) {
      if (!P.space().contains(I.space())) continue;
      if (!graded_prime(P, v, lim)) continue;
      ++out.instances;
      IdealHandle img = image_ideal(q.projection, P);
      bool ok = img.is_ideal() && img.is_graded() && graded_prime(img, v, lim);
      if (ok) continue;
      Witness w = item("I", I.space());
      add(w, "P", P.space());
      add(w, "image", img.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
  }
  return out;
}

// C6: an ideal whose preimage is graded prime is graded prime
CellResult cell_C6(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& I : enumerate_graded_ideals(L, lim)) {
    Quotient q = quotient(L, I.space());
    for (const IdealHandle& Pq : enumerate_graded_ideals(q.algebra, lim)) {
      IdealHandle pre = preimage_ideal(q.projection, Pq);
      if (!pre.is_ideal() || !pre.is_graded()) continue;  // hypothesis fails
      if (!graded_prime(pre, v, lim)) continue;
      ++out.instances;
      if (graded_prime(Pq, v, lim)) continue;
      Witness w = item("I", I.space());
      add(w, "P'", Pq.space());
      add(w, "preimage", pre.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
  }
  return out;
}

// T7: a graded prime restricts to a graded prime of the identity component
CellResult cell_T7(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    if (!graded_prime(P, v, lim)) continue;
    ++out.instances;
    IdentityRestriction r = restrict_identity(P);
    if (graded_prime(r.restricted, v, lim)) continue;
    Witness w = item("P", P.space());
    add(w, "P_e", r.restricted.space());
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// SP: the ideal and element characterizations of graded semiprime agree
CellResult cell_SP(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& Q : enumerate_graded_ideals(L, lim)) {
    ++out.instances;
    Verdict d = is_semiprime(Q, Method::definition, v, lim);
    Verdict e = is_semiprime(Q, Method::element, v, lim);
    if (d.holds == e.holds) continue;
    Witness w = item("Q", Q.space());
    add(w, "definition", d.holds ? std::string("semiprime") : std::string("not semiprime"));
    add(w, "element", e.holds ? std::string("semiprime") : std::string("not semiprime"));
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// IR: graded prime implies graded irreducible
CellResult cell_IR(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    if (!graded_prime(P, v, lim)) continue;
    ++out.instances;
    Verdict ir = is_graded_irreducible(P, v, lim);
    if (ir.holds) continue;
    Witness w = item("P", P.space());
    if (ir.witness) append(w, *ir.witness);
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// PR: graded prime iff graded irreducible and graded semiprime
CellResult cell_PR(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    ++out.instances;
    bool prime = graded_prime(P, v, lim);
    bool irred = is_graded_irreducible(P, v, lim).holds;
    bool semi = is_semiprime(P, Method::definition, v, lim).holds;
    if (prime == (irred && semi)) continue;
    Witness w = item("P", P.space());
    add(w, "prime", std::string(prime ? "yes" : "no"));
    add(w, "irreducible", std::string(irred ? "yes" : "no"));
    add(w, "semiprime", std::string(semi ? "yes" : "no"));
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// TP1: bracket-membership and generated-ideal total prime forms agree
CellResult cell_TP1(const AlgebraPtr& L, QuantifierVariant, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    ++out.instances;
    Verdict d = is_total_prime(P, Method::definition, lim);
    Verdict g = is_total_prime(P, Method::generated, lim);
    if (d.holds == g.holds) continue;
    Witness w = item("P", P.space());
    add(w, "definition", d.holds ? std::string("total prime") : std::string("not total prime"));
    add(w, "generated", g.holds ? std::string("total prime") : std::string("not total prime"));
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// TP2: for total prime P, (P:x) = (P:L) for every homogeneous x outside P
CellResult cell_TP2(const AlgebraPtr& L, QuantifierVariant, const EnumLimits& lim) {
  CellResult out;
  IdealHandle full(L, Subspace::full(L->field(), L->dim()), true, true);
  std::vector<Vector> homs = homogeneous_elements(*L, lim);
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    if (!is_total_prime(P, Method::definition, lim).holds) continue;
    ++out.instances;
    Subspace colon_L = colon(P, full).space();
    for (const Vector& x : homs) {
      if (P.space().contains(x)) continue;
      ++out.instances;
      Subspace colon_x = colon(P, x).space();
      if (colon_x == colon_L) continue;
      Witness w = item("P", P.space());
      add(w, "x", x);
      add(w, "colon(P:x)", colon_x);
      add(w, "colon(P:L)", colon_L);
      out.witness = witness_json(L->name(), w);
      return out;
    }
  }
  return out;
}

// TP3: for total prime P, (P:L) and every (P:x) are graded total prime
CellResult cell_TP3(const AlgebraPtr& L, QuantifierVariant, const EnumLimits& lim) {
  CellResult out;
  IdealHandle full(L, Subspace::full(L->field(), L->dim()), true, true);
  std::vector<Vector> homs = homogeneous_elements(*L, lim);
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    if (!is_total_prime(P, Method::definition, lim).holds) continue;
    ++out.instances;
    IdealHandle colon_L = colon(P, full);
    bool ok = colon_L.is_ideal() && colon_L.is_graded() &&
              is_total_prime(colon_L, Method::definition, lim).holds;
    if (!ok) {
      Witness w = item("P", P.space());
      add(w, "colon(P:L)", colon_L.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
    for (const Vector& x : homs) {
      if (P.space().contains(x)) continue;
      ++out.instances;
      IdealHandle colon_x = colon(P, x);
      if (colon_x.is_ideal() && colon_x.is_graded() &&
          is_total_prime(colon_x, Method::definition, lim).holds)
        continue;
      Witness w = item("P", P.space());
      add(w, "x", x);
      add(w, "colon(P:x)", colon_x.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
  }
  return out;
}

// MC: total prime iff the homogeneous complement is bracket-closed
CellResult cell_MC(const AlgebraPtr& L, QuantifierVariant, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_graded_ideals(L, lim)) {
    ++out.instances;
    Verdict t = is_total_prime(P, Method::definition, lim);
    Verdict m = complement_mult_closed(P, lim);
    if (t.holds == m.holds) continue;
    Witness w = item("P", P.space());
    add(w, "total prime", std::string(t.holds ? "yes" : "no"));
    add(w, "complement closed", std::string(m.holds ? "yes" : "no"));
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

// TP5: epimorphism transport of total primality, image and preimage sides
CellResult cell_TP5(const AlgebraPtr& L, QuantifierVariant, const EnumLimits& lim) {
  CellResult out;
  std::vector<IdealHandle> ideals = enumerate_graded_ideals(L, lim);
  for (const IdealHandle& I : ideals) {
    Quotient q = quotient(L, I.space());
    for (const IdealHandle& P : ideals) {
      if (!P.space().contains(I.space())) continue;
      if (!is_total_prime(P, Method::definition, lim).holds) continue;
      ++out.instances;
      IdealHandle img = image_ideal(q.projection, P);
      if (img.is_ideal() && img.is_graded() &&
          is_total_prime(img, Method::definition, lim).holds)
        continue;
      Witness w = item("I", I.space());
      add(w, "P", P.space());
      add(w, "image", img.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
    for (const IdealHandle& Pq : enumerate_graded_ideals(q.algebra, lim)) {
      IdealHandle pre = preimage_ideal(q.projection, Pq);
      if (!pre.is_ideal() || !pre.is_graded()) continue;
      if (!is_total_prime(pre, Method::definition, lim).holds) continue;
      ++out.instances;
      if (is_total_prime(Pq, Method::definition, lim).holds) continue;
      Witness w = item("I", I.space());
      add(w, "P'", Pq.space());
      add(w, "preimage", pre.space());
      out.witness = witness_json(L->name(), w);
      return out;
    }
  }
  return out;
}

// T1: the non-graded prime characterizations agree on the full ideal lattice
CellResult cell_T1(const AlgebraPtr& L, QuantifierVariant v, const EnumLimits& lim) {
  CellResult out;
  for (const IdealHandle& P : enumerate_ideals(L, lim)) {
    ++out.instances;
    Verdict d = is_prime_nongraded(P, Method::definition, v, lim);
    Verdict e = is_prime_nongraded(P, Method::element, v, lim);
    if (d.holds == e.holds) continue;
    Witness w = item("P", P.space());
    add(w, "definition", d.holds ? std::string("prime") : std::string("not prime"));
    add(w, "element", e.holds ? std::string("prime") : std::string("not prime"));
    out.witness = witness_json(L->name(), w);
    return out;
  }
  return out;
}

using CellFn = CellResult (*)(const AlgebraPtr&, QuantifierVariant, const EnumLimits&);

struct EntrySpec {
  TheoremInfo info;
  CellFn run;
};

const EntrySpec kEntries[] = {
    {{"T2", "graded prime: ideal-pair and element tests agree", true}, cell_T2},
    {{"L3", "colon of a graded ideal by an outside homogeneous element is graded",
      false},
     cell_L3},
    {{"T4", "graded prime iff every outside homogeneous colon collapses to P", true},
     cell_T4},
    {{"T5", "image of a graded prime containing the kernel is graded prime", true},
     cell_T5},
    {{"C6", "ideal with graded prime preimage is graded prime", true}, cell_C6},
    {{"T7", "graded prime restricts to a graded prime of the identity component",
      true},
     cell_T7},
    {{"SP", "graded semiprime: ideal and element tests agree", true}, cell_SP},
    {{"IR", "graded prime implies graded irreducible", true}, cell_IR},
    {{"PR", "graded prime iff graded irreducible and graded semiprime", true},
     cell_PR},
    {{"TP1", "total prime: bracket and generated-ideal tests agree", false},
     cell_TP1},
    {{"TP2", "total prime: colon by any outside homogeneous element equals colon by L",
      false},
     cell_TP2},
    {{"TP3", "total prime: colon ideals stay graded total prime", false}, cell_TP3},
    {{"MC", "total prime iff the homogeneous complement is bracket-closed", false},
     cell_MC},
    {{"TP5", "epimorphism transport preserves total primality", false}, cell_TP5},
    {{"T1", "non-graded prime: ideal-pair and element tests agree", true}, cell_T1},
};

}  // namespace

std::span<const TheoremInfo> theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const EntrySpec& e : kEntries) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteRun theorem_suite(std::span<const AlgebraPtr> corpus, QuantifierVariant v,
                       const SuiteOptions& opts) {
  SuiteRun run;
  run.report.version = 1;
  run.report.variant = v;

  std::vector<AlgebraPtr> decided;
  for (const AlgebraPtr& L : corpus) {
    if (!L->field().finite()) {
      run.skipped.push_back(L->name());
      continue;
    }
    std::vector<Violation> bad = validate(*L);
    if (!bad.empty()) {
      std::string msg = "corpus algebra " + L->name() + " fails validation:";
      for (const Violation& viol : bad) msg += "\n  " + viol.str();
      throw std::invalid_argument(msg);
    }
    decided.push_back(L);
    run.corpus.push_back(L->name());
  }

  const std::size_t n_entries = std::size(kEntries);
  const std::size_t n_cells = n_entries * decided.size();
  std::vector<CellResult> cells(n_cells);
  std::vector<long long> cell_millis(n_cells, 0);
  std::vector<std::exception_ptr> errors(n_cells);

  auto run_cell = [&](std::size_t t) {
    const std::size_t e = t / decided.size();
    const std::size_t a = t % decided.size();
    try {
      auto start = std::chrono::steady_clock::now();
      cells[t] = kEntries[e].run(decided[a], v, opts.limits);
      if (opts.timings)
        cell_millis[t] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || n_cells <= 1) {
    for (std::size_t t = 0; t < n_cells; ++t) run_cell(t);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= n_cells) return;
        run_cell(t);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs - 1; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();
  }
  for (std::size_t t = 0; t < n_cells; ++t)
    if (errors[t]) std::rethrow_exception(errors[t]);

  // merge: instances sum, witness from the earliest corpus entry
  for (std::size_t e = 0; e < n_entries; ++e) {
    TheoremEntryResult entry;
    entry.id = kEntries[e].info.id;
    entry.status = TheoremStatus::verified;
    entry.witness = nullptr;
    for (std::size_t a = 0; a < decided.size(); ++a) {
      const CellResult& c = cells[e * decided.size() + a];
      entry.instances += c.instances;
      entry.millis += cell_millis[e * decided.size() + a];
      if (entry.status == TheoremStatus::verified && c.witness) {
        entry.status = TheoremStatus::counterexample;
        entry.witness = *c.witness;
      }
    }
    run.report.entries.push_back(std::move(entry));
  }
  return run;
}

}  // namespace glie
