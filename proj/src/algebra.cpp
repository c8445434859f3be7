#include "glie/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace glie {

std::string Degree::str() const {
  if (coords.size() == 1) return std::to_string(coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

AbelianGroup::AbelianGroup(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank < 0) throw std::invalid_argument("negative free rank");
  for (std::int64_t m : torsion_)
    if (m < 2) throw std::invalid_argument("torsion modulus must be >= 2");
}

Degree AbelianGroup::identity() const {
  return Degree{std::vector<std::int64_t>(arity(), 0)};
}

Degree AbelianGroup::reduce(Degree d) const {
  if (static_cast<int>(d.coords.size()) != arity())
    throw std::invalid_argument("degree arity does not match the group");
  for (std::size_t t = 0; t < torsion_.size(); ++t) {
    std::int64_t& c = d.coords[free_rank_ + t];
    c %= torsion_[t];
    if (c < 0) c += torsion_[t];
  }
  return d;
}

Degree AbelianGroup::add(const Degree& a, const Degree& b) const {
  Degree out = a;
  for (int i = 0; i < arity(); ++i) out.coords[i] += b.coords[i];
  return reduce(std::move(out));
}

std::string Violation::str() const {
  std::string axiom_name = axiom == Axiom::jacobi    ? "JACOBI"
                           : axiom == Axiom::grading ? "GRADING"
                                                     : "ALTERNATING";
  std::string out = axiom_name + " at (i=" + std::to_string(i) +
                    ", j=" + std::to_string(j);
  if (k >= 0) out += ", k=" + std::to_string(k);
  out += "), residual [";
  for (std::size_t t = 0; t < residual.size(); ++t) {
    if (t) out += ",";
    out += residual[t].str();
  }
  return out + "]";
}

GradedLieAlgebra::GradedLieAlgebra(std::string name, FieldSpec field,
                                   AbelianGroup group,
                                   std::vector<std::string> basis_names,
                                   std::vector<Degree> degrees,
                                   const std::vector<TableEntry>& brackets)
    : name_(std::move(name)),
      field_(std::move(field)),
      group_(std::move(group)),
      dim_(static_cast<int>(basis_names.size())),
      basis_names_(std::move(basis_names)),
      degrees_(std::move(degrees)) {
  if (static_cast<int>(degrees_.size()) != dim_)
    throw std::invalid_argument("one degree per basis vector is required");
  std::set<std::string> seen;
  for (const std::string& n : basis_names_)
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate basis name '" + n + "'");
  for (Degree& d : degrees_) d = group_.reduce(std::move(d));
  for (const Degree& d : degrees_)
    if (std::find(support_.begin(), support_.end(), d) == support_.end())
      support_.push_back(d);

  table_.assign(dim_, std::vector<Vector>(dim_, zero_vector(field_, dim_)));
  std::set<std::pair<int, int>> entries_seen;
  for (const TableEntry& e : brackets) {
    if (e.i < 0 || e.j >= dim_ || e.i >= e.j)
      throw std::invalid_argument("bracket entries require 0 <= i < j < dim");
    if (!entries_seen.insert({e.i, e.j}).second)
      throw std::invalid_argument("duplicate bracket entry (" +
                                  std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ")");
    Vector v = zero_vector(field_, dim_);
    for (const auto& [idx, c] : e.coeffs) {
      if (idx < 0 || idx >= dim_)
        throw std::invalid_argument("bracket coefficient index out of range");
      v[idx] = c;
    }
    table_[e.j][e.i] = scaled(field_, v, field_.neg(field_.one()));
    table_[e.i][e.j] = std::move(v);
  }
}

std::vector<int> GradedLieAlgebra::component_indices(const Degree& g) const {
  Degree gg = group_.reduce(g);
  std::vector<int> out;
  for (int i = 0; i < dim_; ++i)
    if (degrees_[i] == gg) out.push_back(i);
  return out;
}

Vector GradedLieAlgebra::basis_vector(int i) const {
  Vector v = zero_vector(field_, dim_);
  v[i] = field_.one();
  return v;
}

Vector GradedLieAlgebra::bracket(const Vector& v, const Vector& w) const {
  if (static_cast<int>(v.size()) != dim_ || static_cast<int>(w.size()) != dim_)
    throw std::invalid_argument("bracket operands must have the algebra dimension");
  Vector out = zero_vector(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (v[i].is_zero() && w[i].is_zero()) continue;
    for (int j = i + 1; j < dim_; ++j) {
      // coefficient of [e_i, e_j] in [v, w] is v_i w_j - v_j w_i
      Scalar c = field_.sub(field_.mul(v[i], w[j]), field_.mul(v[j], w[i]));
      if (!c.is_zero()) axpy(field_, out, c, table_[i][j]);
    }
  }
  return out;
}

std::map<Degree, Vector> GradedLieAlgebra::homogeneous_split(const Vector& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("vector length does not match the algebra");
  std::map<Degree, Vector> out;
  for (int i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    auto [it, inserted] = out.try_emplace(degrees_[i], zero_vector(field_, dim_));
    it->second[i] = v[i];
  }
  return out;
}

bool GradedLieAlgebra::is_homogeneous(const Vector& v) const {
  return homogeneous_split(v).size() == 1;
}

Subspace GradedLieAlgebra::graded_component(const Degree& g) const {
  std::vector<Vector> gens;
  for (int i : component_indices(g)) gens.push_back(basis_vector(i));
  return Subspace::span(field_, dim_, gens);
}

std::vector<GradedLieAlgebra::TableEntry> GradedLieAlgebra::upper_entries() const {
  std::vector<TableEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      if (is_zero(table_[i][j])) continue;
      TableEntry e{i, j, {}};
      for (int k = 0; k < dim_; ++k)
        if (!table_[i][j][k].is_zero()) e.coeffs[k] = table_[i][j][k];
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<Violation> validate(const GradedLieAlgebra& L) {
  std::vector<Violation> out;
  const FieldSpec& f = L.field();
  const int n = L.dim();

  // The alternating axiom holds by construction: the table stores i < j
  // only and the transpose carries the negation, and bracket() extends
  // bilinearly with v_i w_j - v_j w_i coefficients.

  // grading: nonzero coefficient k of [e_i, e_j] forces deg k = deg i + deg j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector& b = L.basis_bracket(i, j);
      for (int k = 0; k < n; ++k) {
        if (b[k].is_zero()) continue;
        Degree want = L.group().add(L.degree(i), L.degree(j));
        if (!(L.degree(k) == want)) {
          Vector residual = zero_vector(f, n);
          residual[k] = b[k];
          out.push_back({Axiom::grading, i, j, k, std::move(residual)});
        }
      }
    }

  // Jacobi on basis triples; trilinearity covers everything else
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector sum = L.bracket(L.basis_bracket(i, j), L.basis_vector(k));
        sum = vec_add(f, sum, L.bracket(L.basis_bracket(j, k), L.basis_vector(i)));
        sum = vec_add(f, sum,
                      L.bracket(L.bracket(L.basis_vector(k), L.basis_vector(i)),
                                L.basis_vector(j)));
        if (!is_zero(sum)) out.push_back({Axiom::jacobi, i, j, k, std::move(sum)});
      }

  return out;
}

IdentityComponent identity_component(const GradedLieAlgebra& L) {
  const Degree e = L.group().identity();
  std::vector<int> idx = L.component_indices(e);
  const int m = static_cast<int>(idx.size());

  std::vector<std::string> names;
  std::vector<Degree> degs(m, e);
  for (int i : idx) names.push_back(L.basis_names()[i]);

  std::vector<GradedLieAlgebra::TableEntry> entries;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Vector& w = L.basis_bracket(idx[a], idx[b]);
      GradedLieAlgebra::TableEntry entry{a, b, {}};
      // [L_e, L_e] lies back in L_e, so restricting to idx loses nothing
      for (int t = 0; t < m; ++t)
        if (!w[idx[t]].is_zero()) entry.coeffs[t] = w[idx[t]];
      if (!entry.coeffs.empty()) entries.push_back(std::move(entry));
    }

  auto algebra = std::make_shared<GradedLieAlgebra>(
      L.name() + "_e", L.field(), L.group(), std::move(names), std::move(degs),
      entries);
  return IdentityComponent{std::move(algebra), std::move(idx)};
}

GradedHom::GradedHom(AlgebraPtr source, AlgebraPtr target,
                     std::map<Degree, Degree> degree_map,
                     std::vector<Vector> columns)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_map_(std::move(degree_map)),
      columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_->dim())
    throw std::invalid_argument("one matrix column per source basis vector");
  for (const Vector& c : columns_)
    if (static_cast<int>(c.size()) != target_->dim())
      throw std::invalid_argument("matrix column length must be the target dimension");
}

Vector GradedHom::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != source_->dim())
    throw std::invalid_argument("vector length does not match the hom source");
  const FieldSpec& f = target_->field();
  Vector out = zero_vector(f, target_->dim());
  for (std::size_t j = 0; j < columns_.size(); ++j) axpy(f, out, v[j], columns_[j]);
  return out;
}

Subspace GradedHom::image() const {
  return Subspace::span(target_->field(), target_->dim(), columns_);
}

bool GradedHom::is_surjective() const { return image().dim() == target_->dim(); }

Subspace GradedHom::kernel_space() const {
  // constraints: one row per target coordinate
  const FieldSpec& f = source_->field();
  std::vector<Vector> rows(target_->dim(), zero_vector(f, source_->dim()));
  for (int j = 0; j < source_->dim(); ++j)
    for (int c = 0; c < target_->dim(); ++c) rows[c][j] = columns_[j][c];
  return kernel(f, source_->dim(), rows);
}

std::vector<std::string> validate_hom(const GradedHom& phi) {
  std::vector<std::string> out;
  const GradedLieAlgebra& L = phi.source();
  const GradedLieAlgebra& M = phi.target();
  if (!(L.field() == M.field())) {
    out.push_back("source and target fields differ");
    return out;
  }
  for (int j = 0; j < L.dim(); ++j) {
    const Vector& col = phi.columns()[j];
    if (is_zero(col)) continue;
    auto it = phi.degree_map().find(L.degree(j));
    if (it == phi.degree_map().end()) {
      out.push_back("no degree mapping for source degree " + L.degree(j).str());
      continue;
    }
    auto split = M.homogeneous_split(col);
    if (split.size() != 1 || !(split.begin()->first == it->second))
      out.push_back("image of basis vector " + std::to_string(j) +
                    " is not within target component " + it->second.str());
  }
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      Vector lhs = phi.apply(L.basis_bracket(i, j));
      Vector rhs = M.bracket(phi.columns()[i], phi.columns()[j]);
      if (!(lhs == rhs))
        out.push_back("bracket not preserved on basis pair (" + std::to_string(i) +
                      "," + std::to_string(j) + ")");
    }
  return out;
}

namespace {

// local ideal/gradedness checks so quotient can verify its precondition
// without depending on the ideal module
bool ideal_check(const GradedLieAlgebra& L, const Subspace& s) {
  for (const Vector& r : s.rows())
    for (int j = 0; j < L.dim(); ++j)
      if (!s.contains(L.bracket(r, L.basis_vector(j)))) return false;
  return true;
}

bool graded_check(const GradedLieAlgebra& L, const Subspace& s) {
  for (const Vector& r : s.rows())
    for (const auto& [g, part] : L.homogeneous_split(r))
      if (!s.contains(part)) return false;
  return true;
}

}  // namespace

Quotient quotient(const AlgebraPtr& L, const Subspace& ideal) {
  if (ideal.ambient_dim() != L->dim() || !(ideal.field() == L->field()))
    throw std::invalid_argument("ideal does not live in the algebra");
  if (!ideal_check(*L, ideal))
    throw std::invalid_argument("quotient requires an ideal");
  if (!graded_check(*L, ideal))
    throw std::invalid_argument("quotient requires a graded ideal");

  const FieldSpec& f = L->field();
  std::vector<bool> is_pivot(L->dim(), false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> coset;  // surviving basis indices
  for (int i = 0; i < L->dim(); ++i)
    if (!is_pivot[i]) coset.push_back(i);
  const int m = static_cast<int>(coset.size());

  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (int i : coset) {
    names.push_back(L->basis_names()[i]);
    degs.push_back(L->degree(i));
  }

  std::vector<GradedLieAlgebra::TableEntry> entries;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Vector w = ideal.reduce(L->basis_bracket(coset[a], coset[b]));
      GradedLieAlgebra::TableEntry entry{a, b, {}};
      for (int t = 0; t < m; ++t)
        if (!w[coset[t]].is_zero()) entry.coeffs[t] = w[coset[t]];
      if (!entry.coeffs.empty()) entries.push_back(std::move(entry));
    }

  auto q = std::make_shared<GradedLieAlgebra>(L->name() + "/I", f, L->group(),
                                              std::move(names), std::move(degs),
                                              entries);

  // projection: e_j goes to the coset coordinates of its reduction mod I
  std::vector<Vector> columns;
  for (int j = 0; j < L->dim(); ++j) {
    Vector red = ideal.reduce(L->basis_vector(j));
    Vector col = zero_vector(f, m);
    for (int t = 0; t < m; ++t) col[t] = red[coset[t]];
    columns.push_back(std::move(col));
  }
  std::map<Degree, Degree> dmap;
  for (const Degree& g : L->support()) dmap[g] = g;

  GradedHom proj(L, q, std::move(dmap), std::move(columns));
  return Quotient{q, std::move(proj)};
}

}  // namespace glie
