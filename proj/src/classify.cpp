#include "glie/classify.hpp"

#include <algorithm>
#include <cassert>

namespace glie {

std::string method_name(Method m) {
  switch (m) {
    case Method::definition: return "definition";
    case Method::element: return "element";
    case Method::colon: return "colon";
    case Method::generated: return "generated";
    case Method::meet: return "meet";
    case Method::complement: return "complement";
  }
  return "?";
}

const WitnessItem* Witness::find(const std::string& label) const {
  for (const WitnessItem& it : items)
    if (it.label == label) return &it;
  return nullptr;
}

namespace {

void require_finite(const GradedLieAlgebra& L) {
  if (!L.field().finite())
    throw std::invalid_argument("decision requires a finite field");
}

void require_graded_ideal(const IdealHandle& P) {
  if (!P.is_ideal()) throw std::invalid_argument("the tested subspace is not an ideal");
  if (!P.is_graded())
    throw std::invalid_argument("the tested subspace is not a graded ideal");
}

bool proper(const IdealHandle& I) { return I.dim() < I.algebra().dim(); }

Witness pair_witness(const char* l1, Subspace a, const char* l2, Subspace b) {
  Witness w;
  w.items.push_back({l1, std::move(a)});
  w.items.push_back({l2, std::move(b)});
  return w;
}

Witness vec_pair_witness(const char* l1, Vector a, const char* l2, Vector b) {
  Witness w;
  w.items.push_back({l1, std::move(a)});
  w.items.push_back({l2, std::move(b)});
  return w;
}

// [span(A), span(B)] inside S, tested on row pairs (enough by bilinearity)
bool bracket_inside(const GradedLieAlgebra& L, const std::vector<Vector>& a,
                    const std::vector<Vector>& b, const Subspace& s) {
  for (const Vector& x : a)
    for (const Vector& y : b)
      if (!s.contains(L.bracket(x, y))) return false;
  return true;
}

}  // namespace

std::vector<Vector> homogeneous_elements(const GradedLieAlgebra& L,
                                         const EnumLimits& limits) {
  require_finite(L);
  std::vector<Vector> out;
  for (const Degree& g : L.support()) {
    std::vector<int> idx = L.component_indices(g);
    for (const Vector& coords :
         enumerate_nonzero_vectors(L.field(), static_cast<int>(idx.size()), limits)) {
      Vector v = zero_vector(L.field(), L.dim());
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = coords[t];
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<IdealHandle> enumerate_graded_ideals(const AlgebraPtr& L,
                                                 const EnumLimits& limits) {
  require_finite(*L);
  if (L->dim() > limits.max_dim)
    throw guard_error("graded ideal enumeration capped at dimension " +
                      std::to_string(limits.max_dim));

  // per-component subspace lattices in support presentation order
  std::vector<std::vector<int>> indices;
  std::vector<std::vector<Subspace>> lattices;
  for (const Degree& g : L->support()) {
    indices.push_back(L->component_indices(g));
    lattices.push_back(enumerate_subspaces(
        L->field(), static_cast<int>(indices.back().size()), limits));
  }

  std::vector<IdealHandle> out;
  std::vector<std::size_t> pick(lattices.size(), 0);
  while (true) {
    std::vector<Vector> rows;
    for (std::size_t c = 0; c < lattices.size(); ++c)
      for (const Vector& r : lattices[c][pick[c]].rows()) {
        Vector v = zero_vector(L->field(), L->dim());
        for (std::size_t t = 0; t < indices[c].size(); ++t) v[indices[c][t]] = r[t];
        rows.push_back(std::move(v));
      }
    Subspace s = Subspace::span(L->field(), L->dim(), rows);
    if (is_ideal(*L, s)) out.emplace_back(L, std::move(s), true, true);

    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == lattices[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }

  std::sort(out.begin(), out.end(), [](const IdealHandle& a, const IdealHandle& b) {
    return subspace_cmp(a.space(), b.space()) < 0;
  });
  return out;
}

std::vector<IdealHandle> enumerate_ideals(const AlgebraPtr& L,
                                          const EnumLimits& limits) {
  require_finite(*L);
  std::vector<IdealHandle> out;
  for (Subspace& s : enumerate_subspaces(L->field(), L->dim(), limits))
    if (is_ideal(*L, s)) out.emplace_back(L, std::move(s), true);
  return out;
}

namespace {

// shared scaffolding for the graded and non-graded prime tests
Verdict prime_by_definition(const IdealHandle& P,
                            const std::vector<IdealHandle>& all,
                            QuantifierVariant v) {
  const GradedLieAlgebra& L = P.algebra();
  Verdict out{true, Method::definition, v, std::nullopt, 0, false};
  for (const IdealHandle& I : all) {
    if (v.proper_only && !proper(I)) continue;
    for (const IdealHandle& J : all) {
      if (v.proper_only && !proper(J)) continue;
      ++out.instances;
      if (!bracket_inside(L, I.space().rows(), J.space().rows(), P.space()))
        continue;
      if (P.space().contains(I.space()) || P.space().contains(J.space())) continue;
      out.holds = false;
      out.witness = pair_witness("I", I.space(), "J", J.space());
      return out;
    }
  }
  out.vacuous = out.instances == 0;
  return out;
}

Verdict prime_by_element(const IdealHandle& P, const std::vector<Vector>& elems,
                         QuantifierVariant v) {
  const GradedLieAlgebra& L = P.algebra();
  const AlgebraPtr& A = P.algebra_ptr();
  Verdict out{true, Method::element, v, std::nullopt, 0, false};

  std::vector<Subspace> gen;
  std::vector<bool> in_domain(elems.size(), true);
  gen.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<Vector> one{elems[i]};
    gen.push_back(generated_ideal(A, one).space());
    if (v.proper_only && gen.back().dim() == L.dim()) in_domain[i] = false;
  }

  for (std::size_t xi = 0; xi < elems.size(); ++xi) {
    if (!in_domain[xi]) continue;
    for (std::size_t yi = 0; yi < elems.size(); ++yi) {
      if (!in_domain[yi]) continue;
      ++out.instances;
      if (!bracket_inside(L, {elems[xi]}, gen[yi].rows(), P.space())) continue;
      if (P.space().contains(elems[xi]) || P.space().contains(elems[yi])) continue;
      out.holds = false;
      out.witness = vec_pair_witness("x", elems[xi], "y", elems[yi]);
      return out;
    }
  }
  out.vacuous = out.instances == 0;
  return out;
}

}  // namespace

Verdict is_graded_prime(const IdealHandle& P, Method m, QuantifierVariant v,
                        const EnumLimits& limits) {
  require_finite(P.algebra());
  require_graded_ideal(P);
  switch (m) {
    case Method::definition:
      return prime_by_definition(P, enumerate_graded_ideals(P.algebra_ptr(), limits), v);
    case Method::element:
      return prime_by_element(P, homogeneous_elements(P.algebra(), limits), v);
    case Method::colon: {
      Verdict out{true, Method::colon, v, std::nullopt, 0, false};
      for (const Vector& x : homogeneous_elements(P.algebra(), limits)) {
        if (P.space().contains(x)) continue;
        ++out.instances;
        IdealHandle c = colon(P, x);
        if (c.space() == P.space()) continue;
        out.holds = false;
        Witness w;
        w.items.push_back({"x", x});
        w.items.push_back({"colon(P:x)", c.space()});
        out.witness = std::move(w);
        return out;
      }
      out.vacuous = out.instances == 0;
      return out;
    }
    default:
      throw std::invalid_argument("unsupported method for is_graded_prime");
  }
}

Verdict is_prime_nongraded(const IdealHandle& P, Method m, QuantifierVariant v,
                           const EnumLimits& limits) {
  require_finite(P.algebra());
  if (!P.is_ideal()) throw std::invalid_argument("the tested subspace is not an ideal");
  switch (m) {
    case Method::definition:
      return prime_by_definition(P, enumerate_ideals(P.algebra_ptr(), limits), v);
    case Method::element:
      return prime_by_element(
          P, enumerate_nonzero_vectors(P.algebra().field(), P.algebra().dim(), limits),
          v);
    default:
      throw std::invalid_argument("unsupported method for is_prime_nongraded");
  }
}

Verdict is_semiprime(const IdealHandle& Q, Method m, QuantifierVariant v,
                     const EnumLimits& limits) {
  require_finite(Q.algebra());
  require_graded_ideal(Q);
  const GradedLieAlgebra& L = Q.algebra();
  const AlgebraPtr& A = Q.algebra_ptr();

  if (m == Method::definition) {
    Verdict out{true, m, v, std::nullopt, 0, false};
    for (const IdealHandle& H : enumerate_graded_ideals(A, limits)) {
      if (v.proper_only && !proper(H)) continue;
      ++out.instances;
      if (!bracket_inside(L, H.space().rows(), H.space().rows(), Q.space())) continue;
      if (Q.space().contains(H.space())) continue;
      out.holds = false;
      Witness w;
      w.items.push_back({"H", H.space()});
      out.witness = std::move(w);
      return out;
    }
    out.vacuous = out.instances == 0;
    return out;
  }
  if (m == Method::element) {
    Verdict out{true, m, v, std::nullopt, 0, false};
    for (const Vector& x : homogeneous_elements(L, limits)) {
      std::vector<Vector> one{x};
      Subspace gx = generated_ideal(A, one).space();
      if (v.proper_only && gx.dim() == L.dim()) continue;
      ++out.instances;
      if (!bracket_inside(L, gx.rows(), gx.rows(), Q.space())) continue;
      if (Q.space().contains(x)) continue;
      out.holds = false;
      Witness w;
      w.items.push_back({"x", x});
      out.witness = std::move(w);
      return out;
    }
    out.vacuous = out.instances == 0;
    return out;
  }
  throw std::invalid_argument("unsupported method for is_semiprime");
}

Verdict is_graded_irreducible(const IdealHandle& N, QuantifierVariant v,
                              const EnumLimits& limits) {
  require_finite(N.algebra());
  require_graded_ideal(N);
  Verdict out{true, Method::meet, v, std::nullopt, 0, false};
  std::vector<IdealHandle> all = enumerate_graded_ideals(N.algebra_ptr(), limits);
  for (const IdealHandle& H : all) {
    if (v.proper_only && !proper(H)) continue;
    for (const IdealHandle& K : all) {
      if (v.proper_only && !proper(K)) continue;
      ++out.instances;
      if (!(meet(H.space(), K.space()) == N.space())) continue;
      if (H.space() == N.space() || K.space() == N.space()) continue;
      out.holds = false;
      out.witness = pair_witness("H", H.space(), "K", K.space());
      return out;
    }
  }
  out.vacuous = out.instances == 0;
  return out;
}

Verdict is_total_prime(const IdealHandle& P, Method m, const EnumLimits& limits) {
  require_finite(P.algebra());
  require_graded_ideal(P);
  const GradedLieAlgebra& L = P.algebra();
  const AlgebraPtr& A = P.algebra_ptr();
  std::vector<Vector> elems = homogeneous_elements(L, limits);

  if (m == Method::definition) {
    Verdict out{true, m, QuantifierVariant::literal(), std::nullopt, 0, false};
    for (const Vector& x : elems)
      for (const Vector& y : elems) {
        ++out.instances;
        if (!P.space().contains(L.bracket(x, y))) continue;
        if (P.space().contains(x) || P.space().contains(y)) continue;
        out.holds = false;
        out.witness = vec_pair_witness("x", x, "y", y);
        return out;
      }
    out.vacuous = out.instances == 0;
    return out;
  }
  if (m == Method::generated) {
    Verdict out{true, m, QuantifierVariant::literal(), std::nullopt, 0, false};
    std::vector<Subspace> gen;
    gen.reserve(elems.size());
    for (const Vector& x : elems) {
      std::vector<Vector> one{x};
      gen.push_back(generated_ideal(A, one).space());
    }
    for (std::size_t xi = 0; xi < elems.size(); ++xi)
      for (std::size_t yi = 0; yi < elems.size(); ++yi) {
        ++out.instances;
        std::vector<Vector> one{L.bracket(elems[xi], elems[yi])};
        if (!P.space().contains(generated_ideal(A, one).space())) continue;
        if (P.space().contains(gen[xi]) || P.space().contains(gen[yi])) continue;
        out.holds = false;
        out.witness = vec_pair_witness("x", elems[xi], "y", elems[yi]);
        return out;
      }
    out.vacuous = out.instances == 0;
    return out;
  }
  throw std::invalid_argument("unsupported method for is_total_prime");
}

Verdict complement_mult_closed(const IdealHandle& P, const EnumLimits& limits) {
  require_finite(P.algebra());
  require_graded_ideal(P);
  const GradedLieAlgebra& L = P.algebra();
  Verdict out{true, Method::complement, QuantifierVariant::literal(), std::nullopt,
              0, false};
  std::vector<Vector> s;
  for (const Vector& x : homogeneous_elements(L, limits))
    if (!P.space().contains(x)) s.push_back(x);
  if (s.empty()) {
    out.vacuous = true;  // S empty: reported closed, flagged
    return out;
  }
  for (const Vector& x : s)
    for (const Vector& y : s) {
      ++out.instances;
      Vector w = L.bracket(x, y);
      // membership in S: nonzero, homogeneous (automatic), outside P
      if (!is_zero(w) && !P.space().contains(w)) continue;
      out.holds = false;
      out.witness = vec_pair_witness("x", x, "y", y);
      return out;
    }
  return out;
}

IdealHandle image_ideal(const GradedHom& phi, const IdealHandle& I) {
  if (phi.source_ptr() != I.algebra_ptr() && !(phi.source() == I.algebra()))
    throw std::invalid_argument("ideal does not live in the hom source");
  std::vector<Vector> rows;
  for (const Vector& r : I.space().rows()) rows.push_back(phi.apply(r));
  Subspace s = Subspace::span(phi.target().field(), phi.target().dim(), rows);
  return IdealHandle(phi.target_ptr(), std::move(s));
}

IdealHandle preimage_ideal(const GradedHom& phi, const IdealHandle& I_target) {
  if (phi.target_ptr() != I_target.algebra_ptr() &&
      !(phi.target() == I_target.algebra()))
    throw std::invalid_argument("ideal does not live in the hom target");
  const FieldSpec& f = phi.source().field();
  const int n = phi.source().dim();
  const int m = phi.target().dim();
  std::vector<Vector> reduced;  // phi(e_j) mod I'
  for (int j = 0; j < n; ++j)
    reduced.push_back(I_target.space().reduce(phi.columns()[j]));
  std::vector<Vector> constraints;
  for (int c = 0; c < m; ++c) {
    Vector row = zero_vector(f, n);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      row[j] = reduced[j][c];
      nonzero = nonzero || !row[j].is_zero();
    }
    if (nonzero) constraints.push_back(std::move(row));
  }
  return IdealHandle(phi.source_ptr(), kernel(f, n, constraints));
}

IdealHandle kernel_ideal(const GradedHom& phi) {
  return IdealHandle(phi.source_ptr(), phi.kernel_space());
}

IdentityRestriction restrict_identity(const IdealHandle& P) {
  if (!P.is_ideal()) throw std::invalid_argument("restriction requires an ideal");
  const GradedLieAlgebra& L = P.algebra();
  IdentityComponent comp = identity_component(L);
  const FieldSpec& f = L.field();

  std::vector<Vector> embed;
  for (int i : comp.source_index) {
    Vector v = zero_vector(f, L.dim());
    v[i] = f.one();
    embed.push_back(std::move(v));
  }
  Subspace le = Subspace::span(f, L.dim(), embed);
  Subspace pe = meet(P.space(), le);

  // rewrite in L_e coordinates; rows are supported on the component indices
  std::vector<Vector> rows;
  for (const Vector& r : pe.rows()) {
    Vector v = zero_vector(f, comp.algebra->dim());
    for (std::size_t t = 0; t < comp.source_index.size(); ++t)
      v[t] = r[comp.source_index[t]];
    rows.push_back(std::move(v));
  }
  Subspace restricted = Subspace::span(f, comp.algebra->dim(), rows);
  IdealHandle handle(comp.algebra, std::move(restricted));
  return IdentityRestriction{std::move(comp), std::move(handle)};
}

}  // namespace glie
