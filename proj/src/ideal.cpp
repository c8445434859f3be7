#include "glie/ideal.hpp"

#include <cassert>

namespace glie {

namespace {

int flag_of(std::optional<bool> v) { return v ? (*v ? 1 : 0) : -1; }

}  // namespace

IdealHandle::IdealHandle(AlgebraPtr algebra, Subspace space,
                         std::optional<bool> known_ideal,
                         std::optional<bool> known_graded)
    : algebra_(std::move(algebra)),
      space_(std::move(space)),
      ideal_flag_(flag_of(known_ideal)),
      graded_flag_(flag_of(known_graded)) {
  if (space_.ambient_dim() != algebra_->dim() ||
      !(space_.field() == algebra_->field()))
    throw std::invalid_argument("subspace does not live in the algebra");
}

IdealHandle::IdealHandle(const IdealHandle& other)
    : algebra_(other.algebra_),
      space_(other.space_),
      ideal_flag_(other.ideal_flag_.load()),
      graded_flag_(other.graded_flag_.load()) {}

IdealHandle& IdealHandle::operator=(const IdealHandle& other) {
  algebra_ = other.algebra_;
  space_ = other.space_;
  ideal_flag_.store(other.ideal_flag_.load());
  graded_flag_.store(other.graded_flag_.load());
  return *this;
}

bool IdealHandle::is_ideal() const {
  int f = ideal_flag_.load();
  if (f < 0) {
    f = glie::is_ideal(*algebra_, space_) ? 1 : 0;
    ideal_flag_.store(f);
  }
  return f == 1;
}

bool IdealHandle::is_graded() const {
  int f = graded_flag_.load();
  if (f < 0) {
    f = glie::is_graded_subspace(*algebra_, space_) ? 1 : 0;
    graded_flag_.store(f);
  }
  return f == 1;
}

bool is_ideal(const GradedLieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim() || !(s.field() == L.field()))
    throw std::invalid_argument("subspace does not live in the algebra");
  for (const Vector& r : s.rows())
    for (int j = 0; j < L.dim(); ++j)
      if (!s.contains(L.bracket(r, L.basis_vector(j)))) return false;
  return true;
}

bool is_graded_subspace(const GradedLieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim() || !(s.field() == L.field()))
    throw std::invalid_argument("subspace does not live in the algebra");
  for (const Vector& r : s.rows())
    for (const auto& [g, part] : L.homogeneous_split(r))
      if (!s.contains(part)) return false;
  return true;
}

GeneratedTrace generated_ideal_trace(const AlgebraPtr& L,
                                     std::span<const Vector> gens) {
  const FieldSpec& f = L->field();
  Subspace w = Subspace::span(f, L->dim(), gens);
  bool homogeneous = true;
  for (const Vector& g : gens)
    if (!is_zero(g) && !L->is_homogeneous(g)) homogeneous = false;

  int steps = 0;
  while (true) {
    std::vector<Vector> next;
    for (const Vector& r : w.rows())
      for (int j = 0; j < L->dim(); ++j) {
        Vector b = L->bracket(r, L->basis_vector(j));
        if (!is_zero(b)) next.push_back(std::move(b));
      }
    Subspace grown = join(w, Subspace::span(f, L->dim(), next));
    if (grown == w) break;
    w = std::move(grown);
    ++steps;
  }

  IdealHandle out(L, std::move(w), true,
                  homogeneous ? std::optional<bool>(true) : std::nullopt);
  return GeneratedTrace{std::move(out), steps};
}

IdealHandle generated_ideal(const AlgebraPtr& L, std::span<const Vector> gens) {
  return generated_ideal_trace(L, gens).ideal;
}

IdealHandle ideal_bracket(const IdealHandle& I, const IdealHandle& J) {
  if (I.algebra_ptr() != J.algebra_ptr() && !(I.algebra() == J.algebra()))
    throw std::invalid_argument("ideal bracket across different algebras");
  if (!I.is_ideal() || !J.is_ideal())
    throw std::invalid_argument("ideal bracket requires ideals");
  const GradedLieAlgebra& L = I.algebra();
  std::vector<Vector> gens;
  for (const Vector& a : I.space().rows())
    for (const Vector& b : J.space().rows()) {
      Vector w = L.bracket(a, b);
      if (!is_zero(w)) gens.push_back(std::move(w));
    }
  Subspace s = Subspace::span(L.field(), L.dim(), gens);
  // an ideal by the Jacobi identity; graded when both inputs are
  std::optional<bool> graded;
  if (I.is_graded() && J.is_graded()) graded = true;
  return IdealHandle(I.algebra_ptr(), std::move(s), true, graded);
}

IdealHandle derived_ideal(const IdealHandle& I) { return ideal_bracket(I, I); }

namespace {

// {y : [y, w] in I for every w in gens}, as the kernel of the stacked
// maps y -> coset coordinates of [y, w] mod I
IdealHandle colon_by(const IdealHandle& I, std::span<const Vector> gens) {
  if (!I.is_ideal())
    throw std::invalid_argument("colon requires the left argument to be an ideal");
  const GradedLieAlgebra& L = I.algebra();
  const FieldSpec& f = L.field();
  const int n = L.dim();

  std::vector<Vector> constraints;
  for (const Vector& w : gens) {
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("colon vector length does not match the algebra");
    std::vector<Vector> cols;  // reduction of [e_j, w] mod I
    for (int j = 0; j < n; ++j)
      cols.push_back(I.space().reduce(L.bracket(L.basis_vector(j), w)));
    for (int c = 0; c < n; ++c) {
      Vector row = zero_vector(f, n);
      bool nonzero = false;
      for (int j = 0; j < n; ++j) {
        row[j] = cols[j][c];
        nonzero = nonzero || !row[j].is_zero();
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  }
  Subspace sol = kernel(f, n, constraints);
  assert(sol.contains(I.space()));
  return IdealHandle(I.algebra_ptr(), std::move(sol));
}

}  // namespace

IdealHandle colon(const IdealHandle& I, const IdealHandle& J) {
  if (I.algebra_ptr() != J.algebra_ptr() && !(I.algebra() == J.algebra()))
    throw std::invalid_argument("colon across different algebras");
  if (!J.is_ideal())
    throw std::invalid_argument("colon by a subspace requires an ideal");
  IdealHandle out = colon_by(I, J.space().rows());
  // (I : J) is an ideal when J is: for y in the colon and any l,
  // [[y,l],w] = [y,[l,w]] - [l,[y,w]] lands back in I
  return IdealHandle(I.algebra_ptr(), out.space(), true);
}

IdealHandle colon(const IdealHandle& I, const Vector& x) {
  std::vector<Vector> gens{x};
  return colon_by(I, gens);
}

}  // namespace glie
