#ifndef GLIE_SUBSPACE_HPP
#define GLIE_SUBSPACE_HPP

#include <span>
#include <vector>

#include "glie/field.hpp"

namespace glie {

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);

/// Canonical vector order: coordinates compare with the highest basis index
/// most significant, so over F_p a vector orders by its little-endian base-p
/// value. Witness and enumeration order throughout the library derive from
/// this comparison.
int vector_cmp(const Vector& a, const Vector& b);

Vector zero_vector(const FieldSpec& f, int n);
Vector scaled(const FieldSpec& f, const Vector& v, const Scalar& c);
Vector vec_add(const FieldSpec& f, const Vector& a, const Vector& b);
Vector vec_sub(const FieldSpec& f, const Vector& a, const Vector& b);
// a += c * b
void axpy(const FieldSpec& f, Vector& a, const Scalar& c, const Vector& b);

/// Enumeration guards; defaults match the library-wide caps.
struct EnumLimits {
  int max_dim = 6;
  long long max_count = 100000;
};

/// A subspace of F^n held as its reduced row-echelon basis. The matrix is
/// canonical: two Subspace values over the same field and ambient are equal
/// as sets of vectors iff their row matrices are identical.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, int ambient_dim);
  static Subspace full(const FieldSpec& f, int ambient_dim);
  /// Canonical span of arbitrary generators; the empty list spans zero.
  static Subspace span(const FieldSpec& f, int ambient_dim,
                       std::span<const Vector> generators);

  const FieldSpec& field() const { return field_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool is_zero_space() const { return rows_.empty(); }
  bool is_full_space() const { return dim() == ambient_; }

  /// Subtracts off the row basis; the result is zero iff v is a member,
  /// and in general is the canonical coset representative of v.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(FieldSpec f, int ambient) : field_(std::move(f)), ambient_(ambient) {}
  FieldSpec field_;
  int ambient_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

/// Global subspace order: ascending dimension, then row-wise vector_cmp.
int subspace_cmp(const Subspace& a, const Subspace& b);

Subspace join(const Subspace& s, const Subspace& t);
Subspace meet(const Subspace& s, const Subspace& t);

/// Solution space of the homogeneous system (one constraint row per entry).
Subspace kernel(const FieldSpec& f, int unknowns,
                const std::vector<Vector>& constraints);

/// In-place Gauss-Jordan reduction; drops zero rows, returns pivot columns.
std::vector<int> rref(const FieldSpec& f, std::vector<Vector>& rows);

/// Number of k-dimensional subspaces of F_p^n (Gaussian binomial).
long long gaussian_binomial(std::int64_t p, int n, int k);
/// Total number of subspaces of F_p^n.
long long subspace_count(std::int64_t p, int n);

/// Every subspace of F_p^n exactly once, ordered by subspace_cmp
/// (ascending dimension, lexicographic on the canonical row matrices).
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int ambient_dim,
                                          const EnumLimits& limits = {});

/// All p^n - 1 nonzero coordinate tuples in canonical vector order.
std::vector<Vector> enumerate_nonzero_vectors(const FieldSpec& f, int dim,
                                              const EnumLimits& limits = {});

}  // namespace glie

#endif
