#ifndef GLIE_ALGEBRA_HPP
#define GLIE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glie/subspace.hpp"

namespace glie {

/// Degree values: integer tuples with the torsion coordinates reduced.
struct Degree {
  std::vector<std::int64_t> coords;
  bool operator==(const Degree&) const = default;
  auto operator<=>(const Degree&) const = default;
  std::string str() const;
};

/// Finitely generated abelian grading group Z^r (+) Z/m_1 (+) ... (+) Z/m_s.
class AbelianGroup {
 public:
  AbelianGroup(int free_rank, std::vector<std::int64_t> torsion);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  int arity() const { return free_rank_ + static_cast<int>(torsion_.size()); }

  Degree identity() const;
  Degree reduce(Degree d) const;
  Degree add(const Degree& a, const Degree& b) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  int free_rank_;
  std::vector<std::int64_t> torsion_;
};

enum class Axiom { alternating, jacobi, grading };

struct Violation {
  Axiom axiom;
  int i, j, k;  // offending basis indices; k = -1 when not applicable
  Vector residual;
  std::string str() const;
};

/// A finite-dimensional G-graded Lie algebra presented by structure
/// constants on a homogeneous basis: each basis vector carries one degree,
/// and the table stores [e_i, e_j] for i < j only ([e_j, e_i] and the
/// diagonal follow from alternation).
class GradedLieAlgebra {
 public:
  struct TableEntry {
    int i, j;
    std::map<int, Scalar> coeffs;  // target index -> coefficient
    bool operator==(const TableEntry&) const = default;
  };

  GradedLieAlgebra(std::string name, FieldSpec field, AbelianGroup group,
                   std::vector<std::string> basis_names,
                   std::vector<Degree> degrees,
                   const std::vector<TableEntry>& brackets);

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  const AbelianGroup& group() const { return group_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const Degree& degree(int i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const { return degrees_; }

  /// Degrees with a nonzero component, in order of first appearance on the
  /// basis (the presentation order; used for all canonical enumerations).
  const std::vector<Degree>& support() const { return support_; }
  /// Basis indices of degree g (empty when g is outside the support).
  std::vector<int> component_indices(const Degree& g) const;

  const Vector& basis_bracket(int i, int j) const { return table_[i][j]; }
  Vector basis_vector(int i) const;

  /// Bilinear alternating extension of the structure table.
  Vector bracket(const Vector& v, const Vector& w) const;

  /// Nonzero homogeneous components of v keyed by degree; empty for v = 0.
  std::map<Degree, Vector> homogeneous_split(const Vector& v) const;
  bool is_homogeneous(const Vector& v) const;

  Subspace graded_component(const Degree& g) const;

  /// Structure-table entries with i < j and a nonzero bracket.
  std::vector<TableEntry> upper_entries() const;

  bool operator==(const GradedLieAlgebra&) const = default;

 private:
  std::string name_;
  FieldSpec field_;
  AbelianGroup group_;
  int dim_;
  std::vector<std::string> basis_names_;
  std::vector<Degree> degrees_;
  std::vector<Degree> support_;
  std::vector<std::vector<Vector>> table_;  // full n x n, antisymmetry filled in
};

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

/// Checks the alternating bookkeeping, the Jacobi identity on all basis
/// triples, and grading compatibility. Violations are data, not errors.
std::vector<Violation> validate(const GradedLieAlgebra& L);

/// The subalgebra L_e of degree-identity basis vectors, with the embedding
/// back into L recorded index by index.
struct IdentityComponent {
  AlgebraPtr algebra;
  std::vector<int> source_index;  // L_e basis position -> basis index in L
};
IdentityComponent identity_component(const GradedLieAlgebra& L);

/// A linear map between graded algebras that sends each source component
/// into a single target component and preserves brackets.
class GradedHom {
 public:
  GradedHom(AlgebraPtr source, AlgebraPtr target,
            std::map<Degree, Degree> degree_map, std::vector<Vector> columns);

  const GradedLieAlgebra& source() const { return *source_; }
  const GradedLieAlgebra& target() const { return *target_; }
  const AlgebraPtr& source_ptr() const { return source_; }
  const AlgebraPtr& target_ptr() const { return target_; }
  const std::map<Degree, Degree>& degree_map() const { return degree_map_; }
  const std::vector<Vector>& columns() const { return columns_; }

  Vector apply(const Vector& v) const;
  Subspace image() const;
  bool is_surjective() const;
  Subspace kernel_space() const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::map<Degree, Degree> degree_map_;
  std::vector<Vector> columns_;  // columns_[j] = image of source basis j
};

/// Structural checks for a GradedHom: gradedness of every column and
/// bracket preservation on all basis pairs. Empty list means valid.
std::vector<std::string> validate_hom(const GradedHom& phi);

/// Quotient by a graded ideal, on the coset basis of non-pivot columns of I,
/// plus the canonical projection. Throws if I is not a graded ideal.
struct Quotient {
  AlgebraPtr algebra;
  GradedHom projection;
};
Quotient quotient(const AlgebraPtr& L, const Subspace& ideal);

}  // namespace glie

#endif
