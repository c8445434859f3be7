#ifndef GLIE_IDEAL_HPP
#define GLIE_IDEAL_HPP

#include <atomic>
#include <optional>

#include "glie/algebra.hpp"

namespace glie {

/// A subspace of an algebra together with lazily cached ideal/gradedness
/// flags. The flags are write-once: concurrent recomputation is harmless
/// because the answer is a pure function of the immutable space.
class IdealHandle {
 public:
  IdealHandle(AlgebraPtr algebra, Subspace space,
              std::optional<bool> known_ideal = std::nullopt,
              std::optional<bool> known_graded = std::nullopt);

  IdealHandle(const IdealHandle& other);
  IdealHandle& operator=(const IdealHandle& other);

  const GradedLieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Subspace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  bool is_ideal() const;
  bool is_graded() const;

  bool operator==(const IdealHandle& other) const {
    return algebra_ == other.algebra_ && space_ == other.space_;
  }

 private:
  AlgebraPtr algebra_;
  Subspace space_;
  // -1 unknown, 0 false, 1 true
  mutable std::atomic<int> ideal_flag_;
  mutable std::atomic<int> graded_flag_;
};

/// [s, e_j] must stay in S for every basis row s and basis vector e_j;
/// sufficient by bilinearity.
bool is_ideal(const GradedLieAlgebra& L, const Subspace& s);

/// Every homogeneous component of every row must stay in S; equivalent to
/// S being the direct sum of its intersections with the L_g.
bool is_graded_subspace(const GradedLieAlgebra& L, const Subspace& s);

/// The smallest ideal containing the generators, by the accumulating
/// fixpoint W_{k+1} = W_k + [W_k, L]; reaches the fixpoint within dim(L)
/// joins. Flagged graded when every generator is homogeneous.
IdealHandle generated_ideal(const AlgebraPtr& L, std::span<const Vector> gens);

/// Like generated_ideal but also reports the number of join steps taken
/// until the iteration stabilized.
struct GeneratedTrace {
  IdealHandle ideal;
  int steps;
};
GeneratedTrace generated_ideal_trace(const AlgebraPtr& L, std::span<const Vector> gens);

/// Span of the pairwise brackets of basis rows. For ideals I, J this is
/// itself an ideal contained in meet(I, J), and graded when both are.
IdealHandle ideal_bracket(const IdealHandle& I, const IdealHandle& J);

/// Derived ideal [S, S] of an ideal.
IdealHandle derived_ideal(const IdealHandle& I);

/// (I : J) = {y : [y, w] in I for all w in J}. Requires I to be an ideal;
/// the result always contains I and is an ideal whenever J is one.
IdealHandle colon(const IdealHandle& I, const IdealHandle& J);

/// (I : x) = {y : [y, x] in I}. The solution set need not be an ideal for
/// a lone vector x, so the handle's ideal flag is computed, never assumed.
IdealHandle colon(const IdealHandle& I, const Vector& x);

}  // namespace glie

#endif
