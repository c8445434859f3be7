#ifndef GLIE_CLASSIFY_HPP
#define GLIE_CLASSIFY_HPP

#include "glie/ideal.hpp"

namespace glie {

/// Which characterization a decision procedure ran with.
enum class Method { definition, element, colon, generated, meet, complement };
std::string method_name(Method m);

/// The ideal quantifiers "for all (graded) ideals I, J" are ambiguous about
/// whether L itself is allowed. The literal reading includes it; the proper
/// variant excludes it, and correspondingly restricts element quantifiers to
/// elements whose generated ideal is proper (this is what keeps the
/// definition-form and element-form procedures equivalent).
struct QuantifierVariant {
  bool proper_only = false;
  static QuantifierVariant literal() { return {false}; }
  static QuantifierVariant proper() { return {true}; }
  const char* name() const { return proper_only ? "proper" : "literal"; }
  bool operator==(const QuantifierVariant&) const = default;
};

struct WitnessItem {
  std::string label;
  std::variant<Vector, Subspace, std::string> value;
};

/// Structured description of the first violation found, in canonical
/// enumeration order; substituting it back into the defining condition
/// reproduces the failure.
struct Witness {
  std::vector<WitnessItem> items;
  const WitnessItem* find(const std::string& label) const;
};

struct Verdict {
  bool holds;
  Method method;
  QuantifierVariant variant;
  std::optional<Witness> witness;  // present iff !holds
  long long instances = 0;         // quantifier tuples examined
  bool vacuous = false;            // the quantifier domain was empty
};

/// All nonzero homogeneous elements, component by component in the support's
/// presentation order, each component in canonical vector order.
std::vector<Vector> homogeneous_elements(const GradedLieAlgebra& L,
                                         const EnumLimits& limits = {});

/// Every graded ideal exactly once, assembled as products of per-component
/// subspaces and filtered for ideality; ordered by subspace_cmp.
std::vector<IdealHandle> enumerate_graded_ideals(const AlgebraPtr& L,
                                                 const EnumLimits& limits = {});

/// Every ideal (graded or not), by filtering the full subspace lattice.
std::vector<IdealHandle> enumerate_ideals(const AlgebraPtr& L,
                                          const EnumLimits& limits = {});

/// Graded-prime test. Methods: definition (ideal pairs), element
/// (homogeneous pairs through generated ideals), colon ((P:x) = P for all
/// homogeneous x outside P; the x quantifier ignores the variant).
Verdict is_graded_prime(const IdealHandle& P, Method m, QuantifierVariant v,
                        const EnumLimits& limits = {});

/// Non-graded prime test over the full ideal lattice / all nonzero vectors.
Verdict is_prime_nongraded(const IdealHandle& P, Method m, QuantifierVariant v,
                           const EnumLimits& limits = {});

/// Graded-semiprime test: derived ideal containment (definition) or the
/// generated-ideal element form.
Verdict is_semiprime(const IdealHandle& Q, Method m, QuantifierVariant v,
                     const EnumLimits& limits = {});

/// N is irreducible when N = H meet K forces N = H or N = K.
Verdict is_graded_irreducible(const IdealHandle& N, QuantifierVariant v,
                              const EnumLimits& limits = {});

/// Total-prime test over homogeneous pairs; quantifier variants do not
/// apply (restricting would empty the domain on simple algebras).
Verdict is_total_prime(const IdealHandle& P, Method m,
                       const EnumLimits& limits = {});

/// S = h(L) - h(P) closed under the bracket; an empty S counts as closed
/// and is reported through the vacuous flag.
Verdict complement_mult_closed(const IdealHandle& P,
                               const EnumLimits& limits = {});

/// Pushforward/pullback of ideals along a graded hom. Flags on the results
/// are computed on demand, never assumed, so the transport theorems stay
/// honestly checkable.
IdealHandle image_ideal(const GradedHom& phi, const IdealHandle& I);
IdealHandle preimage_ideal(const GradedHom& phi, const IdealHandle& I_target);
IdealHandle kernel_ideal(const GradedHom& phi);

/// L_e together with P_e = P meet L_e rewritten in L_e's coordinates.
struct IdentityRestriction {
  IdentityComponent component;
  IdealHandle restricted;
};
IdentityRestriction restrict_identity(const IdealHandle& P);

}  // namespace glie

#endif
