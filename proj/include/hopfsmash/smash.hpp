#pragma once

#include "hopfsmash/group.hpp"
#include "hopfsmash/powers.hpp"

namespace hopfsmash {

/// A finite group acting on an algebra by verified Hopf automorphisms,
/// one per group element, compatible with the group law.
struct HopfAction {
  HopfPtr algebra;
  GroupTable group;
  std::vector<HopfAutomorphism> automorphisms;  // indexed by group element

  const HopfAutomorphism& aut(size_t x) const { return automorphisms[x]; }
  /// The matrix of x acting on coordinates.
  const ExactMatrix& matrix(size_t x) const { return automorphisms[x].matrix(); }
};

/// Verifies each matrix as a Hopf automorphism, then the action laws:
/// the identity element acts as the identity matrix and
/// matrix(x) * matrix(y) = matrix(xy).  Throws VerificationError naming
/// the element and the violated law.
HopfAction verify_action(const HopfPtr& a, const GroupTable& g,
                         const std::vector<ExactMatrix>& matrices);

/// The cyclic action of <tau> on its own algebra; the group is
/// cyclic_group(order(tau)) with element k acting as tau^k.
HopfAction cyclic_action(const HopfAutomorphism& tau);

/// The group algebra kG: basis indexed by G, every element group-like.
HopfPtr group_algebra(const GroupTable& g, const Field& field);

/// The dual k^G of functions on G: pointwise products p_x p_y = d_{x,y} p_x,
/// coproduct delta(p_x) = sum_y p_y (x) p_{y^-1 x}.
HopfPtr dual_group_algebra(const GroupTable& g, const Field& field);

/// The smash coproduct K built on basis elements a_i (x) p_x with the
/// tensor-product algebra structure and the action-twisted coproduct.
/// Flat index of (i, x) is x*dim(A) + i, so each group block is
/// contiguous.  Construction verifies all Hopf axioms once.
class SmashCoproduct {
public:
  explicit SmashCoproduct(HopfAction action);

  const HopfPtr& k() const { return k_; }
  const HopfAction& action() const { return action_; }
  const HopfPtr& base() const { return action_.algebra; }
  const GroupTable& group() const { return action_.group; }

  size_t flat_index(size_t i, size_t x) const { return x * base()->dim() + i; }
  std::pair<size_t, size_t> split_index(size_t flat) const {
    return {flat % base()->dim(), flat / base()->dim()};
  }

  /// The orthogonal idempotent 1_A (x) p_x.
  Element component_idempotent(size_t x) const;

  /// Lambda_A (x) p_1, recorded at construction; an integral of K.
  const Element& integral() const { return integral_; }

private:
  HopfAction action_;
  HopfPtr k_;
  Element integral_;
};

/// The dual-side construction on basis f_i (x) x: multiplication
/// (f # x)(h # y) = f . (x.h) # xy with (x.h)(a) = h(x^-1 . a), the
/// tensor-product coalgebra, antipode f # x -> x^-1 . S*(f) # x^-1.
/// Construction verifies all Hopf axioms once.
HopfPtr smash_product(const HopfAction& action);

/// Compares dual(smash coproduct) with the smash product entrywise under
/// the basis identification (a_i (x) p_x)* <-> a_i* # x.
StructureComparison smash_duality_check(const HopfAction& action);

}  // namespace hopfsmash
