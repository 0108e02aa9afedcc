#pragma once

#include "hopfsmash/smash.hpp"

namespace hopfsmash {

/// An exact matrix representation: an algebra map into rank x rank
/// matrices, stored as one matrix per basis element.  Construct through
/// verify_representation or the builders below; every path checks
/// unitality and multiplicativity exhaustively, so a held Representation
/// is always genuine.
class Representation {
public:
  const HopfPtr& algebra() const { return algebra_; }
  size_t rank() const { return rank_; }
  const std::vector<ExactMatrix>& matrices() const { return matrices_; }
  const ExactMatrix& matrix(size_t i) const { return matrices_[i]; }

  /// rho extended linearly to an element given by coordinates.
  ExactMatrix apply(const ExactVector& coords) const;

  /// The character as a covector: entry i is Tr rho(b_i).
  ExactVector character() const;

private:
  friend Representation verify_representation(const HopfPtr& h,
                                              const std::vector<ExactMatrix>& matrices);
  Representation(HopfPtr alg, size_t rank, std::vector<ExactMatrix> mats);

  HopfPtr algebra_;
  size_t rank_;
  std::vector<ExactMatrix> matrices_;
};

/// Checks one square matrix per basis element, rho(1) = I, and
/// rho(b_i) rho(b_j) = rho(b_i b_j) for every basis pair; a failure
/// names the violated product.
Representation verify_representation(const HopfPtr& h, const std::vector<ExactMatrix>& matrices);

/// Tr rho(x).
FieldScalar character(const Representation& rho, const Element& x);

/// b -> eps(b), the one-dimensional trivial module.
Representation trivial_rep(const HopfPtr& h);

/// The algebra acting on itself by left multiplication.
Representation regular_rep(const HopfPtr& h);

Representation direct_sum(const Representation& a, const Representation& b);

/// Module structure on the tensor product through the coproduct:
/// rho(b) = sum rho1(b1) (x) rho2(b2).
Representation tensor_rep(const Representation& r1, const Representation& r2);

/// Dual module through the antipode: rho*(b) = rho(S(b))^T.
Representation dual_rep(const Representation& r);

/// The twist of rho by a group element y of the action:
/// rho'(a) = rho(y^-1 . a).
Representation twist_rep(const Representation& r, const HopfAction& action, size_t y);

/// One piece of the group grading of a module over a smash coproduct:
/// the image of the idempotent rho(1 (x) p_x), an exact basis for it
/// (columns, echelon-normalized, deterministic), and the base-algebra
/// action written in that basis.
struct GradedComponent {
  size_t element;
  ExactMatrix basis;
  Representation on_base;
};

struct GradedDecomposition {
  std::vector<GradedComponent> components;  // one per group element, in index order

  size_t nonzero_count() const;
  /// The unique degree carrying the whole module, if there is one.
  std::optional<size_t> single_degree() const;
};

/// Splits a module over the smash coproduct along the idempotents
/// 1 (x) p_x.  Verifies the projector family is orthogonal, idempotent
/// and complete, and that component dimensions sum to the rank.
GradedDecomposition decompose_by_group(const SmashCoproduct& k, const Representation& rho);

/// The module over the smash coproduct concentrated in degree x:
/// rho(a (x) p_y) = delta_{y,x} rho_N(a).
Representation extend_to_smash(const SmashCoproduct& k, const Representation& n, size_t x);

/// The base algebra acting through its embedding a -> sum_y a (x) p_y.
Representation restrict_to_base(const SmashCoproduct& k, const Representation& rho);

/// Outcome of the graded tensor/dual verification for two single-degree
/// modules M (degree y) and N (degree z): the tensor module must sit
/// entirely in degree yz and equal, matrix for matrix, the extension of
/// (M|A) (x) (N|A twisted by y); the dual of M must sit in degree y^-1
/// and equal the extension of the y^-1-twist of (M|A)*.
struct GradedCheckReport {
  size_t tensor_degree;
  bool tensor_concentrated;
  bool tensor_matches;
  size_t dual_degree;
  bool dual_concentrated;
  bool dual_matches;

  bool all_pass() const;
  std::string summary() const;
};

/// Throws std::invalid_argument unless both modules are concentrated in a
/// single degree; split multi-degree modules with decompose_by_group and
/// extend_to_smash first.
GradedCheckReport graded_tensor_dual_check(const SmashCoproduct& k, const Representation& m,
                                           const Representation& n);

}  // namespace hopfsmash
