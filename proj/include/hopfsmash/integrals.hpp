#pragma once

#include "hopfsmash/hopf.hpp"

namespace hopfsmash {

enum class Side { left, right };

/// An integral of the algebra together with an integral of its dual,
/// normalized so that the functional evaluates to 1 on the element.
struct IntegralPair {
  Element integral;        // Lambda
  ExactVector functional;  // lambda, coordinates on the dual basis
  Side integral_side;
  Side functional_side;
};

/// Nonzero Lambda with a*Lambda = eps(a)*Lambda for every a, computed as
/// the kernel of a stacked linear system and scaled so the first nonzero
/// coordinate is 1.  Throws VerificationError unless the solution space is
/// exactly one-dimensional.
Element left_integral(const HopfPtr& h);

/// Mirror image: Lambda*a = eps(a)*Lambda.
Element right_integral(const HopfPtr& h);

/// Integral of the dual Hopf algebra, returned as a covector on h.
/// Right side solves sum lambda(x1) x2 = lambda(x) 1; left side solves
/// sum x1 lambda(x2) = lambda(x) 1.  Same scaling rule as the integrals.
ExactVector dual_integral(const HopfPtr& h, Side side);

/// Rescales lambda (only) so that lambda(Lambda) = 1.  A zero pairing
/// violates nondegeneracy and throws VerificationError.
IntegralPair normalize_pair(Element lambda_elt, ExactVector lambda_fn, Side elt_side,
                            Side fn_side);

/// Larson-Sweedler in characteristic 0: semisimple iff eps(Lambda) != 0.
bool is_semisimple(const HopfPtr& h);

/// The integral scaled so eps(Lambda) = 1; throws VerificationError when
/// the algebra is not semisimple.
Element normalized_integral(const HopfPtr& h);

}  // namespace hopfsmash
