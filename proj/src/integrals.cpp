#include "hopfsmash/integrals.hpp"

#include <string>

namespace hopfsmash {

namespace {

// Kernel of the stacked system { M_i v = eps_i v }, one block per basis
// element; must be one-dimensional.
ExactVector integral_from_blocks(const FiniteHopfAlgebra& h, bool left) {
  const size_t d = h.dim();
  ExactMatrix stacked(h.field(), d * d, d);
  for (size_t i = 0; i < d; ++i) {
    ExactMatrix block = left ? h.left_mult_matrix(i) : h.right_mult_matrix(i);
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < d; ++c) stacked.at(i * d + r, c) = block.at(r, c);
      stacked.at(i * d + r, r) -= h.counit()[i];
    }
  }
  auto basis = kernel(stacked);
  if (basis.size() != 1)
    throw VerificationError("integral space of " + h.name() + " has dimension " +
                            std::to_string(basis.size()) + ", expected 1");
  return basis[0];
}

}  // namespace

Element left_integral(const HopfPtr& h) {
  return Element(h, integral_from_blocks(*h, true));
}

Element right_integral(const HopfPtr& h) {
  return Element(h, integral_from_blocks(*h, false));
}

ExactVector dual_integral(const HopfPtr& h, Side side) {
  // A right integral of h* satisfies lambda * f = f(1) lambda in h*, which
  // unfolds to sum lambda(x1) x2 = lambda(x) 1; so it is exactly the
  // right integral of dual(h), with the same scaling rule.  Likewise left.
  HopfPtr d = dual(*h);
  return side == Side::right ? integral_from_blocks(*d, false) : integral_from_blocks(*d, true);
}

IntegralPair normalize_pair(Element lambda_elt, ExactVector lambda_fn, Side elt_side,
                            Side fn_side) {
  FieldScalar pairing = lambda_fn.dot(lambda_elt.coords);
  if (pairing.is_zero())
    throw VerificationError("integral pairing lambda(Lambda) is zero for " +
                            lambda_elt.algebra->name());
  if (!pairing.is_one()) lambda_fn = lambda_fn * pairing.inverse();
  return IntegralPair{std::move(lambda_elt), std::move(lambda_fn), elt_side, fn_side};
}

bool is_semisimple(const HopfPtr& h) {
  Element lambda = left_integral(h);
  return !h->counit_apply(lambda.coords).is_zero();
}

Element normalized_integral(const HopfPtr& h) {
  Element lambda = left_integral(h);
  FieldScalar e = h->counit_apply(lambda.coords);
  if (e.is_zero())
    throw VerificationError(h->name() + " is not semisimple: eps(Lambda) = 0, "
                            "no normalized integral exists");
  if (!e.is_one()) lambda.coords = lambda.coords * e.inverse();
  return lambda;
}

}  // namespace hopfsmash
