#pragma once

#include "hopfsmash/integrals.hpp"
#include "hopfsmash/representations.hpp"

namespace hopfsmash {

/// An indicator value with tags for the formulas that produced it.
/// Every tagged formula was evaluated and agreed exactly; a disagreement
/// aborts with std::logic_error since it can only mean a bug.
struct IndicatorValue {
  FieldScalar value;
  std::vector<std::string> methods;
};

/// P_{m-1,tau} = tau^{m-1} * tau^{m-2} * ... * tau, a convolution product
/// of m-1 factors; the empty product P_0 is u eps.
/// Requires order(tau) | m.
LinearEndo p_map(const HopfPtr& h, unsigned m, const HopfAutomorphism& tau);

/// The regular twisted indicator nu_{m,tau}, evaluated through four
/// formulas asserted to agree: Tr(S o P_{m-1,tau}); lambda(S(Lambda)^[m,tau])
/// for a left integral Lambda and right dual integral lambda with
/// lambda(Lambda) = 1; the right/right pairing lambda_r(Lambda_r^[m,tau]);
/// and the left/left pairing lambda_l(tau^-1 . Lambda_l^[m,tau^-1]).
IndicatorValue regular_twisted_indicator(const HopfPtr& h, unsigned m,
                                         const HopfAutomorphism& tau);

/// chi at the m-th Hopf power of the normalized integral.  The algebra
/// must be semisimple (VerificationError otherwise).
IndicatorValue module_indicator(const Representation& rho, unsigned m);

/// chi at the twisted power of the normalized integral.
/// Requires order(x) | m and a semisimple algebra.
IndicatorValue twisted_module_indicator(const Representation& rho, unsigned m,
                                        const HopfAutomorphism& x);

/// A two-sided identity check; both sides computed by independent paths.
struct IndicatorSumCheck {
  FieldScalar lhs, rhs;
  bool equal;
  std::string detail;
};

/// Indicator of a module over the smash coproduct against its graded
/// components: nu_m(M) versus the sum over group elements x with x^m = 1
/// of the x^-1-twisted indicator of M_x over the base algebra.
IndicatorSumCheck module_indicator_sum_check(const SmashCoproduct& k, const Representation& rho,
                                             unsigned m);

/// Regular indicator of the smash coproduct against the base: nu_m(K)
/// versus the sum over g with g^m = 1 of nu_{m,g}(A).  Works for
/// non-semisimple bases; only integrals are needed.
IndicatorSumCheck regular_indicator_sum_check(const HopfAction& action, unsigned m);

}  // namespace hopfsmash
