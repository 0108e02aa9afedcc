#pragma once

#include "hopfsmash/hopf.hpp"

namespace hopfsmash {

/// An invertible matrix verified to commute with every structure map of
/// its algebra, together with its multiplicative order.  Construct through
/// verify_automorphism or identity_automorphism.
class HopfAutomorphism {
public:
  const HopfPtr& algebra() const { return algebra_; }
  const ExactMatrix& matrix() const { return matrix_; }
  unsigned order() const { return order_; }

  ExactVector apply(const ExactVector& v) const { return matrix_ * v; }
  /// tau^e for any integer e, reduced modulo the order.
  HopfAutomorphism power(long e) const;
  HopfAutomorphism inverse() const { return power(-1); }

private:
  friend HopfAutomorphism verify_automorphism(const HopfPtr& h, const ExactMatrix& m,
                                              unsigned order_cap);
  HopfAutomorphism(HopfPtr alg, ExactMatrix m, unsigned order);

  HopfPtr algebra_;
  ExactMatrix matrix_;
  unsigned order_;
};

/// Checks that m is bijective, fixes the unit, preserves the counit, and
/// commutes with multiplication and comultiplication on all basis pairs;
/// computes the multiplicative order.  Throws VerificationError naming the
/// violated identity, or when no order is found up to order_cap.
HopfAutomorphism verify_automorphism(const HopfPtr& h, const ExactMatrix& m,
                                     unsigned order_cap = 1000);

HopfAutomorphism identity_automorphism(const HopfPtr& h);

/// Search outcome for (twisted) exponents.  The search is bounded because
/// non-semisimple algebras can have infinite exponent.
struct ExponentResult {
  bool found;
  unsigned value;          // the exponent when found
  unsigned bound;          // highest n examined
  bool antipode_warning;   // S^2 != id, where the untwisted definition is shaky

  std::string str() const;
};

/// Default search bound: 16 * dim * order(tau).
unsigned default_exponent_bound(const FiniteHopfAlgebra& h, unsigned tau_order);

/// x^[n] = x1 x2 ... xn (apply delta n-1 times, multiply everything).
Element hopf_power(const Element& x, unsigned n);

/// x^[n,tau] = sum x1 (tau.x2) (tau^2.x3) ... (tau^{n-1}.xn).
/// Requires order(tau) | n.
Element twisted_power(const Element& x, unsigned n, const HopfAutomorphism& tau);

/// Matrix of x -> x^[n,tau], built by the convolution recurrence
/// Q1 = id, Q_{k+1} = Q_k * tau^k.  Requires order(tau) | n.
LinearEndo twisted_power_endo(const HopfPtr& h, unsigned n, const HopfAutomorphism& tau);

/// Same recurrence on a raw matrix, without the order-divisibility guard.
/// Needed where twisting matrices arise whose order does not divide n
/// (the smash power formula sums over all group elements).
ExactMatrix twisted_power_matrix(const FiniteHopfAlgebra& h, unsigned n, const ExactMatrix& tau);

/// Smallest n <= bound with Q_n = u eps, untwisted.
ExponentResult exponent(const HopfPtr& h, unsigned bound);

/// Searches n over multiples of order(tau) up to bound.
ExponentResult twisted_exponent(const HopfPtr& h, const HopfAutomorphism& tau, unsigned bound);

/// For every m coprime to order(tau), compares exp_{tau^m} with exp_tau.
/// A disagreement is evidence against the open question, reported but
/// never thrown; bound exhaustion makes the comparison inconclusive.
struct CoprimeExperiment {
  unsigned tau_order;
  ExponentResult base;
  std::vector<std::pair<unsigned, ExponentResult>> powers;  // (m, exp_{tau^m})
  bool all_agree;
  bool inconclusive;
};
CoprimeExperiment coprime_power_experiment(const HopfPtr& h, const HopfAutomorphism& tau,
                                           unsigned bound);

}  // namespace hopfsmash
