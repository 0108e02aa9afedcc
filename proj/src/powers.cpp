#include "hopfsmash/powers.hpp"

#include <numeric>
#include <sstream>

namespace hopfsmash {

HopfAutomorphism::HopfAutomorphism(HopfPtr alg, ExactMatrix m, unsigned order)
    : algebra_(std::move(alg)), matrix_(std::move(m)), order_(order) {}

HopfAutomorphism HopfAutomorphism::power(long e) const {
  long r = e % long(order_);
  if (r < 0) r += order_;
  const unsigned rr = unsigned(r);
  unsigned ord = rr == 0 ? 1 : order_ / std::gcd(order_, rr);
  return HopfAutomorphism(algebra_, matrix_.pow(rr), ord);
}

HopfAutomorphism verify_automorphism(const HopfPtr& h, const ExactMatrix& m,
                                     unsigned order_cap) {
  const size_t d = h->dim();
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("automorphism matrix shape does not match dimension");
  if (!inverse(m).has_value())
    throw VerificationError("automorphism check failed on " + h->name() + ": not invertible");
  if (m * h->unit() != h->unit())
    throw VerificationError("automorphism check failed on " + h->name() +
                            ": does not fix the unit");
  if (m.transpose() * h->counit() != h->counit())
    throw VerificationError("automorphism check failed on " + h->name() +
                            ": does not preserve the counit");
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      ExactVector lhs = m * h->multiply(h->basis_vector(i), h->basis_vector(j));
      ExactVector rhs = h->multiply(m.col(i), m.col(j));
      if (lhs != rhs) {
        std::ostringstream why;
        why << "automorphism check failed on " << h->name()
            << ": not multiplicative at basis pair (" << i << ", " << j << ")";
        throw VerificationError(why.str());
      }
    }
  ExactMatrix mm = kron(m, m);
  for (size_t i = 0; i < d; ++i)
    if (h->comultiply(m.col(i)) != mm * h->comultiply(h->basis_vector(i))) {
      std::ostringstream why;
      why << "automorphism check failed on " << h->name()
          << ": does not commute with comultiplication at basis " << i;
      throw VerificationError(why.str());
    }
  ExactMatrix acc = m;
  for (unsigned r = 1; r <= order_cap; ++r) {
    if (acc.is_identity()) return HopfAutomorphism(h, m, r);
    acc = acc * m;
  }
  throw VerificationError("automorphism of " + h->name() + " has order beyond " +
                          std::to_string(order_cap));
}

HopfAutomorphism identity_automorphism(const HopfPtr& h) {
  return verify_automorphism(h, ExactMatrix::identity(h->field(), h->dim()));
}

std::string ExponentResult::str() const {
  std::ostringstream out;
  if (found)
    out << "Found(" << value << ")";
  else
    out << "NotFoundUpTo(" << bound << ")";
  if (antipode_warning) out << " [warning: S^2 != id, untwisted exponent may be undefined]";
  return out.str();
}

unsigned default_exponent_bound(const FiniteHopfAlgebra& h, unsigned tau_order) {
  return 16u * unsigned(h.dim()) * tau_order;
}

ExactMatrix twisted_power_matrix(const FiniteHopfAlgebra& h, unsigned n, const ExactMatrix& tau) {
  if (n == 0) throw std::invalid_argument("Hopf power needs n >= 1");
  ExactMatrix q = ExactMatrix::identity(h.field(), h.dim());
  ExactMatrix tau_k = tau;
  for (unsigned k = 1; k < n; ++k) {
    q = convolve(h, q, tau_k);
    if (k + 1 < n) tau_k = tau_k * tau;
  }
  return q;
}

LinearEndo twisted_power_endo(const HopfPtr& h, unsigned n, const HopfAutomorphism& tau) {
  if (n == 0 || n % tau.order() != 0)
    throw std::invalid_argument("twisted power needs n a positive multiple of order(tau) = " +
                                std::to_string(tau.order()));
  return LinearEndo(h, twisted_power_matrix(*h, n, tau.matrix()));
}

Element twisted_power(const Element& x, unsigned n, const HopfAutomorphism& tau) {
  LinearEndo q = twisted_power_endo(x.algebra, n, tau);
  return Element(x.algebra, q.matrix * x.coords);
}

Element hopf_power(const Element& x, unsigned n) {
  if (n == 0) throw std::invalid_argument("Hopf power needs n >= 1");
  ExactMatrix id = ExactMatrix::identity(x.algebra->field(), x.algebra->dim());
  return Element(x.algebra, twisted_power_matrix(*x.algebra, n, id) * x.coords);
}

namespace {

ExponentResult exponent_search(const HopfPtr& h, const ExactMatrix& tau, unsigned step,
                               unsigned bound) {
  ExponentResult res{false, 0, bound, !(h->antipode() * h->antipode()).is_identity()};
  ExactMatrix ue = h->convolution_unit();
  ExactMatrix q = ExactMatrix::identity(h->field(), h->dim());
  ExactMatrix tau_k = tau;
  for (unsigned n = 1; n <= bound; ++n) {
    // q holds Q_n here (Q_1 = id before the first update).
    if (n % step == 0 && q == ue) {
      res.found = true;
      res.value = n;
      return res;
    }
    if (n < bound) {
      q = convolve(*h, q, tau_k);
      tau_k = tau_k * tau;
    }
  }
  return res;
}

}  // namespace

ExponentResult exponent(const HopfPtr& h, unsigned bound) {
  return exponent_search(h, ExactMatrix::identity(h->field(), h->dim()), 1, bound);
}

ExponentResult twisted_exponent(const HopfPtr& h, const HopfAutomorphism& tau, unsigned bound) {
  return exponent_search(h, tau.matrix(), tau.order(), bound);
}

CoprimeExperiment coprime_power_experiment(const HopfPtr& h, const HopfAutomorphism& tau,
                                           unsigned bound) {
  CoprimeExperiment exp{tau.order(), twisted_exponent(h, tau, bound), {}, true, false};
  exp.inconclusive = !exp.base.found;
  for (unsigned m = 2; m < tau.order(); ++m) {
    if (std::gcd(m, tau.order()) != 1) continue;
    ExponentResult r = twisted_exponent(h, tau.power(m), bound);
    if (!r.found) exp.inconclusive = true;
    if (r.found && exp.base.found && r.value != exp.base.value) exp.all_agree = false;
    exp.powers.emplace_back(m, r);
  }
  return exp;
}

}  // namespace hopfsmash
