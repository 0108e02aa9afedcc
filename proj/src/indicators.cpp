#include "hopfsmash/indicators.hpp"

#include <sstream>

namespace hopfsmash {

LinearEndo p_map(const HopfPtr& h, unsigned m, const HopfAutomorphism& tau) {
  if (tau.algebra() != h) throw std::invalid_argument("twist belongs to a different algebra");
  if (m == 0 || m % tau.order() != 0)
    throw std::invalid_argument("P map needs m a positive multiple of order(tau) = " +
                                std::to_string(tau.order()));
  if (m == 1) return LinearEndo(h, h->convolution_unit());
  ExactMatrix p = tau.power(long(m) - 1).matrix();
  for (long e = long(m) - 2; e >= 1; --e) p = convolve(*h, p, tau.power(e).matrix());
  return LinearEndo(h, p);
}

IndicatorValue regular_twisted_indicator(const HopfPtr& h, unsigned m,
                                         const HopfAutomorphism& tau) {
  if (tau.algebra() != h) throw std::invalid_argument("twist belongs to a different algebra");
  if (m == 0 || m % tau.order() != 0)
    throw std::invalid_argument("indicator needs m a positive multiple of order(tau) = " +
                                std::to_string(tau.order()));

  IndicatorValue out{FieldScalar(h->field()), {}};

  // Trace of S composed with the P map.
  out.value = trace(h->antipode() * p_map(h, m, tau).matrix);
  out.methods.push_back("trace(S.P)");

  const ExactMatrix q_tau = twisted_power_matrix(*h, m, tau.matrix());
  auto record = [&](const FieldScalar& v, const char* tag) {
    if (v != out.value)
      throw std::logic_error(std::string("indicator formulas disagree: trace(S.P) = ") +
                             out.value.str() + " but " + tag + " = " + v.str());
    out.methods.push_back(tag);
  };

  {
    IntegralPair p =
        normalize_pair(left_integral(h), dual_integral(h, Side::right), Side::left, Side::right);
    ExactVector s_lambda = h->antipode_apply(p.integral.coords);
    record(p.functional.dot(q_tau * s_lambda), "pair(S(Lambda)^[m,tau])");
  }
  {
    IntegralPair p = normalize_pair(right_integral(h), dual_integral(h, Side::right),
                                    Side::right, Side::right);
    record(p.functional.dot(q_tau * p.integral.coords), "pair(Lambda_r^[m,tau])");
  }
  {
    IntegralPair p =
        normalize_pair(left_integral(h), dual_integral(h, Side::left), Side::left, Side::left);
    HopfAutomorphism tau_inv = tau.inverse();
    ExactVector powered = twisted_power_matrix(*h, m, tau_inv.matrix()) * p.integral.coords;
    record(p.functional.dot(tau_inv.apply(powered)), "pair(tau^-1.Lambda_l^[m,tau^-1])");
  }
  return out;
}

IndicatorValue module_indicator(const Representation& rho, unsigned m) {
  Element lambda = normalized_integral(rho.algebra());
  FieldScalar v = character(rho, hopf_power(lambda, m));
  return IndicatorValue{v, {"chi(Lambda^[m])"}};
}

IndicatorValue twisted_module_indicator(const Representation& rho, unsigned m,
                                        const HopfAutomorphism& x) {
  if (x.algebra() != rho.algebra())
    throw std::invalid_argument("twist belongs to a different algebra");
  Element lambda = normalized_integral(rho.algebra());
  FieldScalar v = character(rho, twisted_power(lambda, m, x));
  return IndicatorValue{v, {"chi(Lambda^[m,x])"}};
}

IndicatorSumCheck module_indicator_sum_check(const SmashCoproduct& k, const Representation& rho,
                                             unsigned m) {
  IndicatorValue lhs = module_indicator(rho, m);

  GradedDecomposition parts = decompose_by_group(k, rho);
  const GroupTable& g = k.group();
  FieldScalar rhs(k.k()->field());
  std::ostringstream detail;
  detail << "nu_" << m << "(M) = " << lhs.value.str() << "; components:";
  for (size_t x = 0; x < g.order(); ++x) {
    if (g.power(x, m) != g.identity()) continue;
    IndicatorValue term =
        twisted_module_indicator(parts.components[x].on_base, m, k.action().aut(g.inv(x)));
    rhs += term.value;
    detail << " [x=" << x << ", dim " << parts.components[x].on_base.rank() << ": "
           << term.value.str() << "]";
  }
  return IndicatorSumCheck{lhs.value, rhs, lhs.value == rhs, detail.str()};
}

IndicatorSumCheck regular_indicator_sum_check(const HopfAction& action, unsigned m) {
  SmashCoproduct k(action);
  IndicatorValue lhs = regular_twisted_indicator(k.k(), m, identity_automorphism(k.k()));

  const GroupTable& g = action.group;
  FieldScalar rhs(k.k()->field());
  std::ostringstream detail;
  detail << "nu_" << m << "(K) = " << lhs.value.str() << "; base terms:";
  for (size_t x = 0; x < g.order(); ++x) {
    if (g.power(x, m) != g.identity()) continue;
    IndicatorValue term = regular_twisted_indicator(action.algebra, m, action.aut(x));
    rhs += term.value;
    detail << " [g=" << x << ": " << term.value.str() << "]";
  }
  return IndicatorSumCheck{lhs.value, rhs, lhs.value == rhs, detail.str()};
}

}  // namespace hopfsmash
