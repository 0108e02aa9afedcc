#include <doctest.h>

#include "hopfsmash/indicators.hpp"
#include "support/oracles.hpp"

using namespace hopfsmash;

namespace {

Field Q = FieldSpec::get(1);
Field Q3 = FieldSpec::get(3);

ExactMatrix cyclic_power_map(const Field& f, size_t n, size_t m) {
  ExactMatrix mat(f, n, n);
  for (size_t x = 0; x < n; ++x) mat.at((m * x) % n, x) = FieldScalar::one(f);
  return mat;
}

// The basis permutation g -> t g t^-1 on a group algebra.
ExactMatrix conjugation_map(const GroupTable& g, size_t t) {
  ExactMatrix mat(Q, g.order(), g.order());
  for (size_t x = 0; x < g.order(); ++x)
    mat.at(g.mul(g.mul(t, x), g.inv(t)), x) = FieldScalar::one(Q);
  return mat;
}

long root_count(const GroupTable& g, unsigned m) {
  long c = 0;
  for (size_t x = 0; x < g.order(); ++x)
    if (g.power(x, m) == g.identity()) ++c;
  return c;
}

// Independent route: nu_{m,tau} = lambda(S(Lambda)^[m,tau]) with the
// twisted power expanded naively instead of by convolution.
FieldScalar indicator_by_naive_power(const HopfPtr& h, unsigned m, const ExactMatrix& tau) {
  IntegralPair p =
      normalize_pair(left_integral(h), dual_integral(h, Side::right), Side::left, Side::right);
  ExactVector s_lambda = h->antipode_apply(p.integral.coords);
  return p.functional.dot(oracles::naive_twisted_power(*h, s_lambda, m, tau));
}

HopfAction inversion_action(const Field& f) {
  HopfPtr a = group_algebra(cyclic_group(3), f);
  return cyclic_action(verify_automorphism(a, cyclic_power_map(f, 3, 2)));
}

}  // namespace

TEST_CASE("P map boundary cases") {
  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  HopfAutomorphism id5 = identity_automorphism(c5);
  CHECK(p_map(c5, 1, id5).matrix == c5->convolution_unit());
  CHECK(p_map(c5, 2, id5).matrix.is_identity());
  // P_2(g) = g^2 for the identity twist.
  CHECK(p_map(c5, 3, id5).matrix.col(1) == c5->basis_vector(2));

  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  HopfAutomorphism inv3 = verify_automorphism(c3, cyclic_power_map(Q, 3, 2));
  CHECK_THROWS_AS((void)p_map(c3, 3, inv3), std::invalid_argument);
  CHECK_THROWS_AS((void)p_map(c3, 0, inv3), std::invalid_argument);
}

TEST_CASE("regular indicators of group algebras count roots of unity") {
  std::vector<GroupTable> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                    symmetric_group_3()};
  for (const GroupTable& g : groups) {
    HopfPtr h = group_algebra(g, Q);
    HopfAutomorphism id = identity_automorphism(h);
    for (unsigned m = 1; m <= 6; ++m) {
      IndicatorValue v = regular_twisted_indicator(h, m, id);
      CHECK(v.value == FieldScalar(Q, root_count(g, m)));
      CHECK(v.methods.size() == 4);
    }
  }
}

TEST_CASE("twisted regular indicators agree with the naive power route") {
  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  HopfAutomorphism inv3 = verify_automorphism(c3, cyclic_power_map(Q, 3, 2));
  for (unsigned m : {2u, 4u, 6u})
    CHECK(regular_twisted_indicator(c3, m, inv3).value ==
          indicator_by_naive_power(c3, m, inv3.matrix()));

  GroupTable s3 = symmetric_group_3();
  HopfPtr ks3 = group_algebra(s3, Q);
  HopfAutomorphism conj = verify_automorphism(ks3, conjugation_map(s3, 1));
  CHECK(conj.order() == 2);
  for (unsigned m : {2u, 4u})
    CHECK(regular_twisted_indicator(ks3, m, conj).value ==
          indicator_by_naive_power(ks3, m, conj.matrix()));

  // Function algebra with the automorphism induced by conjugation.
  HopfPtr fs3 = dual_group_algebra(s3, Q);
  HopfAutomorphism dconj = verify_automorphism(fs3, conjugation_map(s3, 1));
  for (unsigned m : {2u, 4u})
    CHECK(regular_twisted_indicator(fs3, m, dconj).value ==
          indicator_by_naive_power(fs3, m, dconj.matrix()));
}

TEST_CASE("trivial module has indicator one") {
  HopfPtr ks3 = group_algebra(symmetric_group_3(), Q);
  Representation triv = trivial_rep(ks3);
  for (unsigned m = 1; m <= 4; ++m)
    CHECK(module_indicator(triv, m).value == FieldScalar::one(Q));
}

TEST_CASE("regular module indicator equals the regular twisted indicator") {
  for (int which : {0, 1, 2}) {
    HopfPtr h = which == 0   ? group_algebra(symmetric_group_3(), Q)
                : which == 1 ? dual_group_algebra(symmetric_group_3(), Q)
                             : group_algebra(cyclic_group(4), Q);
    Representation reg = regular_rep(h);
    HopfAutomorphism id = identity_automorphism(h);
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(module_indicator(reg, m).value == regular_twisted_indicator(h, m, id).value);
  }
}

TEST_CASE("twisted module indicator at the regular module") {
  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  HopfAutomorphism inv3 = verify_automorphism(c3, cyclic_power_map(Q, 3, 2));
  Representation reg = regular_rep(c3);
  // Lambda^[2,tau] = 1 because every group-like meets its inverse.
  CHECK(twisted_module_indicator(reg, 2, inv3).value == FieldScalar(Q, 3));
  CHECK_THROWS_AS((void)twisted_module_indicator(reg, 3, inv3), std::invalid_argument);
}

TEST_CASE("module indicator sum rule on the smash coproduct") {
  SmashCoproduct k(inversion_action(Q));
  Representation reg = regular_rep(k.k());
  for (unsigned m : {1u, 2u, 3u, 6u}) {
    IndicatorSumCheck c = module_indicator_sum_check(k, reg, m);
    CHECK(c.equal);
  }
  Representation triv = trivial_rep(k.k());
  for (unsigned m : {1u, 2u, 5u}) {
    IndicatorSumCheck c = module_indicator_sum_check(k, triv, m);
    CHECK(c.equal);
    CHECK(c.lhs == FieldScalar::one(Q));
  }
}

TEST_CASE("module concentrated off the identity has vanishing low indicators") {
  SmashCoproduct k(inversion_action(Q3));
  std::vector<ExactMatrix> mats;
  for (size_t x = 0; x < 3; ++x) {
    ExactMatrix m(Q3, 1, 1);
    m.at(0, 0) = FieldScalar::root_power(Q3, x % 3);
    mats.push_back(m);
  }
  Representation m_deg1 = extend_to_smash(k, verify_representation(k.base(), mats), 1);

  IndicatorSumCheck c1 = module_indicator_sum_check(k, m_deg1, 1);
  CHECK(c1.equal);
  CHECK(c1.lhs.is_zero());  // degree element has order 2 > m = 1

  IndicatorSumCheck c2 = module_indicator_sum_check(k, m_deg1, 2);
  CHECK(c2.equal);
}

TEST_CASE("regular indicator sum rule across the action") {
  HopfAction act = inversion_action(Q);
  for (unsigned m = 1; m <= 6; ++m) {
    IndicatorSumCheck c = regular_indicator_sum_check(act, m);
    CHECK(c.equal);
  }

  // Trivial group: both sides are the plain indicator of the base.
  HopfPtr c2 = group_algebra(cyclic_group(2), Q);
  HopfAction trivial = cyclic_action(identity_automorphism(c2));
  for (unsigned m = 1; m <= 4; ++m) {
    IndicatorSumCheck c = regular_indicator_sum_check(trivial, m);
    CHECK(c.equal);
    CHECK(c.lhs == regular_twisted_indicator(c2, m, identity_automorphism(c2)).value);
  }
}
