#include <doctest.h>

#include <random>

#include "hopfsmash/smash.hpp"
#include "support/oracles.hpp"

using namespace hopfsmash;

namespace {

Field Q = FieldSpec::get(1);

// The automorphism g -> g^m of kC_n as a basis permutation matrix.
ExactMatrix cyclic_power_map(size_t n, size_t m) {
  ExactMatrix mat(Q, n, n);
  for (size_t x = 0; x < n; ++x) mat.at((m * x) % n, x) = FieldScalar::one(Q);
  return mat;
}

ExactVector random_element(const HopfPtr& h, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-2, 2);
  ExactVector v(h->field(), h->dim());
  for (size_t i = 0; i < h->dim(); ++i) v[i] = FieldScalar(h->field(), num(rng));
  return v;
}

}  // namespace

TEST_CASE("automorphism verification and order") {
  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  HopfAutomorphism inv3 = verify_automorphism(c3, cyclic_power_map(3, 2));
  CHECK(inv3.order() == 2);
  CHECK(inv3.apply(c3->basis_vector(1)) == c3->basis_vector(2));
  CHECK(inv3.power(3).matrix() == inv3.matrix());
  CHECK(inv3.power(-1).matrix() == inv3.matrix());
  CHECK(inv3.power(0).matrix().is_identity());
  CHECK(inv3.power(0).order() == 1);

  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  HopfAutomorphism square = verify_automorphism(c5, cyclic_power_map(5, 2));
  CHECK(square.order() == 4);
  // tau^-1 is g -> g^3 since 2*3 = 1 mod 5.
  CHECK(square.inverse().apply(c5->basis_vector(1)) == c5->basis_vector(3));
  CHECK(square.power(2).order() == 2);

  CHECK(identity_automorphism(c5).order() == 1);
}

TEST_CASE("automorphism rejection names the broken law") {
  HopfPtr c4 = group_algebra(cyclic_group(4), Q);
  // g -> g^2 is not injective on C4.
  CHECK_THROWS_WITH_AS((void)verify_automorphism(c4, cyclic_power_map(4, 2)),
                       doctest::Contains("not invertible"), VerificationError);

  HopfPtr c2 = group_algebra(cyclic_group(2), Q);
  ExactMatrix swap01(Q, 2, 2);
  swap01.at(0, 1) = FieldScalar::one(Q);
  swap01.at(1, 0) = FieldScalar::one(Q);
  CHECK_THROWS_WITH_AS((void)verify_automorphism(c2, swap01),
                       doctest::Contains("unit"), VerificationError);

  // Permutation fixing 1 and g but swapping g^2 and g^3: invertible,
  // unital, counital, yet not multiplicative.
  ExactMatrix perm(Q, 4, 4);
  perm.at(0, 0) = perm.at(1, 1) = perm.at(3, 2) = perm.at(2, 3) = FieldScalar::one(Q);
  CHECK_THROWS_WITH_AS((void)verify_automorphism(c4, perm),
                       doctest::Contains("multiplicative"), VerificationError);

  // Order cap smaller than the actual order.
  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  CHECK_THROWS_WITH_AS((void)verify_automorphism(c3, cyclic_power_map(3, 2), 1),
                       doctest::Contains("order"), VerificationError);

  CHECK_THROWS_AS((void)verify_automorphism(c3, ExactMatrix::identity(Q, 2)),
                  std::invalid_argument);
}

TEST_CASE("group-like Hopf powers are group powers") {
  HopfPtr c4 = group_algebra(cyclic_group(4), Q);
  for (unsigned n = 1; n <= 9; ++n)
    for (size_t j = 0; j < 4; ++j)
      CHECK(hopf_power(Element(c4, c4->basis_vector(j)), n).coords ==
            c4->basis_vector((j * n) % 4));
}

TEST_CASE("function algebra Hopf power gathers nth roots") {
  GroupTable g = symmetric_group_3();
  HopfPtr h = dual_group_algebra(g, Q);
  for (size_t x = 0; x < 6; ++x) {
    ExactVector expect(Q, 6);
    for (size_t y = 0; y < 6; ++y)
      if (g.mul(y, y) == x) expect[y] = FieldScalar::one(Q);
    CHECK(hopf_power(Element(h, h->basis_vector(x)), 2).coords == expect);
  }
}

TEST_CASE("powers agree with the naive Sweedler expansion") {
  std::mt19937 rng(20240817);
  for (bool use_dual : {false, true}) {
    HopfPtr h = use_dual ? dual_group_algebra(symmetric_group_3(), Q)
                         : group_algebra(cyclic_group(4), Q);
    for (unsigned n = 1; n <= 4; ++n) {
      ExactMatrix id = ExactMatrix::identity(Q, h->dim());
      ExactMatrix qn = twisted_power_matrix(*h, n, id);
      for (int trial = 0; trial < 3; ++trial) {
        ExactVector x = random_element(h, rng);
        CHECK(qn * x == oracles::naive_hopf_power(*h, x, n));
      }
    }
  }
}

TEST_CASE("twisted powers agree with the naive expansion") {
  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  HopfAutomorphism tau = verify_automorphism(c5, cyclic_power_map(5, 2));
  std::mt19937 rng(5115);
  for (unsigned n : {4u, 8u}) {
    LinearEndo q = twisted_power_endo(c5, n, tau);
    for (size_t j = 0; j < 5; ++j) {
      ExactVector b = c5->basis_vector(j);
      CHECK(q.matrix * b == oracles::naive_twisted_power(*c5, b, n, tau.matrix()));
      CHECK(twisted_power(Element(c5, b), n, tau).coords == q.matrix * b);
    }
    ExactVector x = random_element(c5, rng);
    CHECK(q.matrix * x == oracles::naive_twisted_power(*c5, x, n, tau.matrix()));
  }
  // The unguarded matrix path matches the oracle off the divisibility lattice.
  for (unsigned n : {2u, 3u, 5u})
    for (size_t j = 0; j < 5; ++j)
      CHECK(twisted_power_matrix(*c5, n, tau.matrix()) * c5->basis_vector(j) ==
            oracles::naive_twisted_power(*c5, c5->basis_vector(j), n, tau.matrix()));
}

TEST_CASE("twisted power guards the divisibility precondition") {
  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  HopfAutomorphism inv3 = verify_automorphism(c3, cyclic_power_map(3, 2));
  Element g(c3, c3->basis_vector(1));
  CHECK_THROWS_AS((void)twisted_power(g, 3, inv3), std::invalid_argument);
  CHECK_THROWS_AS((void)twisted_power(g, 0, inv3), std::invalid_argument);
  CHECK_THROWS_AS((void)hopf_power(g, 0), std::invalid_argument);
  // n = 2 is fine: g * tau(g) = g * g^-1 = 1.
  CHECK(twisted_power(g, 2, inv3).coords == c3->unit());
}

TEST_CASE("powers compose through the convolution rule") {
  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  ExactMatrix tau = cyclic_power_map(5, 2);
  for (unsigned a : {1u, 2u, 3u})
    for (unsigned b : {1u, 2u, 4u}) {
      ExactMatrix lhs = twisted_power_matrix(*c5, a + b, tau);
      ExactMatrix rhs =
          convolve(*c5, twisted_power_matrix(*c5, a, tau),
                   tau.pow(a) * twisted_power_matrix(*c5, b, tau));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("counit is preserved by twisted powers") {
  HopfPtr h = dual_group_algebra(symmetric_group_3(), Q);
  HopfAutomorphism id = identity_automorphism(h);
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    ExactMatrix q = twisted_power_matrix(*h, n, id.matrix());
    for (size_t i = 0; i < h->dim(); ++i)
      CHECK(h->counit_apply(q.col(i)) == h->counit()[i]);
  }
}

TEST_CASE("exponents of group and function algebras") {
  for (size_t n : {2u, 3u, 4u, 5u}) {
    HopfPtr h = group_algebra(cyclic_group(n), Q);
    ExponentResult r = exponent(h, default_exponent_bound(*h, 1));
    CHECK(r.found);
    CHECK(r.value == n);
    CHECK(!r.antipode_warning);
    CHECK(r.str() == "Found(" + std::to_string(n) + ")");
  }
  HopfPtr ks3 = group_algebra(symmetric_group_3(), Q);
  CHECK(exponent(ks3, 100).value == 6);
  HopfPtr fs3 = dual_group_algebra(symmetric_group_3(), Q);
  CHECK(exponent(fs3, 100).value == 6);
}

TEST_CASE("bound exhaustion reports NotFoundUpTo") {
  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  ExponentResult r = exponent(c5, 3);
  CHECK(!r.found);
  CHECK(r.bound == 3);
  CHECK(r.str() == "NotFoundUpTo(3)");
}

TEST_CASE("twisted exponent searches multiples of the order") {
  HopfPtr c3 = group_algebra(cyclic_group(3), Q);
  HopfAutomorphism inv3 = verify_automorphism(c3, cyclic_power_map(3, 2));
  ExponentResult r3 = twisted_exponent(c3, inv3, default_exponent_bound(*c3, 2));
  CHECK(r3.found);
  CHECK(r3.value == 2);

  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  HopfAutomorphism square = verify_automorphism(c5, cyclic_power_map(5, 2));
  ExponentResult r5 = twisted_exponent(c5, square, default_exponent_bound(*c5, 4));
  CHECK(r5.found);
  CHECK(r5.value == 4);

  HopfAutomorphism id5 = identity_automorphism(c5);
  CHECK(twisted_exponent(c5, id5, 100).value == exponent(c5, 100).value);
}

TEST_CASE("twisted power vanishing happens exactly on exponent multiples") {
  // Against reading the search as "smallest m with Q_{mr} = u eps": on
  // kC5 with tau of order 4 the twisted exponent 4 does not divide m = 1.
  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  ExactMatrix tau = cyclic_power_map(5, 2);
  ExactMatrix ue = c5->convolution_unit();
  for (unsigned n = 1; n <= 16; ++n)
    CHECK((twisted_power_matrix(*c5, n, tau) == ue) == (n % 4 == 0));
}

TEST_CASE("coprime powers of the twist give the same exponent") {
  HopfPtr c5 = group_algebra(cyclic_group(5), Q);
  HopfAutomorphism square = verify_automorphism(c5, cyclic_power_map(5, 2));
  CoprimeExperiment e = coprime_power_experiment(c5, square, 64);
  CHECK(e.tau_order == 4);
  CHECK(e.base.found);
  CHECK(e.base.value == 4);
  REQUIRE(e.powers.size() == 1);  // only m = 3 is coprime to 4 in 2..3
  CHECK(e.powers[0].first == 3);
  CHECK(e.powers[0].second.value == 4);
  CHECK(e.all_agree);
  CHECK(!e.inconclusive);

  CoprimeExperiment tight = coprime_power_experiment(c5, square, 3);
  CHECK(tight.inconclusive);
}
