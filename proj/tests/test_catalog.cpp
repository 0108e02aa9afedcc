#include "hopfsmash/catalog.hpp"

#include <doctest.h>

#include "hopfsmash/indicators.hpp"
#include "hopfsmash/integrals.hpp"
#include "hopfsmash/powers.hpp"
#include "support/oracles.hpp"

using namespace hopfsmash;

namespace {

FieldScalar q(const Field& f, long num, long den = 1) {
  return FieldScalar(f, mpq_class(num, den));
}

}  // namespace

TEST_CASE("catalog lookup") {
  auto names = catalog_names();
  CHECK(names.size() == 11);
  for (const auto& n : {"h8", "nichols8", "nichols8_z3", "kC2", "kC3", "kC4", "kC5", "kS3",
                        "k^C2", "k^C3", "k^S3"}) {
    if (std::string(n) == "nichols8_z3") continue;  // covered below
    CHECK(catalog_entry(n).name == n);
  }
  CHECK(catalog_entry("nichols8_z3").algebra->field()->cyclotomic_order() == 3);
  CHECK_THROWS_AS(catalog_entry("kC9"), std::invalid_argument);

  // Lookups share one object per entry, so cross-module guards based on
  // object identity hold across separate calls.
  CHECK(h8().algebra.get() == catalog_entry("h8").algebra.get());
  CHECK(nichols8().algebra.get() == catalog_entry("nichols8").algebra.get());
}

TEST_CASE("h8 structure") {
  CatalogEntry e = h8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();
  CHECK(h->dim() == 8);
  CHECK(h->is_valid());
  CHECK(is_semisimple(h));
  CHECK(h->basis()[5] == "xz");

  // z^2 = (1 + x + y - xy)/2
  ExactVector z2 = h->multiply(h->basis_vector(4), h->basis_vector(4));
  ExactVector expect(f, 8);
  expect[0] = q(f, 1, 2);
  expect[1] = q(f, 1, 2);
  expect[2] = q(f, 1, 2);
  expect[3] = q(f, -1, 2);
  CHECK(z2 == expect);

  // zx = yz and zy = xz
  CHECK(h->multiply(h->basis_vector(4), h->basis_vector(1)) == h->basis_vector(6));
  CHECK(h->multiply(h->basis_vector(4), h->basis_vector(2)) == h->basis_vector(5));

  // S fixes the six elements outside {xz, yz} and swaps those two.
  for (size_t i : {0, 1, 2, 3, 4, 7}) CHECK(h->antipode_apply(h->basis_vector(i)) == h->basis_vector(i));
  CHECK(h->antipode_apply(h->basis_vector(5)) == h->basis_vector(6));
  CHECK(h->antipode_apply(h->basis_vector(6)) == h->basis_vector(5));
  CHECK(trace(h->antipode()) == q(f, 6));

  // z^[2] = z_1 z_2 = (1 - x + y + xy)/2... check against the direct expansion.
  ExactVector zsq = hopf_power(Element(h, h->basis_vector(4)), 2).coords;
  CHECK(zsq == oracles::naive_hopf_power(*h, h->basis_vector(4), 2));
  ExactVector zsq_expect(f, 8);
  zsq_expect[0] = q(f, 1, 2);
  zsq_expect[1] = q(f, -1, 2);
  zsq_expect[2] = q(f, 1, 2);
  zsq_expect[3] = q(f, 1, 2);
  CHECK(zsq == zsq_expect);

  // Group-likes square to 1 but z does not, so the exponent exceeds 2.
  ExponentResult r = exponent(h, 32);
  REQUIRE(r.found);
  CHECK(r.value > 2);
}

TEST_CASE("h8 tau4 automorphism") {
  CatalogEntry e = h8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();
  const HopfAutomorphism& tau = e.automorphisms.at("tau4");
  CHECK(tau.order() == 2);

  // tau(x) = y, tau(y) = x, tau(z) = (-z + xz + yz + xyz)/2
  CHECK(tau.matrix().col(1) == h->basis_vector(2));
  CHECK(tau.matrix().col(2) == h->basis_vector(1));
  ExactVector tz(f, 8);
  tz[4] = q(f, -1, 2);
  tz[5] = q(f, 1, 2);
  tz[6] = q(f, 1, 2);
  tz[7] = q(f, 1, 2);
  CHECK(tau.matrix().col(4) == tz);

  // Multiplicativity fixes the rest, e.g. tau(xz) = tau(x) tau(z) = y tz.
  CHECK(tau.matrix().col(5) == h->multiply(h->basis_vector(2), tz));
}

TEST_CASE("h8 two-dimensional representation") {
  CatalogEntry e = h8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();
  const Representation& n = e.representations.at("N");
  CHECK(n.rank() == 2);

  // x and y act by opposite sign characters on the two coordinates; z swaps
  // them, so only 1 and xy have nonzero trace.
  ExactVector chi = n.character();
  CHECK(chi[0] == q(f, 2));
  CHECK(chi[3] == q(f, -2));
  for (size_t i : {1, 2, 4, 5, 6, 7}) CHECK(chi[size_t(i)].is_zero());

  CHECK(e.representations.at("regular").rank() == 8);
  CHECK(e.representations.at("trivial").character() == h->counit());
}

TEST_CASE("h8 twisted indicator of N") {
  CatalogEntry e = h8();
  const Representation& n = e.representations.at("N");
  const HopfAutomorphism& tau = e.automorphisms.at("tau4");
  const Field& f = e.algebra->field();

  CHECK(module_indicator(n, 1).value == FieldScalar::zero(f));
  CHECK(module_indicator(n, 2).value == FieldScalar::one(f));
  CHECK(twisted_module_indicator(n, 2, tau).value == q(f, -1));
}

TEST_CASE("nichols8 structure") {
  CatalogEntry e = nichols8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();
  CHECK(h->dim() == 8);
  CHECK(h->is_valid());
  CHECK_FALSE(is_semisimple(h));
  CHECK(h->basis()[6] == "xy");

  // Defining relations.
  ExactVector zero(f, 8);
  CHECK(h->multiply(h->basis_vector(2), h->basis_vector(2)) == zero);      // x^2 = 0
  CHECK(h->multiply(h->basis_vector(4), h->basis_vector(4)) == zero);      // y^2 = 0
  CHECK(h->multiply(h->basis_vector(1), h->basis_vector(1)) == h->basis_vector(0));
  CHECK(h->multiply(h->basis_vector(1), h->basis_vector(2)) == h->basis_vector(3));
  CHECK(h->multiply(h->basis_vector(2), h->basis_vector(1)) ==
        h->basis_vector(3) * q(f, -1));                                    // xg = -gx
  CHECK(h->multiply(h->basis_vector(2), h->basis_vector(4)) == h->basis_vector(6));
  CHECK(h->multiply(h->basis_vector(4), h->basis_vector(2)) == h->basis_vector(6) * q(f, -1));

  // S(x) = gx and S^2(x) = -x.
  CHECK(h->antipode_apply(h->basis_vector(2)) == h->basis_vector(3));
  CHECK(h->antipode_apply(h->basis_vector(3)) == h->basis_vector(2) * q(f, -1));
  CHECK_FALSE(verify_hopf_axioms(*h).s_squared_identity);

  // Two-sided integral xy + gxy, dual integral the xy coordinate.
  IntegralPair pair = normalize_pair(left_integral(h), dual_integral(h, Side::right), Side::left,
                                     Side::right);
  ExactVector lam(f, 8);
  lam[6] = FieldScalar::one(f);
  lam[7] = FieldScalar::one(f);
  CHECK(pair.integral.coords == lam);
  ExactVector cov(f, 8);
  cov[6] = FieldScalar::one(f);
  CHECK(pair.functional == cov);
  CHECK(left_integral(h).coords == right_integral(h).coords);

  // x^[2] = x g + x = x(1 + g), and no power of x reaches epsilon: the
  // exponent search must come back empty, flagged because S^2 != id.
  Element x(h, h->basis_vector(2));
  ExactVector x2 = h->multiply(h->basis_vector(2), h->basis_vector(0) + h->basis_vector(1));
  CHECK(hopf_power(x, 2).coords == x2);
  CHECK(x2[2] == FieldScalar::one(f));
  CHECK(x2[3] == q(f, -1));
  ExponentResult r = exponent(h, 24);
  CHECK_FALSE(r.found);
  CHECK(r.antipode_warning);
}

TEST_CASE("nichols8 automorphism family") {
  CatalogEntry e = nichols8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();

  CHECK(e.automorphisms.at("neg").order() == 2);
  CHECK(e.automorphisms.at("diag").order() == 2);
  CHECK(e.automorphisms.at("swap").order() == 2);
  CHECK(e.automorphisms.at("rot3").order() == 3);

  // xy picks up the determinant: under swap, det = -1.
  CHECK(e.automorphisms.at("swap").matrix().col(6) == h->basis_vector(6) * q(f, -1));

  // Composition matches the product of parameter matrices: applying swap
  // after diag sends x -> y -> ... i.e. parameters (0, 1; -1, 0).
  ExactMatrix comp = e.automorphisms.at("swap").matrix() * e.automorphisms.at("diag").matrix();
  HopfAutomorphism expect = nichols8_automorphism(q(f, 0), q(f, 1), q(f, -1), q(f, 0));
  CHECK(comp == expect.matrix());
  CHECK(expect.order() == 4);

  CHECK_THROWS_AS(nichols8_automorphism(q(f, 1), q(f, 1), q(f, 1), q(f, 1)), VerificationError);

  // The z3 entry shares construction but not scalars; zdiag has order 3.
  CatalogEntry z3 = nichols8_z3();
  CHECK(z3.algebra->field()->cyclotomic_order() == 3);
  CHECK(z3.automorphisms.at("zdiag").order() == 3);
  CHECK(z3.algebra.get() != h.get());
}

TEST_CASE("nichols8 closed-form twisted indicators") {
  CatalogEntry e = nichols8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();

  // For an involutive parameter twist, the even regular indicators are
  // m^2 (1 + det)/2; the identity twist gives m^2.
  for (unsigned m : {2u, 4u, 6u}) {
    FieldScalar msq = q(f, long(m) * long(m));
    CHECK(regular_twisted_indicator(h, m, e.automorphisms.at("id")).value == msq);
    CHECK(regular_twisted_indicator(h, m, e.automorphisms.at("neg")).value == msq);
    CHECK(regular_twisted_indicator(h, m, e.automorphisms.at("diag")).value == FieldScalar::zero(f));
    CHECK(regular_twisted_indicator(h, m, e.automorphisms.at("swap")).value == FieldScalar::zero(f));
  }

  // Order-3 twists: nu_3 = (tr + det)^2 + (tr + 1)(1 - det).  rot3 has
  // trace -1 and determinant 1, so nu_3 vanishes; the identity gives 9.
  CHECK(regular_twisted_indicator(h, 3, e.automorphisms.at("id")).value == q(f, 9));
  CHECK(regular_twisted_indicator(h, 3, e.automorphisms.at("rot3")).value == FieldScalar::zero(f));

  CatalogEntry z3 = nichols8_z3();
  const Field& fz = z3.algebra->field();
  CHECK(regular_twisted_indicator(z3.algebra, 3, z3.automorphisms.at("zdiag")).value ==
        FieldScalar::zero(fz));
  CHECK(regular_twisted_indicator(z3.algebra, 3, z3.automorphisms.at("id")).value == q(fz, 9));
}

TEST_CASE("nichols8 integral power pairings") {
  // lambda((xy)^[m, tau]) = m^2 (1 + det tau)/4 for m in {2, 4}.
  CatalogEntry e = nichols8();
  const HopfPtr& h = e.algebra;
  const Field& f = h->field();
  IntegralPair pair = normalize_pair(left_integral(h), dual_integral(h, Side::right), Side::left,
                                     Side::right);
  ExactVector xy = h->basis_vector(6);

  for (unsigned m : {2u, 4u}) {
    FieldScalar quarter = q(f, long(m) * long(m), 4);
    for (const auto& [name, det1] :
         std::vector<std::pair<std::string, bool>>{{"id", true}, {"neg", true}, {"diag", false}}) {
      ExactVector p = twisted_power(Element(h, xy), m, e.automorphisms.at(name)).coords;
      FieldScalar val = pair.functional.dot(p);
      CHECK(val == (det1 ? quarter * q(f, 2) : FieldScalar::zero(f)));
    }
  }
}

TEST_CASE("nichols8 rejects untwisted module indicators") {
  CatalogEntry e = nichols8();
  CHECK_THROWS_WITH_AS(module_indicator(e.representations.at("regular"), 2),
                       doctest::Contains("semisimple"), VerificationError);
}

TEST_CASE("group entries") {
  CHECK(catalog_entry("kC4").automorphisms.at("inversion").order() == 2);
  CHECK(catalog_entry("kC5").automorphisms.at("square").order() == 4);
  CHECK(catalog_entry("kS3").automorphisms.at("conj").order() == 2);
  CHECK(catalog_entry("k^S3").algebra->dim() == 6);
  CHECK(catalog_entry("kC2").representations.at("regular").rank() == 2);

  // conj is conjugation by the transposition (1 2): it fixes that
  // transposition and permutes the other group elements.
  const HopfAutomorphism& c = catalog_entry("kS3").automorphisms.at("conj");
  const HopfPtr& ks3 = catalog_entry("kS3").algebra;
  CHECK(c.matrix().col(1) == ks3->basis_vector(1));
  CHECK(c.matrix().col(0) == ks3->basis_vector(0));
  CHECK(c.matrix().col(3) != ks3->basis_vector(3));
}
