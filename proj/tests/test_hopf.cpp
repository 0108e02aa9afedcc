#include <doctest.h>

#include <random>

#include "hopfsmash/smash.hpp"

using namespace hopfsmash;

namespace {

Field Q = FieldSpec::get(1);

ExactMatrix random_endo(const HopfPtr& h, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  ExactMatrix m(h->field(), h->dim(), h->dim());
  for (size_t i = 0; i < h->dim(); ++i)
    for (size_t j = 0; j < h->dim(); ++j) m.at(i, j) = FieldScalar(h->field(), num(rng));
  return m;
}

}  // namespace

TEST_CASE("group algebra passes all axioms") {
  for (size_t n : {1u, 2u, 3u, 4u}) {
    HopfPtr h = group_algebra(cyclic_group(n), Q);
    AxiomReport r = verify_hopf_axioms(*h);
    CHECK(r.all_pass());
    CHECK(r.s_squared_identity);
  }
  HopfPtr s3 = group_algebra(symmetric_group_3(), Q);
  CHECK(verify_hopf_axioms(*s3).all_pass());
  CHECK(s3->is_valid());
}

TEST_CASE("dual group algebra passes all axioms and matches the dual") {
  for (bool use_s3 : {false, true}) {
    GroupTable g = use_s3 ? symmetric_group_3() : cyclic_group(3);
    HopfPtr kg = group_algebra(g, Q);
    HopfPtr dual_kg = dual_group_algebra(g, Q);
    CHECK(verify_hopf_axioms(*dual_kg).all_pass());
    CHECK(structure_equal(*dual(*kg), *dual_kg).equal);
  }
}

TEST_CASE("corrupted antipode is reported, not thrown") {
  GroupTable c2 = cyclic_group(2);
  HopfPtr good = group_algebra(c2, Q);
  // S(g) = 1 instead of g^-1.
  ExactMatrix bad_s(Q, 2, 2);
  bad_s.at(0, 0) = FieldScalar::one(Q);
  bad_s.at(0, 1) = FieldScalar::one(Q);
  FiniteHopfAlgebra broken("broken", Q, good->basis(), good->mult_entries(),
                           good->comult_entries(), good->unit(), good->counit(), bad_s);
  AxiomReport r = verify_hopf_axioms(broken);
  CHECK(!r.all_pass());
  for (const auto& c : r.checks)
    if (c.name != "antipode axiom") CHECK(c.pass);
}

TEST_CASE("multiply and comultiply on group elements") {
  GroupTable c4 = cyclic_group(4);
  HopfPtr h = group_algebra(c4, Q);
  ExactVector g1 = h->basis_vector(1), g3 = h->basis_vector(3);
  CHECK(h->multiply(g1, g3) == h->basis_vector(0));
  CHECK(h->multiply(h->unit(), g3) == g3);
  CHECK(h->comultiply(g1) == g1.tensor(g1));
  CHECK(h->counit_apply(g1 + g3) == FieldScalar(Q, 2));
  CHECK(h->antipode_apply(g1) == g3);
}

TEST_CASE("left and right multiplication matrices") {
  HopfPtr h = group_algebra(symmetric_group_3(), Q);
  for (size_t i = 0; i < h->dim(); ++i) {
    ExactMatrix l = h->left_mult_matrix(i), r = h->right_mult_matrix(i);
    for (size_t j = 0; j < h->dim(); ++j) {
      CHECK(l.col(j) == h->multiply(h->basis_vector(i), h->basis_vector(j)));
      CHECK(r.col(j) == h->multiply(h->basis_vector(j), h->basis_vector(i)));
    }
  }
}

TEST_CASE("convolution identities") {
  for (bool dual_side : {false, true}) {
    GroupTable g = symmetric_group_3();
    HopfPtr h = dual_side ? dual_group_algebra(g, Q) : group_algebra(g, Q);
    ExactMatrix id = ExactMatrix::identity(Q, h->dim());
    ExactMatrix ue = h->convolution_unit();

    CHECK(convolve(*h, h->antipode(), id) == ue);
    CHECK(convolve(*h, id, h->antipode()) == ue);

    std::mt19937 rng(909090);
    for (int trial = 0; trial < 5; ++trial) {
      ExactMatrix f = random_endo(h, rng);
      ExactMatrix k = random_endo(h, rng);
      ExactMatrix l = random_endo(h, rng);
      CHECK(convolve(*h, f, ue) == f);
      CHECK(convolve(*h, ue, f) == f);
      CHECK(convolve(*h, convolve(*h, f, k), l) == convolve(*h, f, convolve(*h, k, l)));
    }
  }
}

TEST_CASE("antipode is an anti-algebra map on the dual of a nonabelian group") {
  HopfPtr h = dual_group_algebra(symmetric_group_3(), Q);
  for (size_t i = 0; i < h->dim(); ++i)
    for (size_t j = 0; j < h->dim(); ++j) {
      ExactVector lhs = h->antipode_apply(h->multiply(h->basis_vector(i), h->basis_vector(j)));
      ExactVector rhs = h->multiply(h->antipode_apply(h->basis_vector(j)),
                                    h->antipode_apply(h->basis_vector(i)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("double dual returns the original structure") {
  HopfPtr h = group_algebra(symmetric_group_3(), Q);
  CHECK(structure_equal(*dual(*dual(*h)), *h).equal);
  CHECK(verify_hopf_axioms(*dual(*h)).all_pass());
}

TEST_CASE("elements guard against algebra mixing") {
  HopfPtr h1 = group_algebra(cyclic_group(2), Q);
  HopfPtr h2 = group_algebra(cyclic_group(2), Q);
  Element a(h1, h1->basis_vector(0));
  Element b(h2, h2->basis_vector(1));
  CHECK_THROWS_AS((void)multiply(a, b), std::invalid_argument);
  CHECK_THROWS_AS(Element(h1, ExactVector(Q, 3)), std::invalid_argument);
}

TEST_CASE("structure comparison pinpoints differences") {
  HopfPtr a = group_algebra(cyclic_group(4), Q);
  HopfPtr b = group_algebra(cyclic_group(2), Q);
  StructureComparison cmp = structure_equal(*a, *b);
  CHECK(!cmp.equal);
  CHECK(!cmp.detail.empty());
}
