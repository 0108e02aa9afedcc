#include "hopfsmash/smash.hpp"

#include <sstream>

#include "hopfsmash/integrals.hpp"

namespace hopfsmash {

HopfAction verify_action(const HopfPtr& a, const GroupTable& g,
                         const std::vector<ExactMatrix>& matrices) {
  if (matrices.size() != g.order())
    throw std::invalid_argument("action needs one matrix per group element");
  std::vector<HopfAutomorphism> auts;
  auts.reserve(g.order());
  for (size_t x = 0; x < g.order(); ++x) {
    try {
      auts.push_back(verify_automorphism(a, matrices[x]));
    } catch (const VerificationError& e) {
      throw VerificationError("action element " + std::to_string(x) + ": " + e.what());
    }
  }
  if (!matrices[g.identity()].is_identity())
    throw VerificationError("action law violated: the group identity must act as the identity");
  for (size_t x = 0; x < g.order(); ++x)
    for (size_t y = 0; y < g.order(); ++y)
      if (matrices[x] * matrices[y] != matrices[g.mul(x, y)]) {
        std::ostringstream why;
        why << "action law violated: matrix(" << x << ") * matrix(" << y
            << ") != matrix(" << g.mul(x, y) << ")";
        throw VerificationError(why.str());
      }
  return HopfAction{a, g, std::move(auts)};
}

HopfAction cyclic_action(const HopfAutomorphism& tau) {
  GroupTable g = cyclic_group(tau.order());
  std::vector<ExactMatrix> mats;
  mats.reserve(tau.order());
  for (unsigned k = 0; k < tau.order(); ++k) mats.push_back(tau.matrix().pow(k));
  return verify_action(tau.algebra(), g, mats);
}

HopfPtr group_algebra(const GroupTable& g, const Field& field) {
  const size_t n = g.order();
  const FieldScalar one = FieldScalar::one(field);
  std::vector<std::string> labels;
  std::vector<SparseTriple> mult, comult;
  ExactVector unit(field, n), counit(field, n);
  ExactMatrix antipode(field, n, n);
  for (size_t x = 0; x < n; ++x) {
    labels.push_back(x == g.identity() ? "1" : "g" + std::to_string(x));
    for (size_t y = 0; y < n; ++y) mult.push_back({x, y, g.mul(x, y), one});
    comult.push_back({x, x, x, one});
    counit[x] = one;
    antipode.at(g.inv(x), x) = one;
  }
  unit[g.identity()] = one;
  return std::make_shared<FiniteHopfAlgebra>("k[G]", field, std::move(labels), std::move(mult),
                                             std::move(comult), std::move(unit),
                                             std::move(counit), std::move(antipode));
}

HopfPtr dual_group_algebra(const GroupTable& g, const Field& field) {
  const size_t n = g.order();
  const FieldScalar one = FieldScalar::one(field);
  std::vector<std::string> labels;
  std::vector<SparseTriple> mult, comult;
  ExactVector unit(field, n), counit(field, n);
  ExactMatrix antipode(field, n, n);
  for (size_t x = 0; x < n; ++x) {
    labels.push_back("p_" + std::to_string(x));
    mult.push_back({x, x, x, one});
    for (size_t y = 0; y < n; ++y) comult.push_back({x, y, g.mul(g.inv(y), x), one});
    unit[x] = one;
    antipode.at(g.inv(x), x) = one;
  }
  counit[g.identity()] = one;
  return std::make_shared<FiniteHopfAlgebra>("k^G", field, std::move(labels), std::move(mult),
                                             std::move(comult), std::move(unit),
                                             std::move(counit), std::move(antipode));
}

namespace {

void require_valid(const HopfPtr& k, const char* what) {
  if (!k->is_valid()) {
    AxiomReport report = verify_hopf_axioms(*k);
    throw VerificationError(std::string(what) + " failed the Hopf axiom suite:\n" +
                            report.summary());
  }
}

}  // namespace

SmashCoproduct::SmashCoproduct(HopfAction action)
    : action_(std::move(action)),
      k_(nullptr),
      integral_(action_.algebra, ExactVector(action_.algebra->field(), action_.algebra->dim())) {
  const HopfPtr& a = action_.algebra;
  const GroupTable& g = action_.group;
  const Field& f = a->field();
  const size_t da = a->dim(), n = g.order(), dk = da * n;
  auto flat = [da](size_t i, size_t x) { return x * da + i; };

  std::vector<std::string> labels(dk);
  std::vector<SparseTriple> mult, comult;
  ExactVector unit(f, dk), counit(f, dk);
  ExactMatrix antipode(f, dk, dk);

  for (size_t x = 0; x < n; ++x) {
    for (size_t i = 0; i < da; ++i) {
      labels[flat(i, x)] = a->basis()[i] + " ♮ p_" + std::to_string(x);
      unit[flat(i, x)] = a->unit()[i];
      if (x == g.identity()) counit[flat(i, x)] = a->counit()[i];
    }
    for (const auto& t : a->mult_entries())
      mult.push_back({flat(t.i, x), flat(t.j, x), flat(t.k, x), t.c});

    // delta(a (x) p_x) = sum_y (a1 (x) p_y) (x) (y^-1.a2 (x) p_{y^-1 x})
    for (size_t y = 0; y < n; ++y) {
      const ExactMatrix& w = action_.matrix(g.inv(y));
      const size_t yx = g.mul(g.inv(y), x);
      for (const auto& t : a->comult_entries())
        for (size_t l = 0; l < da; ++l) {
          const FieldScalar& coeff = w.at(l, t.k);
          if (!coeff.is_zero())
            comult.push_back({flat(t.i, x), flat(t.j, y), flat(l, yx), t.c * coeff});
        }
    }

    // S(a (x) p_x) = (x^-1 . S(a)) (x) p_{x^-1}
    ExactMatrix sx = action_.matrix(g.inv(x)) * a->antipode();
    for (size_t i = 0; i < da; ++i)
      for (size_t l = 0; l < da; ++l)
        antipode.at(flat(l, g.inv(x)), flat(i, x)) = sx.at(l, i);
  }

  k_ = std::make_shared<FiniteHopfAlgebra>(
      a->name() + " ♮ k^G", f, std::move(labels), std::move(mult), std::move(comult),
      std::move(unit), std::move(counit), std::move(antipode));
  require_valid(k_, "smash coproduct");

  Element lambda_a = left_integral(a);
  ExactVector lk(f, dk);
  for (size_t i = 0; i < da; ++i) lk[flat(i, g.identity())] = lambda_a.coords[i];
  integral_ = Element(k_, std::move(lk));
}

Element SmashCoproduct::component_idempotent(size_t x) const {
  if (x >= group().order()) throw std::invalid_argument("group index out of range");
  ExactVector v(k_->field(), k_->dim());
  for (size_t i = 0; i < base()->dim(); ++i) v[flat_index(i, x)] = base()->unit()[i];
  return Element(k_, std::move(v));
}

HopfPtr smash_product(const HopfAction& action) {
  const HopfPtr& a = action.algebra;
  const GroupTable& g = action.group;
  const Field& f = a->field();
  const size_t da = a->dim(), n = g.order(), dk = da * n;
  auto flat = [da](size_t i, size_t x) { return x * da + i; };

  std::vector<std::string> labels(dk);
  std::vector<SparseTriple> mult, comult;
  ExactVector unit(f, dk), counit(f, dk);
  ExactMatrix antipode(f, dk, dk);

  for (size_t x = 0; x < n; ++x) {
    for (size_t i = 0; i < da; ++i) {
      labels[flat(i, x)] = a->basis()[i] + "* # g" + std::to_string(x);
      counit[flat(i, x)] = a->unit()[i];
      if (x == g.identity()) unit[flat(i, x)] = a->counit()[i];
    }

    // (f_i # x)(f_j # y): the coefficient on f_k # xy is
    // sum_m comult_A[k -> (i, m)] * matrix(x^-1)[j, m].
    const ExactMatrix& v = action.matrix(g.inv(x));
    for (size_t y = 0; y < n; ++y) {
      const size_t xy = g.mul(x, y);
      for (const auto& t : a->comult_entries())
        for (size_t j = 0; j < da; ++j) {
          const FieldScalar& coeff = v.at(j, t.k);
          if (!coeff.is_zero())
            mult.push_back({flat(t.j, x), flat(j, y), flat(t.i, xy), t.c * coeff});
        }
    }

    // Tensor-product coalgebra: delta(f_k # x) = sum c_{ij}^k (f_i # x)(x)(f_j # x).
    for (const auto& t : a->mult_entries())
      comult.push_back({flat(t.k, x), flat(t.i, x), flat(t.j, x), t.c});

    // S(f # x) = x^-1 . S*(f) # x^-1; on coordinates the image of f_j # x
    // carries row j of matrix(x) * S_A into the x^-1 block.
    ExactMatrix p = action.matrix(x) * a->antipode();
    for (size_t j = 0; j < da; ++j)
      for (size_t i = 0; i < da; ++i)
        antipode.at(flat(i, g.inv(x)), flat(j, x)) = p.at(j, i);
  }

  HopfPtr k = std::make_shared<FiniteHopfAlgebra>(
      a->name() + "* # kG", f, std::move(labels), std::move(mult), std::move(comult),
      std::move(unit), std::move(counit), std::move(antipode));
  require_valid(k, "smash product");
  return k;
}

StructureComparison smash_duality_check(const HopfAction& action) {
  SmashCoproduct k(action);
  HopfPtr lhs = dual(*k.k());
  HopfPtr rhs = smash_product(action);
  return structure_equal(*lhs, *rhs);
}

}  // namespace hopfsmash
