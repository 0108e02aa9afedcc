#include "hopfsmash/representations.hpp"

#include <sstream>

namespace hopfsmash {

Representation::Representation(HopfPtr alg, size_t rank, std::vector<ExactMatrix> mats)
    : algebra_(std::move(alg)), rank_(rank), matrices_(std::move(mats)) {}

ExactMatrix Representation::apply(const ExactVector& coords) const {
  if (coords.size() != algebra_->dim())
    throw std::invalid_argument("element size does not match the algebra");
  ExactMatrix acc(algebra_->field(), rank_, rank_);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) acc = acc + matrices_[i] * coords[i];
  return acc;
}

ExactVector Representation::character() const {
  ExactVector chi(algebra_->field(), algebra_->dim());
  for (size_t i = 0; i < matrices_.size(); ++i) chi[i] = trace(matrices_[i]);
  return chi;
}

Representation verify_representation(const HopfPtr& h, const std::vector<ExactMatrix>& matrices) {
  if (matrices.size() != h->dim())
    throw std::invalid_argument("representation needs one matrix per basis element");
  const size_t r = matrices.empty() ? 0 : matrices[0].rows();
  for (const auto& m : matrices)
    if (m.rows() != r || m.cols() != r)
      throw std::invalid_argument("representation matrices must be square of equal rank");

  Representation rep(h, r, matrices);
  if (!rep.apply(h->unit()).is_identity())
    throw VerificationError("representation of " + h->name() + " does not send 1 to the identity");
  for (size_t i = 0; i < h->dim(); ++i)
    for (size_t j = 0; j < h->dim(); ++j) {
      ExactMatrix lhs = matrices[i] * matrices[j];
      ExactMatrix rhs = rep.apply(h->multiply(h->basis_vector(i), h->basis_vector(j)));
      if (lhs != rhs) {
        std::ostringstream why;
        why << "representation of " << h->name() << " violates the product "
            << h->basis()[i] << " . " << h->basis()[j];
        throw VerificationError(why.str());
      }
    }
  return rep;
}

FieldScalar character(const Representation& rho, const Element& x) {
  if (rho.algebra() != x.algebra)
    throw std::invalid_argument("character: element of a different algebra");
  return trace(rho.apply(x.coords));
}

Representation trivial_rep(const HopfPtr& h) {
  std::vector<ExactMatrix> mats;
  mats.reserve(h->dim());
  for (size_t i = 0; i < h->dim(); ++i) {
    ExactMatrix m(h->field(), 1, 1);
    m.at(0, 0) = h->counit()[i];
    mats.push_back(std::move(m));
  }
  return verify_representation(h, mats);
}

Representation regular_rep(const HopfPtr& h) {
  std::vector<ExactMatrix> mats;
  mats.reserve(h->dim());
  for (size_t i = 0; i < h->dim(); ++i) mats.push_back(h->left_mult_matrix(i));
  return verify_representation(h, mats);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.algebra() != b.algebra())
    throw std::invalid_argument("direct sum of modules over different algebras");
  const size_t r = a.rank() + b.rank();
  std::vector<ExactMatrix> mats;
  for (size_t i = 0; i < a.algebra()->dim(); ++i) {
    ExactMatrix m(a.algebra()->field(), r, r);
    for (size_t p = 0; p < a.rank(); ++p)
      for (size_t q = 0; q < a.rank(); ++q) m.at(p, q) = a.matrix(i).at(p, q);
    for (size_t p = 0; p < b.rank(); ++p)
      for (size_t q = 0; q < b.rank(); ++q)
        m.at(a.rank() + p, a.rank() + q) = b.matrix(i).at(p, q);
    mats.push_back(std::move(m));
  }
  return verify_representation(a.algebra(), mats);
}

Representation tensor_rep(const Representation& r1, const Representation& r2) {
  if (r1.algebra() != r2.algebra())
    throw std::invalid_argument("tensor of modules over different algebras");
  const HopfPtr& h = r1.algebra();
  const size_t r = r1.rank() * r2.rank();
  std::vector<ExactMatrix> mats(h->dim(), ExactMatrix(h->field(), r, r));
  for (size_t i = 0; i < h->dim(); ++i)
    for (const auto& t : h->comult_table()[i])
      mats[i] = mats[i] + kron(r1.matrix(t.j), r2.matrix(t.k)) * t.c;
  return verify_representation(h, mats);
}

Representation dual_rep(const Representation& rep) {
  const HopfPtr& h = rep.algebra();
  std::vector<ExactMatrix> mats;
  mats.reserve(h->dim());
  for (size_t i = 0; i < h->dim(); ++i)
    mats.push_back(rep.apply(h->antipode_apply(h->basis_vector(i))).transpose());
  return verify_representation(h, mats);
}

Representation twist_rep(const Representation& rep, const HopfAction& action, size_t y) {
  if (rep.algebra() != action.algebra)
    throw std::invalid_argument("twist: module is not over the acted-on algebra");
  if (y >= action.group.order()) throw std::invalid_argument("group index out of range");
  const ExactMatrix& w = action.matrix(action.group.inv(y));
  std::vector<ExactMatrix> mats;
  mats.reserve(rep.algebra()->dim());
  for (size_t i = 0; i < rep.algebra()->dim(); ++i) mats.push_back(rep.apply(w.col(i)));
  return verify_representation(rep.algebra(), mats);
}

size_t GradedDecomposition::nonzero_count() const {
  size_t n = 0;
  for (const auto& c : components)
    if (c.on_base.rank() > 0) ++n;
  return n;
}

std::optional<size_t> GradedDecomposition::single_degree() const {
  std::optional<size_t> found;
  for (const auto& c : components) {
    if (c.on_base.rank() == 0) continue;
    if (found) return std::nullopt;
    found = c.element;
  }
  return found;
}

namespace {

// Columns spanning the image of an idempotent, normalized by row
// reduction of the transpose so the choice is deterministic.
ExactMatrix idempotent_image_basis(const ExactMatrix& p) {
  ExactMatrix e = rref(p.transpose());
  size_t nonzero = 0;
  for (size_t r = 0; r < e.rows(); ++r) {
    bool all_zero = true;
    for (size_t c = 0; c < e.cols(); ++c)
      if (!e.at(r, c).is_zero()) all_zero = false;
    if (!all_zero) ++nonzero;
  }
  ExactMatrix basis(p.field(), p.rows(), nonzero);
  for (size_t r = 0; r < nonzero; ++r)
    for (size_t c = 0; c < e.cols(); ++c) basis.at(c, r) = e.at(r, c);
  return basis;
}

}  // namespace

GradedDecomposition decompose_by_group(const SmashCoproduct& k, const Representation& rho) {
  if (rho.algebra() != k.k())
    throw std::invalid_argument("decomposition needs a module over the smash coproduct");
  const size_t n = k.group().order();
  const size_t r = rho.rank();

  std::vector<ExactMatrix> projectors;
  projectors.reserve(n);
  ExactMatrix sum(rho.algebra()->field(), r, r);
  for (size_t x = 0; x < n; ++x) {
    projectors.push_back(rho.apply(k.component_idempotent(x).coords));
    sum = sum + projectors.back();
  }
  if (!sum.is_identity())
    throw VerificationError("graded projectors do not sum to the identity");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      ExactMatrix prod = projectors[x] * projectors[y];
      bool ok = (x == y) ? prod == projectors[x] : prod.is_zero();
      if (!ok) throw VerificationError("graded projectors are not orthogonal idempotents");
    }

  GradedDecomposition out;
  size_t total = 0;
  for (size_t x = 0; x < n; ++x) {
    ExactMatrix basis = idempotent_image_basis(projectors[x]);
    total += basis.cols();

    std::vector<ExactMatrix> base_mats;
    base_mats.reserve(k.base()->dim());
    for (size_t i = 0; i < k.base()->dim(); ++i) {
      const Field& f = rho.algebra()->field();
      ExactVector embedded(f, rho.algebra()->dim());
      for (size_t y = 0; y < n; ++y) embedded[k.flat_index(i, y)] = FieldScalar::one(f);
      auto action_on_component = solve(basis, rho.apply(embedded) * basis);
      if (!action_on_component)
        throw std::logic_error("graded component is not stable under the base algebra");
      base_mats.push_back(std::move(*action_on_component));
    }
    out.components.push_back(
        GradedComponent{x, std::move(basis), verify_representation(k.base(), base_mats)});
  }
  if (total != r) throw VerificationError("graded component dimensions do not sum to the rank");
  return out;
}

Representation extend_to_smash(const SmashCoproduct& k, const Representation& n, size_t x) {
  if (n.algebra() != k.base())
    throw std::invalid_argument("extension needs a module over the base algebra");
  if (x >= k.group().order()) throw std::invalid_argument("group index out of range");
  std::vector<ExactMatrix> mats(k.k()->dim(),
                                ExactMatrix(k.k()->field(), n.rank(), n.rank()));
  for (size_t i = 0; i < k.base()->dim(); ++i) mats[k.flat_index(i, x)] = n.matrix(i);
  return verify_representation(k.k(), mats);
}

Representation restrict_to_base(const SmashCoproduct& k, const Representation& rho) {
  if (rho.algebra() != k.k())
    throw std::invalid_argument("restriction needs a module over the smash coproduct");
  std::vector<ExactMatrix> mats;
  mats.reserve(k.base()->dim());
  for (size_t i = 0; i < k.base()->dim(); ++i) {
    ExactMatrix acc(rho.algebra()->field(), rho.rank(), rho.rank());
    for (size_t y = 0; y < k.group().order(); ++y) acc = acc + rho.matrix(k.flat_index(i, y));
    mats.push_back(std::move(acc));
  }
  return verify_representation(k.base(), mats);
}

bool GradedCheckReport::all_pass() const {
  return tensor_concentrated && tensor_matches && dual_concentrated && dual_matches;
}

std::string GradedCheckReport::summary() const {
  std::ostringstream out;
  out << "tensor module in degree " << tensor_degree << ": "
      << (tensor_concentrated ? "concentrated" : "SPREAD") << ", "
      << (tensor_matches ? "matrices match" : "MATRIX MISMATCH") << "; "
      << "dual module in degree " << dual_degree << ": "
      << (dual_concentrated ? "concentrated" : "SPREAD") << ", "
      << (dual_matches ? "matrices match" : "MATRIX MISMATCH");
  return out.str();
}

GradedCheckReport graded_tensor_dual_check(const SmashCoproduct& k, const Representation& m,
                                           const Representation& n) {
  GradedDecomposition dm = decompose_by_group(k, m);
  GradedDecomposition dn = decompose_by_group(k, n);
  std::optional<size_t> y = dm.single_degree(), z = dn.single_degree();
  if (!y || !z)
    throw std::invalid_argument("graded check needs modules concentrated in a single degree");

  const GroupTable& g = k.group();
  const Representation& base_m = dm.components[*y].on_base;
  const Representation& base_n = dn.components[*z].on_base;

  GradedCheckReport report{};
  report.tensor_degree = g.mul(*y, *z);
  report.dual_degree = g.inv(*y);

  Representation t = tensor_rep(m, n);
  report.tensor_concentrated =
      decompose_by_group(k, t).single_degree() == std::optional<size_t>(report.tensor_degree);
  Representation t_expected = extend_to_smash(
      k, tensor_rep(base_m, twist_rep(base_n, k.action(), *y)), report.tensor_degree);
  report.tensor_matches = t.matrices() == t_expected.matrices();

  Representation d = dual_rep(m);
  report.dual_concentrated =
      decompose_by_group(k, d).single_degree() == std::optional<size_t>(report.dual_degree);
  Representation d_expected = extend_to_smash(
      k, twist_rep(dual_rep(base_m), k.action(), report.dual_degree), report.dual_degree);
  report.dual_matches = d.matrices() == d_expected.matrices();

  return report;
}

}  // namespace hopfsmash
