#include "hopfsmash/hopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopfsmash {

namespace {

// Merge duplicates, drop zeros, sort by (i, j, k).
std::vector<SparseTriple> canonicalize(std::vector<SparseTriple> entries) {
  std::map<std::tuple<size_t, size_t, size_t>, FieldScalar> acc;
  for (auto& t : entries) {
    auto key = std::make_tuple(t.i, t.j, t.k);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::move(t.c));
    else
      it->second += t.c;
  }
  std::vector<SparseTriple> out;
  for (auto& [key, c] : acc)
    if (!c.is_zero())
      out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::move(c)});
  return out;
}

}  // namespace

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) out << c.name << ": " << (c.pass ? "pass" : "FAIL") << '\n';
  out << "S^2 = id: " << (s_squared_identity ? "yes" : "no") << '\n';
  return out.str();
}

FiniteHopfAlgebra::FiniteHopfAlgebra(std::string name, Field field,
                                     std::vector<std::string> basis,
                                     std::vector<SparseTriple> mult,
                                     std::vector<SparseTriple> comult, ExactVector unit,
                                     ExactVector counit, ExactMatrix antipode)
    : name_(std::move(name)),
      field_(std::move(field)),
      basis_(std::move(basis)),
      mult_(canonicalize(std::move(mult))),
      comult_(canonicalize(std::move(comult))),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const size_t d = basis_.size();
  if (d == 0) throw std::invalid_argument("algebra needs at least one basis element");
  if (unit_.size() != d || counit_.size() != d)
    throw std::invalid_argument("unit/counit length does not match dimension");
  if (antipode_.rows() != d || antipode_.cols() != d)
    throw std::invalid_argument("antipode matrix shape does not match dimension");
  if (unit_.field()->cyclotomic_order() != field_->cyclotomic_order() ||
      counit_.field()->cyclotomic_order() != field_->cyclotomic_order() ||
      antipode_.field()->cyclotomic_order() != field_->cyclotomic_order())
    throw std::invalid_argument("structure data over the wrong field");

  mult_by_ij_.assign(d, std::vector<std::vector<std::pair<size_t, FieldScalar>>>(d));
  for (const auto& t : mult_) {
    if (t.i >= d || t.j >= d || t.k >= d)
      throw std::invalid_argument("multiplication tensor index out of range");
    mult_by_ij_[t.i][t.j].emplace_back(t.k, t.c);
  }
  comult_by_i_.assign(d, {});
  for (const auto& t : comult_) {
    if (t.i >= d || t.j >= d || t.k >= d)
      throw std::invalid_argument("comultiplication tensor index out of range");
    comult_by_i_[t.i].push_back(t);
  }
}

ExactVector FiniteHopfAlgebra::basis_vector(size_t i) const {
  ExactVector v(field_, dim());
  v[i] = FieldScalar::one(field_);
  return v;
}

ExactVector FiniteHopfAlgebra::multiply(const ExactVector& a, const ExactVector& b) const {
  if (a.size() != dim() || b.size() != dim())
    throw std::invalid_argument("element length does not match dimension");
  ExactVector out(field_, dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      FieldScalar f = a[i] * b[j];
      for (const auto& [k, c] : mult_by_ij_[i][j]) out[k] += f * c;
    }
  }
  return out;
}

ExactVector FiniteHopfAlgebra::comultiply(const ExactVector& a) const {
  if (a.size() != dim()) throw std::invalid_argument("element length does not match dimension");
  ExactVector out(field_, dim() * dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : comult_by_i_[i]) out[t.j * dim() + t.k] += a[i] * t.c;
  }
  return out;
}

ExactVector FiniteHopfAlgebra::tensor_multiply(const ExactVector& u, const ExactVector& v) const {
  const size_t d = dim();
  if (u.size() != d * d || v.size() != d * d)
    throw std::invalid_argument("tensor-square element has wrong length");
  ExactVector out(field_, d * d);
  for (size_t jk = 0; jk < d * d; ++jk) {
    if (u[jk].is_zero()) continue;
    const size_t j = jk / d, k = jk % d;
    for (size_t lm = 0; lm < d * d; ++lm) {
      if (v[lm].is_zero()) continue;
      const size_t l = lm / d, m = lm % d;
      FieldScalar f = u[jk] * v[lm];
      for (const auto& [p, c1] : mult_by_ij_[j][l]) {
        FieldScalar fc = f * c1;
        for (const auto& [q, c2] : mult_by_ij_[k][m]) out[p * d + q] += fc * c2;
      }
    }
  }
  return out;
}

FieldScalar FiniteHopfAlgebra::counit_apply(const ExactVector& a) const {
  return counit_.dot(a);
}

ExactVector FiniteHopfAlgebra::antipode_apply(const ExactVector& a) const {
  return antipode_ * a;
}

ExactMatrix FiniteHopfAlgebra::left_mult_matrix(size_t i) const {
  ExactMatrix m(field_, dim(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (const auto& [k, c] : mult_by_ij_[i][j]) m.at(k, j) += c;
  return m;
}

ExactMatrix FiniteHopfAlgebra::right_mult_matrix(size_t i) const {
  ExactMatrix m(field_, dim(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (const auto& [k, c] : mult_by_ij_[j][i]) m.at(k, j) += c;
  return m;
}

ExactMatrix FiniteHopfAlgebra::convolution_unit() const {
  return ExactMatrix::outer(unit_, counit_);
}

bool FiniteHopfAlgebra::is_valid() const {
  if (!valid_) valid_ = verify_hopf_axioms(*this).all_pass();
  return *valid_;
}

Element::Element(HopfPtr alg, ExactVector c) : algebra(std::move(alg)), coords(std::move(c)) {
  if (coords.size() != algebra->dim())
    throw std::invalid_argument("element length does not match dimension");
}

LinearEndo::LinearEndo(HopfPtr alg, ExactMatrix m) : algebra(std::move(alg)), matrix(std::move(m)) {
  if (matrix.rows() != algebra->dim() || matrix.cols() != algebra->dim())
    throw std::invalid_argument("endomorphism matrix shape does not match dimension");
}

namespace {

void require_same_algebra(const HopfPtr& a, const HopfPtr& b) {
  if (a.get() != b.get()) throw std::invalid_argument("elements of different algebras");
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  require_same_algebra(a.algebra, b.algebra);
  return Element(a.algebra, a.algebra->multiply(a.coords, b.coords));
}

Element comultiply_element(const Element& a) {
  return Element(a.algebra, a.algebra->comultiply(a.coords));
}

AxiomReport verify_hopf_axioms(const FiniteHopfAlgebra& h) {
  const size_t d = h.dim();
  const Field& f = h.field();
  AxiomReport report;

  std::vector<ExactVector> e;
  e.reserve(d);
  for (size_t i = 0; i < d; ++i) e.push_back(h.basis_vector(i));
  std::vector<ExactVector> prod(d * d, ExactVector(f, d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) prod[i * d + j] = h.multiply(e[i], e[j]);

  bool assoc = true;
  for (size_t i = 0; i < d && assoc; ++i)
    for (size_t j = 0; j < d && assoc; ++j)
      for (size_t k = 0; k < d && assoc; ++k)
        assoc = h.multiply(prod[i * d + j], e[k]) == h.multiply(e[i], prod[j * d + k]);
  report.checks.push_back({"associativity", assoc});

  bool unital = true;
  for (size_t i = 0; i < d && unital; ++i)
    unital = h.multiply(h.unit(), e[i]) == e[i] && h.multiply(e[i], h.unit()) == e[i];
  report.checks.push_back({"unitality", unital});

  const auto& ct = h.comult_table();
  bool coassoc = true;
  for (size_t i = 0; i < d && coassoc; ++i) {
    ExactVector lhs(f, d * d * d), rhs(f, d * d * d);
    for (const auto& t : ct[i]) {
      for (const auto& s : ct[t.j]) lhs[(s.j * d + s.k) * d + t.k] += t.c * s.c;
      for (const auto& s : ct[t.k]) rhs[(t.j * d + s.j) * d + s.k] += t.c * s.c;
    }
    coassoc = lhs == rhs;
  }
  report.checks.push_back({"coassociativity", coassoc});

  bool counital = true;
  for (size_t i = 0; i < d && counital; ++i) {
    ExactVector left(f, d), right(f, d);
    for (const auto& t : ct[i]) {
      left += e[t.k] * (t.c * h.counit()[t.j]);
      right += e[t.j] * (t.c * h.counit()[t.k]);
    }
    counital = left == e[i] && right == e[i];
  }
  report.checks.push_back({"counitality", counital});

  bool comult_alg = h.comultiply(h.unit()) == h.unit().tensor(h.unit());
  for (size_t i = 0; i < d && comult_alg; ++i)
    for (size_t j = 0; j < d && comult_alg; ++j)
      comult_alg = h.comultiply(prod[i * d + j]) ==
                   h.tensor_multiply(h.comultiply(e[i]), h.comultiply(e[j]));
  report.checks.push_back({"comultiplication is an algebra map", comult_alg});

  bool counit_alg = h.counit_apply(h.unit()).is_one();
  for (size_t i = 0; i < d && counit_alg; ++i)
    for (size_t j = 0; j < d && counit_alg; ++j)
      counit_alg = h.counit_apply(prod[i * d + j]) == h.counit()[i] * h.counit()[j];
  report.checks.push_back({"counit is an algebra map", counit_alg});

  ExactMatrix id = ExactMatrix::identity(f, d);
  ExactMatrix ue = h.convolution_unit();
  bool antipode = convolve(h, h.antipode(), id) == ue && convolve(h, id, h.antipode()) == ue;
  report.checks.push_back({"antipode axiom", antipode});

  report.s_squared_identity = (h.antipode() * h.antipode()).is_identity();
  return report;
}

HopfPtr dual(const FiniteHopfAlgebra& h) {
  std::vector<SparseTriple> mult, comult;
  for (const auto& t : h.comult_entries()) mult.push_back({t.j, t.k, t.i, t.c});
  for (const auto& t : h.mult_entries()) comult.push_back({t.k, t.i, t.j, t.c});
  std::vector<std::string> labels;
  for (const auto& b : h.basis()) labels.push_back(b + "*");
  return std::make_shared<FiniteHopfAlgebra>(h.name() + "*", h.field(), std::move(labels),
                                             std::move(mult), std::move(comult), h.counit(),
                                             h.unit(), h.antipode().transpose());
}

ExactMatrix convolve(const FiniteHopfAlgebra& h, const ExactMatrix& f, const ExactMatrix& g) {
  const size_t d = h.dim();
  if (f.rows() != d || f.cols() != d || g.rows() != d || g.cols() != d)
    throw std::invalid_argument("endomorphism matrix shape does not match dimension");
  ExactMatrix out(h.field(), d, d);
  for (size_t i = 0; i < d; ++i) {
    ExactVector col(h.field(), d);
    for (const auto& t : h.comult_table()[i]) col += h.multiply(f.col(t.j), g.col(t.k)) * t.c;
    out.set_col(i, col);
  }
  return out;
}

LinearEndo convolve(const LinearEndo& f, const LinearEndo& g) {
  require_same_algebra(f.algebra, g.algebra);
  return LinearEndo(f.algebra, convolve(*f.algebra, f.matrix, g.matrix));
}

StructureComparison structure_equal(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b) {
  std::ostringstream why;
  if (a.dim() != b.dim()) {
    why << "dimensions differ: " << a.dim() << " vs " << b.dim();
    return {false, why.str()};
  }
  if (a.field()->cyclotomic_order() != b.field()->cyclotomic_order()) {
    why << "fields differ: Q(zeta_" << a.field()->cyclotomic_order() << ") vs Q(zeta_"
        << b.field()->cyclotomic_order() << ")";
    return {false, why.str()};
  }
  const size_t d = a.dim();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      ExactVector pa = a.multiply(a.basis_vector(i), a.basis_vector(j));
      ExactVector pb = b.multiply(b.basis_vector(i), b.basis_vector(j));
      if (pa != pb) {
        why << "products of basis " << i << ", " << j << " differ: " << pa.str() << " vs "
            << pb.str();
        return {false, why.str()};
      }
    }
  for (size_t i = 0; i < d; ++i)
    if (a.comultiply(a.basis_vector(i)) != b.comultiply(b.basis_vector(i))) {
      why << "comultiplications of basis " << i << " differ";
      return {false, why.str()};
    }
  if (a.unit() != b.unit()) return {false, "units differ"};
  if (a.counit() != b.counit()) return {false, "counits differ"};
  if (a.antipode() != b.antipode()) return {false, "antipodes differ"};
  return {true, ""};
}

}  // namespace hopfsmash
