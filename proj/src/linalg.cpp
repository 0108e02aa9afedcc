#include "hopfsmash/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfsmash {

namespace {

void require_compatible(const Field& a, const Field& b) {
  if (a->cyclotomic_order() != b->cyclotomic_order())
    throw std::invalid_argument("matrix/vector operands over different fields");
}

}  // namespace

ExactVector::ExactVector(Field field, size_t size)
    : field_(std::move(field)), v_(size, FieldScalar(field_)) {}

ExactVector::ExactVector(Field field, std::vector<FieldScalar> entries)
    : field_(std::move(field)), v_(std::move(entries)) {
  for (const auto& e : v_)
    if (e.field()->cyclotomic_order() != field_->cyclotomic_order())
      throw std::invalid_argument("vector entry over wrong field");
}

bool ExactVector::is_zero() const {
  for (const auto& e : v_)
    if (!e.is_zero()) return false;
  return true;
}

ExactVector ExactVector::operator+(const ExactVector& o) const {
  ExactVector out(*this);
  out += o;
  return out;
}

ExactVector& ExactVector::operator+=(const ExactVector& o) {
  require_compatible(field_, o.field_);
  if (size() != o.size()) throw std::invalid_argument("vector size mismatch");
  for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ExactVector ExactVector::operator-(const ExactVector& o) const {
  require_compatible(field_, o.field_);
  if (size() != o.size()) throw std::invalid_argument("vector size mismatch");
  ExactVector out(*this);
  for (size_t i = 0; i < v_.size(); ++i) out.v_[i] -= o.v_[i];
  return out;
}

ExactVector ExactVector::operator-() const {
  ExactVector out(*this);
  for (auto& e : out.v_) e = -e;
  return out;
}

ExactVector ExactVector::operator*(const FieldScalar& s) const {
  ExactVector out(*this);
  for (auto& e : out.v_) e *= s;
  return out;
}

bool ExactVector::operator==(const ExactVector& o) const {
  if (size() != o.size()) return false;
  for (size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != o.v_[i]) return false;
  return true;
}

FieldScalar ExactVector::dot(const ExactVector& o) const {
  require_compatible(field_, o.field_);
  if (size() != o.size()) throw std::invalid_argument("vector size mismatch");
  FieldScalar acc(field_);
  for (size_t i = 0; i < v_.size(); ++i)
    if (!v_[i].is_zero() && !o.v_[i].is_zero()) acc += v_[i] * o.v_[i];
  return acc;
}

ExactVector ExactVector::tensor(const ExactVector& o) const {
  require_compatible(field_, o.field_);
  ExactVector out(field_, size() * o.size());
  for (size_t i = 0; i < size(); ++i) {
    if (v_[i].is_zero()) continue;
    for (size_t j = 0; j < o.size(); ++j)
      if (!o.v_[j].is_zero()) out[i * o.size() + j] = v_[i] * o.v_[j];
  }
  return out;
}

std::string ExactVector::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) out << ", ";
    out << v_[i].str();
  }
  out << ')';
  return out.str();
}

ExactMatrix::ExactMatrix(Field field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, FieldScalar(field_)) {}

ExactMatrix ExactMatrix::identity(const Field& field, size_t n) {
  ExactMatrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(field);
  return m;
}

ExactMatrix ExactMatrix::outer(const ExactVector& col, const ExactVector& row) {
  require_compatible(col.field(), row.field());
  ExactMatrix m(col.field(), col.size(), row.size());
  for (size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) m.at(i, j) = col[i] * row[j];
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  require_compatible(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out(*this);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  require_compatible(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out(*this);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  require_compatible(field_, o.field_);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const FieldScalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const FieldScalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator*(const FieldScalar& s) const {
  ExactMatrix out(*this);
  for (auto& e : out.a_) e *= s;
  return out;
}

ExactVector ExactMatrix::operator*(const ExactVector& v) const {
  require_compatible(field_, v.field());
  if (cols_ != v.size()) throw std::invalid_argument("matrix*vector shape mismatch");
  ExactVector out(field_, rows_);
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

ExactMatrix ExactMatrix::pow(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix power needs a square matrix");
  ExactMatrix acc = identity(field_, rows_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

ExactVector ExactMatrix::col(size_t c) const {
  ExactVector out(field_, rows_);
  for (size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

ExactVector ExactMatrix::row(size_t r) const {
  ExactVector out(field_, cols_);
  for (size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

void ExactMatrix::set_col(size_t c, const ExactVector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
  for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::string ExactMatrix::str() const {
  std::ostringstream out;
  for (size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : " ");
    for (size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << at(r, c).str();
    }
    out << (r + 1 == rows_ ? "]" : ";\n");
  }
  return out.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  require_compatible(a.field(), b.field());
  ExactMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const FieldScalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          const FieldScalar& bkl = b.at(k, l);
          if (!bkl.is_zero()) out.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return out;
}

FieldScalar trace(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace of a non-square matrix");
  FieldScalar acc(m.field());
  for (size_t i = 0; i < m.rows(); ++i) acc += m.at(i, i);
  return acc;
}

namespace {

// Gauss-Jordan to reduced row echelon form.  Pivot choice: leftmost column,
// first nonzero row.  Returns pivot column indices.
std::vector<size_t> rref_in_place(ExactMatrix& m) {
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    size_t sel = prow;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (size_t j = c; j < m.cols(); ++j) std::swap(m.at(prow, j), m.at(sel, j));
    FieldScalar inv = m.at(prow, c).inverse();
    for (size_t j = c; j < m.cols(); ++j) m.at(prow, j) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m.at(r, c).is_zero()) continue;
      FieldScalar f = m.at(r, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(prow, j);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

}  // namespace

ExactMatrix rref(const ExactMatrix& m) {
  ExactMatrix r = m;
  (void)rref_in_place(r);
  return r;
}

std::vector<ExactVector> kernel(const ExactMatrix& m) {
  ExactMatrix r = m;
  std::vector<size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  const FieldScalar one = FieldScalar::one(m.field());
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    ExactVector v(m.field(), m.cols());
    v[c] = one;
    for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -r.at(p, c);
    // Scale so the first nonzero coordinate is 1; integral extraction
    // depends on this normalization.
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (!v[i].is_one()) v = v * v[i].inverse();
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t rank(const ExactMatrix& m) {
  ExactMatrix r = m;
  return rref_in_place(r).size();
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  require_compatible(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  ExactMatrix aug(a.field(), a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    for (size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
  }
  std::vector<size_t> pivots = rref_in_place(aug);
  // Unique solution requires a pivot in every column of a and none in b.
  for (size_t c : pivots)
    if (c >= a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;
  ExactMatrix x(a.field(), a.cols(), b.cols());
  for (size_t p = 0; p < pivots.size(); ++p)
    for (size_t c = 0; c < b.cols(); ++c) x.at(pivots[p], c) = aug.at(p, a.cols() + c);
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  return solve(m, ExactMatrix::identity(m.field(), m.rows()));
}

}  // namespace hopfsmash
