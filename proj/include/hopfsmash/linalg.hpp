#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfsmash/field.hpp"

namespace hopfsmash {

/// Dense column vector (also used for covectors) over one FieldSpec.
class ExactVector {
public:
  ExactVector(Field field, size_t size);
  ExactVector(Field field, std::vector<FieldScalar> entries);

  const Field& field() const { return field_; }
  size_t size() const { return v_.size(); }
  FieldScalar& operator[](size_t i) { return v_[i]; }
  const FieldScalar& operator[](size_t i) const { return v_[i]; }

  bool is_zero() const;
  ExactVector operator+(const ExactVector& o) const;
  ExactVector operator-(const ExactVector& o) const;
  ExactVector operator-() const;
  ExactVector operator*(const FieldScalar& s) const;
  ExactVector& operator+=(const ExactVector& o);
  bool operator==(const ExactVector& o) const;
  bool operator!=(const ExactVector& o) const { return !(*this == o); }

  /// Sum of entrywise products (no conjugation).
  FieldScalar dot(const ExactVector& o) const;
  /// Tensor product, row-major: (u (x) v)[i*|v| + j] = u[i] v[j].
  ExactVector tensor(const ExactVector& o) const;

  std::string str() const;

private:
  Field field_;
  std::vector<FieldScalar> v_;
};

/// Dense row-major matrix over one FieldSpec.  All arithmetic is exact.
class ExactMatrix {
public:
  ExactMatrix(Field field, size_t rows, size_t cols);

  static ExactMatrix identity(const Field& field, size_t n);
  /// Column * row outer product.
  static ExactMatrix outer(const ExactVector& col, const ExactVector& row);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FieldScalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const FieldScalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const FieldScalar& s) const;
  ExactVector operator*(const ExactVector& v) const;

  ExactMatrix transpose() const;
  ExactMatrix pow(unsigned e) const;

  ExactVector col(size_t c) const;
  ExactVector row(size_t r) const;
  void set_col(size_t c, const ExactVector& v);

  std::string str() const;

private:
  Field field_;
  size_t rows_, cols_;
  std::vector<FieldScalar> a_;
};

/// Kronecker product with row-major block layout:
/// (A (x) B)[(i*rB + k), (j*cB + l)] = A[i,j] * B[k,l].
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Exact trace; throws std::invalid_argument on non-square input.
FieldScalar trace(const ExactMatrix& m);

/// Reduced row echelon form: pivot entries 1, pivot columns cleared.
ExactMatrix rref(const ExactMatrix& m);

/// Basis of the right null space { v : M v = 0 }, via exact Gauss-Jordan
/// elimination with leftmost-nonzero pivoting.  Deterministic: each basis
/// vector is scaled so its first nonzero coordinate is 1.
std::vector<ExactVector> kernel(const ExactMatrix& m);

size_t rank(const ExactMatrix& m);

/// Solves A X = B exactly; empty when the system is inconsistent or the
/// solution is not unique given the pivots (callers here always have
/// full-column-rank A).
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

/// Exact inverse; empty for singular matrices.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

}  // namespace hopfsmash
