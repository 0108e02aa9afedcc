#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace hopfsmash {

class FieldSpec;

/// Shared, immutable description of a coefficient field Q(zeta_n).
using Field = std::shared_ptr<const FieldSpec>;

/// The cyclotomic field Q(zeta_n), represented by the n-th cyclotomic
/// polynomial Phi_n.  n = 1 (and n = 2) give the rationals.  Instances are
/// interned: FieldSpec::get(n) returns the same object for the same n.
class FieldSpec {
public:
  static Field get(unsigned cyclotomic_order);

  unsigned cyclotomic_order() const { return order_; }
  /// Degree of the extension, phi(n).  Scalars carry this many coefficients.
  unsigned degree() const { return degree_; }
  /// Monic modulus Phi_n, coefficient i belongs to x^i, size degree()+1.
  const std::vector<mpq_class>& modulus() const { return modulus_; }

private:
  explicit FieldSpec(unsigned order);

  unsigned order_;
  unsigned degree_;
  std::vector<mpq_class> modulus_;
};

/// An element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}.
/// Coefficients are always reduced rationals, so two scalars are equal
/// exactly when their coefficient vectors are equal.
class FieldScalar {
public:
  FieldScalar() : FieldScalar(FieldSpec::get(1)) {}
  explicit FieldScalar(Field field);
  FieldScalar(Field field, const mpq_class& rational_value);
  FieldScalar(Field field, long integer_value);

  static FieldScalar zero(const Field& field) { return FieldScalar(field); }
  static FieldScalar one(const Field& field) { return FieldScalar(field, 1); }
  /// z^k reduced modulo Phi_n.
  static FieldScalar root_power(const Field& field, unsigned k);

  const Field& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  /// The constant coefficient; meaningful mainly when is_rational().
  const mpq_class& rational_part() const { return coeffs_[0]; }

  FieldScalar operator-() const;
  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);

  FieldScalar operator*(const mpq_class& q) const;
  FieldScalar operator*(long v) const { return *this * mpq_class(v); }

  /// Exact multiplicative inverse; throws std::domain_error on zero.
  FieldScalar inverse() const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  /// Canonical literal, e.g. "0", "-3/2", "1/2*z", "1-z^2".
  std::string str() const;

  /// Parse a scalar literal.  Grammar (leading sign is accepted as an
  /// extension of the printed form):
  ///   expr     := ['+'|'-'] term (('+'|'-') term)*
  ///   term     := rational | rational '*' zpow | zpow
  ///   zpow     := 'z' ['^' nat]
  ///   rational := int ['/' posint]
  /// Throws std::invalid_argument on syntax errors and when 'z' is used
  /// over a field of cyclotomic order 1.
  static FieldScalar parse(const std::string& text, const Field& field);

private:
  void reduce(std::vector<mpq_class>& poly) const;

  Field field_;
  std::vector<mpq_class> coeffs_;
};

inline FieldScalar operator*(const mpq_class& q, const FieldScalar& s) { return s * q; }
inline FieldScalar operator*(long v, const FieldScalar& s) { return s * v; }

/// Throws std::invalid_argument unless both scalars live over the same
/// cyclotomic order.
void require_same_field(const FieldScalar& a, const FieldScalar& b);

}  // namespace hopfsmash
