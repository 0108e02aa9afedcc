#include "hopfsmash/field.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfsmash {

namespace {

// Dense polynomials over Q, coefficient i on x^i, no trailing zeros enforced
// by strip().
using Poly = std::vector<mpq_class>;

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  strip(out);
  return out;
}

// Exact division, remainder must vanish.
Poly poly_divexact(Poly num, const Poly& den) {
  Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
  while (num.size() >= den.size() && !num.empty()) {
    mpq_class c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    strip(num);
  }
  if (!num.empty()) throw std::logic_error("cyclotomic polynomial division left a remainder");
  return quot;
}

Poly cyclotomic(unsigned n) {
  if (n == 1) return {mpq_class(-1), mpq_class(1)};  // x - 1
  Poly xn_minus_1(n + 1, mpq_class(0));
  xn_minus_1[0] = -1;
  xn_minus_1[n] = 1;
  Poly den = {mpq_class(1)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic(d));
  return poly_divexact(std::move(xn_minus_1), den);
}

}  // namespace

FieldSpec::FieldSpec(unsigned order) : order_(order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
  modulus_ = cyclotomic(order);
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
}

Field FieldSpec::get(unsigned cyclotomic_order) {
  static std::mutex mu;
  static std::map<unsigned, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cyclotomic_order);
  if (it != cache.end()) return it->second;
  Field f(new FieldSpec(cyclotomic_order));
  cache.emplace(cyclotomic_order, f);
  return f;
}

FieldScalar::FieldScalar(Field field)
    : field_(std::move(field)), coeffs_(field_->degree(), mpq_class(0)) {}

FieldScalar::FieldScalar(Field field, const mpq_class& rational_value) : FieldScalar(std::move(field)) {
  coeffs_[0] = rational_value;
  coeffs_[0].canonicalize();
}

FieldScalar::FieldScalar(Field field, long integer_value)
    : FieldScalar(std::move(field), mpq_class(integer_value)) {}

FieldScalar FieldScalar::root_power(const Field& field, unsigned k) {
  FieldScalar s(field);
  std::vector<mpq_class> poly(k + 1, mpq_class(0));
  poly[k] = 1;
  s.reduce(poly);
  for (unsigned i = 0; i < field->degree(); ++i)
    s.coeffs_[i] = i < poly.size() ? poly[i] : mpq_class(0);
  return s;
}

void FieldScalar::reduce(std::vector<mpq_class>& poly) const {
  const auto& mod = field_->modulus();
  const size_t deg = mod.size() - 1;
  while (poly.size() > deg) {
    mpq_class c = poly.back();
    size_t shift = poly.size() - 1 - deg;
    for (size_t i = 0; i <= deg; ++i) poly[shift + i] -= c * mod[i];
    poly.pop_back();
    while (poly.size() > deg && poly.back() == 0) poly.pop_back();
  }
}

bool FieldScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool FieldScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void require_same_field(const FieldScalar& a, const FieldScalar& b) {
  if (a.field()->cyclotomic_order() != b.field()->cyclotomic_order())
    throw std::invalid_argument("scalars over different cyclotomic fields");
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar out(field_);
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  FieldScalar out(*this);
  out += o;
  return out;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  FieldScalar out(*this);
  out -= o;
  return out;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  require_same_field(*this, o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  require_same_field(*this, o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same_field(*this, o);
  const size_t deg = coeffs_.size();
  if (deg == 1) {
    FieldScalar out(field_);
    out.coeffs_[0] = coeffs_[0] * o.coeffs_[0];
    return out;
  }
  std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
  for (size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < deg; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(prod);
  FieldScalar out(field_);
  for (size_t i = 0; i < deg && i < prod.size(); ++i) out.coeffs_[i] = prod[i];
  return out;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  *this = *this * o;
  return *this;
}

FieldScalar FieldScalar::operator*(const mpq_class& q) const {
  FieldScalar out(field_);
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * q;
  return out;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_n)");
  const size_t deg = coeffs_.size();
  if (deg == 1) {
    FieldScalar out(field_);
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid in Q[x]: u*a + v*Phi = gcd.  Phi_n is irreducible over Q,
  // so the gcd of a nonzero scalar with Phi_n is a nonzero constant.
  Poly r0 = field_->modulus();
  Poly r1(coeffs_);
  strip(r1);
  Poly u0 = {};              // coefficient of a in r0
  Poly u1 = {mpq_class(1)};  // coefficient of a in r1
  while (r1.size() > 1) {
    // quotient of r0 by r1
    Poly q;
    Poly rem = r0;
    q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, mpq_class(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      mpq_class c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      strip(rem);
    }
    Poly nu = u0;  // u0 - q*u1
    Poly qu = poly_mul(q, u1);
    if (nu.size() < qu.size()) nu.resize(qu.size(), mpq_class(0));
    for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    strip(nu);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  if (r1.empty()) throw std::logic_error("gcd with irreducible modulus vanished");
  mpq_class lead = r1[0];
  FieldScalar out(field_);
  for (size_t i = 0; i < u1.size() && i < deg; ++i) out.coeffs_[i] = u1[i] / lead;
  return out;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (field_->cyclotomic_order() != o.field_->cyclotomic_order()) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

std::string FieldScalar::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
      if (c == 1)
        term = zp;
      else if (c == -1)
        term = "-" + zp;
      else
        term = c.get_str() + "*" + zp;
    }
    if (!first && term[0] != '-') out << '+';
    out << term;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

namespace {

struct ScalarParser {
  const std::string& text;
  size_t pos = 0;
  const Field& field;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar literal '" + text + "': " + what + " at position " +
                                std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  unsigned long parse_nat() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return std::stoul(text.substr(start, pos - start));
  }

  mpq_class parse_rational(bool negate) {
    mpz_class num(static_cast<long>(parse_nat()));
    mpq_class q(num);
    if (peek() == '/') {
      ++pos;
      unsigned long den = parse_nat();
      if (den == 0) fail("zero denominator");
      q = mpq_class(num, mpz_class(static_cast<long>(den)));
      q.canonicalize();
    }
    return negate ? mpq_class(-q) : q;
  }

  FieldScalar parse_zpow(const mpq_class& coeff) {
    ++pos;  // consume 'z'
    if (field->cyclotomic_order() == 1)
      fail("'z' not available over cyclotomic order 1");
    unsigned long e = 1;
    if (peek() == '^') {
      ++pos;
      e = parse_nat();
    }
    return FieldScalar::root_power(field, static_cast<unsigned>(e)) * coeff;
  }

  FieldScalar parse_term(bool negate) {
    char c = peek();
    if (c == '+' || c == '-') {  // signed int inside a term
      ++pos;
      if (c == '-') negate = !negate;
    }
    if (peek() == 'z') return parse_zpow(negate ? mpq_class(-1) : mpq_class(1));
    mpq_class q = parse_rational(negate);
    if (peek() == '*') {
      ++pos;
      if (peek() != 'z') fail("expected 'z' after '*'");
      return parse_zpow(q);
    }
    return FieldScalar(field, q);
  }

  FieldScalar parse_expr() {
    FieldScalar acc(field);
    acc += parse_term(false);
    while (true) {
      char c = peek();
      if (c == '\0') break;
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos;
      acc += parse_term(c == '-');
    }
    return acc;
  }
};

}  // namespace

FieldScalar FieldScalar::parse(const std::string& text, const Field& field) {
  ScalarParser p{text, 0, field};
  if (p.peek() == '\0') p.fail("empty literal");
  return p.parse_expr();
}

}  // namespace hopfsmash
