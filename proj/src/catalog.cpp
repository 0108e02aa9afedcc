#include "hopfsmash/catalog.hpp"

#include <mutex>

#include "hopfsmash/integrals.hpp"

namespace hopfsmash {

namespace {

// Dense multiplication table used while an algebra is being assembled,
// before a FiniteHopfAlgebra exists to do the arithmetic.  Coproducts and
// antipodes of composite basis elements are generated from the generator
// values by symbolic multiplication, never entered by hand.
struct SymbolicAlgebra {
  Field f;
  size_t d;
  std::vector<std::vector<ExactVector>> prod;

  SymbolicAlgebra(Field field, size_t dim)
      : f(std::move(field)), d(dim), prod(dim, std::vector<ExactVector>(dim, ExactVector(f, dim))) {}

  ExactVector basis(size_t i) const {
    ExactVector v(f, d);
    v[i] = FieldScalar::one(f);
    return v;
  }

  ExactVector tensor_basis(size_t i, size_t j) const {
    ExactVector v(f, d * d);
    v[i * d + j] = FieldScalar::one(f);
    return v;
  }

  ExactVector mul(const ExactVector& u, const ExactVector& v) const {
    ExactVector out(f, d);
    for (size_t i = 0; i < d; ++i) {
      if (u[i].is_zero()) continue;
      for (size_t j = 0; j < d; ++j)
        if (!v[j].is_zero()) out += prod[i][j] * (u[i] * v[j]);
    }
    return out;
  }

  // Componentwise product on the tensor square.
  ExactVector tensor_mul(const ExactVector& u, const ExactVector& v) const {
    ExactVector out(f, d * d);
    for (size_t p = 0; p < d * d; ++p) {
      if (u[p].is_zero()) continue;
      for (size_t q = 0; q < d * d; ++q) {
        if (v[q].is_zero()) continue;
        const ExactVector& left = prod[p / d][q / d];
        const ExactVector& right = prod[p % d][q % d];
        const FieldScalar uv = u[p] * v[q];
        for (size_t l = 0; l < d; ++l) {
          if (left[l].is_zero()) continue;
          for (size_t r = 0; r < d; ++r)
            if (!right[r].is_zero()) out[l * d + r] += left[l] * right[r] * uv;
        }
      }
    }
    return out;
  }

  std::vector<SparseTriple> mult_triples() const {
    std::vector<SparseTriple> out;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k)
          if (!prod[i][j][k].is_zero()) out.push_back({i, j, k, prod[i][j][k]});
    return out;
  }

  std::vector<SparseTriple> comult_triples(const std::vector<ExactVector>& columns) const {
    std::vector<SparseTriple> out;
    for (size_t i = 0; i < d; ++i)
      for (size_t p = 0; p < d * d; ++p)
        if (!columns[i][p].is_zero()) out.push_back({i, p / d, p % d, columns[i][p]});
    return out;
  }
};

void require_entry_valid(const HopfPtr& h) {
  if (!h->is_valid())
    throw VerificationError("catalog algebra " + h->name() + " failed the axiom suite:\n" +
                            verify_hopf_axioms(*h).summary());
}

// Basis monomial x^a y^b z^c at index a + 2b + 4c; relations x^2 = y^2 = 1,
// xy = yx, zx = yz, zy = xz, z^2 = (1 + x + y - xy)/2.
HopfPtr build_h8() {
  Field f = FieldSpec::get(1);
  SymbolicAlgebra alg(f, 8);
  const FieldScalar one = FieldScalar::one(f);
  const FieldScalar half(f, mpq_class(1, 2));
  auto idx = [](unsigned a, unsigned b, unsigned c) {
    return size_t((a & 1u) + 2u * (b & 1u) + 4u * c);
  };

  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) {
      const unsigned a1 = i & 1u, b1 = (i >> 1) & 1u, c1 = (i >> 2) & 1u;
      const unsigned a2 = j & 1u, b2 = (j >> 1) & 1u, c2 = (j >> 2) & 1u;
      // Moving z across x^a2 y^b2 exchanges the two exponents.
      const unsigned alpha = c1 ? a1 + b2 : a1 + a2;
      const unsigned beta = c1 ? b1 + a2 : b1 + b2;
      ExactVector& out = alg.prod[i][j];
      if (c1 + c2 < 2) {
        out[idx(alpha, beta, c1 + c2)] = one;
      } else {
        out[idx(alpha, beta, 0)] += half;
        out[idx(alpha + 1, beta, 0)] += half;
        out[idx(alpha, beta + 1, 0)] += half;
        out[idx(alpha + 1, beta + 1, 0)] -= half;
      }
    }

  ExactVector dx = alg.tensor_basis(1, 1);
  ExactVector dy = alg.tensor_basis(2, 2);
  ExactVector dz(f, 64);
  dz[4 * 8 + 4] = half;   // z (x) z
  dz[4 * 8 + 5] = half;   // z (x) xz
  dz[6 * 8 + 4] = half;   // yz (x) z
  dz[6 * 8 + 5] = -half;  // yz (x) xz

  std::vector<ExactVector> delta;
  ExactVector s_x = alg.basis(1), s_y = alg.basis(2), s_z = alg.basis(4);
  ExactMatrix antipode(f, 8, 8);
  ExactVector unit = alg.basis(0);
  ExactVector counit(f, 8);
  for (size_t i = 0; i < 8; ++i) {
    const unsigned a = i & 1u, b = (i >> 1) & 1u, c = (i >> 2) & 1u;
    ExactVector dc = alg.tensor_basis(0, 0);
    if (a) dc = alg.tensor_mul(dc, dx);
    if (b) dc = alg.tensor_mul(dc, dy);
    if (c) dc = alg.tensor_mul(dc, dz);
    delta.push_back(std::move(dc));

    // S is anti-multiplicative and fixes the generators.
    ExactVector s = alg.basis(0);
    if (c) s = alg.mul(s, s_z);
    if (b) s = alg.mul(s, s_y);
    if (a) s = alg.mul(s, s_x);
    antipode.set_col(i, s);
    counit[i] = one;
  }

  auto h = std::make_shared<FiniteHopfAlgebra>(
      "H8", f, std::vector<std::string>{"1", "x", "y", "xy", "z", "xz", "yz", "xyz"},
      alg.mult_triples(), alg.comult_triples(delta), unit, counit, antipode);
  require_entry_valid(h);
  return h;
}

// Basis monomial g^a x^b y^c at index a + 2b + 4c; relations gx = -xg,
// gy = -yg, xy = -yx, g^2 = 1, x^2 = y^2 = 0.
HopfPtr build_nichols8(const Field& f) {
  SymbolicAlgebra alg(f, 8);
  const FieldScalar one = FieldScalar::one(f);
  auto idx = [](unsigned a, unsigned b, unsigned c) {
    return size_t((a & 1u) + 2u * b + 4u * c);
  };

  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) {
      const unsigned a1 = i & 1u, b1 = (i >> 1) & 1u, c1 = (i >> 2) & 1u;
      const unsigned a2 = j & 1u, b2 = (j >> 1) & 1u, c2 = (j >> 2) & 1u;
      if (b1 + b2 > 1 || c1 + c2 > 1) continue;  // x^2 = y^2 = 0
      // g^a2 passes b1+c1 odd generators; x^b2 passes y^c1.
      const bool negative = ((a2 * (b1 + c1) + b2 * c1) & 1u) != 0;
      alg.prod[i][j][idx(a1 + a2, b1 + b2, c1 + c2)] = negative ? -one : one;
    }

  ExactVector dg = alg.tensor_basis(1, 1);
  ExactVector dx = alg.tensor_basis(2, 1) + alg.tensor_basis(0, 2);  // x(x)g + 1(x)x
  ExactVector dy = alg.tensor_basis(4, 1) + alg.tensor_basis(0, 4);  // y(x)g + 1(x)y

  std::vector<ExactVector> delta;
  ExactVector s_g = alg.basis(1), s_x = alg.basis(3), s_y = alg.basis(5);  // S(x) = gx, S(y) = gy
  ExactMatrix antipode(f, 8, 8);
  ExactVector unit = alg.basis(0);
  ExactVector counit(f, 8);
  counit[0] = one;
  counit[1] = one;
  for (size_t i = 0; i < 8; ++i) {
    const unsigned a = i & 1u, b = (i >> 1) & 1u, c = (i >> 2) & 1u;
    ExactVector dc = alg.tensor_basis(0, 0);
    if (a) dc = alg.tensor_mul(dc, dg);
    if (b) dc = alg.tensor_mul(dc, dx);
    if (c) dc = alg.tensor_mul(dc, dy);
    delta.push_back(std::move(dc));

    ExactVector s = alg.basis(0);
    if (c) s = alg.mul(s, s_y);
    if (b) s = alg.mul(s, s_x);
    if (a) s = alg.mul(s, s_g);
    antipode.set_col(i, s);
  }

  auto h = std::make_shared<FiniteHopfAlgebra>(
      "nichols8", f, std::vector<std::string>{"1", "g", "x", "gx", "y", "gy", "xy", "gxy"},
      alg.mult_triples(), alg.comult_triples(delta), unit, counit, antipode);
  require_entry_valid(h);
  return h;
}

const HopfPtr& nichols8_instance(const Field& f) {
  static std::mutex mu;
  static std::map<unsigned, HopfPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f->cyclotomic_order());
  if (it == cache.end()) it = cache.emplace(f->cyclotomic_order(), build_nichols8(f)).first;
  return it->second;
}

HopfAutomorphism group_power_automorphism(const HopfPtr& kg, const GroupTable& g, long e) {
  ExactMatrix m(kg->field(), g.order(), g.order());
  for (size_t x = 0; x < g.order(); ++x)
    m.at(g.power(x, e), x) = FieldScalar::one(kg->field());
  return verify_automorphism(kg, m);
}

HopfAutomorphism conjugation_automorphism(const HopfPtr& kg, const GroupTable& g, size_t t) {
  ExactMatrix m(kg->field(), g.order(), g.order());
  for (size_t x = 0; x < g.order(); ++x)
    m.at(g.mul(g.mul(t, x), g.inv(t)), x) = FieldScalar::one(kg->field());
  return verify_automorphism(kg, m);
}

CatalogEntry group_entry(const std::string& name, const GroupTable& g, const std::string& notes) {
  Field f = FieldSpec::get(1);
  HopfPtr h = group_algebra(g, f);
  CatalogEntry e{name, h, {}, {}, notes};
  e.automorphisms.emplace("id", identity_automorphism(h));
  e.representations.emplace("trivial", trivial_rep(h));
  e.representations.emplace("regular", regular_rep(h));
  return e;
}

CatalogEntry dual_group_entry(const std::string& name, const GroupTable& g,
                              const std::string& notes) {
  Field f = FieldSpec::get(1);
  HopfPtr h = dual_group_algebra(g, f);
  CatalogEntry e{name, h, {}, {}, notes};
  e.automorphisms.emplace("id", identity_automorphism(h));
  e.representations.emplace("trivial", trivial_rep(h));
  e.representations.emplace("regular", regular_rep(h));
  return e;
}

CatalogEntry build_h8_entry() {
  HopfPtr h = build_h8();
  CatalogEntry e{"h8", h, {}, {},
                 "dimension 8, semisimple; z^2 = (1+x+y-xy)/2 with zx = yz, zy = xz"};
  e.automorphisms.emplace("id", identity_automorphism(h));

  // tau4: exchange x and y, z -> (-z + xz + yz + xyz)/2, extended
  // multiplicatively over the monomial basis.
  const Field& f = h->field();
  const FieldScalar half(f, mpq_class(1, 2));
  ExactVector tz(f, 8);
  tz[4] = -half;
  tz[5] = half;
  tz[6] = half;
  tz[7] = half;
  ExactMatrix tau(f, 8, 8);
  for (size_t i = 0; i < 8; ++i) {
    const unsigned a = i & 1u, b = (i >> 1) & 1u, c = (i >> 2) & 1u;
    ExactVector img = h->basis_vector(0);
    if (a) img = h->multiply(img, h->basis_vector(2));  // tau(x) = y
    if (b) img = h->multiply(img, h->basis_vector(1));  // tau(y) = x
    if (c) img = h->multiply(img, tz);
    tau.set_col(i, img);
  }
  e.automorphisms.emplace("tau4", verify_automorphism(h, tau));

  e.representations.emplace("trivial", trivial_rep(h));
  e.representations.emplace("regular", regular_rep(h));

  // The two-dimensional simple module: x -> diag(1,-1), y -> diag(-1,1),
  // z -> the coordinate swap.
  ExactMatrix nx = ExactMatrix::identity(f, 2), ny = ExactMatrix::identity(f, 2), nz(f, 2, 2);
  nx.at(1, 1) = -FieldScalar::one(f);
  ny.at(0, 0) = -FieldScalar::one(f);
  nz.at(0, 1) = FieldScalar::one(f);
  nz.at(1, 0) = FieldScalar::one(f);
  std::vector<ExactMatrix> nmats;
  for (size_t i = 0; i < 8; ++i) {
    const unsigned a = i & 1u, b = (i >> 1) & 1u, c = (i >> 2) & 1u;
    ExactMatrix m = ExactMatrix::identity(f, 2);
    if (a) m = m * nx;
    if (b) m = m * ny;
    if (c) m = m * nz;
    nmats.push_back(std::move(m));
  }
  e.representations.emplace("N", verify_representation(h, nmats));
  return e;
}

CatalogEntry build_nichols8_entry() {
  Field f = FieldSpec::get(1);
  const HopfPtr& h = nichols8_instance(f);
  CatalogEntry e{"nichols8", h, {}, {},
                 "dimension 8, not semisimple; g group-like, x and y skew-primitive"};
  const FieldScalar one = FieldScalar::one(f), zero = FieldScalar::zero(f);
  e.automorphisms.emplace("id", identity_automorphism(h));
  e.automorphisms.emplace("neg", nichols8_automorphism(-one, zero, zero, -one));
  e.automorphisms.emplace("diag", nichols8_automorphism(one, zero, zero, -one));
  e.automorphisms.emplace("swap", nichols8_automorphism(zero, one, one, zero));
  e.automorphisms.emplace("rot3", nichols8_automorphism(zero, -one, one, -one));
  e.representations.emplace("trivial", trivial_rep(h));
  e.representations.emplace("regular", regular_rep(h));

  // The sign character: g -> -1, both skew-primitives -> 0.
  std::vector<ExactMatrix> sgn(8, ExactMatrix(f, 1, 1));
  sgn[0].at(0, 0) = one;
  sgn[1].at(0, 0) = -one;
  e.representations.emplace("sgn", verify_representation(h, sgn));
  return e;
}

CatalogEntry build_nichols8_z3_entry() {
  Field f = FieldSpec::get(3);
  const HopfPtr& h = nichols8_instance(f);
  CatalogEntry e{"nichols8_z3", h, {}, {},
                 "the same algebra over Q(zeta3), with the order-3 diagonal twist"};
  const FieldScalar zero = FieldScalar::zero(f);
  e.automorphisms.emplace("id", identity_automorphism(h));
  e.automorphisms.emplace(
      "zdiag",
      nichols8_automorphism(FieldScalar::root_power(f, 1), zero, zero, FieldScalar::root_power(f, 2)));
  e.representations.emplace("trivial", trivial_rep(h));
  e.representations.emplace("regular", regular_rep(h));
  return e;
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> entries;
  auto put = [&entries](CatalogEntry e) { entries.emplace(e.name, std::move(e)); };

  put(build_h8_entry());
  put(build_nichols8_entry());
  put(build_nichols8_z3_entry());

  for (size_t n = 2; n <= 5; ++n)
    put(group_entry("kC" + std::to_string(n), cyclic_group(n),
                    "group algebra of the cyclic group of order " + std::to_string(n)));
  {
    CatalogEntry& kc3 = entries.at("kC3");
    kc3.automorphisms.emplace("inversion",
                              group_power_automorphism(kc3.algebra, cyclic_group(3), -1));
    CatalogEntry& kc4 = entries.at("kC4");
    kc4.automorphisms.emplace("inversion",
                              group_power_automorphism(kc4.algebra, cyclic_group(4), -1));
    CatalogEntry& kc5 = entries.at("kC5");
    kc5.automorphisms.emplace("square",
                              group_power_automorphism(kc5.algebra, cyclic_group(5), 2));
  }

  put(group_entry("kS3", symmetric_group_3(), "group algebra of the symmetric group on 3 letters"));
  entries.at("kS3").automorphisms.emplace(
      "conj", conjugation_automorphism(entries.at("kS3").algebra, symmetric_group_3(), 1));

  put(dual_group_entry("k^C2", cyclic_group(2), "functions on the cyclic group of order 2"));
  put(dual_group_entry("k^C3", cyclic_group(3), "functions on the cyclic group of order 3"));
  put(dual_group_entry("k^S3", symmetric_group_3(), "functions on the symmetric group on 3 letters"));
  return entries;
}

const std::map<std::string, CatalogEntry>& all_entries() {
  static const std::map<std::string, CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace

CatalogEntry h8() { return all_entries().at("h8"); }

CatalogEntry nichols8() { return all_entries().at("nichols8"); }

CatalogEntry nichols8_z3() { return all_entries().at("nichols8_z3"); }

HopfAutomorphism nichols8_automorphism(const FieldScalar& a, const FieldScalar& b,
                                       const FieldScalar& c, const FieldScalar& d) {
  require_same_field(a, b);
  require_same_field(a, c);
  require_same_field(a, d);
  if ((a * d - b * c).is_zero())
    throw VerificationError("automorphism parameter matrix is singular");
  const Field& f = a.field();
  const HopfPtr& h = nichols8_instance(f);

  ExactVector tx = h->basis_vector(2) * a + h->basis_vector(4) * b;
  ExactVector ty = h->basis_vector(2) * c + h->basis_vector(4) * d;
  ExactMatrix m(f, 8, 8);
  for (size_t i = 0; i < 8; ++i) {
    const unsigned ga = i & 1u, xb = (i >> 1) & 1u, yc = (i >> 2) & 1u;
    ExactVector img = h->basis_vector(ga);  // g is fixed
    if (xb) img = h->multiply(img, tx);
    if (yc) img = h->multiply(img, ty);
    m.set_col(i, img);
  }
  return verify_automorphism(h, m);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : all_entries()) names.push_back(name);
  return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& entries = all_entries();
  auto it = entries.find(name);
  if (it == entries.end()) {
    std::string known;
    for (const auto& [n, e] : entries) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown catalog entry '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

}  // namespace hopfsmash
