#include "hopfsmash/io.hpp"

#include <fstream>

namespace hopfsmash {

namespace {

Json sparse_matrix_to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.push_back({{"i", i}, {"j", j}, {"c", m.at(i, j).str()}});
  return out;
}

ExactMatrix sparse_matrix_from_json(const Json& j, const Field& f, size_t rows, size_t cols,
                                    const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of sparse entries");
  ExactMatrix m(f, rows, cols);
  for (const auto& e : j) {
    const size_t r = e.at("i").get<size_t>();
    const size_t c = e.at("j").get<size_t>();
    if (r >= rows || c >= cols)
      throw std::invalid_argument(what + " entry out of range: (" + std::to_string(r) + ", " +
                                  std::to_string(c) + ")");
    m.at(r, c) = FieldScalar::parse(e.at("c").get<std::string>(), f);
  }
  return m;
}

Json dense_vector_to_json(const ExactVector& v) {
  Json out = Json::array();
  for (size_t i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

ExactVector dense_vector_from_json(const Json& j, const Field& f, size_t size,
                                   const std::string& what) {
  if (!j.is_array() || j.size() != size)
    throw std::invalid_argument(what + " must be a dense array of " + std::to_string(size) +
                                " scalar literals");
  ExactVector v(f, size);
  for (size_t i = 0; i < size; ++i) v[i] = FieldScalar::parse(j[i].get<std::string>(), f);
  return v;
}

Json triples_to_json(const std::vector<SparseTriple>& entries) {
  Json out = Json::array();
  for (const auto& t : entries)
    out.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", t.c.str()}});
  return out;
}

std::vector<SparseTriple> triples_from_json(const Json& j, const Field& f, size_t dim,
                                            const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of sparse entries");
  std::vector<SparseTriple> out;
  for (const auto& e : j) {
    SparseTriple t{e.at("i").get<size_t>(), e.at("j").get<size_t>(), e.at("k").get<size_t>(),
                   FieldScalar::parse(e.at("c").get<std::string>(), f)};
    if (t.i >= dim || t.j >= dim || t.k >= dim)
      throw std::invalid_argument(what + " entry out of range");
    out.push_back(std::move(t));
  }
  return out;
}

// The algebra reference inside automorphism/action/representation files is
// informative; the data is bound to the algebra the caller resolved.  A
// catalog reference that names a structurally different algebra is a hard
// error, anything else is accepted after dimension checks.
void check_algebra_ref(const Json& j, const HopfPtr& h) {
  const std::string ref = j.at("algebra").get<std::string>();
  if (ref.rfind("catalog:", 0) == 0) {
    HopfPtr named = resolve_algebra(ref);
    StructureComparison cmp = structure_equal(*named, *h);
    if (!cmp.equal)
      throw std::invalid_argument("file is bound to " + ref +
                                  ", which differs from the supplied algebra: " + cmp.detail);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace

Json algebra_to_json(const FiniteHopfAlgebra& h) {
  Json j;
  j["name"] = h.name();
  j["field"] = {{"cyclotomic_order", h.field()->cyclotomic_order()}};
  j["dimension"] = h.dim();
  j["basis"] = h.basis();
  j["unit"] = dense_vector_to_json(h.unit());
  j["counit"] = dense_vector_to_json(h.counit());
  j["mult"] = triples_to_json(h.mult_entries());
  j["comult"] = triples_to_json(h.comult_entries());
  j["antipode"] = sparse_matrix_to_json(h.antipode());
  return j;
}

HopfPtr algebra_from_json(const Json& j) {
  Field f = FieldSpec::get(j.at("field").at("cyclotomic_order").get<unsigned>());
  const size_t d = j.at("dimension").get<size_t>();
  auto basis = j.at("basis").get<std::vector<std::string>>();
  if (basis.size() != d)
    throw std::invalid_argument("basis has " + std::to_string(basis.size()) +
                                " labels but dimension is " + std::to_string(d));
  return std::make_shared<FiniteHopfAlgebra>(
      j.at("name").get<std::string>(), f, std::move(basis),
      triples_from_json(j.at("mult"), f, d, "mult"),
      triples_from_json(j.at("comult"), f, d, "comult"),
      dense_vector_from_json(j.at("unit"), f, d, "unit"),
      dense_vector_from_json(j.at("counit"), f, d, "counit"),
      sparse_matrix_from_json(j.at("antipode"), f, d, d, "antipode"));
}

std::string algebra_to_text(const FiniteHopfAlgebra& h) { return algebra_to_json(h).dump(2) + "\n"; }

void save_algebra(const FiniteHopfAlgebra& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << algebra_to_text(h);
}

HopfPtr load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

HopfPtr resolve_algebra(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return catalog_entry(ref.substr(8)).algebra;
  return load_algebra(ref);
}

Json automorphism_to_json(const HopfAutomorphism& tau, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  j["matrix"] = sparse_matrix_to_json(tau.matrix());
  return j;
}

HopfAutomorphism automorphism_from_json(const Json& j, const HopfPtr& h) {
  check_algebra_ref(j, h);
  return verify_automorphism(h, sparse_matrix_from_json(j.at("matrix"), h->field(), h->dim(),
                                                        h->dim(), "matrix"));
}

HopfAutomorphism load_automorphism(const std::string& path, const HopfPtr& h) {
  return automorphism_from_json(read_json_file(path), h);
}

Json action_to_json(const HopfAction& action, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  Json table = Json::array();
  for (size_t a = 0; a < action.group.order(); ++a) {
    Json row = Json::array();
    for (size_t b = 0; b < action.group.order(); ++b) row.push_back(action.group.mul(a, b));
    table.push_back(std::move(row));
  }
  j["group"] = {{"order", action.group.order()},
                {"table", std::move(table)},
                {"identity", action.group.identity()}};
  Json mats;
  for (size_t x = 0; x < action.group.order(); ++x)
    mats[std::to_string(x)] = sparse_matrix_to_json(action.matrix(x));
  j["matrices"] = std::move(mats);
  return j;
}

HopfAction action_from_json(const Json& j, const HopfPtr& h) {
  check_algebra_ref(j, h);
  const Json& g = j.at("group");
  const size_t order = g.at("order").get<size_t>();
  auto table = g.at("table").get<std::vector<std::vector<size_t>>>();
  GroupTable group(std::move(table), g.at("identity").get<size_t>());
  if (group.order() != order)
    throw std::invalid_argument("group order field disagrees with the table size");
  std::vector<ExactMatrix> mats;
  for (size_t x = 0; x < order; ++x)
    mats.push_back(sparse_matrix_from_json(j.at("matrices").at(std::to_string(x)), h->field(),
                                           h->dim(), h->dim(), "matrix of element " +
                                           std::to_string(x)));
  return verify_action(h, group, mats);
}

HopfAction load_action(const std::string& path, const HopfPtr& h) {
  return action_from_json(read_json_file(path), h);
}

Json representation_to_json(const Representation& rho, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  j["rank"] = rho.rank();
  Json mats = Json::array();
  for (size_t i = 0; i < rho.algebra()->dim(); ++i) mats.push_back(sparse_matrix_to_json(rho.matrix(i)));
  j["matrices"] = std::move(mats);
  return j;
}

Representation representation_from_json(const Json& j, const HopfPtr& h) {
  check_algebra_ref(j, h);
  const size_t rank = j.at("rank").get<size_t>();
  const Json& mats = j.at("matrices");
  if (!mats.is_array() || mats.size() != h->dim())
    throw std::invalid_argument("matrices must hold one entry per basis element");
  std::vector<ExactMatrix> out;
  for (size_t i = 0; i < h->dim(); ++i)
    out.push_back(sparse_matrix_from_json(mats[i], h->field(), rank, rank,
                                          "matrix of basis element " + std::to_string(i)));
  return verify_representation(h, out);
}

Representation load_representation(const std::string& path, const HopfPtr& h) {
  return representation_from_json(read_json_file(path), h);
}

}  // namespace hopfsmash
