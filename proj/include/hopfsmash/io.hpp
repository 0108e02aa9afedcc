#pragma once

#include <json.hpp>

#include "hopfsmash/catalog.hpp"
#include "hopfsmash/smash.hpp"

namespace hopfsmash {

/// Order-preserving JSON so that serialized files are byte-stable.
using Json = nlohmann::ordered_json;

/// Algebra file: {name, field: {cyclotomic_order}, dimension, basis, unit,
/// counit, mult, comult, antipode}.  unit and counit are dense arrays of
/// scalar literals; mult and comult are sparse {i, j, k, c} entries,
/// antipode sparse {i, j, c} entries (row i, column j); omitted entries
/// are zero.  Serialization is canonical, so save(load(f)) == f byte for
/// byte whenever f was produced by save.
Json algebra_to_json(const FiniteHopfAlgebra& h);
HopfPtr algebra_from_json(const Json& j);
/// Two-space indented dump with a trailing newline.
std::string algebra_to_text(const FiniteHopfAlgebra& h);
void save_algebra(const FiniteHopfAlgebra& h, const std::string& path);
HopfPtr load_algebra(const std::string& path);

/// "catalog:NAME" returns the shared built-in instance; anything else is
/// read as an algebra file path.
HopfPtr resolve_algebra(const std::string& ref);

/// Automorphism file: {algebra, matrix} with a sparse matrix.  The
/// algebra field is a reference string recorded for the reader; loading
/// verifies the matrix against the algebra the caller already resolved.
Json automorphism_to_json(const HopfAutomorphism& tau, const std::string& algebra_ref);
HopfAutomorphism automorphism_from_json(const Json& j, const HopfPtr& h);
HopfAutomorphism load_automorphism(const std::string& path, const HopfPtr& h);

/// Action file: {algebra, group: {order, table, identity}, matrices},
/// matrices keyed by group element index.
Json action_to_json(const HopfAction& action, const std::string& algebra_ref);
HopfAction action_from_json(const Json& j, const HopfPtr& h);
HopfAction load_action(const std::string& path, const HopfPtr& h);

/// Representation file: {algebra, rank, matrices: one sparse matrix per
/// basis element}.
Json representation_to_json(const Representation& rho, const std::string& algebra_ref);
Representation representation_from_json(const Json& j, const HopfPtr& h);
Representation load_representation(const std::string& path, const HopfPtr& h);

}  // namespace hopfsmash
