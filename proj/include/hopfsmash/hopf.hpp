#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfsmash/linalg.hpp"

namespace hopfsmash {

/// A math-level verification failure (broken automorphism, corrupted
/// structure constants, semisimplicity guard, ...).  Distinct from
/// std::invalid_argument, which is reserved for malformed input shapes.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One coordinate of a sparse 3-tensor: multiplication entries read
/// "b_i b_j contains c * b_k"; comultiplication entries read
/// "delta(b_i) contains c * (b_j (x) b_k)".
struct SparseTriple {
  size_t i, j, k;
  FieldScalar c;
};

struct AxiomCheck {
  std::string name;
  bool pass;
};

/// Result of the exhaustive axiom verification.  Failures are recorded,
/// never thrown, so callers can report them.
struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool s_squared_identity = false;

  bool all_pass() const;
  std::string summary() const;
};

class FiniteHopfAlgebra;
using HopfPtr = std::shared_ptr<const FiniteHopfAlgebra>;

/// A finite-dimensional Hopf algebra given by structure constants over a
/// fixed basis: a multiplication tensor, a comultiplication tensor, the
/// coordinates of 1, the counit covector and the antipode matrix.
///
/// The constructor checks shapes only (and canonicalizes the sparse
/// tensors); the Hopf axioms are verified separately by
/// verify_hopf_axioms, whose boolean outcome is cached.  All data is
/// immutable after construction.
class FiniteHopfAlgebra {
public:
  FiniteHopfAlgebra(std::string name, Field field, std::vector<std::string> basis,
                    std::vector<SparseTriple> mult, std::vector<SparseTriple> comult,
                    ExactVector unit, ExactVector counit, ExactMatrix antipode);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const ExactVector& unit() const { return unit_; }
  const ExactVector& counit() const { return counit_; }
  const ExactMatrix& antipode() const { return antipode_; }

  /// Canonical sparse tensors: duplicates merged, zeros dropped, entries
  /// sorted by (i, j, k).  Used verbatim by the file format.
  const std::vector<SparseTriple>& mult_entries() const { return mult_; }
  const std::vector<SparseTriple>& comult_entries() const { return comult_; }

  /// Per-basis-element comultiplication terms (j, k, c).
  const std::vector<std::vector<SparseTriple>>& comult_table() const { return comult_by_i_; }

  ExactVector basis_vector(size_t i) const;

  /// Product of two coordinate vectors.
  ExactVector multiply(const ExactVector& a, const ExactVector& b) const;
  /// Coordinates of delta(a) in the row-major tensor-square basis
  /// (index of b_j (x) b_k is j*dim + k, matching kron).
  ExactVector comultiply(const ExactVector& a) const;
  /// Product of two tensor-square vectors, componentwise on both factors.
  ExactVector tensor_multiply(const ExactVector& u, const ExactVector& v) const;
  FieldScalar counit_apply(const ExactVector& a) const;
  ExactVector antipode_apply(const ExactVector& a) const;

  /// Matrix of left multiplication by b_i.
  ExactMatrix left_mult_matrix(size_t i) const;
  ExactMatrix right_mult_matrix(size_t i) const;

  /// The convolution unit u o eps as a matrix: column i is eps(b_i) * 1.
  ExactMatrix convolution_unit() const;

  /// Lazily runs verify_hopf_axioms once and caches the outcome.
  bool is_valid() const;

private:
  friend AxiomReport verify_hopf_axioms(const FiniteHopfAlgebra& h);

  std::string name_;
  Field field_;
  std::vector<std::string> basis_;
  std::vector<SparseTriple> mult_, comult_;
  std::vector<std::vector<std::vector<std::pair<size_t, FieldScalar>>>> mult_by_ij_;
  std::vector<std::vector<SparseTriple>> comult_by_i_;
  ExactVector unit_, counit_;
  ExactMatrix antipode_;
  mutable std::optional<bool> valid_;
};

/// An element of a specific algebra; operations check the algebras match.
struct Element {
  HopfPtr algebra;
  ExactVector coords;

  Element(HopfPtr alg, ExactVector c);
};

/// A linear endomorphism of a specific algebra.
struct LinearEndo {
  HopfPtr algebra;
  ExactMatrix matrix;

  LinearEndo(HopfPtr alg, ExactMatrix m);
};

Element multiply(const Element& a, const Element& b);
Element comultiply_element(const Element& a);  // lives in the tensor square

/// Exhaustive check of every Hopf axiom over basis tuples: associativity,
/// unitality, coassociativity, counitality, the bialgebra conditions
/// (delta and eps are algebra maps), and the antipode axiom
/// S * id = id * S = u eps.  Also records whether S^2 = id.
AxiomReport verify_hopf_axioms(const FiniteHopfAlgebra& h);

/// The dual Hopf algebra on the dual basis: multiplication and
/// comultiplication tensors transposed against each other, unit and counit
/// swapped, antipode transposed.
HopfPtr dual(const FiniteHopfAlgebra& h);

/// Convolution product (f * g)(x) = sum f(x1) g(x2) as a matrix,
/// computed column-by-column through the comultiplication table.
ExactMatrix convolve(const FiniteHopfAlgebra& h, const ExactMatrix& f, const ExactMatrix& g);
LinearEndo convolve(const LinearEndo& f, const LinearEndo& g);

/// Entrywise comparison of two algebras' structure constants under the
/// identity basis identification.  On mismatch returns a description of
/// the first differing entry.
struct StructureComparison {
  bool equal;
  std::string detail;
};
StructureComparison structure_equal(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b);

}  // namespace hopfsmash
