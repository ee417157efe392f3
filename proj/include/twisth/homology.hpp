#ifndef TWISTH_HOMOLOGY_HPP_
#define TWISTH_HOMOLOGY_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "twisth/abelian_group.hpp"
#include "twisth/lattice.hpp"
#include "twisth/representation.hpp"
#include "twisth/words.hpp"

namespace twisth {

/// A relation of the presentation fails under the representation, so
/// the homology pipeline would produce garbage.
class RelationInconsistencyError : public std::runtime_error {
 public:
  explicit RelationInconsistencyError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// The vector handed to class_of is not in ker d1, i.e. it is not a
/// homology class at all.
class NotInKernelError : public std::runtime_error {
 public:
  NotInKernelError(const std::string& msg, std::vector<Int> boundary)
      : std::runtime_error(msg), boundary_(std::move(boundary)) {}
  const std::vector<Int>& boundary() const { return boundary_; }

 private:
  std::vector<Int> boundary_;
};

/// Canonical flat indexing of the symbols [x_j] (x) xi_i:
/// (generator j, basis i) -> j*n + i.
struct TensorBasis {
  std::size_t num_generators = 0;
  std::size_t dim = 0;

  std::size_t size() const { return num_generators * dim; }
  std::size_t index(std::size_t gen, std::size_t basis) const {
    return gen * dim + basis;
  }
  std::size_t gen_of(std::size_t flat) const { return flat / dim; }
  std::size_t basis_of(std::size_t flat) const { return flat % dim; }
};

TensorBasis tensor_basis(const Presentation& pres, const Representation& rep);

/// Printable label of a flat tensor index, e.g. "a1" (x) "γ2".
std::string symbol_label(const Presentation& pres, const Representation& rep,
                         std::size_t flat);

/// Signed-combination display of a coordinate vector over the tensor
/// basis, e.g. "a1⊗γ3 + 2 u⊗γ1 - e2⊗δ1".
std::string combination_label(const Presentation& pres,
                              const Representation& rep,
                              const std::vector<Int>& v);

/// The differential on <X-bar>: n rows, |X|*n columns.  Column (j,i)
/// is (psi(x_j)^-1 - I) applied to the i-th basis vector.
IntMatrix boundary1_matrix(const Presentation& pres, const Representation& rep);

/// Image of one relation at one module basis vector under the relation
/// rewriting: sum over lhs letters minus sum over rhs letters, where a
/// positive letter x at prefix p contributes +[x] (x) psi(p)^-1 xi and
/// an inverse letter contributes -[x] (x) psi(x) psi(p)^-1 xi.
std::vector<Int> fox_vector(const Presentation& pres, const Representation& rep,
                            const Relation& r, std::size_t basis_index);

struct HomologyResult {
  AbelianGroup group;
  IntMatrix boundary;        // n x (|X|*n)
  IntMatrix kernel_basis;    // ambient x kernel-rank, column HNF canonical
  IntMatrix relation_coords; // kernel-rank x (|R|*n)
  SnfResult relation_snf;    // of relation_coords

  /// Coordinates of a class in the invariant-factor decomposition:
  /// one entry per torsion factor (reduced mod that factor) followed
  /// by one per free summand.
  struct ClassCoords {
    std::vector<Int> torsion;
    std::vector<Int> free;
    bool is_zero() const;
    /// Order of the element; 0 means infinite.
    Int order(const std::vector<Int>& factors) const;
  };

  /// Projects a kernel-coordinate vector to the quotient.
  ClassCoords project(const std::vector<Int>& kernel_coords) const;
};

/// Full H1 pipeline: consistency gate, boundary, kernel, Fox vectors,
/// quotient.  Throws RelationInconsistencyError before any lattice
/// work when the representation violates a relation.
HomologyResult h1(const Presentation& pres, const Representation& rep);

/// Coinvariants: cokernel of the stacked (psi(x)^-1 - I) blocks.
AbelianGroup h0(const Presentation& pres, const Representation& rep);

/// Cokernel of the |X| x |R| exponent-sum matrix; equals h1 with the
/// trivial rank-1 representation.
AbelianGroup abelianization(const Presentation& pres);

IntMatrix exponent_sum_matrix(const Presentation& pres);

/// Image of an ambient tensor-space vector in the quotient.
/// Throws NotInKernelError when d1 * v != 0.
HomologyResult::ClassCoords class_of(const HomologyResult& result,
                                     const Presentation& pres,
                                     const Representation& rep,
                                     const std::vector<Int>& v);

/// Parses an integer combination of labeled symbols, e.g.
/// "a1[3] + 2 u[1] - d1[4]" (indices 1-based), into an ambient vector.
std::vector<Int> parse_class_expr(const std::string& text,
                                  const Presentation& pres,
                                  const Representation& rep);

}  // namespace twisth

#endif  // TWISTH_HOMOLOGY_HPP_
