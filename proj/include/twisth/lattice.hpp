#ifndef TWISTH_LATTICE_HPP_
#define TWISTH_LATTICE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twisth/abelian_group.hpp"
#include "twisth/int_matrix.hpp"

namespace twisth {

/// A vector handed to quotient_in_sublattice was not an integer
/// combination of the kernel basis.
class MembershipError : public std::runtime_error {
 public:
  explicit MembershipError(const std::string& msg) : std::runtime_error(msg) {}
};

struct HnfResult {
  IntMatrix h;  // = u * a, row Hermite normal form
  IntMatrix u;  // unimodular
};

/// Row Hermite normal form: echelon, nonnegative pivots, entries above
/// each pivot reduced into [0, pivot).  Pivot selection is the smallest
/// nonzero absolute value, ties broken by lowest (row, col), so the
/// result is deterministic.
HnfResult hnf(const IntMatrix& a);

struct ColHnfResult {
  IntMatrix h;  // = a * v, column echelon
  IntMatrix v;  // unimodular
};

ColHnfResult column_hnf(const IntMatrix& a);

struct SnfResult {
  std::vector<Int> d;  // diagonal, d[i] >= 0, d[i] | d[i+1]
  IntMatrix u;         // unimodular, u * a * v = diag(d)
  IntMatrix v;
};

/// Smith normal form with transforms; verified internally by
/// multiplying back.
SnfResult snf(const IntMatrix& a);

/// Z-basis of {v : a*v = 0} as matrix columns.  Saturated (every
/// integer kernel vector is an integer combination) and canonicalized
/// by column HNF.
IntMatrix kernel_lattice(const IntMatrix& a);

/// Invariant-factor decomposition of Z^rows / columnspan(a).
AbelianGroup cokernel(const IntMatrix& a);

/// Integer solution x of a*x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b);

struct QuotientResult {
  AbelianGroup group;
  IntMatrix coords;  // each column: an L-vector in K-coordinates
  SnfResult coord_snf;
};

/// Quotient of the lattice spanned by the columns of k by the
/// sublattice generated by the vectors l (each expressed in ambient
/// coordinates).  Throws MembershipError when some l is not in span(k).
QuotientResult quotient_in_sublattice(const IntMatrix& k,
                                      const std::vector<std::vector<Int>>& l);

}  // namespace twisth

#endif  // TWISTH_LATTICE_HPP_
