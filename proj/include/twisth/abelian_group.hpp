#ifndef TWISTH_ABELIAN_GROUP_HPP_
#define TWISTH_ABELIAN_GROUP_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace twisth {

using Int = boost::multiprecision::cpp_int;

/// A finitely generated abelian group in canonical form: free rank
/// plus invariant factors d_i >= 2 with d_i | d_{i+1}.  Factors equal
/// to 1 are never stored.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// Human form, e.g. "(Z/2)^6", "Z x Z/2", "Z^3", "0".
  std::string to_string() const;

  /// Machine form: "rank R" and "torsion d1 d2 ..." lines.
  std::string machine_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

}  // namespace twisth

#endif  // TWISTH_ABELIAN_GROUP_HPP_
