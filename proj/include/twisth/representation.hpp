#ifndef TWISTH_REPRESENTATION_HPP_
#define TWISTH_REPRESENTATION_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "twisth/int_matrix.hpp"
#include "twisth/words.hpp"

namespace twisth {

class NotUnimodularError : public std::runtime_error {
 public:
  explicit NotUnimodularError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Exact inverse of a matrix with determinant +-1.
/// Throws NotUnimodularError otherwise.
IntMatrix invert_matrix(const IntMatrix& m);

/// A map from the generators of a presentation to invertible n x n
/// integer matrices.  Immutable after construction; the inverse cache
/// is built eagerly, so evaluation never recomputes inverses.
class Representation {
 public:
  /// `images[j]` is the matrix of generator j.  Every image must be
  /// n x n with determinant +-1; checked here so a bad representation
  /// fails at load time.
  Representation(std::size_t dimension, std::vector<std::string> basis_labels,
                 std::vector<IntMatrix> images);

  /// The rank-1 representation sending every generator to (1).
  static Representation trivial(std::size_t num_generators);

  std::size_t dimension() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  std::size_t num_generators() const { return images_.size(); }
  const IntMatrix& image(std::size_t gen) const { return images_.at(gen); }
  const IntMatrix& image_inverse(std::size_t gen) const {
    return inverses_.at(gen);
  }

  /// Left-to-right product of letter images.
  IntMatrix evaluate(const Word& w) const;

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<IntMatrix> images_;
  std::vector<IntMatrix> inverses_;
};

struct RelationCheck {
  std::size_t index;
  std::string label;
  bool pass;
  IntMatrix difference;  // evaluate(lhs) - evaluate(rhs), zero when pass
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Evaluates every relation of the presentation under the
/// representation.  Failures are data, not errors.
RelationReport check_relations(const Presentation& pres,
                               const Representation& rep);

/// True iff the two words have equal images.  A necessary condition
/// only: the representation need not be faithful.
bool check_identity_under_rep(const Representation& rep, const Word& w1,
                              const Word& w2);

/// Parses a representation file ("dimension:", optional "basis:",
/// "matrix NAME:" blocks) and cross-checks the generator set against
/// the presentation.
Representation parse_representation(const std::string& text,
                                    const Presentation& pres);

}  // namespace twisth

#endif  // TWISTH_REPRESENTATION_HPP_
