#ifndef TWISTH_CATALOG_HPP_
#define TWISTH_CATALOG_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twisth/representation.hpp"
#include "twisth/words.hpp"

namespace twisth {

class UnknownEntryError : public std::runtime_error {
 public:
  explicit UnknownEntryError(const std::string& id)
      : std::runtime_error("unknown catalog entry '" + id + "'") {}
};

/// A built-in presentation + representation pair, loaded from the
/// shipped data files (so the parsers run on every load) and verified
/// against its relations.
struct CatalogEntry {
  std::string id;
  ParsedPresentation parsed;
  Representation representation;
  /// label -> class expression (parse with parse_class_expr).
  std::vector<std::pair<std::string, std::string>> named_classes;
  /// Free generating set of ker d1: (K-group label, expression).
  std::vector<std::pair<std::string, std::string>> kernel_generators;
  std::string notes;

  const Presentation& pres() const { return parsed.pres; }
};

std::vector<std::string> catalog_ids();
CatalogEntry catalog_load(const std::string& id);

/// Map from one presentation's generators to words over another's.
struct GeneratorDictionary {
  std::vector<std::pair<std::string, Word>> entries;
  const Word* find(const std::string& name) const;
};

/// Parses "NAME -> word" lines; words are over `target`.
GeneratorDictionary parse_dictionary(const std::string& text,
                                     const Presentation& target);

/// Letterwise homomorphic image of a word over `source`, freely
/// reduced.  Throws std::invalid_argument on an unmapped generator.
Word substitute(const GeneratorDictionary& dict, const Presentation& source,
                const Word& w);

GeneratorDictionary builtin_dictionary();

struct SzepCheck {
  std::string label;
  bool pass;
};

/// Substitutes both sides of every relation of the uppercase
/// presentation through the dictionary and compares images under the
/// catalog representation.  A necessary condition for the rewriting
/// step, not a proof of it.
std::vector<SzepCheck> verify_szep_consistency();

}  // namespace twisth

#endif  // TWISTH_CATALOG_HPP_
