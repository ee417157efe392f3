#include "twisth/catalog.hpp"

#include <cctype>
#include <sstream>

#include "catalog_data.hpp"
#include "twisth/homology.hpp"

namespace twisth {

namespace {

// The six order-2 generators of the quotient for the two-boundary
// case, plus the auxiliary symbols whose classes the derivations pin
// down (trivial combinations and the b/d symbols).
std::vector<std::pair<std::string, std::string>> n32_named_classes() {
  std::vector<std::pair<std::string, std::string>> out = {
      {"a1,3", "a1[3]"},
      {"a1,4", "a1[4]"},
      {"a1,1+a1,2", "a1[1] + a1[2]"},
      {"u3", "u[3]"},
      {"u4", "u[4]"},
      {"d1,1", "d1[1]"},
      {"u1+u2", "u[1] + u[2]"},
      {"e2,1+2a2,2-u1", "e2[1] + 2 a2[2] - u[1]"},
  };
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 4; ++i) {
      std::string sym = "b" + std::to_string(j) + "[" + std::to_string(i) + "]";
      out.push_back({"b" + std::to_string(j) + "," + std::to_string(i), sym});
    }
  }
  for (int j = 1; j <= 2; ++j) {
    for (int i = 1; i <= 4; ++i) {
      std::string sym = "d" + std::to_string(j) + "[" + std::to_string(i) + "]";
      out.push_back({"d" + std::to_string(j) + "," + std::to_string(i), sym});
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> n3p2_named_classes() {
  std::vector<std::pair<std::string, std::string>> out = {
      {"a1,3", "a1[3]"},
      {"a1,4", "a1[4]"},
      {"a1,1+a1,2", "a1[1] + a1[2]"},
      {"u3", "u[3]"},
      {"u4", "u[4]"},
      {"u1+u2", "u[1] + u[2]"},
  };
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 4; ++i) {
      std::string sym = "b" + std::to_string(j) + "[" + std::to_string(i) + "]";
      out.push_back({"b" + std::to_string(j) + "," + std::to_string(i), sym});
    }
  }
  return out;
}

// The free generating set of ker d1 for these catalog entries.
// `with_d` distinguishes the two-boundary case (groups K1-K9) from the
// punctured case (K1-K8).
std::vector<std::pair<std::string, std::string>> kernel_gens(bool with_d) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int j = 1; j <= 2; ++j) {
    for (int i = 1; i <= 4; ++i) {
      if (i == j || i == j + 1) continue;
      out.push_back({"K1", "a" + std::to_string(j) + "[" +
                               std::to_string(i) + "]"});
    }
  }
  for (int j = 1; j <= 2; ++j) {
    out.push_back({"K2", "a" + std::to_string(j) + "[" + std::to_string(j) +
                             "] + a" + std::to_string(j) + "[" +
                             std::to_string(j + 1) + "]"});
  }
  out.push_back({"K3", "u[3]"});
  out.push_back({"K3", "u[4]"});
  out.push_back({"K4", "u[1] + u[2]"});
  for (int j = 1; j <= 2; ++j) {
    for (int i = 3; i <= 4; ++i) {
      out.push_back({"K5", "e" + std::to_string(j) + "[" +
                               std::to_string(i) + "]"});
    }
  }
  for (int j = 1; j <= 2; ++j) {
    out.push_back({"K6", "e" + std::to_string(j) + "[1] + e" +
                             std::to_string(j) + "[2]"});
  }
  out.push_back({"K7", "e2[1] + 2 a2[2] - u[1]"});
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 4; ++i) {
      out.push_back({"K8", "b" + std::to_string(j) + "[" + std::to_string(i) +
                               "]"});
    }
  }
  if (with_d) {
    for (int j = 1; j <= 2; ++j) {
      for (int i = 1; i <= 4; ++i) {
        out.push_back({"K9", "d" + std::to_string(j) + "[" +
                                 std::to_string(i) + "]"});
      }
    }
  }
  return out;
}

CatalogEntry make_entry(std::string id, const char* pres_text,
                        const char* rep_text, std::string notes) {
  ParsedPresentation parsed = parse_presentation(pres_text);
  Representation rep = parse_representation(rep_text, parsed.pres);
  CatalogEntry entry{std::move(id), std::move(parsed), std::move(rep),
                     {}, {}, std::move(notes)};
  RelationReport report = check_relations(entry.pres(), entry.representation);
  for (const RelationCheck& c : report.checks) {
    if (!c.pass) {
      throw std::logic_error("catalog entry '" + entry.id + "': relation " +
                             entry.pres().relation_label(c.index) +
                             " fails under the representation");
    }
  }
  return entry;
}

CatalogEntry make_szep_entry() {
  ParsedPresentation parsed = parse_presentation(detail::kSzepPres);
  CatalogEntry n32 = catalog_load("n32");
  GeneratorDictionary dict = builtin_dictionary();
  // Images of the uppercase generators: the catalog representation
  // composed with the dictionary.
  std::vector<IntMatrix> images;
  for (const Generator& g : parsed.pres.generators) {
    const Word* w = dict.find(g.name);
    if (!w) {
      throw std::logic_error("dictionary misses generator " + g.name);
    }
    images.push_back(n32.representation.evaluate(*w));
  }
  Representation rep(n32.representation.dimension(),
                     n32.representation.basis_labels(), std::move(images));
  CatalogEntry entry{"n32-szep", std::move(parsed), std::move(rep), {}, {},
                     "curve-complex generating set; consistency-check data "
                     "only, not used by the homology pipeline"};
  RelationReport report = check_relations(entry.pres(), entry.representation);
  for (const RelationCheck& c : report.checks) {
    if (!c.pass) {
      throw std::logic_error("catalog entry 'n32-szep': relation " +
                             entry.pres().relation_label(c.index) +
                             " fails under the representation");
    }
  }
  return entry;
}

}  // namespace

std::vector<std::string> catalog_ids() { return {"n32", "n3p2", "n32-szep"}; }

CatalogEntry catalog_load(const std::string& id) {
  if (id == "n32") {
    CatalogEntry e =
        make_entry("n32", detail::kN32Pres, detail::kN32Rep,
                   "mapping class group of the genus-3 surface with two "
                   "boundary components, acting on rank-4 first homology");
    e.named_classes = n32_named_classes();
    e.kernel_generators = kernel_gens(true);
    return e;
  }
  if (id == "n3p2") {
    CatalogEntry e =
        make_entry("n3p2", detail::kN3p2Pres, detail::kN3p2Rep,
                   "mapping class group PM+ of the genus-3 surface with two "
                   "punctures, acting on rank-4 first homology");
    e.named_classes = n3p2_named_classes();
    e.kernel_generators = kernel_gens(false);
    return e;
  }
  if (id == "n32-szep") return make_szep_entry();
  throw UnknownEntryError(id);
}

const Word* GeneratorDictionary::find(const std::string& name) const {
  for (const auto& [n, w] : entries) {
    if (n == name) return &w;
  }
  return nullptr;
}

GeneratorDictionary parse_dictionary(const std::string& text,
                                     const Presentation& target) {
  GeneratorDictionary dict;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t h = raw.find('#');
    std::string line = h == std::string::npos ? raw : raw.substr(0, h);
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError(lineno, 1, "expected 'NAME -> word'");
    }
    std::istringstream ns(line.substr(0, arrow));
    std::string name;
    ns >> name;
    std::string extra;
    if (name.empty() || (ns >> extra)) {
      throw ParseError(lineno, 1, "expected single name before '->'");
    }
    if (dict.find(name)) {
      throw ParseError(lineno, 1, "duplicate dictionary entry '" + name + "'");
    }
    Word w = parse_word(line.substr(arrow + 2), target, lineno);
    dict.entries.push_back({name, w});
  }
  return dict;
}

Word substitute(const GeneratorDictionary& dict, const Presentation& source,
                const Word& w) {
  Word out;
  for (const Letter& l : w.letters()) {
    const std::string& name =
        source.generators.at(static_cast<std::size_t>(l.gen)).name;
    const Word* image = dict.find(name);
    if (!image) {
      throw std::invalid_argument("unmapped generator '" + name + "'");
    }
    out = concat(out, l.sign > 0 ? *image : invert(*image));
  }
  return out;
}

GeneratorDictionary builtin_dictionary() {
  CatalogEntry n32 = catalog_load("n32");
  return parse_dictionary(detail::kDictionaryMap, n32.pres());
}

std::vector<SzepCheck> verify_szep_consistency() {
  CatalogEntry n32 = catalog_load("n32");
  ParsedPresentation szep = parse_presentation(detail::kSzepPres);
  GeneratorDictionary dict = builtin_dictionary();
  std::vector<SzepCheck> out;
  for (std::size_t i = 0; i < szep.pres.relations.size(); ++i) {
    const Relation& r = szep.pres.relations[i];
    Word lhs = substitute(dict, szep.pres, r.lhs);
    Word rhs = substitute(dict, szep.pres, r.rhs);
    bool pass = check_identity_under_rep(n32.representation, lhs, rhs);
    out.push_back({szep.pres.relation_label(i), pass});
  }
  return out;
}

}  // namespace twisth
