#include <doctest.h>

#include <algorithm>

#include "twisth/catalog.hpp"
#include "twisth/homology.hpp"

using namespace twisth;

TEST_CASE("catalog loads") {
  SUBCASE("n32") {
    CatalogEntry e = catalog_load("n32");
    CHECK(e.pres().num_generators() == 10);
    CHECK(e.pres().relations.size() == 22);
    CHECK(e.representation.dimension() == 4);
    CHECK(e.parsed.warnings.empty());
  }
  SUBCASE("n3p2") {
    CatalogEntry e = catalog_load("n3p2");
    CHECK(e.pres().num_generators() == 8);
    CHECK(e.pres().relations.size() == 17);
    CHECK(e.pres().generator_index("d1") == -1);
    CHECK(e.pres().generator_index("d2") == -1);
  }
  SUBCASE("n32-szep") {
    CatalogEntry e = catalog_load("n32-szep");
    CHECK(e.pres().num_generators() == 10);
    CHECK(e.pres().generator_index("A1") == 0);
  }
  SUBCASE("unknown id") {
    CHECK_THROWS_AS(catalog_load("bogus"), UnknownEntryError);
  }
  SUBCASE("id list") {
    auto ids = catalog_ids();
    CHECK(std::find(ids.begin(), ids.end(), "n32") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "n3p2") != ids.end());
  }
}

TEST_CASE("generator dictionary") {
  CatalogEntry n32 = catalog_load("n32");
  CatalogEntry szep = catalog_load("n32-szep");
  GeneratorDictionary dict = builtin_dictionary();

  SUBCASE("single letters") {
    const Word* a1img = dict.find("A1");
    REQUIRE(a1img != nullptr);
    CHECK(*a1img == parse_word("a1^-1", n32.pres()));
    CHECK(dict.find("missing") == nullptr);
  }
  SUBCASE("substitution is homomorphic and reduced") {
    Word lhs = parse_word("U A1 U^-1", szep.pres());
    CHECK(substitute(dict, szep.pres(), lhs) ==
          parse_word("u^-1 a1^-1 u", n32.pres()));
    CHECK(substitute(dict, szep.pres(), Word()) == Word());
    // A1 A1^-1 collapses after substitution
    CHECK(substitute(dict, szep.pres(),
                     parse_word("A1 A1^-1", szep.pres())) == Word());
  }
  SUBCASE("unmapped generator") {
    Presentation other = parse_presentation("generators: Q\n").pres;
    CHECK_THROWS_AS(substitute(dict, other, parse_word("Q", other)),
                    std::invalid_argument);
  }
}

TEST_CASE("szep consistency report") {
  std::vector<SzepCheck> checks = verify_szep_consistency();
  CHECK(checks.size() == 34);
  for (const SzepCheck& c : checks) {
    INFO(c.label);
    CHECK(c.pass);
  }
}

TEST_CASE("named classes are cycles") {
  for (const std::string id : {"n32", "n3p2"}) {
    CatalogEntry e = catalog_load(id);
    IntMatrix d1 = boundary1_matrix(e.pres(), e.representation);
    for (const auto& [label, expr] : e.named_classes) {
      INFO(id << " " << label);
      std::vector<Int> v = parse_class_expr(expr, e.pres(), e.representation);
      std::vector<Int> b = d1.apply(v);
      bool zero = std::all_of(b.begin(), b.end(),
                              [](const Int& x) { return x == 0; });
      CHECK(zero);
    }
  }
}

TEST_CASE("kernel generator tables match the computed kernel rank") {
  CHECK(catalog_load("n32").kernel_generators.size() == 36);
  CHECK(catalog_load("n3p2").kernel_generators.size() == 28);
}

TEST_CASE("dropping the d-generators reproduces the punctured catalog") {
  CatalogEntry n32 = catalog_load("n32");
  CatalogEntry n3p2 = catalog_load("n3p2");
  const Presentation& full = n32.pres();
  const Presentation& punct = n3p2.pres();

  // generator lists agree after removing d1, d2
  std::vector<std::string> kept;
  for (const Generator& g : full.generators) {
    if (g.name != "d1" && g.name != "d2") kept.push_back(g.name);
  }
  REQUIRE(kept.size() == punct.num_generators());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    CHECK(kept[i] == punct.generators[i].name);
  }

  // relations: drop the d-relations, keep the rest verbatim (modulo
  // generator reindexing), and the primed relations close the list
  const std::vector<std::string> dropped = {"8",   "11",  "12", "13a",
                                            "13b", "13c", "13d", "13e"};
  auto reindex = [&](const Word& w) {
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
      const std::string& name =
          full.generators[static_cast<std::size_t>(l.gen)].name;
      int idx = punct.generator_index(name);
      REQUIRE(idx >= 0);
      out.push_back({idx, l.sign});
    }
    return Word(out);
  };

  std::size_t pi = 0;
  for (const Relation& r : full.relations) {
    if (std::find(dropped.begin(), dropped.end(), r.label) != dropped.end()) {
      continue;
    }
    REQUIRE(pi < punct.relations.size());
    CHECK(punct.relations[pi].label == r.label);
    CHECK(punct.relations[pi].lhs == reindex(r.lhs));
    CHECK(punct.relations[pi].rhs == reindex(r.rhs));
    ++pi;
  }
  REQUIRE(punct.relations.size() == pi + 3);
  CHECK(punct.relations[pi].label == "8'");
  CHECK(punct.relations[pi].lhs == parse_word("(e1 u)^2", punct));
  CHECK(punct.relations[pi].rhs == parse_word("b1", punct));
  CHECK(punct.relations[pi + 1].label == "11'");
  CHECK(punct.relations[pi + 1].lhs ==
        parse_word("b3 b1 (b2 u)^2", punct));
  CHECK(punct.relations[pi + 1].rhs == parse_word("u^2", punct));
  CHECK(punct.relations[pi + 2].label == "12'");
  CHECK(punct.relations[pi + 2].lhs ==
        parse_word("(a2 e2 e1 a1)^3", punct));
  CHECK(punct.relations[pi + 2].rhs == Word());
}
