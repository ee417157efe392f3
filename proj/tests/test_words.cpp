#include <doctest.h>

#include <random>

#include "twisth/words.hpp"

using namespace twisth;

namespace {

Presentation gens(const std::string& names) {
  return parse_presentation("generators: " + names + "\n").pres;
}

Word w(const std::string& text, const Presentation& p) {
  return parse_word(text, p);
}

}  // namespace

TEST_CASE("free reduction") {
  Presentation p = gens("a1 u");
  CHECK(free_reduce({{0, +1}, {0, -1}, {1, +1}}) == w("u", p));
  CHECK(free_reduce({}) == Word());

  // already reduced: no adjacent inverse pair survives, nothing changes
  std::vector<Letter> raw = {{0, +1}, {1, +1}, {0, +1}, {1, -1},
                             {0, -1}, {1, +1}, {0, -1}};
  Word r = free_reduce(raw);
  CHECK(r.letters() == raw);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    bool inverse_pair = r.letters()[i].gen == r.letters()[i + 1].gen &&
                        r.letters()[i].sign != r.letters()[i + 1].sign;
    CHECK_FALSE(inverse_pair);
  }

  // nested cancellation
  CHECK(free_reduce({{0, +1}, {1, +1}, {1, -1}, {0, -1}}) == Word());
}

TEST_CASE("inversion") {
  Presentation p = gens("a1 e1 u");
  CHECK(invert(w("a1 u", p)) == w("u^-1 a1^-1", p));
  CHECK(invert(Word()) == Word());
  CHECK(invert(w("(e1 u)^2", p)) == w("u^-1 e1^-1 u^-1 e1^-1", p));
}

TEST_CASE("word parser") {
  Presentation p = gens("a1 a2 e1 e2 u");

  CHECK(w("(e1 u)^2", p) == w("e1 u e1 u", p));

  Word neg = w("a1^-1", p);
  REQUIRE(neg.size() == 1);
  CHECK(neg.letters()[0] == Letter{0, -1});

  Word r9b = w("(a2 e2 a1^2)^3", p);
  CHECK(r9b.size() == 12);
  CHECK(r9b == w("a2 e2 a1 a1 a2 e2 a1 a1 a2 e2 a1 a1", p));

  CHECK(w("1", p) == Word());
  CHECK(w("(a1)^-2", p) == w("a1^-1 a1^-1", p));

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(w("a1 bogus", p), ParseError);
    CHECK_THROWS_AS(w("a1^0", p), ParseError);
    CHECK_THROWS_AS(w("(a1 u", p), ParseError);
    CHECK_THROWS_AS(w("", p), ParseError);
    CHECK_THROWS_AS(w("a1^", p), ParseError);
    try {
      w("a1 xq u", p);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.col() == 4);
      CHECK(std::string(e.what()).find("xq") != std::string::npos);
    }
  }
}

TEST_CASE("print/parse round trip on random reduced words") {
  Presentation p = gens("a b c d");
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> gen(0, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> len(0, 14);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Letter> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      raw.push_back({gen(rng), sign(rng) ? +1 : -1});
    }
    Word word(raw);
    CHECK(parse_word(print_word(word, p), p) == word);
  }
}

TEST_CASE("word algebra properties") {
  Presentation p = gens("a b c");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> len(0, 10);
  auto random_word = [&] {
    std::vector<Letter> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back({gen(rng), sign(rng) ? 1 : -1});
    return Word(raw);
  };
  for (int iter = 0; iter < 200; ++iter) {
    Word x = random_word(), y = random_word(), z = random_word();
    CHECK(concat(x, invert(x)) == Word());
    CHECK(concat(concat(x, y), z) == concat(x, concat(y, z)));
    CHECK(free_reduce(x.letters()) == x);  // idempotent
    CHECK(Word(concat(x, y).letters()).size() <= x.size() + y.size());
  }
}

TEST_CASE("presentation parser") {
  SUBCASE("free group on one generator") {
    ParsedPresentation pp = parse_presentation("generators: x\n");
    CHECK(pp.pres.num_generators() == 1);
    CHECK(pp.pres.relations.empty());
    CHECK(pp.warnings.empty());
  }

  SUBCASE("comments, labels, blank lines") {
    ParsedPresentation pp = parse_presentation(
        "# header\n"
        "generators: x y  # trailing\n"
        "\n"
        "rel braid: x y x = y x y\n"
        "rel: x^2 = 1\n");
    CHECK(pp.pres.num_generators() == 2);
    REQUIRE(pp.pres.relations.size() == 2);
    CHECK(pp.pres.relations[0].label == "braid");
    CHECK(pp.pres.relation_label(0) == "(braid)");
    CHECK(pp.pres.relations[1].label.empty());
    CHECK(pp.pres.relation_label(1) == "(2)");
    CHECK(pp.pres.relations[1].rhs == Word());
  }

  SUBCASE("duplicate generator rejected") {
    CHECK_THROWS_AS(parse_presentation("generators: x y x\n"), ParseError);
  }

  SUBCASE("undeclared generator in relation") {
    CHECK_THROWS_AS(parse_presentation("generators: x\nrel: x z = x\n"),
                    ParseError);
  }

  SUBCASE("malformed line") {
    CHECK_THROWS_AS(parse_presentation("generators: x\nnonsense\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_presentation("rel: x = x\n"), ParseError);
  }

  SUBCASE("identical sides kept with a warning") {
    ParsedPresentation pp =
        parse_presentation("generators: x\nrel: x = x\n");
    CHECK(pp.pres.relations.size() == 1);
    REQUIRE(pp.warnings.size() == 1);
    CHECK(pp.warnings[0].find("identical") != std::string::npos);
  }
}
