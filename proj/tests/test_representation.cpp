#include <doctest.h>

#include <random>

#include "twisth/catalog.hpp"
#include "twisth/representation.hpp"

using namespace twisth;

namespace {

IntMatrix mat4(std::vector<long> v) {
  IntMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = v[i * 4 + j];
  }
  return m;
}

// Hand-computed inverse images, used as independent golden values.
IntMatrix known_a1_inv() {
  return mat4({2, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
}
IntMatrix known_a2_inv() {
  return mat4({1, 0, 0, 0, 0, 2, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}
IntMatrix known_e1_inv() {
  return mat4({2, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, -1, 0, 1});
}
IntMatrix known_e2_inv() {
  return mat4({0, 1, 0, 0, -1, 2, 0, 0, -2, 2, 1, 0, 0, 0, 0, 1});
}

}  // namespace

TEST_CASE("evaluation on the catalog representation") {
  CatalogEntry e = catalog_load("n32");
  const Presentation& p = e.pres();
  const Representation& rep = e.representation;

  CHECK(rep.dimension() == 4);
  CHECK(rep.evaluate(parse_word("u u", p)).is_identity());
  CHECK(rep.evaluate(parse_word("a1 a1^-1", p)).is_identity());
  CHECK(rep.evaluate(parse_word("a1^-1", p)) == known_a1_inv());
  CHECK(rep.evaluate(parse_word("u^-1", p)) ==
        rep.evaluate(parse_word("u", p)));
}

TEST_CASE("inverse pairs multiply to the identity") {
  CatalogEntry e = catalog_load("n32");
  const Presentation& p = e.pres();
  const Representation& rep = e.representation;

  auto img = [&](const std::string& name) {
    return rep.image(static_cast<std::size_t>(p.generator_index(name)));
  };
  CHECK(img("a1") * known_a1_inv() == IntMatrix::identity(4));
  CHECK(img("a2") * known_a2_inv() == IntMatrix::identity(4));
  CHECK(img("e1") * known_e1_inv() == IntMatrix::identity(4));
  CHECK(img("e2") * known_e2_inv() == IntMatrix::identity(4));
  CHECK(img("u") * img("u") == IntMatrix::identity(4));

  for (const std::string name : {"b1", "b2", "b3", "d1", "d2"}) {
    CHECK(img(name).is_identity());
    int g = p.generator_index(name);
    CHECK(rep.image_inverse(static_cast<std::size_t>(g)).is_identity());
  }
}

TEST_CASE("invert_matrix") {
  CHECK(invert_matrix(IntMatrix::identity(4)).is_identity());

  CatalogEntry e = catalog_load("n32");
  int g = e.pres().generator_index("e2");
  CHECK(invert_matrix(e.representation.image(static_cast<std::size_t>(g))) ==
        known_e2_inv());

  IntMatrix swap2(2, 2);
  swap2.at(0, 1) = 1;
  swap2.at(1, 0) = 1;
  CHECK(invert_matrix(swap2) == swap2);

  IntMatrix bad(2, 2);
  bad.at(0, 0) = 2;
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(invert_matrix(bad), NotUnimodularError);
}

TEST_CASE("relation checking") {
  CatalogEntry e = catalog_load("n32");
  const Presentation& p = e.pres();

  SUBCASE("catalog entry passes everything") {
    RelationReport r = check_relations(p, e.representation);
    CHECK(r.all_pass());
    CHECK(r.checks.size() == p.relations.size());
  }

  SUBCASE("identity representation satisfies any presentation") {
    std::vector<IntMatrix> imgs(p.num_generators(), IntMatrix::identity(2));
    Representation ident(2, {}, std::move(imgs));
    CHECK(check_relations(p, ident).all_pass());
  }

  SUBCASE("corrupting psi(u) breaks relation (3)") {
    std::vector<IntMatrix> imgs;
    for (std::size_t j = 0; j < p.num_generators(); ++j) {
      imgs.push_back(e.representation.image(j));
    }
    std::size_t u = static_cast<std::size_t>(p.generator_index("u"));
    imgs[u].at(0, 3) += 1;  // still determinant -1
    Representation corrupted(4, e.representation.basis_labels(),
                             std::move(imgs));
    RelationReport r = check_relations(p, corrupted);
    CHECK_FALSE(r.all_pass());
    bool rel3_failed = false;
    for (const RelationCheck& c : r.checks) {
      if (c.label == "3" && !c.pass) {
        rel3_failed = true;
        CHECK_FALSE(c.difference.is_zero());
      }
    }
    CHECK(rel3_failed);
  }

  SUBCASE("non-unimodular image rejected at construction") {
    std::vector<IntMatrix> imgs(p.num_generators(), IntMatrix::identity(4));
    imgs[0].at(0, 0) = 3;
    CHECK_THROWS_AS(Representation(4, {}, std::move(imgs)),
                    NotUnimodularError);
  }
}

TEST_CASE("identity checks mirror the commutation computations") {
  CatalogEntry e = catalog_load("n32");
  const Presentation& p = e.pres();
  const Representation& rep = e.representation;

  CHECK(check_identity_under_rep(rep, parse_word("(a2 e2 e1 a1)^3 a2", p),
                                 parse_word("a2 (a2 e2 e1 a1)^3", p)));
  CHECK(check_identity_under_rep(rep, parse_word("(a2 e2 e1 a1)^3 a1", p),
                                 parse_word("a1 (a2 e2 e1 a1)^3", p)));
  CHECK(check_identity_under_rep(rep, parse_word("(a2 e2 e1 a1)^3 e1", p),
                                 parse_word("e1 (a2 e2 e1 a1)^3", p)));
  CHECK(check_identity_under_rep(rep, Word(), Word()));
  CHECK_FALSE(
      check_identity_under_rep(rep, parse_word("a1", p), parse_word("u", p)));
}

TEST_CASE("evaluate is a homomorphism") {
  CatalogEntry e = catalog_load("n32");
  const Presentation& p = e.pres();
  const Representation& rep = e.representation;

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> gen(
      0, static_cast<int>(p.num_generators()) - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> len(0, 8);
  auto random_word = [&] {
    std::vector<Letter> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back({gen(rng), sign(rng) ? 1 : -1});
    return Word(raw);
  };
  for (int iter = 0; iter < 60; ++iter) {
    Word v = random_word(), w = random_word();
    CHECK(rep.evaluate(concat(v, w)) == rep.evaluate(v) * rep.evaluate(w));
    CHECK(rep.evaluate(invert(w)) * rep.evaluate(w) ==
          IntMatrix::identity(4));
  }
}

TEST_CASE("representation file errors") {
  Presentation p = parse_presentation("generators: x y\n").pres;
  CHECK_THROWS_AS(parse_representation("dimension: 0\n", p), ParseError);
  CHECK_THROWS_AS(
      parse_representation("dimension: 1\nmatrix x:\n1\n", p), ParseError);
  CHECK_THROWS_AS(
      parse_representation(
          "dimension: 1\nmatrix x:\n1\nmatrix z:\n1\n", p),
      ParseError);
  CHECK_THROWS_AS(
      parse_representation(
          "dimension: 2\nmatrix x:\n1 0\n0 1\nmatrix y:\n1 0 0\n0 1 0\n", p),
      ParseError);
}
