#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyaut/words.hpp"

using namespace polyaut;

TEST_CASE("single generators and inverses") {
  CHECK(parse_word("a", 2) == FMElement::generator(2, 0));
  CHECK(parse_word("b", 2) == FMElement::generator(2, 1));
  CHECK(parse_word("A", 2) == FMElement::generator(2, 0).inverse());
  CHECK(parse_word("c", 3) == FMElement::generator(3, 2));
  CHECK(parse_word("", 2).is_identity());
  CHECK(parse_word("  ", 2).is_identity());
}

TEST_CASE("juxtaposition, powers and commutators") {
  const FMElement a = FMElement::generator(2, 0);
  const FMElement b = FMElement::generator(2, 1);

  CHECK(parse_word("ab", 2) == a * b);
  CHECK(parse_word("a b", 2) == a * b);
  CHECK(parse_word("aA", 2).is_identity());
  CHECK(parse_word("a^3", 2) == a.pow(3));
  CHECK(parse_word("a^-2", 2) == a.pow(-2));
  CHECK(parse_word("[a,b]", 2) == fm_commutator(a, b));
  CHECK(parse_word("[a,b]^2", 2) == fm_commutator(a, b).pow(2));
  CHECK(parse_word("[[a,b],a]", 2) == fm_commutator(fm_commutator(a, b), a));
  CHECK(parse_word("(ab)^2", 2) == (a * b).pow(2));
  CHECK(parse_word("[a^2, b A]", 2) == fm_commutator(a.pow(2), b * a.inverse()));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_word("c", 2), ParseError);     // no such generator in rank 2
  CHECK_THROWS_AS(parse_word("a^", 2), ParseError);    // missing exponent
  CHECK_THROWS_AS(parse_word("[a b]", 2), ParseError); // missing comma
  CHECK_THROWS_AS(parse_word("(ab", 2), ParseError);   // unbalanced paren
  CHECK_THROWS_AS(parse_word("a)", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x", 2), ParseError);
}

TEST_CASE("json serialization round-trips byte-for-byte") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> gen2(0, 1), gen3(0, 2), sign(0, 1), len(0, 10);
  for (int rank : {2, 3}) {
    for (int i = 0; i < 100; ++i) {
      FMElement e = FMElement::identity(rank);
      const int n = len(rng);
      for (int k = 0; k < n; ++k) {
        int gi = rank == 2 ? gen2(rng) : gen3(rng);
        FMElement g = FMElement::generator(rank, gi);
        e = e * (sign(rng) ? g.inverse() : g);
      }
      std::string text = fm_to_json(e);
      FMElement back = fm_from_json(text);
      CHECK(back == e);
      CHECK(fm_to_json(back) == text);
    }
  }
}

TEST_CASE("json keeps arbitrary-precision coefficients exact") {
  Coeff big("123456789012345678901234567890123456789");
  FMElement e = module_to_derived(LaurentPoly::constant(2, big));
  FMElement back = fm_from_json(fm_to_json(e));
  CHECK(back == e);
  CHECK(derived_to_module(back) == LaurentPoly::constant(2, big));
}

TEST_CASE("json rejects corrupt input") {
  CHECK_THROWS_AS(fm_from_json("not json"), ParseError);
  CHECK_THROWS_AS(fm_from_json(R"({"rank":4,"t":[0,0,0,0],"fringe":[[],[],[],[]]})"),
                  ParseError);
  // identity violated: tvec says a, fringe says identity
  CHECK_THROWS_AS(fm_from_json(R"({"rank":2,"t":[1,0],"fringe":[[],[]]})"), ParseError);
}
