#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyaut/laurent.hpp"

using namespace polyaut;

namespace {

LaurentPoly var(int rank, int i) { return LaurentPoly::variable(rank, i); }
LaurentPoly cst(int rank, long long c) { return LaurentPoly::constant(rank, c); }

LaurentPoly random_poly(std::mt19937_64& rng, int rank, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LaurentPoly p(rank);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exps e{0, 0, 0};
    for (int v = 0; v < rank; ++v) e[v] = exp(rng);
    p = p + LaurentPoly::monomial(rank, e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("geometric sum satisfies its defining identity") {
  // oracle: (x - 1) * s == x^alpha - 1, checked by expansion
  for (int rank : {2, 3}) {
    for (int v = 0; v < rank; ++v) {
      for (long long alpha = -6; alpha <= 6; ++alpha) {
        LaurentPoly s = LaurentPoly::geometric_sum(rank, v, alpha);
        Exps e{0, 0, 0};
        e[v] = static_cast<int>(alpha);
        LaurentPoly lhs = (var(rank, v) - cst(rank, 1)) * s;
        LaurentPoly rhs = LaurentPoly::monomial(rank, e) - cst(rank, 1);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("geometric sum small cases") {
  CHECK(LaurentPoly::geometric_sum(2, 0, 0).is_zero());
  CHECK(LaurentPoly::geometric_sum(2, 0, 1) == cst(2, 1));

  // alpha = -2 -> -x^-1 - x^-2
  LaurentPoly expected =
      LaurentPoly::monomial(2, {-1, 0, 0}, -1) + LaurentPoly::monomial(2, {-2, 0, 0}, -1);
  CHECK(LaurentPoly::geometric_sum(2, 0, -2) == expected);
}

TEST_CASE("multiplication basics") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly p = random_poly(rng, 2);
    CHECK(p * cst(2, 1) == p);
    CHECK((p * LaurentPoly::zero(2)).is_zero());
  }
  // (x-1)(y-1) = xy - x - y + 1
  LaurentPoly prod = (var(2, 0) - cst(2, 1)) * (var(2, 1) - cst(2, 1));
  LaurentPoly expected = LaurentPoly::monomial(2, {1, 1, 0}) -
                         var(2, 0) - var(2, 1) + cst(2, 1);
  CHECK(prod == expected);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng, 3);
    LaurentPoly q = random_poly(rng, 3);
    LaurentPoly r = random_poly(rng, 3);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(var(2, 0) * var(3, 0), RankMismatch);
  CHECK_THROWS_AS(var(2, 0) + var(3, 0), RankMismatch);
}

TEST_CASE("exact division by x_i - 1") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly q = random_poly(rng, 2);
    for (int v = 0; v < 2; ++v) {
      LaurentPoly p = (var(2, v) - cst(2, 1)) * q;
      auto back = p.div_exact_var_minus_one(v);
      REQUIRE(back.has_value());
      CHECK(*back == q);
    }
  }
  // a polynomial with nonzero value at 1 is not divisible
  CHECK_FALSE(var(2, 0).div_exact_var_minus_one(1).has_value());
  CHECK_FALSE(cst(2, 3).div_exact_var_minus_one(0).has_value());
}

TEST_CASE("substitution and variable drop") {
  // p = x*z + z^-1 at z=1 -> x + 1
  LaurentPoly p = LaurentPoly::monomial(3, {1, 0, 1}) + LaurentPoly::monomial(3, {0, 0, -1});
  LaurentPoly s = p.substitute_one(2);
  CHECK(s == var(3, 0) + cst(3, 1));
  LaurentPoly dropped = s.drop_variable(2);
  CHECK(dropped == var(2, 0) + cst(2, 1));
  CHECK_THROWS_AS(p.drop_variable(2), Error);  // still uses z
}

TEST_CASE("evaluation at ones and printing") {
  LaurentPoly p = LaurentPoly::monomial(2, {1, 1, 0}, 2) + cst(2, -3);
  CHECK(p.eval_at_ones() == -1);
  CHECK(LaurentPoly::zero(2).to_string() == "0");
  CHECK(cst(2, 1).to_string() == "1");
  CHECK((var(2, 0) - cst(2, 1)).to_string() == "-1 + x");
}
