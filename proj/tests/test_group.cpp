#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyaut/catalog.hpp"
#include "polyaut/group.hpp"

using namespace polyaut;

TEST_CASE("catalog C1 and S3 orders") {
  CHECK(catalog_group("C1").order() == 1);
  CHECK(catalog_group("S3").order() == 6);
}

TEST_CASE("permutation closure of a 4-cycle and a transposition is dihedral of order 8") {
  // (1 2 3 4) and (1 3)
  FiniteGroup G = FiniteGroup::from_permutations("d", {{1, 2, 3, 0}, {2, 1, 0, 3}});
  CHECK(G.order() == 8);
  auto lcs = lower_central_series(G);
  REQUIRE(lcs.nilpotency_class.has_value());
  CHECK(*lcs.nilpotency_class == 2);
}

TEST_CASE("permutation closure respects the order cap") {
  CHECK_THROWS_AS(FiniteGroup::from_permutations("S5", {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 64),
                  ClosureOverflow);
}

TEST_CASE("table validation errors") {
  // 'multiplication' i*j = i is associative with no identity
  std::vector<std::vector<Elem>> left = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table("L", left), NoIdentity);

  // non-associative: a Latin square with identity that is not a group
  std::vector<std::vector<Elem>> bad = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_AS(FiniteGroup::from_table("B", bad), NonAssociativeTable);

  // multiplication mod 4: associative monoid with identity 1, but 0 and 2
  // have no inverse
  std::vector<std::vector<Elem>> mod4(4, std::vector<Elem>(4));
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) mod4[i][j] = (i * j) % 4;
  CHECK_THROWS_AS(FiniteGroup::from_table("M", mod4), MissingInverse);
}

TEST_CASE("commutator basics") {
  FiniteGroup S3 = catalog_group("S3");
  for (Elem x = 0; x < S3.order(); ++x) CHECK(S3.commutator(x, x) == S3.id());

  FiniteGroup C6 = catalog_group("C6");
  for (Elem x = 0; x < C6.order(); ++x)
    for (Elem y = 0; y < C6.order(); ++y) CHECK(C6.commutator(x, y) == C6.id());

  // in D8, [r, s] is the central rotation r^2
  FiniteGroup D8 = catalog_group("D8");
  Elem r = D8.gens()[0], s = D8.gens()[1];
  Elem c = D8.commutator(r, s);
  CHECK(c == D8.mul(r, r));
  Subgroup Z = center(D8);
  CHECK(Z.contains(c));
}

TEST_CASE("subgroup closure") {
  FiniteGroup S3 = catalog_group("S3");
  CHECK(subgroup_closure(S3, {}).members == std::vector<Elem>{S3.id()});

  std::vector<Elem> all(S3.order());
  for (int i = 0; i < S3.order(); ++i) all[i] = i;
  CHECK(subgroup_closure(S3, all).order() == 6);

  // a 3-cycle generates the order-3 subgroup
  Elem three_cycle = -1;
  for (Elem x = 0; x < S3.order(); ++x)
    if (S3.element_order(x) == 3) three_cycle = x;
  REQUIRE(three_cycle >= 0);
  CHECK(subgroup_closure(S3, {three_cycle}).order() == 3);
}

TEST_CASE("normal closure") {
  FiniteGroup S3 = catalog_group("S3");
  CHECK(normal_closure(S3, {S3.id()}).order() == 1);

  // a transposition normally generates all of S3
  Elem transposition = -1;
  for (Elem x = 0; x < S3.order(); ++x)
    if (S3.element_order(x) == 2) transposition = x;
  REQUIRE(transposition >= 0);
  CHECK(normal_closure(S3, {transposition}).order() == 6);

  FiniteGroup C6 = catalog_group("C6");
  for (Elem x = 0; x < C6.order(); ++x)
    CHECK(normal_closure(C6, {x}).order() == C6.element_order(x));
}

TEST_CASE("center") {
  CHECK(center(catalog_group("C8")).order() == 8);
  CHECK(center(catalog_group("S3")).order() == 1);
  CHECK(center(catalog_group("D8")).order() == 2);
  CHECK(center(catalog_group("Q8")).order() == 2);
  CHECK(center(catalog_group("Heis27")).order() == 3);
}

TEST_CASE("derived series") {
  auto abelian = derived_series(catalog_group("C12"));
  CHECK(abelian.derived_length == 1);
  CHECK(abelian.is_metabelian);

  auto s3 = derived_series(catalog_group("S3"));
  CHECK(s3.derived_length == 2);
  CHECK(s3.is_metabelian);
  CHECK(s3.series.terms[1].order() == 3);

  auto s4 = derived_series(catalog_group("S4"));
  CHECK(s4.derived_length == 3);
  CHECK_FALSE(s4.is_metabelian);

  CHECK(derived_series(catalog_group("C1")).derived_length == 0);
}

TEST_CASE("lower central series") {
  CHECK(lower_central_series(catalog_group("C7")).nilpotency_class == 1);
  CHECK(lower_central_series(catalog_group("D8")).nilpotency_class == 2);
  CHECK(lower_central_series(catalog_group("D16")).nilpotency_class == 3);
  CHECK(lower_central_series(catalog_group("Q8")).nilpotency_class == 2);
  CHECK(lower_central_series(catalog_group("Heis27")).nilpotency_class == 2);
  CHECK_FALSE(lower_central_series(catalog_group("S3")).nilpotency_class.has_value());
  CHECK_FALSE(lower_central_series(catalog_group("F20")).nilpotency_class.has_value());
}

TEST_CASE("series terms are normal and descending") {
  for (const auto& name : catalog_names()) {
    FiniteGroup G = catalog_group(name);
    auto ds = derived_series(G);
    auto lcs = lower_central_series(G);
    for (const Series* s : {&ds.series, &lcs.series}) {
      CHECK(s->terms.front().order() == G.order());
      for (std::size_t i = 0; i < s->terms.size(); ++i) {
        CHECK(is_normal(G, s->terms[i]));
        if (i > 0) CHECK(s->terms[i].order() < s->terms[i - 1].order());
      }
    }
  }
}

TEST_CASE("lower central terms match the naive full-scan definition") {
  // oracle: gamma_{i+1} as the subgroup generated by every [h, g] with
  // h in gamma_i and g ranging over the whole group
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    FiniteGroup G = catalog_group(name);
    auto lcs = lower_central_series(G);
    for (std::size_t i = 0; i + 1 < lcs.series.terms.size(); ++i) {
      std::vector<Elem> seed;
      for (Elem h : lcs.series.terms[i].members)
        for (Elem g = 0; g < G.order(); ++g) seed.push_back(G.commutator(h, g));
      Subgroup naive = subgroup_closure(G, seed);
      CHECK(naive.members == lcs.series.terms[i + 1].members);
    }
    // stabilization: one more step keeps the last term fixed
    const Subgroup& last = lcs.series.terms.back();
    std::vector<Elem> seed;
    for (Elem h : last.members)
      for (Elem g = 0; g < G.order(); ++g) seed.push_back(G.commutator(h, g));
    CHECK(subgroup_closure(G, seed).members == last.members);
  }
}

TEST_CASE("derived length bounded by nilpotency class on nilpotent entries") {
  for (const auto& name : catalog_names()) {
    FiniteGroup G = catalog_group(name);
    auto lcs = lower_central_series(G);
    if (!lcs.nilpotency_class || *lcs.nilpotency_class == 0) continue;
    auto ds = derived_series(G);
    REQUIRE(ds.derived_length.has_value());
    CHECK(*ds.derived_length <= *lcs.nilpotency_class);
  }
}

TEST_CASE("Lagrange for closures of random seeds") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"S4", "A4", "D12", "Heis27", "F20"}) {
    FiniteGroup G = catalog_group(name);
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> seed;
      for (int k = 0; k < 2; ++k) seed.push_back(pick(rng));
      CHECK(G.order() % subgroup_closure(G, seed).order() == 0);
      CHECK(G.order() % normal_closure(G, seed).order() == 0);
    }
  }
}

TEST_CASE("quotient groups") {
  FiniteGroup S3 = catalog_group("S3");
  CHECK(quotient_group(S3, trivial_subgroup(S3)).order() == 6);
  CHECK(quotient_group(S3, whole_group(S3)).order() == 1);

  auto ds = derived_series(S3);
  FiniteGroup Q = quotient_group(S3, ds.series.terms[1]);
  CHECK(Q.order() == 2);

  // subgroup generated by a transposition is not normal
  Elem t = -1;
  for (Elem x = 0; x < S3.order(); ++x)
    if (S3.element_order(x) == 2) t = x;
  CHECK_THROWS_AS(quotient_group(S3, subgroup_closure(S3, {t})), NotNormal);

  for (const auto& name : catalog_names()) {
    FiniteGroup G = catalog_group(name);
    Subgroup Z = center(G);
    CHECK(quotient_group(G, Z).order() == G.order() / Z.order());
  }
}

TEST_CASE("element power and order") {
  FiniteGroup D16 = catalog_group("D16");
  Elem r = D16.gens()[0];
  CHECK(D16.element_order(r) == 8);
  CHECK(D16.power(r, 0) == D16.id());
  CHECK(D16.power(r, 8) == D16.id());
  CHECK(D16.power(r, -3) == D16.power(r, 5));
}
