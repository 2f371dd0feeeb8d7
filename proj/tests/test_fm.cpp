#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyaut/fm.hpp"

using namespace polyaut;

namespace {

FMElement random_word(std::mt19937_64& rng, int rank, int max_len = 8) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  FMElement e = FMElement::identity(rank);
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    FMElement g = FMElement::generator(rank, gen(rng));
    e = e * (sign(rng) ? g.inverse() : g);
  }
  return e;
}

LaurentPoly random_module_poly(std::mt19937_64& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LaurentPoly p(2);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p = p + LaurentPoly::monomial(2, {exp(rng), exp(rng), 0}, coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("generators have the defining representation") {
  FMElement a = FMElement::generator(2, 0);
  CHECK(a.tvec() == std::array<int, 3>{1, 0, 0});
  CHECK(a.fringe(0) == LaurentPoly::constant(2, 1));
  CHECK(a.fringe(1).is_zero());
  CHECK(a.membership_identity_holds());

  FMElement b = FMElement::generator(2, 1);
  CHECK(b.tvec() == std::array<int, 3>{0, 1, 0});
  CHECK(b.fringe(0).is_zero());
  CHECK(b.fringe(1) == LaurentPoly::constant(2, 1));
}

TEST_CASE("group laws and membership identity on random words") {
  std::mt19937_64 rng(42);
  for (int rank : {2, 3}) {
    for (int i = 0; i < 500; ++i) {
      FMElement e = random_word(rng, rank);
      FMElement f = random_word(rng, rank);
      FMElement g = random_word(rng, rank);

      CHECK(e.membership_identity_holds());
      CHECK((e * f).membership_identity_holds());
      CHECK(e.inverse().membership_identity_holds());

      CHECK((e * FMElement::identity(rank)) == e);
      CHECK((e * e.inverse()).is_identity());
      CHECK((e.inverse() * e).is_identity());
      CHECK(((e * f) * g) == (e * (f * g)));
    }
  }
}

TEST_CASE("powers agree with iterated products") {
  std::mt19937_64 rng(43);
  for (int rank : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      FMElement e = random_word(rng, rank, 5);
      FMElement acc = FMElement::identity(rank);
      for (int n = 0; n <= 5; ++n) {
        CHECK(e.pow(n) == acc);
        CHECK(e.pow(-n) == acc.inverse());
        acc = acc * e;
      }
    }
  }
}

TEST_CASE("commutator of the generators") {
  FMElement a = FMElement::generator(2, 0);
  FMElement b = FMElement::generator(2, 1);
  FMElement c = fm_commutator(a, b);
  CHECK(c.is_derived());
  CHECK_FALSE(c.is_identity());
  CHECK(c == fm_commutator(b, a).inverse());
  CHECK(c.membership_identity_holds());
  // conjugate of [a,b] by a derived element leaves it fixed, so
  // [a,b]^a * [a,b]^-1 is derived
  CHECK((c.conjugated_by(a) * c.inverse()).is_derived());
}

TEST_CASE("the representation is metabelian") {
  std::mt19937_64 rng(44);
  for (int rank : {2, 3}) {
    for (int i = 0; i < 200; ++i) {
      FMElement g1 = random_word(rng, rank, 5);
      FMElement g2 = random_word(rng, rank, 5);
      FMElement g3 = random_word(rng, rank, 5);
      FMElement g4 = random_word(rng, rank, 5);
      CHECK(fm_commutator(fm_commutator(g1, g2), fm_commutator(g3, g4)).is_identity());
    }
  }
}

TEST_CASE("left-normed commutators of derived elements are symmetric") {
  // [t,x,y] = [t,y,x] for t in the derived subgroup
  std::mt19937_64 rng(45);
  for (int rank : {2, 3}) {
    for (int i = 0; i < 100; ++i) {
      FMElement t = fm_commutator(random_word(rng, rank, 5), random_word(rng, rank, 5));
      REQUIRE(t.is_derived());
      FMElement x = random_word(rng, rank, 5);
      FMElement y = random_word(rng, rank, 5);
      CHECK(fm_commutator(fm_commutator(t, x), y) ==
            fm_commutator(fm_commutator(t, y), x));
    }
  }
}

TEST_CASE("module coordinate of basic derived elements") {
  FMElement a = FMElement::generator(2, 0);
  FMElement b = FMElement::generator(2, 1);
  FMElement c = fm_commutator(a, b);

  CHECK(derived_to_module(c) == LaurentPoly::constant(2, 1));
  CHECK(derived_to_module(c.conjugated_by(a)) == LaurentPoly::variable(2, 0));

  // [a,b,u] with u = ab has coordinate xy - 1
  FMElement u = a * b;
  LaurentPoly expected = LaurentPoly::monomial(2, {1, 1, 0}) - LaurentPoly::constant(2, 1);
  CHECK(derived_to_module(fm_commutator(c, u)) == expected);

  CHECK_THROWS_AS(derived_to_module(a), NotDerived);
}

TEST_CASE("module roundtrip on random polynomials") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_module_poly(rng);
    FMElement e = module_to_derived(p);
    CHECK(e.is_derived());
    CHECK(e.membership_identity_holds());
    CHECK(derived_to_module(e) == p);
  }
}

TEST_CASE("conjugation acts on the module by the abelianized monomial") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_module_poly(rng);
    FMElement g = random_word(rng, 2, 6);
    LaurentPoly expected = p * LaurentPoly::monomial(2, g.tvec());
    CHECK(derived_to_module(module_to_derived(p).conjugated_by(g)) == expected);
  }
}

TEST_CASE("collection identity for powers of the generators") {
  FMElement a = FMElement::generator(2, 0);
  FMElement b = FMElement::generator(2, 1);
  for (long long alpha = -3; alpha <= 3; ++alpha) {
    for (long long beta = -3; beta <= 3; ++beta) {
      FMElement lhs = fm_commutator(a.pow(alpha), b.pow(beta));
      LaurentPoly p = LaurentPoly::geometric_sum(2, 0, alpha) *
                      LaurentPoly::geometric_sum(2, 1, beta);
      CHECK(lhs == module_to_derived(p));
    }
  }
}

TEST_CASE("derived decomposition") {
  // p = 5
  auto d = decompose_derived(LaurentPoly::constant(2, 5));
  CHECK(d.alpha == 5);
  CHECK(d.terms.empty());

  // p = x: alpha = 1, terms {(x,1)}
  d = decompose_derived(LaurentPoly::variable(2, 0));
  CHECK(d.alpha == 1);
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].first == std::array<int, 2>{1, 0});
  CHECK(d.terms[0].second == 1);

  // p = 2xy - 3: alpha = -1, terms {(xy, 2)}
  LaurentPoly p = LaurentPoly::monomial(2, {1, 1, 0}, 2) - LaurentPoly::constant(2, 3);
  d = decompose_derived(p);
  CHECK(d.alpha == -1);
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].first == std::array<int, 2>{1, 1});
  CHECK(d.terms[0].second == 2);

  // correctness identity p = alpha + sum c_m (m - 1) on random polynomials
  std::mt19937_64 rng(48);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly q = random_module_poly(rng);
    auto dec = decompose_derived(q);
    LaurentPoly rebuilt = LaurentPoly::constant(2, dec.alpha);
    for (const auto& [u, cm] : dec.terms) {
      LaurentPoly m = LaurentPoly::monomial(2, {u[0], u[1], 0});
      rebuilt = rebuilt + (m - LaurentPoly::constant(2, 1)) * cm;
    }
    CHECK(rebuilt == q);
  }
}

TEST_CASE("ia endoform of the basic examples") {
  FMElement a = FMElement::generator(2, 0);
  FMElement b = FMElement::generator(2, 1);
  FMElement id2 = FMElement::identity(2);
  FMElement ab = fm_commutator(a, b);

  // v = [a,b], w = 1: phi(x) = x[x,b]
  FmEndoForm phi = build_ia_endoform({ab, id2});
  REQUIRE(phi.size() == 1);
  CHECK(phi[0].v == b);
  CHECK(phi[0].eta == 1);
  CHECK(endoform_apply(phi, a) == a * ab);
  CHECK(endoform_apply(phi, b) == b);

  // v = w = 1: identity map
  CHECK(build_ia_endoform({id2, id2}).empty());

  // v = 1, w = [a,b,a]: factors (a,1), (a,1), (a^2,-1)
  FmEndoForm psi = build_ia_endoform({id2, fm_commutator(ab, a)});
  REQUIRE(psi.size() == 3);
  CHECK(psi[0].v == a);
  CHECK(psi[0].eta == 1);
  CHECK(psi[1].v == a);
  CHECK(psi[1].eta == 1);
  CHECK(psi[2].v == a * a);
  CHECK(psi[2].eta == -1);
  CHECK(endoform_apply(psi, b) == b * fm_commutator(ab, a));
  CHECK(endoform_apply(psi, a) == a);

  CHECK_THROWS_AS(build_ia_endoform({a, id2}), NotDerived);
}

TEST_CASE("ia endoform roundtrip on random specs") {
  std::mt19937_64 rng(49);
  const FMElement a = FMElement::generator(2, 0);
  const FMElement b = FMElement::generator(2, 1);
  for (int i = 0; i < 50; ++i) {
    FMElement v = module_to_derived(random_module_poly(rng));
    FMElement w = module_to_derived(random_module_poly(rng));
    FmEndoForm phi = build_ia_endoform({v, w});
    CHECK(endoform_apply(phi, a) == a * v);
    CHECK(endoform_apply(phi, b) == b * w);
    for (int k = 0; k < 20; ++k) {
      FMElement x = random_word(rng, 2, 5);
      FMElement y = random_word(rng, 2, 5);
      CHECK(endoform_apply(phi, x * y) ==
            endoform_apply(phi, x) * endoform_apply(phi, y));
    }
  }
}

TEST_CASE("endoform application basics") {
  std::mt19937_64 rng(50);
  const FMElement id2 = FMElement::identity(2);
  for (int i = 0; i < 20; ++i) {
    FMElement x = random_word(rng, 2, 5);
    CHECK(endoform_apply(FmEndoForm{}, x) == x);
  }
  FmEndoForm form;
  for (int i = 0; i < 3; ++i) form.push_back({random_word(rng, 2, 4), i - 1});
  CHECK(endoform_apply(form, id2).is_identity());
}

TEST_CASE("endoform expansion to conjugate-power form") {
  const FMElement a = FMElement::generator(2, 0);
  const FMElement b = FMElement::generator(2, 1);
  const FMElement id2 = FMElement::identity(2);

  // empty form expands to the identity automorphism
  FmPolyForm pf = endoform_to_polyform(FmEndoForm{});
  REQUIRE(pf.size() == 1);
  CHECK(pf[0].conjugator == FMElement::identity(2));
  CHECK(pf[0].exponent == 1);

  // x[x,v] collapses to the inner automorphism by v
  pf = endoform_to_polyform(FmEndoForm{{b, 1}});
  REQUIRE(pf.size() == 1);
  CHECK(pf[0].conjugator == b);
  CHECK(pf[0].exponent == 1);

  // x[x,v]^-1 keeps three factors with exponent sum 1
  pf = endoform_to_polyform(FmEndoForm{{b, -1}});
  REQUIRE(pf.size() == 3);
  CHECK(pf[0].conjugator == id2);
  CHECK(pf[1].conjugator == b);
  CHECK(pf[1].exponent == -1);
  CHECK(exponent_sum(pf) == 1);

  // expansion preserves the map, symbolically
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    FmEndoForm form;
    std::uniform_int_distribution<int> eta(-3, 3);
    std::uniform_int_distribution<int> nfac(0, 3);
    const int n = nfac(rng);
    for (int k = 0; k < n; ++k) form.push_back({random_word(rng, 2, 4), eta(rng)});
    FmPolyForm expanded = endoform_to_polyform(form);
    CHECK(exponent_sum(expanded) == 1);
    FMElement x = random_word(rng, 2, 5);
    CHECK(eval_poly_form(expanded, x) == endoform_apply(form, x));
  }
}

TEST_CASE("retraction kills one generator") {
  const FMElement a3 = FMElement::generator(3, 0);
  const FMElement c3 = FMElement::generator(3, 2);

  CHECK(retract_generator(c3, 2).is_identity());
  CHECK(retract_generator(a3, 2) == FMElement::generator(2, 0));

  FMElement ab3 = fm_commutator(a3, FMElement::generator(3, 1));
  FMElement image = retract_generator(ab3, 2);
  CHECK_FALSE(image.is_identity());
  CHECK(image == fm_commutator(FMElement::generator(2, 0), FMElement::generator(2, 1)));

  // retraction is a homomorphism
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    FMElement e = random_word(rng, 3, 6);
    FMElement f = random_word(rng, 3, 6);
    for (int killed = 0; killed < 3; ++killed) {
      CHECK(retract_generator(e * f, killed) ==
            retract_generator(e, killed) * retract_generator(f, killed));
      CHECK(retract_generator(e, killed).membership_identity_holds());
    }
  }
}

TEST_CASE("rank-3 obstruction") {
  Rank3Report rep = rank3_counterexample();
  CHECK(rep.ia_property);
  CHECK_FALSE(rep.commutator_in_ncl_c);
  CHECK(rep.retraction_of_c_trivial);
  CHECK(rep.pass());
}

TEST_CASE("rank mismatch is rejected") {
  FMElement a2 = FMElement::generator(2, 0);
  FMElement a3 = FMElement::generator(3, 0);
  CHECK_THROWS_AS(a2 * a3, RankMismatch);
  CHECK_THROWS_AS(derived_to_module(fm_commutator(a3, FMElement::generator(3, 1))),
                  RankMismatch);
  CHECK_THROWS_AS(retract_generator(a2, 0), RankMismatch);
}

TEST_CASE("from_parts validates the membership identity") {
  FMElement a = FMElement::generator(2, 0);
  CHECK(FMElement::from_parts(2, a.tvec(), {a.fringe(0), a.fringe(1)}) == a);
  CHECK_THROWS_AS(
      FMElement::from_parts(2, {1, 0, 0}, {LaurentPoly::zero(2), LaurentPoly::zero(2)}),
      Error);
}
