#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyaut/group.hpp"
#include "polyaut/polyform.hpp"

namespace polyaut {

using PolynomialForm = PolyFormT<Elem>;
using FiniteEndoForm = EndoFormT<Elem>;

/// Group operations adapter for the generic form evaluators.
struct FiniteGroupOps {
  using Elem = polyaut::Elem;
  const FiniteGroup* G;
  Elem id() const { return G->id(); }
  Elem mul(Elem a, Elem b) const { return G->mul(a, b); }
  Elem inv(Elem a) const { return G->inv(a); }
  Elem pow(Elem a, long long n) const { return G->power(a, n); }
  Elem commutator(Elem a, Elem b) const { return G->commutator(a, b); }
  bool equal(Elem a, Elem b) const { return a == b; }
};

inline Elem eval_poly_form(const FiniteGroup& G, const PolynomialForm& form, Elem x) {
  return eval_poly_form(FiniteGroupOps{&G}, form, x);
}

/// Total map G -> G stored as its image array. Borrows the group: the
/// FiniteGroup must outlive every function/set/closure built over it.
struct GroupFunction {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
  bool fixes_identity() const { return image[parent->id()] == parent->id(); }
  bool is_bijective() const;
  bool is_homomorphism() const;
  /// (this o g)(x) = this(g(x))
  GroupFunction compose(const GroupFunction& g) const;
  GroupFunction inverse_function() const;  // requires bijectivity
  bool operator==(const GroupFunction& o) const { return image == o.image; }
};

GroupFunction identity_function(const FiniteGroup& G);
GroupFunction conjugation_function(const FiniteGroup& G, Elem v);
GroupFunction inversion_function(const FiniteGroup& G);

/// Deduplicated set of maps in canonical (lexicographic image) order.
struct AutomorphismSet {
  const FiniteGroup* parent = nullptr;
  std::vector<GroupFunction> maps;

  std::size_t size() const { return maps.size(); }
  /// Index in canonical order, or -1.
  int index_of(const std::vector<Elem>& image) const;
  bool contains(const GroupFunction& f) const { return index_of(f.image) >= 0; }
  bool closed_under_composition() const;
};

AutomorphismSet make_automorphism_set(const FiniteGroup& G,
                                      std::vector<GroupFunction> maps);

/// All conjugation maps, deduplicated; |I(G)| = |G| / |Z(G)|.
AutomorphismSet inner_automorphisms(const FiniteGroup& G);

/// Exhaustive search over generator images (pruned by element order), each
/// candidate extended along a BFS word factorization and validated as a
/// bijective homomorphism. Throws SearchBudgetExceeded when the candidate
/// tuple count passes `budget`.
AutomorphismSet automorphism_group(const FiniteGroup& G, std::uint64_t budget = 200000);

/// The monoid of polynomial functions: pointwise-product closure of the
/// conjugation maps together with inversion. Elements are image arrays in
/// canonical order.
struct FunctionSet {
  const FiniteGroup* parent = nullptr;
  std::vector<std::vector<Elem>> images;  // sorted lexicographically

  std::size_t size() const { return images.size(); }
  bool contains(const std::vector<Elem>& image) const;
};

/// Deterministic fixed-point closure under pointwise product. Throws
/// ClosureBudgetExceeded (carrying the partial size) when the budget is hit.
FunctionSet polynomial_function_closure(const FiniteGroup& G, std::size_t budget = 200000);

/// P0(G): the bijective homomorphisms within the polynomial-function closure.
/// Verifies closure under composition (a theorem for finite groups) and
/// throws Error if it were to fail.
AutomorphismSet polynomial_automorphisms(const FiniteGroup& G, const FunctionSet& closure);

/// P0(G) pinned by the squeeze I(G) <= P0(G) <= A(G): conjugation maps are
/// polynomial and every polynomial automorphism is an automorphism, so when
/// I(G) and A(G) coincide as sets the squeeze is exact. Returns nullopt when
/// they differ (inconclusive). Used when the function closure is infeasible.
std::optional<AutomorphismSet> polynomial_automorphisms_by_squeeze(
    const FiniteGroup& G, const AutomorphismSet& inner, const AutomorphismSet& aut);

/// P(G) = <P0(G)>: closure of P0 under composition and functional inverse.
AutomorphismSet generate_P(const FiniteGroup& G, const AutomorphismSet& p0);

/// Materializes a composition-closed set of bijections as a FiniteGroup with
/// mul(i,j) = maps[i] o maps[j]. `gen_indices` empty means all elements.
FiniteGroup composition_group(const AutomorphismSet& S, const std::string& name,
                              std::vector<Elem> gen_indices = {});

struct ChainReport {
  bool inner_subset_p = false;
  bool p_subset_aut = false;
  bool p0_equals_p = false;
  bool inner_normal_in_p = false;
  bool p_normal_in_aut = false;
  bool p0_normal_subset_of_aut = false;
  std::vector<std::string> witnesses;
  bool pass() const {
    return inner_subset_p && p_subset_aut && p0_equals_p && inner_normal_in_p &&
           p_normal_in_aut && p0_normal_subset_of_aut;
  }
};

/// Verifies I(G) <= P(G) <= A(G) with both normalities, that P0 is a normal
/// subset of A(G), and that P0 = P as sets, all by exhaustive conjugation.
ChainReport check_inclusion_chain(const FiniteGroup& G, const AutomorphismSet& inner,
                                  const AutomorphismSet& aut, const AutomorphismSet& p0,
                                  const AutomorphismSet& p);

/// True iff any two conjugates of t commute.
bool conjugates_commute(const FiniteGroup& G, Elem t);

/// All t for which any two conjugates commute (never empty: contains id).
std::vector<Elem> commuting_conjugate_elements(const FiniteGroup& G);

/// The double-product expansion of f(g(t)) for t with pairwise-commuting
/// conjugates:
///   prod_i prod_j t^{e_i h_j} [t^{e_i h_j}, v_i] [t^{e_i h_j}, w_j]
///                 [t^{e_i h_j}, w_j, v_i]
/// with the left-normed convention. Throws ConjugatesDoNotCommute.
Elem lemma_2_1_compose(const FiniteGroup& G, const PolynomialForm& f,
                       const PolynomialForm& g, Elem t);

/// x * prod [x,v_i]^{eta_i} on a finite group; requires the group to be
/// metabelian (throws NotMetabelian).
Elem endoform_apply(const FiniteGroup& G, const FiniteEndoForm& form, Elem x);

/// Same evaluation with no precondition; used to exhibit failures on
/// non-metabelian groups.
Elem endoform_eval_unchecked(const FiniteGroup& G, const FiniteEndoForm& form, Elem x);

}  // namespace polyaut
