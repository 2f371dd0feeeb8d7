#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polyaut/laurent.hpp"
#include "polyaut/polyform.hpp"

namespace polyaut {

/// Element of the free metabelian group of rank 2 or 3 in the Magnus-style
/// pair representation: the abelianized exponent vector t and one Laurent
/// "fringe" polynomial per generator. Every element satisfies the membership
/// identity sum_i fringe_i * (x_i - 1) = x^t - 1, and the representation is
/// faithful, so structural equality decides the word problem.
///
/// Multiplication uses the right-twist rule
///   (t1, f1) * (t2, f2) = (t1 + t2, f1 * x^t2 + f2),
/// under which conjugation of a derived element multiplies its fringe by the
/// abelianized monomial of the conjugator.
class FMElement {
 public:
  static FMElement identity(int rank);
  static FMElement generator(int rank, int index);

  /// Deserialization entry: rebuilds an element from raw parts and rejects
  /// anything violating the membership identity.
  static FMElement from_parts(int rank, const std::array<int, 3>& tvec,
                              std::vector<LaurentPoly> fringe);

  int rank() const { return rank_; }
  const std::array<int, 3>& tvec() const { return tvec_; }
  const LaurentPoly& fringe(int i) const { return fringe_[i]; }

  /// The abelianized monomial x^tvec.
  LaurentPoly monomial() const;

  FMElement operator*(const FMElement& o) const;
  FMElement inverse() const;
  FMElement pow(long long n) const;
  /// v^-1 * this * v
  FMElement conjugated_by(const FMElement& v) const;

  bool operator==(const FMElement& o) const {
    return rank_ == o.rank_ && tvec_ == o.tvec_ && fringe_ == o.fringe_;
  }

  bool is_identity() const;
  /// True iff the element lies in the derived subgroup (tvec = 0).
  bool is_derived() const { return tvec_ == std::array<int, 3>{0, 0, 0}; }

  /// Checks sum_i fringe_i * (x_i - 1) = x^tvec - 1.
  bool membership_identity_holds() const;

  std::string to_string() const;

 private:
  FMElement(int rank);

  int rank_;
  std::array<int, 3> tvec_;
  std::vector<LaurentPoly> fringe_;

  friend FMElement module_to_derived(const LaurentPoly& p);
  friend FMElement retract_generator(const FMElement& e, int killed);
};

inline FMElement fm_commutator(const FMElement& x, const FMElement& y) {
  return x.inverse() * y.inverse() * x * y;
}

/// Group operations adapter for the generic form evaluators.
struct FmOps {
  using Elem = FMElement;
  int rank;
  Elem id() const { return FMElement::identity(rank); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem pow(const Elem& a, long long n) const { return a.pow(n); }
  Elem commutator(const Elem& a, const Elem& b) const { return fm_commutator(a, b); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

using FmEndoForm = EndoFormT<FMElement>;
using FmPolyForm = PolyFormT<FMElement>;

/// Module coordinate of a derived rank-2 element e = c(p), where c(1) = [a,b]
/// and c(p)^g = c(p * m_g). Computed by exact division of both fringe slots;
/// disagreement or inexact division signals representation corruption.
LaurentPoly derived_to_module(const FMElement& e);

/// Inverse of derived_to_module.
FMElement module_to_derived(const LaurentPoly& p);

/// p written as alpha + sum c_m (m - 1) over the non-unit monomials m in p,
/// with alpha = p(1,1). Mirrors v = [a,b]^alpha prod [a,b,u_i]^{c_i}.
struct DerivedDecomposition {
  Coeff alpha;
  std::vector<std::pair<std::array<int, 2>, Coeff>> terms;  // (exponents of u, coeff)
};

DerivedDecomposition decompose_derived(const LaurentPoly& p);

/// IA-automorphism of the rank-2 free metabelian group given by its offsets:
/// f(a) = a*v, f(b) = b*w with v, w in the derived subgroup.
struct IASpec {
  FMElement v;
  FMElement w;
};

/// The constructive conversion of an IA-automorphism to endomorphism form:
/// decomposes v and w, then emits the factor list of
///   phi(x) = x [x,b]^{alpha-lambda} [x,a]^{mu-beta}
///            prod_i [x,v_i]^{-lambda_i} [x,b v_i]^{lambda_i}
///                   [x,w_i]^{mu_i} [x,a w_i]^{-mu_i},
/// dropping zero-exponent factors. Throws NotDerived unless both offsets lie
/// in the derived subgroup.
FmEndoForm build_ia_endoform(const IASpec& spec);

FMElement endoform_apply(const FmEndoForm& form, const FMElement& x);
FmPolyForm endoform_to_polyform(const FmEndoForm& form);
FMElement eval_poly_form(const FmPolyForm& form, const FMElement& x);

/// Homomorphism onto the rank-2 group killing one generator; the kernel is
/// the normal closure of the killed generator, so an element lies in that
/// normal closure iff its image is trivial.
FMElement retract_generator(const FMElement& e, int killed);

struct Rank3Report {
  bool ia_property = false;            // x^-1 f(x) derived for each generator
  bool commutator_in_ncl_c = true;     // whether [a,b] lies in ncl(c)
  bool retraction_of_c_trivial = false;
  std::string retraction_of_ab;        // image of [a,b] under the retraction
  bool pass() const {
    return ia_property && !commutator_in_ncl_c && retraction_of_c_trivial;
  }
};

/// Checks the rank-3 obstruction: f(a)=a, f(b)=b, f(c)=c[a,b] is an
/// IA-automorphism, yet [a,b] survives the retraction killing c and so lies
/// outside the normal closure of c.
Rank3Report rank3_counterexample();

}  // namespace polyaut
