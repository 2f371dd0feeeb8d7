#include "polyaut/fm.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace polyaut {

namespace {

void check_same_rank(const FMElement& a, const FMElement& b) {
  if (a.rank() != b.rank())
    throw RankMismatch("free metabelian elements of different rank");
}

long long to_long_checked(const Coeff& c) {
  if (c > Coeff(std::numeric_limits<long long>::max()) ||
      c < Coeff(std::numeric_limits<long long>::min()))
    throw Error("decomposition coefficient exceeds 64-bit exponent range");
  return static_cast<long long>(c);
}

}  // namespace

FMElement::FMElement(int rank) : rank_(rank), tvec_{0, 0, 0} {
  if (rank != 2 && rank != 3) throw Error("FMElement rank must be 2 or 3");
  fringe_.assign(rank, LaurentPoly(rank));
}

FMElement FMElement::identity(int rank) { return FMElement(rank); }

FMElement FMElement::generator(int rank, int index) {
  if (index < 0 || index >= rank) throw Error("generator index out of range");
  FMElement e(rank);
  e.tvec_[index] = 1;
  e.fringe_[index] = LaurentPoly::constant(rank, 1);
  return e;
}

FMElement FMElement::from_parts(int rank, const std::array<int, 3>& tvec,
                                std::vector<LaurentPoly> fringe) {
  FMElement e(rank);
  if (static_cast<int>(fringe.size()) != rank)
    throw RankMismatch("fringe slot count does not match rank");
  for (const auto& f : fringe)
    if (f.rank() != rank) throw RankMismatch("fringe polynomial of wrong rank");
  for (int i = rank; i < 3; ++i)
    if (tvec[i] != 0) throw Error("tvec entry beyond rank");
  e.tvec_ = tvec;
  e.fringe_ = std::move(fringe);
  if (!e.membership_identity_holds())
    throw Error("parts violate the membership identity");
  return e;
}

LaurentPoly FMElement::monomial() const {
  return LaurentPoly::monomial(rank_, tvec_);
}

FMElement FMElement::operator*(const FMElement& o) const {
  check_same_rank(*this, o);
  FMElement r(rank_);
  for (int i = 0; i < 3; ++i) r.tvec_[i] = tvec_[i] + o.tvec_[i];
  for (int i = 0; i < rank_; ++i)
    r.fringe_[i] = fringe_[i].shifted(o.tvec_) + o.fringe_[i];
  return r;
}

FMElement FMElement::inverse() const {
  FMElement r(rank_);
  Exps neg{-tvec_[0], -tvec_[1], -tvec_[2]};
  for (int i = 0; i < 3; ++i) r.tvec_[i] = neg[i];
  for (int i = 0; i < rank_; ++i) r.fringe_[i] = (-fringe_[i]).shifted(neg);
  return r;
}

FMElement FMElement::pow(long long n) const {
  if (n == 0) return identity(rank_);
  const FMElement base = n > 0 ? *this : inverse();
  const long long cnt = n > 0 ? n : -n;
  // base^k = (k*t, f * sum_{j<k} x^{j t})
  FMElement r(rank_);
  for (int i = 0; i < 3; ++i) {
    const long long nt = static_cast<long long>(base.tvec_[i]) * cnt;
    if (nt > 100000000LL || nt < -100000000LL)
      throw Error("power exceeds the supported exponent range");
    r.tvec_[i] = static_cast<int>(nt);
  }
  LaurentPoly s(rank_);
  Exps shift{0, 0, 0};
  for (long long j = 0; j < cnt; ++j) {
    s = s + LaurentPoly::monomial(rank_, shift);
    for (int i = 0; i < 3; ++i) shift[i] += base.tvec_[i];
  }
  for (int i = 0; i < rank_; ++i) r.fringe_[i] = base.fringe_[i] * s;
  return r;
}

FMElement FMElement::conjugated_by(const FMElement& v) const {
  return v.inverse() * *this * v;
}

bool FMElement::is_identity() const {
  if (tvec_ != std::array<int, 3>{0, 0, 0}) return false;
  for (const auto& f : fringe_)
    if (!f.is_zero()) return false;
  return true;
}

bool FMElement::membership_identity_holds() const {
  LaurentPoly lhs(rank_);
  for (int i = 0; i < rank_; ++i)
    lhs = lhs + fringe_[i] * (LaurentPoly::variable(rank_, i) -
                              LaurentPoly::constant(rank_, 1));
  LaurentPoly rhs = monomial() - LaurentPoly::constant(rank_, 1);
  return lhs == rhs;
}

std::string FMElement::to_string() const {
  std::ostringstream os;
  os << "t=(";
  for (int i = 0; i < rank_; ++i) {
    if (i) os << ',';
    os << tvec_[i];
  }
  os << ")";
  for (int i = 0; i < rank_; ++i) os << " f" << i << "=" << fringe_[i].to_string();
  return os.str();
}

LaurentPoly derived_to_module(const FMElement& e) {
  if (e.rank() != 2) throw RankMismatch("derived_to_module expects rank 2");
  if (!e.is_derived()) throw NotDerived("element has nonzero abelianization");
  // fringe([a,b]) = (y - 1, 1 - x); divide both slots and cross-check
  auto qx = e.fringe(0).div_exact_var_minus_one(1);  // / (y - 1)
  auto qy = e.fringe(1).div_exact_var_minus_one(0);  // / (x - 1), then negate
  if (!qx || !qy)
    throw ExactDivisionFailed("fringe is not a multiple of the fringe of [a,b]");
  LaurentPoly p = *qx;
  if (!(p == -*qy))
    throw ExactDivisionFailed("fringe slots disagree on the module coordinate");
  return p;
}

FMElement module_to_derived(const LaurentPoly& p) {
  if (p.rank() != 2) throw RankMismatch("module_to_derived expects rank 2");
  FMElement e(2);
  LaurentPoly x = LaurentPoly::variable(2, 0);
  LaurentPoly y = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, 1);
  e.fringe_[0] = (y - one) * p;
  e.fringe_[1] = (one - x) * p;
  return e;
}

DerivedDecomposition decompose_derived(const LaurentPoly& p) {
  if (p.rank() != 2) throw RankMismatch("decompose_derived expects rank 2");
  DerivedDecomposition d;
  d.alpha = p.eval_at_ones();
  for (const auto& [e, c] : p.terms()) {
    if (e[0] == 0 && e[1] == 0) continue;
    d.terms.push_back({{e[0], e[1]}, c});
  }
  return d;
}

FmEndoForm build_ia_endoform(const IASpec& spec) {
  if (!spec.v.is_derived() || !spec.w.is_derived())
    throw NotDerived("IA offsets must lie in the derived subgroup");
  DerivedDecomposition dv = decompose_derived(derived_to_module(spec.v));
  DerivedDecomposition dw = decompose_derived(derived_to_module(spec.w));

  Coeff lambda = 0, mu = 0;
  for (const auto& [u, c] : dv.terms) lambda += c;
  for (const auto& [u, c] : dw.terms) mu += c;

  const FMElement a = FMElement::generator(2, 0);
  const FMElement b = FMElement::generator(2, 1);
  auto preimage = [&](const std::array<int, 2>& u) {
    return a.pow(u[0]) * b.pow(u[1]);
  };

  FmEndoForm form;
  auto push = [&](const FMElement& v, const Coeff& eta) {
    if (eta == 0) return;
    form.push_back({v, to_long_checked(eta)});
  };

  push(b, dv.alpha - lambda);
  push(a, mu - dw.alpha);
  const std::size_t n = std::max(dv.terms.size(), dw.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < dv.terms.size()) {
      const auto& [u, li] = dv.terms[i];
      FMElement vi = preimage(u);
      push(vi, -li);
      push(b * vi, li);
    }
    if (i < dw.terms.size()) {
      const auto& [u, mi] = dw.terms[i];
      FMElement wi = preimage(u);
      push(wi, mi);
      push(a * wi, -mi);
    }
  }
  return form;
}

FMElement endoform_apply(const FmEndoForm& form, const FMElement& x) {
  return endoform_apply(FmOps{x.rank()}, form, x);
}

FmPolyForm endoform_to_polyform(const FmEndoForm& form) {
  int rank = form.empty() ? 2 : form.front().v.rank();
  return endoform_to_polyform(FmOps{rank}, form);
}

FMElement eval_poly_form(const FmPolyForm& form, const FMElement& x) {
  return eval_poly_form(FmOps{x.rank()}, form, x);
}

FMElement retract_generator(const FMElement& e, int killed) {
  if (e.rank() != 3) throw RankMismatch("retract_generator expects rank 3");
  if (killed < 0 || killed >= 3) throw Error("killed generator index out of range");
  FMElement r(2);
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != killed) r.tvec_[k++] = e.tvec()[i];
  k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == killed) continue;
    r.fringe_[k++] = e.fringe(i).substitute_one(killed).drop_variable(killed);
  }
  return r;
}

Rank3Report rank3_counterexample() {
  const FMElement a = FMElement::generator(3, 0);
  const FMElement b = FMElement::generator(3, 1);
  const FMElement c = FMElement::generator(3, 2);
  const FMElement ab = fm_commutator(a, b);

  // f(a) = a, f(b) = b, f(c) = c[a,b]
  const FMElement offsets[3] = {FMElement::identity(3), FMElement::identity(3), ab};

  Rank3Report rep;
  rep.ia_property = true;
  for (const auto& off : offsets)
    rep.ia_property = rep.ia_property && off.is_derived();

  FMElement image = retract_generator(ab, 2);
  rep.retraction_of_ab = image.to_string();
  rep.commutator_in_ncl_c = image.is_identity();
  rep.retraction_of_c_trivial = retract_generator(c, 2).is_identity();
  return rep;
}

}  // namespace polyaut
