#pragma once

#include <cstdlib>
#include <vector>

namespace polyaut {

/// One conjugate-power factor v^-1 x^e v of a polynomial form.
template <class E>
struct PolyFactorT {
  E conjugator;
  long long exponent;
};

template <class E>
using PolyFormT = std::vector<PolyFactorT<E>>;

/// One factor [x,v]^eta of an endomorphism form x -> x * prod [x,v_i]^eta_i.
template <class E>
struct EndoFactorT {
  E v;
  long long eta;
};

template <class E>
using EndoFormT = std::vector<EndoFactorT<E>>;

template <class E>
long long exponent_sum(const PolyFormT<E>& form) {
  long long s = 0;
  for (const auto& f : form) s += f.exponent;
  return s;
}

/// Evaluates prod_i v_i^-1 x^{e_i} v_i left to right. Ops supplies Elem,
/// id(), mul(), inv(), pow(), commutator(), equal().
template <class Ops>
typename Ops::Elem eval_poly_form(const Ops& ops,
                                  const PolyFormT<typename Ops::Elem>& form,
                                  const typename Ops::Elem& x) {
  auto acc = ops.id();
  for (const auto& f : form) {
    auto piece = ops.mul(ops.mul(ops.inv(f.conjugator), ops.pow(x, f.exponent)),
                         f.conjugator);
    acc = ops.mul(acc, piece);
  }
  return acc;
}

/// Evaluates x * prod_i [x, v_i]^{eta_i} left to right.
template <class Ops>
typename Ops::Elem endoform_apply(const Ops& ops,
                                  const EndoFormT<typename Ops::Elem>& form,
                                  const typename Ops::Elem& x) {
  auto acc = x;
  for (const auto& f : form)
    acc = ops.mul(acc, ops.pow(ops.commutator(x, f.v), f.eta));
  return acc;
}

/// Expands x * prod [x,v_i]^{eta_i} into conjugate-power factors via
/// [x,v] = x^-1 (v^-1 x v) and [x,v]^-1 = (v^-1 x^-1 v) x, merging adjacent
/// factors with equal conjugators. The result always has exponent sum 1.
template <class Ops>
PolyFormT<typename Ops::Elem> endoform_to_polyform(
    const Ops& ops, const EndoFormT<typename Ops::Elem>& form) {
  PolyFormT<typename Ops::Elem> out;
  auto push = [&](const typename Ops::Elem& conj, long long exp) {
    if (!out.empty() && ops.equal(out.back().conjugator, conj)) {
      out.back().exponent += exp;
      if (out.back().exponent == 0) out.pop_back();
      return;
    }
    out.push_back({conj, exp});
  };
  push(ops.id(), 1);
  for (const auto& f : form) {
    if (f.eta >= 0) {
      for (long long k = 0; k < f.eta; ++k) {
        push(ops.id(), -1);
        push(f.v, 1);
      }
    } else {
      for (long long k = 0; k < -f.eta; ++k) {
        push(f.v, -1);
        push(ops.id(), 1);
      }
    }
  }
  return out;
}

}  // namespace polyaut
