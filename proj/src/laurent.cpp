#include "polyaut/laurent.hpp"

#include <sstream>

namespace polyaut {

namespace {

void check_rank(int rank) {
  if (rank != 2 && rank != 3) throw Error("LaurentPoly rank must be 2 or 3");
}

const char* var_name(int i) {
  static const char* names[3] = {"x", "y", "z"};
  return names[i];
}

}  // namespace

LaurentPoly::LaurentPoly(int rank) : rank_(rank) { check_rank(rank); }

LaurentPoly LaurentPoly::constant(int rank, Coeff c) {
  LaurentPoly p(rank);
  p.add_term({0, 0, 0}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const Exps& e, Coeff c) {
  LaurentPoly p(rank);
  for (int i = rank; i < 3; ++i)
    if (e[i] != 0) throw Error("monomial exponent beyond rank");
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int index) {
  if (index < 0 || index >= rank) throw Error("variable index out of range");
  Exps e{0, 0, 0};
  e[index] = 1;
  return monomial(rank, e);
}

LaurentPoly LaurentPoly::geometric_sum(int rank, int var, long long alpha) {
  if (var < 0 || var >= rank) throw Error("variable index out of range");
  LaurentPoly s(rank);
  Exps e{0, 0, 0};
  if (alpha > 0) {
    for (long long k = 0; k < alpha; ++k) {
      e[var] = static_cast<int>(k);
      s.add_term(e, 1);
    }
  } else if (alpha < 0) {
    for (long long k = alpha; k <= -1; ++k) {
      e[var] = static_cast<int>(k);
      s.add_term(e, -1);
    }
  }
  return s;
}

void LaurentPoly::add_term(const Exps& e, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff LaurentPoly::eval_at_ones() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Coeff LaurentPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw RankMismatch("adding polynomials of different rank");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw RankMismatch("subtracting polynomials of different rank");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw RankMismatch("multiplying polynomials of different rank");
  LaurentPoly r(rank_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
      r.add_term(e, c1 * c2);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const Coeff& c) const {
  LaurentPoly r(rank_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exps& e) const {
  LaurentPoly r(rank_);
  for (const auto& [e1, c] : terms_)
    r.terms_.emplace(Exps{e1[0] + e[0], e1[1] + e[1], e1[2] + e[2]}, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_one(int var) const {
  if (var < 0 || var >= rank_) throw Error("variable index out of range");
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) {
    Exps e2 = e;
    e2[var] = 0;
    r.add_term(e2, c);
  }
  return r;
}

LaurentPoly LaurentPoly::drop_variable(int var) const {
  if (rank_ != 3) throw RankMismatch("drop_variable expects a rank-3 polynomial");
  LaurentPoly r(2);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) throw Error("drop_variable: polynomial still uses the variable");
    Exps e2{0, 0, 0};
    int k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != var) e2[k++] = e[i];
    r.add_term(e2, c);
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::div_exact_var_minus_one(int var) const {
  if (var < 0 || var >= rank_) throw Error("variable index out of range");
  // If p = (x_var - 1) q then substituting 1 for x_var kills p; quick reject.
  if (!substitute_one(var).is_zero()) return std::nullopt;

  // Synthetic division from the highest x_var-degree down. Exactness above
  // guarantees termination at the lowest degree present.
  LaurentPoly rem = *this;
  LaurentPoly quot(rank_);
  while (!rem.is_zero()) {
    // term with maximal exponent of x_var (ties broken by map order)
    auto best = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (it->first[var] > best->first[var]) best = it;
    Exps e = best->first;
    Coeff c = best->second;
    e[var] -= 1;
    quot.add_term(e, c);
    // rem -= (x_var - 1) * c*x^e
    Exps ehigh = e;
    ehigh[var] += 1;
    rem.add_term(ehigh, -c);
    rem.add_term(e, c);
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = e[0] != 0 || e[1] != 0 || e[2] != 0;
    if (a != 1 || !has_vars) os << a;
    bool printed = a != 1 || !has_vars;
    for (int i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << '*';
      os << var_name(i);
      if (e[i] != 1) os << '^' << e[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace polyaut
