#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

#include "polyaut/errors.hpp"

namespace polyaut {

using Coeff = boost::multiprecision::cpp_int;

/// Exponent vector; coordinates past the rank stay 0.
using Exps = std::array<int, 3>;

/// Sparse integer Laurent polynomial in 2 or 3 variables. Terms are kept in
/// lexicographic exponent order with no zero coefficients, so structural
/// equality is polynomial equality.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank);

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, Coeff c);
  static LaurentPoly monomial(int rank, const Exps& e, Coeff c = 1);
  /// The variable x_index as a polynomial.
  static LaurentPoly variable(int rank, int index);

  /// s with (x_var - 1) * s = x_var^alpha - 1.
  static LaurentPoly geometric_sum(int rank, int var, long long alpha);

  int rank() const { return rank_; }
  const std::map<Exps, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Sum of all coefficients, i.e. evaluation at (1,...,1).
  Coeff eval_at_ones() const;
  Coeff coeff(const Exps& e) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Coeff& c) const;
  bool operator==(const LaurentPoly& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  /// Multiplies by the monomial x^e (exponent shift).
  LaurentPoly shifted(const Exps& e) const;

  /// Substitutes 1 for variable `var`; the rank is unchanged.
  LaurentPoly substitute_one(int var) const;

  /// Removes variable `var` from a rank-3 polynomial that does not use it,
  /// producing the rank-2 polynomial in the remaining variables.
  LaurentPoly drop_variable(int var) const;

  /// Exact quotient p / (x_var - 1), or nullopt when the division leaves a
  /// remainder.
  std::optional<LaurentPoly> div_exact_var_minus_one(int var) const;

  std::string to_string() const;

 private:
  void add_term(const Exps& e, const Coeff& c);

  int rank_;
  std::map<Exps, Coeff> terms_;
};

inline LaurentPoly operator*(const Coeff& c, const LaurentPoly& p) { return p * c; }

}  // namespace polyaut
