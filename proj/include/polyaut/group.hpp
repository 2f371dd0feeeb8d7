#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyaut/errors.hpp"

namespace polyaut {

using Elem = int;

constexpr int kDefaultOrderCap = 64;

/// Finite group on elements 0..order-1 backed by a full multiplication table.
/// Immutable after construction; all queries are table lookups.
class FiniteGroup {
 public:
  /// Validates the table: exhaustive associativity check (orders up to
  /// kDefaultOrderCap stay cheap), two-sided identity, two-sided inverses.
  /// `gens` may be empty, in which case a generating set is derived greedily.
  static FiniteGroup from_table(std::string name, std::vector<std::vector<Elem>> table,
                                std::vector<Elem> gens = {});

  /// Closes the given permutations of {1..n} (images listed 0-based) under
  /// composition and converts the result to a table group.
  static FiniteGroup from_permutations(std::string name,
                                       const std::vector<std::vector<int>>& perms,
                                       int order_cap = kDefaultOrderCap);

  /// For tables that are associative by construction (composition groups,
  /// quotients, direct products). Identity/inverse structure is still checked.
  static FiniteGroup trusted(std::string name, std::vector<std::vector<Elem>> table,
                             std::vector<Elem> gens);

  int order() const { return order_; }
  Elem id() const { return id_; }
  Elem mul(Elem x, Elem y) const { return table_[x][y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  const std::vector<Elem>& gens() const { return gens_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  /// x^v = v^-1 x v
  Elem conjugate(Elem x, Elem v) const { return mul(mul(inv_[v], x), v); }
  /// [x,y] = x^-1 y^-1 x y; the left-normed convention [x,y,z] = [[x,y],z]
  /// is used throughout.
  Elem commutator(Elem x, Elem y) const {
    return mul(mul(mul(inv_[x], inv_[y]), x), y);
  }
  Elem power(Elem x, long long e) const;
  int element_order(Elem x) const;
  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  void finish_setup(std::string name, std::vector<std::vector<Elem>> table,
                    std::vector<Elem> gens, bool check_associativity);

  std::string name_;
  int order_ = 0;
  Elem id_ = 0;
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
};

/// Subgroup of `parent` as a sorted member list.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members;  // sorted ascending

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elem x) const;
  bool is_trivial() const { return members.size() == 1; }
  bool is_whole_group() const {
    return parent && order() == parent->order();
  }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

enum class SeriesKind { Derived, LowerCentral };

/// Descending normal series; terms[0] is the whole group and terms stop at
/// the first stable subgroup.
struct Series {
  SeriesKind kind;
  std::vector<Subgroup> terms;
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);

/// Smallest subgroup containing `seed` (worklist closure under mul and inv).
Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<Elem>& seed);

/// Smallest normal subgroup containing `seed`.
Subgroup normal_closure(const FiniteGroup& G, const std::vector<Elem>& seed);

Subgroup center(const FiniteGroup& G);

bool is_normal(const FiniteGroup& G, const Subgroup& H);

/// [H,K] closed to a subgroup.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

struct DerivedSeriesResult {
  Series series;
  /// Number of steps until the series hits the trivial subgroup; empty when
  /// the series stabilizes above it.
  std::optional<int> derived_length;
  bool is_metabelian;
};
DerivedSeriesResult derived_series(const FiniteGroup& G);

struct LowerCentralResult {
  Series series;
  /// Least c with gamma_{c+1} trivial; empty when G is not nilpotent.
  std::optional<int> nilpotency_class;
};
LowerCentralResult lower_central_series(const FiniteGroup& G);

/// Quotient by a normal subgroup; elements are cosets ordered by their
/// smallest representative. Throws NotNormal.
FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

FiniteGroup direct_product(const std::string& name, const FiniteGroup& A,
                           const FiniteGroup& B);

}  // namespace polyaut
