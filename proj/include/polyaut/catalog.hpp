#pragma once

#include <string>
#include <vector>

#include "polyaut/group.hpp"

namespace polyaut {

/// Names of the built-in groups, in canonical order.
const std::vector<std::string>& catalog_names();

bool catalog_has(const std::string& name);

/// Builds a catalog group by name (a few aliases are accepted, e.g.
/// "Frobenius20" for "F20"). Throws UnknownGroup.
FiniteGroup catalog_group(const std::string& name);

/// On-disk group description: header (name, order) plus either a full
/// multiplication table or a list of permutation generators in cycle
/// notation. Canonical serialization round-trips byte-for-byte.
struct GroupFile {
  enum class Kind { Table, Perms };

  std::string name;
  int order = 0;
  Kind kind = Kind::Table;
  std::vector<std::vector<Elem>> table;                 // Kind::Table
  std::vector<std::vector<std::vector<int>>> perms;     // Kind::Perms; cycles, 1-based

  bool operator==(const GroupFile&) const = default;
};

GroupFile parse_group_file(const std::string& text);
std::string serialize_group_file(const GroupFile& gf);

GroupFile load_group_file(const std::string& path);
void save_group_file(const GroupFile& gf, const std::string& path);

/// Validates the description and materializes the group; checks that the
/// declared order matches.
FiniteGroup group_from_file(const GroupFile& gf, int order_cap = kDefaultOrderCap);

/// Canonical file form of a built-in catalog group.
GroupFile catalog_group_file(const std::string& name);

/// Loads `spec` as a catalog name if known, otherwise as a path to a group
/// file.
FiniteGroup resolve_group(const std::string& spec, int order_cap = kDefaultOrderCap);

}  // namespace polyaut
