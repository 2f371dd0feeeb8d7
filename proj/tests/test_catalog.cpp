#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "polyaut/catalog.hpp"

using namespace polyaut;

TEST_CASE("catalog entries build and validate") {
  const std::map<std::string, int> expected_orders = {
      {"C1", 1},    {"C2", 2},   {"C3", 3},   {"C4", 4},   {"C5", 5},  {"C6", 6},
      {"C7", 7},    {"C8", 8},   {"C9", 9},   {"C10", 10}, {"C11", 11},{"C12", 12},
      {"C2xC2", 4}, {"C2xC4", 8},{"S3", 6},   {"S4", 24},  {"A4", 12}, {"D8", 8},
      {"D10", 10},  {"D12", 12}, {"D16", 16}, {"Q8", 8},   {"Heis27", 27}, {"F20", 20}};

  CHECK(catalog_names().size() == 24);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    FiniteGroup G = catalog_group(name);
    CHECK(G.order() == expected_orders.at(name));
    // revalidate the table from scratch (associativity, identity, inverses)
    CHECK_NOTHROW(FiniteGroup::from_table(G.name(), G.table(), G.gens()));
    CHECK(subgroup_closure(G, G.gens()).order() == G.order());
  }
}

TEST_CASE("aliases and unknown names") {
  CHECK(catalog_group("Frobenius20").order() == 20);
  CHECK(catalog_group("Heisenberg27").order() == 27);
  CHECK_THROWS_AS(catalog_group("M11"), UnknownGroup);
}

TEST_CASE("group files round-trip byte-for-byte") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    GroupFile gf = catalog_group_file(name);
    std::string text = serialize_group_file(gf);
    GroupFile back = parse_group_file(text);
    CHECK(back == gf);
    CHECK(serialize_group_file(back) == text);
    FiniteGroup G = group_from_file(back);
    CHECK(G.order() == gf.order);
  }
}

TEST_CASE("perm file parses cycle notation") {
  const std::string text =
      "name S3\n"
      "order 6\n"
      "perms:\n"
      "(1 2)\n"
      "(1 2 3)\n";
  GroupFile gf = parse_group_file(text);
  CHECK(gf.kind == GroupFile::Kind::Perms);
  CHECK(group_from_file(gf).order() == 6);
  CHECK(serialize_group_file(gf) == text);

  // non-canonical cycle input normalizes on the first save
  GroupFile shifted = parse_group_file(
      "name S3\norder 6\nperms:\n(2 1)\n(2 3 1)\n");
  CHECK(serialize_group_file(shifted) == text);
}

TEST_CASE("file format errors") {
  CHECK_THROWS_AS(parse_group_file(""), ParseError);
  CHECK_THROWS_AS(parse_group_file("name X\norder 0\ntable:\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name X\norder 2\nbody:\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name X\norder 2\ntable:\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name X\norder 6\nperms:\n(1 1 2)\n"), ParseError);
  // declared order disagrees with the generated group
  GroupFile gf = parse_group_file("name X\norder 5\nperms:\n(1 2)\n");
  CHECK_THROWS_AS(group_from_file(gf), ParseError);
}

TEST_CASE("resolve_group falls back to files") {
  CHECK(resolve_group("D16").order() == 16);
  CHECK_THROWS_AS(resolve_group("no-such-group-or-file"), UnknownGroup);
}

TEST_CASE("order cap applies to group files") {
  GroupFile gf = catalog_group_file("S4");
  CHECK_THROWS_AS(group_from_file(gf, 20), ClosureOverflow);
  CHECK(group_from_file(gf, 24).order() == 24);
}
