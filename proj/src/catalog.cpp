#include "polyaut/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace polyaut {

namespace {

FiniteGroup cyclic(int n, const std::string& name) {
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::from_table(name, std::move(table), {n > 1 ? 1 : 0});
}

FiniteGroup dihedral(int order, const std::string& name) {
  const int k = order / 2;  // rotation count
  auto idx = [k](int rot, int flip) { return flip * k + rot; };
  std::vector<std::vector<Elem>> table(order, std::vector<Elem>(order));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < k; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < k; ++r2) {
          int rot = f1 ? (r1 - r2 + k) % k : (r1 + r2) % k;
          table[idx(r1, f1)][idx(r2, f2)] = idx(rot, f1 ^ f2);
        }
  return FiniteGroup::from_table(name, std::move(table), {idx(1, 0), idx(0, 1)});
}

FiniteGroup quaternion8() {
  // index = 2*unit + sign with units 1,i,j,k and sign 0:+ 1:-
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_prod[a][b]: sign of e_a * e_b, e.g. i*j=+k, j*i=-k, i*i=-1
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int u = unit_prod[a][b];
          int s = sa ^ sb ^ sign_prod[a][b];
          table[2 * a + sa][2 * b + sb] = 2 * u + s;
        }
  return FiniteGroup::from_table("Q8", std::move(table), {2, 4});  // i, j
}

FiniteGroup heisenberg27() {
  auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
  std::vector<std::vector<Elem>> table(27, std::vector<Elem>(27));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              table[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
  return FiniteGroup::from_table("Heis27", std::move(table), {idx(1, 0, 0), idx(0, 1, 0)});
}

FiniteGroup frobenius20() {
  // C5 : C4 with the generator of C4 acting as x -> x^2
  const int pw[4] = {1, 2, 4, 3};  // 2^j mod 5
  auto idx = [](int i, int j) { return i * 4 + j; };
  std::vector<std::vector<Elem>> table(20, std::vector<Elem>(20));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j)
      for (int i2 = 0; i2 < 5; ++i2)
        for (int j2 = 0; j2 < 4; ++j2)
          table[idx(i, j)][idx(i2, j2)] = idx((i + pw[j] * i2) % 5, (j + j2) % 4);
  return FiniteGroup::from_table("F20", std::move(table), {idx(1, 0), idx(0, 1)});
}

std::vector<int> cycles_to_images(const std::vector<std::vector<int>>& cycles, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      img[from] = to;
    }
  }
  return img;
}

std::vector<std::vector<int>> images_to_cycles(const std::vector<int>& img) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(img.size(), 0);
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start] || img[start] == static_cast<int>(start)) continue;
    std::vector<int> cyc;
    std::size_t p = start;
    while (!seen[p]) {
      seen[p] = 1;
      cyc.push_back(static_cast<int>(p) + 1);
      p = img[p];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// smallest point first in each cycle, cycles ordered by first point
std::vector<std::vector<int>> canonical_cycles(std::vector<std::vector<int>> cycles) {
  int degree = 0;
  for (const auto& c : cycles)
    for (int p : c) degree = std::max(degree, p);
  return images_to_cycles(cycles_to_images(cycles, degree));
}

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

std::vector<std::vector<int>> parse_cycles(const std::string& line) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool in_cycle = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (in_cycle) throw ParseError("nested '(' in cycle notation: " + line);
      in_cycle = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!in_cycle) throw ParseError("unmatched ')' in cycle notation: " + line);
      in_cycle = false;
      if (current.size() > 1) cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle) throw ParseError("point outside cycle: " + line);
      int v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
        v = v * 10 + (line[i++] - '0');
      if (v < 1) throw ParseError("points are 1-based: " + line);
      current.push_back(v);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (in_cycle) throw ParseError("unterminated cycle: " + line);
  for (const auto& cyc : cycles) {
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated point within a cycle: " + line);
  }
  return canonical_cycles(cycles);
}

struct CatalogEntry {
  GroupFile::Kind kind;
  FiniteGroup (*build)();
  std::vector<std::vector<std::vector<int>>> perm_cycles;  // Kind::Perms only
};

const std::map<std::string, CatalogEntry>& catalog_entries() {
  static const std::map<std::string, CatalogEntry> entries = [] {
    std::map<std::string, CatalogEntry> m;
    auto tab = [](FiniteGroup (*fn)()) {
      return CatalogEntry{GroupFile::Kind::Table, fn, {}};
    };
    m["C1"] = tab(+[] { return cyclic(1, "C1"); });
    m["C2"] = tab(+[] { return cyclic(2, "C2"); });
    m["C3"] = tab(+[] { return cyclic(3, "C3"); });
    m["C4"] = tab(+[] { return cyclic(4, "C4"); });
    m["C5"] = tab(+[] { return cyclic(5, "C5"); });
    m["C6"] = tab(+[] { return cyclic(6, "C6"); });
    m["C7"] = tab(+[] { return cyclic(7, "C7"); });
    m["C8"] = tab(+[] { return cyclic(8, "C8"); });
    m["C9"] = tab(+[] { return cyclic(9, "C9"); });
    m["C10"] = tab(+[] { return cyclic(10, "C10"); });
    m["C11"] = tab(+[] { return cyclic(11, "C11"); });
    m["C12"] = tab(+[] { return cyclic(12, "C12"); });
    m["C2xC2"] = tab(+[] {
      return direct_product("C2xC2", cyclic(2, "C2"), cyclic(2, "C2"));
    });
    m["C2xC4"] = tab(+[] {
      return direct_product("C2xC4", cyclic(2, "C2"), cyclic(4, "C4"));
    });
    m["S3"] = CatalogEntry{GroupFile::Kind::Perms, nullptr, {{{1, 2}}, {{1, 2, 3}}}};
    m["S4"] = CatalogEntry{GroupFile::Kind::Perms, nullptr, {{{1, 2}}, {{1, 2, 3, 4}}}};
    m["A4"] = CatalogEntry{GroupFile::Kind::Perms, nullptr, {{{1, 2, 3}}, {{1, 2}, {3, 4}}}};
    m["D8"] = tab(+[] { return dihedral(8, "D8"); });
    m["D10"] = tab(+[] { return dihedral(10, "D10"); });
    m["D12"] = tab(+[] { return dihedral(12, "D12"); });
    m["D16"] = tab(+[] { return dihedral(16, "D16"); });
    m["Q8"] = tab(+[] { return quaternion8(); });
    m["Heis27"] = tab(+[] { return heisenberg27(); });
    m["F20"] = tab(+[] { return frobenius20(); });
    return m;
  }();
  return entries;
}

std::string resolve_alias(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"Frobenius20", "F20"}, {"Frobenius-20", "F20"}, {"Heisenberg27", "Heis27"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "C1", "C2", "C3",  "C4",  "C5",  "C6",    "C7",  "C8",
      "C9", "C10", "C11", "C12", "C2xC2", "C2xC4", "S3", "S4",
      "A4", "D8",  "D10", "D12", "D16",   "Q8",    "Heis27", "F20"};
  return names;
}

bool catalog_has(const std::string& name) {
  return catalog_entries().count(resolve_alias(name)) > 0;
}

FiniteGroup catalog_group(const std::string& name) {
  const std::string key = resolve_alias(name);
  auto it = catalog_entries().find(key);
  if (it == catalog_entries().end()) throw UnknownGroup("unknown catalog group: " + name);
  if (it->second.kind == GroupFile::Kind::Perms) {
    std::vector<std::vector<int>> images;
    int degree = 0;
    for (const auto& cycles : it->second.perm_cycles)
      for (const auto& c : cycles)
        for (int p : c) degree = std::max(degree, p);
    for (const auto& cycles : it->second.perm_cycles)
      images.push_back(cycles_to_images(cycles, degree));
    return FiniteGroup::from_permutations(key, images);
  }
  return it->second.build();
}

GroupFile parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GroupFile gf;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      // strip trailing CR, skip blanks and comments
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t"));
      if (trimmed.empty() || trimmed[0] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string l;
  if (!next_line(l)) throw ParseError("empty group file");
  {
    std::istringstream ls(l);
    std::string key;
    ls >> key;
    if (key != "name") throw ParseError("expected 'name <label>': " + l);
    ls >> std::ws;
    std::getline(ls, gf.name);
    if (gf.name.empty()) throw ParseError("missing group name");
  }
  if (!next_line(l)) throw ParseError("missing 'order' line");
  {
    std::istringstream ls(l);
    std::string key;
    ls >> key >> gf.order;
    if (key != "order" || ls.fail() || gf.order <= 0)
      throw ParseError("expected 'order <n>': " + l);
  }
  if (!next_line(l)) throw ParseError("missing 'table:' or 'perms:' line");
  std::string body = l;
  body.erase(0, body.find_first_not_of(" \t"));
  if (body == "table:") {
    gf.kind = GroupFile::Kind::Table;
    while (next_line(l)) {
      std::istringstream ls(l);
      std::vector<Elem> row;
      Elem v;
      while (ls >> v) row.push_back(v);
      if (!row.empty()) gf.table.push_back(std::move(row));
    }
    if (static_cast<int>(gf.table.size()) != gf.order)
      throw ParseError("table row count does not match declared order");
  } else if (body == "perms:") {
    gf.kind = GroupFile::Kind::Perms;
    while (next_line(l)) gf.perms.push_back(parse_cycles(l));
    if (gf.perms.empty()) throw ParseError("perms file lists no generators");
  } else {
    throw ParseError("expected 'table:' or 'perms:', got: " + l);
  }
  return gf;
}

std::string serialize_group_file(const GroupFile& gf) {
  std::ostringstream os;
  os << "name " << gf.name << '\n';
  os << "order " << gf.order << '\n';
  if (gf.kind == GroupFile::Kind::Table) {
    os << "table:\n";
    for (const auto& row : gf.table) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ' ';
        os << row[i];
      }
      os << '\n';
    }
  } else {
    os << "perms:\n";
    for (const auto& cycles : gf.perms) os << cycles_to_string(cycles) << '\n';
  }
  return os.str();
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownGroup("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

void save_group_file(const GroupFile& gf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write group file: " + path);
  out << serialize_group_file(gf);
}

FiniteGroup group_from_file(const GroupFile& gf, int order_cap) {
  if (gf.order > order_cap) {
    std::ostringstream os;
    os << "group " << gf.name << " of order " << gf.order << " exceeds cap " << order_cap;
    throw ClosureOverflow(os.str());
  }
  if (gf.kind == GroupFile::Kind::Table) {
    FiniteGroup G = FiniteGroup::from_table(gf.name, gf.table);
    if (G.order() != gf.order)
      throw ParseError("declared order does not match table size for " + gf.name);
    return G;
  }
  std::vector<std::vector<int>> images;
  int degree = 0;
  for (const auto& cycles : gf.perms)
    for (const auto& c : cycles)
      for (int p : c) degree = std::max(degree, p);
  for (const auto& cycles : gf.perms) images.push_back(cycles_to_images(cycles, degree));
  FiniteGroup G = FiniteGroup::from_permutations(gf.name, images, order_cap);
  if (G.order() != gf.order) {
    std::ostringstream os;
    os << "declared order " << gf.order << " but generators close to order " << G.order();
    throw ParseError(os.str());
  }
  return G;
}

GroupFile catalog_group_file(const std::string& name) {
  const std::string key = resolve_alias(name);
  auto it = catalog_entries().find(key);
  if (it == catalog_entries().end()) throw UnknownGroup("unknown catalog group: " + name);
  GroupFile gf;
  gf.name = key;
  gf.kind = it->second.kind;
  if (gf.kind == GroupFile::Kind::Perms) {
    FiniteGroup G = catalog_group(key);
    gf.order = G.order();
    for (const auto& cycles : it->second.perm_cycles)
      gf.perms.push_back(canonical_cycles(cycles));
  } else {
    FiniteGroup G = it->second.build();
    gf.order = G.order();
    gf.table = G.table();
  }
  return gf;
}

FiniteGroup resolve_group(const std::string& spec, int order_cap) {
  if (catalog_has(spec)) return catalog_group(spec);
  std::ifstream probe(spec);
  if (!probe)
    throw UnknownGroup("'" + spec + "' is neither a catalog name nor a readable file");
  probe.close();
  return group_from_file(load_group_file(spec), order_cap);
}

}  // namespace polyaut
