#include "polyaut/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace polyaut {

namespace {

std::vector<Elem> greedy_generating_set(const std::vector<std::vector<Elem>>& table,
                                        Elem id) {
  const int n = static_cast<int>(table.size());
  std::vector<Elem> gens;
  std::vector<char> reached(n, 0);
  reached[id] = 1;
  int count = 1;
  while (count < n) {
    Elem next = -1;
    for (Elem x = 0; x < n; ++x) {
      if (!reached[x]) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    // close the reached set under multiplication with the new generator
    std::deque<Elem> work;
    for (Elem x = 0; x < n; ++x)
      if (reached[x]) work.push_back(x);
    while (!work.empty()) {
      Elem x = work.front();
      work.pop_front();
      for (Elem g : gens) {
        Elem y = table[x][g];
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          work.push_back(y);
        }
        y = table[g][x];
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          work.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

void FiniteGroup::finish_setup(std::string name, std::vector<std::vector<Elem>> table,
                               std::vector<Elem> gens, bool check_associativity) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NoIdentity("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw NonAssociativeTable("table is not square");
    for (Elem x : row)
      if (x < 0 || x >= n) throw NonAssociativeTable("table entry out of range");
  }

  // identity
  Elem id = -1;
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw NoIdentity("no two-sided identity in table");

  // inverses
  std::vector<Elem> inv(n, -1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (table[x][y] == id && table[y][x] == id) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) {
      std::ostringstream os;
      os << "element " << x << " has no two-sided inverse";
      throw MissingInverse(os.str());
    }
  }

  if (check_associativity) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (table[table[x][y]][z] != table[x][table[y][z]]) {
            std::ostringstream os;
            os << "associativity fails at (" << x << "," << y << "," << z << ")";
            throw NonAssociativeTable(os.str());
          }
  }

  if (gens.empty() && n > 1) gens = greedy_generating_set(table, id);
  if (gens.empty()) gens = {id};
  for (Elem g : gens)
    if (g < 0 || g >= n) throw Error("generator index out of range");

  name_ = std::move(name);
  order_ = n;
  id_ = id;
  table_ = std::move(table);
  inv_ = std::move(inv);
  gens_ = std::move(gens);

  // gens must actually generate
  Subgroup gen_closure = subgroup_closure(*this, gens_);
  if (gen_closure.order() != order_)
    throw Error("declared generators do not generate the group: " + name_);
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<Elem>> table,
                                    std::vector<Elem> gens) {
  FiniteGroup G;
  G.finish_setup(std::move(name), std::move(table), std::move(gens), true);
  return G;
}

FiniteGroup FiniteGroup::trusted(std::string name, std::vector<std::vector<Elem>> table,
                                 std::vector<Elem> gens) {
  FiniteGroup G;
  G.finish_setup(std::move(name), std::move(table), std::move(gens), false);
  return G;
}

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<int>>& perms,
                                           int order_cap) {
  std::size_t degree = 0;
  for (const auto& p : perms) degree = std::max(degree, p.size());
  if (degree == 0) degree = 1;

  auto padded = [&](const std::vector<int>& p) {
    std::vector<int> q(degree);
    for (std::size_t i = 0; i < degree; ++i)
      q[i] = i < p.size() ? p[i] : static_cast<int>(i);
    return q;
  };

  std::vector<int> identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<int>(i);

  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(i) = a(b(i)); matches the left-to-right table convention below
    std::vector<int> c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };

  // BFS closure of the generators under composition
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  std::deque<int> work;
  auto add = [&](const std::vector<int>& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    if (static_cast<int>(elems.size()) >= order_cap) {
      std::ostringstream os;
      os << "permutation closure exceeds order cap " << order_cap;
      throw ClosureOverflow(os.str());
    }
    int idx = static_cast<int>(elems.size());
    index.emplace(p, idx);
    elems.push_back(p);
    work.push_back(idx);
    return idx;
  };

  add(identity);
  std::vector<int> gen_idx;
  for (const auto& p : perms) {
    std::vector<int> q = padded(p);
    std::vector<char> seen(degree, 0);
    for (int v : q) {
      if (v < 0 || v >= static_cast<int>(degree) || seen[v])
        throw Error("invalid permutation in generator list");
      seen[v] = 1;
    }
    gen_idx.push_back(add(q));
  }

  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    for (int g = 0; g < static_cast<int>(perms.size()); ++g) {
      add(compose(elems[i], elems[gen_idx[g]]));
      add(compose(elems[gen_idx[g]], elems[i]));
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = index.at(compose(elems[i], elems[j]));

  std::sort(gen_idx.begin(), gen_idx.end());
  gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());

  FiniteGroup G;
  // permutation composition is associative; identity/inverses still checked
  G.finish_setup(std::move(name), std::move(table), std::move(gen_idx), false);
  return G;
}

Elem FiniteGroup::power(Elem x, long long e) const {
  Elem base = x;
  if (e < 0) {
    base = inv_[x];
    e = -e;
  }
  Elem acc = id_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Elem x) const {
  int k = 1;
  Elem y = x;
  while (y != id_) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, {G.id()}};
}

Subgroup whole_group(const FiniteGroup& G) {
  std::vector<Elem> all(G.order());
  for (int i = 0; i < G.order(); ++i) all[i] = i;
  return Subgroup{&G, std::move(all)};
}

namespace {

Subgroup close_set(const FiniteGroup& G, std::vector<Elem> seed) {
  std::vector<char> in(G.order(), 0);
  std::deque<Elem> work;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  add(G.id());
  for (Elem s : seed) add(s);
  std::vector<Elem> have;
  while (!work.empty()) {
    Elem x = work.front();
    work.pop_front();
    have.push_back(x);
    add(G.inv(x));
    for (Elem y : have) {
      add(G.mul(x, y));
      add(G.mul(y, x));
    }
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < G.order(); ++x)
    if (in[x]) members.push_back(x);
  return Subgroup{&G, std::move(members)};
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<Elem>& seed) {
  return close_set(G, seed);
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<Elem>& seed) {
  std::vector<Elem> conj;
  for (Elem s : seed)
    for (Elem v = 0; v < G.order(); ++v) conj.push_back(G.conjugate(s, v));
  return close_set(G, conj);
}

Subgroup center(const FiniteGroup& G) {
  std::vector<Elem> z;
  for (Elem x = 0; x < G.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < G.order() && central; ++y)
      central = G.mul(x, y) == G.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup{&G, std::move(z)};
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Elem h : H.members)
    for (Elem v = 0; v < G.order(); ++v)
      if (!H.contains(G.conjugate(h, v))) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  std::vector<Elem> seed;
  for (Elem h : H.members)
    for (Elem k : K.members) seed.push_back(G.commutator(h, k));
  return close_set(G, seed);
}

DerivedSeriesResult derived_series(const FiniteGroup& G) {
  Series series{SeriesKind::Derived, {whole_group(G)}};
  while (true) {
    const Subgroup& last = series.terms.back();
    Subgroup next = commutator_subgroup(G, last, last);
    if (next.members == last.members) break;
    series.terms.push_back(std::move(next));
    if (series.terms.back().is_trivial()) break;
  }
  std::optional<int> length;
  if (series.terms.back().is_trivial())
    length = static_cast<int>(series.terms.size()) - 1;
  bool metabelian = length.has_value() && *length <= 2;
  return DerivedSeriesResult{std::move(series), length, metabelian};
}

LowerCentralResult lower_central_series(const FiniteGroup& G) {
  Series series{SeriesKind::LowerCentral, {whole_group(G)}};
  while (true) {
    const Subgroup& last = series.terms.back();
    // gamma_{i+1} is generated as a normal subgroup by [gamma_i, gens]
    std::vector<Elem> seed;
    for (Elem h : last.members)
      for (Elem g : G.gens()) seed.push_back(G.commutator(h, g));
    Subgroup next = normal_closure(G, seed);
    if (next.members == last.members) break;
    series.terms.push_back(std::move(next));
    if (series.terms.back().is_trivial()) break;
  }
  std::optional<int> cls;
  if (series.terms.back().is_trivial())
    cls = static_cast<int>(series.terms.size()) - 1;
  return LowerCentralResult{std::move(series), cls};
}

FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw NotNormal("subgroup is not normal in " + G.name());

  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem h : N.members) coset_of[G.mul(x, h)] = c;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> table(q, std::vector<Elem>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[G.mul(reps[i], reps[j])];

  std::vector<Elem> gens;
  for (Elem g : G.gens()) {
    Elem img = coset_of[g];
    if (std::find(gens.begin(), gens.end(), img) == gens.end()) gens.push_back(img);
  }
  if (gens.empty()) gens = {coset_of[G.id()]};

  std::ostringstream os;
  os << G.name() << "/N" << N.order();
  return FiniteGroup::trusted(os.str(), std::move(table), std::move(gens));
}

FiniteGroup direct_product(const std::string& name, const FiniteGroup& A,
                           const FiniteGroup& B) {
  const int na = A.order(), nb = B.order();
  const int n = na * nb;
  auto idx = [nb](Elem a, Elem b) { return a * nb + b; };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2)
          table[idx(a1, b1)][idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
  std::vector<Elem> gens;
  for (Elem g : A.gens()) gens.push_back(idx(g, B.id()));
  for (Elem g : B.gens()) gens.push_back(idx(A.id(), g));
  return FiniteGroup::trusted(name, std::move(table), std::move(gens));
}

}  // namespace polyaut
