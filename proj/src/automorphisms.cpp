#include "polyaut/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace polyaut {

bool GroupFunction::is_bijective() const {
  std::vector<char> hit(parent->order(), 0);
  for (Elem y : image) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool GroupFunction::is_homomorphism() const {
  const FiniteGroup& G = *parent;
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem y = 0; y < G.order(); ++y)
      if (image[G.mul(x, y)] != G.mul(image[x], image[y])) return false;
  return true;
}

GroupFunction GroupFunction::compose(const GroupFunction& g) const {
  GroupFunction r{parent, std::vector<Elem>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) r.image[x] = image[g.image[x]];
  return r;
}

GroupFunction GroupFunction::inverse_function() const {
  GroupFunction r{parent, std::vector<Elem>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) r.image[image[x]] = static_cast<Elem>(x);
  return r;
}

GroupFunction identity_function(const FiniteGroup& G) {
  GroupFunction f{&G, std::vector<Elem>(G.order())};
  for (Elem x = 0; x < G.order(); ++x) f.image[x] = x;
  return f;
}

GroupFunction conjugation_function(const FiniteGroup& G, Elem v) {
  GroupFunction f{&G, std::vector<Elem>(G.order())};
  for (Elem x = 0; x < G.order(); ++x) f.image[x] = G.conjugate(x, v);
  return f;
}

GroupFunction inversion_function(const FiniteGroup& G) {
  GroupFunction f{&G, std::vector<Elem>(G.order())};
  for (Elem x = 0; x < G.order(); ++x) f.image[x] = G.inv(x);
  return f;
}

int AutomorphismSet::index_of(const std::vector<Elem>& image) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), image,
                             [](const GroupFunction& f, const std::vector<Elem>& img) {
                               return f.image < img;
                             });
  if (it == maps.end() || it->image != image) return -1;
  return static_cast<int>(it - maps.begin());
}

bool AutomorphismSet::closed_under_composition() const {
  for (const auto& f : maps)
    for (const auto& g : maps)
      if (index_of(f.compose(g).image) < 0) return false;
  return true;
}

AutomorphismSet make_automorphism_set(const FiniteGroup& G,
                                      std::vector<GroupFunction> maps) {
  std::sort(maps.begin(), maps.end(),
            [](const GroupFunction& a, const GroupFunction& b) { return a.image < b.image; });
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  return AutomorphismSet{&G, std::move(maps)};
}

AutomorphismSet inner_automorphisms(const FiniteGroup& G) {
  std::vector<GroupFunction> maps;
  for (Elem v = 0; v < G.order(); ++v) maps.push_back(conjugation_function(G, v));
  return make_automorphism_set(G, std::move(maps));
}

namespace {

// BFS factorization: every element as (previous element) * (generator)
struct WordTree {
  std::vector<int> prev;      // element index, -1 at the identity
  std::vector<int> via_gen;   // index into gens
  std::vector<Elem> order;    // BFS ordering, identity first
};

WordTree factorize(const FiniteGroup& G) {
  WordTree t;
  t.prev.assign(G.order(), -2);
  t.via_gen.assign(G.order(), -1);
  t.prev[G.id()] = -1;
  t.order.push_back(G.id());
  std::deque<Elem> work{G.id()};
  while (!work.empty()) {
    Elem x = work.front();
    work.pop_front();
    for (std::size_t gi = 0; gi < G.gens().size(); ++gi) {
      Elem y = G.mul(x, G.gens()[gi]);
      if (t.prev[y] == -2) {
        t.prev[y] = x;
        t.via_gen[y] = static_cast<int>(gi);
        t.order.push_back(y);
        work.push_back(y);
      }
    }
  }
  return t;
}

}  // namespace

AutomorphismSet automorphism_group(const FiniteGroup& G, std::uint64_t budget) {
  const auto& gens = G.gens();
  WordTree tree = factorize(G);

  std::vector<std::vector<Elem>> candidates;
  std::uint64_t total = 1;
  for (Elem g : gens) {
    const int ord = G.element_order(g);
    std::vector<Elem> c;
    for (Elem y = 0; y < G.order(); ++y)
      if (G.element_order(y) == ord) c.push_back(y);
    total *= static_cast<std::uint64_t>(c.size());
    if (total > budget) {
      std::ostringstream os;
      os << "automorphism search space for " << G.name() << " exceeds budget " << budget;
      throw SearchBudgetExceeded(os.str());
    }
    candidates.push_back(std::move(c));
  }

  std::vector<GroupFunction> found;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Elem> image(G.order());
  while (true) {
    // extend generator images along the BFS tree
    image[G.id()] = G.id();
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
      Elem x = tree.order[k];
      image[x] = G.mul(image[tree.prev[x]], candidates[tree.via_gen[x]][pick[tree.via_gen[x]]]);
    }
    GroupFunction f{&G, image};
    if (f.is_bijective() && f.is_homomorphism()) found.push_back(f);

    // next candidate tuple
    std::size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }

  AutomorphismSet result = make_automorphism_set(G, std::move(found));
  if (!result.closed_under_composition())
    throw Error("automorphism set not closed under composition (search bug)");
  return result;
}

bool FunctionSet::contains(const std::vector<Elem>& image) const {
  return std::binary_search(images.begin(), images.end(), image);
}

namespace {

struct ImageHash {
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (Elem x : v) h = mix(h ^ static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

FunctionSet polynomial_function_closure(const FiniteGroup& G, std::size_t budget) {
  const int n = G.order();

  std::vector<std::vector<Elem>> seeds;
  {
    std::unordered_set<std::vector<Elem>, ImageHash> seen;
    for (Elem v = 0; v < n; ++v) {
      auto img = conjugation_function(G, v).image;
      if (seen.insert(img).second) seeds.push_back(std::move(img));
    }
    auto invimg = inversion_function(G).image;
    if (seen.insert(invimg).second) seeds.push_back(std::move(invimg));
  }

  std::unordered_set<std::vector<Elem>, ImageHash> set(seeds.begin(), seeds.end());
  std::deque<const std::vector<Elem>*> work;
  for (const auto& s : set) work.push_back(&s);

  std::vector<Elem> prod(n);
  while (!work.empty()) {
    const std::vector<Elem>& f = *work.front();
    work.pop_front();
    for (const auto& s : seeds) {
      for (int x = 0; x < n; ++x) prod[x] = G.mul(f[x], s[x]);
      auto [it, inserted] = set.insert(prod);
      if (inserted) {
        if (set.size() > budget) {
          std::ostringstream os;
          os << "polynomial function closure for " << G.name() << " exceeds budget "
             << budget;
          throw ClosureBudgetExceeded(set.size(), os.str());
        }
        work.push_back(&*it);
      }
    }
  }

  FunctionSet result{&G, {}};
  result.images.assign(set.begin(), set.end());
  std::sort(result.images.begin(), result.images.end());
  return result;
}

AutomorphismSet polynomial_automorphisms(const FiniteGroup& G, const FunctionSet& closure) {
  std::vector<GroupFunction> maps;
  for (const auto& img : closure.images) {
    GroupFunction f{&G, img};
    if (f.is_bijective() && f.is_homomorphism()) maps.push_back(std::move(f));
  }
  AutomorphismSet p0 = make_automorphism_set(G, std::move(maps));
  if (!p0.closed_under_composition())
    throw Error("P0(" + G.name() + ") is not closed under composition");
  return p0;
}

std::optional<AutomorphismSet> polynomial_automorphisms_by_squeeze(
    const FiniteGroup& G, const AutomorphismSet& inner, const AutomorphismSet& aut) {
  if (inner.maps.size() != aut.maps.size()) return std::nullopt;
  for (std::size_t i = 0; i < inner.maps.size(); ++i)
    if (!(inner.maps[i] == aut.maps[i])) return std::nullopt;
  return AutomorphismSet{&G, aut.maps};
}

AutomorphismSet generate_P(const FiniteGroup& G, const AutomorphismSet& p0) {
  std::unordered_set<std::vector<Elem>, ImageHash> set;
  std::deque<GroupFunction> work;
  auto add = [&](const GroupFunction& f) {
    if (set.insert(f.image).second) work.push_back(f);
  };
  add(identity_function(G));
  for (const auto& f : p0.maps) add(f);
  while (!work.empty()) {
    GroupFunction f = work.front();
    work.pop_front();
    add(f.inverse_function());
    for (const auto& g : p0.maps) {
      add(f.compose(g));
      add(g.compose(f));
    }
  }
  std::vector<GroupFunction> maps;
  for (const auto& img : set) maps.push_back(GroupFunction{&G, img});
  return make_automorphism_set(G, std::move(maps));
}

FiniteGroup composition_group(const AutomorphismSet& S, const std::string& name,
                              std::vector<Elem> gen_indices) {
  const int n = static_cast<int>(S.maps.size());
  if (n == 0) throw Error("cannot materialize an empty automorphism set");
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = S.index_of(S.maps[i].compose(S.maps[j]).image);
      if (k < 0)
        throw Error("automorphism set is not closed under composition: " + name);
      table[i][j] = k;
    }
  if (gen_indices.empty()) {
    for (int i = 0; i < n; ++i) gen_indices.push_back(i);
  }
  return FiniteGroup::trusted(name, std::move(table), std::move(gen_indices));
}

ChainReport check_inclusion_chain(const FiniteGroup& G, const AutomorphismSet& inner,
                                  const AutomorphismSet& aut, const AutomorphismSet& p0,
                                  const AutomorphismSet& p) {
  for (const AutomorphismSet* s : {&inner, &aut, &p0, &p})
    if (s->parent != &G)
      throw Error("inclusion chain called with sets over different groups");

  ChainReport rep;
  auto witness = [&rep](const std::string& s) { rep.witnesses.push_back(s); };

  rep.inner_subset_p = true;
  for (const auto& f : inner.maps)
    if (!p.contains(f)) {
      rep.inner_subset_p = false;
      witness("inner automorphism not in P(G)");
      break;
    }

  rep.p_subset_aut = true;
  for (const auto& f : p.maps)
    if (!aut.contains(f)) {
      rep.p_subset_aut = false;
      witness("element of P(G) is not an automorphism");
      break;
    }

  rep.p0_equals_p = p0.maps.size() == p.maps.size();
  if (rep.p0_equals_p) {
    for (std::size_t i = 0; i < p0.maps.size(); ++i)
      if (!(p0.maps[i] == p.maps[i])) {
        rep.p0_equals_p = false;
        break;
      }
  }
  if (!rep.p0_equals_p) witness("P0(G) != P(G) as sets");

  rep.inner_normal_in_p = true;
  for (const auto& h : p.maps) {
    GroupFunction hinv = h.inverse_function();
    for (const auto& f : inner.maps) {
      if (!inner.contains(h.compose(f).compose(hinv))) {
        rep.inner_normal_in_p = false;
        witness("I(G) not normal in P(G)");
        break;
      }
    }
    if (!rep.inner_normal_in_p) break;
  }

  rep.p_normal_in_aut = true;
  for (const auto& a : aut.maps) {
    GroupFunction ainv = a.inverse_function();
    for (const auto& f : p.maps) {
      if (!p.contains(a.compose(f).compose(ainv))) {
        rep.p_normal_in_aut = false;
        witness("P(G) not normal in A(G)");
        break;
      }
    }
    if (!rep.p_normal_in_aut) break;
  }

  rep.p0_normal_subset_of_aut = true;
  for (const auto& a : aut.maps) {
    GroupFunction ainv = a.inverse_function();
    for (const auto& f : p0.maps) {
      if (!p0.contains(a.compose(f).compose(ainv))) {
        rep.p0_normal_subset_of_aut = false;
        witness("P0(G) is not a normal subset of A(G)");
        break;
      }
    }
    if (!rep.p0_normal_subset_of_aut) break;
  }

  return rep;
}

bool conjugates_commute(const FiniteGroup& G, Elem t) {
  std::vector<Elem> conj;
  std::vector<char> seen(G.order(), 0);
  for (Elem v = 0; v < G.order(); ++v) {
    Elem c = G.conjugate(t, v);
    if (!seen[c]) {
      seen[c] = 1;
      conj.push_back(c);
    }
  }
  for (std::size_t i = 0; i < conj.size(); ++i)
    for (std::size_t j = i + 1; j < conj.size(); ++j)
      if (G.mul(conj[i], conj[j]) != G.mul(conj[j], conj[i])) return false;
  return true;
}

std::vector<Elem> commuting_conjugate_elements(const FiniteGroup& G) {
  std::vector<Elem> out;
  for (Elem t = 0; t < G.order(); ++t)
    if (conjugates_commute(G, t)) out.push_back(t);
  return out;
}

Elem lemma_2_1_compose(const FiniteGroup& G, const PolynomialForm& f,
                       const PolynomialForm& g, Elem t) {
  if (!conjugates_commute(G, t)) {
    std::ostringstream os;
    os << "conjugates of element " << t << " do not commute in " << G.name();
    throw ConjugatesDoNotCommute(t, os.str());
  }
  Elem acc = G.id();
  for (const auto& fi : f) {
    for (const auto& gj : g) {
      const Elem te = G.power(t, fi.exponent * gj.exponent);
      const Elem c1 = G.commutator(te, fi.conjugator);
      const Elem c2 = G.commutator(te, gj.conjugator);
      const Elem c3 = G.commutator(c2, fi.conjugator);  // left-normed [te, w_j, v_i]
      acc = G.mul(acc, G.mul(G.mul(te, c1), G.mul(c2, c3)));
    }
  }
  return acc;
}

Elem endoform_eval_unchecked(const FiniteGroup& G, const FiniteEndoForm& form, Elem x) {
  return endoform_apply(FiniteGroupOps{&G}, form, x);
}

Elem endoform_apply(const FiniteGroup& G, const FiniteEndoForm& form, Elem x) {
  if (!derived_series(G).is_metabelian)
    throw NotMetabelian("endomorphism forms require a metabelian group, got " + G.name());
  return endoform_eval_unchecked(G, form, x);
}

}  // namespace polyaut
