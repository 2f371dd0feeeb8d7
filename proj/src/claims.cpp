#include "polyaut/claims.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace polyaut {

GroupAnalysis::GroupAnalysis(FiniteGroup G, RunConfig cfg)
    : G_(std::make_unique<FiniteGroup>(std::move(G))), cfg_(cfg) {}

const DerivedSeriesResult& GroupAnalysis::derived() {
  if (!derived_) derived_ = derived_series(*G_);
  return *derived_;
}

const LowerCentralResult& GroupAnalysis::lower_central() {
  if (!lcs_) lcs_ = lower_central_series(*G_);
  return *lcs_;
}

const AutomorphismSet& GroupAnalysis::aut() {
  if (!aut_) aut_ = automorphism_group(*G_, cfg_.search_budget);
  return *aut_;
}

const AutomorphismSet& GroupAnalysis::inner() {
  if (!inner_) inner_ = inner_automorphisms(*G_);
  return *inner_;
}

const FunctionSet& GroupAnalysis::closure() {
  if (!closure_) closure_ = polynomial_function_closure(*G_, cfg_.closure_budget);
  return *closure_;
}

const AutomorphismSet& GroupAnalysis::p0() {
  if (!p0_) {
    try {
      p0_ = polynomial_automorphisms(*G_, closure());
      p0_method_ = "closure";
    } catch (const ClosureBudgetExceeded&) {
      auto squeezed = polynomial_automorphisms_by_squeeze(*G_, inner(), aut());
      if (!squeezed) throw;
      p0_ = std::move(*squeezed);
      p0_method_ = "inner-equals-aut-squeeze";
    }
  }
  return *p0_;
}

const AutomorphismSet& GroupAnalysis::p() {
  if (!p_) p_ = generate_P(*G_, p0());
  return *p_;
}

const FiniteGroup& GroupAnalysis::p_group() {
  if (!p_group_) {
    const AutomorphismSet& P = p();
    std::vector<Elem> gen_idx;
    for (const auto& f : p0().maps) {
      int k = P.index_of(f.image);
      if (k >= 0) gen_idx.push_back(k);
    }
    p_group_ = std::make_unique<FiniteGroup>(
        composition_group(P, "P(" + G_->name() + ")", std::move(gen_idx)));
  }
  return *p_group_;
}

Json GroupAnalysis::engine_stats() const {
  Json j = Json::object();
  if (!p0_) return j;
  j["p0_size"] = p0_->size();
  j["p0_method"] = p0_method_;
  if (p_) j["p_size"] = p_->size();
  if (closure_) j["closure_size"] = closure_->size();
  return j;
}

Json ClaimReport::to_json() const {
  Json j;
  j["group"] = group;
  j["claim"] = claim;
  j["pass"] = pass;
  j["computed"] = computed;
  j["witnesses"] = witnesses;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "thm-1.1", "thm-1.2",        "cor-2.1",           "lem-2.2",
      "lem-2.3", "en-bijectivity", "converse-nilpotent"};
  return ids;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& group,
                          const std::string& claim) {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 3);
    return h;
  };
  std::uint64_t h = base;
  for (char c : group) h = mix(h, static_cast<unsigned char>(c));
  h = mix(h, 0xabcdefULL);
  for (char c : claim) h = mix(h, static_cast<unsigned char>(c));
  // splitmix64 finalizer
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

namespace {

void require(bool cond, const std::string& claim, const std::string& reason) {
  if (!cond) throw PreconditionNotMet(claim, reason);
}

int require_nilpotency_class(GroupAnalysis& ga, const std::string& claim) {
  const auto& lcs = ga.lower_central();
  require(lcs.nilpotency_class.has_value(), claim,
          ga.group().name() + " is not nilpotent");
  return *lcs.nilpotency_class;
}

int require_metabelian(GroupAnalysis& ga, const std::string& claim) {
  const auto& ds = ga.derived();
  std::string dl = ds.derived_length ? std::to_string(*ds.derived_length) : "infinite";
  require(ds.is_metabelian, claim,
          ga.group().name() + " is not metabelian (derived length " + dl + ")");
  return *ds.derived_length;
}

ClaimReport check_thm_1_1(GroupAnalysis& ga) {
  ClaimReport rep;
  const int k = require_nilpotency_class(ga, "thm-1.1");
  require(k >= 2, "thm-1.1",
          ga.group().name() + " has nilpotency class " + std::to_string(k) +
              " but the theorem requires class >= 2");
  const FiniteGroup& P = ga.p_group();
  const auto lcs = lower_central_series(P);
  rep.computed["group_class"] = k;
  rep.computed["p_order"] = P.order();
  if (lcs.nilpotency_class) {
    rep.computed["p_class"] = *lcs.nilpotency_class;
    rep.pass = *lcs.nilpotency_class == k - 1;
  } else {
    rep.computed["p_class"] = "not-nilpotent";
    rep.pass = false;
  }
  if (!rep.pass) rep.witnesses.push_back("class(P(G)) != class(G) - 1");
  return rep;
}

ClaimReport check_thm_1_2(GroupAnalysis& ga) {
  ClaimReport rep;
  const int dl = require_metabelian(ga, "thm-1.2");
  const FiniteGroup& P = ga.p_group();
  const auto ds = derived_series(P);
  rep.computed["group_derived_length"] = dl;
  rep.computed["p_order"] = P.order();
  if (ds.derived_length)
    rep.computed["p_derived_length"] = *ds.derived_length;
  else
    rep.computed["p_derived_length"] = "infinite";
  rep.pass = ds.is_metabelian;
  if (!rep.pass) rep.witnesses.push_back("P(G) is not metabelian");
  return rep;
}

ClaimReport check_cor_2_1(GroupAnalysis& ga) {
  ClaimReport rep;
  const int k = require_nilpotency_class(ga, "cor-2.1");
  require(k <= 2, "cor-2.1",
          ga.group().name() + " has nilpotency class " + std::to_string(k) +
              " but the corollary requires class <= 2");
  const FiniteGroup& P = ga.p_group();
  rep.computed["group_class"] = k;
  rep.computed["p_order"] = P.order();
  rep.pass = P.is_abelian();
  rep.computed["p_abelian"] = rep.pass;
  if (!rep.pass) rep.witnesses.push_back("P(G) is not abelian");
  return rep;
}

ClaimReport check_lem_2_2(GroupAnalysis& ga) {
  ClaimReport rep;
  require_metabelian(ga, "lem-2.2");
  const FiniteGroup& G = ga.group();
  const Subgroup derived = ga.derived().series.terms.size() > 1
                               ? ga.derived().series.terms[1]
                               : trivial_subgroup(G);
  long long checked = 0;
  rep.pass = true;
  for (Elem t : derived.members) {
    for (Elem x = 0; x < G.order(); ++x) {
      for (Elem y = 0; y < G.order(); ++y) {
        ++checked;
        Elem lhs = G.commutator(G.commutator(t, x), y);
        Elem rhs = G.commutator(G.commutator(t, y), x);
        if (lhs != rhs) {
          rep.pass = false;
          Json w;
          w["t"] = t;
          w["x"] = x;
          w["y"] = y;
          rep.witnesses.push_back(w);
        }
      }
    }
  }
  rep.computed["derived_order"] = derived.order();
  rep.computed["checked_triples"] = checked;
  return rep;
}

ClaimReport check_lem_2_3(GroupAnalysis& ga) {
  ClaimReport rep;
  require_metabelian(ga, "lem-2.3");
  const FiniteGroup& G = ga.group();
  const Subgroup derived_G = ga.derived().series.terms.size() > 1
                                 ? ga.derived().series.terms[1]
                                 : trivial_subgroup(G);

  const FiniteGroup& P = ga.p_group();
  const auto dsP = derived_series(P);
  const Subgroup derived_P =
      dsP.series.terms.size() > 1 ? dsP.series.terms[1] : trivial_subgroup(P);

  bool fixes = true, ia = true;
  for (Elem hidx : derived_P.members) {
    const GroupFunction& h = ga.p().maps[hidx];
    for (Elem t : derived_G.members)
      if (h(t) != t) {
        fixes = false;
        Json w;
        w["h"] = hidx;
        w["t"] = t;
        w["h_of_t"] = h(t);
        rep.witnesses.push_back(w);
      }
    for (Elem x = 0; x < G.order(); ++x)
      if (!derived_G.contains(G.mul(G.inv(x), h(x)))) {
        ia = false;
        Json w;
        w["h"] = hidx;
        w["x"] = x;
        rep.witnesses.push_back(w);
      }
  }
  rep.computed["p_derived_order"] = derived_P.order();
  rep.computed["fixes_derived_pointwise"] = fixes;
  rep.computed["ia_on_abelianization"] = ia;
  rep.pass = fixes && ia;
  return rep;
}

ClaimReport check_en_bijectivity(GroupAnalysis& ga) {
  ClaimReport rep;
  require_nilpotency_class(ga, "en-bijectivity");
  const FiniteGroup& G = ga.group();
  const RunConfig& cfg = ga.config();
  std::mt19937_64 rng(derive_seed(cfg.seed, G.name(), "en-bijectivity"));
  std::uniform_int_distribution<int> len_dist(1, cfg.en_max_len);
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  std::uniform_int_distribution<int> elem_dist(0, G.order() - 1);

  int bijective = 0;
  rep.pass = true;
  for (int s = 0; s < cfg.en_samples; ++s) {
    const int len = len_dist(rng);
    const long long target = (rng() & 1) ? 1 : -1;
    PolynomialForm form;
    long long partial = 0;
    for (int i = 0; i + 1 < len; ++i) {
      long long e = exp_dist(rng);
      partial += e;
      form.push_back({elem_dist(rng), e});
    }
    form.push_back({elem_dist(rng), target - partial});

    std::vector<char> hit(G.order(), 0);
    bool bij = true;
    for (Elem x = 0; x < G.order(); ++x) {
      Elem y = eval_poly_form(G, form, x);
      if (hit[y]) {
        bij = false;
        break;
      }
      hit[y] = 1;
    }
    if (bij) {
      ++bijective;
    } else {
      rep.pass = false;
      Json w;
      w["sample"] = s;
      Json factors = Json::array();
      for (const auto& f : form) factors.push_back({f.conjugator, f.exponent});
      w["form"] = factors;
      rep.witnesses.push_back(w);
    }
  }
  rep.computed["samples"] = cfg.en_samples;
  rep.computed["bijective"] = bijective;
  return rep;
}

ClaimReport check_converse_nilpotent(GroupAnalysis& ga) {
  ClaimReport rep;
  const bool g_nilpotent = ga.lower_central().nilpotency_class.has_value();
  rep.computed["group_nilpotent"] = g_nilpotent;
  if (g_nilpotent) {
    // the implication has a true conclusion; nothing to refute
    rep.computed["p_nilpotent"] = "implied";
    rep.pass = true;
    return rep;
  }
  const auto lcsP = lower_central_series(ga.p_group());
  const bool p_nilpotent = lcsP.nilpotency_class.has_value();
  rep.computed["p_nilpotent"] = p_nilpotent;
  rep.pass = !p_nilpotent;
  if (!rep.pass)
    rep.witnesses.push_back("P(G) nilpotent although G is not");
  return rep;
}

}  // namespace

ClaimReport verify_claim(GroupAnalysis& ga, const std::string& claim) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimReport rep;
  if (claim == "thm-1.1")
    rep = check_thm_1_1(ga);
  else if (claim == "thm-1.2")
    rep = check_thm_1_2(ga);
  else if (claim == "cor-2.1")
    rep = check_cor_2_1(ga);
  else if (claim == "lem-2.2")
    rep = check_lem_2_2(ga);
  else if (claim == "lem-2.3")
    rep = check_lem_2_3(ga);
  else if (claim == "en-bijectivity")
    rep = check_en_bijectivity(ga);
  else if (claim == "converse-nilpotent")
    rep = check_converse_nilpotent(ga);
  else
    throw UnknownClaim("unknown claim id: " + claim);

  rep.group = ga.group().name();
  rep.claim = claim;
  Json stats = ga.engine_stats();
  if (!stats.empty()) rep.computed["engine"] = stats;
  if (ga.config().timing) {
    const auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  return rep;
}

}  // namespace polyaut
