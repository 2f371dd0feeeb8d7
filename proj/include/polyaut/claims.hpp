#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyaut/automorphisms.hpp"
#include "polyaut/config.hpp"

namespace polyaut {

using Json = nlohmann::ordered_json;

/// Lazily computed per-group data shared by the claim checkers: series,
/// A(G), I(G), the polynomial function closure, P0(G), P(G) and the
/// materialized composition group of P(G).
class GroupAnalysis {
 public:
  GroupAnalysis(FiniteGroup G, RunConfig cfg);
  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;

  const FiniteGroup& group() const { return *G_; }
  const RunConfig& config() const { return cfg_; }

  const DerivedSeriesResult& derived();
  const LowerCentralResult& lower_central();
  const AutomorphismSet& aut();
  const AutomorphismSet& inner();
  const FunctionSet& closure();
  /// Closure-then-filter when the closure fits the budget; otherwise the
  /// I(G) = A(G) squeeze when it applies, else the budget error propagates.
  const AutomorphismSet& p0();
  const AutomorphismSet& p();
  /// P(G) as a FiniteGroup; generated by the P0 maps.
  const FiniteGroup& p_group();
  /// "closure" or "inner-equals-aut-squeeze", set once p0() has run.
  const std::string& p0_method() const { return p0_method_; }
  /// Set sizes and the P0 method, for report totality; empty object until
  /// the engine has run.
  Json engine_stats() const;

 private:
  std::unique_ptr<FiniteGroup> G_;
  RunConfig cfg_;
  std::optional<DerivedSeriesResult> derived_;
  std::optional<LowerCentralResult> lcs_;
  std::optional<AutomorphismSet> aut_;
  std::optional<AutomorphismSet> inner_;
  std::optional<FunctionSet> closure_;
  std::optional<AutomorphismSet> p0_;
  std::optional<AutomorphismSet> p_;
  std::unique_ptr<FiniteGroup> p_group_;
  std::string p0_method_;
};

struct ClaimReport {
  std::string group;
  std::string claim;
  bool pass = false;
  Json computed = Json::object();
  Json witnesses = Json::array();
  double elapsed_ms = 0.0;

  /// Stable key order: group, claim, pass, computed, witnesses, elapsed_ms.
  Json to_json() const;
};

/// The claim identifiers accepted by verify_claim, in canonical order.
const std::vector<std::string>& claim_ids();

/// Runs one claim checker. Throws PreconditionNotMet when the group does not
/// satisfy the claim's hypothesis, UnknownClaim for a bad identifier.
ClaimReport verify_claim(GroupAnalysis& ga, const std::string& claim);

/// Deterministic per-(seed, group, claim) stream seed.
std::uint64_t derive_seed(std::uint64_t base, const std::string& group,
                          const std::string& claim);

}  // namespace polyaut
