#pragma once

#include <cstdint>
#include <string>

namespace polyaut {

/// Run parameters shared by the engine, the CLI and the test suites. Every
/// report echoes the config (including the seed) so runs are reproducible.
struct RunConfig {
  int order_cap = 64;
  std::size_t closure_budget = 200000;
  std::uint64_t search_budget = 200000;  // automorphism candidate tuples
  std::uint64_t seed = 12345;

  int lemma21_samples = 100;
  int lemma21_max_len = 3;
  int en_samples = 500;
  int en_max_len = 3;
  int prop31_samples = 50;
  int hom_pair_samples = 20;
  int fm_word_samples = 1000;
  int module_roundtrip_samples = 200;

  bool timing = false;  // when false, reports carry elapsed_ms = 0
  std::string output;   // report destination; empty = stdout
};

/// Flat `key = value` config file; unknown keys are rejected. Missing file
/// is an error; use defaults() when no file is given.
RunConfig load_config_file(const std::string& path);

/// Applies one `key = value` assignment (used for file lines and CLI
/// overrides alike). Throws Error on unknown key or bad value.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "POLYAUT_CONFIG";

std::string config_to_text(const RunConfig& cfg);

}  // namespace polyaut
