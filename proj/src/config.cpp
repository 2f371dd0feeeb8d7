#include "polyaut/config.hpp"

#include <fstream>
#include <sstream>

#include "polyaut/errors.hpp"

namespace polyaut {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_num(const std::string& key, const std::string& value) {
  std::istringstream is(value);
  T v{};
  is >> v;
  if (is.fail() || !is.eof()) throw Error("bad value for config key '" + key + "': " + value);
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw Error("bad boolean for config key '" + key + "': " + value);
}

}  // namespace

namespace {

template <class T>
T positive(const std::string& key, T v) {
  if (v <= 0) throw Error("config key '" + key + "' must be positive");
  return v;
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "order_cap")
    cfg.order_cap = positive(key, parse_num<int>(key, value));
  else if (key == "closure_budget")
    cfg.closure_budget = positive(key, parse_num<long long>(key, value));
  else if (key == "search_budget")
    cfg.search_budget = parse_num<std::uint64_t>(key, value);
  else if (key == "seed")
    cfg.seed = parse_num<std::uint64_t>(key, value);
  else if (key == "lemma21_samples")
    cfg.lemma21_samples = parse_num<int>(key, value);
  else if (key == "lemma21_max_len")
    cfg.lemma21_max_len = parse_num<int>(key, value);
  else if (key == "en_samples")
    cfg.en_samples = parse_num<int>(key, value);
  else if (key == "en_max_len")
    cfg.en_max_len = parse_num<int>(key, value);
  else if (key == "prop31_samples")
    cfg.prop31_samples = parse_num<int>(key, value);
  else if (key == "hom_pair_samples")
    cfg.hom_pair_samples = parse_num<int>(key, value);
  else if (key == "fm_word_samples")
    cfg.fm_word_samples = parse_num<int>(key, value);
  else if (key == "module_roundtrip_samples")
    cfg.module_roundtrip_samples = parse_num<int>(key, value);
  else if (key == "timing")
    cfg.timing = parse_bool(key, value);
  else if (key == "output")
    cfg.output = value;
  else
    throw Error("unknown config key: " + key);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + " is not 'key = value'");
    apply_config_entry(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

std::string config_to_text(const RunConfig& cfg) {
  std::ostringstream os;
  os << "order_cap = " << cfg.order_cap << '\n'
     << "closure_budget = " << cfg.closure_budget << '\n'
     << "search_budget = " << cfg.search_budget << '\n'
     << "seed = " << cfg.seed << '\n'
     << "lemma21_samples = " << cfg.lemma21_samples << '\n'
     << "lemma21_max_len = " << cfg.lemma21_max_len << '\n'
     << "en_samples = " << cfg.en_samples << '\n'
     << "en_max_len = " << cfg.en_max_len << '\n'
     << "prop31_samples = " << cfg.prop31_samples << '\n'
     << "hom_pair_samples = " << cfg.hom_pair_samples << '\n'
     << "fm_word_samples = " << cfg.fm_word_samples << '\n'
     << "module_roundtrip_samples = " << cfg.module_roundtrip_samples << '\n'
     << "timing = " << (cfg.timing ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace polyaut
