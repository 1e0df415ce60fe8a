#pragma once

#include <json.hpp>

#include "csv.hpp"
#include "unit_synth.hpp"

namespace tjoin {

inline const char* normalization_name(Normalization n) {
  return n == Normalization::lowercase ? "lowercase" : "none";
}

inline Normalization parse_normalization(const std::string& s) {
  if (s == "none") return Normalization::none;
  if (s == "lowercase") return Normalization::lowercase;
  throw std::invalid_argument("unknown normalization \"" + s + "\" (none|lowercase)");
}

inline std::vector<std::string> unit_kind_names(const UnitKindSet& set) {
  std::vector<std::string> out;
  for (UnitKind k : {UnitKind::substr, UnitKind::split, UnitKind::split_substr,
                     UnitKind::two_char_split_substr, UnitKind::literal})
    if (set.enabled(k)) out.push_back(kind_name(k));
  return out;
}

inline UnitKindSet parse_unit_kinds(const std::vector<std::string>& names) {
  UnitKindSet set{false, false, false, false, false};
  for (const std::string& name : names) {
    if (name == "substr") set.substr = true;
    else if (name == "split") set.split = true;
    else if (name == "splitsubstr") set.split_substr = true;
    else if (name == "twocharsplitsubstr") set.two_char_split_substr = true;
    else if (name == "literal") set.literal = true;
    else if (name == "default") set = UnitKindSet{};
    else if (name == "all") set = UnitKindSet::all();
    else throw std::invalid_argument("unknown unit kind \"" + name + "\"");
  }
  return set;
}

/// Run-wide knobs, mirrored by the CLI flags and serializable as JSON.
struct RunConfig {
  int32_t n0 = 4;
  int32_t n_max = 20;
  int32_t max_placeholders = 3;
  int32_t skeleton_cap = 256;
  int32_t min_placeholder_len = 1;
  UnitKindSet units{};
  double min_support = 0.0;
  int32_t top_k = 5;
  int32_t sample_size = 0;  // 0 = use all pairs
  uint64_t seed = 1;
  Normalization normalization = Normalization::none;
  int32_t workers = 0;  // 0 = hardware concurrency

  void validate() const {
    if (n0 < 1 || n0 > n_max) throw std::invalid_argument("config: need 1 <= n0 <= n_max");
    if (max_placeholders < 1) throw std::invalid_argument("config: max_placeholders >= 1");
    if (skeleton_cap < 1) throw std::invalid_argument("config: skeleton_cap >= 1");
    if (min_placeholder_len < 1) throw std::invalid_argument("config: min_placeholder_len >= 1");
    if (min_support < 0.0 || min_support > 1.0)
      throw std::invalid_argument("config: 0 <= min_support <= 1");
    if (top_k < 1) throw std::invalid_argument("config: top_k >= 1");
    if (sample_size < 0) throw std::invalid_argument("config: sample_size >= 0");
    if (workers < 0) throw std::invalid_argument("config: workers >= 0");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n0"] = n0;
    j["n_max"] = n_max;
    j["max_placeholders"] = max_placeholders;
    j["skeleton_cap"] = skeleton_cap;
    j["min_placeholder_len"] = min_placeholder_len;
    j["units"] = unit_kind_names(units);
    j["min_support"] = min_support;
    j["top_k"] = top_k;
    j["sample_size"] = sample_size;
    j["seed"] = seed;
    j["normalization"] = normalization_name(normalization);
    j["workers"] = workers;
    return j;
  }

  static RunConfig from_json(const nlohmann::json& j) {
    RunConfig c;
    c.n0 = j.value("n0", c.n0);
    c.n_max = j.value("n_max", c.n_max);
    c.max_placeholders = j.value("max_placeholders", c.max_placeholders);
    c.skeleton_cap = j.value("skeleton_cap", c.skeleton_cap);
    c.min_placeholder_len = j.value("min_placeholder_len", c.min_placeholder_len);
    if (j.contains("units")) c.units = parse_unit_kinds(j["units"].get<std::vector<std::string>>());
    c.min_support = j.value("min_support", c.min_support);
    c.top_k = j.value("top_k", c.top_k);
    c.sample_size = j.value("sample_size", c.sample_size);
    c.seed = j.value("seed", c.seed);
    if (j.contains("normalization"))
      c.normalization = parse_normalization(j["normalization"].get<std::string>());
    c.workers = j.value("workers", c.workers);
    c.validate();
    return c;
  }
};

}  // namespace tjoin
