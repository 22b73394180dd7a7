#pragma once

// Run configuration: every calibration default in one place, optionally
// overridden from a JSON file whose keys mirror the fields.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "theodorus/discovery.hpp"
#include "theodorus/error.hpp"

namespace theodorus {

inline constexpr const char* kOutDirEnv = "THEODORUS_OUT_DIR";

struct Config {
  DiscoveryParams discovery;
  bool mirror = false;
  Index figure_n_max = 400;  // extent of rendered figures
  std::string out_dir;       // default output directory, empty = none
};

inline void validate(const Config& c) {
  const DiscoveryParams& p = c.discovery;
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(p.n_max >= 100, "n_max must be >= 100");
  require(p.angular_tol_rad > 0.0, "angular_tol_rad must be positive");
  require(p.min_chain_len >= 4, "min_chain_len must be >= 4");
  require(p.gap_deg > 0.0, "gap_deg must be positive");
  require(p.pair_tol_deg > 0.0, "pair_tol_deg must be positive");
  require(p.axis_tol_deg > 0.0, "axis_tol_deg must be positive");
  require(p.drift_epsilon_rad > 0.0, "drift_epsilon_rad must be positive");
  require(p.rotation_range.lo >= 0 && p.rotation_range.hi - p.rotation_range.lo >= 4,
          "rotation_range must be [lo, hi] with lo >= 0 and at least 5 steps");
  require(p.settle_winding >= 0, "settle_winding must be >= 0");
  require(p.centre_bound > 0.0, "centre_bound must be positive");
  require(c.figure_n_max >= 2, "figure_n_max must be >= 2");
}

/// Applies the keys present in j on top of base. Unknown keys are errors.
inline Config apply_json(const nlohmann::json& j, Config base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  DiscoveryParams& p = base.discovery;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const auto& v = it.value();
      if (k == "n_max") p.n_max = v.get<Index>();
      else if (k == "angular_tol_rad") p.angular_tol_rad = v.get<double>();
      else if (k == "min_chain_len") p.min_chain_len = v.get<std::size_t>();
      else if (k == "gap_deg") p.gap_deg = v.get<double>();
      else if (k == "pair_tol_deg") p.pair_tol_deg = v.get<double>();
      else if (k == "axis_tol_deg") p.axis_tol_deg = v.get<double>();
      else if (k == "drift_epsilon_rad") p.drift_epsilon_rad = v.get<double>();
      else if (k == "rotation_range") p.rotation_range = {v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()};
      else if (k == "settle_winding") p.settle_winding = v.get<std::int64_t>();
      else if (k == "centre_bound") p.centre_bound = v.get<double>();
      else if (k == "mirror") base.mirror = v.get<bool>();
      else if (k == "figure_n_max") base.figure_n_max = v.get<Index>();
      else if (k == "out_dir") base.out_dir = v.get<std::string>();
      else throw ConfigError("unknown config key '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return base;
}

inline nlohmann::json config_json(const Config& c) {
  const DiscoveryParams& p = c.discovery;
  return {{"n_max", p.n_max},
          {"angular_tol_rad", p.angular_tol_rad},
          {"min_chain_len", p.min_chain_len},
          {"gap_deg", p.gap_deg},
          {"pair_tol_deg", p.pair_tol_deg},
          {"axis_tol_deg", p.axis_tol_deg},
          {"drift_epsilon_rad", p.drift_epsilon_rad},
          {"rotation_range", {p.rotation_range.lo, p.rotation_range.hi}},
          {"settle_winding", p.settle_winding},
          {"centre_bound", p.centre_bound},
          {"mirror", c.mirror},
          {"figure_n_max", c.figure_n_max},
          {"out_dir", c.out_dir}};
}

inline Config load_config(const std::string& path, Config base = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return apply_json(j, std::move(base));
}

/// Defaults, with out_dir taken from the environment when set.
inline Config default_config() {
  Config c;
  if (const char* env = std::getenv(kOutDirEnv)) c.out_dir = env;
  return c;
}

}  // namespace theodorus
