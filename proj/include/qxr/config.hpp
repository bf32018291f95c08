#pragma once

// JSON configuration shared by the command-line front end.
//
//   {
//     "epsilon": 1, "n": 3,
//     "base":    {"kind": "clifford_torus", "p": 1, "q": 1, "r": 0.7071067811865476},
//     "profile": {"variant": "minimal", "a0": 0, "h0": 0.25, "sign": 1,
//                 "interval": [-0.45, 0.45]},
//     "grid":    {"u_resolution": [16, 16], "s_range": [-0.4, 0.4], "s_resolution": 33},
//     "verify":  {"samples": 200, "fd_step": 1e-4, "tol": 1e-4, "seed": 7}
//   }
//
// Profile variants: linear {A}, cmc {H, a0, a1, interval, step?},
// minimal {a0, h0, sign, interval}.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qxr/basecat.hpp"
#include "qxr/construct.hpp"
#include "qxr/parallel.hpp"
#include "qxr/profile.hpp"

namespace qxr {

// Invalid configuration; the message starts with the offending field path.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProfileSpec {
  ProfileVariant variant = ProfileVariant::Linear;
  double A = 1.0;
  double H = 0.0;
  double a0 = 0.0;
  double a1 = 1.0;
  double h0 = 0.5;
  int sign = 1;
  Interval interval;
  double step = 0.0;  // 0 selects the default step
};

struct GridSpec {
  std::vector<int> u_resolution;
  Interval s_range;
  int s_resolution = 33;
};

struct VerifySpec {
  int samples = 100;
  double fd_step = 1e-4;
  double tol = 1e-5;
  std::uint64_t seed = 1;
};

struct Config {
  int epsilon = 0;
  int n = 2;
  CatalogEntry base;
  ProfileSpec profile;
  GridSpec grid;
  VerifySpec verify;
  nlohmann::json source;
};

Config parse_config(const nlohmann::json& j);
// Malformed JSON raises ConfigError carrying the parse location.
Config load_config(const std::filesystem::path& path);

// FNV-1a over the canonical dump of the configuration, as 16 hex digits.
std::string config_digest(const Config& cfg);

struct Construction {
  ParallelFamily family;
  IsoparametricH H;
  ProfileFunction profile;
  ProductHypersurface surface;
  std::vector<std::string> warnings;
};

// The profile alone (no s_range clipping); used by the profile command.
ProfileFunction build_profile(const Config& cfg, const IsoparametricH& H);
Construction build_construction(const Config& cfg);

}  // namespace qxr
