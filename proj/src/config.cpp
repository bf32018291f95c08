#include "qxr/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qxr/errors.hpp"

namespace qxr {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "required field missing");
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "must be finite");
  return d;
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

double opt_number(const json& obj, const std::string& path, const char* key, double dflt) {
  return obj.contains(key) ? number(obj.at(key), path + "." + key) : dflt;
}

void only_keys(const json& obj, const std::string& path, std::set<std::string> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(path + "." + k, "unknown field");
}

Interval interval(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected [lo, hi]");
  Interval iv{number(v[0], path + "[0]"), number(v[1], path + "[1]")};
  if (!(iv.lo < iv.hi)) fail(path, "requires lo < hi");
  return iv;
}

}  // namespace

Config parse_config(const json& j) {
  Config cfg;
  cfg.source = j;
  only_keys(j, "config", {"epsilon", "n", "base", "profile", "grid", "verify"});
  cfg.epsilon = integer(field(j, "config", "epsilon"), "config.epsilon");
  cfg.n = integer(field(j, "config", "n"), "config.n");
  if (cfg.epsilon < -1 || cfg.epsilon > 1) fail("config.epsilon", "must be -1, 0 or 1");
  if (cfg.n < 2) fail("config.n", "must be >= 2");

  // base
  const json& b = field(j, "config", "base");
  only_keys(b, "config.base", {"kind", "r", "p", "q", "d"});
  const json& kind = field(b, "config.base", "kind");
  if (!kind.is_string()) fail("config.base.kind", "expected a string");
  try {
    cfg.base.kind = parse_kind(kind.get<std::string>());
  } catch (const InputError& e) {
    fail("config.base.kind", e.what());
  }
  switch (cfg.base.kind) {
    case BaseKind::GeodesicSphere:
    case BaseKind::RoundSphere:
    case BaseKind::HyperbolicGeodesicSphere:
      cfg.base.r = number(field(b, "config.base", "r"), "config.base.r");
      break;
    case BaseKind::CliffordTorus:
      cfg.base.p = integer(field(b, "config.base", "p"), "config.base.p");
      cfg.base.q = integer(field(b, "config.base", "q"), "config.base.q");
      cfg.base.r = number(field(b, "config.base", "r"), "config.base.r");
      break;
    case BaseKind::Equidistant:
      cfg.base.d = number(field(b, "config.base", "d"), "config.base.d");
      break;
    default:
      break;
  }
  try {
    make_base(cfg.base, Signature(cfg.epsilon, cfg.n));
  } catch (const InputError& e) {
    fail("config.base", e.what());
  }

  // profile
  const json& p = field(j, "config", "profile");
  only_keys(p, "config.profile", {"variant", "A", "H", "a0", "a1", "h0", "sign", "interval", "step"});
  const json& variant = field(p, "config.profile", "variant");
  if (!variant.is_string()) fail("config.profile.variant", "expected a string");
  const std::string v = variant.get<std::string>();
  ProfileSpec& ps = cfg.profile;
  if (v == "linear") {
    ps.variant = ProfileVariant::Linear;
    ps.A = number(field(p, "config.profile", "A"), "config.profile.A");
    if (ps.A == 0.0) fail("config.profile.A", "must be nonzero");
  } else if (v == "cmc") {
    ps.variant = ProfileVariant::Cmc;
    ps.H = number(field(p, "config.profile", "H"), "config.profile.H");
    ps.a0 = opt_number(p, "config.profile", "a0", 0.0);
    ps.a1 = number(field(p, "config.profile", "a1"), "config.profile.a1");
    if (ps.a1 == 0.0) fail("config.profile.a1", "must be nonzero");
    ps.interval = interval(field(p, "config.profile", "interval"), "config.profile.interval");
    ps.step = opt_number(p, "config.profile", "step", 0.0);
    if (ps.step < 0.0) fail("config.profile.step", "must be > 0");
  } else if (v == "minimal") {
    ps.variant = ProfileVariant::Minimal;
    ps.a0 = opt_number(p, "config.profile", "a0", 0.0);
    ps.h0 = number(field(p, "config.profile", "h0"), "config.profile.h0");
    if (!(ps.h0 > 0.0 && ps.h0 < 1.0)) fail("config.profile.h0", "requires 0 < h0 < 1");
    ps.sign = p.contains("sign") ? integer(p.at("sign"), "config.profile.sign") : 1;
    if (ps.sign != 1 && ps.sign != -1) fail("config.profile.sign", "must be +1 or -1");
    ps.interval = interval(field(p, "config.profile", "interval"), "config.profile.interval");
  } else {
    fail("config.profile.variant", "unknown variant '" + v + "' (linear, cmc, minimal)");
  }
  if (ps.variant != ProfileVariant::Linear && !(ps.interval.lo < 0.0 && ps.interval.hi > 0.0))
    fail("config.profile.interval", "must contain 0 in its interior");

  // grid
  const json& g = field(j, "config", "grid");
  only_keys(g, "config.grid", {"u_resolution", "s_range", "s_resolution"});
  cfg.grid.s_range = interval(field(g, "config.grid", "s_range"), "config.grid.s_range");
  if (g.contains("s_resolution")) {
    cfg.grid.s_resolution = integer(g.at("s_resolution"), "config.grid.s_resolution");
    if (cfg.grid.s_resolution < 2) fail("config.grid.s_resolution", "must be >= 2");
  }
  cfg.grid.u_resolution.assign(cfg.n - 1, 17);
  if (g.contains("u_resolution")) {
    const json& ur = g.at("u_resolution");
    if (!ur.is_array() || static_cast<int>(ur.size()) != cfg.n - 1)
      fail("config.grid.u_resolution", "expected an array of n - 1 integers");
    for (int i = 0; i < cfg.n - 1; ++i) {
      const std::string path = "config.grid.u_resolution[" + std::to_string(i) + "]";
      cfg.grid.u_resolution[i] = integer(ur[i], path);
      if (cfg.grid.u_resolution[i] < 2) fail(path, "must be >= 2");
    }
  }

  // verify
  if (j.contains("verify")) {
    const json& vr = j.at("verify");
    only_keys(vr, "config.verify", {"samples", "fd_step", "tol", "seed"});
    if (vr.contains("samples")) cfg.verify.samples = integer(vr.at("samples"), "config.verify.samples");
    if (cfg.verify.samples < 1) fail("config.verify.samples", "must be >= 1");
    cfg.verify.fd_step = opt_number(vr, "config.verify", "fd_step", cfg.verify.fd_step);
    if (!(cfg.verify.fd_step > 0.0)) fail("config.verify.fd_step", "must be > 0");
    cfg.verify.tol = opt_number(vr, "config.verify", "tol", cfg.verify.tol);
    if (!(cfg.verify.tol > 0.0)) fail("config.verify.tol", "must be > 0");
    if (vr.contains("seed")) {
      if (!vr.at("seed").is_number_unsigned()) fail("config.verify.seed", "expected a non-negative integer");
      cfg.verify.seed = vr.at("seed").get<std::uint64_t>();
    }
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    // e.byte is the offset of the failing character; report line and column.
    std::ifstream again(path);
    std::string text((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": malformed JSON: " + e.what());
  }
  return parse_config(j);
}

std::string config_digest(const Config& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : cfg.source.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ProfileFunction build_profile(const Config& cfg, const IsoparametricH& H) {
  const ProfileSpec& ps = cfg.profile;
  try {
    switch (ps.variant) {
      case ProfileVariant::Linear:
        return linear_profile(ps.A);
      case ProfileVariant::Cmc:
        return solve_cmc(ps.H, H, ps.a0, ps.a1, ps.interval,
                         ps.step > 0.0 ? ps.step : default_cmc_step(ps.interval));
      case ProfileVariant::Minimal:
        return minimal_profile(H, ps.a0, ps.h0, ps.sign, ps.interval);
    }
  } catch (const InputError& e) {
    fail("config.profile", e.what());
  }
  fail("config.profile", "unknown variant");
}

Construction build_construction(const Config& cfg) {
  const Signature sig(cfg.epsilon, cfg.n);
  ParallelFamily fam(make_base(cfg.base, sig));
  IsoparametricH H = parallel_mean_curvature(fam);
  ProfileFunction profile = build_profile(cfg, H);

  std::vector<std::string> warnings;
  if (profile.truncation()) warnings.push_back(*profile.truncation());
  const Interval reg = H.regular();
  const Interval& sr = cfg.grid.s_range;
  if (sr.lo < reg.lo || sr.hi > reg.hi) {
    std::ostringstream os;
    os.precision(17);
    os << "s_range (" << sr.lo << ", " << sr.hi << ") clipped to the regularity interval U = ("
       << reg.lo << ", " << reg.hi << ") of the parallel family";
    warnings.push_back(os.str());
  }
  try {
    ProductHypersurface surface(fam, profile, sr);
    return Construction{std::move(fam), std::move(H), std::move(profile), std::move(surface),
                        std::move(warnings)};
  } catch (const InputError& e) {
    fail("config.grid.s_range", e.what());
  }
}

}  // namespace qxr
