#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qxr/construct.hpp"
#include "qxr/profile.hpp"

namespace qxr::testing {

using ProfileBuilder = std::function<ProfileFunction(const IsoparametricH&)>;

struct Fixture {
  std::string name;
  int epsilon;
  int n;
  CatalogEntry base;
  ProfileBuilder profile;
  Interval s_range;

  ParallelFamily family() const { return ParallelFamily(make_base(base, Signature(epsilon, n))); }
  ProductHypersurface build() const {
    ParallelFamily fam = family();
    IsoparametricH H = parallel_mean_curvature(fam);
    return ProductHypersurface(fam, profile(H), s_range);
  }
};

inline ProfileBuilder linear(double A) {
  return [A](const IsoparametricH&) { return linear_profile(A); };
}
inline ProfileBuilder cmc(double Ht, double a1, Interval iv) {
  return [=](const IsoparametricH& H) { return solve_cmc(Ht, H, 0.0, a1, iv, default_cmc_step(iv)); };
}
inline ProfileBuilder minimal(double h0, Interval iv, double a0 = 0.0) {
  return [=](const IsoparametricH& H) { return minimal_profile(H, a0, h0, 1, iv); };
}

inline CatalogEntry entry(BaseKind k, double r = 0.0, int p = 0, int q = 0, double d = 0.0) {
  return CatalogEntry{k, r, p, q, d};
}

inline double catenoid_a0() { return 0.5 * std::acosh(2.0); }

// Profiles are kept away from blow-up so |a'| stays moderate.
inline std::vector<Fixture> fixture_matrix() {
  const double rc = 1.0 / std::sqrt(2.0);
  return {
      {"s2_equator_linear", 1, 2, entry(BaseKind::Equator), linear(1.0), {-1.0, 1.0}},
      {"s3_sphere_cmc", 1, 3, entry(BaseKind::GeodesicSphere, 1.0), cmc(0.5, 0.3, {-0.3, 0.3}),
       {-0.3, 0.3}},
      {"s3_clifford_minimal", 1, 3, entry(BaseKind::CliffordTorus, rc, 1, 1),
       minimal(0.25, {-0.45, 0.45}), {-0.4, 0.4}},
      {"s4_clifford_linear", 1, 4, entry(BaseKind::CliffordTorus, 0.6, 1, 2), linear(-0.7),
       {-0.5, 0.5}},
      {"s2_sphere_minimal", 1, 2, entry(BaseKind::GeodesicSphere, 0.8), minimal(0.1, {-0.4, 0.4}),
       {-0.4, 0.4}},
      {"e2_plane_linear", 0, 2, entry(BaseKind::Hyperplane), linear(1.0), {-1.0, 1.0}},
      {"e2_catenoid", 0, 2, entry(BaseKind::RoundSphere, 1.0),
       minimal(0.25, {-0.4, 2.1}, catenoid_a0()), {0.0, 2.0}},
      {"e3_sphere_cmc", 0, 3, entry(BaseKind::RoundSphere, 1.5), cmc(1.0, 0.2, {-0.2, 0.2}),
       {-0.2, 0.2}},
      {"e3_plane_cmc", 0, 3, entry(BaseKind::Hyperplane), cmc(0.5, 0.1, {-0.5, 0.5}), {-0.5, 0.5}},
      {"e3_geodesic_sphere_linear", 0, 3, entry(BaseKind::GeodesicSphere, 1.0), linear(0.5),
       {-0.5, 0.5}},
      {"h3_horosphere_cmc", -1, 3, entry(BaseKind::Horosphere), cmc(0.5, 0.1, {-0.15, 0.15}),
       {-0.15, 0.15}},
      {"h2_sphere_minimal", -1, 2, entry(BaseKind::HyperbolicGeodesicSphere, 1.0),
       minimal(0.05, {-0.5, 0.5}), {-0.5, 0.5}},
      {"h3_equidistant_linear", -1, 3, entry(BaseKind::Equidistant, 0, 0, 0, 0.5), linear(-2.0),
       {-1.0, 1.0}},
      {"h2_hyperplane_cmc", -1, 2, entry(BaseKind::Hyperplane), cmc(1.0, 0.2, {-0.2, 0.2}),
       {-0.2, 0.2}},
      {"h3_geodesic_sphere_linear", -1, 3, entry(BaseKind::GeodesicSphere, 1.2), linear(0.8),
       {-0.4, 0.4}},
  };
}

}  // namespace qxr::testing
