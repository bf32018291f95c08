#pragma once

// Catalog of isoparametric base hypersurfaces g: M^{n-1} -> Q_eps^n.
//
// Every entry carries an explicit chart, an analytic unit normal N and its
// constant principal curvatures. Shape operators follow A X = -(dN X)^T, so
// the outward normal of a round sphere of radius r in R^n has curvature -1/r.

#include <Eigen/Core>

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qxr/ambient.hpp"

namespace qxr {

// Axis-aligned box of chart coordinates.
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  Eigen::Index dim() const { return lo.size(); }
  bool contains(const Eigen::VectorXd& x) const;
  // Map a point of the unit cube [0,1]^dim onto the box.
  Eigen::VectorXd lerp(const Eigen::VectorXd& unit) const;
};

enum class BaseKind {
  GeodesicSphere,
  Equator,
  CliffordTorus,
  Hyperplane,
  RoundSphere,
  Horosphere,
  Equidistant,
  HyperbolicGeodesicSphere,
};

struct CatalogEntry {
  BaseKind kind = BaseKind::Hyperplane;
  double r = 0.0;  // radius (spheres) or first-factor radius (clifford_torus)
  int p = 0;       // clifford_torus factor dimensions, p + q = n - 1
  int q = 0;
  double d = 0.0;  // equidistant distance
};

struct KindInfo {
  BaseKind kind;
  std::string_view name;
  std::string_view params;  // human-readable parameter ranges
  std::vector<int> epsilons;
};

std::span<const KindInfo> catalog_kinds();
const KindInfo& kind_info(BaseKind kind);
// Throws InputError for unknown names.
BaseKind parse_kind(std::string_view name);
bool kind_allows(BaseKind kind, int epsilon);

struct PrincipalCurvature {
  double value;
  int multiplicity;
};

// Position g(u) and unit normal N(u), both tangent to / on Q_eps^n.
struct BaseFrame {
  AmbientVector position;
  AmbientVector normal;
};

// Hyperspherical chart of S^k in R^{k+1}; k angles, k = 0 gives the point (1).
Eigen::VectorXd sphere_chart(const Eigen::Ref<const Eigen::VectorXd>& angles);
// Chart box of sphere_chart kept `margin` away from the poles.
Box sphere_chart_box(int k, double margin);

inline constexpr double kChartMargin = 1e-3;

class BaseHypersurface {
 public:
  using Evaluator = std::function<BaseFrame(const Eigen::VectorXd&)>;

  BaseHypersurface(Signature sig, CatalogEntry entry, Box chart, Evaluator eval,
                   std::vector<PrincipalCurvature> curvatures);

  const Signature& signature() const { return sig_; }
  const CatalogEntry& entry() const { return entry_; }
  const Box& chart_domain() const { return chart_; }
  int chart_dim() const { return sig_.n() - 1; }
  bool isoparametric() const { return true; }

  BaseFrame eval(const Eigen::VectorXd& u) const { return eval_(u); }
  // Distinct principal curvatures with multiplicities summing to n-1.
  // Catalog hypersurfaces are isoparametric, so the result does not depend on u.
  const std::vector<PrincipalCurvature>& principal_curvatures() const { return curvatures_; }
  std::vector<PrincipalCurvature> principal_curvatures(const Eigen::VectorXd& u) const;

 private:
  Signature sig_;
  CatalogEntry entry_;
  Box chart_;
  Evaluator eval_;
  std::vector<PrincipalCurvature> curvatures_;
};

// Throws InputError naming the violated constraint.
BaseHypersurface make_base(const CatalogEntry& entry, const Signature& sig);

// Non-normalized mean curvature: trace of the shape operator.
double mean_curvature_of_base(const BaseHypersurface& base, const Eigen::VectorXd& u);

}  // namespace qxr
