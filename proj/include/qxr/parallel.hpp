#pragma once

// Parallel hypersurfaces g_s = C(s) g + S(s) N of a catalog base, their unit
// normals N_s = -eps S(s) g + C(s) N, and the focal structure of the family.
//
// Along a principal direction of curvature k the pushforward of g_s is
// scaled by C(s) - k S(s). Where k admits a focal value theta (k = cot theta,
// coth theta or 1/theta) this equals sin(theta - s)/sin(theta) and its
// hyperbolic/flat analogues. Curvatures without a focal value (k = 0 for
// eps = 0, |k| <= 1 for eps = -1) use the same expression, which never
// vanishes for them.

#include <Eigen/Core>

#include <limits>
#include <optional>
#include <vector>

#include "qxr/ambient.hpp"
#include "qxr/basecat.hpp"

namespace qxr {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double s) const { return lo < s && s < hi; }
  double length() const { return hi - lo; }
  bool bounded() const;
  Interval intersect(const Interval& o) const;
};

struct FocalValue {
  double theta;
  int multiplicity;
};

// Focal value attached to a principal curvature, if it has one.
std::optional<double> focal_value(int epsilon, double curvature);

class ParallelFamily {
 public:
  explicit ParallelFamily(BaseHypersurface base);

  const BaseHypersurface& base() const { return base_; }
  const Signature& signature() const { return base_.signature(); }

  // Increasing focal values, ties merged (tolerance 1e-10).
  std::vector<FocalValue> focal_values(const Eigen::VectorXd& u) const;

  // Principal curvatures of g_s with respect to N_s, same order and
  // multiplicities as the base curvatures.
  std::vector<PrincipalCurvature> principal_curvatures(const Eigen::VectorXd& u, double s) const;

 private:
  BaseHypersurface base_;
};

AmbientVector parallel_point(const ParallelFamily& fam, const Eigen::VectorXd& u, double s);
AmbientVector parallel_normal(const ParallelFamily& fam, const Eigen::VectorXd& u, double s);

// Scale factor of (g_s)_* on the eigenspace of the i-th base principal curvature.
double pushforward_scale(const ParallelFamily& fam, int i, const Eigen::VectorXd& u, double s);

// Maximal open interval about 0 on which g_s is an immersion at u.
Interval regularity_interval(const ParallelFamily& fam, const Eigen::VectorXd& u);

}  // namespace qxr
