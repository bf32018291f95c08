#include "qxr/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qxr {

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

Interval Interval::intersect(const Interval& o) const {
  return {std::max(lo, o.lo), std::min(hi, o.hi)};
}

std::optional<double> focal_value(int epsilon, double k) {
  switch (epsilon) {
    case 1:
      return std::atan2(1.0, k);  // cot theta = k, theta in (0, pi)
    case 0:
      if (k == 0.0) return std::nullopt;
      return 1.0 / k;
    case -1:
      if (std::abs(k) <= 1.0) return std::nullopt;
      return std::atanh(1.0 / k);  // coth theta = k
    default:
      throw std::invalid_argument("epsilon must be -1, 0 or 1");
  }
}

ParallelFamily::ParallelFamily(BaseHypersurface base) : base_(std::move(base)) {}

std::vector<FocalValue> ParallelFamily::focal_values(const Eigen::VectorXd& u) const {
  std::vector<FocalValue> out;
  for (const auto& c : base_.principal_curvatures(u))
    if (auto theta = focal_value(signature().epsilon(), c.value))
      out.push_back({*theta, c.multiplicity});
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.theta < b.theta; });
  std::vector<FocalValue> merged;
  for (const auto& f : out) {
    if (!merged.empty() && std::abs(merged.back().theta - f.theta) <= 1e-10)
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(f);
  }
  return merged;
}

std::vector<PrincipalCurvature> ParallelFamily::principal_curvatures(const Eigen::VectorXd& u,
                                                                     double s) const {
  const int eps = signature().epsilon();
  const auto [c, sn] = cs_pair(eps, s);
  std::vector<PrincipalCurvature> out;
  for (const auto& k : base_.principal_curvatures(u))
    out.push_back({(eps * sn + k.value * c) / (c - k.value * sn), k.multiplicity});
  return out;
}

AmbientVector parallel_point(const ParallelFamily& fam, const Eigen::VectorXd& u, double s) {
  const auto [c, sn] = cs_pair(fam.signature().epsilon(), s);
  const BaseFrame fr = fam.base().eval(u);
  return c * fr.position + sn * fr.normal;
}

AmbientVector parallel_normal(const ParallelFamily& fam, const Eigen::VectorXd& u, double s) {
  const int eps = fam.signature().epsilon();
  const auto [c, sn] = cs_pair(eps, s);
  const BaseFrame fr = fam.base().eval(u);
  return (-eps * sn) * fr.position + c * fr.normal;
}

double pushforward_scale(const ParallelFamily& fam, int i, const Eigen::VectorXd& u, double s) {
  const auto curv = fam.base().principal_curvatures(u);
  if (i < 0 || i >= static_cast<int>(curv.size()))
    throw std::out_of_range("principal curvature index out of range");
  const auto [c, sn] = cs_pair(fam.signature().epsilon(), s);
  return c - curv[i].value * sn;
}

Interval regularity_interval(const ParallelFamily& fam, const Eigen::VectorXd& u) {
  const auto theta = fam.focal_values(u);
  Interval out;
  if (fam.signature().epsilon() == 1) {
    // Every curvature has a focal value in (0, pi).
    out.lo = theta.back().theta - std::numbers::pi;
    out.hi = theta.front().theta;
    return out;
  }
  for (const auto& f : theta) {
    if (f.theta > 0.0) out.hi = std::min(out.hi, f.theta);
    if (f.theta < 0.0) out.lo = std::max(out.lo, f.theta);
  }
  return out;
}

}  // namespace qxr
