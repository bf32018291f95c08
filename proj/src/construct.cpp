#include "qxr/construct.hpp"

#include <cmath>
#include <sstream>

#include "qxr/errors.hpp"

namespace qxr {

AmbientVector space_form_normal(const AmbientVector& position) {
  if (position.signature().epsilon() == 0)
    throw InputError("space-form normal is undefined for epsilon=0 (codimension one)");
  return position.space_part();
}

Eigen::VectorXd join_point(const Eigen::VectorXd& u, double s) {
  Eigen::VectorXd x(u.size() + 1);
  x << u, s;
  return x;
}

ProductHypersurface::ProductHypersurface(ParallelFamily fam, ProfileFunction profile,
                                         Interval s_range)
    : fam_(std::move(fam)), profile_(std::move(profile)) {
  if (!s_range.bounded()) throw InputError("s_range must be bounded");
  const Box& chart = fam_.base().chart_domain();
  const Eigen::VectorXd mid = 0.5 * (chart.lo + chart.hi);
  s_interval_ = s_range.intersect(profile_.domain()).intersect(regularity_interval(fam_, mid));
  if (!(s_interval_.lo < s_interval_.hi)) {
    std::ostringstream os;
    os.precision(17);
    os << "empty regular domain: s_range (" << s_range.lo << ", " << s_range.hi
       << ") misses the profile domain / regularity interval";
    throw InputError(os.str());
  }
  const int k = chart_dim();
  domain_.lo.resize(k + 1);
  domain_.hi.resize(k + 1);
  domain_.lo << chart.lo, s_interval_.lo;
  domain_.hi << chart.hi, s_interval_.hi;
}

int ProductHypersurface::chart_dim() const { return fam_.base().chart_dim(); }

std::string ProductHypersurface::regularity_violation(const Eigen::VectorXd& x) const {
  const int k = chart_dim();
  std::ostringstream os;
  os.precision(17);
  if (x.size() != k + 1) {
    os << "point has " << x.size() << " coordinates, expected " << k + 1;
    return os.str();
  }
  const Eigen::VectorXd u = x.head(k);
  const double s = x[k];
  if (!fam_.base().chart_domain().contains(u)) return "chart coordinates outside the chart domain";
  if (!profile_.in_domain(s)) {
    os << "s=" << s << " outside the profile domain [" << profile_.domain().lo << ", "
       << profile_.domain().hi << "]";
    return os.str();
  }
  const auto curv = fam_.base().principal_curvatures(u);
  for (int i = 0; i < static_cast<int>(curv.size()); ++i) {
    const double scale = pushforward_scale(fam_, i, u, s);
    if (std::abs(scale) < kRegularScaleMargin) {
      os << "s=" << s << " is focal: pushforward scale " << scale << " of principal curvature "
         << curv[i].value;
      if (auto theta = focal_value(signature().epsilon(), curv[i].value))
        os << " (focal value theta=" << *theta << ")";
      return os.str();
    }
  }
  const Interval reg = regularity_interval(fam_, u);
  if (!reg.contains(s)) {
    os << "s=" << s << " outside the regularity interval (" << reg.lo << ", " << reg.hi << ")";
    return os.str();
  }
  return {};
}

bool ProductHypersurface::is_regular(const Eigen::VectorXd& x) const {
  return regularity_violation(x).empty();
}

AmbientVector ProductHypersurface::position(const Eigen::VectorXd& x) const {
  const int k = chart_dim();
  const Eigen::VectorXd u = x.head(k);
  AmbientVector p = parallel_point(fam_, u, x[k]);
  p[signature().vertical_index()] = profile_.eval(x[k]).a;
  return p;
}

AmbientVector ProductHypersurface::normal(const Eigen::VectorXd& x) const {
  const int k = chart_dim();
  const ProfileSample a = profile_.eval(x[k]);
  const double b = profile_b(a.da);
  AmbientVector eta = (-a.da / b) * parallel_normal(fam_, x.head(k), x[k]);
  eta[signature().vertical_index()] += 1.0 / b;
  return eta;
}

AmbientVector ProductHypersurface::pushforward_s(const Eigen::VectorXd& x) const {
  const int k = chart_dim();
  AmbientVector v = parallel_normal(fam_, x.head(k), x[k]);
  v[signature().vertical_index()] += profile_.eval(x[k]).da;
  return v;
}

namespace {

Eigen::VectorXd checked(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s) {
  Eigen::VectorXd x = join_point(u, s);
  const std::string why = ph.regularity_violation(x);
  if (!why.empty()) throw DomainError(why);
  return x;
}

}  // namespace

AmbientVector eval_f(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s) {
  return ph.position(checked(ph, u, s));
}

AmbientVector eval_eta(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s) {
  return ph.normal(checked(ph, u, s));
}

AmbientVector eval_xi(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s) {
  if (ph.signature().epsilon() == 0)
    throw InputError("xi is undefined for epsilon=0 (codimension one)");
  return space_form_normal(ph.position(checked(ph, u, s)));
}

TangentialSplit eval_T_nu(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s) {
  checked(ph, u, s);
  const ProfileSample a = ph.profile().eval(s);
  const double b2 = 1.0 + a.da * a.da;
  return {a.da / b2, 1.0 / std::sqrt(b2)};
}

}  // namespace qxr
