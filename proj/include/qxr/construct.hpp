#pragma once

// Hypersurfaces of Q_eps^n x R seen from the flat ambient space, and the
// product construction f(x, s) = g_s(x) + a(s) d/dt.
//
// Points of M^n are flat coordinate vectors x = (u_1, ..., u_{n-1}, s).

#include <Eigen/Core>

#include <string>

#include "qxr/ambient.hpp"
#include "qxr/basecat.hpp"
#include "qxr/parallel.hpp"
#include "qxr/profile.hpp"

namespace qxr {

// An immersed hypersurface of Q_eps^n x R with a unit normal field tangent to
// Q_eps^n x R. Implementations must be safe to evaluate concurrently.
class Hypersurface {
 public:
  virtual ~Hypersurface() = default;

  virtual const Signature& signature() const = 0;
  // Coordinate box containing the regular domain.
  virtual const Box& domain() const = 0;
  virtual bool is_regular(const Eigen::VectorXd& x) const = 0;
  virtual AmbientVector position(const Eigen::VectorXd& x) const = 0;
  virtual AmbientVector normal(const Eigen::VectorXd& x) const = 0;

  int dim() const { return signature().n(); }
};

// Normal of Q_eps^n x R in E^{n+2} along a position: the space-form part of
// the position (unit spacelike for eps = 1, unit timelike for eps = -1).
// Throws InputError for eps = 0.
AmbientVector space_form_normal(const AmbientVector& position);

inline constexpr double kRegularScaleMargin = 1e-6;

class ProductHypersurface final : public Hypersurface {
 public:
  // s_range must be bounded; it is intersected with the profile domain and the
  // regularity interval of the family. Throws InputError if nothing is left.
  ProductHypersurface(ParallelFamily fam, ProfileFunction profile, Interval s_range);

  const ParallelFamily& family() const { return fam_; }
  const ProfileFunction& profile() const { return profile_; }
  const Interval& s_interval() const { return s_interval_; }

  const Signature& signature() const override { return fam_.signature(); }
  const Box& domain() const override { return domain_; }
  bool is_regular(const Eigen::VectorXd& x) const override;
  AmbientVector position(const Eigen::VectorXd& x) const override;
  AmbientVector normal(const Eigen::VectorXd& x) const override;

  // Empty when x is regular, otherwise the violated constraint.
  std::string regularity_violation(const Eigen::VectorXd& x) const;

  int chart_dim() const;

  // f_* d/ds = N_s + a'(s) d/dt.
  AmbientVector pushforward_s(const Eigen::VectorXd& x) const;

 private:
  ParallelFamily fam_;
  ProfileFunction profile_;
  Interval s_interval_;
  Box domain_;
};

Eigen::VectorXd join_point(const Eigen::VectorXd& u, double s);

AmbientVector eval_f(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s);
AmbientVector eval_eta(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s);
// Requires eps = +-1.
AmbientVector eval_xi(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s);

struct TangentialSplit {
  double T_coeff;  // T = T_coeff d/ds
  double nu;       // <eta, d/dt>
};
TangentialSplit eval_T_nu(const ProductHypersurface& ph, const Eigen::VectorXd& u, double s);

}  // namespace qxr
