#pragma once

// Profile functions a(s) for f(x, s) = g_s(x) + a(s) d/dt.
//
// Three variants: linear a = A s (constant angle), numerical solutions of the
// constant mean curvature equation
//     a'' - a'(1 + a'^2) H_s - H (1 + a'^2)^{3/2} = 0,
// and the closed minimal form a = a0 +- int_0^s sqrt(h / (1 - h)) with
// h(t) = h0 exp(2 int_0^t H_s).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qxr/basecat.hpp"
#include "qxr/parallel.hpp"

namespace qxr {

// Mean curvature H_s of the parallel hypersurfaces of an isoparametric base,
// as a function of s. Non-normalized: sum of m_i k_i(s).
class IsoparametricH {
 public:
  IsoparametricH(int epsilon, std::vector<PrincipalCurvature> base_curvatures,
                 Interval regular = {});
  // H_s identically zero on the whole line.
  static IsoparametricH zero();

  double operator()(double s) const;
  int epsilon() const { return epsilon_; }
  const std::vector<PrincipalCurvature>& base_curvatures() const { return curvatures_; }
  // Interval about 0 on which every g_s is an immersion.
  const Interval& regular() const { return regular_; }

 private:
  int epsilon_;
  std::vector<PrincipalCurvature> curvatures_;
  Interval regular_;
};

// Throws InputError if the base is not isoparametric.
IsoparametricH parallel_mean_curvature(const ParallelFamily& fam);

struct ProfileSample {
  double a;
  double da;
  double dda;
};

double profile_b(double da);

enum class ProfileVariant { Linear, Cmc, Minimal };

class ProfileFunction {
 public:
  struct State;

  ProfileVariant variant() const;
  // Closed interval of valid arguments (bounds may be infinite).
  Interval domain() const;
  bool in_domain(double s) const;
  // Throws DomainError outside the domain.
  ProfileSample eval(double s) const;
  // Set when the domain was cut short (blow-up, h reaching 1).
  const std::optional<std::string>& truncation() const;

  explicit ProfileFunction(std::shared_ptr<const State> state) : state_(std::move(state)) {}

 private:
  std::shared_ptr<const State> state_;
};

// a(s) = A s. Rejects A = 0.
ProfileFunction linear_profile(double A);

inline constexpr double kCmcMaxSlope = 1e6;
double default_cmc_step(const Interval& interval);

// Fixed-step classical Runge-Kutta on (a, a') from s = 0 with a(0) = a0,
// a'(0) = a1, covering `interval` in both directions; cubic Hermite dense
// output. Stops early where |a'| > 1e6 or the right-hand side is not finite.
ProfileFunction solve_cmc(double H_target, const IsoparametricH& H, double a0, double a1,
                          const Interval& interval, double step);

inline constexpr double kQuadratureTol = 1e-10;
inline constexpr double kMinimalHCap = 1.0 - 1e-9;

// Closed-form minimal profile. sign is +1 or -1. The domain is cut to the
// maximal subinterval about 0 where h < 1 - 1e-9.
ProfileFunction minimal_profile(const IsoparametricH& H, double a0, double h0, int sign,
                                const Interval& interval);

// Residual of the constant mean curvature equation at s.
double cmc_residual(const ProfileFunction& profile, const IsoparametricH& H, double H_target,
                    double s);

}  // namespace qxr
