#pragma once

// Finite-difference measurement of the extrinsic geometry of a hypersurface
// of Q_eps^n x R, and residuals for the pointwise identities satisfied by the
// product construction.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "qxr/construct.hpp"

namespace qxr {

inline constexpr double kDefaultFdStep = 1e-4;
inline constexpr double kDefaultTol = 1e-5;
inline constexpr double kMaxMetricCondition = 1e8;
inline constexpr double kZeroOperatorFloor = 1e-12;

// Fundamental data at one point in chart coordinates.
//
// second_eta(j, k) = -<d_j eta, f_k>, A_eta = metric^{-1} second_eta^T, so
// column j of A_eta holds the coordinates of A_eta e_j. Same for xi.
struct FundamentalData {
  Eigen::VectorXd point;
  double fd_step = 0.0;
  Eigen::MatrixXd metric{};
  Eigen::MatrixXd second_eta{};
  Eigen::MatrixXd A_eta{};
  std::optional<Eigen::MatrixXd> second_xi{};
  std::optional<Eigen::MatrixXd> A_xi{};
  std::vector<AmbientVector> tangents{};  // f_* e_j
  AmbientVector eta;
  double nu = 0.0;       // <eta, d/dt>
  Eigen::VectorXd T{};   // gradient of the height function, chart coordinates
};

// Centered second-order differences. Requires x to be at least 2 fd_step
// inside the domain box; throws DomainError otherwise and NumericalError when
// the metric condition number exceeds 1e8.
FundamentalData measure_fundamental(const Hypersurface& surf, const Eigen::VectorXd& x,
                                    double fd_step);

// Self-adjoint operator in a metric-orthonormal frame: L^{-1} sym(second) L^{-T}.
Eigen::MatrixXd orthonormal_operator(const Eigen::MatrixXd& metric, const Eigen::MatrixXd& second);

// Eigenvalues of the (symmetrized) shape operator, increasing.
Eigen::VectorXd principal_curvatures(const Eigen::MatrixXd& metric, const Eigen::MatrixXd& second);

// Relative asymmetry ||B - B^T|| / max(||B||, 1e-12).
double asymmetry(const Eigen::MatrixXd& second);

// Off-axis part of A_eta applied to the unit vector along T, relative to ||A_eta||.
double check_principal_direction(const FundamentalData& fd, const Eigen::VectorXd& T_coords);

// ||[A_eta, A_xi]|| / (||A_eta|| ||A_xi||). Throws InputError for eps = 0.
double check_flat_normal_bundle(const FundamentalData& fd);

double check_mean_curvature(const FundamentalData& fd, double expected);

struct NuResiduals {
  Eigen::VectorXd dnu;          // FD derivative of nu along each coordinate
  Eigen::VectorXd shape_term;   // -<A e_j, T>
  double chart = 0.0;           // max over chart directions
  double normal_direction = 0.0;  // along d/ds
};
NuResiduals check_nu_identities(const Hypersurface& surf, const FundamentalData& fd);

// Max deviation of the A_xi spectrum from {-nu^2, -1 (n-1 times)}.
double check_xi_spectrum(const FundamentalData& fd);

// Mean curvature of f predicted from the profile and H_s:
// (-a'(1 + a'^2) H_s + a'') / (1 + a'^2)^{3/2}.
double expected_mean_curvature(const ProductHypersurface& ph, double s);

// Principal curvatures of f predicted from the profile and the family,
// increasing: a''/b^3 along d/ds and -(a'/b) k_i(s) along the chart.
Eigen::VectorXd expected_principal_curvatures(const ProductHypersurface& ph,
                                              const Eigen::VectorXd& x);

// Shape operator of a base hypersurface (or one of its parallels) by finite
// differences of g_s and N_s in chart coordinates; eigenvalues increasing.
Eigen::VectorXd base_principal_curvatures_fd(const ParallelFamily& fam, const Eigen::VectorXd& u,
                                             double s, double fd_step);

// Smallest singular value of the FD Jacobian of u -> g_s(u) in the ambient metric.
double smallest_jacobian_singular_value(const ParallelFamily& fam, const Eigen::VectorXd& u,
                                        double s, double fd_step);

}  // namespace qxr
