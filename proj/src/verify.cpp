#include "qxr/verify.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qxr/errors.hpp"

namespace qxr {

namespace {

std::string describe(const Eigen::VectorXd& x) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ')';
  return os.str();
}

template <class Field>
std::vector<AmbientVector> central_differences(Field&& field, const Eigen::VectorXd& x, double h) {
  std::vector<AmbientVector> out;
  out.reserve(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    out.push_back((field(xp) - field(xm)) / (2.0 * h));
  }
  return out;
}

Eigen::MatrixXd gram(const std::vector<AmbientVector>& v) {
  const auto n = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) g(i, j) = g(j, i) = inner(v[i], v[j]);
  return g;
}

Eigen::MatrixXd second_form(const std::vector<AmbientVector>& dnormal,
                            const std::vector<AmbientVector>& tangents) {
  const auto n = static_cast<Eigen::Index>(tangents.size());
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) b(j, k) = -inner(dnormal[j], tangents[k]);
  return b;
}

double frob_or_floor(const Eigen::MatrixXd& m) { return std::max(m.norm(), kZeroOperatorFloor); }

}  // namespace

FundamentalData measure_fundamental(const Hypersurface& surf, const Eigen::VectorXd& x,
                                    double fd_step) {
  if (!(fd_step > 0.0)) throw InputError("fd_step must be > 0");
  const Box& box = surf.domain();
  const double margin = 2.0 * fd_step;
  if (x.size() != box.dim() || ((x - box.lo).array() < margin).any() ||
      ((box.hi - x).array() < margin).any())
    throw DomainError("point " + describe(x) + " is closer than 2 fd_step to the domain boundary");

  const auto pos = [&](const Eigen::VectorXd& y) { return surf.position(y); };
  const auto nrm = [&](const Eigen::VectorXd& y) { return surf.normal(y); };

  FundamentalData fd{.point = x, .fd_step = fd_step, .eta = surf.normal(x)};
  fd.tangents = central_differences(pos, x, fd_step);
  fd.metric = gram(fd.tangents);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fd.metric, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxMetricCondition) {
    std::ostringstream os;
    os << "ill-conditioned metric at " << describe(x) << " (condition number "
       << (lo > 0.0 ? hi / lo : INFINITY) << ")";
    throw NumericalError(os.str());
  }
  const Eigen::LDLT<Eigen::MatrixXd> solver(fd.metric);

  fd.second_eta = second_form(central_differences(nrm, x, fd_step), fd.tangents);
  fd.A_eta = solver.solve(fd.second_eta.transpose());

  if (surf.signature().epsilon() != 0) {
    const auto xi = [&](const Eigen::VectorXd& y) { return space_form_normal(surf.position(y)); };
    fd.second_xi = second_form(central_differences(xi, x, fd_step), fd.tangents);
    fd.A_xi = solver.solve(fd.second_xi->transpose());
  }

  fd.nu = fd.eta.height();
  Eigen::VectorXd dh(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) dh[j] = fd.tangents[j].height();
  fd.T = solver.solve(dh);
  return fd;
}

Eigen::MatrixXd orthonormal_operator(const Eigen::MatrixXd& metric,
                                     const Eigen::MatrixXd& second) {
  const Eigen::LLT<Eigen::MatrixXd> llt(metric);
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd sym = 0.5 * (second + second.transpose());
  const Eigen::MatrixXd left = L.triangularView<Eigen::Lower>().solve(sym);
  const Eigen::MatrixXd tilde =
      L.triangularView<Eigen::Lower>().solve(left.transpose()).transpose();
  return 0.5 * (tilde + tilde.transpose());
}

Eigen::VectorXd principal_curvatures(const Eigen::MatrixXd& metric, const Eigen::MatrixXd& second) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(orthonormal_operator(metric, second),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double asymmetry(const Eigen::MatrixXd& second) {
  return (second - second.transpose()).norm() / frob_or_floor(second);
}

double check_principal_direction(const FundamentalData& fd, const Eigen::VectorXd& T_coords) {
  const Eigen::LLT<Eigen::MatrixXd> llt(fd.metric);
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd A = orthonormal_operator(fd.metric, fd.second_eta);
  Eigen::VectorXd t = L.transpose() * T_coords;
  if (!(t.norm() > 0.0)) throw InputError("principal-direction check needs a nonzero T");
  t.normalize();
  const Eigen::VectorXd At = A * t;
  const Eigen::VectorXd off = At - t.dot(At) * t;
  return off.norm() / frob_or_floor(A);
}

double check_flat_normal_bundle(const FundamentalData& fd) {
  if (!fd.second_xi) throw InputError("flat normal bundle check requires epsilon = +-1");
  const Eigen::MatrixXd Ae = orthonormal_operator(fd.metric, fd.second_eta);
  const Eigen::MatrixXd Ax = orthonormal_operator(fd.metric, *fd.second_xi);
  return (Ae * Ax - Ax * Ae).norm() / (frob_or_floor(Ae) * frob_or_floor(Ax));
}

double check_mean_curvature(const FundamentalData& fd, double expected) {
  return std::abs(fd.A_eta.trace() - expected);
}

NuResiduals check_nu_identities(const Hypersurface& surf, const FundamentalData& fd) {
  const Eigen::Index n = fd.point.size();
  NuResiduals r;
  r.dnu.resize(n);
  r.shape_term = -(fd.second_eta * fd.T);
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd xp = fd.point, xm = fd.point;
    xp[j] += fd.fd_step;
    xm[j] -= fd.fd_step;
    r.dnu[j] = (surf.normal(xp).height() - surf.normal(xm).height()) / (2.0 * fd.fd_step);
  }
  const Eigen::VectorXd diff = (r.dnu - r.shape_term).cwiseAbs();
  r.chart = n > 1 ? diff.head(n - 1).maxCoeff() : 0.0;
  r.normal_direction = diff[n - 1];
  return r;
}

double check_xi_spectrum(const FundamentalData& fd) {
  if (!fd.second_xi) throw InputError("A_xi spectrum requires epsilon = +-1");
  const Eigen::Index n = fd.point.size();
  const Eigen::VectorXd measured = principal_curvatures(fd.metric, *fd.second_xi);
  Eigen::VectorXd expected = Eigen::VectorXd::Constant(n, -1.0);
  expected[n - 1] = -fd.nu * fd.nu;
  std::sort(expected.begin(), expected.end());
  return (measured - expected).cwiseAbs().maxCoeff();
}

double expected_mean_curvature(const ProductHypersurface& ph, double s) {
  const ProfileSample a = ph.profile().eval(s);
  const double w = 1.0 + a.da * a.da;
  const double hs = parallel_mean_curvature(ph.family())(s);
  return (-a.da * w * hs + a.dda) / (w * std::sqrt(w));
}

Eigen::VectorXd expected_principal_curvatures(const ProductHypersurface& ph,
                                              const Eigen::VectorXd& x) {
  const Eigen::Index k = x.size() - 1;
  const double s = x[k];
  const ProfileSample a = ph.profile().eval(s);
  const double b = profile_b(a.da);
  Eigen::VectorXd out(k + 1);
  Eigen::Index i = 0;
  for (const auto& c : ph.family().principal_curvatures(x.head(k), s))
    for (int m = 0; m < c.multiplicity; ++m) out[i++] = -(a.da / b) * c.value;
  out[i] = a.dda / (b * b * b);
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd base_principal_curvatures_fd(const ParallelFamily& fam, const Eigen::VectorXd& u,
                                             double s, double fd_step) {
  const auto pos = [&](const Eigen::VectorXd& y) { return parallel_point(fam, y, s); };
  const auto nrm = [&](const Eigen::VectorXd& y) { return parallel_normal(fam, y, s); };
  const auto tangents = central_differences(pos, u, fd_step);
  const Eigen::MatrixXd G = gram(tangents);
  const Eigen::MatrixXd B = second_form(central_differences(nrm, u, fd_step), tangents);
  return principal_curvatures(G, B);
}

double smallest_jacobian_singular_value(const ParallelFamily& fam, const Eigen::VectorXd& u,
                                        double s, double fd_step) {
  const auto pos = [&](const Eigen::VectorXd& y) { return parallel_point(fam, y, s); };
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram(central_differences(pos, u, fd_step)),
                                                    Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(es.eigenvalues().minCoeff(), 0.0));
}

}  // namespace qxr
