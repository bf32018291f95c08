#include "qxr/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qxr/errors.hpp"
#include "qxr/verify.hpp"

namespace qxr {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// 53 random bits mapped to [0, 1); independent of the standard library's
// distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> evaluate_point(const Hypersurface& surf, const ProductHypersurface* ph,
                                   const Eigen::VectorXd& x, double fd_step) {
  const int eps = surf.signature().epsilon();
  const FundamentalData fd = measure_fundamental(surf, x, fd_step);
  const AmbientVector dt = AmbientVector::vertical(surf.signature());
  std::vector<double> r;

  // eta is unit, tangent to Q x R and normal to f.
  double eta_res = std::abs(inner(fd.eta, fd.eta) - 1.0);
  for (const auto& t : fd.tangents) eta_res = std::max(eta_res, std::abs(inner(fd.eta, t)) / norm(t));
  if (eps != 0) eta_res = std::max(eta_res, std::abs(inner(fd.eta, space_form_normal(surf.position(x)))));
  r.push_back(eta_res);

  const AmbientVector p = surf.position(x);
  r.push_back(eps == 0 ? 0.0 : std::abs(inner(p.space_part(), p.space_part()) - eps));

  r.push_back(asymmetry(fd.second_eta));
  if (eps != 0) r.push_back(asymmetry(*fd.second_xi));

  r.push_back(check_principal_direction(fd, fd.T));
  if (eps != 0) {
    r.push_back(check_flat_normal_bundle(fd));
    r.push_back(check_xi_spectrum(fd));
  }
  const NuResiduals nu = check_nu_identities(surf, fd);
  r.push_back(std::max(nu.chart, nu.normal_direction));

  if (ph) {
    const Eigen::Index k = x.size() - 1;
    const double s = x[k];
    const TangentialSplit split = eval_T_nu(*ph, x.head(k), s);
    const AmbientVector fs = ph->pushforward_s(x);

    // d/dt = f_* T + nu eta
    r.push_back(norm(split.T_coeff * fs + split.nu * fd.eta - dt));
    // |T|^2 + nu^2 = 1 with |f_* d/ds|^2 = b^2
    r.push_back(std::abs(split.T_coeff * split.T_coeff * inner(fs, fs) + split.nu * split.nu - 1.0));
    // FD gradient of the height function against T = (a'/b^2) d/ds
    Eigen::VectorXd t_analytic = Eigen::VectorXd::Zero(x.size());
    t_analytic[k] = split.T_coeff;
    const Eigen::VectorXd diff = fd.T - t_analytic;
    r.push_back(std::sqrt(std::max(diff.dot(fd.metric * diff), 0.0)));

    r.push_back(check_mean_curvature(fd, expected_mean_curvature(*ph, s)));
    r.push_back((principal_curvatures(fd.metric, fd.second_eta) -
                 expected_principal_curvatures(*ph, x))
                    .cwiseAbs()
                    .maxCoeff());
  }
  return r;
}

VerificationReport assemble(const Hypersurface& surf, const ProductHypersurface* ph,
                            const ReportOptions& opts, Execution exec) {
  if (opts.samples < 1) throw InputError("verify.samples must be >= 1");
  if (!(opts.fd_step > 0.0)) throw InputError("verify.fd_step must be > 0");
  if (!(opts.tol > 0.0)) throw InputError("verify.tol must be > 0");

  VerificationReport rep;
  rep.fd_step = opts.fd_step;
  rep.tol = opts.tol;
  rep.seed = opts.seed;
  rep.config_digest = opts.config_digest;

  const auto points = sample_points(surf, opts.samples, opts.fd_step, opts.seed);
  rep.samples = evaluate_samples(surf, ph, points, opts.fd_step, exec);

  const auto names = check_names(surf, ph != nullptr);
  int errors = 0;
  for (std::size_t c = 0; c < names.size(); ++c) {
    CheckResult res{names[c], 0.0, opts.tol, true};
    for (const auto& smp : rep.samples) {
      if (smp.error) continue;
      const double v = smp.residuals[c];
      if (!(v <= res.residual)) res.residual = std::isnan(v) ? INFINITY : v;
    }
    res.passed = res.residual <= opts.tol;
    rep.checks.push_back(res);
  }
  for (const auto& smp : rep.samples) errors += smp.error ? 1 : 0;
  rep.checks.push_back({"sample_evaluation", static_cast<double>(errors), 0.0, errors == 0});
  return rep;
}

}  // namespace

std::vector<Eigen::VectorXd> sample_points(const Hypersurface& surf, int count, double fd_step,
                                           std::uint64_t seed) {
  const Box& box = surf.domain();
  const double margin = 2.0 * fd_step * (1.0 + 1e-9);
  Box inner_box{box.lo.array() + margin, box.hi.array() - margin};
  if (((inner_box.hi - inner_box.lo).array() <= 0.0).any())
    throw InputError("empty regular domain: box thinner than the finite-difference margin");

  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  const int max_attempts = 1000 * count;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt >= max_attempts) throw InputError("empty regular domain: no regular sample found");
    Eigen::VectorXd t(box.dim());
    for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = unit(rng);
    Eigen::VectorXd x = inner_box.lerp(t);
    if (surf.is_regular(x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::string> check_names(const Hypersurface& surf, bool product) {
  const bool curved = surf.signature().epsilon() != 0;
  std::vector<std::string> names{"eta_unit_normal", "space_form_membership", "self_adjoint_eta"};
  if (curved) names.push_back("self_adjoint_xi");
  names.push_back("principal_direction");
  if (curved) {
    names.push_back("flat_normal_bundle");
    names.push_back("xi_spectrum");
  }
  names.push_back("nu_derivatives");
  if (product) {
    for (const char* n : {"ddt_decomposition", "unit_T_nu", "height_gradient", "mean_curvature",
                          "principal_curvatures"})
      names.push_back(n);
  }
  return names;
}

std::vector<SampleResult> evaluate_samples(const Hypersurface& surf,
                                           const ProductHypersurface* product,
                                           const std::vector<Eigen::VectorXd>& points,
                                           double fd_step, Execution exec) {
  const long n = static_cast<long>(points.size());
  std::vector<SampleResult> out(points.size());
  auto one = [&](long i) {
    SampleResult& r = out[i];
    r.index = static_cast<int>(i);
    r.point = points[i];
    try {
      r.residuals = evaluate_point(surf, product, points[i], fd_step);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  };
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) one(i);
  }
  return out;
}

VerificationReport run_report(const ProductHypersurface& ph, const ReportOptions& opts,
                              Execution exec) {
  return assemble(ph, &ph, opts, exec);
}

VerificationReport run_report(const Hypersurface& surf, const ReportOptions& opts,
                              Execution exec) {
  return assemble(surf, nullptr, opts, exec);
}

nlohmann::json to_json(const VerificationReport& report) {
  using nlohmann::json;
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  json samples = json::array();
  std::vector<std::string> names;
  for (const auto& c : report.checks) names.push_back(c.name);
  for (const auto& s : report.samples) {
    json pt = json::array();
    for (Eigen::Index i = 0; i < s.point.size(); ++i) pt.push_back(s.point[i]);
    json res = json::object();
    for (std::size_t i = 0; i < s.residuals.size(); ++i) res[names[i]] = s.residuals[i];
    json entry{{"index", s.index}, {"point", pt}, {"residuals", res}};
    entry["error"] = s.error ? json(*s.error) : json(nullptr);
    samples.push_back(entry);
  }
  return json{{"passed", report.passed()},
              {"config_digest", report.config_digest},
              {"fd_step", report.fd_step},
              {"tol", report.tol},
              {"seed", report.seed},
              {"sample_count", report.samples.size()},
              {"checks", checks},
              {"samples", samples}};
}

}  // namespace qxr
