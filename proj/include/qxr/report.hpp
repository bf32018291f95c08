#pragma once

// Seeded verification runs over sampled points of a hypersurface.
//
// Sample evaluation is the data-parallel kernel of the toolkit: each point is
// measured independently. evaluate_samples has a serial reference path and an
// OpenMP path; both produce identical results in identical order.

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qxr/construct.hpp"

namespace qxr {

enum class Execution { Serial, Parallel };

struct ReportOptions {
  int samples = 100;
  double fd_step = 1e-4;
  double tol = 1e-5;
  std::uint64_t seed = 1;
  std::string config_digest;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;  // max over samples
  double tolerance = 0.0;
  bool passed = false;
};

struct SampleResult {
  int index = 0;
  Eigen::VectorXd point;
  std::vector<double> residuals;  // aligned with VerificationReport::checks
  std::optional<std::string> error;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<SampleResult> samples;
  double fd_step = 0.0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string config_digest;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Uniform points of the domain box kept 2 fd_step away from its faces,
// rejecting irregular points. Throws InputError if no regular point is found.
std::vector<Eigen::VectorXd> sample_points(const Hypersurface& surf, int count, double fd_step,
                                           std::uint64_t seed);

// Names of the checks applied to surf (the analytic checks only for products).
std::vector<std::string> check_names(const Hypersurface& surf, bool product);

std::vector<SampleResult> evaluate_samples(const Hypersurface& surf,
                                           const ProductHypersurface* product,
                                           const std::vector<Eigen::VectorXd>& points,
                                           double fd_step, Execution exec);

VerificationReport run_report(const ProductHypersurface& ph, const ReportOptions& opts,
                              Execution exec = Execution::Parallel);
// Generic checks only; used for hypersurfaces that are not product constructions.
VerificationReport run_report(const Hypersurface& surf, const ReportOptions& opts,
                              Execution exec = Execution::Parallel);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace qxr
