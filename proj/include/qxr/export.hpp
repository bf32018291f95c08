#pragma once

// Grid sampling of a construction and CSV / OBJ / profile-table writers.
// Numbers are written with 17 significant digits.

#include <Eigen/Core>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qxr/config.hpp"
#include "qxr/report.hpp"

namespace qxr {

struct GridNode {
  Eigen::VectorXd x;                     // (u_1, ..., u_{n-1}, s)
  std::optional<Eigen::VectorXd> coords;  // ambient coordinates of f, empty if irregular
  double nu = 0.0;
};

struct GridData {
  std::vector<int> dims;  // u resolutions followed by the s resolution
  std::vector<GridNode> nodes;  // row-major, s fastest
  int skipped = 0;
};

// Regular grid over the chart box and s_range clipped to the regular s interval.
GridData sample_grid(const ProductHypersurface& ph, const GridSpec& grid, Execution exec);

void write_grid_csv(std::ostream& out, const GridData& grid, const Signature& sig);
// Triangle mesh of a surface in R^3 (n = 2, eps = 0 only).
void write_obj(std::ostream& out, const GridData& grid, const Signature& sig);

struct ProfileRow {
  double s, a, da, dda, b, nu, Hs, ode_residual;
};

struct ProfileTable {
  std::vector<ProfileRow> rows;
  std::vector<std::string> notes;  // truncation and cross-check summaries
  std::optional<double> cross_check_delta;
};

// Profile sampled on grid.s_range (clipped to the profile domain). For cmc
// with H = 0 and for minimal profiles the other variant is solved with
// matching data and max |delta a| is reported.
ProfileTable tabulate_profile(const Config& cfg);
void write_profile_csv(std::ostream& out, const ProfileTable& table);

std::string format_double(double v);

}  // namespace qxr
