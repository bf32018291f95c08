#include "qxr/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qxr/errors.hpp"

namespace qxr {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

double axis(double lo, double hi, int i, int res) {
  if (i == res - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(res - 1);
}

}  // namespace

GridData sample_grid(const ProductHypersurface& ph, const GridSpec& grid, Execution exec) {
  const Box& chart = ph.family().base().chart_domain();
  const int k = static_cast<int>(chart.dim());
  if (static_cast<int>(grid.u_resolution.size()) != k)
    throw InputError("grid.u_resolution must have n - 1 entries");
  const Interval s = grid.s_range.intersect(ph.s_interval());
  if (!(s.lo < s.hi)) throw InputError("empty regular domain after clipping s_range");

  GridData out;
  out.dims = grid.u_resolution;
  out.dims.push_back(grid.s_resolution);
  long total = 1;
  for (int d : out.dims) total *= d;
  out.nodes.resize(total);

  auto one = [&](long idx) {
    long rest = idx;
    Eigen::VectorXd x(k + 1);
    for (int a = k; a >= 0; --a) {
      const int res = out.dims[a];
      const int i = static_cast<int>(rest % res);
      rest /= res;
      x[a] = a == k ? axis(s.lo, s.hi, i, res) : axis(chart.lo[a], chart.hi[a], i, res);
    }
    GridNode& node = out.nodes[idx];
    node.x = x;
    if (ph.is_regular(x)) {
      node.coords = ph.position(x).coords();
      node.nu = ph.normal(x).height();
    }
  };
  if (exec == Execution::Serial) {
    for (long i = 0; i < total; ++i) one(i);
  } else {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) one(i);
  }
  out.skipped = static_cast<int>(
      std::count_if(out.nodes.begin(), out.nodes.end(), [](auto& n) { return !n.coords; }));
  if (out.skipped == total) throw InputError("empty regular domain: no regular grid point");
  return out;
}

void write_grid_csv(std::ostream& out, const GridData& grid, const Signature& sig) {
  const int k = sig.n() - 1;
  for (int i = 0; i < k; ++i) out << 'u' << i + 1 << ',';
  out << 's';
  for (int i = 0; i < sig.ambient_dim(); ++i) out << ",x" << i;
  out << ",nu\n";
  for (const auto& node : grid.nodes) {
    if (!node.coords) continue;
    for (Eigen::Index i = 0; i < node.x.size(); ++i) out << (i ? "," : "") << format_double(node.x[i]);
    for (Eigen::Index i = 0; i < node.coords->size(); ++i) out << ',' << format_double((*node.coords)[i]);
    out << ',' << format_double(node.nu) << '\n';
  }
}

void write_obj(std::ostream& out, const GridData& grid, const Signature& sig) {
  if (sig.n() != 2 || sig.epsilon() != 0)
    throw InputError("OBJ export is only available for n=2, epsilon=0");
  const int nu = grid.dims[0], ns = grid.dims[1];
  std::vector<long> vid(grid.nodes.size(), 0);
  long next = 1;
  out << "# f(u, s) = g_s(u) + a(s) d/dt in R^3\n";
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const auto& c = grid.nodes[i].coords;
    if (!c) continue;
    out << "v " << format_double((*c)[0]) << ' ' << format_double((*c)[1]) << ' '
        << format_double((*c)[2]) << '\n';
    vid[i] = next++;
  }
  auto id = [&](int i, int j) { return vid[static_cast<std::size_t>(i) * ns + j]; };
  for (int i = 0; i + 1 < nu; ++i)
    for (int j = 0; j + 1 < ns; ++j) {
      const long a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      if (a && b && c) out << "f " << a << ' ' << b << ' ' << c << '\n';
      if (a && c && d) out << "f " << a << ' ' << c << ' ' << d << '\n';
    }
}

ProfileTable tabulate_profile(const Config& cfg) {
  const Signature sig(cfg.epsilon, cfg.n);
  const ParallelFamily fam(make_base(cfg.base, sig));
  const IsoparametricH H = parallel_mean_curvature(fam);
  const ProfileFunction profile = build_profile(cfg, H);
  const double target = cfg.profile.variant == ProfileVariant::Cmc ? cfg.profile.H : 0.0;

  ProfileTable table;
  if (profile.truncation()) table.notes.push_back("truncation: " + *profile.truncation());
  Interval s = cfg.grid.s_range.intersect(profile.domain());
  if (!(s.lo < s.hi)) throw InputError("grid.s_range misses the profile domain");
  const int res = cfg.grid.s_resolution;
  for (int i = 0; i < res; ++i) {
    const double x = axis(s.lo, s.hi, i, res);
    const ProfileSample v = profile.eval(x);
    const double b = profile_b(v.da);
    table.rows.push_back({x, v.a, v.da, v.dda, b, 1.0 / b, H(x), cmc_residual(profile, H, target, x)});
  }

  // Cross-oracle between the ODE solution and the closed minimal form.
  std::optional<ProfileFunction> other;
  const ProfileSpec& ps = cfg.profile;
  if (ps.variant == ProfileVariant::Cmc && ps.H == 0.0) {
    const double h0 = ps.a1 * ps.a1 / (1.0 + ps.a1 * ps.a1);
    other = minimal_profile(H, ps.a0, h0, ps.a1 > 0 ? 1 : -1, ps.interval);
  } else if (ps.variant == ProfileVariant::Minimal) {
    const double a1 = ps.sign * std::sqrt(ps.h0 / (1.0 - ps.h0));
    other = solve_cmc(0.0, H, ps.a0, a1, ps.interval, default_cmc_step(ps.interval));
  }
  if (other) {
    const Interval common = profile.domain().intersect(other->domain());
    double delta = 0.0;
    const int m = 2001;
    for (int i = 0; i < m; ++i) {
      const double x = axis(common.lo, common.hi, i, m);
      delta = std::max(delta, std::abs(profile.eval(x).a - other->eval(x).a));
    }
    table.cross_check_delta = delta;
    table.notes.push_back("cross_check max_abs_delta_a=" + format_double(delta) +
                          " (cmc H=0 vs minimal closed form)");
  }
  return table;
}

void write_profile_csv(std::ostream& out, const ProfileTable& table) {
  for (const auto& n : table.notes)
    if (n.rfind("truncation", 0) == 0) out << "# " << n << '\n';
  out << "s,a,da,dda,b,nu,Hs,ode_residual\n";
  for (const auto& r : table.rows)
    out << format_double(r.s) << ',' << format_double(r.a) << ',' << format_double(r.da) << ','
        << format_double(r.dda) << ',' << format_double(r.b) << ',' << format_double(r.nu) << ','
        << format_double(r.Hs) << ',' << format_double(r.ode_residual) << '\n';
  for (const auto& n : table.notes)
    if (n.rfind("truncation", 0) != 0) out << "# " << n << '\n';
}

}  // namespace qxr
