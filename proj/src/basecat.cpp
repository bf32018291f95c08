#include "qxr/basecat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qxr/errors.hpp"

namespace qxr {

bool Box::contains(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) return false;
  return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
}

Eigen::VectorXd Box::lerp(const Eigen::VectorXd& unit) const {
  return lo.array() + unit.array() * (hi - lo).array();
}

namespace {

const std::array<KindInfo, 8>& kinds_table() {
  static const std::array<KindInfo, 8> table{{
      {BaseKind::GeodesicSphere, "geodesic_sphere", "r > 0 (r < pi when epsilon=1)", {1, 0, -1}},
      {BaseKind::Equator, "equator", "no parameters", {1}},
      {BaseKind::CliffordTorus, "clifford_torus", "p, q >= 0 integers with p + q = n - 1; 0 < r < 1", {1}},
      {BaseKind::Hyperplane, "hyperplane", "no parameters", {0, -1}},
      {BaseKind::RoundSphere, "round_sphere", "r > 0", {0}},
      {BaseKind::Horosphere, "horosphere", "no parameters", {-1}},
      {BaseKind::Equidistant, "equidistant", "d real (d = 0 is totally geodesic)", {-1}},
      {BaseKind::HyperbolicGeodesicSphere, "hyperbolic_geodesic_sphere", "r > 0", {-1}},
  }};
  return table;
}

[[noreturn]] void reject(const KindInfo& info, const std::string& what) {
  throw InputError(std::string(info.name) + ": " + what);
}

// Unit vectors of S^k placed at coordinates [offset, offset + k] of an ambient vector.
void place(Eigen::VectorXd& dst, int offset, const Eigen::VectorXd& src, double scale) {
  dst.segment(offset, src.size()) += scale * src;
}

std::vector<PrincipalCurvature> merge(std::vector<PrincipalCurvature> in) {
  std::vector<PrincipalCurvature> out;
  std::sort(in.begin(), in.end(), [](auto& a, auto& b) { return a.value < b.value; });
  for (const auto& c : in) {
    if (c.multiplicity == 0) continue;
    if (!out.empty() && std::abs(out.back().value - c.value) <= 1e-12)
      out.back().multiplicity += c.multiplicity;
    else
      out.push_back(c);
  }
  return out;
}

Box cube(int dim, double half) {
  return {Eigen::VectorXd::Constant(dim, -half), Eigen::VectorXd::Constant(dim, half)};
}

// Geodesic sphere of radius r about e_0 (eps = +-1) or the origin (eps = 0),
// normal pointing away from the center.
BaseHypersurface geodesic_sphere(const Signature& sig, const CatalogEntry& e, double r,
                                 bool exact_equator) {
  const int k = sig.n() - 1;
  const int eps = sig.epsilon();
  auto [c, s] = cs_pair(eps, r);
  if (exact_equator) {
    c = 0.0;
    s = 1.0;
  }
  const int offset = eps == 0 ? 0 : 1;
  auto eval = [sig, k, eps, c, s, offset](const Eigen::VectorXd& u) {
    const Eigen::VectorXd w = sphere_chart(u.head(k));
    AmbientVector g(sig), nrm(sig);
    Eigen::VectorXd gc = Eigen::VectorXd::Zero(sig.ambient_dim());
    Eigen::VectorXd nc = gc;
    if (eps == 0) {
      place(gc, 0, w, s);
      place(nc, 0, w, 1.0);
    } else {
      gc[0] = c;
      nc[0] = -eps * s;
      place(gc, offset, w, s);
      place(nc, offset, w, c);
    }
    return BaseFrame{AmbientVector(sig, gc), AmbientVector(sig, nc)};
  };
  return BaseHypersurface(sig, e, sphere_chart_box(k, kChartMargin), eval, {{-c / s, k}});
}

}  // namespace

std::span<const KindInfo> catalog_kinds() { return kinds_table(); }

const KindInfo& kind_info(BaseKind kind) {
  for (const auto& k : kinds_table())
    if (k.kind == kind) return k;
  throw InputError("unknown base kind");
}

BaseKind parse_kind(std::string_view name) {
  for (const auto& k : kinds_table())
    if (k.name == name) return k.kind;
  throw InputError("unknown base kind '" + std::string(name) + "'");
}

bool kind_allows(BaseKind kind, int epsilon) {
  const auto& eps = kind_info(kind).epsilons;
  return std::find(eps.begin(), eps.end(), epsilon) != eps.end();
}

Eigen::VectorXd sphere_chart(const Eigen::Ref<const Eigen::VectorXd>& angles) {
  const Eigen::Index k = angles.size();
  Eigen::VectorXd w(k + 1);
  double prod = 1.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    w[i] = prod * std::cos(angles[i]);
    prod *= std::sin(angles[i]);
  }
  w[k] = prod;
  return w;
}

Box sphere_chart_box(int k, double margin) {
  Box b{Eigen::VectorXd(k), Eigen::VectorXd(k)};
  for (int i = 0; i < k; ++i) {
    if (i + 1 < k) {
      b.lo[i] = margin;
      b.hi[i] = std::numbers::pi - margin;
    } else {
      b.lo[i] = -std::numbers::pi + margin;
      b.hi[i] = std::numbers::pi - margin;
    }
  }
  return b;
}

BaseHypersurface::BaseHypersurface(Signature sig, CatalogEntry entry, Box chart, Evaluator eval,
                                   std::vector<PrincipalCurvature> curvatures)
    : sig_(sig),
      entry_(entry),
      chart_(std::move(chart)),
      eval_(std::move(eval)),
      curvatures_(merge(std::move(curvatures))) {}

std::vector<PrincipalCurvature> BaseHypersurface::principal_curvatures(
    const Eigen::VectorXd& /*u*/) const {
  return curvatures_;
}

BaseHypersurface make_base(const CatalogEntry& e, const Signature& sig) {
  const KindInfo& info = kind_info(e.kind);
  const int eps = sig.epsilon();
  if (!kind_allows(e.kind, eps)) {
    std::ostringstream os;
    os << "not available for epsilon=" << eps << " (allowed epsilon:";
    for (int v : info.epsilons) os << ' ' << v;
    os << ')';
    reject(info, os.str());
  }
  const int k = sig.n() - 1;

  switch (e.kind) {
    case BaseKind::GeodesicSphere:
    case BaseKind::RoundSphere:
    case BaseKind::HyperbolicGeodesicSphere:
      if (!(e.r > 0.0)) reject(info, "radius r must be > 0");
      if (eps == 1 && !(e.r < std::numbers::pi)) reject(info, "radius r must be < pi on the sphere");
      return geodesic_sphere(sig, e, e.r, false);

    case BaseKind::Equator:
      return geodesic_sphere(sig, e, std::numbers::pi / 2, true);

    case BaseKind::CliffordTorus: {
      if (e.p < 0 || e.q < 0 || e.p + e.q != k)
        reject(info, "requires p, q >= 0 with p + q = n - 1 = " + std::to_string(k));
      if (!(e.r > 0.0 && e.r < 1.0)) reject(info, "requires 0 < r < 1");
      const double r1 = e.r;
      const double r2 = std::sqrt(1.0 - e.r * e.r);
      const int p = e.p, q = e.q;
      auto eval = [sig, p, q, r1, r2](const Eigen::VectorXd& u) {
        const Eigen::VectorXd w1 = sphere_chart(u.head(p));
        const Eigen::VectorXd w2 = sphere_chart(u.segment(p, q));
        Eigen::VectorXd gc = Eigen::VectorXd::Zero(sig.ambient_dim());
        Eigen::VectorXd nc = gc;
        place(gc, 0, w1, r1);
        place(gc, p + 1, w2, r2);
        place(nc, 0, w1, r2);
        place(nc, p + 1, w2, -r1);
        return BaseFrame{AmbientVector(sig, gc), AmbientVector(sig, nc)};
      };
      Box b1 = sphere_chart_box(p, kChartMargin);
      Box b2 = sphere_chart_box(q, kChartMargin);
      Box chart{Eigen::VectorXd(k), Eigen::VectorXd(k)};
      chart.lo << b1.lo, b2.lo;
      chart.hi << b1.hi, b2.hi;
      return BaseHypersurface(sig, e, chart, eval, {{-r2 / r1, p}, {r1 / r2, q}});
    }

    case BaseKind::Hyperplane:
      if (eps == 0) {
        auto eval = [sig, k](const Eigen::VectorXd& u) {
          Eigen::VectorXd gc = Eigen::VectorXd::Zero(sig.ambient_dim());
          gc.head(k) = u.head(k);
          return BaseFrame{AmbientVector(sig, gc), AmbientVector::basis(sig, k)};
        };
        return BaseHypersurface(sig, e, cube(k, 1.0), eval, {{0.0, k}});
      }
      [[fallthrough]];  // totally geodesic H^{n-1}: equidistant at d = 0

    case BaseKind::Equidistant: {
      const double d = e.kind == BaseKind::Hyperplane ? 0.0 : e.d;
      if (!std::isfinite(d)) reject(info, "distance d must be finite");
      const double ch = std::cosh(d), sh = std::sinh(d);
      auto eval = [sig, k, ch, sh](const Eigen::VectorXd& u) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(sig.ambient_dim());
        p[0] = std::sqrt(1.0 + u.head(k).squaredNorm());
        p.segment(1, k) = u.head(k);
        Eigen::VectorXd en = Eigen::VectorXd::Zero(sig.ambient_dim());
        en[k + 1] = 1.0;
        return BaseFrame{AmbientVector(sig, ch * p + sh * en), AmbientVector(sig, sh * p + ch * en)};
      };
      return BaseHypersurface(sig, e, cube(k, 1.0), eval, {{-std::tanh(d), k}});
    }

    case BaseKind::Horosphere: {
      // Horosphere <g, l> = -1 for the null vector l = e_0 + e_n, with N = l - g.
      auto eval = [sig, k](const Eigen::VectorXd& u) {
        const double half = 0.5 * u.head(k).squaredNorm();
        Eigen::VectorXd gc = Eigen::VectorXd::Zero(sig.ambient_dim());
        gc[0] = 1.0 + half;
        gc.segment(1, k) = u.head(k);
        gc[k + 1] = half;
        Eigen::VectorXd l = Eigen::VectorXd::Zero(sig.ambient_dim());
        l[0] = 1.0;
        l[k + 1] = 1.0;
        return BaseFrame{AmbientVector(sig, gc), AmbientVector(sig, l - gc)};
      };
      return BaseHypersurface(sig, e, cube(k, 1.0), eval, {{1.0, k}});
    }
  }
  reject(info, "unhandled kind");
}

double mean_curvature_of_base(const BaseHypersurface& base, const Eigen::VectorXd& u) {
  double h = 0.0;
  for (const auto& c : base.principal_curvatures(u)) h += c.multiplicity * c.value;
  return h;
}

}  // namespace qxr
