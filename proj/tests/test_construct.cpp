#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "qxr/construct.hpp"
#include "qxr/errors.hpp"

using namespace qxr;
using qxr::testing::entry;

namespace {

ProductHypersurface equator_helix() {
  ParallelFamily fam(make_base(entry(BaseKind::Equator), Signature(1, 2)));
  return ProductHypersurface(fam, linear_profile(1.0), {-1.0, 1.0});
}

std::vector<Eigen::VectorXd> interior_points(const ProductHypersurface& ph, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.02, 0.98);
  std::vector<Eigen::VectorXd> out;
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd t(ph.domain().dim());
    for (auto& v : t) v = U(rng);
    Eigen::VectorXd x = ph.domain().lerp(t);
    if (ph.is_regular(x)) out.push_back(x);
  }
  return out;
}

AmbientVector fd_tangent(const Hypersurface& h, const Eigen::VectorXd& x, int j, double step) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(x.size());
  e[j] = step;
  return (h.position(x + e) - h.position(x - e)) / (2 * step);
}

}  // namespace

TEST(Construct, HelixOverGreatCircle) {
  auto ph = equator_helix();
  Eigen::VectorXd u = Eigen::VectorXd::Constant(1, 0.6);
  auto fr = ph.family().base().eval(u);
  for (double s : {-0.7, 0.0, 0.4}) {
    auto f = eval_f(ph, u, s);
    EXPECT_EQ(f.height(), s);
    auto q = std::cos(s) * fr.position + std::sin(s) * fr.normal;
    EXPECT_LE((f.space_part().coords() - q.coords()).norm(), 1e-15);
    EXPECT_TRUE(on_space_form(f));
  }
  auto eta = eval_eta(ph, u, 0.3);
  auto Ns = parallel_normal(ph.family(), u, 0.3);
  auto want = (-1 / std::sqrt(2.0)) * Ns + (1 / std::sqrt(2.0)) * AmbientVector::vertical(ph.signature());
  EXPECT_LE((eta.coords() - want.coords()).norm(), 1e-15);
  auto tn = eval_T_nu(ph, u, 0.3);
  EXPECT_DOUBLE_EQ(tn.T_coeff, 0.5);
  EXPECT_DOUBLE_EQ(tn.nu, 1 / std::sqrt(2.0));
}

TEST(Construct, HeightIsProfile) {
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto ph = fx.build();
    for (const auto& x : interior_points(ph, 20, 1)) {
      const double s = x[x.size() - 1];
      EXPECT_EQ(ph.position(x).height(), ph.profile().eval(s).a);
    }
  }
}

TEST(Construct, RejectsOutOfDomain) {
  auto cl = qxr::testing::fixture_matrix()[2];  // clifford minimal, U = (-pi/4, pi/4)
  ParallelFamily fam = cl.family();
  ProductHypersurface ph(fam, linear_profile(1.0), {-2.0, 2.0});
  EXPECT_NEAR(ph.s_interval().hi, std::numbers::pi / 4, 1e-12);
  Eigen::VectorXd x = join_point(Eigen::Vector2d(0.1, 0.1), std::numbers::pi / 4 - 1e-8);
  EXPECT_FALSE(ph.is_regular(x));
  const std::string why = ph.regularity_violation(x);
  EXPECT_NE(why.find("focal"), std::string::npos) << why;
  EXPECT_NE(why.find("0.785398"), std::string::npos) << why;
  EXPECT_THROW(eval_f(ph, Eigen::Vector2d(0.1, 0.1), std::numbers::pi / 4 - 1e-8), DomainError);
  EXPECT_THROW(eval_eta(ph, Eigen::Vector2d(0.1, 0.1), 3.0), DomainError);
  EXPECT_THROW(eval_T_nu(ph, Eigen::Vector2d(9.0, 0.1), 0.0), DomainError);

  // an s_range past the focal value is empty
  EXPECT_THROW(ProductHypersurface(fam, linear_profile(1.0), {1.0, 2.0}), InputError);
  EXPECT_THROW(ProductHypersurface(fam, linear_profile(1.0), {-0.5, INFINITY}), InputError);
}

TEST(Construct, XiRequiresCurvedSpaceForm) {
  auto plane = qxr::testing::fixture_matrix()[5].build();
  EXPECT_THROW(eval_xi(plane, Eigen::VectorXd::Constant(1, 0.0), 0.0), InputError);
  EXPECT_THROW(space_form_normal(plane.position(join_point(Eigen::VectorXd::Constant(1, 0.0), 0.0))),
               InputError);
}

TEST(Construct, NormalFields) {
  const double h = 1e-5;
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto ph = fx.build();
    const int eps = ph.signature().epsilon();
    for (const auto& x : interior_points(ph, 100, 2)) {
      Eigen::VectorXd u = x.head(x.size() - 1);
      const double s = x[x.size() - 1];
      auto eta = eval_eta(ph, u, s);
      EXPECT_NEAR(inner(eta, eta), 1.0, 1e-14) << fx.name;
      EXPECT_NEAR(inner(eta, ph.pushforward_s(x)), 0.0, 1e-14);
      for (Eigen::Index j = 0; j < x.size(); ++j)
        EXPECT_NEAR(inner(eta, fd_tangent(ph, x, static_cast<int>(j), h)), 0.0, 1e-7) << fx.name;
      if (eps != 0) {
        auto xi = eval_xi(ph, u, s);
        EXPECT_NEAR(inner(xi, xi), static_cast<double>(eps), 1e-12);
        EXPECT_NEAR(inner(xi, eta), 0.0, 1e-12);
        for (Eigen::Index j = 0; j < x.size(); ++j)
          EXPECT_NEAR(inner(xi, fd_tangent(ph, x, static_cast<int>(j), h)), 0.0, 1e-7) << fx.name;
      }
      // chart directions are orthogonal to f_* d/ds
      for (Eigen::Index j = 0; j + 1 < x.size(); ++j)
        EXPECT_NEAR(inner(fd_tangent(ph, x, static_cast<int>(j), h), ph.pushforward_s(x)), 0.0, 1e-7);
    }
  }
}

TEST(Construct, VerticalDecomposition) {
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto ph = fx.build();
    auto dt = AmbientVector::vertical(ph.signature());
    for (const auto& x : interior_points(ph, 1000, 3)) {
      Eigen::VectorXd u = x.head(x.size() - 1);
      const double s = x[x.size() - 1];
      auto tn = eval_T_nu(ph, u, s);
      auto fs = ph.pushforward_s(x);
      EXPECT_LE(norm(tn.T_coeff * fs + tn.nu * eval_eta(ph, u, s) - dt), 1e-8);
      EXPECT_NEAR(tn.T_coeff * tn.T_coeff * inner(fs, fs) + tn.nu * tn.nu, 1.0, 1e-10);
      EXPECT_GT(tn.nu, 0.0);
      EXPECT_LE(tn.nu, 1.0);
    }
  }
}

TEST(Construct, SteepLimit) {
  auto fam = qxr::testing::fixture_matrix()[5].family();
  ProductHypersurface ph(fam, linear_profile(1e6), {-1, 1});
  auto tn = eval_T_nu(ph, Eigen::VectorXd::Constant(1, 0.0), 0.0);
  EXPECT_LT(tn.nu, 1e-5);
  const double b = profile_b(1e6);
  EXPECT_NEAR(tn.T_coeff * b, 1.0, 1e-10);
}

TEST(Construct, NuDependsOnlyOnS) {
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto ph = fx.build();
    const Box& chart = ph.family().base().chart_domain();
    for (double s : {-0.1, 0.08}) {
      if (!ph.s_interval().contains(s)) continue;
      double lo = INFINITY, hi = -INFINITY;
      for (int k = 0; k < 20; ++k) {
        Eigen::VectorXd u = chart.lerp(Eigen::VectorXd::Constant(chart.dim(), 0.05 + 0.045 * k));
        const double nu = inner(eval_eta(ph, u, s), AmbientVector::vertical(ph.signature()));
        lo = std::min(lo, nu);
        hi = std::max(hi, nu);
      }
      EXPECT_LE(hi - lo, 1e-12) << fx.name;
    }
  }
}
