#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "qxr/errors.hpp"
#include "qxr/profile.hpp"
#include "qxr/quadrature.hpp"

using namespace qxr;
using qxr::testing::entry;

namespace {

IsoparametricH hs_of(int eps, int n, CatalogEntry e) {
  return parallel_mean_curvature(ParallelFamily(make_base(e, Signature(eps, n))));
}

// Closed form of int_0^s H: -sum m_i log|C - k_i S|.
double log_integral(const IsoparametricH& H, double s) {
  auto cs = cs_pair(H.epsilon(), s);
  double acc = 0.0;
  for (const auto& k : H.base_curvatures()) acc -= k.multiplicity * std::log(std::abs(cs.c - k.value * cs.s));
  return acc;
}

}  // namespace

TEST(Quadrature, SimpsonAndHermite) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 2.0, 1e-12),
              std::exp(2.0) - 1.0, 1e-11);
  EXPECT_EQ(adaptive_simpson([](double x) { return x; }, 1.0, 1.0, 1e-12), 0.0);
  // cubic reproduced exactly
  auto f = [](double x) { return x * x * x - x; };
  auto df = [](double x) { return 3 * x * x - 1; };
  const double t = 0.4;  // x = 0.9 on [0.5, 1.5]
  EXPECT_NEAR(Hermite::value(t, 1.0, f(0.5), df(0.5), f(1.5), df(1.5)), f(0.9), 1e-14);
  EXPECT_NEAR(Hermite::slope(t, 1.0, f(0.5), df(0.5), f(1.5), df(1.5)), df(0.9), 1e-13);
}

TEST(ParallelMeanCurvature, Examples) {
  EXPECT_EQ(hs_of(0, 3, entry(BaseKind::Hyperplane))(1.7), 0.0);
  auto circle = hs_of(0, 2, entry(BaseKind::RoundSphere, 1.0));
  for (double s : {0.0, 0.5, 1.0}) EXPECT_NEAR(circle(s), -1.0 / (1.0 + s), 1e-15);
  auto eq = hs_of(1, 2, entry(BaseKind::Equator));
  EXPECT_EQ(eq(0.0), 0.0);
  for (double s : {-0.6, 0.4, 1.1}) EXPECT_NEAR(std::abs(eq(s)), std::abs(std::tan(s)), 1e-14);
  auto horo = hs_of(-1, 3, entry(BaseKind::Horosphere));
  for (double s : {-1.0, 0.0, 2.0}) EXPECT_NEAR(horo(s), 2.0, 1e-13);
  auto cl = hs_of(1, 3, entry(BaseKind::CliffordTorus, 1 / std::sqrt(2.0), 1, 1));
  EXPECT_NEAR(cl(0.0), 0.0, 1e-15);
  EXPECT_NEAR(cl.regular().hi, std::numbers::pi / 4, 1e-15);
}

TEST(ParallelMeanCurvature, DerivativeOfLogIntegral) {
  // d/ds of the closed form equals Hs
  const double h = 1e-5;
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto H = parallel_mean_curvature(fx.family());
    for (double s : {-0.1, 0.05, 0.2}) {
      if (!H.regular().contains(s)) continue;
      const double fd = (log_integral(H, s + h) - log_integral(H, s - h)) / (2 * h);
      EXPECT_NEAR(fd, H(s), 1e-8) << fx.name;
    }
  }
}

TEST(LinearProfile, Examples) {
  auto p = linear_profile(1.0).eval(2.0);
  EXPECT_EQ(p.a, 2.0);
  EXPECT_EQ(p.da, 1.0);
  EXPECT_EQ(p.dda, 0.0);
  auto q = linear_profile(-3.0).eval(0.0);
  EXPECT_EQ(q.a, 0.0);
  EXPECT_EQ(q.da, -3.0);
  EXPECT_DOUBLE_EQ(1.0 / profile_b(1.0), 1.0 / std::sqrt(2.0));
  EXPECT_THROW(linear_profile(0.0), InputError);
  EXPECT_EQ(linear_profile(2.0).variant(), ProfileVariant::Linear);
  EXPECT_TRUE(linear_profile(2.0).in_domain(1e9));
}

TEST(SolveCmc, LinearExact) {
  auto p = solve_cmc(0.0, IsoparametricH::zero(), 0.0, 1.0, {-1, 1}, 1e-3);
  for (double s : {-0.9, -0.3337, 0.0, 0.5, 0.999}) {
    auto v = p.eval(s);
    EXPECT_NEAR(v.a, s, 1e-12);
    EXPECT_NEAR(v.da, 1.0, 1e-12);
  }
}

TEST(SolveCmc, Rejections) {
  auto H = IsoparametricH::zero();
  EXPECT_THROW(solve_cmc(0.0, H, 0.0, 0.0, {-1, 1}, 1e-3), InputError);
  EXPECT_THROW(solve_cmc(0.0, H, 0.0, 1.0, {-1, 1}, 0.0), InputError);
  EXPECT_THROW(solve_cmc(0.0, H, 0.0, 1.0, {0.1, 1}, 1e-3), InputError);
  EXPECT_THROW(solve_cmc(0.0, H, 0.0, 1.0, {-1, INFINITY}, 1e-3), InputError);
  // interval beyond the focal point of the Clifford torus
  auto cl = hs_of(1, 3, entry(BaseKind::CliffordTorus, 1 / std::sqrt(2.0), 1, 1));
  EXPECT_THROW(solve_cmc(0.0, cl, 0.0, 1.0, {-0.5, 1.0}, 1e-3), InputError);
}

TEST(SolveCmc, BlowUpTruncatesOrFails) {
  // H = 1 over a flat base: circle of radius 1, a' = s/sqrt(1-s^2) shifted
  auto p = solve_cmc(1.0, IsoparametricH::zero(), 0.0, 1.0, {-3, 3}, 1e-3);
  EXPECT_TRUE(p.truncation().has_value());
  EXPECT_LT(p.domain().hi, 3.0);
  EXPECT_GT(p.domain().lo, -3.0);
  // huge slope blows up right away
  EXPECT_THROW(solve_cmc(1.0, IsoparametricH::zero(), 0.0, 1e7, {-1, 1}, 1e-3), NumericalError);
  EXPECT_THROW(p.eval(2.9), DomainError);
}

TEST(SolveCmc, CircleProfile) {
  // a'' = (1 + a'^2)^{3/2} with a'(0) = a1 has a'/b = s + a1/sqrt(1+a1^2)
  const double a1 = 0.5;
  auto p = solve_cmc(1.0, IsoparametricH::zero(), 0.0, a1, {-0.5, 0.3}, 1e-3);
  const double c = a1 / std::sqrt(1 + a1 * a1);
  for (double s : {-0.45, -0.1, 0.123, 0.29}) {
    const double w = s + c;
    EXPECT_NEAR(p.eval(s).da, w / std::sqrt(1 - w * w), 1e-9);
    EXPECT_NEAR(p.eval(s).a, std::sqrt(1 - c * c) - std::sqrt(1 - w * w), 1e-9);
  }
}

TEST(SolveCmc, OdeResidual) {
  std::mt19937_64 rng(4);
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto H = parallel_mean_curvature(fx.family());
    auto pr = fx.profile(H);
    if (pr.variant() != ProfileVariant::Cmc) continue;
    // recover the target from the residual definition at s = 0
    auto dom = pr.domain();
    std::uniform_real_distribution<double> U(dom.lo, dom.hi);
    double Ht = 0.0;
    for (double cand : {0.5, 1.0})
      if (std::abs(cmc_residual(pr, H, cand, 0.0)) < 1e-8) Ht = cand;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(cmc_residual(pr, H, Ht, U(rng))));
    EXPECT_LE(worst, 1e-7) << fx.name;
  }
}

TEST(SolveCmc, RoundTripOfMinimalIntegral) {
  // H_target = 0: a'^2/(1+a'^2) = h(0) exp(2 int H)
  for (auto [eps, n, e] : {std::tuple{0, 2, entry(BaseKind::RoundSphere, 1.0)},
                           std::tuple{1, 3, entry(BaseKind::CliffordTorus, 1 / std::sqrt(2.0), 1, 1)},
                           std::tuple{-1, 3, entry(BaseKind::Horosphere)}}) {
    auto H = hs_of(eps, n, e);
    auto p = solve_cmc(0.0, H, 0.0, 0.4, {-0.3, 0.3}, default_cmc_step({-0.3, 0.3}));
    const double h0 = 0.16 / 1.16;
    for (double s = -0.29; s < 0.29; s += 0.01) {
      const double da = p.eval(s).da;
      EXPECT_NEAR(da * da / (1 + da * da), h0 * std::exp(2 * log_integral(H, s)), 1e-7);
    }
  }
}

TEST(MinimalProfile, Rejections) {
  auto H = IsoparametricH::zero();
  EXPECT_THROW(minimal_profile(H, 0, 0.0, 1, {-1, 1}), InputError);
  EXPECT_THROW(minimal_profile(H, 0, 1.0, 1, {-1, 1}), InputError);
  EXPECT_THROW(minimal_profile(H, 0, 0.5, 0, {-1, 1}), InputError);
  EXPECT_THROW(minimal_profile(H, 0, 0.5, 1, {0.2, 1}), InputError);
}

TEST(MinimalProfile, FlatIsLinear) {
  auto p = minimal_profile(IsoparametricH::zero(), 0.7, 0.5, -1, {-2, 2});
  for (double s : {-1.9, 0.0, 0.3, 1.5}) {
    EXPECT_NEAR(p.eval(s).a, 0.7 - s, 1e-12);
    EXPECT_NEAR(p.eval(s).da, -1.0, 1e-12);
  }
}

TEST(MinimalProfile, InitialData) {
  auto H = hs_of(1, 2, entry(BaseKind::GeodesicSphere, 0.8));
  auto p = minimal_profile(H, 1.25, 0.3, 1, {-0.5, 0.5});
  EXPECT_EQ(p.eval(0.0).a, 1.25);
  EXPECT_NEAR(p.eval(0.0).da, std::sqrt(0.3 / 0.7), 1e-15);
}

TEST(MinimalProfile, Catenoid) {
  auto H = hs_of(0, 2, entry(BaseKind::RoundSphere, 1.0));
  auto p = minimal_profile(H, 0.0, 0.25, 1, {-0.4, 2.1});
  for (double s = -0.35; s <= 2.05; s += 0.05) {
    const double want = 0.5 * std::acosh(2 * (1 + s)) - 0.5 * std::acosh(2.0);
    EXPECT_NEAR(p.eval(s).a, want, 1e-8) << s;
  }
  // h reaches 1 at s = -1/2
  auto wide = minimal_profile(H, 0.0, 0.25, 1, {-0.9, 1.0});
  ASSERT_TRUE(wide.truncation().has_value());
  EXPECT_NEAR(wide.domain().lo, -0.5, 1e-4);
}

TEST(MinimalProfile, MatchesClosedFormAndOde) {
  std::mt19937_64 rng(8);
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto H = parallel_mean_curvature(fx.family());
    auto pr = fx.profile(H);
    if (pr.variant() != ProfileVariant::Minimal) continue;
    auto dom = pr.domain();
    const double h0 = std::pow(pr.eval(0.0).da, 2) / (1 + std::pow(pr.eval(0.0).da, 2));
    std::uniform_real_distribution<double> U(dom.lo, dom.hi);
    for (int i = 0; i < 200; ++i) {
      const double s = U(rng);
      auto v = pr.eval(s);
      const double h = h0 * std::exp(2 * log_integral(H, s));
      EXPECT_NEAR(v.da, std::sqrt(h / (1 - h)), 1e-9) << fx.name;
      EXPECT_LE(std::abs(cmc_residual(pr, H, 0.0, s)), 1e-6) << fx.name;
      // a'' against FD of a'
      const double e = 1e-5;
      EXPECT_NEAR(v.dda, (pr.eval(s + e).da - pr.eval(s - e).da) / (2 * e), 1e-6) << fx.name;
    }
  }
}

TEST(Profile, AgainstFiniteDifferences) {
  // a' and a'' are the derivatives of the interpolated a
  const double e = 1e-5;
  for (auto& fx : qxr::testing::fixture_matrix()) {
    auto pr = fx.profile(parallel_mean_curvature(fx.family()));
    for (double s : {-0.1234, 0.0517, 0.1499}) {
      if (!pr.in_domain(s - 2 * e) || !pr.in_domain(s + 2 * e)) continue;
      auto v = pr.eval(s);
      EXPECT_NEAR((pr.eval(s + e).a - pr.eval(s - e).a) / (2 * e), v.da, 1e-8) << fx.name;
      EXPECT_NEAR((pr.eval(s + e).da - pr.eval(s - e).da) / (2 * e), v.dda, 1e-5) << fx.name;
      EXPECT_GE(profile_b(v.da), 1.0);
    }
  }
}

TEST(Profile, EvaluationIsThreadSafe) {
  auto H = hs_of(1, 3, entry(BaseKind::CliffordTorus, 1 / std::sqrt(2.0), 1, 1));
  auto p = minimal_profile(H, 0.0, 0.25, 1, {-0.45, 0.45});
  std::vector<double> serial(64), parallel(64);
  for (int i = 0; i < 64; ++i) serial[i] = p.eval(-0.4 + 0.8 * i / 63.0).a;
#pragma omp parallel for
  for (int i = 0; i < 64; ++i) parallel[i] = p.eval(-0.4 + 0.8 * i / 63.0).a;
  EXPECT_EQ(serial, parallel);
}
