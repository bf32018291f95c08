#include "qxr/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qxr/errors.hpp"
#include "qxr/quadrature.hpp"

namespace qxr {

// ---------------------------------------------------------------------------
// IsoparametricH

IsoparametricH::IsoparametricH(int epsilon, std::vector<PrincipalCurvature> base_curvatures,
                               Interval regular)
    : epsilon_(epsilon), curvatures_(std::move(base_curvatures)), regular_(regular) {}

IsoparametricH IsoparametricH::zero() { return IsoparametricH(0, {}); }

double IsoparametricH::operator()(double s) const {
  const auto [c, sn] = cs_pair(epsilon_, s);
  double h = 0.0;
  for (const auto& k : curvatures_)
    h += k.multiplicity * (epsilon_ * sn + k.value * c) / (c - k.value * sn);
  return h;
}

IsoparametricH parallel_mean_curvature(const ParallelFamily& fam) {
  if (!fam.base().isoparametric())
    throw InputError("parallel mean curvature requires an isoparametric base");
  const Eigen::VectorXd u = 0.5 * (fam.base().chart_domain().lo + fam.base().chart_domain().hi);
  return IsoparametricH(fam.signature().epsilon(), fam.base().principal_curvatures(),
                        regularity_interval(fam, u));
}

double profile_b(double da) { return std::sqrt(1.0 + da * da); }

// ---------------------------------------------------------------------------
// ProfileFunction

struct ProfileFunction::State {
  ProfileVariant variant;
  Interval domain;
  std::optional<std::string> truncation;

  explicit State(ProfileVariant v) : variant(v) {}
  virtual ~State() = default;
  virtual ProfileSample eval(double s) const = 0;
};

ProfileVariant ProfileFunction::variant() const { return state_->variant; }
Interval ProfileFunction::domain() const { return state_->domain; }
const std::optional<std::string>& ProfileFunction::truncation() const { return state_->truncation; }

bool ProfileFunction::in_domain(double s) const {
  return s >= state_->domain.lo && s <= state_->domain.hi;
}

ProfileSample ProfileFunction::eval(double s) const {
  if (!in_domain(s)) {
    std::ostringstream os;
    os.precision(17);
    os << "s=" << s << " outside profile domain [" << state_->domain.lo << ", "
       << state_->domain.hi << "]";
    throw DomainError(os.str());
  }
  return state_->eval(s);
}

namespace {

void require_interval(const Interval& iv, const IsoparametricH& H, const char* who) {
  if (!iv.bounded()) throw InputError(std::string(who) + ": interval must be bounded");
  if (!(iv.lo < 0.0 && 0.0 < iv.hi))
    throw InputError(std::string(who) + ": interval must contain 0 in its interior");
  if (iv.lo < H.regular().lo || iv.hi > H.regular().hi) {
    std::ostringstream os;
    os.precision(17);
    os << who << ": interval (" << iv.lo << ", " << iv.hi
       << ") leaves the regularity interval of the parallel family (" << H.regular().lo << ", "
       << H.regular().hi << ")";
    throw InputError(os.str());
  }
}

struct LinearState final : ProfileFunction::State {
  double A;
  explicit LinearState(double a) : State(ProfileVariant::Linear), A(a) {}
  ProfileSample eval(double s) const override { return {A * s, A, 0.0}; }
};

// Uniform nodes s_k = (k - origin) * step holding (a, a', a'').
struct CmcState final : ProfileFunction::State {
  double step = 0.0;
  long origin = 0;
  std::vector<double> a, p, q;

  CmcState() : State(ProfileVariant::Cmc) {}

  ProfileSample eval(double s) const override {
    const long last = static_cast<long>(a.size()) - 1;
    long k = static_cast<long>(std::floor(s / step)) + origin;
    k = std::clamp(k, 0L, last - 1);
    const double sk = static_cast<double>(k - origin) * step;
    const double t = (s - sk) / step;
    return {Hermite::value(t, step, a[k], p[k], a[k + 1], p[k + 1]),
            Hermite::value(t, step, p[k], q[k], p[k + 1], q[k + 1]),
            Hermite::slope(t, step, p[k], q[k], p[k + 1], q[k + 1])};
  }
};

struct MinimalState final : ProfileFunction::State {
  IsoparametricH H;
  double a0 = 0.0, h0 = 0.5;
  int sign = 1;
  std::vector<double> t;     // knots, increasing, containing 0
  std::vector<double> hint;  // int_0^{t_j} H
  std::vector<double> aint;  // int_0^{t_j} sqrt(h / (1 - h))

  explicit MinimalState(IsoparametricH h) : State(ProfileVariant::Minimal), H(std::move(h)) {}

  std::size_t nearest(double s) const {
    auto it = std::lower_bound(t.begin(), t.end(), s);
    if (it == t.end()) return t.size() - 1;
    const auto j = static_cast<std::size_t>(it - t.begin());
    if (j > 0 && s - t[j - 1] < t[j] - s) return j - 1;
    return j;
  }

  double h_from(std::size_t j, double s) const {
    return h0 * std::exp(2.0 * (hint[j] + adaptive_simpson(H, t[j], s, kQuadratureTol)));
  }

  ProfileSample eval(double s) const override {
    const std::size_t j = nearest(s);
    auto root = [&](double x) {
      const double h = h_from(j, x);
      return std::sqrt(h / (1.0 - h));
    };
    const double a = a0 + sign * (aint[j] + adaptive_simpson(root, t[j], s, kQuadratureTol));
    const double h = h_from(j, s);
    const double da = sign * std::sqrt(h / (1.0 - h));
    const double dda = sign * H(s) * std::sqrt(h) / std::pow(1.0 - h, 1.5);
    return {a, da, dda};
  }
};

}  // namespace

ProfileFunction linear_profile(double A) {
  if (A == 0.0 || !std::isfinite(A))
    throw InputError("linear profile: slope A must be finite and nonzero (A = 0 gives a slice)");
  auto st = std::make_shared<LinearState>(A);
  st->domain = Interval{};
  return ProfileFunction(st);
}

double default_cmc_step(const Interval& interval) {
  return std::min(1e-3, interval.length() / 1000.0);
}

ProfileFunction solve_cmc(double H_target, const IsoparametricH& H, double a0, double a1,
                          const Interval& interval, double step) {
  if (a1 == 0.0 || !std::isfinite(a1))
    throw InputError("cmc profile: initial slope a1 must be finite and nonzero");
  if (!(step > 0.0)) throw InputError("cmc profile: step must be > 0");
  require_interval(interval, H, "cmc profile");

  auto rhs = [&](double s, double p) {
    const double w = 1.0 + p * p;
    return p * w * H(s) + H_target * w * std::sqrt(w);
  };

  struct Node {
    double a, p, q;
  };
  std::string stop_reason;
  double stop_at = 0.0;

  // Integrate in direction dir (+1 / -1) until the interval edge or blow-up.
  auto sweep = [&](int dir, double edge) {
    std::vector<Node> nodes;
    double a = a0, p = a1;
    const double h = dir * step;
    for (long k = 0;; ++k) {
      const double s = dir * static_cast<double>(k) * step;
      const double s1 = dir * static_cast<double>(k + 1) * step;
      if (dir > 0 ? !(s1 < edge) : !(s1 > edge)) break;
      const double k1a = p, k1p = rhs(s, p);
      const double k2a = p + 0.5 * h * k1p, k2p = rhs(s + 0.5 * h, p + 0.5 * h * k1p);
      const double k3a = p + 0.5 * h * k2p, k3p = rhs(s + 0.5 * h, p + 0.5 * h * k2p);
      const double k4a = p + h * k3p, k4p = rhs(s1, p + h * k3p);
      const double an = a + h / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
      const double pn = p + h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
      const double qn = rhs(s1, pn);
      if (!std::isfinite(an) || !std::isfinite(pn) || !std::isfinite(qn) ||
          std::abs(pn) > kCmcMaxSlope) {
        std::ostringstream os;
        os.precision(17);
        os << "cmc profile truncated at s=" << s << " ("
           << (std::abs(pn) > kCmcMaxSlope ? "|a'| exceeds 1e6" : "non-finite right-hand side")
           << " at the next step)";
        if (stop_reason.empty() || std::abs(s) < std::abs(stop_at)) stop_at = s;
        stop_reason += (stop_reason.empty() ? "" : "; ") + os.str();
        break;
      }
      a = an;
      p = pn;
      nodes.push_back({an, pn, qn});
    }
    return nodes;
  };

  const double q0 = rhs(0.0, a1);
  if (!std::isfinite(q0)) throw NumericalError("profile blow-up: right-hand side not finite at s=0");
  const auto fwd = sweep(+1, interval.hi);
  const auto bwd = sweep(-1, interval.lo);
  if (fwd.empty() || bwd.empty()) {
    if (!stop_reason.empty())
      throw NumericalError("profile blow-up before covering a neighborhood of s=0: " + stop_reason);
    throw InputError("cmc profile: interval too short about 0 for step");
  }

  auto st = std::make_shared<CmcState>();
  st->step = step;
  st->origin = static_cast<long>(bwd.size());
  for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
    st->a.push_back(it->a);
    st->p.push_back(it->p);
    st->q.push_back(it->q);
  }
  st->a.push_back(a0);
  st->p.push_back(a1);
  st->q.push_back(q0);
  for (const auto& n : fwd) {
    st->a.push_back(n.a);
    st->p.push_back(n.p);
    st->q.push_back(n.q);
  }
  st->domain = {-static_cast<double>(bwd.size()) * step, static_cast<double>(fwd.size()) * step};
  if (!stop_reason.empty()) st->truncation = stop_reason;
  return ProfileFunction(st);
}

ProfileFunction minimal_profile(const IsoparametricH& H, double a0, double h0, int sign,
                                const Interval& interval) {
  if (!(h0 > 0.0 && h0 < 1.0)) throw InputError("minimal profile: requires 0 < h0 < 1");
  if (sign != 1 && sign != -1) throw InputError("minimal profile: sign must be +1 or -1");
  require_interval(interval, H, "minimal profile");

  auto st = std::make_shared<MinimalState>(H);
  st->a0 = a0;
  st->h0 = h0;
  st->sign = sign;
  const double spacing = std::min(1e-3, interval.length() / 1000.0);
  std::vector<std::string> notes;

  struct Knot {
    double t, hint, aint;
  };
  auto sweep = [&](int dir, double edge) {
    std::vector<Knot> out;
    Knot prev{0.0, 0.0, 0.0};
    auto h_at = [&](double x) {
      return h0 * std::exp(2.0 * (prev.hint + adaptive_simpson(H, prev.t, x, kQuadratureTol)));
    };
    auto root = [&](double x) {
      const double h = h_at(x);
      return std::sqrt(h / (1.0 - h));
    };
    for (long j = 1;; ++j) {
      double tn = dir * static_cast<double>(j) * spacing;
      if (dir > 0 ? !(tn < edge) : !(tn > edge)) break;
      bool cut = false;
      const double hn = h_at(tn);
      if (!(hn < kMinimalHCap)) {
        // Bisect for h(t) = 1 - 1e-9 inside (prev.t, tn).
        double good = prev.t, bad = tn;
        for (int it = 0; it < 200 && good != bad; ++it) {
          const double mid = 0.5 * (good + bad);
          if (mid == good || mid == bad) break;
          (h_at(mid) < kMinimalHCap ? good : bad) = mid;
        }
        tn = good;
        cut = true;
        std::ostringstream os;
        os.precision(17);
        os << "minimal profile truncated at s=" << tn << " (h reaches 1 - 1e-9)";
        notes.push_back(os.str());
        if (tn == prev.t) break;
      }
      Knot next{tn, prev.hint + adaptive_simpson(H, prev.t, tn, kQuadratureTol),
                prev.aint + adaptive_simpson(root, prev.t, tn, kQuadratureTol)};
      out.push_back(next);
      prev = next;
      if (cut) break;
    }
    return out;
  };

  const auto fwd = sweep(+1, interval.hi);
  const auto bwd = sweep(-1, interval.lo);
  for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
    st->t.push_back(it->t);
    st->hint.push_back(it->hint);
    st->aint.push_back(it->aint);
  }
  st->t.push_back(0.0);
  st->hint.push_back(0.0);
  st->aint.push_back(0.0);
  for (const auto& k : fwd) {
    st->t.push_back(k.t);
    st->hint.push_back(k.hint);
    st->aint.push_back(k.aint);
  }
  if (st->t.size() < 3 || bwd.empty() || fwd.empty())
    throw NumericalError("minimal profile: domain about 0 is empty");
  st->domain = {st->t.front(), st->t.back()};
  if (!notes.empty()) {
    std::string all = notes.front();
    for (std::size_t i = 1; i < notes.size(); ++i) all += "; " + notes[i];
    st->truncation = all;
  }
  return ProfileFunction(st);
}

double cmc_residual(const ProfileFunction& profile, const IsoparametricH& H, double H_target,
                    double s) {
  const ProfileSample v = profile.eval(s);
  const double w = 1.0 + v.da * v.da;
  return v.dda - v.da * w * H(s) - H_target * w * std::sqrt(w);
}

}  // namespace qxr
