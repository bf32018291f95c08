#include "qxr/ambient.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qxr/errors.hpp"

namespace qxr {

Signature::Signature(int epsilon, int n) : epsilon_(epsilon), n_(n) {
  if (epsilon < -1 || epsilon > 1)
    throw InputError("epsilon must be -1, 0 or 1 (got " + std::to_string(epsilon) + ")");
  if (n < 2) throw InputError("n must be at least 2 (got " + std::to_string(n) + ")");
}

AmbientVector::AmbientVector(const Signature& sig)
    : sig_(sig), coords_(Eigen::VectorXd::Zero(sig.ambient_dim())) {}

AmbientVector::AmbientVector(const Signature& sig, Eigen::VectorXd coords)
    : sig_(sig), coords_(std::move(coords)) {
  if (coords_.size() != sig_.ambient_dim())
    throw std::invalid_argument("ambient vector has " + std::to_string(coords_.size()) +
                                " coordinates, signature requires " +
                                std::to_string(sig_.ambient_dim()));
}

AmbientVector AmbientVector::basis(const Signature& sig, int index) {
  AmbientVector v(sig);
  v.coords_[index] = 1.0;
  return v;
}

AmbientVector AmbientVector::vertical(const Signature& sig) {
  return basis(sig, sig.vertical_index());
}

AmbientVector AmbientVector::space_part() const {
  AmbientVector v = *this;
  v.coords_[sig_.vertical_index()] = 0.0;
  return v;
}

static void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw std::invalid_argument("ambient vectors with different signatures");
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
  require_same(sig_, o.sig_);
  coords_ += o.coords_;
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) {
  require_same(sig_, o.sig_);
  coords_ -= o.coords_;
  return *this;
}

AmbientVector& AmbientVector::operator*=(double k) {
  coords_ *= k;
  return *this;
}

double inner(const AmbientVector& u, const AmbientVector& v) {
  require_same(u.signature(), v.signature());
  double d = u.coords().dot(v.coords());
  if (u.signature().lorentzian()) d -= 2.0 * u[0] * v[0];
  return d;
}

double norm(const AmbientVector& v) { return std::sqrt(std::abs(inner(v, v))); }

CsPair cs_pair(int epsilon, double s) {
  switch (epsilon) {
    case 1:
      return {std::cos(s), std::sin(s)};
    case 0:
      return {1.0, s};
    case -1:
      return {std::cosh(s), std::sinh(s)};
    default:
      throw InputError("epsilon must be -1, 0 or 1");
  }
}

bool on_space_form(const AmbientVector& p, double tol) {
  const Signature& sig = p.signature();
  if (sig.epsilon() == 0) return true;
  const AmbientVector q = p.space_part();
  if (std::abs(inner(q, q) - sig.epsilon()) > tol) return false;
  return sig.epsilon() == 1 || q[0] > 0.0;
}

}  // namespace qxr
