#pragma once

// Flat ambient space E^{n+2} containing Q_eps^n x R.
//
// Coordinates: the space-form component occupies indices 0..q-1 and the
// vertical direction d/dt is the last index. For eps = +-1 the space form is
// the quadric <p,p> = eps in R^{n+1} (eps = 1) or L^{n+1} (eps = -1, upper
// sheet, coordinate 0 timelike). For eps = 0 the space form is R^n itself and
// the ambient space is R^{n+1}.

#include <Eigen/Core>

#include <cstddef>

namespace qxr {

inline constexpr double kMembershipTol = 1e-9;

class Signature {
 public:
  Signature(int epsilon, int n);

  int epsilon() const { return epsilon_; }
  // Dimension of the space form Q_eps^n.
  int n() const { return n_; }
  int ambient_dim() const { return epsilon_ == 0 ? n_ + 1 : n_ + 2; }
  // Number of coordinates carrying the space-form component.
  int space_dim() const { return ambient_dim() - 1; }
  int vertical_index() const { return ambient_dim() - 1; }
  bool lorentzian() const { return epsilon_ == -1; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int epsilon_;
  int n_;
};

class AmbientVector {
 public:
  explicit AmbientVector(const Signature& sig);
  AmbientVector(const Signature& sig, Eigen::VectorXd coords);

  static AmbientVector basis(const Signature& sig, int index);
  // The unit vertical field d/dt.
  static AmbientVector vertical(const Signature& sig);

  const Signature& signature() const { return sig_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }

  double operator[](Eigen::Index i) const { return coords_[i]; }
  double& operator[](Eigen::Index i) { return coords_[i]; }

  double height() const { return coords_[sig_.vertical_index()]; }
  // Same vector with the vertical coordinate zeroed.
  AmbientVector space_part() const;

  AmbientVector& operator+=(const AmbientVector& o);
  AmbientVector& operator-=(const AmbientVector& o);
  AmbientVector& operator*=(double k);

  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator*(AmbientVector a, double k) { return a *= k; }
  friend AmbientVector operator*(double k, AmbientVector a) { return a *= k; }
  friend AmbientVector operator/(AmbientVector a, double k) { return a *= 1.0 / k; }
  friend AmbientVector operator-(AmbientVector a) { return a *= -1.0; }

 private:
  Signature sig_;
  Eigen::VectorXd coords_;
};

// Flat metric of E^{n+2}: Euclidean for eps in {0,1}, Lorentzian with the
// negative sign on coordinate 0 for eps = -1. Throws std::invalid_argument on
// mismatched signatures.
double inner(const AmbientVector& u, const AmbientVector& v);

// |<v,v>|^(1/2); only meaningful for vectors of definite causal character.
double norm(const AmbientVector& v);

struct CsPair {
  double c;
  double s;
};

// (C_eps(s), S_eps(s)): (cos, sin), (1, s), (cosh, sinh) for eps = 1, 0, -1.
// C^2 + eps S^2 = 1, C' = -eps S, S' = C.
CsPair cs_pair(int epsilon, double s);

// Membership of the space-form component of p in Q_eps^n.
bool on_space_form(const AmbientVector& p, double tol = kMembershipTol);

}  // namespace qxr
