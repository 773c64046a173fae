#pragma once

#include <span>
#include <vector>

#include "howe/algebra.hpp"

namespace howe {

// Angle gap below which a torus point counts as singular.
inline constexpr double kSingularGap = 1e-9;

// diag(e^{i theta_1}, ..., e^{i theta_n}) in the compact torus, with the
// angles doubling as double-cover representatives.
struct TorusPoint {
  std::vector<double> angles;

  int size() const { return static_cast<int>(angles.size()); }
  AngleModulusPoint point(int j) const { return {1.0, angles[j]}; }
  cplx value(int j) const { return std::polar(1.0, angles[j]); }
};

// min_{i<j} |theta_i - theta_j| reduced mod 2*pi into [0, pi]; +inf for n < 2.
double min_angle_gap(std::span<const double> angles);
bool is_regular(const TorusPoint& t, double tol = kSingularGap);

// Point of the diagonal semigroup: moduli < 1 on the first p slots, > 1 on
// the last q.
struct SemigroupTorusPoint {
  int p = 0;
  int q = 0;
  std::vector<double> moduli;
  std::vector<double> angles;

  int size() const { return p + q; }
  AngleModulusPoint point(int a) const { return {moduli[a], angles[a]}; }
  cplx value(int a) const { return std::polar(moduli[a], angles[a]); }
  std::vector<cplx> values() const;
};

// Throws PreconditionError unless shapes match and the point lies in T'^{++}.
void validate(const SemigroupTorusPoint& tp);
SemigroupTorusPoint make_semigroup_point(int p, int q, std::vector<double> moduli,
                                         std::vector<double> angles);

struct NoncompactCartanPointU11 {
  double theta = 0.0;
  double X = 0.0;

  bool regular() const { return X != 0.0; }
  // diag(e^{i theta - X}, e^{i theta + X})
  std::vector<AngleModulusPoint> diagonal() const;
};

// Slots of H_k in U(p,q): p-k compact angles phi, k angles theta paired with
// k split parameters, and q-k compact angles tau.
struct CartanShape {
  int p = 0;
  int q = 0;
  int k = 0;
  std::vector<double> phi;
  std::vector<double> theta;
  std::vector<double> tau;
  std::vector<double> split;
};

void validate(const CartanShape& shape);

// Modulus test checked against positivity of F - g^* F g, F = Id_{p,q}.
// Throws NumericalDomainError on a zero entry and std::logic_error if the two
// tests disagree.
bool in_semigroup(std::span<const cplx> diag, int p, int q);

// prod_i t_i^{-(n-1)/2} prod_{i<j} (t_i - t_j)
cplx weyl_denominator(const TorusPoint& t);

// (g+1)/(g-1) entrywise. NumericalDomainError at g = 1.
std::vector<cplx> cayley(std::span<const cplx> g);

// prod_k (z_k/2)^{-1/2} on the principal branch of each factor.
cplx lambda_det(std::span<const cplx> z);

}  // namespace howe
