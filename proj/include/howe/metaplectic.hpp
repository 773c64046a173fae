#pragma once

#include <vector>

#include "howe/algebra.hpp"
#include "howe/tori.hpp"

namespace howe {

inline constexpr double kNearPole = 1e-12;

struct ThetaValue {
  cplx value;
  // Total argument carried by the half powers, unreduced. Together with the
  // rational part it pins the sheet.
  double sheetAngle = 0.0;
};

// Eigenvalues of t t' on W^+ = M((p+q) x n): line (a, b) carries t'_a / t_b
// for a <= p and t_b / t'_a for a > p; W^- carries the reciprocals. Row-major
// in (a, b).
std::vector<AngleModulusPoint> eigenvalues_wplus(const TorusPoint& t, const SemigroupTorusPoint& tp);
std::vector<AngleModulusPoint> eigenvalues_wplus_compact(const TorusPoint& t, int p, int q);
std::vector<AngleModulusPoint> eigenvalues_wplus_semigroup(const SemigroupTorusPoint& tp, int n);

// xi / det(1 - h) with xi the product of the half powers of the W^+
// eigenvalues.
ThetaValue theta_from_eigenvalues(const std::vector<AngleModulusPoint>& eig);

// (-1)^{nq} prod_b t_b^p (prod_a t'_a)^{n/2} prod_b t_b^{(q-p)/2} / prod_{a,b} (t_b - t'_a)
ThetaValue theta_on_torus_closed(const TorusPoint& t, const SemigroupTorusPoint& tp);
ThetaValue theta_on_torus_eigen(const TorusPoint& t, const SemigroupTorusPoint& tp);

// Closed form, after checking it against the eigenvalue route.
ThetaValue theta_on_torus(const TorusPoint& t, const SemigroupTorusPoint& tp);

// det(g)^{1/2} / det(g - 1) for g = diag(e^{i theta - X}, e^{i theta + X}),
// X >= 0. sheet 0 takes det(g)^{1/2} = e^{i theta}, sheet 1 its negative.
ThetaValue theta_u11(double theta, double X, int sheet = 0);

// Global sign relating theta_u11 to theta_on_torus(n = 1, t = 1, p = q = 1).
inline constexpr int kThetaU11Sign = -1;

// |Theta(tt')^2 - (Theta(t) Theta(t') Lambda(-i(c(t) + c(t'))))^2| / |Theta(tt')^2|,
// with the Cayley transforms taken over W = W^+ + W^-.
double theta_multiplicativity_residual(const TorusPoint& t, const SemigroupTorusPoint& tp);

}  // namespace howe
