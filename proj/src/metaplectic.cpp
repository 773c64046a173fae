#include "howe/metaplectic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "howe/errors.hpp"

namespace howe {

namespace {

void check_semigroup(const SemigroupTorusPoint& tp) {
  validate(tp);
  if (!in_semigroup(tp.values(), tp.p, tp.q)) throw PreconditionError("point is not in the semigroup torus");
}

}  // namespace

std::vector<AngleModulusPoint> eigenvalues_wplus(const TorusPoint& t, const SemigroupTorusPoint& tp) {
  const int n = t.size();
  std::vector<AngleModulusPoint> eig;
  eig.reserve(static_cast<std::size_t>(tp.size()) * n);
  for (int a = 0; a < tp.size(); ++a)
    for (int b = 0; b < n; ++b) {
      if (a < tp.p)
        eig.push_back({tp.moduli[a], tp.angles[a] - t.angles[b]});
      else
        eig.push_back({1.0 / tp.moduli[a], t.angles[b] - tp.angles[a]});
    }
  return eig;
}

std::vector<AngleModulusPoint> eigenvalues_wplus_compact(const TorusPoint& t, int p, int q) {
  std::vector<AngleModulusPoint> eig;
  for (int a = 0; a < p + q; ++a)
    for (int b = 0; b < t.size(); ++b) eig.push_back({1.0, a < p ? -t.angles[b] : t.angles[b]});
  return eig;
}

std::vector<AngleModulusPoint> eigenvalues_wplus_semigroup(const SemigroupTorusPoint& tp, int n) {
  std::vector<AngleModulusPoint> eig;
  for (int a = 0; a < tp.size(); ++a)
    for (int b = 0; b < n; ++b)
      eig.push_back(a < tp.p ? AngleModulusPoint{tp.moduli[a], tp.angles[a]}
                             : AngleModulusPoint{1.0 / tp.moduli[a], -tp.angles[a]});
  return eig;
}

ThetaValue theta_from_eigenvalues(const std::vector<AngleModulusPoint>& eig) {
  const HalfInteger half = HalfInteger::from_twice(1);
  cplx xi = 1.0, det = 1.0;
  double sheet = 0.0;
  for (const auto& h : eig) {
    xi *= half_power(h, half);
    sheet += 0.5 * h.angle;
    const cplx d = 1.0 - h.value();
    if (std::abs(d) < kNearPole) throw NumericalDomainError("theta: eigenvalue at 1");
    det *= d;
  }
  return {xi / det, sheet};
}

ThetaValue theta_on_torus_closed(const TorusPoint& t, const SemigroupTorusPoint& tp) {
  const int n = t.size();
  const int p = tp.p, q = tp.q;
  cplx num = (n * q) % 2 ? -1.0 : 1.0;
  double sheet = 0.0;
  const HalfInteger half_n = HalfInteger::from_twice(n);
  const HalfInteger shift = HalfInteger::from_twice(q - p);
  for (int b = 0; b < n; ++b) {
    num *= half_power(t.point(b), HalfInteger(p) + shift);
    sheet += t.angles[b] * (HalfInteger(p) + shift).value();
  }
  for (int a = 0; a < tp.size(); ++a) {
    num *= half_power(tp.point(a), half_n);
    sheet += tp.angles[a] * half_n.value();
  }
  cplx den = 1.0;
  for (int a = 0; a < tp.size(); ++a)
    for (int b = 0; b < n; ++b) {
      const cplx d = t.value(b) - tp.value(a);
      if (std::abs(d) < kNearPole) throw NumericalDomainError("theta: torus point at a pole");
      den *= d;
    }
  return {num / den, sheet};
}

ThetaValue theta_on_torus_eigen(const TorusPoint& t, const SemigroupTorusPoint& tp) {
  return theta_from_eigenvalues(eigenvalues_wplus(t, tp));
}

ThetaValue theta_on_torus(const TorusPoint& t, const SemigroupTorusPoint& tp) {
  if (t.size() < 1) throw PreconditionError("theta needs n >= 1");
  check_semigroup(tp);
  const ThetaValue closed = theta_on_torus_closed(t, tp);
  const ThetaValue eig = theta_on_torus_eigen(t, tp);
  const double scale = std::max(std::abs(closed.value), std::abs(eig.value));
  if (std::abs(closed.value - eig.value) > 1e-8 * scale)
    throw std::logic_error("theta: closed form and eigenvalue route disagree");
  return closed;
}

ThetaValue theta_u11(double theta, double X, int sheet) {
  if (X < 0) throw PreconditionError("theta_u11 needs X >= 0");
  if (sheet != 0 && sheet != 1) throw PreconditionError("sheet must be 0 or 1");
  const cplx d = (std::polar(std::exp(-X), theta) - 1.0) * (std::polar(std::exp(X), theta) - 1.0);
  if (std::abs(d) < kNearPole) throw NumericalDomainError("theta_u11: g - 1 is singular");
  const cplx root = std::polar(sheet ? -1.0 : 1.0, theta);
  return {root / d, theta + (sheet ? std::numbers::pi : 0.0)};
}

double theta_multiplicativity_residual(const TorusPoint& t, const SemigroupTorusPoint& tp) {
  const int n = t.size();
  const ThetaValue whole = theta_on_torus(t, tp);
  const auto e1 = eigenvalues_wplus_compact(t, tp.p, tp.q);
  const auto e2 = eigenvalues_wplus_semigroup(tp, n);
  const ThetaValue th1 = theta_from_eigenvalues(e1);
  const ThetaValue th2 = theta_from_eigenvalues(e2);

  // On W^- the eigenvalues are inverted, which negates the Cayley transform.
  std::vector<cplx> g1, g2;
  for (const auto& h : e1) g1.push_back(h.value());
  for (const auto& h : e2) g2.push_back(h.value());
  const auto c1 = cayley(g1), c2 = cayley(g2);
  std::vector<cplx> z;
  const cplx minus_i(0, -1);
  for (std::size_t k = 0; k < c1.size(); ++k) {
    z.push_back(minus_i * (c1[k] + c2[k]));
    z.push_back(minus_i * -(c1[k] + c2[k]));
  }
  const cplx lhs = whole.value * whole.value;
  const cplx rhs_root = th1.value * th2.value * lambda_det(z);
  return std::abs(lhs - rhs_root * rhs_root) / std::abs(lhs);
}

}  // namespace howe
