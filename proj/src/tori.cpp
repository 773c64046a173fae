#include "howe/tori.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "howe/errors.hpp"

namespace howe {

double min_angle_gap(std::span<const double> angles) {
  double gap = std::numeric_limits<double>::infinity();
  const double two_pi = 2 * std::numbers::pi;
  for (std::size_t i = 0; i < angles.size(); ++i)
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      double d = std::fmod(std::abs(angles[i] - angles[j]), two_pi);
      gap = std::min(gap, std::min(d, two_pi - d));
    }
  return gap;
}

bool is_regular(const TorusPoint& t, double tol) { return min_angle_gap(t.angles) >= tol; }

std::vector<cplx> SemigroupTorusPoint::values() const {
  std::vector<cplx> v(size());
  for (int a = 0; a < size(); ++a) v[a] = value(a);
  return v;
}

void validate(const SemigroupTorusPoint& tp) {
  if (tp.p < 0 || tp.q < 0 || tp.p + tp.q < 1) throw PreconditionError("need p, q >= 0 and p + q >= 1");
  if (static_cast<int>(tp.moduli.size()) != tp.size() || static_cast<int>(tp.angles.size()) != tp.size())
    throw PreconditionError("semigroup point needs p + q moduli and angles");
  for (int a = 0; a < tp.size(); ++a) {
    const double r = tp.moduli[a];
    if (!(r > 0) || !std::isfinite(r) || !std::isfinite(tp.angles[a]))
      throw PreconditionError("moduli must be positive and finite");
    if (a < tp.p ? !(r < 1) : !(r > 1)) throw PreconditionError("point is not in the semigroup torus");
  }
}

SemigroupTorusPoint make_semigroup_point(int p, int q, std::vector<double> moduli,
                                         std::vector<double> angles) {
  SemigroupTorusPoint tp{p, q, std::move(moduli), std::move(angles)};
  validate(tp);
  return tp;
}

std::vector<AngleModulusPoint> NoncompactCartanPointU11::diagonal() const {
  return {{std::exp(-X), theta}, {std::exp(X), theta}};
}

void validate(const CartanShape& s) {
  if (s.p < 0 || s.q < 0 || s.k < 0 || s.k > std::min(s.p, s.q))
    throw PreconditionError("Cartan index k must satisfy 0 <= k <= min(p, q)");
  if (static_cast<int>(s.phi.size()) != s.p - s.k || static_cast<int>(s.theta.size()) != s.k ||
      static_cast<int>(s.tau.size()) != s.q - s.k || static_cast<int>(s.split.size()) != s.k)
    throw PreconditionError("Cartan slot counts must be p-k, k, q-k, k");
}

bool in_semigroup(std::span<const cplx> diag, int p, int q) {
  const int m = p + q;
  if (p < 0 || q < 0 || static_cast<int>(diag.size()) != m) throw PreconditionError("diagonal must have p + q entries");
  for (const cplx& z : diag)
    if (z == 0.0) throw NumericalDomainError("semigroup test: zero diagonal entry");

  bool by_modulus = true;
  for (int i = 0; i < m; ++i) {
    const double r = std::abs(diag[i]);
    by_modulus = by_modulus && (i < p ? r < 1 : r > 1);
  }

  Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(m, m);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    F(i, i) = i < p ? 1.0 : -1.0;
    g(i, i) = diag[i];
  }
  const Eigen::MatrixXcd H = F - g.adjoint() * F * g;
  const bool by_matrix = m == 0 || H.llt().info() == Eigen::Success;

  if (by_modulus != by_matrix) throw std::logic_error("semigroup criteria disagree");
  return by_modulus;
}

cplx weyl_denominator(const TorusPoint& t) {
  const int n = t.size();
  const HalfInteger e = HalfInteger::from_twice(-(n - 1));
  cplx d = 1.0;
  for (int i = 0; i < n; ++i) d *= half_power(t.point(i), e);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= t.value(i) - t.value(j);
  return d;
}

std::vector<cplx> cayley(std::span<const cplx> g) {
  std::vector<cplx> c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx den = g[i] - 1.0;
    if (std::abs(den) < 1e-14) throw NumericalDomainError("Cayley transform undefined at eigenvalue 1");
    c[i] = (g[i] + 1.0) / den;
  }
  return c;
}

cplx lambda_det(std::span<const cplx> z) {
  cplx v = 1.0;
  for (const cplx& zk : z) {
    if (zk == 0.0) throw NumericalDomainError("lambda_det: zero entry");
    v /= std::sqrt(zk / 2.0);
  }
  return v;
}

}  // namespace howe
