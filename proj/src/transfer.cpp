#include "howe/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

#include "howe/errors.hpp"
#include "howe/parallel.hpp"
#include "howe/tori.hpp"

namespace howe {

std::string to_string(Method m) {
  switch (m) {
    case Method::ResidueExact:
      return "residue-exact";
    case Method::Quadrature:
      return "quadrature";
    case Method::Extrapolated:
      return "extrapolated";
  }
  return "unknown";
}

std::string to_string(CaseThreshold c) { return c == CaseThreshold::PMinusOne ? "k <= p-1" : "k <= 0"; }

// ---------------------------------------------------------------- residues

cplx residue_circle_integral(int k, std::span<const cplx> a, int p, int q) {
  const int m = static_cast<int>(a.size());
  if (p < 0 || q < 0 || m != p + q) throw PreconditionError("residue integral needs p + q poles");
  for (int i = 0; i < m; ++i) {
    const double r = std::abs(a[i]);
    if (i < p ? !(r < 1) : !(r > 1)) throw PreconditionError("pole on the wrong side of the unit circle");
    for (int j = i + 1; j < m; ++j)
      if (std::abs(a[i] - a[j]) < kPoleGap) throw PreconditionError("coincident poles");
  }
  const int lo = k >= 0 ? 0 : p;
  const int hi = k >= 0 ? p : m;
  std::vector<cplx> terms;
  for (int h = lo; h < hi; ++h) {
    cplx den = 1.0;
    for (int j = 0; j < m; ++j)
      if (j != h) den *= a[h] - a[j];
    terms.push_back(std::pow(a[h], k) / den);
  }
  const cplx s = pairwise_sum(terms);
  return k >= 0 ? s : -s;
}

cplx quadrature_circle_integral(const CircleIntegrand& f, int N) {
  if (N < 32) throw PreconditionError("circle quadrature needs N >= 32");
  std::vector<cplx> vals(N);
  for (int j = 0; j < N; ++j) {
    vals[j] = f(std::polar(1.0, 2 * std::numbers::pi * j / N));
    if (!std::isfinite(vals[j].real()) || !std::isfinite(vals[j].imag()))
      throw NumericalDomainError("circle quadrature: integrand is not finite on the circle");
  }
  return pairwise_sum(vals) / static_cast<double>(N);
}

cplx contour_circle_integral(const CircleIntegrand& g, int N) {
  return quadrature_circle_integral([&](cplx t) { return t * g(t); }, N);
}

// ---------------------------------------------------------------- r-integrals

namespace {

void check_angles(std::span<const double> angles, int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || static_cast<int>(angles.size()) != p + q)
    throw PreconditionError("need p + q >= 1 angles");
  for (double a : angles)
    if (!std::isfinite(a)) throw PreconditionError("angles must be finite");
  if (min_angle_gap(angles) < kSingularGap) throw PreconditionError("t' angles are not regular");
}

void check_r(double r) {
  if (!(r > 0 && r < 1)) throw PreconditionError("r must lie in (0, 1)");
}

}  // namespace

std::vector<cplx> scaled_poles(std::span<const double> angles, int p, int q, double r) {
  std::vector<cplx> s(p + q);
  for (int a = 0; a < p + q; ++a) s[a] = std::polar(a < p ? r : 1.0 / r, angles[a]);
  return s;
}

cplx transfer_constant(int n, std::span<const double> angles, int q) {
  const int sign_exp = n * q + n * (n - 1) / 2;
  cplx K = sign_exp % 2 ? -1.0 : 1.0;
  const HalfInteger e = HalfInteger::from_twice(n);
  for (double a : angles) K *= half_power({1.0, a}, e);
  return K / static_cast<double>(factorial(n));
}

int transfer_exponent(int b, const Permutation& w, const Permutation& beta, const std::vector<int>& lambda,
                      int p) {
  const int n = w.size();
  const int wi = w.inverse()(b);
  const int bi = beta.inverse()(b);
  return p - n - 2 + (wi + 1) - lambda[wi] + (bi + 1);
}

cplx transfer_integral_n1(int k, std::span<const double> angles, int p, int q, double r) {
  check_angles(angles, p, q);
  check_r(r);
  const auto s = scaled_poles(angles, p, q, r);
  return transfer_constant(1, angles, q) * residue_circle_integral(p - k - 1, s, p, q);
}

cplx transfer_integral_general(const HighestWeight& w, std::span<const double> angles, double r) {
  if (w.n < 1 || w.n > kMaxTransferRank) throw PreconditionError("transfer integral supports n <= 4");
  if (!is_dominant_regular(w)) throw PreconditionError("weight is not dominant regular");
  const int n = w.n, p = w.p, q = w.q;
  check_angles(angles, p, q);
  check_r(r);
  const auto s = scaled_poles(angles, p, q, r);

  std::map<int, cplx> cache;
  const auto res = [&](int e) {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, residue_circle_integral(e, s, p, q)).first;
    return it->second;
  };

  const auto perms = iterate_permutations(n);
  std::vector<cplx> terms;
  terms.reserve(perms.size() * perms.size());
  for (const auto& wp : perms)
    for (const auto& beta : perms) {
      cplx term = static_cast<double>(wp.sign * beta.sign);
      for (int b = 0; b < n; ++b) term *= res(transfer_exponent(b, wp, beta, w.lambda, p));
      terms.push_back(term);
    }
  return transfer_constant(n, angles, q) * pairwise_sum(terms);
}

std::vector<double> default_r_sequence() {
  std::vector<double> rs;
  for (int m = 3; m <= 12; ++m) rs.push_back(1.0 - std::ldexp(1.0, -m));
  return rs;
}

std::vector<double> auto_r_sequence(std::span<const double> angles) {
  const double gap = min_angle_gap(angles);
  if (gap < kSingularGap) throw PreconditionError("t' angles are not regular");
  const double h = std::min(0.125, gap / 16);
  std::vector<double> rs(10);
  for (int i = 0; i < 10; ++i) rs[i] = 1.0 - std::ldexp(h, -i);
  return rs;
}

TransferDiagnostics extrapolate_to_one(std::vector<std::pair<double, cplx>> seq) {
  if (seq.empty()) throw PreconditionError("empty r-sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    check_r(seq[i].first);
    if (i > 0 && !(seq[i].first > seq[i - 1].first)) throw PreconditionError("r-sequence must increase");
  }
  const std::size_t M = seq.size();
  TransferDiagnostics d;
  d.rSequence = seq;
  d.method = Method::Extrapolated;
  if (M == 1) {
    d.extrapolated = seq[0].second;
    d.errorEstimate = std::numeric_limits<double>::infinity();
    return d;
  }
  // Neville at h = 0 over the window ending at the last point; column j uses
  // the last j + 1 points.
  std::vector<cplx> P(M);
  std::vector<double> h(M);
  for (std::size_t i = 0; i < M; ++i) {
    h[i] = 1.0 - seq[i].first;
    P[i] = seq[i].second;
  }
  std::vector<cplx> last(M);
  last[0] = P[M - 1];
  for (std::size_t j = 1; j < M; ++j) {
    for (std::size_t i = M - 1; i >= j; --i) {
      // P[i] <- interpolant through points i-j..i at 0
      P[i] = (h[i - j] * P[i] - h[i] * P[i - 1]) / (h[i - j] - h[i]);
      if (i == j) break;
    }
    last[j] = P[M - 1];
  }
  std::size_t best = 1;
  double best_corr = std::abs(last[1] - last[0]);
  for (std::size_t j = 2; j < M; ++j) {
    const double corr = std::abs(last[j] - last[j - 1]);
    if (corr < best_corr) {
      best = j;
      best_corr = corr;
    }
  }
  d.extrapolated = last[best];
  // Never report less than the rounding level of the inputs.
  double scale = 0.0;
  for (const auto& [r, v] : seq) scale = std::max(scale, std::abs(v));
  d.errorEstimate = std::max(2.0 * best_corr, 16 * std::numeric_limits<double>::epsilon() * scale);
  return d;
}

TransferDiagnostics transfer_limit_n1(int k, std::span<const double> angles, int p, int q,
                                      const std::vector<double>& rs) {
  std::vector<std::pair<double, cplx>> seq;
  for (double r : rs) seq.emplace_back(r, transfer_integral_n1(k, angles, p, q, r));
  return extrapolate_to_one(std::move(seq));
}

TransferDiagnostics transfer_limit_general(const HighestWeight& w, std::span<const double> angles,
                                           const std::vector<double>& rs) {
  std::vector<std::pair<double, cplx>> seq;
  for (double r : rs) seq.emplace_back(r, transfer_integral_general(w, angles, r));
  return extrapolate_to_one(std::move(seq));
}

int limit_convention_constant(int /*p*/, int q) { return q % 2 ? -1 : 1; }

// ---------------------------------------------------------------- closed forms

CharacterValue char_closed_form_n1(int k, std::span<const AngleModulusPoint> t, int p, int q,
                                   CaseThreshold threshold) {
  const int m = static_cast<int>(t.size());
  if (p < 0 || q < 0 || m != p + q || m < 1) throw PreconditionError("closed form needs p + q points");
  std::vector<cplx> v(m);
  for (int i = 0; i < m; ++i) v[i] = t[i].value();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(v[i] - v[j]) < kSingularGap) throw NumericalDomainError("closed form at a singular point");

  const bool inner = threshold == CaseThreshold::PMinusOne ? k <= p - 1 : k <= 0;
  const HalfInteger e(p - (k + 1));
  std::vector<cplx> terms;
  for (int h = inner ? 0 : p; h < (inner ? p : m); ++h) {
    cplx den = 1.0;
    for (int j = 0; j < m; ++j)
      if (j != h) den *= v[h] - v[j];
    terms.push_back(half_power(t[h], e) / den);
  }
  cplx pref = inner ? 1.0 : -1.0;
  const HalfInteger half = HalfInteger::from_twice(1);
  for (int i = 0; i < m; ++i) pref *= half_power(t[i], half);
  return {pref * pairwise_sum(terms), half, false};
}

CharacterValue char_closed_form_n1(int k, std::span<const double> angles, int p, int q,
                                   CaseThreshold threshold) {
  std::vector<AngleModulusPoint> t;
  for (double a : angles) t.push_back({1.0, a});
  return char_closed_form_n1(k, t, p, q, threshold);
}

cplx char_noncompact_u11(int k, double theta, double X) {
  if (X == 0.0 || !std::isfinite(X)) throw NumericalDomainError("noncompact Cartan value needs X != 0");
  const double x = std::abs(X);
  // Residues at z = e^{-i theta - x} (and z = 0 when k >= 2), or minus the
  // residue at z = e^{-i theta + x} when k <= 0.
  const double e = k >= 1 ? -x * k : x * k;
  return std::polar(std::exp(e), theta * k) / (std::exp(-x) - std::exp(x));
}

CircleIntegrand noncompact_u11_integrand(int k, double theta, double X) {
  const cplx a = std::polar(std::exp(X), theta);
  const cplx b = std::polar(std::exp(-X), theta);
  const cplx ph = std::polar(1.0, theta);
  return [=](cplx z) { return std::pow(z, 1 - k) * ph / ((z * a - 1.0) * (z * b - 1.0)); };
}

HechtReport hecht_check(int k, const std::vector<std::pair<double, double>>& grid, double tol, int quadratureN) {
  if (grid.empty()) throw PreconditionError("hecht_check needs a non-empty grid");
  HechtReport rep;
  rep.k = k;
  for (const auto& pt : grid) (pt.second == 0.0 ? rep.skipped : rep.used).push_back(pt);
  if (rep.used.empty()) throw PreconditionError("hecht_check: every grid point is singular");

  std::vector<cplx> inv, dir;
  for (const auto& [theta, X] : rep.used) {
    const double x = std::abs(X);
    const cplx B = char_noncompact_u11(k, theta, X);
    const AngleModulusPoint ti[2] = {{std::exp(-x), -theta}, {std::exp(x), -theta}};
    const AngleModulusPoint td[2] = {{std::exp(-x), theta}, {std::exp(x), theta}};
    inv.push_back(char_closed_form_n1(k, ti, 1, 1).value / B);
    dir.push_back(char_closed_form_n1(k, td, 1, 1).value / B);
    const cplx Q = quadrature_circle_integral(noncompact_u11_integrand(k, theta, X), quadratureN);
    rep.quadratureMaxError = std::max(rep.quadratureMaxError, std::abs(Q - B));
  }
  const auto summarize = [&](std::string name, std::vector<cplx> ratios) {
    HechtConvention c;
    c.name = std::move(name);
    c.constant = pairwise_sum(ratios) / static_cast<double>(ratios.size());
    for (const cplx& r : ratios) c.maxDeviation = std::max(c.maxDeviation, std::abs(r - c.constant));
    c.maxDeviation /= std::abs(c.constant);
    c.constantRatio = c.maxDeviation < tol;
    c.ratios = std::move(ratios);
    return c;
  };
  rep.conventions.push_back(summarize("inverse", std::move(inv)));
  rep.conventions.push_back(summarize("direct", std::move(dir)));
  for (const auto& c : rep.conventions)
    if (c.constantRatio) {
      rep.pass = true;
      rep.matched = c.name;
      rep.constant = c.constant;
      rep.maxDeviation = c.maxDeviation;
      break;
    }
  if (!rep.pass) {
    rep.constant = rep.conventions[0].constant;
    rep.maxDeviation = rep.conventions[0].maxDeviation;
  }
  return rep;
}

// ---------------------------------------------------------------- orbit sums

std::vector<Permutation> coset_representatives(int p, int q, int h) {
  const int m = p + q;
  if (p < 0 || q < 0 || m < 1 || m > 8) throw PreconditionError("coset enumeration needs 1 <= p + q <= 8");
  if (h != 1 && h != p + 1) throw PreconditionError("h must be 1 or p + 1");
  if (h > m) throw PreconditionError("h exceeds p + q");
  const int fixed = h - 1;
  const auto preserves_blocks = [p](const Permutation& s) {
    for (int i = 0; i < s.size(); ++i)
      if ((s(i) < p) != (i < p)) return false;
    return true;
  };
  std::vector<Permutation> stab, small;
  for_each_permutation(m, [&](const Permutation& s) {
    if (s(fixed) != fixed) return;
    stab.push_back(s);
    if (preserves_blocks(s)) small.push_back(s);
  });
  // stab is in lexicographic order, so the first unseen element of each
  // coset is its minimum.
  std::set<std::vector<int>> seen;
  std::vector<Permutation> reps;
  for (const auto& s : stab) {
    if (seen.count(s.images)) continue;
    for (const auto& k : small) seen.insert(s.compose(k).images);
    reps.push_back(s);
  }
  return reps;
}

void validate(const OrbitSumSpec& spec) {
  const int m = spec.p + spec.q;
  if (spec.p < 0 || spec.q < 0 || m < 1) throw PreconditionError("orbit sum needs p + q >= 1");
  if (spec.h != 1 && spec.h != spec.p + 1) throw PreconditionError("h must be 1 or p + 1");
  if (static_cast<int>(spec.lambdaVec.size()) != m || static_cast<int>(spec.xi.size()) != m)
    throw PreconditionError("lambda and xi need p + q entries");
  for (const auto& x : spec.xi)
    if (x != spec.xi.front()) throw PreconditionError("xi entries must all be equal");
}

OrbitSumSpec orbit_spec_for_weight(int p, int q, int k, XiConvention xi) {
  const int m = p + q;
  if (p < 0 || q < 0 || m < 1) throw PreconditionError("orbit sum needs p + q >= 1");
  OrbitSumSpec spec{p, q, 1, {}, {}};
  if (k > p - 1) {
    if (q < 1) throw PreconditionError("k > p - 1 needs q >= 1");
    spec.h = p + 1;
    for (int i = 1; i <= p; ++i) spec.lambdaVec.emplace_back(i - 1);
    spec.lambdaVec.emplace_back(p - (k + 1));
    for (int i = p + 2; i <= m; ++i) spec.lambdaVec.emplace_back(i - 2);
  } else {
    spec.lambdaVec.emplace_back(p - (k + 1));
    for (int a = 2; a <= m; ++a) spec.lambdaVec.emplace_back(a - 2);
  }
  const int twice = xi == XiConvention::Displayed ? m - 2 : -(m - 2);
  spec.xi.assign(m, HalfInteger::from_twice(twice));
  return spec;
}

cplx orbit_exponential_sum(const OrbitSumSpec& spec, std::span<const double> x) {
  validate(spec);
  const int m = spec.p + spec.q;
  if (static_cast<int>(x.size()) != m) throw PreconditionError("x needs p + q entries");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(x[i] - x[j]) < kSingularGap) throw NumericalDomainError("orbit sum at a singular x");
  const auto reps = coset_representatives(spec.p, spec.q, spec.h);
  std::vector<Permutation> block;
  for_each_permutation(m, [&](const Permutation& s) {
    for (int i = 0; i < m; ++i)
      if ((s(i) < spec.p) != (i < spec.p)) return;
    block.push_back(s);
  });
  std::vector<cplx> terms;
  for (const auto& mu : reps) {
    std::vector<double> coeff(m);
    for (int i = 0; i < m; ++i) coeff[i] = (spec.lambdaVec[mu(i)] + spec.xi[i]).value();
    for (const auto& om : block) {
      double phase = 0.0;
      for (int i = 0; i < m; ++i) phase += coeff[i] * x[om(i)];
      terms.push_back(std::polar(static_cast<double>(mu.sign * om.sign), phase));
    }
  }
  return pairwise_sum(terms);
}

cplx compact_cartan_reference(int k, std::span<const double> x, int p, int q) {
  TorusPoint t{std::vector<double>(x.begin(), x.end())};
  return weyl_denominator(t) * char_closed_form_n1(k, x, p, q).value;
}

double p_function(std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double u = 0.5 * (x[i] - x[j]);
      v *= std::abs(u) < 1e-6 ? 1.0 + u * u / 6.0 : std::sinh(u) / u;
    }
  return v;
}

}  // namespace howe
