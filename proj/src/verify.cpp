#include "howe/verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "howe/compact_characters.hpp"
#include "howe/errors.hpp"
#include "howe/metaplectic.hpp"
#include "howe/parallel.hpp"
#include "howe/tori.hpp"
#include "howe/transfer.hpp"
#include "howe/weights.hpp"

namespace howe {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen_); }

  // Angles in [0, 2 pi) with circular gaps of at least min_gap.
  std::vector<double> regular_angles(int m, double min_gap) {
    for (;;) {
      std::vector<double> a(m);
      for (auto& x : a) x = uniform(0, kTwoPi);
      if (min_angle_gap(a) >= min_gap) return a;
    }
  }

  // Moduli inside the unit disc for a < p, outside for a >= p.
  std::vector<double> semigroup_moduli(int p, int q, double inner_lo, double inner_hi, double outer_lo,
                                       double outer_hi) {
    std::vector<double> r(p + q);
    for (int a = 0; a < p + q; ++a) r[a] = a < p ? uniform(inner_lo, inner_hi) : uniform(outer_lo, outer_hi);
    return r;
  }

 private:
  std::mt19937_64 gen_;
};

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string fmt_cplx(cplx z) { return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "i"; }

int cases_or(int requested, int fallback) { return requested > 0 ? requested : fallback; }

SuiteResult start(std::string name, int cases) {
  SuiteResult r;
  r.suite = std::move(name);
  r.cases = cases;
  return r;
}

// ------------------------------------------------------------------ suites

SuiteResult suite_residues(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("residues", cases_or(o.cases, 500));
  for (int c = 0; c < r.cases; ++c) {
    int p, q;
    do {
      p = rng.integer(0, 4);
      q = rng.integer(0, 4);
    } while (p + q < 1);
    const int k = rng.integer(-6, 6);
    std::vector<cplx> a(p + q);
    for (;;) {
      for (int i = 0; i < p + q; ++i)
        a[i] = std::polar(i < p ? rng.uniform(0.2, 0.8) : rng.uniform(1.25, 5.0), rng.uniform(0, kTwoPi));
      double gap = 1e300;
      for (int i = 0; i < p + q; ++i)
        for (int j = i + 1; j < p + q; ++j) gap = std::min(gap, std::abs(a[i] - a[j]));
      if (gap > 1e-3) break;
    }
    const cplx exact = residue_circle_integral(k, a, p, q);
    const cplx quad = contour_circle_integral(
        [&](cplx t) {
          cplx den = 1.0;
          for (const cplx& ai : a) den *= t - ai;
          return std::pow(t, k) / den;
        },
        1024);
    r.maxError = std::max(r.maxError, std::abs(exact - quad));
  }
  r.pass = r.maxError < 1e-10;
  r.notes.emplace_back("method", "residue-exact vs quadrature N=1024");
  return r;
}

SuiteResult suite_limit(const VerifyOptions& o, Sampler& rng) {
  const int per = cases_or(o.cases, 50);
  SuiteResult r = start("limit", 0);
  const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  double err_zero = 0.0;
  double max_est = 0.0;
  for (auto [p, q] : shapes) {
    const int c = limit_convention_constant(p, q);
    double ratio_dev = 0.0;
    for (int i = 0; i < per; ++i) {
      const int k = rng.integer(-4, 4);
      const auto ang = rng.regular_angles(p + q, 1e-6);
      const TransferDiagnostics d = transfer_limit_n1(k, ang, p, q, auto_r_sequence(ang));
      const cplx closed = char_closed_form_n1(k, ang, p, q).value;
      const cplx other = char_closed_form_n1(k, ang, p, q, CaseThreshold::Zero).value;
      const cplx lim = static_cast<double>(c) * d.extrapolated;
      r.maxError = std::max(r.maxError, std::abs(lim - closed) / std::abs(closed));
      err_zero = std::max(err_zero, std::abs(lim - other) / std::abs(lim));
      ratio_dev = std::max(ratio_dev, std::abs(d.extrapolated / closed - static_cast<double>(c)));
      max_est = std::max(max_est, d.errorEstimate / std::abs(closed));
      ++r.cases;
    }
    r.notes.emplace_back("convention_constant_" + std::to_string(p) + "_" + std::to_string(q), std::to_string(c));
  }
  r.pass = r.maxError < 1e-8;
  std::string matched;
  if (r.maxError < 1e-8) matched = to_string(CaseThreshold::PMinusOne);
  if (err_zero < 1e-8) matched += (matched.empty() ? "" : ", ") + to_string(CaseThreshold::Zero);
  r.notes.emplace_back("threshold_matched", matched.empty() ? "none" : matched);
  r.notes.emplace_back("threshold_k_le_0_max_error", fmt_double(err_zero));
  r.notes.emplace_back("max_relative_error_estimate", fmt_double(max_est));
  return r;
}

double near_identity_dimension(const HighestWeight& w) {
  std::vector<std::pair<double, cplx>> seq;
  for (int m = 4; m <= 10; ++m) {
    const double eps = std::ldexp(1.0, -m);
    TorusPoint t;
    for (int a = 1; a <= w.n; ++a) t.angles.push_back(eps * a);
    seq.emplace_back(1.0 - eps, weyl_character(w, t).value);
  }
  return extrapolate_to_one(std::move(seq)).extrapolated.real();
}

SuiteResult suite_weyl(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("weyl", 0);
  bool ok = true;
  const HighestWeight w10 = make_weight(2, 2, 2, {1, 0}), w21 = make_weight(2, 2, 2, {2, 1}),
                      w20 = make_weight(2, 2, 2, {2, 0});
  const double e_norm = std::abs(character_inner_product(w10, w10, 256) - 1.0);
  const double e_orth = std::abs(character_inner_product(w10, w21, 256));
  ok = ok && e_norm <= 0.02 && e_orth <= 0.02;
  r.notes.emplace_back("orthonormality_max_error", fmt_double(std::max(e_norm, e_orth)));
  r.cases += 2;

  double exact = 0.0;
  const std::pair<const HighestWeight*, double> dims[] = {{&w10, 2}, {&w21, 2}, {&w20, 3}};
  for (auto [w, d] : dims) {
    exact = std::max(exact, std::abs(dimension(*w) - d));
    exact = std::max(exact, std::abs(near_identity_dimension(*w) - d) / d);
    ++r.cases;
  }
  const double dim_err = exact;
  ok = ok && dim_err <= 1e-6;
  r.notes.emplace_back("dimension_max_error", fmt_double(dim_err));

  const int random_cases = cases_or(o.cases, 100);
  double inv = 0.0;
  for (int c = 0; c < random_cases; ++c) {
    const int n = rng.integer(1, 3), p = rng.integer(0, 2), q = rng.integer(p == 0 ? 1 : 0, 2);
    const auto ws = enumerate_weights(n, p, q, 3);
    const HighestWeight& w = ws[rng.integer(0, static_cast<int>(ws.size()) - 1)];
    TorusPoint t{rng.regular_angles(n, 0.05)};
    const cplx chi = weyl_character(w, t).value;
    const double scale = std::max(1.0, std::abs(chi));
    // permutation symmetry
    TorusPoint s = t;
    std::reverse(s.angles.begin(), s.angles.end());
    inv = std::max(inv, std::abs(weyl_character(w, s).value - chi) / scale);
    // conjugation
    TorusPoint m = t;
    for (auto& a : m.angles) a = -a;
    inv = std::max(inv, std::abs(weyl_character(w, m).value - std::conj(chi)) / scale);
    // 2 pi shift of one angle
    TorusPoint sh = t;
    sh.angles[rng.integer(0, n - 1)] += kTwoPi;
    const double sign = (q - p) % 2 ? -1.0 : 1.0;
    inv = std::max(inv, std::abs(weyl_character(w, sh).value - sign * chi) / scale);
    ++r.cases;
  }
  ok = ok && inv < 1e-9;
  r.notes.emplace_back("invariance_max_error", fmt_double(inv));
  r.maxError = std::max({e_norm, e_orth, dim_err, inv});
  r.pass = ok;
  return r;
}

SemigroupTorusPoint random_semigroup_point(Sampler& rng, int p, int q) {
  return make_semigroup_point(p, q, rng.semigroup_moduli(p, q, 0.2, 0.9, 1.1, 5.0), rng.regular_angles(p + q, 0.0));
}

SuiteResult suite_metaplectic(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("metaplectic", 0);
  const int per = cases_or(o.cases, 200);
  const int shapes[][3] = {{1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}};
  double unsquared = 0.0;
  for (const auto& s : shapes) {
    const int n = s[0], p = s[1], q = s[2];
    for (int i = 0; i < per; ++i) {
      TorusPoint t{rng.regular_angles(n, 0.05)};
      const auto tp = random_semigroup_point(rng, p, q);
      const cplx a = theta_on_torus_closed(t, tp).value;
      const cplx b = theta_on_torus_eigen(t, tp).value;
      r.maxError = std::max(r.maxError, std::abs(a * a - b * b) / std::abs(b * b));
      unsquared = std::max(unsquared, std::abs(a - b) / std::abs(b));
      ++r.cases;
    }
  }
  r.pass = r.maxError < 1e-10;
  r.notes.emplace_back("global_sign", "+1");
  r.notes.emplace_back("unsquared_max_error", fmt_double(unsquared));
  return r;
}

SuiteResult suite_multiplicativity(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("multiplicativity", cases_or(o.cases, 100));
  for (int c = 0; c < r.cases; ++c) {
    const int n = rng.integer(1, 2);
    int p, q;
    do {
      p = rng.integer(0, 2);
      q = rng.integer(0, 2);
    } while (p + q < 1);
    // Keep t away from 1, where the compact Cayley transform has its pole.
    std::vector<double> ang;
    do ang = rng.regular_angles(n, 0.05);
    while (std::any_of(ang.begin(), ang.end(), [](double x) { return std::min(x, kTwoPi - x) < 0.05; }));
    const auto tp = random_semigroup_point(rng, p, q);
    r.maxError = std::max(r.maxError, theta_multiplicativity_residual(TorusPoint{ang}, tp));
  }
  r.pass = r.maxError < 1e-8;
  return r;
}

SuiteResult suite_hecht(const VerifyOptions& o, Sampler&) {
  SuiteResult r = start("hecht", 0);
  std::vector<int> ks = {-2, -1, 1, 2, 3};
  if (o.k) ks = {*o.k};
  std::vector<std::pair<double, double>> grid;
  for (double th : {0.0, 0.7, 1.9, 3.0})
    for (double X : {0.3, 0.8, 1.4, 2.0}) grid.emplace_back(th, X);
  bool ok = true;
  double quad = 0.0;
  std::optional<cplx> common;
  bool all_same = true;
  for (int k : ks) {
    const HechtReport rep = hecht_check(k, grid);
    r.cases += static_cast<int>(rep.used.size());
    r.maxError = std::max(r.maxError, rep.maxDeviation);
    quad = std::max(quad, rep.quadratureMaxError);
    ok = ok && rep.pass;
    r.notes.emplace_back("k=" + std::to_string(k),
                         (rep.pass ? rep.matched : std::string("none")) + " constant " + fmt_cplx(rep.constant));
    if (!common)
      common = rep.constant;
    else if (std::abs(*common - rep.constant) > 1e-6 * std::abs(*common))
      all_same = false;
  }
  r.pass = ok && quad < 1e-10;
  if (all_same) r.constant = common;
  r.notes.emplace_back("quadrature_max_error", fmt_double(quad));
  return r;
}

SuiteResult suite_orbit(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("orbit", 0);
  struct Case {
    int p, q, k;
  };
  std::vector<Case> cs;
  const std::vector<int> ks11 = o.k ? std::vector<int>{*o.k} : std::vector<int>{1, 2, -1};
  for (int k : ks11) cs.push_back({1, 1, k});
  if (!o.k)
    for (auto [p, q] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}})
      for (int k : {-1, 0, 1, 2, 3}) cs.push_back({p, q, k});
  const int points = cases_or(o.cases, 8);
  for (const auto& c : cs) {
    const auto spec = orbit_spec_for_weight(c.p, c.q, c.k);
    std::vector<cplx> ratios;
    for (int i = 0; i < points; ++i) {
      const auto x = rng.regular_angles(c.p + c.q, 0.1);
      ratios.push_back(orbit_exponential_sum(spec, x) / compact_cartan_reference(c.k, x, c.p, c.q));
    }
    const cplx mean = pairwise_sum(ratios) / static_cast<double>(points);
    double var = 0.0;
    for (const auto& z : ratios) var += std::norm(z - mean);
    const double rel_std = std::sqrt(var / points) / std::abs(mean);
    r.maxError = std::max(r.maxError, rel_std);
    r.cases += points;
    r.notes.emplace_back(
        "p=" + std::to_string(c.p) + ",q=" + std::to_string(c.q) + ",k=" + std::to_string(c.k), fmt_cplx(mean));
  }
  r.pass = r.maxError < 1e-6;
  return r;
}

SuiteResult suite_vandermonde(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("vandermonde", 0);
  double vd = 0.0;
  for (int n = 1; n <= 6; ++n)
    for (int c = 0; c < 10; ++c) {
      std::vector<cplx> t(n);
      for (auto& z : t) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const cplx prod = vandermonde_product(t);
      const cplx sum = vandermonde_sum(t);
      vd = std::max(vd, std::abs(sum - static_cast<double>(vandermonde_sign(n)) * prod) / std::max(1.0, std::abs(prod)));
      ++r.cases;
    }
  double flip = 0.0;
  const int pairs = cases_or(o.cases, 100);
  for (int c = 0; c < pairs; ++c) {
    const int n = rng.integer(1, 3), p = rng.integer(0, 3), q = rng.integer(p == 0 ? 1 : 0, 3);
    const auto ws = enumerate_weights(n, p, q, 2);
    const HighestWeight& w = ws[rng.integer(0, static_cast<int>(ws.size()) - 1)];
    TorusPoint t{rng.regular_angles(n, 0.05)};
    TorusPoint s = t;
    s.angles[rng.integer(0, n - 1)] += kTwoPi;
    const cplx a = weyl_character(w, t).value, b = weyl_character(w, s).value;
    const double sign = (q - p) % 2 ? -1.0 : 1.0;
    flip = std::max(flip, std::abs(b - sign * a) / std::max(1.0, std::abs(a)));
    const AngleModulusPoint z{rng.uniform(0.5, 2.0), rng.uniform(-kTwoPi, kTwoPi)};
    const HalfInteger half = HalfInteger::from_twice(1);
    flip = std::max(flip, std::abs(half_power({z.modulus, z.angle + kTwoPi}, half) + half_power(z, half)));
    ++r.cases;
  }
  r.maxError = std::max(vd, flip);
  r.pass = vd < 1e-12 && flip < 1e-12;
  r.notes.emplace_back("sign", "+1");
  r.notes.emplace_back("expansion_max_error", fmt_double(vd));
  r.notes.emplace_back("double_cover_max_error", fmt_double(flip));
  return r;
}

SuiteResult suite_semigroup(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("semigroup", cases_or(o.cases, 200));
  int disagreements = 0;
  for (int c = 0; c < r.cases; ++c) {
    int p, q;
    do {
      p = rng.integer(0, 4);
      q = rng.integer(0, 4);
    } while (p + q < 1);
    std::vector<cplx> d(p + q);
    for (auto& z : d) {
      double m;
      do {
        const int kind = rng.integer(0, 2);
        m = kind == 0 ? rng.uniform(0.05, 3.0) : 1.0 + (kind == 1 ? 1 : -1) * std::pow(10.0, rng.uniform(-5.9, -2));
      } while (std::abs(m - 1.0) < 1e-6);
      z = std::polar(m, rng.uniform(0, kTwoPi));
    }
    bool by_modulus = true;
    for (int i = 0; i < p + q; ++i) by_modulus = by_modulus && (i < p ? std::abs(d[i]) < 1 : std::abs(d[i]) > 1);
    // Smallest eigenvalue of F - g^* F g, computed independently of in_semigroup.
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(p + q, p + q);
    for (int i = 0; i < p + q; ++i) H(i, i) = (i < p ? 1.0 : -1.0) * (1.0 - std::norm(d[i]));
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(H).eigenvalues().minCoeff();
    const bool got = in_semigroup(d, p, q);
    disagreements += (got != by_modulus) + (got != (lmin > 0));
  }
  r.maxError = disagreements;
  r.pass = disagreements == 0;
  return r;
}

// Direct 2-dimensional quadrature of (1/2) \int conj(chi_lambda) Theta(t s) |D|^2
// against the expanded residue sum.
SuiteResult suite_expansion(const VerifyOptions& o, Sampler& rng) {
  SuiteResult r = start("expansion", cases_or(o.cases, 4));
  const int N = 256;
  const double rr = 0.9;
  for (int c = 0; c < r.cases; ++c) {
    const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {1, 2}};
    auto [p, q] = shapes[c % 3];
    const auto ws = enumerate_weights(2, p, q, 1);
    const HighestWeight w = ws[rng.integer(0, static_cast<int>(ws.size()) - 1)];
    const auto ang = rng.regular_angles(p + q, 0.2);
    std::vector<double> mod(p + q);
    for (int a = 0; a < p + q; ++a) mod[a] = a < p ? rr : 1.0 / rr;
    const SemigroupTorusPoint s{p, q, mod, ang};
    const double h = kTwoPi / N;
    const auto vals = parallel_map<cplx>(static_cast<std::size_t>(N) * N, [&](std::size_t idx) {
      TorusPoint t{{h * static_cast<double>(idx % N), h * (static_cast<double>(idx / N) + 0.5)}};
      return std::conj(weyl_numerator(w, t)) * weyl_denominator(t) * theta_on_torus_closed(t, s).value;
    });
    const cplx oracle = pairwise_sum(vals) / (2.0 * N * N);
    const cplx expanded = transfer_integral_general(w, ang, rr) * std::pow(rr, (p - q));
    r.maxError = std::max(r.maxError, std::abs(expanded - oracle) / std::abs(oracle));
  }
  r.pass = r.maxError < 1e-8;
  return r;
}

using SuiteFn = std::function<SuiteResult(const VerifyOptions&, Sampler&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"residues", suite_residues},       {"limit", suite_limit},
      {"weyl", suite_weyl},               {"metaplectic", suite_metaplectic},
      {"multiplicativity", suite_multiplicativity},
      {"hecht", suite_hecht},             {"orbit", suite_orbit},
      {"vandermonde", suite_vandermonde}, {"semigroup", suite_semigroup},
      {"expansion", suite_expansion},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  bool found = false;
  std::uint64_t index = 0;
  for (const auto& [name, fn] : registry()) {
    ++index;
    if (opts.suite != "all" && opts.suite != name) continue;
    found = true;
    // Each suite draws from its own stream so results do not depend on which
    // other suites run.
    Sampler rng(opts.seed * 1000003ULL + index);
    out.push_back(fn(opts, rng));
  }
  if (!found) throw PreconditionError("unknown suite: " + opts.suite);
  return out;
}

}  // namespace howe
