#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "howe/errors.hpp"
#include "howe/transfer.hpp"
#include "oracles.hpp"

using namespace howe;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I{0.0, 1.0};

cplx monomial_over_poles(cplx t, int k, const std::vector<cplx>& a) {
  cplx d = 1.0;
  for (cplx x : a) d *= t - x;
  return std::pow(t, k) / d;
}

// (1/2 pi i) \oint f dt as the mean of t f(t) over the roots of unity.
cplx contour_oracle(const std::function<cplx(cplx)>& f, int N) {
  return oracle::trapezoid_circle([&](cplx t) { return t * f(t); }, N);
}

std::vector<cplx> random_poles(std::mt19937_64& g, int p, int q) {
  std::uniform_real_distribution<double> in(0.2, 0.8), out(1.25, 5.0), ang(0, oracle::kTwoPi);
  std::vector<cplx> a;
  for (int i = 0; i < p + q; ++i) a.push_back(std::polar(i < p ? in(g) : out(g), ang(g)));
  return a;
}
}  // namespace

TEST_CASE("residue lemma examples") {
  const std::vector<cplx> a{0.5, 2.0};
  CHECK(std::abs(residue_circle_integral(0, a, 1, 1) - (-2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(residue_circle_integral(-1, a, 1, 1) - (-1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(residue_circle_integral(0, std::vector<cplx>{0.5}, 1, 0) - 1.0) < 1e-15);
  // No poles inside and k >= 0: the integrand is holomorphic on the disc.
  CHECK(std::abs(residue_circle_integral(2, std::vector<cplx>{3.0}, 0, 1)) < 1e-15);
}

TEST_CASE("residue lemma errors") {
  CHECK_THROWS_AS(residue_circle_integral(0, std::vector<cplx>{1.0, 2.0}, 1, 1), PreconditionError);
  CHECK_THROWS_AS(residue_circle_integral(0, std::vector<cplx>{0.5, 0.5}, 1, 1), PreconditionError);
  CHECK_THROWS_AS(residue_circle_integral(0, std::vector<cplx>{0.5, 0.5 + 1e-11, 3.0}, 2, 1), PreconditionError);
  CHECK_THROWS_AS(residue_circle_integral(0, std::vector<cplx>{0.5}, 1, 1), PreconditionError);
}

TEST_CASE("residue lemma against quadrature") {
  std::mt19937_64 g(17);
  std::uniform_int_distribution<int> pq(0, 4), kk(-6, 6);
  double worst = 0;
  for (int c = 0; c < 200; ++c) {
    int p = pq(g), q = pq(g);
    if (p + q == 0) p = 1;
    const int k = kk(g);
    const auto a = random_poles(g, p, q);
    const cplx want = contour_oracle([&](cplx t) { return monomial_over_poles(t, k, a); }, 2048);
    worst = std::max(worst, std::abs(residue_circle_integral(k, a, p, q) - want));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("reflection t -> 1/t") {
  // I(k, a; p, q) = I(m - k - 2, 1/a; q, p) / prod(-a_i), outer poles listed first.
  std::mt19937_64 g(23);
  for (int c = 0; c < 50; ++c) {
    const int p = c % 3, q = 1 + c % 2, m = p + q, k = c % 9 - 4;
    const auto a = random_poles(g, p, q);
    std::vector<cplx> b;
    cplx prod = 1.0;
    for (int i = p; i < m; ++i) b.push_back(1.0 / a[i]);
    for (int i = 0; i < p; ++i) b.push_back(1.0 / a[i]);
    for (cplx x : a) prod *= -x;
    const cplx lhs = residue_circle_integral(k, a, p, q);
    const cplx rhs = residue_circle_integral(m - k - 2, b, q, p) / prod;
    const cplx quad = contour_oracle([&](cplx t) { return monomial_over_poles(t, m - k - 2, b); }, 4096) / prod;
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    CHECK(std::abs(rhs - quad) < 1e-10);
  }
}

TEST_CASE("circle quadrature") {
  for (int N : {32, 33, 100}) CHECK(std::abs(quadrature_circle_integral([](cplx) { return cplx(1.0); }, N) - 1.0) < 1e-15);
  // Against dt/(2 pi i t) the mean of 1/(t - 0.5) is the value of 1/(t (t - 0.5))
  // integrated in dt, which is 0.
  CHECK(std::abs(quadrature_circle_integral([](cplx t) { return 1.0 / (t - 0.5); }, 256)) < 1e-12);
  CHECK(std::abs(contour_circle_integral([](cplx t) { return 1.0 / (t - 0.5); }, 256) - 1.0) < 1e-12);
  CHECK(std::abs(contour_circle_integral([](cplx t) { return 1.0 / (t * (t - 0.5) * (t - 2.0)); }, 512) - (-1.0 / 3.0)) <
        1e-12);
  CHECK_THROWS_AS(quadrature_circle_integral([](cplx) { return cplx(1.0); }, 31), PreconditionError);
  CHECK_THROWS_AS(quadrature_circle_integral([](cplx t) { return 1.0 / (t - 1.0); }, 64), NumericalDomainError);
}

TEST_CASE("scaled poles and the transfer constant") {
  const std::vector<double> ang{0.3, 1.2, 2.5};
  const auto s = scaled_poles(ang, 1, 2, 0.8);
  CHECK(std::abs(s[0] - 0.8 * oracle::expi(0.3)) < 1e-15);
  CHECK(std::abs(s[1] - oracle::expi(1.2) / 0.8) < 1e-15);
  CHECK(std::abs(s[2] - oracle::expi(2.5) / 0.8) < 1e-15);
  // n = 1, q = 1: -(t'_1 t'_2)^{1/2}
  CHECK(std::abs(transfer_constant(1, std::vector<double>{0.0, kPi}, 1) - (-I)) < 1e-15);
  // n = 2: (-1)^{2q + 1} prod t' / 2
  CHECK(std::abs(transfer_constant(2, ang, 2) - (-0.5 * oracle::expi(4.0))) < 1e-14);
}

TEST_CASE("rank one transfer integral") {
  // Poles 0.9 and -1/0.9, exponent 0: K / (0.9 + 1/0.9) with K = -i.
  const std::vector<double> ang{0.0, kPi};
  CHECK(std::abs(transfer_integral_n1(0, ang, 1, 1, 0.9) - (-90.0 / 181.0) * I) < 1e-15);

  std::mt19937_64 g(29);
  for (int c = 0; c < 40; ++c) {
    const int p = 1 + c % 3, q = c % 4, k = c % 7 - 3;
    const auto a = oracle::random_angles(g, p + q, 0.2);
    const double r = 0.7 + 0.02 * (c % 10);
    // K(t') times the contour integral of t^{p-k-1} over the scaled poles.
    cplx K = (q % 2 ? -1.0 : 1.0);
    for (double x : a) K *= oracle::expi(x / 2);
    std::vector<cplx> poles;
    for (int i = 0; i < p + q; ++i) poles.push_back(i < p ? r * oracle::expi(a[i]) : oracle::expi(a[i]) / r);
    const cplx want = K * contour_oracle([&](cplx t) { return monomial_over_poles(t, p - k - 1, poles); }, 4096);
    CHECK(std::abs(transfer_integral_n1(k, a, p, q, r) - want) < 1e-10 * std::max(1.0, std::abs(want)));
  }
  CHECK_THROWS_AS(transfer_integral_n1(0, std::vector<double>{0.5, 0.5}, 1, 1, 0.9), PreconditionError);
  CHECK_THROWS_AS(transfer_integral_n1(0, ang, 1, 1, 1.0), PreconditionError);
  CHECK_THROWS_AS(transfer_integral_n1(0, ang, 1, 1, 0.0), PreconditionError);
}

TEST_CASE("general transfer integral reduces to rank one") {
  const std::vector<double> ang{0.4, 1.9, 4.0};
  for (int k = -3; k <= 3; ++k) {
    const cplx a = transfer_integral_general(HighestWeight{1, 2, 1, {k}}, ang, 0.85);
    CHECK(std::abs(a - transfer_integral_n1(k, ang, 2, 1, 0.85)) < 1e-14 * std::max(1.0, std::abs(a)));
  }
  CHECK_THROWS_AS(transfer_integral_general(HighestWeight{5, 5, 5, {0, 0, 0, 0, 0}}, ang, 0.9), PreconditionError);
}

TEST_CASE("general transfer integral against the unexpanded integrand") {
  // (1/2) \int conj(chi) |D|^2 Theta(t t') over U(2), poles at radius r and 1/r.
  const double r = 0.9;
  const int N = 256;
  struct Case {
    int p, q;
    std::vector<int> lambda;
    std::vector<double> ang;
  };
  for (const auto& c : {Case{1, 1, {0, 0}, {0.4, 2.2}}, Case{1, 1, {1, -1}, {1.0, 5.0}},
                        Case{2, 1, {1, 0}, {0.3, 2.0, 4.1}}, Case{1, 2, {0, -1}, {5.5, 1.2, 3.3}}}) {
    const int p = c.p, q = c.q, n = 2;
    std::vector<cplx> tp;
    for (int a = 0; a < p + q; ++a) tp.push_back(std::polar(a < p ? r : 1 / r, c.ang[a]));
    cplx sum = 0.0;
    const double h = oracle::kTwoPi / N;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const std::vector<double> th{h * i, h * (j + 0.5)};
        const cplx t1 = oracle::expi(th[0]), t2 = oracle::expi(th[1]);
        const cplx D = oracle::expi(-(th[0] + th[1]) / 2) * (t1 - t2);
        const cplx chi = oracle::bialternant(c.lambda, q - p, th);
        cplx theta = ((n * q) % 2 ? -1.0 : 1.0) * std::pow(t1 * t2, p) * oracle::expi((th[0] + th[1]) * (q - p) / 2);
        for (cplx x : tp) theta *= x / ((t1 - x) * (t2 - x));
        sum += std::conj(chi) * std::norm(D) * theta;
      }
    const cplx want = sum / (2.0 * N * N);
    const cplx got = transfer_integral_general(HighestWeight{n, p, q, c.lambda}, c.ang, r) * std::pow(r, p - q);
    CHECK(std::abs(got - want) < 1e-8 * std::abs(want));
  }
}

TEST_CASE("general transfer integral is symmetric in the inner slots") {
  const auto w = HighestWeight{2, 2, 1, {1, 0}};
  const cplx a = transfer_integral_general(w, std::vector<double>{0.3, 2.0, 4.1}, 0.8);
  const cplx b = transfer_integral_general(w, std::vector<double>{2.0, 0.3, 4.1}, 0.8);
  CHECK(std::abs(a - b) < 1e-13 * std::abs(a));
  const auto w3 = HighestWeight{3, 2, 2, {1, 0, -1}};
  const cplx c = transfer_integral_general(w3, std::vector<double>{0.3, 2.0, 4.1, 5.2}, 0.8);
  const cplx d = transfer_integral_general(w3, std::vector<double>{0.3, 2.0, 5.2, 4.1}, 0.8);
  CHECK(std::abs(c - d) < 1e-12 * std::abs(c));
}

TEST_CASE("r sequences and extrapolation") {
  const auto d = default_r_sequence();
  REQUIRE(d.size() == 10);
  CHECK(d.front() == 1 - 0.125);
  CHECK(d.back() == 1 - std::ldexp(1.0, -12));
  const auto a = auto_r_sequence(std::vector<double>{0.0, 0.01});
  REQUIRE(a.size() == 10);
  CHECK(1 - a.front() == doctest::Approx(0.01 / 16));
  CHECK_THROWS_AS(auto_r_sequence(std::vector<double>{0.3, 0.3}), PreconditionError);

  // A polynomial in h = 1 - r is reproduced exactly.
  std::vector<std::pair<double, cplx>> seq;
  for (double r : d) {
    const double h = 1 - r;
    seq.emplace_back(r, cplx(2.0 - 3 * h + h * h, h * h * h));
  }
  const auto e = extrapolate_to_one(seq);
  CHECK(std::abs(e.extrapolated - 2.0) < 1e-12);
  CHECK(e.errorEstimate >= 0);
  CHECK(e.method == Method::Extrapolated);
  CHECK_THROWS_AS(extrapolate_to_one({}), PreconditionError);
  CHECK_THROWS_AS(extrapolate_to_one({{0.9, 1.0}, {0.8, 1.0}}), PreconditionError);
}

TEST_CASE("rank one limit matches the closed form") {
  std::mt19937_64 g(31);
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 1}, std::pair{0, 2}}) {
    for (int c = 0; c < 10; ++c) {
      const int k = c - 4;
      const auto a = oracle::random_angles(g, p + q, 1e-3);
      const auto lim = transfer_limit_n1(k, a, p, q, auto_r_sequence(a));
      const cplx closed = char_closed_form_n1(k, a, p, q).value * static_cast<double>(limit_convention_constant(p, q));
      CHECK(std::abs(lim.extrapolated - closed) < 1e-8 * std::max(1.0, std::abs(closed)));
      CHECK(lim.rSequence.size() == 10);
    }
  }
  CHECK(limit_convention_constant(1, 1) == -1);
  CHECK(limit_convention_constant(2, 2) == 1);
}

TEST_CASE("limit with the default sequence at well separated angles") {
  const std::vector<double> a{0.2, 2.4};
  const auto lim = transfer_limit_n1(1, a, 1, 1);
  const cplx closed = -char_closed_form_n1(1, a, 1, 1).value;
  CHECK(std::abs(lim.extrapolated - closed) < 1e-8);
  CHECK(lim.errorEstimate < 1e-8);
}

TEST_CASE("rank two limit") {
  const auto w = HighestWeight{2, 1, 1, {1, 0}};
  const std::vector<double> a{0.5, 2.9};
  const auto lim = transfer_limit_general(w, a, auto_r_sequence(a));
  const cplx direct = transfer_integral_general(w, a, 1 - 1e-7);
  CHECK(std::abs(lim.extrapolated - direct) < 1e-5 * std::abs(direct));
}

TEST_CASE("closed form examples") {
  const std::vector<double> ang{0.0, kPi};
  CHECK(std::abs(char_closed_form_n1(1, ang, 1, 1).value - (-0.5 * I)) < 1e-14);
  for (double th : {0.0, 0.8, 4.0}) {
    const auto v = char_closed_form_n1(0, std::vector<double>{th}, 1, 0);
    CHECK(std::abs(v.value - oracle::expi(th / 2)) < 1e-15);
    CHECK(v.netHalfShift == HalfInteger::from_twice(1));
  }
  CHECK_THROWS_AS(char_closed_form_n1(0, std::vector<double>{0.4, 0.4}, 1, 1), NumericalDomainError);
  CHECK_THROWS_AS(char_closed_form_n1(0, std::vector<double>{0.4}, 1, 1), PreconditionError);
}

TEST_CASE("both case thresholds give the same closed form when p >= 1") {
  std::mt19937_64 g(37);
  for (int p = 1; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      if (p + q == 0) continue;
      const auto a = oracle::random_angles(g, p + q, 0.1);
      for (int k = -5; k <= 5; ++k) {
        const cplx x = char_closed_form_n1(k, a, p, q, CaseThreshold::PMinusOne).value;
        const cplx y = char_closed_form_n1(k, a, p, q, CaseThreshold::Zero).value;
        CHECK(std::abs(x - y) < 1e-10 * std::max(1.0, std::abs(x)));
      }
    }
  CHECK(to_string(CaseThreshold::PMinusOne) == "k <= p-1");
}

TEST_CASE("with p = 0 the thresholds split at k = 0 and the limit picks k <= p-1") {
  std::mt19937_64 g(39);
  for (int q = 1; q <= 3; ++q) {
    const auto a = oracle::random_angles(g, q, 0.1);
    const cplx x = char_closed_form_n1(0, a, 0, q, CaseThreshold::PMinusOne).value;
    const cplx y = char_closed_form_n1(0, a, 0, q, CaseThreshold::Zero).value;
    const cplx lim = transfer_limit_n1(0, a, 0, q, auto_r_sequence(a)).extrapolated *
                     static_cast<double>(limit_convention_constant(0, q));
    CHECK(std::abs(x - y) > 0.5);
    CHECK(std::abs(lim - x) < 1e-8);
    for (int k : {-3, -1, 1, 2}) {
      const cplx u = char_closed_form_n1(k, a, 0, q, CaseThreshold::PMinusOne).value;
      const cplx v = char_closed_form_n1(k, a, 0, q, CaseThreshold::Zero).value;
      CHECK(std::abs(u - v) < 1e-12);
    }
  }
  CHECK(to_string(CaseThreshold::Zero) == "k <= 0");
}

TEST_CASE("noncompact Cartan values") {
  const double X = std::log(2.0);
  CHECK(std::abs(char_noncompact_u11(1, 0.0, X) - (-1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(char_noncompact_u11(0, 0.0, X) - (-2.0 / 3.0)) < 1e-15);
  for (int k = -3; k <= 3; ++k)
    for (double th : {0.0, 1.1, 2.7})
      for (double x : {0.3, 1.0, 2.2}) {
        const cplx v = char_noncompact_u11(k, th, x);
        const cplx quad = oracle::trapezoid_circle(noncompact_u11_integrand(k, th, x), 2048);
        CHECK(std::abs(v - quad) < 1e-10);
        CHECK(std::abs(char_noncompact_u11(k, th, -x) - v) < 1e-15);
      }
  // Independent spelling of the integrand.
  const auto f = noncompact_u11_integrand(2, 0.4, 0.5);
  const cplx z = oracle::expi(1.3);
  const cplx want = std::pow(z, -1) * oracle::expi(0.4) /
                    ((z * oracle::expi(0.4) * std::exp(0.5) - 1.0) * (z * oracle::expi(0.4) * std::exp(-0.5) - 1.0));
  CHECK(std::abs(f(z) - want) < 1e-14);
  CHECK_THROWS_AS(char_noncompact_u11(1, 0.3, 0.0), NumericalDomainError);
}

TEST_CASE("hecht consistency") {
  const std::vector<std::pair<double, double>> grid{{0.0, 0.3}, {0.0, 0.8}, {0.5, 0.3}, {0.5, 0.8}};
  for (int k : {-2, -1, 0, 1, 2, 3}) {
    const auto rep = hecht_check(k, grid);
    CHECK(rep.pass);
    CHECK(rep.matched == "inverse");
    CHECK(rep.maxDeviation < 1e-8);
    CHECK(std::abs(rep.constant - 1.0) < 1e-10);
    CHECK(rep.quadratureMaxError < 1e-10);
    REQUIRE(rep.conventions.size() == 2);
    const auto& direct = rep.conventions[1];
    CHECK(direct.name == "direct");
    for (std::size_t i = 0; i < rep.used.size(); ++i)
      CHECK(std::abs(direct.ratios[i] - oracle::expi(-2 * rep.used[i].first * k)) < 1e-10);
  }
  const auto rep = hecht_check(1, {{0.0, 0.3}, {0.4, 0.0}, {0.5, 0.8}});
  CHECK(rep.used.size() == 2);
  REQUIRE(rep.skipped.size() == 1);
  CHECK(rep.skipped[0].first == 0.4);
  CHECK_THROWS_AS(hecht_check(1, {}), PreconditionError);
  CHECK_THROWS_AS(hecht_check(1, {{0.2, 0.0}}), PreconditionError);
}

TEST_CASE("coset representatives") {
  CHECK(coset_representatives(1, 1, 1).size() == 1);
  CHECK(coset_representatives(1, 1, 1)[0].is_identity());
  CHECK(coset_representatives(2, 2, 1).size() == 3);
  CHECK(coset_representatives(2, 1, 3).size() == 1);
  const auto binom = [](int n, int k) {
    double b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return static_cast<std::size_t>(std::lround(b));
  };
  for (int p = 1; p <= 4; ++p)
    for (int q = 0; q <= 4 && p + q <= 7; ++q) {
      const auto c1 = coset_representatives(p, q, 1);
      CHECK(c1.size() == binom(p + q - 1, q));
      for (const auto& s : c1) CHECK(s(0) == 0);
      if (q >= 1) {
        const auto c2 = coset_representatives(p, q, p + 1);
        CHECK(c2.size() == binom(p + q - 1, p));
        for (const auto& s : c2) CHECK(s(p) == p);
      }
    }
  CHECK_THROWS_AS(coset_representatives(2, 2, 2), PreconditionError);
  CHECK_THROWS_AS(coset_representatives(5, 4, 1), PreconditionError);
}

TEST_CASE("orbit exponential sums") {
  const auto spec = orbit_spec_for_weight(1, 1, 1);
  CHECK(spec.h == 2);
  for (double a : {0.2, 1.4})
    for (double b : {0.9, 3.3}) {
      const std::vector<double> x{a, b};
      CHECK(std::abs(orbit_exponential_sum(spec, x) - oracle::expi(-b)) < 1e-14);
    }

  const auto s21 = orbit_spec_for_weight(2, 1, 1);
  const std::vector<double> x{0.3, 1.7, 2.9}, y{1.7, 0.3, 2.9};
  const cplx u = orbit_exponential_sum(s21, x), v = orbit_exponential_sum(s21, y);
  CHECK(std::abs(u + v) < 1e-13);
  CHECK_THROWS_AS(orbit_exponential_sum(s21, std::vector<double>{0.3, 0.3, 1.0}), NumericalDomainError);
}

TEST_CASE("orbit sums are proportional to D times the character") {
  std::mt19937_64 g(41);
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    for (int k = -1; k <= 3; ++k) {
      const auto spec = orbit_spec_for_weight(p, q, k);
      std::vector<cplx> ratios;
      for (int i = 0; i < 8; ++i) {
        const auto x = oracle::random_angles(g, p + q, 0.1);
        ratios.push_back(orbit_exponential_sum(spec, x) / compact_cartan_reference(k, x, p, q));
      }
      for (const auto& r : ratios) CHECK(std::abs(r - ratios[0]) < 1e-9 * std::abs(ratios[0]));
      CHECK(std::abs(std::abs(ratios[0]) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("displayed xi breaks proportionality") {
  std::mt19937_64 g(43);
  const auto spec = orbit_spec_for_weight(2, 1, 1, XiConvention::Displayed);
  CHECK(spec.xi[0] == HalfInteger::from_twice(1));
  std::vector<cplx> ratios;
  for (int i = 0; i < 8; ++i) {
    const auto x = oracle::random_angles(g, 3, 0.1);
    ratios.push_back(orbit_exponential_sum(spec, x) / compact_cartan_reference(1, x, 2, 1));
  }
  double dev = 0;
  for (const auto& r : ratios) dev = std::max(dev, std::abs(r - ratios[0]) / std::abs(ratios[0]));
  CHECK(dev > 1e-3);
}

TEST_CASE("orbit spec validation") {
  auto s = orbit_spec_for_weight(2, 2, 0);
  CHECK_NOTHROW(validate(s));
  s.xi[1] = HalfInteger(5);
  CHECK_THROWS_AS(validate(s), PreconditionError);
  s = orbit_spec_for_weight(2, 2, 0);
  s.lambdaVec.pop_back();
  CHECK_THROWS_AS(validate(s), PreconditionError);
  s = orbit_spec_for_weight(2, 2, 0);
  s.h = 2;
  CHECK_THROWS_AS(validate(s), PreconditionError);
  CHECK_THROWS_AS(orbit_spec_for_weight(2, 0, 3), PreconditionError);
}

TEST_CASE("p function") {
  CHECK(p_function(std::vector<double>{0.0, 0.0, 0.0}) == 1.0);
  for (double s : {0.1, 0.7, 2.0}) {
    CHECK(p_function(std::vector<double>{s, -s}) == doctest::Approx(std::sinh(s) / s).epsilon(1e-14));
    const std::vector<double> x{s, 0.3, -1.2 * s};
    const std::vector<double> mx{-s, -0.3, 1.2 * s};
    CHECK(p_function(x) == doctest::Approx(p_function(mx)).epsilon(1e-14));
  }
  CHECK(p_function(std::vector<double>{0.4}) == 1.0);
  const double f = std::sinh(0.3) / 0.3;
  CHECK(p_function(std::vector<double>{0.4, 0.4, 1.0}) == doctest::Approx(f * f).epsilon(1e-14));
}

TEST_CASE("method names") {
  CHECK(to_string(Method::ResidueExact) == "residue-exact");
  CHECK(to_string(Method::Quadrature) == "quadrature");
  CHECK(to_string(Method::Extrapolated) == "extrapolated");
}
