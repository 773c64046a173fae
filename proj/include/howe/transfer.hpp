#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "howe/algebra.hpp"
#include "howe/compact_characters.hpp"
#include "howe/weights.hpp"

namespace howe {

inline constexpr double kPoleGap = 1e-10;
inline constexpr int kMaxTransferRank = 4;

enum class Method { ResidueExact, Quadrature, Extrapolated };
std::string to_string(Method m);

struct TransferDiagnostics {
  std::vector<std::pair<double, cplx>> rSequence;
  cplx extrapolated;
  double errorEstimate = 0.0;
  Method method = Method::Extrapolated;
};

// (1/2 pi i) \oint_{|t|=1} t^k / prod_i (t - a_i) dt, with |a_i| < 1 for
// i < p and |a_i| > 1 otherwise.
cplx residue_circle_integral(int k, std::span<const cplx> a, int p, int q);

using CircleIntegrand = std::function<cplx(cplx)>;

// (1/N) sum_j f(e^{2 pi i j / N}), i.e. the integral of f against dt/(2 pi i t).
cplx quadrature_circle_integral(const CircleIntegrand& f, int N);

// (1/2 pi i) \oint g(t) dt by the same rule, fed t g(t).
cplx contour_circle_integral(const CircleIntegrand& g, int N);

// Poles r t'_a for a < p and t'_a / r for a >= p, t' on the unit circle.
std::vector<cplx> scaled_poles(std::span<const double> angles, int p, int q, double r);

// K(t') = (-1)^{nq + n(n-1)/2} (prod_a t'_a)^{n/2} / n!
cplx transfer_constant(int n, std::span<const double> angles, int q);

// p - n - 2 + w^{-1}(b) - lambda_{w^{-1}(b)} + beta^{-1}(b), 1-based positions.
int transfer_exponent(int b, const Permutation& w, const Permutation& beta, const std::vector<int>& lambda,
                      int p);

cplx transfer_integral_n1(int k, std::span<const double> angles, int p, int q, double r);
cplx transfer_integral_general(const HighestWeight& w, std::span<const double> angles, double r);

// r_m = 1 - 2^{-m}, m = 3..12
std::vector<double> default_r_sequence();

// Ten points h = 1 - r halving from min(1/8, gap/16), gap the smallest circular
// distance between the angles. The integrals are analytic in h on a disc of
// radius about gap/2, so the default sequence is only usable for gaps well
// above 2^{-8}.
std::vector<double> auto_r_sequence(std::span<const double> angles);

// Polynomial extrapolation in h = 1 - r to h = 0. Uses the trailing window
// whose last correction is smallest; errorEstimate is twice that correction,
// floored at the rounding level of the inputs.
TransferDiagnostics extrapolate_to_one(std::vector<std::pair<double, cplx>> seq);

TransferDiagnostics transfer_limit_n1(int k, std::span<const double> angles, int p, int q,
                                      const std::vector<double>& rs = default_r_sequence());
TransferDiagnostics transfer_limit_general(const HighestWeight& w, std::span<const double> angles,
                                           const std::vector<double>& rs = default_r_sequence());

// lim_{r -> 1} transfer_integral_n1 = limit_convention_constant(p, q) * char_closed_form_n1
int limit_convention_constant(int p, int q);

// Where the closed form switches from the inner (a <= p) residue sum to the
// outer one: k <= p - 1 or k <= 0.
enum class CaseThreshold { PMinusOne, Zero };
std::string to_string(CaseThreshold c);

CharacterValue char_closed_form_n1(int k, std::span<const AngleModulusPoint> t, int p, int q,
                                   CaseThreshold threshold = CaseThreshold::PMinusOne);
CharacterValue char_closed_form_n1(int k, std::span<const double> angles, int p, int q,
                                   CaseThreshold threshold = CaseThreshold::PMinusOne);

// Value of the contour integral of noncompact_u11_integrand. Even in X.
cplx char_noncompact_u11(int k, double theta, double X);

// z^{1-k} e^{i theta} / ((z e^{i theta + X} - 1)(z e^{i theta - X} - 1))
CircleIntegrand noncompact_u11_integrand(int k, double theta, double X);

struct HechtConvention {
  std::string name;
  std::vector<cplx> ratios;
  cplx constant;
  double maxDeviation = 0.0;  // max |ratio - constant| / |constant|
  bool constantRatio = false;
};

struct HechtReport {
  int k = 0;
  std::vector<std::pair<double, double>> used;
  std::vector<std::pair<double, double>> skipped;
  std::vector<HechtConvention> conventions;
  bool pass = false;
  std::string matched;
  cplx constant;
  double maxDeviation = 0.0;
  double quadratureMaxError = 0.0;  // char_noncompact_u11 vs its contour integral
};

// Compares the compact closed form continued to diag(e^{i theta -|X|}, e^{i theta + |X|})
// against char_noncompact_u11. Two placements are tried: "inverse" evaluates at
// angle -theta, "direct" at angle theta.
HechtReport hecht_check(int k, const std::vector<std::pair<double, double>>& grid, double tol = 1e-6,
                        int quadratureN = 2048);

// h is 1-based, h in {1, p + 1}.
std::vector<Permutation> coset_representatives(int p, int q, int h);

enum class XiConvention { Displayed, Corrected };

struct OrbitSumSpec {
  int p = 0;
  int q = 0;
  int h = 1;
  std::vector<HalfInteger> lambdaVec;
  std::vector<HalfInteger> xi;
};

void validate(const OrbitSumSpec& spec);

// h = p + 1 for k > p - 1, else h = 1. Displayed xi is (p+q-2)/2 in every
// slot, Corrected is -(p+q-2)/2.
OrbitSumSpec orbit_spec_for_weight(int p, int q, int k, XiConvention xi = XiConvention::Corrected);

// sum_{mu in A^h} sgn(mu) sum_{omega in S_p x S_q} sgn(omega) e^{i <mu.lambda + xi, omega.x>}
// with (sigma.v)_i = v_{sigma(i)}.
cplx orbit_exponential_sum(const OrbitSumSpec& spec, std::span<const double> x);

// D(x) Theta_{Pi'_k}(x) on the compact Cartan of U(p, q).
cplx compact_cartan_reference(int k, std::span<const double> x, int p, int q);

// prod_{i<j} sinh(u/2)/(u/2), u = x_i - x_j.
double p_function(std::span<const double> x);

}  // namespace howe
