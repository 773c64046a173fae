#include "howe/compact_characters.hpp"

#include <cmath>
#include <numbers>

#include "howe/errors.hpp"
#include "howe/parallel.hpp"

namespace howe {

namespace {

void check_shapes(const HighestWeight& w, const TorusPoint& t) {
  if (w.n != t.size()) throw PreconditionError("weight rank and torus dimension differ");
  if (!is_dominant_regular(w)) throw PreconditionError("weight is not dominant regular");
}

}  // namespace

cplx weyl_numerator(const HighestWeight& w, const TorusPoint& t, bool compensated) {
  const int n = w.n;
  const RhoVector r = rho(n);
  // pw[a][c] = t_a^{(lambda+rho)_c + shift}
  std::vector<std::vector<cplx>> pw(n, std::vector<cplx>(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) pw[a][c] = half_power(t.point(a), w.stored(c) + r.entries[c]);
  std::vector<cplx> terms;
  terms.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& omega) {
    cplx term = static_cast<double>(omega.sign);
    for (int a = 0; a < n; ++a) term *= pw[a][omega(a)];
    terms.push_back(term);
  });
  return compensated ? compensated_sum(terms) : pairwise_sum(terms);
}

CharacterValue weyl_character(const HighestWeight& w, const TorusPoint& t) {
  check_shapes(w, t);
  const double gap = min_angle_gap(t.angles);
  if (gap < kSingularGap) throw NumericalDomainError("character evaluated at a singular torus point");
  const bool near = gap < kNearSingularGap;
  const cplx num = weyl_numerator(w, t, near);
  cplx den;
  if (near) {
    // Same product, but each difference t_i - t_j is formed from the angle
    // gap directly: 2i sin((a_i - a_j)/2) e^{i(a_i + a_j)/2}.
    den = 1.0;
    const HalfInteger e = HalfInteger::from_twice(-(w.n - 1));
    for (int i = 0; i < w.n; ++i) den *= half_power(t.point(i), e);
    for (int i = 0; i < w.n; ++i)
      for (int j = i + 1; j < w.n; ++j) {
        const double ai = t.angles[i], aj = t.angles[j];
        den *= cplx(0, 2 * std::sin(0.5 * (ai - aj))) * std::polar(1.0, 0.5 * (ai + aj));
      }
  } else {
    den = weyl_denominator(t);
  }
  return {num / den, w.shift(), near};
}

double dimension(const HighestWeight& w) {
  if (!is_dominant_regular(w)) throw PreconditionError("weight is not dominant regular");
  const RhoVector r = rho(w.n);
  double d = 1.0;
  for (int a = 0; a < w.n; ++a)
    for (int b = a + 1; b < w.n; ++b) {
      const double num = (HalfInteger(w.lambda[a]) + r.entries[a] - HalfInteger(w.lambda[b]) - r.entries[b]).value();
      d *= num / (r.entries[a] - r.entries[b]).value();
    }
  return d;
}

cplx character_inner_product(const HighestWeight& w1, const HighestWeight& w2, int N) {
  if (N < 64) throw PreconditionError("inner product grid needs N >= 64");
  if (w1.n != w2.n) throw PreconditionError("weights of different rank");
  if (!is_dominant_regular(w1) || !is_dominant_regular(w2)) throw PreconditionError("weight is not dominant regular");
  const int n = w1.n;
  std::size_t total = 1;
  for (int a = 0; a < n; ++a) total *= static_cast<std::size_t>(N);
  const double h = 2 * std::numbers::pi / N;

  // chi_1 conj(chi_2) |D|^2 = A_1 conj(A_2) with A the alternants, so no
  // division happens; cells closer than kSingularGap are still skipped.
  const auto values = parallel_map<cplx>(total, [&](std::size_t idx) {
    TorusPoint t;
    t.angles.resize(n);
    for (int a = 0; a < n; ++a) {
      const std::size_t j = idx % static_cast<std::size_t>(N);
      idx /= static_cast<std::size_t>(N);
      t.angles[a] = h * (static_cast<double>(j) + static_cast<double>(a) / n);
    }
    if (min_angle_gap(t.angles) < kSingularGap) return cplx(0.0);
    return weyl_numerator(w1, t) * std::conj(weyl_numerator(w2, t));
  });
  return pairwise_sum(values) / (static_cast<double>(factorial(n)) * static_cast<double>(total));
}

}  // namespace howe
