#pragma once

#include "howe/algebra.hpp"
#include "howe/tori.hpp"
#include "howe/weights.hpp"

namespace howe {

// Gaps in [kSingularGap, kNearSingularGap) are evaluated with compensated sums
// and flagged.
inline constexpr double kNearSingularGap = 1e-4;

struct CharacterValue {
  cplx value;
  // Per-angle exponent content modulo integers; a 2*pi shift of one angle
  // multiplies the value by (-1)^{2 * netHalfShift}.
  HalfInteger netHalfShift;
  bool nearSingular = false;
};

// Alternant sum_omega sgn(omega) prod_a t_a^{(lambda+rho)_{omega(a)} + (q-p)/2}.
cplx weyl_numerator(const HighestWeight& w, const TorusPoint& t, bool compensated = false);

CharacterValue weyl_character(const HighestWeight& w, const TorusPoint& t);

double dimension(const HighestWeight& w);

// (1/n!) (1/N^n) sum chi_1 conj(chi_2) |D|^2 over a uniform grid whose
// coordinate a is offset by a/n of a cell, so the diagonal is never sampled.
cplx character_inner_product(const HighestWeight& w1, const HighestWeight& w2, int N);

}  // namespace howe
