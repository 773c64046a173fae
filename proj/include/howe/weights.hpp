#pragma once

#include <vector>

#include "howe/algebra.hpp"

namespace howe {

inline constexpr int kMaxWeightBound = 12;

// lambda is non-increasing with at most q positive and at most p negative
// entries. The weight itself is (q-p)/2 + lambda_a in every slot.
struct HighestWeight {
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<int> lambda;

  HalfInteger shift() const { return HalfInteger::from_twice(q - p); }
  HalfInteger stored(int a) const { return shift() + HalfInteger(lambda[a]); }
  bool operator==(const HighestWeight&) const = default;
};

bool satisfies_invariants(int n, int p, int q, const std::vector<int>& lambda);

// Throws PreconditionError if the invariants fail.
HighestWeight make_weight(int n, int p, int q, std::vector<int> lambda);

std::vector<HighestWeight> enumerate_weights(int n, int p, int q, int bound);

struct RhoVector {
  int n = 0;
  std::vector<HalfInteger> entries;  // (n - 2a + 1)/2, a = 1..n
};

RhoVector rho(int n);

bool is_dominant_regular(const HighestWeight& w);

// The same weight in (r, s, nu, mu) form: mu fills the first s slots, -nu the
// last r slots in reverse, everything else is 0. Both lists are non-increasing
// and positive, r <= p, s <= q, r + s <= n.
struct WeightParameters {
  int r = 0;
  int s = 0;
  std::vector<int> nu;
  std::vector<int> mu;
  bool operator==(const WeightParameters&) const = default;
};

WeightParameters to_parameters(const HighestWeight& w);
HighestWeight from_parameters(int n, int p, int q, const WeightParameters& params);

}  // namespace howe
