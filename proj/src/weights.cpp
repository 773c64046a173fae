#include "howe/weights.hpp"

#include <algorithm>

#include "howe/errors.hpp"

namespace howe {

bool satisfies_invariants(int n, int p, int q, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != n) return false;
  int positives = 0, negatives = 0;
  for (int a = 0; a < n; ++a) {
    if (a > 0 && lambda[a] > lambda[a - 1]) return false;
    positives += lambda[a] > 0;
    negatives += lambda[a] < 0;
  }
  return positives <= q && negatives <= p;
}

HighestWeight make_weight(int n, int p, int q, std::vector<int> lambda) {
  if (n < 1 || p < 0 || q < 0 || p + q < 1) throw PreconditionError("need n >= 1, p, q >= 0, p + q >= 1");
  if (!satisfies_invariants(n, p, q, lambda)) throw PreconditionError("lambda is not an admissible highest weight");
  return HighestWeight{n, p, q, std::move(lambda)};
}

std::vector<HighestWeight> enumerate_weights(int n, int p, int q, int bound) {
  if (n < 1 || p < 0 || q < 0 || p + q < 1) throw PreconditionError("need n >= 1, p, q >= 0, p + q >= 1");
  if (bound < 0 || bound > kMaxWeightBound) throw PreconditionError("bound must lie in 0..12");

  // Non-increasing sequences only: recurse with a running upper limit.
  std::vector<HighestWeight> out;
  std::vector<int> lambda(n);
  auto rec = [&](auto&& self, int a, int upper, int pos, int neg) -> void {
    if (a == n) {
      out.push_back(HighestWeight{n, p, q, lambda});
      return;
    }
    for (int v = -bound; v <= upper; ++v) {
      const int np = pos + (v > 0), nn = neg + (v < 0);
      if (np > q || nn > p) continue;
      lambda[a] = v;
      self(self, a + 1, v, np, nn);
    }
  };
  rec(rec, 0, bound, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const HighestWeight& x, const HighestWeight& y) { return x.lambda < y.lambda; });
  return out;
}

RhoVector rho(int n) {
  if (n < 1) throw PreconditionError("rho needs n >= 1");
  RhoVector r{n, {}};
  for (int a = 1; a <= n; ++a) r.entries.push_back(HalfInteger::from_twice(n - 2 * a + 1));
  return r;
}

bool is_dominant_regular(const HighestWeight& w) {
  if (static_cast<int>(w.lambda.size()) != w.n || w.n < 1) return false;
  const RhoVector r = rho(w.n);
  for (int a = 1; a < w.n; ++a)
    if (!(HalfInteger(w.lambda[a - 1]) + r.entries[a - 1] > HalfInteger(w.lambda[a]) + r.entries[a])) return false;
  return true;
}

WeightParameters to_parameters(const HighestWeight& w) {
  WeightParameters out;
  for (int v : w.lambda)
    if (v > 0) out.mu.push_back(v);
  for (int a = w.n - 1; a >= 0; --a)
    if (w.lambda[a] < 0) out.nu.push_back(-w.lambda[a]);
  out.s = static_cast<int>(out.mu.size());
  out.r = static_cast<int>(out.nu.size());
  return out;
}

HighestWeight from_parameters(int n, int p, int q, const WeightParameters& params) {
  const auto positive_non_increasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] <= 0 || (i > 0 && v[i] > v[i - 1])) return false;
    return true;
  };
  if (params.r < 0 || params.s < 0 || params.r > p || params.s > q || params.r + params.s > n ||
      static_cast<int>(params.nu.size()) != params.r || static_cast<int>(params.mu.size()) != params.s ||
      !positive_non_increasing(params.nu) || !positive_non_increasing(params.mu))
    throw PreconditionError("invalid (r, s, nu, mu) parameters");
  std::vector<int> lambda(n, 0);
  for (int a = 0; a < params.s; ++a) lambda[a] += params.mu[a];
  for (int a = 0; a < params.r; ++a) lambda[n - 1 - a] -= params.nu[a];
  return make_weight(n, p, q, std::move(lambda));
}

}  // namespace howe
