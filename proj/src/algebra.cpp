#include "howe/algebra.hpp"

#include <cmath>
#include <numeric>

#include "howe/errors.hpp"

namespace howe {

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images.resize(images.size());
  for (int i = 0; i < size(); ++i) inv.images[images[i]] = i;
  inv.sign = sign;
  return inv;
}

Permutation Permutation::compose(const Permutation& right) const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 0; i < size(); ++i) out.images[i] = images[right.images[i]];
  out.sign = sign * right.sign;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool is_permutation(std::span<const int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int permutation_sign(std::span<const int> images) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) sign = -sign;
  return sign;
}

Permutation make_permutation(std::vector<int> images) {
  if (!is_permutation(images)) throw PreconditionError("not a permutation");
  Permutation p;
  p.sign = permutation_sign(images);
  p.images = std::move(images);
  return p;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_permutation_size(int n) {
  if (n < 1 || n > kMaxPermutationSize)
    throw PreconditionError("permutation size " + std::to_string(n) + " outside 1..9");
}

std::vector<Permutation> iterate_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

cplx half_power(const AngleModulusPoint& z, HalfInteger e) {
  const double x = e.value();
  return std::polar(std::pow(z.modulus, x), z.angle * x);
}

cplx vandermonde_product(std::span<const cplx> t) {
  cplx v = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) v *= t[j] - t[i];
  return v;
}

cplx vandermonde_sum(std::span<const cplx> t) {
  const int n = static_cast<int>(t.size());
  check_permutation_size(n);
  // powers[b][e] = t_b^e
  std::vector<std::vector<cplx>> powers(n, std::vector<cplx>(n, 1.0));
  for (int b = 0; b < n; ++b)
    for (int e = 1; e < n; ++e) powers[b][e] = powers[b][e - 1] * t[b];
  std::vector<cplx> terms;
  terms.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& beta) {
    cplx term = static_cast<double>(beta.sign);
    for (int i = 0; i < n; ++i) term *= powers[beta(i)][i];
    terms.push_back(term);
  });
  return pairwise_sum(terms);
}

namespace {

template <class T>
T pairwise(std::span<const T> xs) {
  if (xs.empty()) return T{};
  if (xs.size() <= 8) {
    T s{};
    for (const T& x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise(xs.first(half)) + pairwise(xs.subspan(half));
}

void neumaier(double x, double& sum, double& comp) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x))
    comp += (sum - t) + x;
  else
    comp += (x - t) + sum;
  sum = t;
}

}  // namespace

cplx pairwise_sum(std::span<const cplx> xs) { return pairwise(xs); }
double pairwise_sum(std::span<const double> xs) { return pairwise(xs); }

cplx compensated_sum(std::span<const cplx> xs) {
  double re = 0, re_c = 0, im = 0, im_c = 0;
  for (const cplx& x : xs) {
    neumaier(x.real(), re, re_c);
    neumaier(x.imag(), im, im_c);
  }
  return {re + re_c, im + im_c};
}

}  // namespace howe
