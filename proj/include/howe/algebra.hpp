#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace howe {

using cplx = std::complex<double>;

inline constexpr int kMaxPermutationSize = 9;

// A number in (1/2)Z, stored exactly as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int integer) : twice_(2 * integer) {}

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger half(int numerator) { return from_twice(numerator); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger operator*(int m) const { return from_twice(twice_ * m); }
  constexpr auto operator<=>(const HalfInteger&) const = default;

  std::string str() const;

 private:
  int twice_ = 0;
};

// modulus * e^{i angle}. The angle is kept as given: angles differing by
// 2*pi are different points of the double cover.
struct AngleModulusPoint {
  double modulus = 1.0;
  double angle = 0.0;

  cplx value() const { return std::polar(modulus, angle); }
};

// Images are 0-based: images[i] is the image of i.
struct Permutation {
  std::vector<int> images;
  int sign = 1;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }
  Permutation inverse() const;
  Permutation compose(const Permutation& right) const;  // (this o right)
  bool is_identity() const;
};

int permutation_sign(std::span<const int> images);
bool is_permutation(std::span<const int> images);
Permutation make_permutation(std::vector<int> images);

std::int64_t factorial(int n);

// Visits all n! permutations in lexicographic order. Throws PreconditionError
// outside 1 <= n <= 9.
template <class F>
void for_each_permutation(int n, F&& f);

std::vector<Permutation> iterate_permutations(int n);

// modulus^e * e^{i angle e}, branch fixed by the stored angle.
cplx half_power(const AngleModulusPoint& z, HalfInteger e);

// prod_{i<j} (t_j - t_i)
cplx vandermonde_product(std::span<const cplx> t);

// sum_beta sgn(beta) prod_i t_{beta(i)}^{i-1}; n <= 9.
cplx vandermonde_sum(std::span<const cplx> t);

// vandermonde_sum == vandermonde_sign(n) * vandermonde_product for all n.
constexpr int vandermonde_sign(int /*n*/) { return 1; }

// Deterministic pairwise (tree) summation.
cplx pairwise_sum(std::span<const cplx> xs);
double pairwise_sum(std::span<const double> xs);

// Neumaier-compensated summation, used near singular points.
cplx compensated_sum(std::span<const cplx> xs);

void check_permutation_size(int n);

template <class F>
void for_each_permutation(int n, F&& f) {
  check_permutation_size(n);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  Permutation perm;
  do {
    perm.images = images;
    perm.sign = permutation_sign(images);
    f(static_cast<const Permutation&>(perm));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace howe

