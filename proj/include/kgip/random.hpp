#pragma once

#include <cstdint>
#include <limits>

#include "kgip/inner_products.hpp"

namespace kgip {

/// splitmix64 stream; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

ComplexVector random_vector(SplitMix64& rng, Index n);
ComplexMatrix random_hermitian(SplitMix64& rng, Index n);
/// Random unitary (Householder QR of a random complex matrix).
ComplexMatrix random_unitary(SplitMix64& rng, Index n);
/// Q diag(w) Q^dagger with w uniform in [w_min, w_max].
ComplexMatrix random_positive_hermitian(SplitMix64& rng, Index n, double w_min = 0.5, double w_max = 4.0);
FieldState random_field(SplitMix64& rng, Index n);
/// Weights uniform in [lo, hi].
InnerProductSpec random_spec(SplitMix64& rng, std::size_t modes, double lo = 0.2, double hi = 3.0);

}  // namespace kgip
