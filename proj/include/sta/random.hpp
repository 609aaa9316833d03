#pragma once

#include "sta/planewave.hpp"

#include <random>

namespace sta {

/// Deterministic generator of small random algebra elements. Rationals have
/// numerator in [-9, 9] and denominator in [1, 9]; float mode uses the same
/// values converted to binary64.
template <Real T> class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  T real() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rational q(num(rng_), den(rng_));
    if constexpr (scalar_traits<T>::exact) {
      return q;
    } else {
      return to_double(q);
    }
  }

  Complex<T> complex() { return {real(), real()}; }

  Multivector<T> multivector() {
    Multivector<T> m;
    for (unsigned i = 0; i < 16; ++i) m[BladeIndex{i}] = complex();
    return m;
  }

  Multivector<T> real_multivector() {
    Multivector<T> m;
    for (unsigned i = 0; i < 16; ++i) m[BladeIndex{i}] = Complex<T>(real());
    return m;
  }

  Multivector<T> even() { return even_odd_split(multivector()).first; }

  PlaneWaveParams<T> params() { return {complex(), complex(), complex(), complex()}; }

  BladeIndex blade() {
    std::uniform_int_distribution<unsigned> d(0, 15);
    return BladeIndex{d(rng_)};
  }

  /// Superposition of a few terms with small integer momenta.
  Field<T> field(int terms = 3) {
    std::uniform_int_distribution<int> p(-3, 3);
    std::vector<PlaneWaveTerm<T>> out;
    for (int i = 0; i < terms; ++i) {
      FourMomentum<T> mom{T(p(rng_)), {T(p(rng_)), T(p(rng_)), T(p(rng_))}};
      out.push_back({multivector(), mom});
    }
    return Field<T>(std::move(out));
  }

  Sign sign() { return std::bernoulli_distribution(0.5)(rng_) ? Sign::plus : Sign::minus; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sta
