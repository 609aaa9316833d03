#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sta {

/// Spacetime metric diag(+1, -1, -1, -1); gamma_mu^2 = eta(mu, mu).
struct Metric {
  static constexpr std::array<int, 4> signature{+1, -1, -1, -1};
  static constexpr int eta(int mu, int nu) {
    return mu == nu ? signature[static_cast<std::size_t>(mu)] : 0;
  }
};

/// Basis blade of Cl(1,3) as a 4-bit mask. Bit mu set iff gamma_mu is a
/// factor; factors are kept in ascending order.
class BladeIndex {
 public:
  static constexpr int kCount = 16;

  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned bits) : bits_(bits) {
    if (bits > 15u) throw std::out_of_range("blade mask out of range");
  }

  constexpr unsigned bits() const { return bits_; }
  constexpr int grade() const { return std::popcount(bits_); }
  constexpr bool even() const { return grade() % 2 == 0; }

  /// Sign of the reversion on this blade: (-1)^{k(k-1)/2}.
  constexpr int reversion_sign() const {
    int k = grade();
    return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  }

  /// "s" for the scalar, otherwise "e" followed by the ascending indices.
  std::string key() const {
    if (bits_ == 0) return "s";
    std::string out = "e";
    for (int mu = 0; mu < 4; ++mu)
      if (bits_ & (1u << mu)) out.push_back(static_cast<char>('0' + mu));
    return out;
  }

  static BladeIndex from_key(const std::string& key) {
    if (key == "s") return BladeIndex{0};
    if (key.size() < 2 || key.size() > 5 || key[0] != 'e')
      throw std::invalid_argument("bad blade key: " + key);
    unsigned bits = 0;
    int last = -1;
    for (std::size_t i = 1; i < key.size(); ++i) {
      int mu = key[i] - '0';
      if (mu < 0 || mu > 3 || mu <= last)
        throw std::invalid_argument("bad blade key: " + key);
      bits |= 1u << mu;
      last = mu;
    }
    return BladeIndex{bits};
  }

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;

 private:
  unsigned bits_ = 0;
};

/// Product of two basis blades: sign and resulting blade. Sign comes from the
/// transpositions needed to merge both ascending factor lists, times
/// eta(mu, mu) for every factor the two blades share.
struct BladeProduct {
  int sign;
  BladeIndex blade;
};

constexpr BladeProduct blade_product(BladeIndex a, BladeIndex b) {
  unsigned x = a.bits();
  unsigned y = b.bits();
  int swaps = 0;
  for (int mu = 0; mu < 4; ++mu) {
    if (y & (1u << mu)) {
      // factors of a greater than mu must move past gamma_mu
      swaps += std::popcount(x & ~((2u << mu) - 1u));
    }
  }
  int sign = swaps % 2 == 0 ? 1 : -1;
  unsigned common = x & y;
  for (int mu = 0; mu < 4; ++mu)
    if (common & (1u << mu)) sign *= Metric::eta(mu, mu);
  return {sign, BladeIndex{x ^ y}};
}

/// blade * blade; every basis blade squares to +1 or -1.
constexpr int blade_square(BladeIndex a) { return blade_product(a, a).sign; }

}  // namespace sta
