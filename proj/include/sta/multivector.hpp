#pragma once

#include "sta/blade.hpp"
#include "sta/scalar.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sta {

/// Element of Cl(1,3) (x) C: sixteen complex coefficients, one per basis
/// blade. Dense storage; a blade with a zero coefficient is "absent", so two
/// equal elements always compare equal in exact mode.
template <Real T> class Multivector {
 public:
  using scalar_type = T;
  using complex_type = Complex<T>;
  static constexpr Mode mode = scalar_traits<T>::mode;

  Multivector() = default;
  Multivector(complex_type s) { coeffs_[0] = std::move(s); }  // NOLINT

  static Multivector blade(BladeIndex b, complex_type c = complex_type(1)) {
    Multivector m;
    m.coeffs_[b.bits()] = std::move(c);
    return m;
  }

  const complex_type& operator[](BladeIndex b) const {
    return coeffs_[b.bits()];
  }
  complex_type& operator[](BladeIndex b) { return coeffs_[b.bits()]; }
  const complex_type& coeff(unsigned bits) const { return coeffs_.at(bits); }
  const std::array<complex_type, 16>& coeffs() const { return coeffs_; }

  /// Largest coefficient magnitude.
  double max_magnitude() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, magnitude(c));
    return m;
  }

  /// Frobenius-style norm over the blade coefficients.
  double norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += to_double(c.norm2());
    return std::sqrt(s);
  }

  /// Reported zero: exact zero, or every |c| <= 1e-12 (1 + max|c|) in float
  /// mode, where `scale` replaces max|c| when the caller supplies one.
  bool is_zero(double scale = -1.0) const {
    if constexpr (scalar_traits<T>::exact) {
      for (const auto& c : coeffs_)
        if (!(c == complex_type())) return false;
      return true;
    } else {
      double s = scale < 0 ? 0.0 : scale;
      for (const auto& c : coeffs_)
        if (!is_negligible(c, s)) return false;
      return true;
    }
  }

  bool is_even() const { return has_parity_only(0); }
  bool is_odd() const { return has_parity_only(1); }

  /// True when every coefficient is real (conjugation-invariant).
  bool is_real() const {
    for (const auto& c : coeffs_)
      if (!is_negligible_real(c.im, max_magnitude())) return false;
    return true;
  }

  Multivector operator-() const {
    Multivector r;
    for (unsigned i = 0; i < 16; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }
  Multivector& operator+=(const Multivector& o) {
    for (unsigned i = 0; i < 16; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (unsigned i = 0; i < 16; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Multivector& operator*=(const complex_type& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    return a -= b;
  }
  friend Multivector operator*(Multivector a, const complex_type& s) {
    return a *= s;
  }
  friend Multivector operator*(const complex_type& s, Multivector a) {
    return a *= s;
  }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (unsigned i = 0; i < 16; ++i) {
      if (a.coeffs_[i] == complex_type()) continue;
      for (unsigned j = 0; j < 16; ++j) {
        if (b.coeffs_[j] == complex_type()) continue;
        auto p = blade_product(BladeIndex{i}, BladeIndex{j});
        auto term = a.coeffs_[i] * b.coeffs_[j];
        if (p.sign > 0)
          r.coeffs_[p.blade.bits()] += term;
        else
          r.coeffs_[p.blade.bits()] -= term;
      }
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  bool has_parity_only(int parity) const {
    double scale = max_magnitude();
    for (unsigned i = 0; i < 16; ++i)
      if (BladeIndex{i}.grade() % 2 != parity &&
          !is_negligible(coeffs_[i], scale))
        return false;
    return true;
  }

  std::array<complex_type, 16> coeffs_{};
};

using ExactMultivector = Multivector<Rational>;
using FloatMultivector = Multivector<double>;

template <Real T> Multivector<T> geometric_product(const Multivector<T>& a,
                                                   const Multivector<T>& b) {
  return a * b;
}

/// gamma_mu with unit coefficient.
template <Real T> Multivector<T> basis_vector(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("basis vector index");
  return Multivector<T>::blade(BladeIndex{1u << mu});
}

/// Product gamma_{mu1} gamma_{mu2} ... of the listed basis vectors, in the
/// order given (not necessarily canonical).
template <Real T> Multivector<T> gammas(std::initializer_list<int> mus) {
  Multivector<T> r = Complex<T>(1);
  for (int mu : mus) r = r * basis_vector<T>(mu);
  return r;
}

/// Pseudoscalar gamma_0 gamma_1 gamma_2 gamma_3.
template <Real T> Multivector<T> pseudoscalar() {
  return Multivector<T>::blade(BladeIndex{15});
}

template <Real T>
Multivector<T> combine(
    const std::vector<std::pair<Complex<T>, Multivector<T>>>& terms) {
  Multivector<T> r;
  for (const auto& [c, m] : terms) r += c * m;
  return r;
}

template <Real T> Multivector<T> grade_project(const Multivector<T>& m,
                                               int g) {
  if (g < 0 || g > 4) throw std::out_of_range("grade out of range");
  Multivector<T> r;
  for (unsigned i = 0; i < 16; ++i)
    if (BladeIndex{i}.grade() == g) r[BladeIndex{i}] = m.coeff(i);
  return r;
}

template <Real T>
std::pair<Multivector<T>, Multivector<T>> even_odd_split(
    const Multivector<T>& m) {
  Multivector<T> even, odd;
  for (unsigned i = 0; i < 16; ++i) {
    BladeIndex b{i};
    (b.even() ? even : odd)[b] = m.coeff(i);
  }
  return {even, odd};
}

template <Real T> Multivector<T> reversion(const Multivector<T>& m) {
  Multivector<T> r;
  for (unsigned i = 0; i < 16; ++i) {
    BladeIndex b{i};
    r[b] = b.reversion_sign() > 0 ? m.coeff(i) : -m.coeff(i);
  }
  return r;
}

template <Real T> Multivector<T> complex_conjugate(const Multivector<T>& m) {
  Multivector<T> r;
  for (unsigned i = 0; i < 16; ++i) r[BladeIndex{i}] = m.coeff(i).conj();
  return r;
}

/// Algebraic counterpart of the matrix conjugate-transpose:
/// m^dagger = gamma_0 (reversion of m*) gamma_0.
template <Real T> Multivector<T> hermitian_adjoint(const Multivector<T>& m) {
  auto g0 = basis_vector<T>(0);
  return g0 * reversion(complex_conjugate(m)) * g0;
}

/// {1, g0g1, g0g2, g0g3, g1g2, g1g3, g2g3, g0g1g2g3}.
template <Real T> std::vector<Multivector<T>> even_basis() {
  static constexpr std::array<unsigned, 8> masks{0b0000, 0b0011, 0b0101,
                                                 0b1001, 0b0110, 0b1010,
                                                 0b1100, 0b1111};
  std::vector<Multivector<T>> out;
  out.reserve(masks.size());
  for (unsigned bits : masks) out.push_back(Multivector<T>::blade(BladeIndex{bits}));
  return out;
}

/// Coordinates of an even element over even_basis(); throws if m is not even.
template <Real T>
std::array<Complex<T>, 8> even_coordinates(const Multivector<T>& m) {
  if (!m.is_even()) throw std::invalid_argument("element is not even");
  auto basis = even_basis<T>();
  std::array<Complex<T>, 8> out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (unsigned i = 0; i < 16; ++i)
      if (!(basis[k].coeff(i) == Complex<T>())) out[k] = m.coeff(i);
  }
  return out;
}

/// Lossy conversion of an exact element into float mode.
inline FloatMultivector to_float(const ExactMultivector& m) {
  FloatMultivector r;
  for (unsigned i = 0; i < 16; ++i)
    r[BladeIndex{i}] = Complex<double>(to_double(m.coeff(i).re),
                                       to_double(m.coeff(i).im));
  return r;
}

}  // namespace sta
