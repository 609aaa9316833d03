#pragma once

#include "sta/field.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sta {

enum class Sign { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// P(+-)0 = (1 +- gamma_0) / 2
template <Real T> Multivector<T> projector_gamma0(Sign s) {
  Complex<T> half(T(1) / T(2));
  Complex<T> sgn(T(to_int(s)));
  return half * (Multivector<T>(Complex<T>(1)) + sgn * basis_vector<T>(0));
}

/// P(+-)12 = (1 +- i gamma_1 gamma_2) / 2
template <Real T> Multivector<T> projector_i12(Sign s) {
  Complex<T> half(T(1) / T(2));
  Complex<T> sgn_i(T(0), T(to_int(s)));
  return half * (Multivector<T>(Complex<T>(1)) + sgn_i * gammas<T>({1, 2}));
}

enum class ProjectorFamily { gamma0, i12 };

template <Real T> Multivector<T> projector(ProjectorFamily fam, Sign s) {
  return fam == ProjectorFamily::gamma0 ? projector_gamma0<T>(s)
                                        : projector_i12<T>(s);
}

/// (x P+, x P-) for either projector family.
template <Real T>
std::pair<Multivector<T>, Multivector<T>> split_right(const Multivector<T>& x,
                                                      ProjectorFamily fam) {
  return {x * projector<T>(fam, Sign::plus), x * projector<T>(fam, Sign::minus)};
}

template <Real T>
std::pair<Field<T>, Field<T>> split_right(const Field<T>& x,
                                          ProjectorFamily fam) {
  return {x * projector<T>(fam, Sign::plus), x * projector<T>(fam, Sign::minus)};
}

/// The real even pair (F+, F-) with F P(+-)12 = F(+-) P(+-)12:
///   F(+-) = (F + F*)/2 +- (i/2)(F - F*) gamma_1 gamma_2.
template <Real T>
std::pair<Field<T>, Field<T>> real_even_pair(const Field<T>& f) {
  if (!f.is_even()) throw std::invalid_argument("real_even_pair: field is not even");
  const Complex<T> half(T(1) / T(2));
  const Complex<T> half_i(T(0), T(1) / T(2));
  auto g12 = gammas<T>({1, 2});
  auto fc = conjugate_field(f);
  auto real_part = half * (f + fc);
  auto imag_term = half_i * ((f - fc) * g12);
  return {real_part + imag_term, real_part - imag_term};
}

/// F = (F+ + F-)/2 + (i/2)(F+ - F-) gamma_1 gamma_2
template <Real T>
Field<T> reconstruct_joyce(const Field<T>& plus, const Field<T>& minus) {
  const Complex<T> half(T(1) / T(2));
  const Complex<T> half_i(T(0), T(1) / T(2));
  return half * (plus + minus) + half_i * ((plus - minus) * gammas<T>({1, 2}));
}

/// Four real even Hestenes(+m) solutions built from a Dirac solution, using
/// its even part Psi+ and odd part Psi-:
///   H1 = (Psi+ + Psi+*)/2 g12 + (Psi- - Psi-*)/(2i) g0,   H2 = H1 g12,
///   H3 = (i/2)(Psi+ - Psi+*) g12 + (Psi- + Psi-*)/2 g0,   H4 = H3 g12.
template <Real T>
std::array<Field<T>, 4> hestenes_quartet(const Field<T>& psi, const T& m) {
  if (!dirac_residual(psi, m).is_zero(psi.max_magnitude()))
    throw std::invalid_argument("hestenes_quartet: input is not a Dirac solution");
  const Complex<T> half(T(1) / T(2));
  const Complex<T> half_i(T(0), T(1) / T(2));
  auto g0 = basis_vector<T>(0);
  auto g12 = gammas<T>({1, 2});
  auto [even, odd] = even_odd_split(psi);
  auto even_c = conjugate_field(even);
  auto odd_c = conjugate_field(odd);
  // 1/(2i) = -i/2
  Field<T> h1 = half * ((even + even_c) * g12) - half_i * ((odd - odd_c) * g0);
  Field<T> h3 = half_i * ((even - even_c) * g12) + half * ((odd + odd_c) * g0);
  return {h1, h1 * g12, h3, h3 * g12};
}

/// Vector part of psi gamma_0 reversion(psi).
template <Real T> Multivector<T> current_density(const Multivector<T>& psi) {
  return grade_project(psi * basis_vector<T>(0) * reversion(psi), 1);
}

/// Spatial rotor R = c + s B with c^2 + s^2 = 1 and B a spatial unit
/// bivector. Exact rotors come from rational points on the unit circle.
template <Real T> class Rotor {
 public:
  Rotor(T c, T s, Multivector<T> plane)
      : c_(std::move(c)), s_(std::move(s)), plane_(std::move(plane)) {
    validate();
  }

  /// R = cos(theta/2) + sin(theta/2) B; float mode only.
  static Rotor from_angle(double theta, Multivector<T> plane)
    requires std::same_as<T, double>
  {
    return Rotor(std::cos(theta / 2), std::sin(theta / 2), std::move(plane));
  }

  const T& c() const { return c_; }
  const T& s() const { return s_; }
  const Multivector<T>& plane() const { return plane_; }

  Multivector<T> value() const {
    return Multivector<T>(Complex<T>(c_)) + Complex<T>(s_) * plane_;
  }

 private:
  void validate() const {
    T unit = c_ * c_ + s_ * s_ - T(1);
    if (!is_negligible_real(unit))
      throw std::invalid_argument("rotor: c^2 + s^2 != 1");
    require_unit_bivector(plane_);
    if (!plane_.is_real()) throw std::invalid_argument("rotor: plane is not real");
    auto g0 = basis_vector<T>(0);
    if (!(g0 * plane_ - plane_ * g0).is_zero(plane_.max_magnitude()))
      throw std::invalid_argument("rotor: plane is not spatial");
  }

  T c_;
  T s_;
  Multivector<T> plane_;
};

/// F -> F R
template <Real T> Field<T> gauge_transform(const Field<T>& f, const Rotor<T>& r) {
  return f * r.value();
}

/// reversion(R) B R: the plane that replaces B after the gauge change.
template <Real T>
Multivector<T> rotated_plane(const Rotor<T>& r, const Multivector<T>& plane) {
  return reversion(r.value()) * plane * r.value();
}

}  // namespace sta
