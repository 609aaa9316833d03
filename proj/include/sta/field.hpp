#pragma once

#include "sta/multivector.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace sta {

/// Contravariant four-momentum (omega, k^1, k^2, k^3) in units hbar = c = 1.
/// The associated phase is k^mu x_mu = omega t - k.x.
template <Real T> struct FourMomentum {
  T omega{0};
  std::array<T, 3> k{T(0), T(0), T(0)};

  /// Momentum along x^1, the only direction the plane-wave family uses.
  static FourMomentum along_x(T omega, T k1) {
    return {std::move(omega), {std::move(k1), T(0), T(0)}};
  }

  /// omega^2 - |k|^2
  T invariant_mass_squared() const {
    return omega * omega - k[0] * k[0] - k[1] * k[1] - k[2] * k[2];
  }

  FourMomentum operator-() const {
    return {T(-omega), {T(-k[0]), T(-k[1]), T(-k[2])}};
  }

  std::array<T, 4> components() const { return {omega, k[0], k[1], k[2]}; }

  friend bool operator==(const FourMomentum& a, const FourMomentum& b) {
    return a.omega == b.omega && a.k == b.k;
  }
};

/// Exact equality in exact mode, componentwise |d| <= 1e-12 in float mode.
template <Real T>
bool same_momentum(const FourMomentum<T>& a, const FourMomentum<T>& b) {
  if constexpr (scalar_traits<T>::exact) {
    return a == b;
  } else {
    auto x = a.components();
    auto y = b.components();
    for (std::size_t i = 0; i < 4; ++i)
      if (std::abs(x[i] - y[i]) > kFloatZeroTol) return false;
    return true;
  }
}

/// gamma_mu k^mu = gamma_0 omega + gamma_1 k^1 + gamma_2 k^2 + gamma_3 k^3.
template <Real T> Multivector<T> slash(const FourMomentum<T>& p) {
  Multivector<T> r;
  auto c = p.components();
  for (int mu = 0; mu < 4; ++mu)
    r[BladeIndex{1u << mu}] = Complex<T>(c[static_cast<std::size_t>(mu)]);
  return r;
}

template <Real T> struct PlaneWaveTerm {
  Multivector<T> amplitude;
  FourMomentum<T> momentum;
};

/// Finite superposition of plane waves A exp(i k^mu x_mu). Canonical form:
/// pairwise distinct momenta, sorted; zero amplitudes dropped in exact mode.
template <Real T> class Field {
 public:
  using term_type = PlaneWaveTerm<T>;

  Field() = default;
  explicit Field(std::vector<term_type> terms) : terms_(std::move(terms)) {
    canonicalize();
  }
  Field(Multivector<T> amplitude, FourMomentum<T> momentum)
      : Field(std::vector<term_type>{{std::move(amplitude), std::move(momentum)}}) {}

  const std::vector<term_type>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double norm() const {
    double s = 0.0;
    for (const auto& t : terms_) s += t.amplitude.norm() * t.amplitude.norm();
    return std::sqrt(s);
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, t.amplitude.max_magnitude());
    return m;
  }

  /// Exact mode: no terms. Float mode: every amplitude is reported zero
  /// relative to `scale` (defaults to this field's own largest coefficient).
  bool is_zero(double scale = -1.0) const {
    if constexpr (scalar_traits<T>::exact) {
      return terms_.empty();
    } else {
      double s = scale < 0 ? max_magnitude() : scale;
      return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return t.amplitude.is_zero(s);
      });
    }
  }

  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.amplitude.is_even(); });
  }

  /// Amplitude at the given momentum (zero if absent).
  Multivector<T> amplitude_at(const FourMomentum<T>& p) const {
    for (const auto& t : terms_)
      if (same_momentum(t.momentum, p)) return t.amplitude;
    return {};
  }

  /// Applies f to every amplitude, keeping momenta.
  template <class F> Field map_amplitudes(F&& f) const {
    std::vector<term_type> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.amplitude), t.momentum});
    return Field(std::move(out));
  }

  Field operator-() const {
    return map_amplitudes([](const Multivector<T>& a) { return -a; });
  }
  friend Field operator+(const Field& a, const Field& b) {
    auto terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return Field(std::move(terms));
  }
  friend Field operator-(const Field& a, const Field& b) { return a + (-b); }
  friend Field operator*(const Complex<T>& s, const Field& f) {
    return f.map_amplitudes([&](const Multivector<T>& a) { return s * a; });
  }
  /// Right multiplication by a constant element, termwise.
  friend Field operator*(const Field& f, const Multivector<T>& c) {
    return f.map_amplitudes([&](const Multivector<T>& a) { return a * c; });
  }
  /// Left multiplication by a constant element, termwise.
  friend Field operator*(const Multivector<T>& c, const Field& f) {
    return f.map_amplitudes([&](const Multivector<T>& a) { return c * a; });
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].momentum == b.terms_[i].momentum) ||
          !(a.terms_[i].amplitude == b.terms_[i].amplitude))
        return false;
    return true;
  }

 private:
  void canonicalize() {
    std::vector<term_type> merged;
    for (auto& t : terms_) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) {
        return same_momentum(m.momentum, t.momentum);
      });
      if (it == merged.end())
        merged.push_back(std::move(t));
      else
        it->amplitude += t.amplitude;
    }
    if constexpr (scalar_traits<T>::exact) {
      std::erase_if(merged, [](const auto& t) { return t.amplitude.is_zero(); });
    }
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
      return a.momentum.components() < b.momentum.components();
    });
    terms_ = std::move(merged);
  }

  std::vector<term_type> terms_;
};

using ExactField = Field<Rational>;
using FloatField = Field<double>;

/// nabla = gamma_mu d^mu on the plane-wave ansatz: (A, k) -> (i slash(k) A, k).
template <Real T> Field<T> gradient(const Field<T>& f) {
  std::vector<PlaneWaveTerm<T>> out;
  for (const auto& t : f.terms())
    out.push_back({Complex<T>::i() * (slash(t.momentum) * t.amplitude), t.momentum});
  return Field<T>(std::move(out));
}

/// Psi*: conjugates coefficients and flips the momentum, since the conjugate
/// of exp(i k.x) is exp(-i k.x).
template <Real T> Field<T> conjugate_field(const Field<T>& f) {
  std::vector<PlaneWaveTerm<T>> out;
  for (const auto& t : f.terms())
    out.push_back({complex_conjugate(t.amplitude), -t.momentum});
  return Field<T>(std::move(out));
}

/// Termwise even and odd parts.
template <Real T>
std::pair<Field<T>, Field<T>> even_odd_split(const Field<T>& f) {
  std::vector<PlaneWaveTerm<T>> even, odd;
  for (const auto& t : f.terms()) {
    auto [e, o] = even_odd_split(t.amplitude);
    even.push_back({e, t.momentum});
    odd.push_back({o, t.momentum});
  }
  return {Field<T>(std::move(even)), Field<T>(std::move(odd))};
}

/// Conjugation-invariant: conjugate_field(f) == f.
template <Real T> bool is_real_field(const Field<T>& f) {
  if constexpr (scalar_traits<T>::exact) {
    return conjugate_field(f) == f;
  } else {
    return (conjugate_field(f) - f).is_zero(f.max_magnitude());
  }
}

/// i nabla F - m F
template <Real T> Field<T> dirac_residual(const Field<T>& f, const T& m) {
  return Complex<T>::i() * gradient(f) - Complex<T>(m) * f;
}

/// i nabla F - m F gamma_0
template <Real T> Field<T> joyce_residual(const Field<T>& f, const T& m) {
  return Complex<T>::i() * gradient(f) - Complex<T>(m) * (f * basis_vector<T>(0));
}

/// A pure grade-2 element squaring to -1.
template <Real T> void require_unit_bivector(const Multivector<T>& b) {
  if (!(grade_project(b, 2) - b).is_zero(b.max_magnitude()))
    throw std::invalid_argument("plane element is not a pure bivector");
  auto sq = b * b + Multivector<T>(Complex<T>(1));
  if (!sq.is_zero(b.max_magnitude()))
    throw std::invalid_argument("plane bivector does not square to -1");
}

/// -nabla F B - m F gamma_0, with B = gamma_1 gamma_2 unless given.
template <Real T>
Field<T> hestenes_residual(const Field<T>& f, const T& m,
                           const Multivector<T>& plane) {
  require_unit_bivector(plane);
  return -(gradient(f) * plane) - Complex<T>(m) * (f * basis_vector<T>(0));
}

template <Real T>
Field<T> hestenes_residual(const Field<T>& f, const T& m) {
  return hestenes_residual(f, m, gammas<T>({1, 2}));
}

}  // namespace sta
