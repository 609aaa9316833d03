#pragma once

#include "sta/multivector.hpp"

#include <array>
#include <stdexcept>

namespace sta {

/// 4x4 complex matrix; the faithful representation of Cl(1,3) (x) C.
template <Real T> class Matrix4C {
 public:
  using complex_type = Complex<T>;

  Matrix4C() = default;

  static Matrix4C identity() {
    Matrix4C m;
    for (int i = 0; i < 4; ++i) m(i, i) = complex_type(1);
    return m;
  }

  const complex_type& operator()(int r, int c) const {
    return e_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  complex_type& operator()(int r, int c) {
    return e_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  Matrix4C conjugate_transpose() const {
    Matrix4C m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
  }

  complex_type trace() const {
    complex_type t;
    for (int i = 0; i < 4; ++i) t += (*this)(i, i);
    return t;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& row : e_)
      for (const auto& x : row) m = std::max(m, magnitude(x));
    return m;
  }

  Matrix4C& operator+=(const Matrix4C& o) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) (*this)(r, c) += o(r, c);
    return *this;
  }
  Matrix4C& operator-=(const Matrix4C& o) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) (*this)(r, c) -= o(r, c);
    return *this;
  }
  friend Matrix4C operator+(Matrix4C a, const Matrix4C& b) { return a += b; }
  friend Matrix4C operator-(Matrix4C a, const Matrix4C& b) { return a -= b; }
  friend Matrix4C operator*(const complex_type& s, Matrix4C a) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) a(r, c) *= s;
    return a;
  }
  friend Matrix4C operator*(const Matrix4C& a, const Matrix4C& b) {
    // skipping zeros matters: gamma and blade matrices are monomial
    Matrix4C m;
    const complex_type zero{};
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < 4; ++k) {
        if (a(r, k) == zero) continue;
        for (int c = 0; c < 4; ++c)
          if (b(k, c) != zero) m(r, c) += a(r, k) * b(k, c);
      }
    return m;
  }
  friend bool operator==(const Matrix4C&, const Matrix4C&) = default;

 private:
  std::array<std::array<complex_type, 4>, 4> e_{};
};

/// Column spinor psi, four complex components.
template <Real T> using ColumnSpinor = std::array<Complex<T>, 4>;

template <Real T>
ColumnSpinor<T> operator*(const Matrix4C<T>& m, const ColumnSpinor<T>& v) {
  ColumnSpinor<T> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out[static_cast<std::size_t>(r)] += m(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

/// Dirac representation: gamma_0 = diag(1, 1, -1, -1); gamma_k carries
/// sigma_k in the upper-right block and -sigma_k in the lower-left.
template <Real T> Matrix4C<T> gamma_matrix(int mu) {
  using C = Complex<T>;
  Matrix4C<T> g;
  if (mu == 0) {
    g(0, 0) = C(1);
    g(1, 1) = C(1);
    g(2, 2) = C(-1);
    g(3, 3) = C(-1);
    return g;
  }
  std::array<std::array<C, 2>, 2> sigma{};
  switch (mu) {
    case 1:
      sigma = {{{C(0), C(1)}, {C(1), C(0)}}};
      break;
    case 2:
      sigma = {{{C(0), -C::i()}, {C::i(), C(0)}}};
      break;
    case 3:
      sigma = {{{C(1), C(0)}, {C(0), C(-1)}}};
      break;
    default:
      throw std::out_of_range("gamma matrix index");
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      g(r, c + 2) = sigma[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      g(r + 2, c) = -sigma[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  return g;
}

/// Matrix of a basis blade: product of its gamma matrices, ascending.
template <Real T> const Matrix4C<T>& blade_matrix(BladeIndex b) {
  static const auto table = [] {
    std::array<Matrix4C<T>, 16> t;
    for (unsigned i = 0; i < 16; ++i) {
      t[i] = Matrix4C<T>::identity();
      for (int mu = 0; mu < 4; ++mu)
        if (i & (1u << mu)) t[i] = t[i] * gamma_matrix<T>(mu);
    }
    return t;
  }();
  return table[b.bits()];
}

template <Real T> Matrix4C<T> represent(const Multivector<T>& m) {
  Matrix4C<T> out;
  for (unsigned i = 0; i < 16; ++i) {
    if (m.coeff(i) == Complex<T>()) continue;
    out += m.coeff(i) * blade_matrix<T>(BladeIndex{i});
  }
  return out;
}

/// Inverse of represent: coefficient of blade G is trace(G^{-1} M) / 4, with
/// G^{-1} = +-G because every blade squares to +-1.
template <Real T> Multivector<T> unrepresent(const Matrix4C<T>& mat) {
  Multivector<T> out;
  for (unsigned i = 0; i < 16; ++i) {
    BladeIndex b{i};
    Matrix4C<T> inv = blade_matrix<T>(b);
    if (blade_square(b) < 0) inv = Complex<T>(-1) * inv;
    out[b] = (inv * mat).trace() * Complex<T>(T(1) / T(4));
  }
  return out;
}

/// Diagonal projector P(alpha) = (delta_{mu alpha} delta_{nu alpha}).
template <Real T> Matrix4C<T> column_projector(int alpha) {
  if (alpha < 0 || alpha > 3) throw std::out_of_range("column index");
  Matrix4C<T> p;
  p(alpha, alpha) = Complex<T>(1);
  return p;
}

template <Real T>
ColumnSpinor<T> column_extract(const Matrix4C<T>& mat, int alpha) {
  if (alpha < 0 || alpha > 3) throw std::out_of_range("column index");
  ColumnSpinor<T> v{};
  for (int r = 0; r < 4; ++r) v[static_cast<std::size_t>(r)] = mat(r, alpha);
  return v;
}

/// Largest entrywise |a - b|.
template <Real T>
double max_discrepancy(const Matrix4C<T>& a, const Matrix4C<T>& b) {
  return (a - b).max_magnitude();
}

}  // namespace sta
