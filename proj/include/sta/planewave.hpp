#pragma once

#include "sta/linalg.hpp"
#include "sta/matrix.hpp"
#include "sta/spinor.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sta {

/// Amplitude parameters of the commuting part A+ = a + b g1g2 + c g2g3 + d g3g1.
template <Real T> struct PlaneWaveParams {
  Complex<T> a, b, c, d;

  std::array<Complex<T>, 4> as_array() const { return {a, b, c, d}; }
  static PlaneWaveParams from_array(const std::array<Complex<T>, 4>& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  static PlaneWaveParams unit(int index) {
    std::array<Complex<T>, 4> v{};
    v.at(static_cast<std::size_t>(index)) = Complex<T>(1);
    return from_array(v);
  }
};

/// The four elements {1, g1g2, g2g3, g3g1} that commute with gamma_0.
template <Real T> std::array<Multivector<T>, 4> commuting_basis() {
  return {Multivector<T>(Complex<T>(1)), gammas<T>({1, 2}), gammas<T>({2, 3}),
          gammas<T>({3, 1})};
}

template <Real T> Multivector<T> commuting_part(const PlaneWaveParams<T>& p) {
  auto basis = commuting_basis<T>();
  auto coeffs = p.as_array();
  Multivector<T> out;
  for (std::size_t i = 0; i < 4; ++i) out += coeffs[i] * basis[i];
  return out;
}

/// omega = sign * sqrt(k^2 + m^2); exact mode requires a rational root.
template <Real T> T on_shell_omega(const T& k, const T& m, Sign sign) {
  T sq = k * k + m * m;
  T root;
  if constexpr (scalar_traits<T>::exact) {
    if (!exact_sqrt(sq, root))
      throw std::domain_error("k^2 + m^2 has no rational square root; use float mode");
  } else {
    root = std::sqrt(sq);
  }
  return sign == Sign::plus ? root : T(-root);
}

template <Real T> bool is_on_shell(const T& omega, const T& k, const T& m) {
  T diff = omega * omega - k * k - m * m;
  return is_negligible_real(diff, to_double(omega * omega));
}

/// -(omega + g0g1 k) A - m g0 A g0; zero iff A exp(i(omega t - k x)) solves
/// the Joyce equation.
template <Real T>
Multivector<T> planewave_condition(const Multivector<T>& a, const T& omega,
                                   const T& k, const T& m) {
  auto g0 = basis_vector<T>(0);
  auto op = Multivector<T>(Complex<T>(omega)) + Complex<T>(k) * gammas<T>({0, 1});
  return -(op * a) - Complex<T>(m) * (g0 * a * g0);
}

/// A+- = (A +- g0 A g0) / 2, so that g0 A+- g0 = +-A+-.
template <Real T>
std::pair<Multivector<T>, Multivector<T>> commutant_split(const Multivector<T>& a) {
  if (!a.is_even()) throw std::invalid_argument("commutant_split: input is not even");
  auto g0 = basis_vector<T>(0);
  auto conj = g0 * a * g0;
  Complex<T> half(T(1) / T(2));
  return {half * (a + conj), half * (a - conj)};
}

/// Amplitude of the Joyce plane wave: A+ from the parameters and
/// A- = -((omega + m)/k) g0g1 A+.
template <Real T>
Multivector<T> joyce_amplitude(const PlaneWaveParams<T>& p, const T& omega,
                               const T& k, const T& m) {
  if (k == T(0)) throw std::domain_error("joyce_planewave: k = 0, use rest_solutions");
  auto a_plus = commuting_part(p);
  Complex<T> ratio(T(-(omega + m) / k));
  return a_plus + ratio * (gammas<T>({0, 1}) * a_plus);
}

/// A exp(i(omega t - k x)) with omega = sign sqrt(k^2 + m^2).
template <Real T>
Field<T> joyce_planewave(const PlaneWaveParams<T>& p, Sign omega_sign,
                         const T& k, const T& m) {
  if (m < T(0)) throw std::domain_error("joyce_planewave: negative mass");
  T omega = on_shell_omega(k, m, omega_sign);
  return Field<T>(joyce_amplitude(p, omega, k, m), FourMomentum<T>::along_x(omega, k));
}

/// Checks A+ = -((omega - m)/k) g0g1 A-.
template <Real T>
bool satisfies_inverse_relation(const Multivector<T>& a, const T& omega,
                                const T& k, const T& m) {
  auto [plus, minus] = commutant_split(a);
  Complex<T> ratio(T(-(omega - m) / k));
  return (plus - ratio * (gammas<T>({0, 1}) * minus)).is_zero(a.max_magnitude());
}

namespace detail {

/// Matrix (16 rows x n cols) of a complex-linear map evaluated on a basis.
template <Real T, class F>
linalg::Matrix<Complex<T>> map_matrix(const std::vector<Multivector<T>>& basis, F&& f) {
  linalg::Matrix<Complex<T>> mat(16, std::vector<Complex<T>>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto image = f(basis[j]);
    for (unsigned i = 0; i < 16; ++i) mat[i][j] = image.coeff(i);
  }
  return mat;
}

template <Real T>
Multivector<T> combine_basis(const std::vector<Multivector<T>>& basis,
                             const std::vector<Complex<T>>& coords) {
  Multivector<T> out;
  for (std::size_t j = 0; j < basis.size(); ++j) out += coords[j] * basis[j];
  return out;
}

}  // namespace detail

/// Basis of the even amplitudes A with planewave_condition(A, omega, k, m) = 0.
template <Real T>
std::vector<Multivector<T>> planewave_condition_kernel(const T& omega, const T& k,
                                                       const T& m) {
  auto basis = even_basis<T>();
  auto mat = detail::map_matrix<T>(basis, [&](const Multivector<T>& a) {
    return planewave_condition(a, omega, k, m);
  });
  std::vector<Multivector<T>> out;
  for (const auto& v : linalg::kernel(mat, basis.size()))
    out.push_back(detail::combine_basis(basis, v));
  return out;
}

/// Even amplitudes A with dirac_residual(A e^{ik.x}, m) = 0 at momentum p.
template <Real T>
std::vector<Multivector<T>> even_dirac_kernel(const FourMomentum<T>& p, const T& m) {
  auto basis = even_basis<T>();
  auto mat = detail::map_matrix<T>(basis, [&](const Multivector<T>& a) {
    // i (i slash(p) A) - m A
    return -(slash(p) * a) - Complex<T>(m) * a;
  });
  std::vector<Multivector<T>> out;
  for (const auto& v : linalg::kernel(mat, basis.size()))
    out.push_back(detail::combine_basis(basis, v));
  return out;
}

template <Real T> struct RestSolutions {
  std::vector<Field<T>> basis;
  /// m = 0 at k = 0: every constant even amplitude solves.
  bool degenerate = false;
};

/// k = 0 solutions of -omega A = m g0 A g0 with omega = sign m. Computed as a
/// kernel: omega = -m leaves the commuting part, omega = +m the
/// anticommuting part.
template <Real T> RestSolutions<T> rest_solutions(const T& m, Sign omega_sign) {
  if (m < T(0)) throw std::domain_error("rest_solutions: negative mass");
  RestSolutions<T> out;
  T omega = omega_sign == Sign::plus ? m : T(-m);
  auto p = FourMomentum<T>::along_x(omega, T(0));
  if (m == T(0)) {
    out.degenerate = true;
    for (auto& b : even_basis<T>()) out.basis.emplace_back(b, p);
    return out;
  }
  for (auto& a : planewave_condition_kernel(omega, T(0), m)) out.basis.emplace_back(a, p);
  return out;
}

/// (A, k) -> (g0 w + g1 k - m) seed, a Dirac solution when on shell since
/// (g0 w + g1 k)^2 = w^2 - k^2 = m^2.
template <Real T>
Field<T> dirac_planewave(const Multivector<T>& seed, const T& omega, const T& k,
                         const T& m) {
  if (!is_on_shell(omega, k, m)) throw std::domain_error("dirac_planewave: off shell");
  auto p = FourMomentum<T>::along_x(omega, k);
  return Field<T>((slash(p) - Multivector<T>(Complex<T>(m))) * seed, p);
}

template <Real T> struct DegeneracySubspace {
  /// Basis of the parameters (a, b, c, d) for which the opposite P12 part of
  /// the Joyce plane wave vanishes.
  std::vector<PlaneWaveParams<T>> basis;
  T omega;

  /// Whether the given parameters lie in the subspace.
  bool contains(const PlaneWaveParams<T>& p) const {
    linalg::Matrix<Complex<T>> rows;
    for (const auto& b : basis) {
      auto v = b.as_array();
      rows.emplace_back(v.begin(), v.end());
    }
    auto before = linalg::rank(rows);
    auto v = p.as_array();
    rows.emplace_back(v.begin(), v.end());
    return linalg::rank(rows) == before;
  }
};

/// Parameters for which joyce_planewave(p) P(-s)12 = 0, i.e. the wave is its
/// own P(s)12 part and so solves the Hestenes-form equation with mass s*m.
template <Real T>
DegeneracySubspace<T> degeneracy_conditions(const T& omega, const T& k, const T& m,
                                            Sign p12_sign) {
  if (k == T(0)) throw std::domain_error("degeneracy_conditions: k = 0");
  if (!is_on_shell(omega, k, m)) throw std::domain_error("degeneracy_conditions: off shell");
  auto annihilator = projector_i12<T>(opposite(p12_sign));
  linalg::Matrix<Complex<T>> mat(16, std::vector<Complex<T>>(4));
  for (int j = 0; j < 4; ++j) {
    auto image = joyce_amplitude(PlaneWaveParams<T>::unit(j), omega, k, m) * annihilator;
    for (unsigned i = 0; i < 16; ++i) mat[i][static_cast<std::size_t>(j)] = image.coeff(i);
  }
  DegeneracySubspace<T> out{{}, omega};
  for (const auto& v : linalg::kernel(mat, 4))
    out.basis.push_back(PlaneWaveParams<T>::from_array({v[0], v[1], v[2], v[3]}));
  return out;
}

enum class ScalarField { real, complex };

/// Rank of a list of fields viewed as coefficient vectors (16 per distinct
/// momentum over the union of momenta) over the real or complex numbers.
template <Real T>
std::size_t rank(const std::vector<Field<T>>& fields, ScalarField scalars) {
  std::vector<FourMomentum<T>> momenta;
  for (const auto& f : fields)
    for (const auto& t : f.terms())
      if (std::none_of(momenta.begin(), momenta.end(),
                       [&](const auto& p) { return same_momentum(p, t.momentum); }))
        momenta.push_back(t.momentum);

  if (scalars == ScalarField::complex) {
    linalg::Matrix<Complex<T>> rows;
    for (const auto& f : fields) {
      std::vector<Complex<T>> row;
      for (const auto& p : momenta) {
        auto a = f.amplitude_at(p);
        row.insert(row.end(), a.coeffs().begin(), a.coeffs().end());
      }
      rows.push_back(std::move(row));
    }
    return linalg::rank(std::move(rows));
  }
  linalg::Matrix<T> rows;
  for (const auto& f : fields) {
    std::vector<T> row;
    for (const auto& p : momenta) {
      auto a = f.amplitude_at(p);
      for (const auto& c : a.coeffs()) {
        row.push_back(c.re);
        row.push_back(c.im);
      }
    }
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows));
}

/// Dimension of the column-spinor solutions of -slash(p) psi = m psi, computed
/// in the matrix representation.
template <Real T>
std::size_t dirac_spinor_solution_dim(const FourMomentum<T>& p, const T& m) {
  auto op = Complex<T>(-1) * represent(slash(p)) -
            Complex<T>(m) * Matrix4C<T>::identity();
  linalg::Matrix<Complex<T>> mat(4, std::vector<Complex<T>>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = op(r, c);
  return linalg::kernel(mat, 4).size();
}

}  // namespace sta
