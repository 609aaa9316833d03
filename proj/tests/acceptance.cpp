// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Exact rational mode unless stated; each item has a 1 s budget and
// the whole run a 10 s budget.

#include "sta/planewave.hpp"
#include "sta/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace sta;
using R = Rational;

namespace {

constexpr double kItemBudget = 1.0;
constexpr double kTotalBudget = 10.0;
constexpr double kFloatRelTol = 1e-12;
constexpr std::uint64_t kSeed = 12345;

template <Real T> Multivector<T> one() { return Multivector<T>(Complex<T>(1)); }

// Zero test used by the shared items: exact equality for rationals, relative
// residual norm for doubles.
template <Real T> bool vanishes(const Field<T>& residual, const Field<T>& input) {
  if constexpr (scalar_traits<T>::exact) {
    return residual.empty();
  } else {
    return residual.norm() <= kFloatRelTol * input.norm();
  }
}

template <Real T> struct Setup {
  T m, k;
};

template <Real T> std::vector<Field<T>> random_joyce(const Setup<T>& s, std::uint64_t seed, int n) {
  RandomSource<T> rnd(seed);
  std::vector<Field<T>> out;
  for (int i = 0; i < n; ++i) out.push_back(joyce_planewave(rnd.params(), rnd.sign(), s.k, s.m));
  return out;
}

// 4: F P+0 solves Dirac(+m), F P-0 solves Dirac(-m).
template <Real T> bool dirac_split(const Setup<T>& s) {
  for (const auto& f : random_joyce(s, kSeed, 20)) {
    if (!vanishes(joyce_residual(f, s.m), f)) return false;
    auto [p, q] = split_right(f, ProjectorFamily::gamma0);
    if (!vanishes(dirac_residual(p, s.m), f) || !vanishes(dirac_residual(q, T(-s.m)), f)) return false;
  }
  return true;
}

// 5: F P+12 solves Hestenes(+m), F P-12 solves Hestenes(-m).
template <Real T> bool hestenes_split(const Setup<T>& s) {
  for (const auto& f : random_joyce(s, kSeed, 20)) {
    auto [p, q] = split_right(f, ProjectorFamily::i12);
    if (!vanishes(hestenes_residual(p, s.m), f) || !vanishes(hestenes_residual(q, T(-s.m)), f))
      return false;
  }
  return true;
}

// Real means invariant under field conjugation (amplitude pairs at +-p).
template <Real T> bool is_real_even(const Field<T>& f, const Field<T>& input) {
  return vanishes(f - conjugate_field(f), input) && vanishes(even_odd_split(f).second, input);
}

// 6: the real even pair solves Hestenes(+-m) and rebuilds F.
template <Real T> bool real_even_pairs(const Setup<T>& s) {
  for (const auto& f : random_joyce(s, kSeed, 20)) {
    auto [p, q] = real_even_pair(f);
    if (!is_real_even(p, f) || !is_real_even(q, f)) return false;
    if (!vanishes(hestenes_residual(p, s.m), f) || !vanishes(hestenes_residual(q, T(-s.m)), f))
      return false;
    if (!vanishes(reconstruct_joyce(p, q) - f, f)) return false;
  }
  return true;
}

// 7: quartet from a Dirac plane wave.
template <Real T> bool quartet(const Setup<T>& s) {
  RandomSource<T> rnd(kSeed);
  T omega = on_shell_omega(s.k, s.m, Sign::plus);
  auto psi = dirac_planewave(rnd.multivector(), omega, s.k, s.m);
  if (!vanishes(dirac_residual(psi, s.m), psi)) return false;
  auto q = hestenes_quartet(psi, s.m);
  for (const auto& h : q)
    if (!vanishes(hestenes_residual(h, s.m), psi) || !is_real_even(h, psi)) return false;
  return rank(std::vector<Field<T>>(q.begin(), q.end()), ScalarField::real) == 4;
}

// 8: Joyce family rank 8; degeneracy subspaces of dimension 2 per omega sign
// land on Dirac solutions of mass +-m in Hestenes form, whose P+-0 parts solve
// the algebraic Dirac(+-m) equation.
template <Real T> bool counting(const Setup<T>& s) {
  std::vector<Field<T>> family;
  for (auto ws : {Sign::plus, Sign::minus})
    for (int j = 0; j < 4; ++j) family.push_back(joyce_planewave(PlaneWaveParams<T>::unit(j), ws, s.k, s.m));
  if (rank(family, ScalarField::complex) != 8) return false;
  for (auto ws : {Sign::plus, Sign::minus}) {
    T omega = on_shell_omega(s.k, s.m, ws);
    for (auto ps : {Sign::plus, Sign::minus}) {
      auto sub = degeneracy_conditions(omega, s.k, s.m, ps);
      if (sub.basis.size() != 2) return false;
      T mass = ps == Sign::plus ? s.m : T(-s.m);
      std::vector<Field<T>> waves;
      for (const auto& p : sub.basis) {
        auto f = joyce_planewave(p, ws, s.k, s.m);
        waves.push_back(f);
        if (!vanishes(f * projector_i12<T>(opposite(ps)), f)) return false;
        if (!vanishes(hestenes_residual(f, mass), f)) return false;
        auto column = f * projector_gamma0<T>(ps);
        if (column.is_zero() || !vanishes(dirac_residual(column, mass), f)) return false;
      }
      if (rank(waves, ScalarField::complex) != 2) return false;
    }
  }
  return true;
}

bool clifford_relations() {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      auto a = basis_vector<R>(mu), b = basis_vector<R>(nu);
      if (a * b + b * a != Multivector<R>(Complex<R>(R(2 * Metric::eta(mu, nu))))) return false;
    }
  return true;
}

bool boost_square() {
  auto g01 = gammas<R>({0, 1});
  return g01 * g01 == one<R>();
}

bool projector_laws() {
  auto g0 = basis_vector<R>(0);
  auto g12 = gammas<R>({1, 2});
  auto i = Complex<R>::i();
  for (auto fam : {ProjectorFamily::gamma0, ProjectorFamily::i12}) {
    auto p = projector<R>(fam, Sign::plus), q = projector<R>(fam, Sign::minus);
    if (p + q != one<R>() || p * q != Multivector<R>{} || q * p != Multivector<R>{}) return false;
    for (const auto& x : {p, q})
      if (x * x != x || hermitian_adjoint(x) != x) return false;
  }
  for (auto s : {Sign::plus, Sign::minus}) {
    Complex<R> sign(to_int(s));
    auto p0 = projector_gamma0<R>(s), p12 = projector_i12<R>(s);
    if (g0 * p0 != sign * p0) return false;
    if (p12 != sign * i * (p12 * g12)) return false;
  }
  return true;
}

bool dispersion_forcing() {
  R m(3), k(4);
  if (!planewave_condition_kernel(R(6), k, m).empty()) return false;
  if (!planewave_condition_kernel(R(-6), k, m).empty()) return false;
  return planewave_condition_kernel(R(5), k, m).size() == 4 &&
         planewave_condition_kernel(R(-5), k, m).size() == 4;
}

bool massless_coincidence() {
  RandomSource<R> rnd(kSeed);
  for (int n = 0; n < 20; ++n) {
    auto f = rnd.field();
    if (joyce_residual(f, R(0)) != dirac_residual(f, R(0))) return false;
  }
  // no even Dirac solution at m = 3: on-shell kernels and random even fields
  for (auto s : {Sign::plus, Sign::minus}) {
    FourMomentum<R> p = FourMomentum<R>::along_x(on_shell_omega(R(4), R(3), s), R(4));
    if (!even_dirac_kernel(p, R(3)).empty()) return false;
  }
  for (int n = 0; n < 20; ++n) {
    auto f = even_odd_split(rnd.field()).first;
    if (!f.empty() && dirac_residual(f, R(3)).empty()) return false;
  }
  return true;
}

// residual amplitude via matrices: i (i slash(p)) M - m M
Matrix4C<R> matrix_dirac_residual(const Matrix4C<R>& a, const FourMomentum<R>& p, const R& m) {
  auto comps = p.components();
  Matrix4C<R> slash_m = Complex<R>(comps[0]) * gamma_matrix<R>(0);
  for (int j = 1; j < 4; ++j) slash_m = slash_m + Complex<R>(comps[static_cast<std::size_t>(j)]) * gamma_matrix<R>(j);
  return Complex<R>(-1) * (slash_m * a) - Complex<R>(m) * a;
}

bool oracle_equivalence() {
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) {
      auto a = Multivector<R>::blade(BladeIndex{i}), b = Multivector<R>::blade(BladeIndex{j});
      if (represent(a * b) != represent(a) * represent(b)) return false;
    }
  RandomSource<R> rnd(kSeed);
  for (int n = 0; n < 100; ++n) {
    auto a = rnd.multivector(), b = rnd.multivector();
    if (represent(a * b) != represent(a) * represent(b)) return false;
    if (represent(hermitian_adjoint(a)) != represent(a).conjugate_transpose()) return false;
  }
  R m(3);
  for (int n = 0; n < 10; ++n) {
    auto f = rnd.field();
    auto res = dirac_residual(f, m);
    for (const auto& t : f.terms())
      if (represent(res.amplitude_at(t.momentum)) != matrix_dirac_residual(represent(t.amplitude), t.momentum, m))
        return false;
  }
  return true;
}

bool gauge_covariance() {
  auto g12 = gammas<R>({1, 2});
  RandomSource<R> rnd(kSeed);
  std::vector<Field<R>> inputs = random_joyce<R>({R(3), R(4)}, kSeed, 3);
  for (int n = 0; n < 3; ++n) inputs.push_back(rnd.field(2));
  for (auto plane : {gammas<R>({1, 2}), gammas<R>({2, 3}), gammas<R>({3, 1})}) {
    Rotor<R> r(R(3, 5), R(4, 5), plane);
    for (const auto& f : inputs)
      if (hestenes_residual(gauge_transform(f, r), R(3), rotated_plane(r, g12)) !=
          hestenes_residual(f, R(3)) * r.value())
        return false;
  }
  return true;
}

bool float_repeat() {
  Setup<double> s{1.0, 1.0};
  if (std::abs(on_shell_omega(s.k, s.m, Sign::plus) - std::sqrt(2.0)) > 1e-15) return false;
  return dirac_split(s) && hestenes_split(s) && real_even_pairs(s) && quartet(s) && counting(s);
}

struct Criterion {
  int id;
  const char* description;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const Setup<R> exact{R(3), R(4)};
  const std::vector<Criterion> criteria{
      {1, "Clifford relations: 16 anticommutators equal 2 eta", clifford_relations},
      {2, "(g0 g1)^2 = 1", boost_square},
      {3, "projector laws for P0 and P12", projector_laws},
      {4, "Joyce -> Dirac +-m split on 20 random (3,4,+-5) solutions", [&] { return dirac_split(exact); }},
      {5, "Joyce -> Hestenes +-m split on 20 random solutions", [&] { return hestenes_split(exact); }},
      {6, "real even pair solves Hestenes +-m and reconstructs F", [&] { return real_even_pairs(exact); }},
      {7, "Hestenes quartet: zero residuals, real rank 4", [&] { return quartet(exact); }},
      {8, "Joyce rank 8; degeneracy subspaces dim 2 landing on Dirac +-m", [&] { return counting(exact); }},
      {9, "dispersion forcing: trivial kernel off shell, dim 4 on shell", dispersion_forcing},
      {10, "massless coincidence; no even Dirac solution at m = 3", massless_coincidence},
      {11, "matrix oracle equivalence", oracle_equivalence},
      {12, "gauge covariance under (3/5, 4/5) rotors in three planes", gauge_covariance},
      {13, "float mode items 4-8 at (m,k) = (1,1), omega = sqrt 2", float_repeat},
  };

  using clock = std::chrono::steady_clock;
  int failures = 0;
  auto start = clock::now();
  for (const auto& c : criteria) {
    auto t0 = clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (secs > kItemBudget) {
      ok = false;
      note += " over time budget";
    }
    if (!ok) ++failures;
    std::printf("%s [%d] %s (%.3f s)%s\n", ok ? "PASS" : "FAIL", c.id, c.description, secs, note.c_str());
  }
  double total = std::chrono::duration<double>(clock::now() - start).count();
  bool total_ok = total <= kTotalBudget;
  if (!total_ok) ++failures;
  std::printf("%s total %.3f s (budget %.0f s)\n", total_ok ? "PASS" : "FAIL", total, kTotalBudget);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
