#include <catch2/catch_amalgamated.hpp>

#include "sta/planewave.hpp"
#include "sta/random.hpp"

using namespace sta;
using R = Rational;
using MV = Multivector<R>;
using C = Complex<R>;
using F = Field<R>;

namespace {

const MV kOne = MV(C(1));

F worked_joyce() {
  // A = 1 - 2 g0g1 at (m, k, omega) = (3, 4, 5)
  return F(kOne - C(2) * gammas<R>({0, 1}), FourMomentum<R>::along_x(R(5), R(4)));
}

}  // namespace

TEST_CASE("gamma_0 projectors", "[spinor]") {
  auto pp = projector_gamma0<R>(Sign::plus), pm = projector_gamma0<R>(Sign::minus);
  auto g0 = basis_vector<R>(0);
  CHECK(pp + pm == kOne);
  CHECK(pp * pp == pp);
  CHECK(pm * pm == pm);
  CHECK(pp * pm == MV{});
  CHECK(hermitian_adjoint(pp) == pp);
  CHECK(g0 * pm == -pm);
  CHECK(g0 * pp == pp);
}

TEST_CASE("i gamma_1 gamma_2 projectors", "[spinor]") {
  auto pp = projector_i12<R>(Sign::plus), pm = projector_i12<R>(Sign::minus);
  auto g12 = gammas<R>({1, 2});
  CHECK(pp * pm == MV{});
  CHECK(pp * pp == pp);
  CHECK(hermitian_adjoint(pm) == pm);
  CHECK(pp - C::i() * (pp * g12) == MV{});
  CHECK(pm + C::i() * (pm * g12) == MV{});
  auto [even, odd] = even_odd_split(pp);
  CHECK(even == pp);
  CHECK(odd == MV{});
  for (auto a : {Sign::plus, Sign::minus})
    for (auto b : {Sign::plus, Sign::minus})
      CHECK(projector_gamma0<R>(a) * projector_i12<R>(b) ==
            projector_i12<R>(b) * projector_gamma0<R>(a));
}

TEST_CASE("split_right", "[spinor]") {
  auto [p, m] = split_right(kOne, ProjectorFamily::gamma0);
  CHECK(p == projector_gamma0<R>(Sign::plus));
  CHECK(m == projector_gamma0<R>(Sign::minus));

  RandomSource<R> rnd(21);
  for (int n = 0; n < 10; ++n) {
    auto e = rnd.even();
    auto [a, b] = split_right(e, ProjectorFamily::i12);
    CHECK(a + b == e);
  }

  auto f = worked_joyce();
  auto [fp, fm] = split_right(f, ProjectorFamily::gamma0);
  CHECK(dirac_residual(fp, R(3)).empty());
  CHECK(dirac_residual(fm, R(-3)).empty());
  CHECK_FALSE(dirac_residual(fp, R(-3)).empty());
}

TEST_CASE("real even pair", "[spinor]") {
  // conjugation-invariant input: the imaginary correction vanishes
  auto real_field = F(kOne + gammas<R>({1, 2}), FourMomentum<R>{}) ;
  auto [rp, rm] = real_even_pair(real_field);
  CHECK(rp == real_field);
  CHECK(rm == real_field);

  auto f = worked_joyce();
  auto [fp, fm] = real_even_pair(f);
  CHECK(is_real_field(fp));
  CHECK(is_real_field(fm));
  CHECK(fp.is_even());
  CHECK(fm.is_even());
  CHECK(hestenes_residual(fp, R(3)).empty());
  CHECK(hestenes_residual(fm, R(-3)).empty());
  CHECK(f * projector_i12<R>(Sign::plus) - fp * projector_i12<R>(Sign::plus) == F{});
  CHECK(f * projector_i12<R>(Sign::minus) - fm * projector_i12<R>(Sign::minus) == F{});

  auto odd = F(basis_vector<R>(0), FourMomentum<R>::along_x(R(5), R(4)));
  CHECK_THROWS_AS(real_even_pair(odd), std::invalid_argument);
}

TEST_CASE("reconstruct_joyce", "[spinor]") {
  auto real_field = F(kOne + gammas<R>({2, 3}), FourMomentum<R>{});
  CHECK(reconstruct_joyce(real_field, real_field) == real_field);

  RandomSource<R> rnd(8);
  for (int n = 0; n < 10; ++n) {
    auto f = joyce_planewave(rnd.params(), rnd.sign(), R(4), R(3));
    auto [fp, fm] = real_even_pair(f);
    CHECK(reconstruct_joyce(fp, fm) == f);
  }
}

TEST_CASE("reconstruct_joyce of Hestenes solutions solves Joyce", "[spinor]") {
  // Hestenes(+m) and Hestenes(-m) solutions from the degeneracy subspaces,
  // made real, combine into a Joyce solution.
  R m(3), k(4), omega(5);
  auto plus = degeneracy_conditions(omega, k, m, Sign::plus);
  auto minus = degeneracy_conditions(omega, k, m, Sign::minus);
  auto hp = real_even_pair(joyce_planewave(plus.basis[0], Sign::plus, k, m)).first;
  auto hm = real_even_pair(joyce_planewave(minus.basis[1], Sign::plus, k, m)).second;
  REQUIRE(hestenes_residual(hp, m).empty());
  REQUIRE(hestenes_residual(hm, R(-m)).empty());
  CHECK(joyce_residual(reconstruct_joyce(hp, hm), m).empty());
}

TEST_CASE("hestenes quartet", "[spinor]") {
  R m(3);
  auto psi = dirac_planewave(kOne, R(5), R(4), m);
  REQUIRE(psi.terms().front().amplitude ==
          C(5) * basis_vector<R>(0) + C(4) * basis_vector<R>(1) - C(3) * kOne);
  auto q = hestenes_quartet(psi, m);
  for (const auto& h : q) {
    CHECK(hestenes_residual(h, m).empty());
    CHECK(is_real_field(h));
    CHECK(h.is_even());
  }
  CHECK(q[1] == q[0] * gammas<R>({1, 2}));
  CHECK(q[3] == q[2] * gammas<R>({1, 2}));

  RandomSource<R> rnd(4);
  auto generic = dirac_planewave(rnd.multivector(), R(5), R(4), m);
  auto gq = hestenes_quartet(generic, m);
  CHECK(rank(std::vector<F>(gq.begin(), gq.end()), ScalarField::real) == 4);

  CHECK_THROWS_AS(hestenes_quartet(worked_joyce(), m), std::invalid_argument);
}

TEST_CASE("current density", "[spinor]") {
  CHECK(current_density(kOne) == basis_vector<R>(0));
  Rotor<R> r(R(3, 5), R(4, 5), gammas<R>({1, 2}));
  CHECK(current_density(r.value()) == basis_vector<R>(0));
  RandomSource<R> rnd(6);
  for (int n = 0; n < 10; ++n) {
    auto psi = even_odd_split(rnd.real_multivector()).first;
    CHECK(current_density(psi).is_real());
  }
}

TEST_CASE("rotors", "[spinor]") {
  Rotor<R> r(R(3, 5), R(4, 5), gammas<R>({1, 2}));
  CHECK(r.value() * reversion(r.value()) == kOne);
  CHECK(r.value() * basis_vector<R>(0) == basis_vector<R>(0) * r.value());
  CHECK_THROWS_AS(Rotor<R>(R(1, 2), R(1, 2), gammas<R>({1, 2})), std::invalid_argument);
  // a boost plane is not spatial
  CHECK_THROWS_AS(Rotor<R>(R(3, 5), R(4, 5), gammas<R>({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Rotor<R>(R(3, 5), R(4, 5), basis_vector<R>(1)), std::invalid_argument);

  auto fr = Rotor<double>::from_angle(0.7, gammas<double>({2, 3}));
  CHECK(fr.c() == Catch::Approx(std::cos(0.35)));
  CHECK((fr.value() * reversion(fr.value()) - Multivector<double>(Complex<double>(1.0))).is_zero());
}

TEST_CASE("gauge covariance", "[spinor]") {
  auto f = worked_joyce();
  Rotor<R> unit(R(1), R(0), gammas<R>({1, 2}));
  CHECK(gauge_transform(f, unit) == f);

  auto g12 = gammas<R>({1, 2});
  RandomSource<R> rnd(13);
  for (auto plane : {gammas<R>({1, 2}), gammas<R>({2, 3}), gammas<R>({3, 1})}) {
    Rotor<R> r(R(3, 5), R(4, 5), plane);
    for (int n = 0; n < 5; ++n) {
      auto field = rnd.field(2);
      auto lhs = hestenes_residual(gauge_transform(field, r), R(3), rotated_plane(r, g12));
      auto rhs = hestenes_residual(field, R(3)) * r.value();
      CHECK(lhs == rhs);
    }
  }
}
