#include <catch2/catch_amalgamated.hpp>

#include "sta/matrix.hpp"
#include "sta/multivector.hpp"
#include "sta/random.hpp"

#include <vector>

using namespace sta;
using R = Rational;
using MV = Multivector<R>;
using C = Complex<R>;

namespace {

// Independent blade-product oracle: reduce a word of gamma indices by
// adjacent transpositions (each flips the sign) and contractions
// gamma_mu gamma_mu = eta(mu, mu), then read off the canonical mask.
std::pair<int, unsigned> reduce_word(std::vector<int> word) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        sign *= word[i] == 0 ? 1 : -1;
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int mu : word) mask |= 1u << mu;
  return {sign, mask};
}

std::vector<int> factors(unsigned mask) {
  std::vector<int> out;
  for (int mu = 0; mu < 4; ++mu)
    if (mask & (1u << mu)) out.push_back(mu);
  return out;
}

MV scalar(long n, long d = 1) { return MV(C(R(n, d))); }

template <class A, class B> concept multipliable = requires(A a, B b) { a * b; };
template <class A, class B> concept addable = requires(A a, B b) { a + b; };

}  // namespace

TEST_CASE("basis vectors", "[core]") {
  auto g0 = basis_vector<R>(0);
  CHECK(g0[BladeIndex{0b0001}] == C(1));
  CHECK(g0.is_odd());
  CHECK(basis_vector<R>(3)[BladeIndex{0b1000}] == C(1));
  CHECK_THROWS_AS(basis_vector<R>(4), std::out_of_range);
  CHECK_THROWS_AS(basis_vector<R>(-1), std::out_of_range);
}

TEST_CASE("blade keys and grades", "[core]") {
  CHECK(BladeIndex{0}.key() == "s");
  CHECK(BladeIndex{0b1111}.key() == "e0123");
  CHECK(BladeIndex{0b0110}.key() == "e12");
  for (unsigned i = 0; i < 16; ++i) {
    BladeIndex b{i};
    CHECK(BladeIndex::from_key(b.key()) == b);
    CHECK(b.grade() == static_cast<int>(factors(i).size()));
  }
  CHECK_THROWS(BladeIndex::from_key("e10"));
  CHECK_THROWS(BladeIndex::from_key("e4"));
  CHECK_THROWS(BladeIndex{16});
}

TEST_CASE("blade product agrees with word reduction on all 256 pairs", "[core]") {
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) {
      auto word = factors(i);
      auto rhs = factors(j);
      word.insert(word.end(), rhs.begin(), rhs.end());
      auto [sign, mask] = reduce_word(word);
      auto p = blade_product(BladeIndex{i}, BladeIndex{j});
      INFO("blades " << i << " * " << j);
      CHECK(p.sign == sign);
      CHECK(p.blade.bits() == mask);
    }
}

TEST_CASE("geometric product examples", "[core]") {
  auto g0 = basis_vector<R>(0), g1 = basis_vector<R>(1);
  CHECK(g0 * g0 == scalar(1));
  CHECK(g1 * g1 == scalar(-1));
  auto g01 = gammas<R>({0, 1});
  CHECK(g01 * g01 == scalar(1));
  auto g12 = gammas<R>({1, 2});
  CHECK(g12 * g12 == scalar(-1));
  // same square through the matrix oracle
  auto m12 = gamma_matrix<R>(1) * gamma_matrix<R>(2);
  CHECK(m12 * m12 == C(-1) * Matrix4C<R>::identity());
  // g3 g1 is the negative of the canonical e13 blade
  CHECK(gammas<R>({3, 1}) == -MV::blade(BladeIndex{0b1010}));
}

TEST_CASE("anticommutation relations", "[core]") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      auto a = basis_vector<R>(mu), b = basis_vector<R>(nu);
      CHECK(a * b + b * a == scalar(2 * Metric::eta(mu, nu)));
    }
}

TEST_CASE("associativity over all blade triples", "[core]") {
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j)
      for (unsigned k = 0; k < 16; ++k) {
        auto a = MV::blade(BladeIndex{i}), b = MV::blade(BladeIndex{j}), c = MV::blade(BladeIndex{k});
        REQUIRE((a * b) * c == a * (b * c));
      }
}

TEST_CASE("combine", "[core]") {
  auto g0 = basis_vector<R>(0);
  CHECK(combine<R>({{C(1), g0}, {C(-1), g0}}).is_zero());
  CHECK(combine<R>({}).is_zero());
  auto p = combine<R>({{C(R(1, 2)), scalar(1)}, {C(R(1, 2)), g0}});
  CHECK(p * p == p);
  CHECK(p[BladeIndex{0}] == C(R(1, 2)));
  CHECK(p[BladeIndex{1}] == C(R(1, 2)));
}

TEST_CASE("grade projection and parity split", "[core]") {
  auto g0 = basis_vector<R>(0);
  auto g01 = gammas<R>({0, 1});
  CHECK(grade_project(scalar(1) + g0, 0) == scalar(1));
  CHECK(grade_project(g01, 2) == g01);
  CHECK(grade_project(g01, 1).is_zero());
  CHECK_THROWS_AS(grade_project(g01, 5), std::out_of_range);

  auto [e1, o1] = even_odd_split(g0);
  CHECK(e1.is_zero());
  CHECK(o1 == g0);
  auto g12 = gammas<R>({1, 2});
  auto [e2, o2] = even_odd_split(scalar(1) + g12);
  CHECK(e2 == scalar(1) + g12);
  CHECK(o2.is_zero());
  auto i4 = pseudoscalar<R>();
  auto [e3, o3] = even_odd_split(g0 + i4);
  CHECK(e3 == i4);
  CHECK(o3 == g0);
}

TEST_CASE("reversion, conjugation and adjoint examples", "[core]") {
  auto g0 = basis_vector<R>(0), g1 = basis_vector<R>(1);
  auto g01 = gammas<R>({0, 1});
  CHECK(reversion(g0) == g0);
  CHECK(reversion(g01) == -g01);
  CHECK(reversion(pseudoscalar<R>()) == pseudoscalar<R>());

  auto g12 = gammas<R>({1, 2});
  CHECK(complex_conjugate(C::i() * g12) == C(R(0), R(-1)) * g12);
  CHECK(complex_conjugate(g01 + scalar(3)) == g01 + scalar(3));

  // adjoint(g0) = g0 and adjoint(g1) = -g1, read off the matrix
  // conjugate-transpose of the Dirac representation
  CHECK(gamma_matrix<R>(0).conjugate_transpose() == gamma_matrix<R>(0));
  CHECK(gamma_matrix<R>(1).conjugate_transpose() == C(-1) * gamma_matrix<R>(1));
  CHECK(hermitian_adjoint(g0) == g0);
  CHECK(hermitian_adjoint(g1) == -g1);
  auto p = C(R(1, 2)) * (scalar(1) + g0);
  CHECK(hermitian_adjoint(p) == p);
}

TEST_CASE("even basis", "[core]") {
  auto basis = even_basis<R>();
  REQUIRE(basis.size() == 8);
  for (const auto& b : basis) CHECK(b.is_even());
  RandomSource<R> rnd(3);
  auto e = rnd.even();
  auto coords = even_coordinates(e);
  MV rebuilt;
  for (std::size_t k = 0; k < 8; ++k) rebuilt += coords[k] * basis[k];
  CHECK(rebuilt == e);
  CHECK_THROWS(even_coordinates(basis_vector<R>(0)));
}

TEST_CASE("algebraic properties on random elements", "[core][property]") {
  RandomSource<R> rnd(11);
  for (int n = 0; n < 25; ++n) {
    auto a = rnd.multivector(), b = rnd.multivector();
    CHECK(reversion(a * b) == reversion(b) * reversion(a));
    CHECK(complex_conjugate(a * b) == complex_conjugate(a) * complex_conjugate(b));
    CHECK(complex_conjugate(complex_conjugate(a)) == a);
    CHECK(complex_conjugate(reversion(a)) == reversion(complex_conjugate(a)));
    CHECK(hermitian_adjoint(a * b) == hermitian_adjoint(b) * hermitian_adjoint(a));
    CHECK(hermitian_adjoint(hermitian_adjoint(a)) == a);
    MV sum;
    for (int g = 0; g <= 4; ++g) sum += grade_project(a, g);
    CHECK(sum == a);
    auto [ea, oa] = even_odd_split(a);
    auto [eb, ob] = even_odd_split(b);
    CHECK((ea * eb).is_even());
    CHECK((oa * ob).is_even());
    CHECK((ea * ob).is_odd());
  }
}

TEST_CASE("float mode reports near-zero coefficients as zero", "[core][float]") {
  using F = Multivector<double>;
  F a = Complex<double>(1.0);
  F tiny = Complex<double>(1e-15);
  CHECK(tiny.is_zero());
  CHECK_FALSE(a.is_zero());
  auto g12 = gammas<double>({1, 2});
  CHECK((g12 * g12 + a).is_zero());
  // storage keeps the tiny value
  CHECK(tiny[BladeIndex{0}].re == 1e-15);
}

TEST_CASE("mixing scalar modes does not compile", "[core]") {
  STATIC_REQUIRE_FALSE(multipliable<Multivector<R>, Multivector<double>>);
  STATIC_REQUIRE_FALSE(addable<Multivector<R>, Multivector<double>>);
  STATIC_REQUIRE(multipliable<Multivector<R>, Multivector<R>>);
}
