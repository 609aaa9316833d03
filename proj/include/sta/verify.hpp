#pragma once

#include "sta/json_io.hpp"
#include "sta/planewave.hpp"
#include "sta/random.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sta::verify {

using io::json;

struct Check {
  std::string id;
  std::string description;
  bool pass = false;
  json witness;  // null when there is nothing to show
};

struct VerificationReport {
  std::string suite;
  Mode mode = Mode::exact;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  }
  int exit_code() const { return failures() == 0 ? 0 : 1; }

  json to_json() const {
    json list = json::array();
    for (const auto& c : checks) {
      json entry = {{"id", c.id},
                    {"description", c.description},
                    {"status", c.pass ? "pass" : "fail"}};
      if (!c.witness.is_null()) entry["witness"] = c.witness;
      list.push_back(entry);
    }
    return {{"suite", suite},
            {"mode", mode_name(mode)},
            {"seed", seed},
            {"checks", list},
            {"counts",
             {{"total", checks.size()},
              {"pass", checks.size() - failures()},
              {"fail", failures()}}}};
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "projectors", "splits",
                                              "planewave", "oracle"};
  return names;
}

/// On-shell data used by the suites: (3, 4, +-5) exactly, (1, 1, +-sqrt 2) in
/// float mode.
template <Real T> struct Kinematics {
  T m;
  T k;
};

template <Real T> Kinematics<T> default_kinematics() {
  if constexpr (scalar_traits<T>::exact) {
    return {T(3), T(4)};
  } else {
    return {1.0, 1.0};
  }
}

namespace detail {

template <Real T> class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : report_(r) {}

  void add(std::string id, std::string description, bool pass, json witness = nullptr) {
    report_.checks.push_back({std::move(id), std::move(description), pass, std::move(witness)});
  }

  /// Runs body and records it; exceptions count as failures.
  void run(std::string id, std::string description, const std::function<bool(json&)>& body) {
    json witness;
    bool pass = false;
    try {
      pass = body(witness);
    } catch (const std::exception& e) {
      witness = {{"exception", e.what()}};
    }
    add(std::move(id), std::move(description), pass, std::move(witness));
  }

 private:
  VerificationReport& report_;
};

template <Real T> bool zero(const Multivector<T>& m, double scale) { return m.is_zero(scale); }
template <Real T> bool zero(const Field<T>& f, double scale) { return f.is_zero(scale); }
template <Real T> bool same(const Multivector<T>& a, const Multivector<T>& b) {
  return (a - b).is_zero(std::max(a.max_magnitude(), b.max_magnitude()));
}
template <Real T> bool same(const Field<T>& a, const Field<T>& b) {
  return (a - b).is_zero(std::max(a.max_magnitude(), b.max_magnitude()));
}
template <Real T> bool same(const Matrix4C<T>& a, const Matrix4C<T>& b) {
  double scale = std::max(a.max_magnitude(), b.max_magnitude());
  if constexpr (scalar_traits<T>::exact) {
    return a == b;
  } else {
    return max_discrepancy(a, b) <= kFloatZeroTol * (1.0 + scale);
  }
}

template <Real T> Multivector<T> one() { return Multivector<T>(Complex<T>(1)); }

}  // namespace detail

template <Real T> void run_core(VerificationReport& report, std::uint64_t seed) {
  detail::Recorder<T> rec(report);
  RandomSource<T> rnd(seed);
  using MV = Multivector<T>;

  rec.run("core.anticommutators", "gamma_mu gamma_nu + gamma_nu gamma_mu = 2 eta_mu_nu, all 16 pairs",
          [&](json& w) {
            int ok = 0;
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu) {
                auto a = basis_vector<T>(mu), b = basis_vector<T>(nu);
                MV expect = Complex<T>(T(2 * Metric::eta(mu, nu)));
                ok += detail::same(a * b + b * a, expect);
              }
            w = {{"pairs_ok", ok}};
            return ok == 16;
          });
  rec.run("core.g0g1_squared", "(gamma_0 gamma_1)^2 = +1", [&](json&) {
    auto b = gammas<T>({0, 1});
    return detail::same(b * b, detail::one<T>());
  });
  rec.run("core.g1g2_squared", "(gamma_1 gamma_2)^2 = -1", [&](json&) {
    auto b = gammas<T>({1, 2});
    return detail::same(b * b, MV(Complex<T>(-1)));
  });
  rec.run("core.associativity", "(ab)c = a(bc) over all 4096 blade triples", [&](json& w) {
    int bad = 0;
    for (unsigned i = 0; i < 16; ++i)
      for (unsigned j = 0; j < 16; ++j)
        for (unsigned k = 0; k < 16; ++k) {
          auto a = MV::blade(BladeIndex{i}), b = MV::blade(BladeIndex{j}),
               c = MV::blade(BladeIndex{k});
          bad += !((a * b) * c == a * (b * c));
        }
    w = {{"failures", bad}};
    return bad == 0;
  });
  rec.run("core.random_associativity", "(ab)c = a(bc) for 20 random triples", [&](json&) {
    for (int n = 0; n < 20; ++n) {
      auto a = rnd.multivector(), b = rnd.multivector(), c = rnd.multivector();
      if (!detail::same((a * b) * c, a * (b * c))) return false;
    }
    return true;
  });
  rec.run("core.reversion_antiautomorphism", "reversion(ab) = reversion(b) reversion(a)", [&](json&) {
    for (int n = 0; n < 30; ++n) {
      auto a = rnd.multivector(), b = rnd.multivector();
      if (!detail::same(reversion(a * b), reversion(b) * reversion(a))) return false;
    }
    return true;
  });
  rec.run("core.conjugate_automorphism",
          "complex conjugation is a ring automorphism commuting with reversion", [&](json&) {
            for (int n = 0; n < 30; ++n) {
              auto a = rnd.multivector(), b = rnd.multivector();
              if (!detail::same(complex_conjugate(a * b), complex_conjugate(a) * complex_conjugate(b)))
                return false;
              if (!(complex_conjugate(reversion(a)) == reversion(complex_conjugate(a)))) return false;
            }
            return true;
          });
  rec.run("core.adjoint", "adjoint(ab) = adjoint(b) adjoint(a); adjoint is an involution", [&](json&) {
    for (int n = 0; n < 30; ++n) {
      auto a = rnd.multivector(), b = rnd.multivector();
      if (!detail::same(hermitian_adjoint(a * b), hermitian_adjoint(b) * hermitian_adjoint(a)))
        return false;
      if (!detail::same(hermitian_adjoint(hermitian_adjoint(a)), a)) return false;
    }
    return true;
  });
  rec.run("core.parity", "even*even and odd*odd are even, even*odd is odd", [&](json&) {
    for (int n = 0; n < 30; ++n) {
      auto [e1, o1] = even_odd_split(rnd.multivector());
      auto [e2, o2] = even_odd_split(rnd.multivector());
      if (!(e1 * e2).is_even() || !(o1 * o2).is_even() || !(e1 * o2).is_odd() ||
          !(o1 * e2).is_odd())
        return false;
    }
    return true;
  });
  rec.run("core.grade_completeness", "sum of grade projections g = 0..4 is the identity", [&](json&) {
    for (int n = 0; n < 30; ++n) {
      auto a = rnd.multivector();
      MV sum;
      for (int g = 0; g <= 4; ++g) sum += grade_project(a, g);
      if (!(sum == a)) return false;
    }
    return true;
  });
  rec.run("core.even_basis", "even basis has 8 elements, all even, spanning the even blades",
          [&](json& w) {
            auto basis = even_basis<T>();
            bool all_even = std::all_of(basis.begin(), basis.end(),
                                        [](const MV& b) { return b.is_even(); });
            auto e = rnd.even();
            auto coords = even_coordinates(e);
            MV rebuilt;
            for (std::size_t k = 0; k < 8; ++k) rebuilt += coords[k] * basis[k];
            w = {{"size", basis.size()}};
            return basis.size() == 8 && all_even && rebuilt == e;
          });
}

template <Real T> void run_projectors(VerificationReport& report, std::uint64_t) {
  detail::Recorder<T> rec(report);
  auto one = detail::one<T>();
  for (auto fam : {ProjectorFamily::gamma0, ProjectorFamily::i12}) {
    std::string name = fam == ProjectorFamily::gamma0 ? "p0" : "p12";
    auto pp = projector<T>(fam, Sign::plus);
    auto pm = projector<T>(fam, Sign::minus);
    rec.run("projectors." + name + ".idempotent", "P^2 = P for both signs",
            [&](json&) { return detail::same(pp * pp, pp) && detail::same(pm * pm, pm); });
    rec.run("projectors." + name + ".hermitian", "P^dagger = P for both signs", [&](json&) {
      return detail::same(hermitian_adjoint(pp), pp) && detail::same(hermitian_adjoint(pm), pm);
    });
    rec.run("projectors." + name + ".complete", "P+ + P- = 1",
            [&](json&) { return detail::same(pp + pm, one); });
    rec.run("projectors." + name + ".orthogonal", "P+ P- = P- P+ = 0", [&](json&) {
      return detail::zero(pp * pm, 1.0) && detail::zero(pm * pp, 1.0);
    });
  }
  rec.run("projectors.p0.absorbs_gamma0", "gamma_0 P(+-)0 = +-P(+-)0", [&](json&) {
    auto g0 = basis_vector<T>(0);
    return detail::same(g0 * projector_gamma0<T>(Sign::plus), projector_gamma0<T>(Sign::plus)) &&
           detail::same(g0 * projector_gamma0<T>(Sign::minus), -projector_gamma0<T>(Sign::minus));
  });
  rec.run("projectors.p12.absorbs_i12", "P(+-)12 = +-i P(+-)12 gamma_1 gamma_2", [&](json&) {
    auto g12 = gammas<T>({1, 2});
    for (auto s : {Sign::plus, Sign::minus}) {
      auto p = projector_i12<T>(s);
      Complex<T> si(T(0), T(to_int(s)));
      if (!detail::same(p, si * (p * g12))) return false;
    }
    return true;
  });
  rec.run("projectors.p12.even", "P(+-)12 is even", [&](json&) {
    return projector_i12<T>(Sign::plus).is_even() && projector_i12<T>(Sign::minus).is_even();
  });
  rec.run("projectors.families_commute", "P(a)0 P(b)12 = P(b)12 P(a)0 for all four sign pairs",
          [&](json&) {
            for (auto a : {Sign::plus, Sign::minus})
              for (auto b : {Sign::plus, Sign::minus}) {
                auto x = projector_gamma0<T>(a), y = projector_i12<T>(b);
                if (!detail::same(x * y, y * x)) return false;
              }
            return true;
          });
}

template <Real T> void run_splits(VerificationReport& report, std::uint64_t seed) {
  detail::Recorder<T> rec(report);
  RandomSource<T> rnd(seed);
  auto kin = default_kinematics<T>();
  const T m = kin.m, k = kin.k;
  const T neg_m = T(-m);

  std::vector<Field<T>> joyce;
  for (int n = 0; n < 20; ++n)
    joyce.push_back(joyce_planewave(rnd.params(), n % 2 == 0 ? Sign::plus : Sign::minus, k, m));

  auto all = [&](auto&& pred) {
    return std::all_of(joyce.begin(), joyce.end(), pred);
  };

  rec.run("splits.joyce_inputs", "20 random plane waves solve the Joyce equation", [&](json&) {
    return all([&](const Field<T>& f) { return joyce_residual(f, m).is_zero(f.max_magnitude()); });
  });
  rec.run("splits.p0_dirac", "F P+0 solves Dirac(+m) and F P-0 solves Dirac(-m)", [&](json&) {
    return all([&](const Field<T>& f) {
      auto [p, q] = split_right(f, ProjectorFamily::gamma0);
      double s = f.max_magnitude();
      return dirac_residual(p, m).is_zero(s) && dirac_residual(q, neg_m).is_zero(s) &&
             detail::same(p + q, f);
    });
  });
  rec.run("splits.p12_hestenes", "F P+12 solves Hestenes(+m) and F P-12 solves Hestenes(-m)",
          [&](json&) {
            return all([&](const Field<T>& f) {
              auto [p, q] = split_right(f, ProjectorFamily::i12);
              double s = f.max_magnitude();
              return hestenes_residual(p, m).is_zero(s) && hestenes_residual(q, neg_m).is_zero(s);
            });
          });
  rec.run("splits.real_even_pair",
          "F(+-) are real, even, solve Hestenes(+-m), and F P(+-)12 = F(+-) P(+-)12", [&](json&) {
            return all([&](const Field<T>& f) {
              auto [fp, fm] = real_even_pair(f);
              double s = f.max_magnitude();
              return is_real_field(fp) && is_real_field(fm) && fp.is_even() && fm.is_even() &&
                     hestenes_residual(fp, m).is_zero(s) &&
                     hestenes_residual(fm, neg_m).is_zero(s) &&
                     detail::same(f * projector_i12<T>(Sign::plus), fp * projector_i12<T>(Sign::plus)) &&
                     detail::same(f * projector_i12<T>(Sign::minus), fm * projector_i12<T>(Sign::minus));
            });
          });
  rec.run("splits.reconstruction", "reconstruct_joyce(real_even_pair(F)) = F", [&](json&) {
    return all([&](const Field<T>& f) {
      auto [fp, fm] = real_even_pair(f);
      return detail::same(reconstruct_joyce(fp, fm), f);
    });
  });
  rec.run("splits.dirac_right_invariance", "Dirac solutions stay solutions under F -> F C", [&](json&) {
    auto omega = on_shell_omega(k, m, Sign::plus);
    for (int n = 0; n < 10; ++n) {
      auto f = dirac_planewave(rnd.multivector(), omega, k, m);
      auto fc = f * rnd.multivector();
      if (!dirac_residual(fc, m).is_zero(fc.max_magnitude() + f.max_magnitude())) return false;
    }
    return true;
  });
  rec.run("splits.joyce_right_invariance",
          "Joyce solutions stay solutions under F -> F C when C commutes with gamma_0", [&](json&) {
            auto g0 = basis_vector<T>(0);
            for (int n = 0; n < 10; ++n) {
              auto c = rnd.multivector();
              auto commuting = Complex<T>(T(1) / T(2)) * (c + g0 * c * g0);
              auto fc = joyce[static_cast<std::size_t>(n)] * commuting;
              if (!joyce_residual(fc, m).is_zero(fc.max_magnitude())) return false;
            }
            return true;
          });
  rec.run("splits.quartet", "Hestenes quartet from a Dirac plane wave: real, even, Hestenes(+m), real rank 4",
          [&](json& w) {
            auto omega = on_shell_omega(k, m, Sign::plus);
            auto psi = dirac_planewave(detail::one<T>() + rnd.multivector(), omega, k, m);
            auto q = hestenes_quartet(psi, m);
            bool ok = true;
            for (const auto& h : q)
              ok = ok && is_real_field(h) && h.is_even() &&
                   hestenes_residual(h, m).is_zero(psi.max_magnitude());
            auto r = rank(std::vector<Field<T>>(q.begin(), q.end()), ScalarField::real);
            w = {{"real_rank", r}};
            return ok && r == 4;
          });
  rec.run("splits.gauge_covariance",
          "residual with plane R~ g1g2 R of F R equals residual(F) R, rotors in three planes",
          [&](json&) {
            auto g12 = gammas<T>({1, 2});
            T c, s;
            if constexpr (scalar_traits<T>::exact) {
              c = T(3) / T(5);
              s = T(4) / T(5);
            } else {
              c = std::cos(0.3);
              s = std::sin(0.3);
            }
            for (auto plane : {gammas<T>({1, 2}), gammas<T>({2, 3}), gammas<T>({3, 1})}) {
              Rotor<T> r(c, s, plane);
              for (const auto& f : joyce) {
                auto lhs = hestenes_residual(gauge_transform(f, r), m, rotated_plane(r, g12));
                auto rhs = hestenes_residual(f, m) * r.value();
                if (!detail::same(lhs, rhs)) return false;
              }
            }
            return true;
          });
  rec.run("splits.current_density", "current of a real even spinor is real; current of 1 is gamma_0",
          [&](json&) {
            if (!(current_density(detail::one<T>()) == basis_vector<T>(0))) return false;
            for (int n = 0; n < 10; ++n) {
              auto psi = even_odd_split(rnd.real_multivector()).first;
              if (!current_density(psi).is_real()) return false;
            }
            return true;
          });
}

template <Real T> void run_planewave(VerificationReport& report, std::uint64_t seed) {
  detail::Recorder<T> rec(report);
  RandomSource<T> rnd(seed);
  auto kin = default_kinematics<T>();
  const T m = kin.m, k = kin.k;
  const T neg_m = T(-m);

  if constexpr (scalar_traits<T>::exact) {
    rec.run("planewave.worked_example", "(m,k,w) = (3,4,5): A = 1 - 2 g0g1 solves the condition",
            [&](json& w) {
              auto f = joyce_planewave<T>({Complex<T>(1), {}, {}, {}}, Sign::plus, k, m);
              auto expect = detail::one<T>() - Complex<T>(2) * gammas<T>({0, 1});
              w = {{"amplitude", io::to_json(f.terms().front().amplitude)}};
              return f.terms().front().amplitude == expect &&
                     planewave_condition(expect, T(5), k, m).is_zero();
            });
    rec.run("planewave.worked_example_negative", "(m,k,w) = (3,4,-5): A = 1 + g0g1/2", [&](json&) {
      auto f = joyce_planewave<T>({Complex<T>(1), {}, {}, {}}, Sign::minus, k, m);
      return f.terms().front().amplitude ==
             detail::one<T>() + Complex<T>(T(1) / T(2)) * gammas<T>({0, 1});
    });
  }
  rec.run("planewave.inverse_relation", "A+ = -((w - m)/k) g0g1 A- holds on every Joyce wave",
          [&](json&) {
            for (int n = 0; n < 10; ++n) {
              auto s = n % 2 == 0 ? Sign::plus : Sign::minus;
              auto omega = on_shell_omega(k, m, s);
              auto a = joyce_amplitude(rnd.params(), omega, k, m);
              if (!satisfies_inverse_relation(a, omega, k, m)) return false;
            }
            return true;
          });
  rec.run("planewave.joyce_rank", "unit parameters x both signs give complex rank 8", [&](json& w) {
    std::vector<Field<T>> fields;
    for (auto s : {Sign::plus, Sign::minus})
      for (int j = 0; j < 4; ++j)
        fields.push_back(joyce_planewave(PlaneWaveParams<T>::unit(j), s, k, m));
    bool solve = std::all_of(fields.begin(), fields.end(), [&](const Field<T>& f) {
      return joyce_residual(f, m).is_zero(f.max_magnitude());
    });
    auto r = rank(fields, ScalarField::complex);
    w = {{"complex_rank", r}};
    return solve && r == 8;
  });
  rec.run("planewave.dirac_spinor_count", "column-spinor Dirac solutions: 2 per sign, 4 in total",
          [&](json& w) {
            std::size_t total = 0;
            for (auto s : {Sign::plus, Sign::minus})
              total += dirac_spinor_solution_dim(
                  FourMomentum<T>::along_x(on_shell_omega(k, m, s), k), m);
            w = {{"dimension", total}};
            return total == 4;
          });
  rec.run("planewave.degeneracy",
          "each (omega sign, P12 sign) subspace has complex dimension 2 and solves Hestenes(+-m)",
          [&](json& w) {
            json dims = json::array();
            bool ok = true;
            for (auto ws : {Sign::plus, Sign::minus}) {
              auto omega = on_shell_omega(k, m, ws);
              for (auto ps : {Sign::plus, Sign::minus}) {
                auto sub = degeneracy_conditions(omega, k, m, ps);
                dims.push_back(sub.basis.size());
                ok = ok && sub.basis.size() == 2;
                T mass = ps == Sign::plus ? m : neg_m;
                for (const auto& p : sub.basis) {
                  auto f = joyce_planewave(p, ws, k, m);
                  double sc = f.max_magnitude();
                  ok = ok && hestenes_residual(f, mass).is_zero(sc) &&
                       !hestenes_residual(f, T(-mass)).is_zero(sc) &&
                       !dirac_residual(f, mass).is_zero(sc);
                }
              }
            }
            w = {{"dimensions", dims}};
            return ok;
          });
  rec.run("planewave.degeneracy_condition_form",
          "P-12 part vanishes iff b = i a and c = i d (the d = i c variant is also reported)",
          [&](json& w) {
            auto omega = on_shell_omega(k, m, Sign::plus);
            auto sub = degeneracy_conditions(omega, k, m, Sign::plus);
            Complex<T> i = Complex<T>::i();
            bool b_ia = sub.contains({Complex<T>(1), i, {}, {}});
            bool d_minus_ic = sub.contains({{}, {}, Complex<T>(1), -i});
            bool d_ic = sub.contains({{}, {}, Complex<T>(1), i});
            w = {{"b_equals_i_a", b_ia},
                 {"d_equals_minus_i_c", d_minus_ic},
                 {"d_equals_i_c", d_ic}};
            return b_ia && d_minus_ic && !d_ic;
          });
  rec.run("planewave.dispersion_forcing",
          "on-shell kernels are 4-dimensional per sign; off-shell kernel is trivial", [&](json& w) {
            auto wp = on_shell_omega(k, m, Sign::plus);
            auto wm = on_shell_omega(k, m, Sign::minus);
            T off = scalar_traits<T>::exact ? T(6) : T(wp + T(1));
            auto kp = planewave_condition_kernel(wp, k, m).size();
            auto km = planewave_condition_kernel(wm, k, m).size();
            auto ko = planewave_condition_kernel(off, k, m).size();
            w = {{"plus", kp}, {"minus", km}, {"off_shell", ko}};
            return kp == 4 && km == 4 && ko == 0;
          });
  rec.run("planewave.massless_coincidence", "with m = 0 Joyce and Dirac residuals agree on random fields",
          [&](json&) {
            for (int n = 0; n < 20; ++n) {
              auto f = rnd.field();
              if (!(joyce_residual(f, T(0)) == dirac_residual(f, T(0)))) return false;
            }
            return true;
          });
  rec.run("planewave.no_even_dirac_solution", "no nonzero even plane wave solves Dirac with m > 0",
          [&](json&) {
            for (auto s : {Sign::plus, Sign::minus})
              if (!even_dirac_kernel(FourMomentum<T>::along_x(on_shell_omega(k, m, s), k), m).empty())
                return false;
            return true;
          });
  rec.run("planewave.generic_not_dirac", "generic Joyce waves fail Dirac for m > 0", [&](json&) {
    for (int n = 0; n < 5; ++n) {
      auto f = joyce_planewave(rnd.params(), rnd.sign(), k, m);
      if (dirac_residual(f, m).is_zero(f.max_magnitude())) return false;
    }
    return true;
  });
  rec.run("planewave.rest_solutions", "k = 0: four solutions per sign, each solving Joyce", [&](json& w) {
    auto plus = rest_solutions(m, Sign::plus);
    auto minus = rest_solutions(m, Sign::minus);
    bool ok = plus.basis.size() == 4 && minus.basis.size() == 4 && !plus.degenerate;
    for (const auto* set : {&plus, &minus})
      for (const auto& f : set->basis) ok = ok && joyce_residual(f, m).is_zero(f.max_magnitude());
    auto massless = rest_solutions(T(0), Sign::plus);
    w = {{"plus", plus.basis.size()}, {"minus", minus.basis.size()},
         {"massless_degenerate", massless.degenerate}};
    return ok && massless.degenerate && massless.basis.size() == 8;
  });
}

template <Real T> void run_oracle(VerificationReport& report, std::uint64_t seed) {
  detail::Recorder<T> rec(report);
  RandomSource<T> rnd(seed);
  using MV = Multivector<T>;
  auto kin = default_kinematics<T>();

  rec.run("oracle.gamma_relations", "gamma matrices satisfy the Clifford relations", [&](json&) {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        auto a = gamma_matrix<T>(mu), b = gamma_matrix<T>(nu);
        auto expect = Complex<T>(T(2 * Metric::eta(mu, nu))) * Matrix4C<T>::identity();
        if (!detail::same(a * b + b * a, expect)) return false;
      }
    return true;
  });
  rec.run("oracle.blade_homomorphism", "represent(ab) = represent(a) represent(b), 256 blade pairs",
          [&](json& w) {
            int bad = 0;
            for (unsigned i = 0; i < 16; ++i)
              for (unsigned j = 0; j < 16; ++j) {
                auto a = MV::blade(BladeIndex{i}), b = MV::blade(BladeIndex{j});
                bad += !detail::same(represent(a * b), represent(a) * represent(b));
              }
            w = {{"failures", bad}};
            return bad == 0;
          });
  rec.run("oracle.random_homomorphism", "homomorphism on 100 random pairs", [&](json&) {
    for (int n = 0; n < 100; ++n) {
      auto a = rnd.multivector(), b = rnd.multivector();
      if (!detail::same(represent(a * b), represent(a) * represent(b))) return false;
    }
    return true;
  });
  rec.run("oracle.round_trip", "unrepresent(represent(m)) = m for all blades and 100 random elements",
          [&](json&) {
            for (unsigned i = 0; i < 16; ++i) {
              auto b = MV::blade(BladeIndex{i});
              if (!detail::same(unrepresent(represent(b)), b)) return false;
            }
            for (int n = 0; n < 100; ++n) {
              auto a = rnd.multivector();
              if (!detail::same(unrepresent(represent(a)), a)) return false;
            }
            return true;
          });
  rec.run("oracle.trace_orthogonality", "trace(G_A^-1 G_B)/4 = delta_AB, 256 pairs", [&](json&) {
    for (unsigned i = 0; i < 16; ++i)
      for (unsigned j = 0; j < 16; ++j) {
        BladeIndex a{i}, b{j};
        auto inv = blade_matrix<T>(a);
        if (blade_square(a) < 0) inv = Complex<T>(-1) * inv;
        auto t = (inv * blade_matrix<T>(b)).trace() * Complex<T>(T(1) / T(4));
        if (!is_negligible(t - Complex<T>(i == j ? 1 : 0))) return false;
      }
    return true;
  });
  rec.run("oracle.adjoint", "represent(adjoint(m)) = conjugate-transpose(represent(m))", [&](json&) {
    for (int n = 0; n < 50; ++n) {
      auto a = rnd.multivector();
      if (!detail::same(represent(hermitian_adjoint(a)), represent(a).conjugate_transpose()))
        return false;
    }
    return true;
  });
  rec.run("oracle.residuals", "residual amplitudes match their matrix expressions termwise", [&](json&) {
    auto g0m = gamma_matrix<T>(0);
    auto g12m = gamma_matrix<T>(1) * gamma_matrix<T>(2);
    auto i = Complex<T>::i();
    for (int n = 0; n < 10; ++n) {
      auto f = rnd.field(2);
      const T& m = kin.m;
      auto dr = dirac_residual(f, m), jr = joyce_residual(f, m), hr = hestenes_residual(f, m);
      for (const auto& t : f.terms()) {
        auto a = represent(t.amplitude);
        auto grad = i * represent(slash(t.momentum)) * a;
        auto dm = i * grad - Complex<T>(m) * a;
        auto jm = i * grad - Complex<T>(m) * (a * g0m);
        auto hm = Complex<T>(-1) * (grad * g12m) - Complex<T>(m) * (a * g0m);
        if (!detail::same(represent(dr.amplitude_at(t.momentum)), dm) ||
            !detail::same(represent(jr.amplitude_at(t.momentum)), jm) ||
            !detail::same(represent(hr.amplitude_at(t.momentum)), hm))
          return false;
      }
    }
    return true;
  });
  rec.run("oracle.column_spinors",
          "columns of a matrix Dirac solution satisfy the column-spinor equation", [&](json&) {
            const T& m = kin.m;
            const T& k = kin.k;
            for (auto s : {Sign::plus, Sign::minus}) {
              auto omega = on_shell_omega(k, m, s);
              auto f = dirac_planewave(rnd.multivector(), omega, k, m);
              const auto& t = f.terms().front();
              auto mat = represent(t.amplitude);
              auto op = Complex<T>(-1) * represent(slash(t.momentum)) -
                        Complex<T>(m) * Matrix4C<T>::identity();
              for (int alpha = 0; alpha < 4; ++alpha) {
                auto psi = column_extract(mat, alpha);
                auto r = op * psi;
                for (const auto& c : r)
                  if (!is_negligible(c, mat.max_magnitude() * 10)) return false;
                auto projected = mat * column_projector<T>(alpha);
                for (int col = 0; col < 4; ++col)
                  for (int row = 0; row < 4; ++row)
                    if (col != alpha && !is_negligible(projected(row, col))) return false;
              }
            }
            return true;
          });
}

/// Runs one suite (or "all"); throws std::invalid_argument on an unknown name.
template <Real T>
VerificationReport run_suite(const std::string& suite, std::uint64_t seed) {
  VerificationReport report;
  report.suite = suite;
  report.mode = scalar_traits<T>::mode;
  report.seed = seed;
  auto run_one = [&](const std::string& name) {
    if (name == "core")
      run_core<T>(report, seed);
    else if (name == "projectors")
      run_projectors<T>(report, seed);
    else if (name == "splits")
      run_splits<T>(report, seed);
    else if (name == "planewave")
      run_planewave<T>(report, seed);
    else if (name == "oracle")
      run_oracle<T>(report, seed);
    else
      throw std::invalid_argument("unknown suite: " + name);
  };
  if (suite == "all") {
    for (const auto& name : suite_names()) run_one(name);
  } else {
    run_one(suite);
  }
  return report;
}

}  // namespace sta::verify
