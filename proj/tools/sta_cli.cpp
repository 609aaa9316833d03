// sta: command-line front end for the spacetime-algebra engine.
//
// Commands:
//   verify     run an invariant suite and print a JSON report
//   planewave  build a Joyce plane-wave solution and evaluate a residual
//   decompose  projector splits of a field read from a JSON file
//   quartet    Hestenes quartet of a Dirac solution read from a JSON file
//   oracle     compare algebraic results with the 4x4 matrix representation
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include "sta/sta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using sta::Complex;
using sta::Field;
using sta::Mode;
using sta::Rational;
using sta::Real;
using sta::Sign;
using sta::io::json;

constexpr std::uint64_t kDefaultSeed = 12345;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string mode = "exact";
  bool mode_given = false;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int emit(const Globals& g, const json& doc) {
  std::string text = doc.dump(2);
  if (g.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(g.out);
    if (!f) throw UsageError("cannot open output file " + g.out);
    f << text << '\n';
  }
  return 0;
}

json read_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

/// Document mode wins when present; a conflicting --mode is an error.
Mode resolve_mode(const Globals& g, const json& doc) {
  Mode flag = sta::parse_mode(g.mode);
  if (doc.is_object() && doc.contains("mode")) {
    Mode m = sta::io::document_mode(doc);
    if (g.mode_given && m != flag) throw UsageError("--mode conflicts with the document mode");
    return m;
  }
  return flag;
}

template <Real T> T parse_real(const std::string& text) {
  if constexpr (sta::scalar_traits<T>::exact) {
    return sta::parse_rational(text);
  } else {
    if (text.find('/') != std::string::npos) return sta::to_double(sta::parse_rational(text));
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("malformed number: " + text);
    return v;
  }
}

/// "re" or "re,im".
template <Real T> Complex<T> parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return Complex<T>(parse_real<T>(text));
  return {parse_real<T>(text.substr(0, comma)), parse_real<T>(text.substr(comma + 1))};
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "+1") return Sign::plus;
  if (s == "-" || s == "minus" || s == "-1") return Sign::minus;
  throw UsageError("omega sign must be + or -");
}

template <Real T> json residual_entry(const Field<T>& residual, double scale) {
  json e = {{"zero", residual.is_zero(scale)}};
  if constexpr (!sta::scalar_traits<T>::exact) e["norm"] = residual.norm();
  return e;
}

/// m from omega^2 - |k|^2 of the first term.
template <Real T> T infer_mass(const Field<T>& f) {
  if (f.empty()) return T(0);
  T sq = f.terms().front().momentum.invariant_mass_squared();
  if constexpr (sta::scalar_traits<T>::exact) {
    T root;
    if (!sta::exact_sqrt(sq, root))
      throw UsageError("cannot infer a rational mass from the momentum; pass --m");
    return root;
  } else {
    return std::sqrt(std::max(0.0, sq));
  }
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite) {
  Mode mode = sta::parse_mode(g.mode);
  auto report = mode == Mode::exact ? sta::verify::run_suite<Rational>(suite, g.seed)
                                    : sta::verify::run_suite<double>(suite, g.seed);
  emit(g, report.to_json());
  for (const auto& c : report.checks)
    if (!c.pass) std::cerr << "FAIL " << c.id << ": " << c.description << '\n';
  return report.exit_code();
}

// --- planewave --------------------------------------------------------------

struct PlaneWaveOptions {
  std::string m, k, omega_sign = "+", a = "1", b = "0", c = "0", d = "0";
  std::string check = "joyce";
  bool rest = false;
};

template <Real T> int run_planewave(const Globals& g, const PlaneWaveOptions& o) {
  T m = parse_real<T>(o.m);
  T k = parse_real<T>(o.k);
  Sign sign = parse_sign(o.omega_sign);
  sta::PlaneWaveParams<T> p{parse_complex<T>(o.a), parse_complex<T>(o.b),
                            parse_complex<T>(o.c), parse_complex<T>(o.d)};
  if (m < T(0)) throw UsageError("mass must be non-negative");

  json doc = {{"mode", sta::mode_name(sta::scalar_traits<T>::mode)}};
  Field<T> f;
  if (k == T(0)) {
    if (!o.rest) throw UsageError("k = 0 needs --rest");
    // k = 0: a + b g1g2 + c g2g3 + d g3g1 in the commuting sector for
    // omega = -m, times g0g1 for omega = +m.
    auto a_plus = sta::commuting_part(p);
    T omega = sign == Sign::plus ? m : T(-m);
    auto amp = sign == Sign::plus ? sta::gammas<T>({0, 1}) * a_plus : a_plus;
    f = Field<T>(amp, sta::FourMomentum<T>::along_x(omega, T(0)));
    doc["degenerate"] = m == T(0);
  } else {
    try {
      f = sta::joyce_planewave(p, sign, k, m);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }

  Field<T> residual;
  if (o.check == "dirac")
    residual = sta::dirac_residual(f, m);
  else if (o.check == "joyce")
    residual = sta::joyce_residual(f, m);
  else if (o.check == "hestenes+")
    residual = sta::hestenes_residual(f, m);
  else if (o.check == "hestenes-")
    residual = sta::hestenes_residual(f, T(-m));
  else
    throw UsageError("unknown --check " + o.check);

  doc["field"] = sta::io::to_json(f);
  doc["check"] = o.check;
  doc["residual"] = sta::io::to_json(residual);
  doc["residual_zero"] = residual.is_zero(f.max_magnitude());
  if constexpr (!sta::scalar_traits<T>::exact) doc["residual_norm"] = residual.norm();
  return emit(g, doc);
}

// --- decompose --------------------------------------------------------------

template <Real T> int run_decompose(const Globals& g, const json& input,
                                    const std::optional<std::string>& mass) {
  auto f = sta::io::field_from_json<T>(input);
  json warnings = json::array();
  T m = mass ? parse_real<T>(*mass) : infer_mass(f);
  if (!mass && f.empty()) warnings.push_back("empty field: mass defaults to 0");
  T neg_m = T(-m);
  double scale = f.max_magnitude();

  auto table = [&](const Field<T>& part) {
    return json{{"dirac+m", residual_entry(sta::dirac_residual(part, m), scale)},
                {"dirac-m", residual_entry(sta::dirac_residual(part, neg_m), scale)},
                {"hestenes+m", residual_entry(sta::hestenes_residual(part, m), scale)},
                {"hestenes-m", residual_entry(sta::hestenes_residual(part, neg_m), scale)}};
  };

  json doc = {{"mode", sta::mode_name(sta::scalar_traits<T>::mode)},
              {"mass", sta::io::real_to_json(m)}};
  json residuals = json::object();
  auto [p0p, p0m] = sta::split_right(f, sta::ProjectorFamily::gamma0);
  auto [p12p, p12m] = sta::split_right(f, sta::ProjectorFamily::i12);
  doc["p0_split"] = {{"plus", sta::io::to_json(p0p)}, {"minus", sta::io::to_json(p0m)}};
  doc["p12_split"] = {{"plus", sta::io::to_json(p12p)}, {"minus", sta::io::to_json(p12m)}};
  residuals["p0_plus"] = table(p0p);
  residuals["p0_minus"] = table(p0m);
  residuals["p12_plus"] = table(p12p);
  residuals["p12_minus"] = table(p12m);

  if (f.is_even()) {
    auto [fp, fm] = sta::real_even_pair(f);
    doc["real_even_pair"] = {{"plus", sta::io::to_json(fp)},
                             {"minus", sta::io::to_json(fm)},
                             {"real", sta::is_real_field(fp) && sta::is_real_field(fm)},
                             {"even", fp.is_even() && fm.is_even()}};
    residuals["pair_plus"] = table(fp);
    residuals["pair_minus"] = table(fm);
    auto back = sta::reconstruct_joyce(fp, fm);
    doc["reconstruction_ok"] = (back - f).is_zero(scale);
  } else {
    warnings.push_back("input is not even: real_even_pair skipped");
    doc["real_even_pair"] = nullptr;
    doc["reconstruction_ok"] = nullptr;
  }
  doc["residuals"] = residuals;
  doc["warnings"] = warnings;
  for (const auto& w : warnings) std::cerr << "warning: " << w.get<std::string>() << '\n';
  return emit(g, doc);
}

// --- quartet ----------------------------------------------------------------

template <Real T> int run_quartet(const Globals& g, const json& input, const std::string& mass) {
  auto f = sta::io::field_from_json<T>(input);
  T m = parse_real<T>(mass);
  if (f.is_zero()) {
    std::cerr << "quartet: zero field is not a usable seed\n";
    return 1;
  }
  if (!sta::dirac_residual(f, m).is_zero(f.max_magnitude())) {
    std::cerr << "quartet: input does not solve the Dirac equation at this mass\n";
    return 1;
  }
  auto q = sta::hestenes_quartet(f, m);
  json fields = json::array(), residuals = json::array();
  bool ok = true;
  for (const auto& h : q) {
    auto r = sta::hestenes_residual(h, m);
    ok = ok && r.is_zero(f.max_magnitude());
    fields.push_back(sta::io::to_json(h));
    residuals.push_back(residual_entry(r, f.max_magnitude()));
  }
  json doc = {{"mode", sta::mode_name(sta::scalar_traits<T>::mode)},
              {"mass", sta::io::real_to_json(m)},
              {"fields", fields},
              {"residuals", residuals},
              {"real_rank", sta::rank(std::vector<Field<T>>(q.begin(), q.end()),
                                      sta::ScalarField::real)},
              {"metadata", {{"rank_scalars", "real"}}}};
  emit(g, doc);
  if (!ok) std::cerr << "quartet: a member has nonzero Hestenes residual\n";
  return ok ? 0 : 1;
}

// --- oracle -----------------------------------------------------------------

template <Real T> struct Discrepancy {
  T worst{0};  // exact: max |re|,|im| over entries; float: relative
  double worst_float = 0.0;

  void add(const sta::Matrix4C<T>& a, const sta::Matrix4C<T>& b) {
    if constexpr (sta::scalar_traits<T>::exact) {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          auto d = a(r, c) - b(r, c);
          worst = std::max({worst, sta::abs_real(d.re), sta::abs_real(d.im)});
        }
    } else {
      double scale = 1.0 + std::max(a.max_magnitude(), b.max_magnitude());
      worst_float = std::max(worst_float, sta::max_discrepancy(a, b) / scale);
    }
  }
  bool ok() const {
    if constexpr (sta::scalar_traits<T>::exact) {
      return worst == T(0);
    } else {
      return worst_float <= sta::kFloatZeroTol;
    }
  }
  json value() const {
    if constexpr (sta::scalar_traits<T>::exact) {
      return sta::format_rational(worst);
    } else {
      return worst_float;
    }
  }
};

template <Real T>
void oracle_multivector(const sta::Multivector<T>& a, Discrepancy<T>& d, bool& round_trip) {
  auto ma = sta::represent(a);
  auto back = sta::unrepresent(ma);
  round_trip = round_trip && (back - a).is_zero(a.max_magnitude());
  d.add(sta::represent(back), ma);
  d.add(sta::represent(a * a), ma * ma);
  for (unsigned i = 0; i < 16; ++i) {
    auto b = sta::Multivector<T>::blade(sta::BladeIndex{i});
    d.add(sta::represent(a * b), ma * sta::represent(b));
    d.add(sta::represent(b * a), sta::represent(b) * ma);
  }
  d.add(sta::represent(sta::hermitian_adjoint(a)), ma.conjugate_transpose());
}

template <Real T> int run_oracle(const Globals& g, const json& input,
                                 const std::optional<std::string>& mass) {
  Discrepancy<T> d;
  bool round_trip = true;
  bool blades_ok = true;
  for (unsigned i = 0; i < 16; ++i) {
    auto b = sta::Multivector<T>::blade(sta::BladeIndex{i});
    blades_ok = blades_ok && sta::unrepresent(sta::represent(b)) == b;
  }
  json doc = {{"mode", sta::mode_name(sta::scalar_traits<T>::mode)}};
  if (input.contains("coeffs")) {
    doc["kind"] = "multivector";
    oracle_multivector(sta::io::multivector_from_json<T>(input), d, round_trip);
  } else if (input.contains("terms")) {
    doc["kind"] = "field";
    auto f = sta::io::field_from_json<T>(input);
    T m = mass ? parse_real<T>(*mass) : infer_mass(f);
    doc["mass"] = sta::io::real_to_json(m);
    auto g0 = sta::gamma_matrix<T>(0);
    auto g12 = sta::gamma_matrix<T>(1) * sta::gamma_matrix<T>(2);
    auto i = Complex<T>::i();
    auto dr = sta::dirac_residual(f, m), jr = sta::joyce_residual(f, m),
         hr = sta::hestenes_residual(f, m);
    for (const auto& t : f.terms()) {
      oracle_multivector(t.amplitude, d, round_trip);
      auto a = sta::represent(t.amplitude);
      auto grad = i * sta::represent(sta::slash(t.momentum)) * a;
      d.add(sta::represent(dr.amplitude_at(t.momentum)), i * grad - Complex<T>(m) * a);
      d.add(sta::represent(jr.amplitude_at(t.momentum)), i * grad - Complex<T>(m) * (a * g0));
      d.add(sta::represent(hr.amplitude_at(t.momentum)),
            Complex<T>(-1) * (grad * g12) - Complex<T>(m) * (a * g0));
    }
  } else {
    throw UsageError("oracle input must be a multivector or field document");
  }
  bool pass = d.ok() && round_trip && blades_ok;
  doc["blade_round_trip"] = blades_ok;
  doc["round_trip"] = round_trip;
  doc["max_discrepancy"] = d.value();
  doc["status"] = pass ? "pass" : "fail";
  emit(g, doc);
  return pass ? 0 : 1;
}

template <class F> int dispatch(Mode mode, F&& f) {
  return mode == Mode::exact ? f(Rational{}) : f(0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spacetime-algebra engine: Dirac, Joyce and Hestenes equations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--mode", g.mode, "Scalar mode: exact or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->each([&](const std::string&) { g.mode_given = true; });
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--out", g.out, "Write JSON here instead of standard output");
  app.fallthrough();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", suite, "core|projectors|splits|planewave|oracle|all")
      ->check(CLI::IsMember({"core", "projectors", "splits", "planewave", "oracle", "all"}));

  PlaneWaveOptions pw;
  auto* planewave = app.add_subcommand("planewave", "Build a Joyce plane wave and check a residual");
  planewave->add_option("--m", pw.m, "Mass m >= 0")->required();
  planewave->add_option("--k", pw.k, "Momentum k along x1")->required();
  planewave->add_option("--omega-sign", pw.omega_sign, "+ or -");
  planewave->add_option("--a", pw.a, "Parameter a (re or re,im)");
  planewave->add_option("--b", pw.b, "Parameter b");
  planewave->add_option("--c", pw.c, "Parameter c");
  planewave->add_option("--d", pw.d, "Parameter d");
  planewave->add_option("--check", pw.check, "dirac|joyce|hestenes+|hestenes-")
      ->check(CLI::IsMember({"dirac", "joyce", "hestenes+", "hestenes-"}));
  planewave->add_flag("--rest", pw.rest, "Allow k = 0 (rest-frame solutions)");

  std::string input;
  std::optional<std::string> mass;
  auto* decompose = app.add_subcommand("decompose", "Projector splits of a field");
  decompose->add_option("input", input, "Field JSON file")->required();
  decompose->add_option("--m", mass, "Mass (inferred from the momentum when omitted)");

  std::string quartet_mass;
  auto* quartet = app.add_subcommand("quartet", "Hestenes quartet of a Dirac solution");
  quartet->add_option("input", input, "Field JSON file")->required();
  quartet->add_option("--m", quartet_mass, "Mass")->required();

  auto* oracle = app.add_subcommand("oracle", "Compare against the matrix representation");
  oracle->add_option("input", input, "Multivector or field JSON file")->required();
  oracle->add_option("--m", mass, "Mass for residual comparisons");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(g, suite);
    if (*planewave)
      return dispatch(sta::parse_mode(g.mode), [&](auto tag) {
        return run_planewave<decltype(tag)>(g, pw);
      });
    auto doc = read_document(input);
    Mode mode = resolve_mode(g, doc);
    if (*decompose)
      return dispatch(mode, [&](auto tag) { return run_decompose<decltype(tag)>(g, doc, mass); });
    if (*quartet)
      return dispatch(mode, [&](auto tag) { return run_quartet<decltype(tag)>(g, doc, quartet_mass); });
    if (*oracle)
      return dispatch(mode, [&](auto tag) { return run_oracle<decltype(tag)>(g, doc, mass); });
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sta::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
