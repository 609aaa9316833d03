#pragma once

#include "sta/field.hpp"
#include "sta/matrix.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace sta::io {

using nlohmann::json;

/// Malformed or mode-inconsistent document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Real T> json real_to_json(const T& x) {
  if constexpr (scalar_traits<T>::exact) {
    return format_rational(x);
  } else {
    return x;
  }
}

template <Real T> T real_from_json(const json& j) {
  if constexpr (scalar_traits<T>::exact) {
    if (!j.is_string()) throw FormatError("exact-mode numbers must be \"p/q\" strings");
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  } else {
    if (!j.is_number()) throw FormatError("float-mode numbers must be JSON numbers");
    return j.get<double>();
  }
}

template <Real T> json complex_to_json(const Complex<T>& z) {
  return json::array({real_to_json(z.re), real_to_json(z.im)});
}

template <Real T> Complex<T> complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("complex number must be [re, im]");
  return {real_from_json<T>(j[0]), real_from_json<T>(j[1])};
}

/// Mode declared by a document; defaults to exact when absent.
inline Mode document_mode(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (!j.contains("mode")) return Mode::exact;
  if (!j["mode"].is_string()) throw FormatError("mode must be a string");
  try {
    return parse_mode(j["mode"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

/// A document without "mode" inherits the caller's mode.
template <Real T> void require_mode(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (j.contains("mode") && document_mode(j) != scalar_traits<T>::mode)
    throw FormatError("document mode does not match the requested scalar mode");
}

/// {"mode": ..., "coeffs": {"s": [re, im], "e0": ..., "e0123": ...}}; zero
/// coefficients are omitted.
template <Real T> json to_json(const Multivector<T>& m) {
  json coeffs = json::object();
  for (unsigned i = 0; i < 16; ++i) {
    if (m.coeff(i) == Complex<T>()) continue;
    coeffs[BladeIndex{i}.key()] = complex_to_json(m.coeff(i));
  }
  return {{"mode", mode_name(scalar_traits<T>::mode)}, {"coeffs", coeffs}};
}

template <Real T> Multivector<T> multivector_from_json(const json& j) {
  require_mode<T>(j);
  if (!j.contains("coeffs") || !j["coeffs"].is_object())
    throw FormatError("multivector needs a \"coeffs\" object");
  Multivector<T> m;
  for (const auto& [key, value] : j["coeffs"].items()) {
    BladeIndex b;
    try {
      b = BladeIndex::from_key(key);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    m[b] = complex_from_json<T>(value);
  }
  return m;
}

/// Row-major {"mode": ..., "rows": [[[re, im] x4] x4]}.
template <Real T> json to_json(const Matrix4C<T>& mat) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(mat(r, c)));
    rows.push_back(row);
  }
  return {{"mode", mode_name(scalar_traits<T>::mode)}, {"rows", rows}};
}

template <Real T> Matrix4C<T> matrix_from_json(const json& j) {
  require_mode<T>(j);
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 4)
    throw FormatError("matrix needs four rows");
  Matrix4C<T> mat;
  for (int r = 0; r < 4; ++r) {
    const auto& row = j["rows"][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) throw FormatError("matrix row needs four entries");
    for (int c = 0; c < 4; ++c) mat(r, c) = complex_from_json<T>(row[static_cast<std::size_t>(c)]);
  }
  return mat;
}

template <Real T> json to_json(const FourMomentum<T>& p) {
  json out = json::array();
  for (const auto& x : p.components()) out.push_back(real_to_json(x));
  return out;
}

template <Real T> FourMomentum<T> momentum_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("momentum must be [omega, k1, k2, k3]");
  return {real_from_json<T>(j[0]),
          {real_from_json<T>(j[1]), real_from_json<T>(j[2]), real_from_json<T>(j[3])}};
}

/// {"mode": ..., "terms": [{"momentum": [...], "amplitude": <multivector>}]}
template <Real T> json to_json(const Field<T>& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"momentum", to_json(t.momentum)}, {"amplitude", to_json(t.amplitude)}});
  return {{"mode", mode_name(scalar_traits<T>::mode)}, {"terms", terms}};
}

template <Real T> Field<T> field_from_json(const json& j) {
  require_mode<T>(j);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw FormatError("field needs a \"terms\" array");
  std::vector<PlaneWaveTerm<T>> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("momentum") || !t.contains("amplitude"))
      throw FormatError("field term needs momentum and amplitude");
    terms.push_back({multivector_from_json<T>(t["amplitude"]), momentum_from_json<T>(t["momentum"])});
  }
  return Field<T>(std::move(terms));
}

}  // namespace sta::io
