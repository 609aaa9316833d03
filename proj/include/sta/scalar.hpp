#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace sta {

/// Arbitrary-precision rational; the exact-mode scalar. Expression templates
/// are off so that `auto` and overload resolution see plain values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

enum class Mode { exact, floating };

inline std::string_view mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "float";
}

inline Mode parse_mode(std::string_view s) {
  if (s == "exact") return Mode::exact;
  if (s == "float") return Mode::floating;
  throw std::invalid_argument("unknown scalar mode: " + std::string(s));
}

/// Tolerances used when the scalar type is binary64.
inline constexpr double kFloatZeroTol = 1e-12;
inline constexpr double kFloatPivotTol = 1e-9;

template <class T> struct scalar_traits;

template <> struct scalar_traits<Rational> {
  static constexpr Mode mode = Mode::exact;
  static constexpr bool exact = true;
};

template <> struct scalar_traits<double> {
  static constexpr Mode mode = Mode::floating;
  static constexpr bool exact = false;
};

/// The two scalar modes. Anything else (including a mixture) is rejected at
/// compile time, so mode mixing can never coerce silently.
template <class T>
concept Real = std::same_as<T, Rational> || std::same_as<T, double>;

template <Real T> inline double to_double(const T& x) {
  if constexpr (std::same_as<T, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

template <Real T> inline T abs_real(const T& x) { return x < 0 ? T(-x) : x; }

/// Complex number over an exact or binary64 real field.
template <Real T> struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT: implicit real -> complex
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  template <std::integral I>
  Complex(I r) : re(static_cast<long long>(r)) {}  // NOLINT

  static Complex i() { return {T(0), T(1)}; }

  Complex conj() const { return {re, T(-im)}; }
  T norm2() const { return re * re + im * im; }
  bool is_real() const { return im == 0; }

  Complex operator-() const { return {T(-re), T(-im)}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T d = o.norm2();
    if (d == 0) throw std::domain_error("complex division by zero");
    T r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <Real T> inline double magnitude(const Complex<T>& z) {
  return std::hypot(to_double(z.re), to_double(z.im));
}

/// Exact zero in exact mode; |z| <= tol * scale in float mode.
template <Real T>
inline bool is_negligible(const Complex<T>& z, double scale = 0.0,
                          double tol = kFloatZeroTol) {
  if constexpr (scalar_traits<T>::exact) {
    return z.re == 0 && z.im == 0;
  } else {
    return magnitude(z) <= tol * (1.0 + scale);
  }
}

template <Real T>
inline bool is_negligible_real(const T& x, double scale = 0.0,
                               double tol = kFloatZeroTol) {
  if constexpr (scalar_traits<T>::exact) {
    return x == 0;
  } else {
    return std::abs(x) <= tol * (1.0 + scale);
  }
}

/// "p/q" (denominator always written).
inline std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Accepts "p/q" or an integer "p".
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
      digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    if (s.front() == '+') s.remove_prefix(1);
    return boost::multiprecision::cpp_int(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Exact square root of a non-negative rational if one exists.
inline bool exact_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  auto rn = boost::multiprecision::sqrt(num);
  auto rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  out = Rational(rn, rd);
  return true;
}

}  // namespace sta
