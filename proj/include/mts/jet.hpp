// Copyright 2026 The mts Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Second-order forward-mode jets in the two real parameters (u, v).
//
// A jet carries a value and its partial derivatives through order two.
// Formulas written generically over jets give exact first and second
// derivatives, which the fixtures and the product-rule paths rely on.
// Second-derivative slots set to NaN mean "not known".

#ifndef MTS_JET_HPP_
#define MTS_JET_HPP_

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>

namespace mts {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class S>
struct Jet {
  using Scalar = S;

  S v{};
  S du{};
  S dv{};
  S duu{};
  S duv{};
  S dvv{};

  constexpr Jet() = default;
  constexpr Jet(S value, S d_u, S d_v, S d_uu, S d_uv, S d_vv)
      : v(value), du(d_u), dv(d_v), duu(d_uu), duv(d_uv), dvv(d_vv) {}

  // Constants; also promotes real scalars into complex jets.
  template <class T>
    requires std::is_convertible_v<T, S>
  constexpr Jet(T c) : v(static_cast<S>(c)) {}  // NOLINT

  template <class T>
    requires(!std::is_same_v<T, S> && std::is_convertible_v<T, S>)
  constexpr Jet(const Jet<T>& o)  // NOLINT
      : v(o.v), du(o.du), dv(o.dv), duu(o.duu), duv(o.duv), dvv(o.dvv) {}

  static constexpr Jet variable_u(double u) { return Jet(S(u), S(1), S(0), S(0), S(0), S(0)); }
  static constexpr Jet variable_v(double v) { return Jet(S(v), S(0), S(1), S(0), S(0), S(0)); }

  /// f(x) with f' = d1 and f'' = d2 evaluated at x.v.
  Jet chain(S f0, S d1, S d2) const {
    return Jet(f0, d1 * du, d1 * dv, d2 * du * du + d1 * duu,
               d2 * du * dv + d1 * duv, d2 * dv * dv + d1 * dvv);
  }

  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }
  Jet& operator/=(const Jet& b) { return *this = *this / b; }

  friend Jet operator+(const Jet& a) { return a; }
  friend Jet operator-(const Jet& a) {
    return Jet(-a.v, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv);
  }
  friend Jet operator+(const Jet& a, const Jet& b) {
    return Jet(a.v + b.v, a.du + b.du, a.dv + b.dv, a.duu + b.duu,
               a.duv + b.duv, a.dvv + b.dvv);
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    return Jet(a.v - b.v, a.du - b.du, a.dv - b.dv, a.duu - b.duu,
               a.duv - b.duv, a.dvv - b.dvv);
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return Jet(a.v * b.v, a.du * b.v + a.v * b.du, a.dv * b.v + a.v * b.dv,
               a.duu * b.v + S(2) * a.du * b.du + a.v * b.duu,
               a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv,
               a.dvv * b.v + S(2) * a.dv * b.dv + a.v * b.dvv);
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  // Scaling by a constant touches each slot once, so an unknown (NaN) value
  // does not leak into the derivatives through 0 * NaN.
  template <class T>
    requires std::is_convertible_v<T, S>
  friend Jet operator*(const T& c, const Jet& a) {
    const S s = static_cast<S>(c);
    return Jet(s * a.v, s * a.du, s * a.dv, s * a.duu, s * a.duv, s * a.dvv);
  }
  template <class T>
    requires std::is_convertible_v<T, S>
  friend Jet operator*(const Jet& a, const T& c) {
    return c * a;
  }
  template <class T>
    requires std::is_convertible_v<T, S>
  friend Jet operator/(const Jet& a, const T& c) {
    return (S(1) / static_cast<S>(c)) * a;
  }

  friend Jet reciprocal(const Jet& a) {
    const S r = S(1) / a.v;
    return a.chain(r, -r * r, S(2) * r * r * r);
  }
  friend Jet exp(const Jet& a) {
    using std::exp;
    const S e = exp(a.v);
    return a.chain(e, e, e);
  }
  friend Jet sin(const Jet& a) {
    using std::cos;
    using std::sin;
    const S s = sin(a.v);
    return a.chain(s, cos(a.v), -s);
  }
  friend Jet cos(const Jet& a) {
    using std::cos;
    using std::sin;
    const S c = cos(a.v);
    return a.chain(c, -sin(a.v), -c);
  }
  friend Jet sinh(const Jet& a) {
    using std::cosh;
    using std::sinh;
    const S s = sinh(a.v);
    return a.chain(s, cosh(a.v), s);
  }
  friend Jet cosh(const Jet& a) {
    using std::cosh;
    using std::sinh;
    const S c = cosh(a.v);
    return a.chain(c, sinh(a.v), c);
  }
  friend Jet sqrt(const Jet& a) {
    using std::sqrt;
    const S s = sqrt(a.v);
    return a.chain(s, S(0.5) / s, S(-0.25) / (s * a.v));
  }
};

using RealJet = Jet<double>;
using ComplexJet = Jet<std::complex<double>>;

template <class S>
Jet<std::complex<double>> to_complex(const Jet<S>& a) {
  return Jet<std::complex<double>>(a);
}

template <class S>
Jet<double> real(const Jet<S>& a) {
  using std::real;
  return Jet<double>(real(a.v), real(a.du), real(a.dv), real(a.duu),
                     real(a.duv), real(a.dvv));
}

template <class S>
Jet<double> imag(const Jet<S>& a) {
  using std::imag;
  return Jet<double>(imag(a.v), imag(a.du), imag(a.dv), imag(a.duu),
                     imag(a.duv), imag(a.dvv));
}

template <class S>
Jet<S> conj(const Jet<S>& a) {
  if constexpr (is_complex<S>::value) {
    using std::conj;
    return Jet<S>(conj(a.v), conj(a.du), conj(a.dv), conj(a.duu),
                  conj(a.duv), conj(a.dvv));
  } else {
    return a;
  }
}

/// |a|^2 as a real jet.
template <class S>
Jet<double> abs2(const Jet<S>& a) {
  if constexpr (is_complex<S>::value) {
    const Jet<double> re = real(a);
    const Jet<double> im = imag(a);
    return re * re + im * im;
  } else {
    return a * a;
  }
}

/// Wirtinger derivative f_z = (f_u - i f_v)/2. The result knows its first
/// derivatives only.
template <class S>
ComplexJet dz(const Jet<S>& a) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C nan(std::numeric_limits<double>::quiet_NaN(), 0.0);
  return ComplexJet(0.5 * (C(a.du) - i * C(a.dv)),
                    0.5 * (C(a.duu) - i * C(a.duv)),
                    0.5 * (C(a.duv) - i * C(a.dvv)), nan, nan, nan);
}

/// f_zbar = (f_u + i f_v)/2, same knowledge caveat as dz.
template <class S>
ComplexJet dzbar(const Jet<S>& a) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C nan(std::numeric_limits<double>::quiet_NaN(), 0.0);
  return ComplexJet(0.5 * (C(a.du) + i * C(a.dv)),
                    0.5 * (C(a.duu) + i * C(a.duv)),
                    0.5 * (C(a.duv) + i * C(a.dvv)), nan, nan, nan);
}

/// f_{z zbar} = (f_uu + f_vv)/4, a value-only jet.
template <class S>
Jet<S> dzdzbar(const Jet<S>& a) {
  const S nan = S(std::numeric_limits<double>::quiet_NaN());
  return Jet<S>(S(0.25) * (a.duu + a.dvv), nan, nan, nan, nan, nan);
}

}  // namespace mts

#endif  // MTS_JET_HPP_
