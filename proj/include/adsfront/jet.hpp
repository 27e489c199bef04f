#pragma once

// Truncated Taylor series of order 4 in one variable ("jets"). Arithmetic on
// jets propagates exact derivatives of order <= 4 through the frame algebra,
// so curvature derivatives come out correct to roundoff instead of to a
// finite-difference truncation error.
//
// Coefficient convention: c[k] = f^(k)(x0) / k!.

#include <array>
#include <cmath>

#include "adsfront/errors.hpp"
#include "adsfront/semivec.hpp"

namespace adsfront {

struct Jet {
  static constexpr int Order = 4;
  std::array<double, Order + 1> c{0.0, 0.0, 0.0, 0.0, 0.0};

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  // The running variable itself: x0 + (x - x0).
  static Jet variable(double v) {
    Jet j;
    j.c[0] = v;
    j.c[1] = 1.0;
    return j;
  }

  double value() const { return c[0]; }
  // k-th derivative (not the raw Taylor coefficient).
  double deriv(int k) const {
    static constexpr double fact[5] = {1.0, 1.0, 2.0, 6.0, 24.0};
    return c[static_cast<std::size_t>(k)] * fact[k];
  }

  Jet operator+(const Jet& o) const {
    Jet r;
    for (int k = 0; k <= Order; ++k) r.c[k] = c[k] + o.c[k];
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r;
    for (int k = 0; k <= Order; ++k) r.c[k] = c[k] - o.c[k];
    return r;
  }
  Jet operator-() const {
    Jet r;
    for (int k = 0; k <= Order; ++k) r.c[k] = -c[k];
    return r;
  }
  Jet operator*(const Jet& o) const {
    Jet r;
    for (int k = 0; k <= Order; ++k) {
      double acc = 0.0;
      for (int i = 0; i <= k; ++i) acc += c[i] * o.c[k - i];
      r.c[k] = acc;
    }
    return r;
  }
  Jet operator*(double k) const {
    Jet r;
    for (int i = 0; i <= Order; ++i) r.c[i] = c[i] * k;
    return r;
  }
  Jet operator+(double v) const {
    Jet r = *this;
    r.c[0] += v;
    return r;
  }
  Jet operator-(double v) const {
    Jet r = *this;
    r.c[0] -= v;
    return r;
  }
};

inline Jet operator*(double k, const Jet& j) { return j * k; }

// Series reciprocal; requires a nonzero constant term.
inline Jet recip(const Jet& a) {
  Jet r;
  r.c[0] = 1.0 / a.c[0];
  for (int k = 1; k <= Jet::Order; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += a.c[i] * r.c[k - i];
    r.c[k] = -acc / a.c[0];
  }
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }
inline Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }

// Series square root; requires a positive constant term.
inline Jet jet_sqrt(const Jet& a) {
  Jet r;
  r.c[0] = std::sqrt(a.c[0]);
  for (int k = 1; k <= Jet::Order; ++k) {
    double acc = 0.0;
    for (int i = 1; i < k; ++i) acc += r.c[i] * r.c[k - i];
    r.c[k] = (a.c[k] - acc) / (2.0 * r.c[0]);
  }
  return r;
}

// d/dx on the series: coefficients shift down. The top coefficient of the
// result is unknown and set to zero; each application loses one valid order.
inline Jet jet_derivative(const Jet& a) {
  Jet r;
  for (int k = 0; k < Jet::Order; ++k) r.c[k] = a.c[k + 1] * (k + 1);
  r.c[Jet::Order] = 0.0;
  return r;
}

// Composition a(s(x)) where s has the given jet. s.c[0] is ignored: the
// series a is already centered at s(x0).
inline Jet jet_compose(const Jet& a, const Jet& s) {
  Jet d = s;
  d.c[0] = 0.0;
  Jet r = Jet::constant(a.c[Jet::Order]);
  for (int k = Jet::Order - 1; k >= 0; --k) r = r * d + a.c[k];
  return r;
}

// A 4-component vector of jets: a curve germ in R^4_2.
struct JetVec {
  std::array<Jet, 4> v;

  Jet& operator[](std::size_t i) { return v[i]; }
  const Jet& operator[](std::size_t i) const { return v[i]; }

  JetVec operator+(const JetVec& o) const {
    return {{v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2], v[3] + o.v[3]}};
  }
  JetVec operator-(const JetVec& o) const {
    return {{v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2], v[3] - o.v[3]}};
  }
  JetVec operator*(const Jet& k) const {
    return {{v[0] * k, v[1] * k, v[2] * k, v[3] * k}};
  }
  JetVec operator*(double k) const {
    return {{v[0] * k, v[1] * k, v[2] * k, v[3] * k}};
  }
  JetVec operator-() const { return {{-v[0], -v[1], -v[2], -v[3]}}; }

  SemiVector value() const {
    return {{v[0].c[0], v[1].c[0], v[2].c[0], v[3].c[0]}};
  }
  // k-th derivative vector.
  SemiVector deriv(int k) const {
    return {{v[0].deriv(k), v[1].deriv(k), v[2].deriv(k), v[3].deriv(k)}};
  }
};

inline Jet jet_inner(const JetVec& x, const JetVec& y) {
  return -(x[0] * y[0]) - x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

inline JetVec jet_derivative(const JetVec& x) {
  return {{jet_derivative(x[0]), jet_derivative(x[1]), jet_derivative(x[2]),
           jet_derivative(x[3])}};
}

// Wedge product with jet coefficients; same first-row convention as the
// scalar version in semivec.hpp.
inline JetVec jet_wedge(const JetVec& x1, const JetVec& x2, const JetVec& x3) {
  auto det3 = [](const Jet& a0, const Jet& a1, const Jet& a2, const Jet& b0,
                 const Jet& b1, const Jet& b2, const Jet& c0, const Jet& c1,
                 const Jet& c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
           a2 * (b0 * c1 - b1 * c0);
  };
  const Jet m0 = det3(x1[1], x1[2], x1[3], x2[1], x2[2], x2[3], x3[1], x3[2],
                      x3[3]);
  const Jet m1 = det3(x1[0], x1[2], x1[3], x2[0], x2[2], x2[3], x3[0], x3[2],
                      x3[3]);
  const Jet m2 = det3(x1[0], x1[1], x1[3], x2[0], x2[1], x2[3], x3[0], x3[1],
                      x3[3]);
  const Jet m3 = det3(x1[0], x1[1], x1[2], x2[0], x2[1], x2[2], x3[0], x3[1],
                      x3[2]);
  return {{-m0, m1, m2, -m3}};
}

}  // namespace adsfront
