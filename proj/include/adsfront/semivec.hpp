#pragma once

// Exact semi-Euclidean linear algebra for R^4_2: the metric
// <x,y> = -x_{-1} y_{-1} - x_0 y_0 + x_1 y_1 + x_2 y_2.
// Components are stored in the order (x_{-1}, x_0, x_1, x_2).

#include <array>
#include <cmath>
#include <cstddef>

#include "adsfront/errors.hpp"

namespace adsfront {

struct SemiVector {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  SemiVector operator+(const SemiVector& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
  }
  SemiVector operator-(const SemiVector& o) const {
    return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
  }
  SemiVector operator*(double k) const {
    return {{c[0] * k, c[1] * k, c[2] * k, c[3] * k}};
  }
  SemiVector operator/(double k) const {
    return {{c[0] / k, c[1] / k, c[2] / k, c[3] / k}};
  }
  SemiVector operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }

  bool finite() const {
    return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]) &&
           std::isfinite(c[3]);
  }
};

inline SemiVector operator*(double k, const SemiVector& v) { return v * k; }

enum class CausalType { Spacelike, Null, Timelike };

struct Hyperplane {
  SemiVector normal;  // nonzero
  double offset = 0.0;
};

// Pseudo scalar product of index 2.
inline double inner(const SemiVector& x, const SemiVector& y) {
  return -x[0] * y[0] - x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

// Euclidean norm on the raw components. Used for scale estimates and for
// degeneracy thresholds, never as the geometry's metric.
inline double euclidean_norm(const SemiVector& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
}

// sqrt(|<x,x>|).
inline double pseudo_norm(const SemiVector& x) {
  return std::sqrt(std::fabs(inner(x, x)));
}

inline CausalType causal_type(const SemiVector& x, double null_tol = 1e-10) {
  if (euclidean_norm(x) < 1e-300)
    throw ZeroVectorError("causal_type: zero vector has no causal type");
  const double q = inner(x, x);
  if (q < -null_tol) return CausalType::Timelike;
  if (q > null_tol) return CausalType::Spacelike;
  return CausalType::Null;
}

// Wedge product of three vectors: the formal determinant expansion over the
// first row (-e_{-1}, -e_0, e_1, e_2). Satisfies
// <x, wedge(x1,x2,x3)> = det(x, x1, x2, x3) for every x, hence the result is
// pseudo-orthogonal to each factor. Degenerate inputs give the zero vector.
inline SemiVector wedge(const SemiVector& x1, const SemiVector& x2,
                        const SemiVector& x3) {
  auto det3 = [](double a0, double a1, double a2, double b0, double b1,
                 double b2, double c0, double c1, double c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
           a2 * (b0 * c1 - b1 * c0);
  };
  const double m0 = det3(x1[1], x1[2], x1[3], x2[1], x2[2], x2[3], x3[1],
                         x3[2], x3[3]);
  const double m1 = det3(x1[0], x1[2], x1[3], x2[0], x2[2], x2[3], x3[0],
                         x3[2], x3[3]);
  const double m2 = det3(x1[0], x1[1], x1[3], x2[0], x2[1], x2[3], x3[0],
                         x3[1], x3[3]);
  const double m3 = det3(x1[0], x1[1], x1[2], x2[0], x2[1], x2[2], x3[0],
                         x3[1], x3[2]);
  return {{-m0, m1, m2, -m3}};
}

// Membership tests. All take explicit tolerances so callers can scale them.
inline bool on_ads(const SemiVector& x, double tol) {
  return std::fabs(inner(x, x) + 1.0) <= tol;
}

inline bool on_nullcone(const SemiVector& x, const SemiVector& vertex,
                        double tol) {
  const SemiVector d = x - vertex;
  return std::fabs(inner(d, d)) <= tol;
}

inline bool hyperplane_contains(const Hyperplane& h, const SemiVector& x,
                                double tol) {
  return std::fabs(inner(x, h.normal) - h.offset) <= tol;
}

// det(rows Gamma, b, e_1, e_2): reduces to the 2x2 minor in the two timelike
// coordinates. Positive value = the frame is adapted.
inline double adaptedness_det(const SemiVector& gamma, const SemiVector& b) {
  return gamma[0] * b[1] - gamma[1] * b[0];
}

}  // namespace adsfront
