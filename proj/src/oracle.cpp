#include "adsfront/oracle.hpp"

#include <cmath>

#include "adsfront/errors.hpp"

namespace adsfront::oracle {

namespace {

struct Stencil {
  int radius;
  const double* weights;  // 2*radius + 1 entries, divided by h^k
};

// Central-difference weight tables.
const double W2_1[] = {-0.5, 0.0, 0.5};
const double W2_2[] = {1.0, -2.0, 1.0};
const double W2_3[] = {-0.5, 1.0, 0.0, -1.0, 0.5};
const double W2_4[] = {1.0, -4.0, 6.0, -4.0, 1.0};
const double W4_1[] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
const double W4_2[] = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
const double W4_3[] = {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8};
const double W4_4[] = {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0,
                       -1.0 / 6};

Stencil pick_stencil(int order, int k) {
  if (order == 2) {
    switch (k) {
      case 1: return {1, W2_1};
      case 2: return {1, W2_2};
      case 3: return {2, W2_3};
      case 4: return {2, W2_4};
    }
  } else if (order == 4) {
    switch (k) {
      case 1: return {2, W4_1};
      case 2: return {2, W4_2};
      case 3: return {3, W4_3};
      case 4: return {3, W4_4};
    }
  }
  throw Error("fd_derivative: unsupported order/k combination");
}

}  // namespace

double fd_derivative(const std::function<double(double)>& f, double x, int k,
                     const FDScheme& scheme) {
  const Stencil st = pick_stencil(scheme.order, k);
  const double h = scheme.step;
  double acc = 0.0;
  for (int i = -st.radius; i <= st.radius; ++i) {
    const double w = st.weights[i + st.radius];
    if (w != 0.0) acc += w * f(x + i * h);
  }
  return acc / std::pow(h, k);
}

SemiVector fd_derivative(const std::function<SemiVector(double)>& f, double x,
                         int k, const FDScheme& scheme) {
  const Stencil st = pick_stencil(scheme.order, k);
  const double h = scheme.step;
  SemiVector acc;
  for (int i = -st.radius; i <= st.radius; ++i) {
    const double w = st.weights[i + st.radius];
    if (w != 0.0) acc = acc + f(x + i * h) * w;
  }
  return acc / std::pow(h, k);
}

namespace {

double bisect(const std::function<double(double)>& g, double a, double b,
              double ga) {
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> root_scan(const std::function<double(double)>& g,
                              double lo, double hi, int n) {
  std::vector<double> roots;
  if (n < 2) return roots;
  double prev = g(lo);
  double prev_x = lo;
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double v = g(x);
    if (prev == 0.0) {
      roots.push_back(prev_x);
    } else if (v != 0.0 && (v < 0.0) != (prev < 0.0)) {
      roots.push_back(bisect(g, prev_x, x, prev));
    }
    prev = v;
    prev_x = x;
  }
  if (prev == 0.0) roots.push_back(prev_x);
  return roots;
}

std::vector<double> critical_scan(const std::function<double(double)>& f,
                                  double lo, double hi, int n) {
  const double h = (hi - lo) * 1e-7;
  auto slope = [&](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };
  return root_scan(slope, lo, hi, n);
}

std::vector<IndexPair> allpairs_intersections(
    const std::vector<SemiVector>& cloud_a,
    const std::vector<SemiVector>& cloud_b, double eps,
    const std::function<bool(std::size_t, std::size_t)>& distinct) {
  std::vector<IndexPair> pairs;
  const double eps2 = eps * eps;
  for (std::size_t i = 0; i < cloud_a.size(); ++i) {
    for (std::size_t j = 0; j < cloud_b.size(); ++j) {
      const double d0 = cloud_a[i][0] - cloud_b[j][0];
      const double d1 = cloud_a[i][1] - cloud_b[j][1];
      const double d2 = cloud_a[i][2] - cloud_b[j][2];
      const double d3 = cloud_a[i][3] - cloud_b[j][3];
      const double d = d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3;
      if (d <= eps2 && (!distinct || distinct(i, j)))
        pairs.push_back({i, j, std::sqrt(d)});
    }
  }
  return pairs;
}

}  // namespace adsfront::oracle
