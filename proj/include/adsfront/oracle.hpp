#pragma once

// Independent brute-force verification primitives. Nothing here shares a
// code path with the pipeline it checks: derivatives come from central
// finite differences, critical points from dense scans, intersections from
// exhaustive all-pairs search.

#include <functional>
#include <vector>

#include "adsfront/semivec.hpp"

namespace adsfront::oracle {

struct FDScheme {
  int order = 4;       // 2 or 4
  double step = 1e-3;  // in [1e-6, 1e-2]
};

// Central finite difference of the k-th derivative (k = 1..4).
double fd_derivative(const std::function<double(double)>& f, double x, int k,
                     const FDScheme& scheme);

// Componentwise finite difference of a curve.
SemiVector fd_derivative(const std::function<SemiVector(double)>& f, double x,
                         int k, const FDScheme& scheme);

// Dense scan for critical points of a smooth function on [lo, hi]:
// brackets sign changes of a central-difference slope estimate and refines
// each bracket by bisection to |hi - lo| <= 1e-10.
std::vector<double> critical_scan(const std::function<double(double)>& f,
                                  double lo, double hi, int n);

// Dense scan for roots of g on [lo, hi] (sign-change bisection).
std::vector<double> root_scan(const std::function<double(double)>& g,
                              double lo, double hi, int n);

// Exhaustive O(N^2) proximity search between two point clouds. Pairs are
// reported when the Euclidean component distance is <= eps and the caller's
// distinctness predicate accepts the index pair.
struct IndexPair {
  std::size_t i, j;
  double distance;
};

std::vector<IndexPair> allpairs_intersections(
    const std::vector<SemiVector>& cloud_a,
    const std::vector<SemiVector>& cloud_b, double eps,
    const std::function<bool(std::size_t, std::size_t)>& distinct);

}  // namespace adsfront::oracle
