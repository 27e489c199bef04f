#include <cmath>

#include "adsfront/semivec.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adsfront;
using testsupport::Rng;

namespace {
const SemiVector e_m1{{1, 0, 0, 0}};
const SemiVector e_0{{0, 1, 0, 0}};
const SemiVector e_1{{0, 0, 1, 0}};
const SemiVector e_2{{0, 0, 0, 1}};
}  // namespace

TEST_CASE("inner product on basis vectors and simple combinations") {
  CHECK(inner(e_m1, e_m1) == -1.0);
  CHECK(inner(e_0, e_0) == -1.0);
  CHECK(inner(e_1, e_1) == 1.0);
  CHECK(inner(e_2, e_2) == 1.0);
  CHECK(inner(SemiVector{{1, 0, 2, 0}}, SemiVector{{3, 0, 1, 0}}) == -1.0);
  CHECK(inner(SemiVector{{1, 0, 1, 0}}, SemiVector{{1, 0, 1, 0}}) == 0.0);
}

TEST_CASE("inner is symmetric and bilinear on random triples") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    const SemiVector x = rng.vec(-2, 2), y = rng.vec(-2, 2), z = rng.vec(-2, 2);
    const double a = rng.uniform(-3, 3);
    CHECK(inner(x, y) == doctest::Approx(inner(y, x)).epsilon(1e-14));
    CHECK(inner(x * a + y, z) ==
          doctest::Approx(a * inner(x, z) + inner(y, z)).epsilon(1e-12));
  }
}

TEST_CASE("causal classification") {
  CHECK(causal_type(e_1) == CausalType::Spacelike);
  CHECK(causal_type(e_m1) == CausalType::Timelike);
  CHECK(causal_type(SemiVector{{1, 0, 1, 0}}) == CausalType::Null);
  CHECK_THROWS_AS(causal_type(SemiVector{}), ZeroVectorError);
}

TEST_CASE("wedge on basis vectors") {
  const SemiVector w1 = wedge(e_0, e_1, e_2);
  CHECK(w1[0] == -1.0);
  CHECK(w1[1] == 0.0);
  CHECK(w1[2] == 0.0);
  CHECK(w1[3] == 0.0);
  const SemiVector w2 = wedge(e_m1, e_1, e_2);
  CHECK(w2[0] == 0.0);
  CHECK(w2[1] == 1.0);
  CHECK(w2[2] == 0.0);
  CHECK(w2[3] == 0.0);
}

TEST_CASE("wedge determinant identity against the cofactor oracle") {
  Rng rng(11);
  for (int it = 0; it < 1000; ++it) {
    const SemiVector x = rng.vec(-2, 2), x1 = rng.vec(-2, 2),
                     x2 = rng.vec(-2, 2), x3 = rng.vec(-2, 2);
    const SemiVector w = wedge(x1, x2, x3);
    const double lhs = inner(x, w);
    const double rhs = testsupport::det4(x, x1, x2, x3);
    const double scale = 1.0 + std::fabs(rhs);
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * scale);
  }
}

TEST_CASE("wedge antisymmetry and pseudo-orthogonality to factors") {
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    const SemiVector x1 = rng.vec(-2, 2), x2 = rng.vec(-2, 2),
                     x3 = rng.vec(-2, 2);
    const SemiVector w = wedge(x1, x2, x3);
    const SemiVector wswap = wedge(x2, x1, x3);
    for (int i = 0; i < 4; ++i)
      CHECK(w[i] == doctest::Approx(-wswap[i]).epsilon(1e-13));
    const double scale = 1.0 + euclidean_norm(w);
    CHECK(std::fabs(inner(x1, w)) <= 1e-9 * scale);
    CHECK(std::fabs(inner(x2, w)) <= 1e-9 * scale);
    CHECK(std::fabs(inner(x3, w)) <= 1e-9 * scale);
  }
}

TEST_CASE("degenerate wedge inputs give the zero vector") {
  Rng rng(17);
  const SemiVector x = rng.vec(-1, 1), y = rng.vec(-1, 1);
  const SemiVector w = wedge(x, x, y);
  CHECK(euclidean_norm(w) <= 1e-12);
}

TEST_CASE("membership tests") {
  CHECK(on_ads(SemiVector{{1, 0, 0, 0}}, 1e-10));
  CHECK(!on_ads(SemiVector{{0, 0, 1, 0}}, 1e-10));
  CHECK(on_ads(SemiVector{{std::sqrt(2.0), 0, 1, 0}}, 1e-12));

  const SemiVector v{{0.3, -0.2, 1.1, 0.4}};
  CHECK(on_nullcone(v, v, 0.0));
  CHECK(on_nullcone(SemiVector{{1, 0, 1, 0}}, SemiVector{}, 1e-12));
  CHECK(!on_nullcone(e_1, SemiVector{}, 1e-10));

  CHECK(hyperplane_contains(Hyperplane{e_1, 0.0}, e_m1, 1e-12));
  CHECK(!hyperplane_contains(Hyperplane{e_1, 1.0}, e_m1, 1e-10));
}

TEST_CASE("tangent lightcone identity on AdS^3") {
  // For lambda on AdS, points of AdS inside HP(lambda,-1) are exactly the
  // points of the nullcone with vertex lambda, and conversely.
  Rng rng(23);
  int checked = 0;
  while (checked < 200) {
    // random lambda on AdS: normalize a timelike vector
    SemiVector raw = rng.vec(-2, 2);
    raw[0] += 3.0;  // bias to timelike
    const double q = inner(raw, raw);
    if (q >= -1e-6) continue;
    const SemiVector lambda = raw / std::sqrt(-q);
    // random x on AdS
    SemiVector xr = rng.vec(-2, 2);
    xr[0] += 3.0;
    const double qx = inner(xr, xr);
    if (qx >= -1e-6) continue;
    const SemiVector x = xr / std::sqrt(-qx);
    ++checked;
    const bool in_plane =
        hyperplane_contains(Hyperplane{lambda, -1.0}, x, 1e-9);
    const bool on_cone = on_nullcone(x, lambda, 2e-9);
    CHECK(in_plane == on_cone);
  }
}
