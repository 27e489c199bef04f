#pragma once

// Shared test support: fixture builders, a deterministic RNG, and the
// independent 4x4 cofactor determinant used as the wedge oracle. Oracle
// code here must not reuse the library's computation paths.

#include <cstdint>
#include <memory>

#include "adsfront/semivec.hpp"
#include "adsfront/worldsheet.hpp"

namespace testsupport {

// Hopf-style torus: on AdS^3 with arc-length s, constant curvatures.
inline std::shared_ptr<adsfront::WorldSheet> fixture_a() {
  return std::make_shared<adsfront::WorldSheet>(
      std::array<std::string, 4>{
          "sqrt(2)*cos(t)", "sqrt(2)*sin(t)", "cos(s)", "sin(s)"},
      0.0, 6.283185307179586476925287, -1.0, 1.0,
      adsfront::ArcLengthMode::Assume);
}

// Perturbed torus: on AdS^3 but not arc length; needs reparametrization.
inline std::shared_ptr<adsfront::WorldSheet> fixture_b() {
  const std::string c = "sqrt(1 + cos(s)^2 + 1.44*sin(s)^2)";
  return std::make_shared<adsfront::WorldSheet>(
      std::array<std::string, 4>{c + "*cos(t)", c + "*sin(t)", "cos(s)",
                                 "1.2*sin(s)"},
      0.0, 6.283185307179586476925287, -1.0, 1.0,
      adsfront::ArcLengthMode::Reparametrize);
}

// splitmix64; uniform doubles are derived with fixed arithmetic so the
// stream is identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  adsfront::SemiVector vec(double lo, double hi) {
    return {{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi),
             uniform(lo, hi)}};
  }

private:
  std::uint64_t state_;
};

// Independent 4x4 determinant by cofactor expansion (the wedge oracle).
inline double det4(const adsfront::SemiVector& r0,
                   const adsfront::SemiVector& r1,
                   const adsfront::SemiVector& r2,
                   const adsfront::SemiVector& r3) {
  const adsfront::SemiVector rows[4] = {r0, r1, r2, r3};
  double acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    double m[3][3];
    for (int r = 0; r < 3; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        m[r][cc++] = rows[r + 1][c];
      }
    }
    const double minor = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    acc += (j % 2 ? -1.0 : 1.0) * rows[0][j] * minor;
  }
  return acc;
}

}  // namespace testsupport
