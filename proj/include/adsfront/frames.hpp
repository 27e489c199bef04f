#pragma once

// The adapted pseudo-orthonormal moving frame {Gamma, b, n, t} along a
// momentary curve and the curvature triple (kappa_g, kappa_n, tau_g).
//
// Conventions: n is the wedge-built unit spacelike normal with the factor
// order Gamma ^ t ^ Gamma_t; b = Gamma ^ n ^ t with its sign flipped when
// needed so that det(Gamma, b, e_1, e_2) > 0. Curvature signs in fixtures
// are recorded relative to exactly this convention.

#include <array>

#include "adsfront/jet.hpp"
#include "adsfront/semivec.hpp"
#include "adsfront/worldsheet.hpp"

namespace adsfront {

// Frame values and curvature derivatives at one parameter point.
struct FrameData {
  double s = 0.0, t = 0.0;
  SemiVector gamma, tvec, nvec, bvec;
  double kappa_g = 0.0, kappa_n = 0.0, tau_g = 0.0;
  double dkappa_g = 0.0, dkappa_n = 0.0, dtau_g = 0.0;
  double d2kappa_g = 0.0, d2kappa_n = 0.0;
};

// Full jet picture of the frame; everything downstream (fronts, focal
// curves, height derivatives, Newton refinement) is built from this.
struct FrameJets {
  double s = 0.0, t = 0.0;
  double speed = 1.0;  // |Gamma_s| in the original parameter
  JetVec gamma, tan, nvec, bvec;
  Jet kg, kn, tg;  // valid through order 2

  FrameData data() const {
    FrameData d;
    d.s = s;
    d.t = t;
    d.gamma = gamma.value();
    d.tvec = tan.value();
    d.nvec = nvec.value();
    d.bvec = bvec.value();
    d.kappa_g = kg.value();
    d.kappa_n = kn.value();
    d.tau_g = tg.value();
    d.dkappa_g = kg.deriv(1);
    d.dkappa_n = kn.deriv(1);
    d.dtau_g = tg.deriv(1);
    d.d2kappa_g = kg.deriv(2);
    d.d2kappa_n = kn.deriv(2);
    return d;
  }
};

FrameJets frame_jets(const WorldSheet& w, double s, double t);

inline FrameData frame_at(const WorldSheet& w, double s, double t) {
  return frame_jets(w, s, t).data();
}

// Residual norms of the four Frenet-Serret type equations, in order
// (dGamma/ds - t, db/ds - ..., dn/ds - ..., dt/ds - ...). The left sides
// come from the jet chain, the right sides from the frame values.
std::array<double, 4> frenet_residual(const WorldSheet& w, double s, double t);
std::array<double, 4> frenet_residual(const FrameJets& fj);

// Worst |<u,v> - eta_uv| over the frame Gram matrix (eta = diag(-1,-1,1,1)
// in the order Gamma, b, n, t).
double frame_gram_residual(const FrameJets& fj);

}  // namespace adsfront
