#include "adsfront/frames.hpp"

#include <cmath>

#include "adsfront/errors.hpp"

namespace adsfront {

FrameJets frame_jets(const WorldSheet& w, double s, double t) {
  const WorldSheet::CurveGerm g = w.germ(s, t);

  FrameJets fj;
  fj.s = s;
  fj.t = t;
  fj.speed = g.speed;
  fj.gamma = g.gamma;
  fj.tan = jet_derivative(g.gamma);

  const JetVec wvec = jet_wedge(g.gamma, fj.tan, g.gamma_t);
  const Jet nn = jet_inner(wvec, wvec);
  if (!(nn.value() > 1e-20))
    throw DegenerateFrameError("frame: |Gamma ^ t ^ Gamma_t| below 1e-10", s,
                               t);
  fj.nvec = wvec * recip(jet_sqrt(nn));

  JetVec braw = jet_wedge(g.gamma, fj.nvec, fj.tan);
  const double adapt = adaptedness_det(g.gamma.value(), braw.value());
  if (std::fabs(adapt) < 1e-14)
    throw DegenerateFrameError("frame: adaptedness determinant vanishes", s,
                               t);
  fj.bvec = adapt > 0.0 ? braw : -braw;

  const JetVec dtan = jet_derivative(fj.tan);
  fj.kg = jet_inner(dtan, fj.bvec);
  fj.kn = jet_inner(dtan, fj.nvec);
  fj.tg = jet_inner(jet_derivative(fj.bvec), fj.nvec);
  return fj;
}

std::array<double, 4> frenet_residual(const FrameJets& fj) {
  const SemiVector gamma = fj.gamma.value();
  const SemiVector tv = fj.tan.value();
  const SemiVector nv = fj.nvec.value();
  const SemiVector bv = fj.bvec.value();
  const double kg = fj.kg.value(), kn = fj.kn.value(), tg = fj.tg.value();

  const SemiVector r1 = fj.gamma.deriv(1) - tv;
  const SemiVector r2 = fj.bvec.deriv(1) - (nv * tg - tv * kg);
  const SemiVector r3 = fj.nvec.deriv(1) - (bv * tg - tv * kn);
  const SemiVector r4 = fj.tan.deriv(1) - (gamma - bv * kg + nv * kn);
  return {euclidean_norm(r1), euclidean_norm(r2), euclidean_norm(r3),
          euclidean_norm(r4)};
}

std::array<double, 4> frenet_residual(const WorldSheet& w, double s,
                                      double t) {
  return frenet_residual(frame_jets(w, s, t));
}

double frame_gram_residual(const FrameJets& fj) {
  const SemiVector f[4] = {fj.gamma.value(), fj.bvec.value(), fj.nvec.value(),
                           fj.tan.value()};
  const double eta[4] = {-1.0, -1.0, 1.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double want = i == j ? eta[i] : 0.0;
      const double res = std::fabs(inner(f[i], f[j]) - want);
      worst = res > worst ? res : worst;
    }
  }
  return worst;
}

}  // namespace adsfront
