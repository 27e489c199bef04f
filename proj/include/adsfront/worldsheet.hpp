#pragma once

// A world sheet: a timelike surface in AdS^3 foliated by spacelike momentary
// curves, given by four closed-form component expressions in (s, t).
//
// The curve germ returned by `germ` carries order-4 jets of the momentary
// curve and of its t-derivative, with the series variable being arc length
// along the momentary curve. In Assume mode the parameter s is taken to be
// arc length already; in Reparametrize mode the germ is seeded through the
// exact Taylor recurrence for the arc-length substitution, so downstream
// curvature derivatives are exact at the point regardless of the input
// parametrization.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adsfront/expr.hpp"
#include "adsfront/jet.hpp"
#include "adsfront/semivec.hpp"

namespace adsfront {

enum class ArcLengthMode { Assume, Reparametrize, Reject };

struct SampleGrid {
  int n_s = 64;
  int n_t = 16;
  int n_mu = 32;
  double mu_min = -3.0;
  double mu_max = 3.0;
  double hash_cell = 0.05;
  double refine_tol = 1e-9;
};

// Named tolerance constants. All config-overridable.
struct Tolerances {
  double ads_tol = 1e-8;           // |<G,G>+1| on the sampled grid
  double spacelike_tol = 1e-10;    // <G_s,G_s> must exceed this
  double gram_tol = 0.0;           // Gram determinant must be < -gram_tol
  double unit_speed_tol = 1e-8;    // |<G_s,G_s>-1| under Assume
  double null_tol = 1e-10;         // causal-type cutoff
  double kappa_floor = 1e-8;       // |kappa_g +/- kappa_n| below = parabolic
  double swallowtail_tol = 1e-8;   // |sigma| at a refined root
  double dsigma_floor = 1e-3;      // |sigma'| for a swallowtail verdict
  double frame_tol = 1e-9;         // frame Gram residual
  double constant_focal_tol = 1e-9;  // max |sigma| for the constant case
};

struct ValidationCheck {
  std::string name;     // "on_ads" | "spacelike" | "timelike_plane" | "unit_speed"
  bool passed = true;
  double worst = 0.0;   // extremal value, see per-check semantics below
  double s = 0.0, t = 0.0;
};

// Check semantics: on_ads and unit_speed record the maximal residual;
// spacelike records the minimal <G_s,G_s>; timelike_plane records the
// maximal Gram determinant (negative when the check passes).
struct ValidationReport {
  bool passed = false;
  std::vector<ValidationCheck> checks;
};

// Strictly increasing map sigma -> s built on uniform sigma nodes with cubic
// Hermite interpolation (node slopes ds/dsigma = 1/|Gamma_s| are exact).
class ArclengthMap {
public:
  ArclengthMap(std::vector<double> s_nodes, std::vector<double> slopes,
               double total_length);

  double s_of_sigma(double sigma) const;
  double total_length() const { return length_; }
  std::size_t node_count() const { return s_nodes_.size(); }

private:
  std::vector<double> s_nodes_;
  std::vector<double> slopes_;
  double length_ = 0.0;
  double step_ = 0.0;
};

class WorldSheet {
public:
  WorldSheet(const std::array<std::string, 4>& components, double s_min,
             double s_max, double t_min, double t_max, ArcLengthMode mode);

  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  ArcLengthMode mode() const { return mode_; }
  const std::array<std::string, 4>& component_sources() const {
    return sources_;
  }

  // Raw evaluation in the original parameters.
  SemiVector point(double s, double t) const;
  // d^k Gamma / d s^k, k = 0..4.
  SemiVector ds_deriv(double s, double t, int k) const;
  // d^k (dGamma/dt) / d s^k, k = 0..4.
  SemiVector dt_ds_deriv(double s, double t, int k) const;
  // <Gamma_s, Gamma_s> at (s, t).
  double speed_sq(double s, double t) const;

  // The momentary curve is closed when the two s-endpoints map to the same
  // ambient point; parameter distances then wrap around.
  bool closed_in_s() const { return closed_in_s_; }
  double s_period() const { return s_max_ - s_min_; }

  struct CurveGerm {
    JetVec gamma;    // order-4 jet of the momentary curve in arc length
    JetVec gamma_t;  // order-4 jet of dGamma/dt along the same substitution
    double speed;    // |Gamma_s| at the point, in the original parameter
  };
  CurveGerm germ(double s, double t) const;

  ValidationReport validate(const SampleGrid& grid, const Tolerances& tol,
                            unsigned n_threads = 1) const;

  // Integrates dsigma/ds = |Gamma_s| at fixed t (adaptive fourth-order RK,
  // one Richardson halving per node step) and returns the inverse map on
  // n_nodes uniform sigma nodes. Throws NotSpacelikeError when the momentary
  // curve stops being spacelike on the refinement grid.
  ArclengthMap reparametrize_arclength(double t, int n_nodes) const;

private:
  std::array<std::string, 4> sources_;
  double s_min_, s_max_, t_min_, t_max_;
  ArcLengthMode mode_;
  bool closed_in_s_ = false;
  // tape_s_[i][k]: d^k X_i / ds^k;  tape_t_[i][k]: d^k (dX_i/dt) / ds^k
  std::array<std::array<expr::Tape, 5>, 4> tape_s_;
  std::array<std::array<expr::Tape, 5>, 4> tape_t_;
};

}  // namespace adsfront
