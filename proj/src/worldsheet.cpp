#include "adsfront/worldsheet.hpp"

#include <algorithm>
#include <cmath>

#include "adsfront/errors.hpp"
#include "adsfront/parallel.hpp"

namespace adsfront {

WorldSheet::WorldSheet(const std::array<std::string, 4>& components,
                       double s_min, double s_max, double t_min, double t_max,
                       ArcLengthMode mode)
    : sources_(components),
      s_min_(s_min),
      s_max_(s_max),
      t_min_(t_min),
      t_max_(t_max),
      mode_(mode) {
  if (!(s_min < s_max) || !(t_min < t_max))
    throw Error("worldsheet: parameter ranges must be nonempty");
  for (int i = 0; i < 4; ++i) {
    expr::ExprPtr e = expr::parse(components[i]);
    expr::ExprPtr et = expr::differentiate(e, expr::Var::T);
    expr::ExprPtr d = e;
    expr::ExprPtr dt = et;
    for (int k = 0; k <= 4; ++k) {
      tape_s_[i][k] = expr::Tape(d);
      tape_t_[i][k] = expr::Tape(dt);
      if (k < 4) {
        d = expr::differentiate(d, expr::Var::S);
        dt = expr::differentiate(dt, expr::Var::S);
      }
    }
  }
  const SemiVector a = point(s_min_, (t_min_ + t_max_) / 2.0);
  const SemiVector b = point(s_max_, (t_min_ + t_max_) / 2.0);
  closed_in_s_ = euclidean_norm(a - b) <= 1e-9 * (1.0 + euclidean_norm(a));
}

SemiVector WorldSheet::point(double s, double t) const {
  return ds_deriv(s, t, 0);
}

SemiVector WorldSheet::ds_deriv(double s, double t, int k) const {
  SemiVector v;
  for (int i = 0; i < 4; ++i) v[i] = tape_s_[i][k].eval(s, t);
  return v;
}

SemiVector WorldSheet::dt_ds_deriv(double s, double t, int k) const {
  SemiVector v;
  for (int i = 0; i < 4; ++i) v[i] = tape_t_[i][k].eval(s, t);
  return v;
}

double WorldSheet::speed_sq(double s, double t) const {
  const SemiVector gs = ds_deriv(s, t, 1);
  return inner(gs, gs);
}

WorldSheet::CurveGerm WorldSheet::germ(double s, double t) const {
  static constexpr double inv_fact[5] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
  JetVec gs, gt;  // s-jets of Gamma and Gamma_t
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k <= 4; ++k) {
      gs[i].c[k] = tape_s_[i][k].eval(s, t) * inv_fact[k];
      gt[i].c[k] = tape_t_[i][k].eval(s, t) * inv_fact[k];
    }
    if (!std::isfinite(gs[i].c[0]) || !std::isfinite(gs[i].c[4]) ||
        !std::isfinite(gt[i].c[4]))
      throw EvaluationError("worldsheet: non-finite component derivative");
  }

  const Jet q = jet_inner(jet_derivative(gs), jet_derivative(gs));
  const double q0 = q.value();
  if (!(q0 > 0.0))
    throw NotSpacelikeError("worldsheet: momentary curve not spacelike", s, t);
  const double speed = std::sqrt(q0);

  if (mode_ != ArcLengthMode::Reparametrize)
    return {gs, gt, speed};

  // Arc-length substitution: s(sigma) solves ds/dsigma = 1/sqrt(Q(s)).
  // Build its jet by the Taylor recurrence, then compose.
  const Jet g = recip(jet_sqrt(q));  // jet of 1/|Gamma_s| in s, order 3
  Jet s_of_sigma = Jet::constant(s);
  for (int k = 0; k <= 3; ++k) {
    const Jet rhs = jet_compose(g, s_of_sigma);
    s_of_sigma.c[k + 1] = rhs.c[k] / (k + 1);
  }
  JetVec gamma, gamma_t;
  for (int i = 0; i < 4; ++i) {
    gamma[i] = jet_compose(gs[i], s_of_sigma);
    gamma_t[i] = jet_compose(gt[i], s_of_sigma);
  }
  return {gamma, gamma_t, speed};
}

ValidationReport WorldSheet::validate(const SampleGrid& grid,
                                      const Tolerances& tol,
                                      unsigned n_threads) const {
  const int ns = std::max(2, grid.n_s);
  const int nt = std::max(2, grid.n_t);

  struct NodeResult {
    double ads_res, speed_sq, gram, unit_res;
  };
  std::vector<NodeResult> nodes(static_cast<std::size_t>(ns) * nt);

  parallel_for(nodes.size(), n_threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const int i = static_cast<int>(idx) % ns;
      const int j = static_cast<int>(idx) / ns;
      const double s = s_min_ + (s_max_ - s_min_) * i / (ns - 1);
      const double t = t_min_ + (t_max_ - t_min_) * j / (nt - 1);
      const SemiVector g = point(s, t);
      const SemiVector gs = ds_deriv(s, t, 1);
      const SemiVector gt = dt_ds_deriv(s, t, 0);
      if (!g.finite() || !gs.finite() || !gt.finite())
        throw EvaluationError("validate: non-finite embedding value");
      const double qss = inner(gs, gs);
      const double qtt = inner(gt, gt);
      const double qst = inner(gs, gt);
      nodes[idx] = {std::fabs(inner(g, g) + 1.0), qss, qss * qtt - qst * qst,
                    std::fabs(qss - 1.0)};
    }
  });

  ValidationCheck ads{"on_ads", true, 0.0, s_min_, t_min_};
  ValidationCheck spc{"spacelike", true, nodes[0].speed_sq, s_min_, t_min_};
  ValidationCheck gram{"timelike_plane", true, nodes[0].gram, s_min_, t_min_};
  ValidationCheck unit{"unit_speed", true, 0.0, s_min_, t_min_};
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const int i = static_cast<int>(idx) % ns;
    const int j = static_cast<int>(idx) / ns;
    const double s = s_min_ + (s_max_ - s_min_) * i / (ns - 1);
    const double t = t_min_ + (t_max_ - t_min_) * j / (nt - 1);
    if (nodes[idx].ads_res > ads.worst) {
      ads.worst = nodes[idx].ads_res;
      ads.s = s;
      ads.t = t;
    }
    if (nodes[idx].speed_sq < spc.worst) {
      spc.worst = nodes[idx].speed_sq;
      spc.s = s;
      spc.t = t;
    }
    if (nodes[idx].gram > gram.worst) {
      gram.worst = nodes[idx].gram;
      gram.s = s;
      gram.t = t;
    }
    if (nodes[idx].unit_res > unit.worst) {
      unit.worst = nodes[idx].unit_res;
      unit.s = s;
      unit.t = t;
    }
  }
  ads.passed = ads.worst <= tol.ads_tol;
  spc.passed = spc.worst > tol.spacelike_tol;
  gram.passed = gram.worst < -tol.gram_tol;
  unit.passed = unit.worst <= tol.unit_speed_tol;

  ValidationReport report;
  report.checks = {ads, spc, gram};
  if (mode_ == ArcLengthMode::Assume) report.checks.push_back(unit);
  report.passed = true;
  for (const ValidationCheck& c : report.checks)
    report.passed = report.passed && c.passed;
  return report;
}

// ---------------------------------------------------------------------------
// Arc-length map

ArclengthMap::ArclengthMap(std::vector<double> s_nodes,
                           std::vector<double> slopes, double total_length)
    : s_nodes_(std::move(s_nodes)),
      slopes_(std::move(slopes)),
      length_(total_length) {
  step_ = length_ / static_cast<double>(s_nodes_.size() - 1);
}

double ArclengthMap::s_of_sigma(double sigma) const {
  const std::size_t n = s_nodes_.size();
  if (sigma <= 0.0) return s_nodes_.front() + sigma * slopes_.front();
  if (sigma >= length_)
    return s_nodes_.back() + (sigma - length_) * slopes_.back();
  std::size_t k = static_cast<std::size_t>(sigma / step_);
  if (k >= n - 1) k = n - 2;
  const double u = (sigma - k * step_) / step_;
  const double p0 = s_nodes_[k], p1 = s_nodes_[k + 1];
  const double m0 = slopes_[k] * step_, m1 = slopes_[k + 1] * step_;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * m0 +
         (-2 * u3 + 3 * u2) * p1 + (u3 - u2) * m1;
}

ArclengthMap WorldSheet::reparametrize_arclength(double t, int n_nodes) const {
  n_nodes = std::max(n_nodes, 16);
  auto speed_at = [&](double s) {
    const double q = speed_sq(s, t);
    if (!(q > 0.0))
      throw NotSpacelikeError(
          "reparametrize_arclength: momentary curve not spacelike", s, t);
    return std::sqrt(q);
  };

  // Total length by composite Simpson on a fine grid.
  const int n_quad = 8 * n_nodes;
  double length = 0.0;
  {
    const double h = (s_max_ - s_min_) / n_quad;
    double acc = speed_at(s_min_) + speed_at(s_max_);
    for (int i = 1; i < n_quad; ++i)
      acc += speed_at(s_min_ + i * h) * (i % 2 ? 4.0 : 2.0);
    length = acc * h / 3.0;
  }

  // March s'(sigma) = 1/|Gamma_s| with classic RK4; one Richardson halving
  // per node step keeps the error well under the interpolation error.
  auto rhs = [&](double s) { return 1.0 / speed_at(s); };
  auto rk4 = [&](double s, double h) {
    const double k1 = rhs(s);
    const double k2 = rhs(s + 0.5 * h * k1);
    const double k3 = rhs(s + 0.5 * h * k2);
    const double k4 = rhs(s + h * k3);
    return s + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  };

  std::vector<double> s_nodes(n_nodes), slopes(n_nodes);
  const double h = length / (n_nodes - 1);
  double s = s_min_;
  for (int i = 0; i < n_nodes; ++i) {
    s_nodes[i] = s;
    slopes[i] = rhs(s);
    if (i + 1 < n_nodes) {
      const double coarse = rk4(s, h);
      const double fine = rk4(rk4(s, 0.5 * h), 0.5 * h);
      // 4th-order extrapolation of the two estimates
      s = fine + (fine - coarse) / 15.0;
    }
  }
  // The march should land on s_max up to integrator error.
  if (std::fabs(s_nodes.back() - s_max_) > 1e-6 * (1.0 + std::fabs(s_max_)))
    throw Error("reparametrize_arclength: integration drift exceeds bound");
  s_nodes.back() = s_max_;
  return ArclengthMap(std::move(s_nodes), std::move(slopes), length);
}

}  // namespace adsfront
