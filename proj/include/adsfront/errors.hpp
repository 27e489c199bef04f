#pragma once

#include <stdexcept>
#include <string>

namespace adsfront {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A vector whose components are all below the machine threshold.
class ZeroVectorError : public Error {
public:
  explicit ZeroVectorError(const std::string& msg) : Error(msg) {}
};

// The tangent plane (or the wedge normal built from it) degenerates.
class DegenerateFrameError : public Error {
public:
  DegenerateFrameError(const std::string& msg, double s, double t)
      : Error(msg), s(s), t(t) {}
  double s, t;
};

// |kappa_g +/- kappa_n| fell below kappa_floor: the focal point is at
// infinity along the ray.
class ParabolicPointError : public Error {
public:
  ParabolicPointError(const std::string& msg, double s, double t)
      : Error(msg), s(s), t(t) {}
  double s, t;
};

// A momentary curve stopped being spacelike during reparametrization.
class NotSpacelikeError : public Error {
public:
  NotSpacelikeError(const std::string& msg, double s, double t)
      : Error(msg), s(s), t(t) {}
  double s, t;
};

// Both timelike components of the chart point are too small to select a
// coordinate chart.
class ChartDegenerateError : public Error {
public:
  explicit ChartDegenerateError(const std::string& msg) : Error(msg) {}
};

// Raised while evaluating a worldsheet expression (domain errors etc.).
class EvaluationError : public Error {
public:
  explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

// Malformed run configuration; carries a line number when known.
class ConfigError : public Error {
public:
  ConfigError(const std::string& msg, int line = 0) : Error(msg), line(line) {}
  int line;
};

}  // namespace adsfront
