#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace concordia {

using Eigen::ArrayXd;
using Eigen::ArrayXXd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Eigen::VectorXi;

// Denominator / probability floor shared by all estimators.
inline constexpr double kEps = 1e-8;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad inputs: malformed files, out-of-range values, invalid flag combinations.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A model fit failed to converge or could not be computed.
class FitError : public Error {
public:
  using Error::Error;
};

// The requested estimand is degenerate on this data (e.g. no events by tau).
class DegenerateError : public Error {
public:
  using Error::Error;
};

}  // namespace concordia
