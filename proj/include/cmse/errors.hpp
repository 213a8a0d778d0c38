#pragma once

#include <stdexcept>
#include <string>

namespace cmse {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sum or integral failed to reach its tolerance; carries the partial
/// result so callers can inspect how far it got.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial, long terms)
      : Error(what), partial(partial), terms(terms) {}
  double partial;
  long terms;
};

/// Bad surface input: open/non-manifold mesh, inverted orientation,
/// self-intersecting profile, bodies in contact.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration or coefficient choice.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Linear solve failed or produced an untrustworthy result.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double rcond_estimate)
      : Error(what), rcond_estimate(rcond_estimate) {}
  double rcond_estimate;
};

/// Evaluation request that cannot meet the accuracy contract
/// (e.g. field point too close to a surface).
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluated at coincident points; callers must use the self-term
/// path instead.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Input file failed validation; message names the offending row/field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmse
