#pragma once

#include <stdexcept>
#include <string>

namespace vmsrom {

// Malformed or inconsistent input data (mesh files, binary artifacts, CSV).
// Carries the 1-based line number for text formats where that makes sense.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Mesh fails a structural invariant (dangling vertex, inverted cell,
// untagged boundary edge, non-contiguous ids, ...).
class MeshError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Configuration file is invalid: unknown key, missing required key, value out
// of range, or an option combination that needs an explicit override.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry outside what an operation supports (e.g. a non-straight inlet
// where a parabolic profile is requested).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two artifacts that must belong together do not (mesh checksum mismatch,
// basis/snapshot dimension mismatch, incompatible time grids).
class CompatibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nonlinear solve failed to converge within the iteration budget.
class NewtonError : public std::runtime_error {
 public:
  NewtonError(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

// Linear system is singular or numerically rank deficient. The ROM driver
// uses this to distinguish an expected instability from a programming error.
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what, double indicator = 0.0)
      : std::runtime_error(what), indicator_(indicator) {}
  // Smallest pivot ratio (or comparable measure) that triggered the failure.
  double indicator() const { return indicator_; }

 private:
  double indicator_;
};

// Requested more POD modes than the snapshot set supports.
class RankError : public std::runtime_error {
 public:
  RankError(const std::string& what, int rank) : std::runtime_error(what), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

}  // namespace vmsrom
