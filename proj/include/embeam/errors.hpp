#pragma once

#include <stdexcept>
#include <string>

namespace embeam {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; message carries file name and line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

/// Invalid reference geometry (inverted element, singular Jacobian, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Degenerate deformed kinematics (vanishing centerline tangent, ...).
class KinematicsError : public Error {
 public:
  using Error::Error;
};

/// A beam coupling point has no containing solid element.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent mortar data (zero weighting on an active multiplier row).
class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// Linear or nonlinear solve failure.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Caller passed inconsistently sized or otherwise invalid arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure while writing outputs.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace embeam
