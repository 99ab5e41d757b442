#pragma once

#include <stdexcept>
#include <string>

namespace wgm {

/// Bad caller input: out-of-range sizes, unknown names, unsupported degrees.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed mesh file content.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Mesh that parses but violates a topological or geometric invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Degenerate or self-intersecting cell geometry.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Linear solve failure (non-SPD breakdown or non-convergence).
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

} // namespace wgm
