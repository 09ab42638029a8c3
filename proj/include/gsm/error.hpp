#pragma once

#include <stdexcept>
#include <string>

namespace gsm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (e.g. signature mismatch).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The requested operation leaves the polynomial x Gaussian family.
class NotInFamily : public Error {
 public:
  using Error::Error;
};

/// A truncated series hit its term cap before meeting the stopping rule.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Finite-difference stencil does not fit (r <= h).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point lies outside the documented quadrature validity region.
class RegionError : public Error {
 public:
  using Error::Error;
};

/// Requested dimension or signature is beyond what a component supports.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A request would exceed a size limit (e.g. too many grid points).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsm
