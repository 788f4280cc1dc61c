#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2harm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object failed one of its defining invariants (basis of the
/// wrong dimension, non-scalar Casimir, a group element off G2, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class IsotropyError : public Error {
 public:
  explicit IsotropyError(double measured);
  double measured() const { return measured_; }

 private:
  double measured_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class RationalMapFault { inhomogeneous, degree_mismatch, zero_degree, linearly_dependent };

const char* to_string(RationalMapFault fault);

class RationalMapError : public Error {
 public:
  RationalMapError(RationalMapFault fault, const std::string& what);
  RationalMapFault fault() const { return fault_; }

 private:
  RationalMapFault fault_;
};

/// Evaluation of a rational map too close to the zero set of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace g2harm
