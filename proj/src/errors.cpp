#include "g2harm/errors.hpp"

#include <sstream>

namespace g2harm {

namespace {

std::string isotropy_message(double measured) {
  std::ostringstream os;
  os.precision(17);
  os << "vector is not isotropic: |<p,p>| = " << measured;
  return os.str();
}

}  // namespace

IsotropyError::IsotropyError(double measured)
    : Error(isotropy_message(measured)), measured_(measured) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

const char* to_string(RationalMapFault fault) {
  switch (fault) {
    case RationalMapFault::inhomogeneous:
      return "inhomogeneous";
    case RationalMapFault::degree_mismatch:
      return "degree_mismatch";
    case RationalMapFault::zero_degree:
      return "zero_degree";
    case RationalMapFault::linearly_dependent:
      return "linearly_dependent";
  }
  return "unknown";
}

RationalMapError::RationalMapError(RationalMapFault fault, const std::string& what)
    : Error(what), fault_(fault) {}

}  // namespace g2harm
