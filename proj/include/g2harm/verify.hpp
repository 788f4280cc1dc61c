#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2harm/g2alg.hpp"

namespace g2harm {

/// Outcome of one certified identity.
struct CheckResult {
  enum class Bound {
    upper,   ///< pass iff value <= hi
    lower,   ///< pass iff value > lo
    window,  ///< pass iff lo <= value <= hi
  };

  std::string name;      ///< dotted id, e.g. "cross.double_product"
  std::string identity;  ///< the identity in formula form
  double value = 0.0;    ///< max residual, or the measured quantity
  Bound bound = Bound::upper;
  double lo = 0.0;
  double hi = 0.0;
  int samples = 0;
  std::vector<std::pair<std::string, double>> details;

  bool pass() const;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 100;                  ///< random group elements per sampled check
  std::optional<double> tol;          ///< overrides every residual tolerance
  double h = 1e-4;                    ///< first-order FD step; second order uses 10 h
};

std::vector<CheckResult> verify_euclid7(const VerifyConfig& config);
std::vector<CheckResult> verify_wedge(const VerifyConfig& config);
std::vector<CheckResult> verify_g2alg(const G2Basis& basis, const VerifyConfig& config);
std::vector<CheckResult> verify_group(const G2Basis& basis, const VerifyConfig& config);
std::vector<CheckResult> verify_harmonic(const G2Basis& basis, const VerifyConfig& config);

/// Every suite above, in module order.
std::vector<CheckResult> verify_all(const G2Basis& basis, const VerifyConfig& config);

}  // namespace g2harm
