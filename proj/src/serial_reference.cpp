#include <optional>
#include <stdexcept>

#include "detail.hpp"
#include "g2harm/harmonic.hpp"

namespace g2harm::serial {

QReport check_eigenfamily(const EigenFamily& fam, const G2Basis& basis, int n_samples, std::uint64_t seed,
                          double tol) {
  if (n_samples < 1) throw std::invalid_argument("check_eigenfamily: need at least one sample");
  std::vector<SampleResidual> residuals;
  residuals.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k) residuals.push_back(eigenfamily_sample(fam, basis, seed, k));
  return detail::eigenfamily_report(fam, n_samples, seed, tol, residuals);
}

QReport check_harmonic_morphism(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis, int n_samples,
                                std::uint64_t seed, double tol) {
  if (n_samples < 1) throw std::invalid_argument("check_harmonic_morphism: need at least one sample");
  std::vector<double> denominators;
  denominators.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k) denominators.push_back(detail::morphism_denominator(m, fam, basis, seed, k));
  const double floor = detail::pole_floor(m, denominators);
  std::vector<SampleResidual> admitted;
  for (int k = 0; k < n_samples; ++k) {
    if (denominators[k] >= floor) admitted.push_back(detail::morphism_sample(m, fam, basis, seed, k, floor));
  }
  return detail::morphism_report(fam, n_samples, seed, tol, admitted);
}

}  // namespace g2harm::serial
