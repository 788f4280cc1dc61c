#pragma once

#include <cstdint>
#include <vector>

#include "g2harm/harmonic.hpp"

namespace g2harm::detail {

/// |Q(phi(g_k))| at sample k.
double morphism_denominator(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis,
                            std::uint64_t seed, std::uint64_t index);

/// |Delta(P/Q)| and |kappa(P/Q, P/Q)| at sample k.
SampleResidual morphism_sample(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis,
                               std::uint64_t seed, std::uint64_t index, double pole_floor);

/// Guard threshold from the denominators of all samples.
double pole_floor(const RationalMap& m, std::vector<double> denominators);

QReport eigenfamily_report(const EigenFamily& fam, int n_samples, std::uint64_t seed, double tol,
                           const std::vector<SampleResidual>& residuals);

QReport morphism_report(const EigenFamily& fam, int n_samples, std::uint64_t seed, double tol,
                        const std::vector<SampleResidual>& admitted);

}  // namespace g2harm::detail
