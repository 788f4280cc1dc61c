#include "g2harm/g2alg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "g2harm/errors.hpp"
#include "g2harm/euclid7.hpp"

namespace g2harm {

G2Basis build_g2_basis() {
  constexpr double kDropTol = 1e-9;
  std::vector<Mat7R> kept;
  for (int n = 0; n < Wedge2::kDim; ++n) {
    const auto [i, j] = Wedge2::pair(n);
    Wedge2 w;
    w(i, j) = 1.0;
    Mat7R x = project_g2<double>(rho_iso(w).real());
    // two passes keep the Gram matrix at roundoff level
    for (int pass = 0; pass < 2; ++pass) {
      for (const Mat7R& q : kept) x -= mat_inner<double>(q, x) * q;
    }
    const double norm = std::sqrt(mat_inner<double>(x, x));
    if (norm < kDropTol) continue;
    kept.push_back(x / norm);
  }
  if (kept.size() != static_cast<std::size_t>(kG2Dim)) {
    throw InvariantError("build_g2_basis: expected 14 independent directions, found " +
                         std::to_string(kept.size()));
  }
  G2Basis::Mats mats;
  std::copy(kept.begin(), kept.end(), mats.begin());
  return G2Basis::from_matrices(mats);
}

const G2Basis& default_basis() {
  static const G2Basis basis = build_g2_basis();
  return basis;
}

BasisDiagnostics diagnose(const G2Basis& basis, int pairs, std::uint64_t seed) {
  BasisDiagnostics d;
  for (int i = 0; i < kG2Dim; ++i) {
    for (int j = 0; j < kG2Dim; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      d.gram_residual = std::max(d.gram_residual, std::abs(mat_inner<double>(basis[i], basis[j]) - target));
    }
    for (int k = 0; k < 7; ++k) {
      d.rw_overlap = std::max(d.rw_overlap, std::abs(mat_inner<double>(basis[i], lmap<double>(unit(k)))));
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto draw = [&] {
    Vec7R v;
    for (int k = 0; k < 7; ++k) v[k] = normal(rng);
    return Vec7R(v / v.norm());
  };
  for (int n = 0; n < pairs; ++n) {
    const Vec7R v = draw();
    const Vec7R w = draw();
    for (const Mat7R& x : basis) {
      const Vec7R r = x * cross(v, w) - cross<double>(x * v, w) - cross<double>(v, x * w);
      d.derivation_residual = std::max(d.derivation_residual, r.cwiseAbs().maxCoeff());
    }
  }

  for (int i = 0; i < kG2Dim; ++i) {
    for (int j = i + 1; j < kG2Dim; ++j) {
      const Mat7R c = basis[i] * basis[j] - basis[j] * basis[i];
      Mat7R r = c;
      for (const Mat7R& x : basis) r -= mat_inner<double>(x, c) * x;
      d.closure_residual = std::max(d.closure_residual, r.cwiseAbs().maxCoeff());
    }
  }
  return d;
}

cplx q_sum(const Vec7C& a, const Vec7C& b, const Vec7C& c, const Vec7C& d, const G2Basis& basis) {
  cplx s(0.0);
  for (const Mat7R& x : basis) {
    const Mat7C xc = complexify(x);
    s += dot<cplx>(xc * a, b) * dot<cplx>(xc * c, d);
  }
  return s;
}

cplx q_closed(const Vec7C& a, const Vec7C& b, const Vec7C& c, const Vec7C& d) {
  return 0.5 * wedge_inner(wedge(a, b), wedge(c, d)) - dot(cross(a, b), cross(c, d)) / 6.0;
}

cplx projection_pairing(const Vec7C& a, const Vec7C& b, const Vec7C& c, const Vec7C& d) {
  const Wedge2 projected = rho_iso_inverse(project_g2<cplx>(rho_iso(wedge(a, b))));
  return wedge_inner(projected, wedge(c, d));
}

Mat7R casimir_matrix(const G2Basis& basis) {
  Mat7R c = Mat7R::Zero();
  for (const Mat7R& x : basis) c += x * x;
  return c;
}

CasimirReport casimir_report(const G2Basis& basis) {
  const Mat7R c = casimir_matrix(basis);
  CasimirReport r;
  r.scalar = c.trace() / 7.0;
  const Vec7R diag = c.diagonal();
  r.diagonal_spread = diag.maxCoeff() - diag.minCoeff();
  Mat7R off = c;
  off.diagonal().setZero();
  r.off_diagonal = off.cwiseAbs().maxCoeff();
  return r;
}

double casimir_scalar(const G2Basis& basis, double tol) {
  const CasimirReport r = casimir_report(basis);
  if (r.off_diagonal > tol || r.diagonal_spread > tol) {
    throw InvariantError("casimir_scalar: Casimir matrix is not a multiple of the identity");
  }
  return r.scalar;
}

}  // namespace g2harm
