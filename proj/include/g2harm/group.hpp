#pragma once

#include <array>
#include <cstdint>

#include "g2harm/g2alg.hpp"
#include "g2harm/types.hpp"

namespace g2harm {

/// Matrix exponential: scale by 2^-s until the 1-norm is at most 1/2, sum
/// the degree-18 Taylor polynomial, square s times.
Mat7R expm(const Mat7R& a);

/// max |M^T M - I|.
double orthogonality_residual(const Mat7R& m);

/// max over 50 seeded random unit pairs of |M(v x w) - (Mv) x (Mw)|.
double cross_compat_residual(const Mat7R& m);

/// An element of G2 in the defining representation.
class G2Element {
 public:
  static G2Element identity() { return G2Element(Mat7R::Identity()); }

  /// Wraps a matrix the caller already knows lies in G2, such as a product
  /// of exponentials of g2 elements. No invariant check.
  static G2Element trusted(const Mat7R& m) { return G2Element(m); }

  const Mat7R& matrix() const { return mat_; }
  G2Element inverse() const { return G2Element(mat_.transpose()); }

  friend G2Element operator*(const G2Element& a, const G2Element& b) { return G2Element(a.mat_ * b.mat_); }

 private:
  explicit G2Element(const Mat7R& m) : mat_(m) {}
  Mat7R mat_;
};

inline constexpr double kOrthogonalityTol = 1e-10;
inline constexpr double kCrossCompatTol = 1e-9;

/// Linear combination sum_i coeffs_i X_i.
Mat7R g2_combination(const std::array<double, kG2Dim>& coeffs, const G2Basis& basis);

/// expm(sum_i coeffs_i X_i). Throws InvariantError if the result fails the
/// orthogonality (1e-10) or cross-compatibility (1e-9) check.
G2Element exp_g2(const std::array<double, kG2Dim>& coeffs, const G2Basis& basis);

/// exp_g2(c1) * exp_g2(c2) with c1, c2 i.i.d. standard Gaussian from `seed`.
/// Reproducible, not Haar distributed.
G2Element random_element(std::uint64_t seed, const G2Basis& basis);

/// Both residuals of `m` are at most tol. Throws std::invalid_argument unless tol > 0.
bool is_g2(const Mat7R& m, double tol);

/// expm of a Gaussian element of so(7): a generic rotation, not in G2.
Mat7R random_rotation(std::uint64_t seed);

}  // namespace g2harm
