#pragma once

#include <array>
#include <cstdint>

#include "g2harm/types.hpp"
#include "g2harm/wedge.hpp"

namespace g2harm {

inline constexpr int kG2Dim = 14;

/// Eigenvalue of Q on decomposables a^p, b^p: Q(a^p, b^p) = (1/3) <<a^p, b^p>>.
inline constexpr double kQMu = 1.0 / 3.0;

/// Ordered orthonormal basis (under trace(A^T B)) of g2 inside so(7).
class G2Basis {
 public:
  using Mats = std::array<Mat7R, kG2Dim>;

  /// Wraps arbitrary matrices without validation; see diagnose().
  static G2Basis from_matrices(const Mats& mats) { return G2Basis(mats); }

  const Mat7R& operator[](int i) const { return mats_[i]; }
  const Mats& mats() const { return mats_; }
  auto begin() const { return mats_.begin(); }
  auto end() const { return mats_.end(); }
  static constexpr int size() { return kG2Dim; }

 private:
  explicit G2Basis(const Mats& mats) : mats_(mats) {}
  Mats mats_;
};

/// Orthogonal projection of A onto span{L_{e_k}}, whose orthonormal basis is
/// {L_{e_k} / sqrt(6)}.
template <typename Scalar>
Mat7<Scalar> project_rw(const Mat7<Scalar>& a) {
  Mat7<Scalar> out = Mat7<Scalar>::Zero();
  for (int k = 0; k < 7; ++k) {
    const Mat7<Scalar> l = lmap<Scalar>(unit<Scalar>(k));
    out += (mat_inner<Scalar>(a, l) / Scalar(6)) * l;
  }
  return out;
}

/// Complement of project_rw on so(7); its image is g2.
template <typename Scalar>
Mat7<Scalar> project_g2(const Mat7<Scalar>& a) {
  return a - project_rw<Scalar>(a);
}

/// Modified Gram-Schmidt over project_g2(R(e_i ^ e_j)), pairs taken in
/// lexicographic order, dropping candidates whose residual norm is below
/// 1e-9. Throws InvariantError unless exactly 14 directions survive.
G2Basis build_g2_basis();

/// Process-wide basis built once on first use.
const G2Basis& default_basis();

struct BasisDiagnostics {
  double gram_residual = 0.0;        ///< max |<X_i, X_j> - delta_ij|
  double derivation_residual = 0.0;  ///< max |X(v x w) - (Xv) x w - v x (Xw)|
  double closure_residual = 0.0;     ///< max entry of [X_i, X_j] minus its projection on the span
  double rw_overlap = 0.0;           ///< max |<X_i, L_{e_k}>|
};

/// Measures every basis invariant. The derivation check uses `pairs` random
/// real (v, w) pairs drawn from `seed`.
BasisDiagnostics diagnose(const G2Basis& basis, int pairs = 200, std::uint64_t seed = 2024);

/// sum_i <X_i a, b> <X_i c, d>, the conformality of phi_ab and phi_cd at e.
cplx q_sum(const Vec7C& a, const Vec7C& b, const Vec7C& c, const Vec7C& d, const G2Basis& basis);

/// 1/2 <<a^b, c^d>> - 1/6 <a x b, c x d>.
cplx q_closed(const Vec7C& a, const Vec7C& b, const Vec7C& c, const Vec7C& d);

/// <<P_g2(a^b), c^d>>, projecting in the exterior square itself.
cplx projection_pairing(const Vec7C& a, const Vec7C& b, const Vec7C& c, const Vec7C& d);

/// sum_i X_i^2.
Mat7R casimir_matrix(const G2Basis& basis);

struct CasimirReport {
  double scalar = 0.0;
  double off_diagonal = 0.0;     ///< max |C_ij|, i != j
  double diagonal_spread = 0.0;  ///< max C_ii - min C_ii
};

CasimirReport casimir_report(const G2Basis& basis);

/// The scalar c with sum_i X_i^2 = c I. This is the Laplacian eigenvalue of
/// every matrix coefficient of the defining representation. Throws
/// InvariantError when the off-diagonal or diagonal spread exceeds `tol`.
double casimir_scalar(const G2Basis& basis, double tol = 1e-10);

}  // namespace g2harm
