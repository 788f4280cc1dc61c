#pragma once

#include <array>

#include "g2harm/euclid7.hpp"
#include "g2harm/types.hpp"

namespace g2harm {

/// Element of the complexified exterior square, stored densely in the basis
/// e_i ^ e_j (i < j, lexicographic).
class Wedge2 {
 public:
  static constexpr int kDim = 21;
  using Coeffs = Eigen::Matrix<cplx, kDim, 1>;

  Wedge2() : coeffs_(Coeffs::Zero()) {}
  explicit Wedge2(const Coeffs& coeffs) : coeffs_(coeffs) {}

  /// Position of e_i ^ e_j in the coefficient vector; requires 0 <= i < j < 7.
  static int index(int i, int j);
  /// The pair (i, j) stored at position idx.
  static std::array<int, 2> pair(int idx);

  cplx operator()(int i, int j) const { return coeffs_[index(i, j)]; }
  cplx& operator()(int i, int j) { return coeffs_[index(i, j)]; }

  const Coeffs& coeffs() const { return coeffs_; }
  Coeffs& coeffs() { return coeffs_; }

  Wedge2& operator+=(const Wedge2& o) {
    coeffs_ += o.coeffs_;
    return *this;
  }
  friend Wedge2 operator+(Wedge2 a, const Wedge2& b) { return a += b; }
  friend Wedge2 operator-(const Wedge2& a, const Wedge2& b) { return Wedge2(a.coeffs_ - b.coeffs_); }
  friend Wedge2 operator*(cplx s, const Wedge2& w) { return Wedge2(s * w.coeffs_); }

 private:
  Coeffs coeffs_;
};

Wedge2 wedge(const Vec7C& a, const Vec7C& b);

/// <<a^b, c^d>> = <a,c><b,d> - <a,d><b,c>, extended bilinearly.
cplx wedge_inner(const Wedge2& w1, const Wedge2& w2);

/// R(a^b)(v) = <a,v> b - <b,v> a, extended linearly.
SkewMat7 rho_iso(const Wedge2& w);

/// Inverse of rho_iso on skew matrices. The symmetric part of A is ignored.
Wedge2 rho_iso_inverse(const SkewMat7& a);

/// trace(A^T B), bilinear (no conjugation).
template <typename Scalar>
Scalar mat_inner(const Mat7<Scalar>& a, const Mat7<Scalar>& b) {
  return (a.array() * b.array()).sum();
}

/// The matrix of w -> v x w.
template <typename Scalar>
Mat7<Scalar> lmap(const Vec7<Scalar>& v) {
  Mat7<Scalar> l;
  for (int k = 0; k < 7; ++k) l.col(k) = cross<Scalar>(v, unit<Scalar>(k));
  return l;
}

/// max |A + A^T|.
template <typename Scalar>
double skew_residual(const Mat7<Scalar>& a) {
  return (a + a.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace g2harm
