#pragma once

#include <complex>

#include <Eigen/Core>

namespace g2harm {

using cplx = std::complex<double>;

template <typename Scalar>
using Vec7 = Eigen::Matrix<Scalar, 7, 1>;
template <typename Scalar>
using Mat7 = Eigen::Matrix<Scalar, 7, 7>;

using Vec7R = Vec7<double>;
using Vec7C = Vec7<cplx>;
using Mat7R = Mat7<double>;
using Mat7C = Mat7<cplx>;

/// Elements of so(7) in the defining representation. Skewness is a
/// property of the value, checked with skew_residual(), not of the type.
using SkewMat7 = Mat7C;

inline Vec7C complexify(const Vec7R& v) { return v.cast<cplx>(); }
inline Mat7C complexify(const Mat7R& m) { return m.cast<cplx>(); }

/// Unit basis vector e_{k+1} (zero-based k).
template <typename Scalar = double>
Vec7<Scalar> unit(int k) {
  Vec7<Scalar> e = Vec7<Scalar>::Zero();
  e[k] = Scalar(1);
  return e;
}

}  // namespace g2harm
