#pragma once

#include <array>

#include "g2harm/types.hpp"

namespace g2harm {

/// Oriented lines {i, i+1, i+3} (mod 7, zero-based) of the Fano plane.
/// For each line (i, j, k): e_i x e_j = e_k, e_j x e_k = e_i, e_k x e_i = e_j.
inline constexpr std::array<std::array<int, 3>, 7> kFanoLines = {{
    {0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2},
}};

/// Bilinear product sum_i u_i v_i. There is no conjugation, also for complex
/// arguments, so dot(p, p) can vanish for nonzero p.
template <typename Scalar>
Scalar dot(const Vec7<Scalar>& u, const Vec7<Scalar>& v) {
  Scalar s(0);
  for (int i = 0; i < 7; ++i) s += u[i] * v[i];
  return s;
}

/// Seven-dimensional cross product, extended complex-bilinearly.
template <typename Scalar>
Vec7<Scalar> cross(const Vec7<Scalar>& u, const Vec7<Scalar>& v) {
  Vec7<Scalar> w = Vec7<Scalar>::Zero();
  for (const auto& [i, j, k] : kFanoLines) {
    w[k] += u[i] * v[j] - u[j] * v[i];
    w[i] += u[j] * v[k] - u[k] * v[j];
    w[j] += u[k] * v[i] - u[i] * v[k];
  }
  return w;
}

/// |dot(p, p)| <= tol. Throws std::invalid_argument unless tol > 0.
bool is_isotropic(const Vec7C& p, double tol = 1e-12);

/// u' + i v' where (u', v') is the Gram-Schmidt orthonormalization of (u, v).
/// The result is isotropic with Hermitian norm sqrt(2). Throws
/// std::invalid_argument if u and v are (numerically) dependent.
Vec7C isotropic_vector(const Vec7R& u, const Vec7R& v);

}  // namespace g2harm
