#include "g2harm/group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "g2harm/errors.hpp"
#include "g2harm/euclid7.hpp"
#include "g2harm/random.hpp"

namespace g2harm {

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vec7R Sampler::real_vector() {
  Vec7R v;
  for (int i = 0; i < 7; ++i) v[i] = normal();
  return v;
}

Vec7C Sampler::complex_vector() {
  Vec7C v;
  for (int i = 0; i < 7; ++i) {
    const double re = normal();
    v[i] = cplx(re, normal());
  }
  return v;
}

Vec7R Sampler::unit_real() {
  const Vec7R v = real_vector();
  return v / v.norm();
}

Vec7C Sampler::unit_complex() {
  const Vec7C v = complex_vector();
  return v / v.norm();
}

Mat7R Sampler::unit_skew() {
  Mat7R a = Mat7R::Zero();
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      a(i, j) = normal();
      a(j, i) = -a(i, j);
    }
  }
  return a / a.norm();
}

std::array<double, 14> Sampler::gaussian14() {
  std::array<double, 14> c{};
  for (double& x : c) x = normal();
  return c;
}

Mat7R expm(const Mat7R& a) {
  constexpr int kDegree = 18;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat7R scaled = a / std::ldexp(1.0, squarings);

  // Horner: I + A(I + A/2 (I + A/3 (...)))
  Mat7R result = Mat7R::Identity();
  for (int k = kDegree; k >= 1; --k) {
    result = Mat7R::Identity() + (scaled * result) / static_cast<double>(k);
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

double orthogonality_residual(const Mat7R& m) {
  return (m.transpose() * m - Mat7R::Identity()).cwiseAbs().maxCoeff();
}

double cross_compat_residual(const Mat7R& m) {
  Sampler sampler(0xC0FFEE);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const Vec7R v = sampler.unit_real();
    const Vec7R w = sampler.unit_real();
    const Vec7R r = m * cross(v, w) - cross<double>(m * v, m * w);
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

Mat7R g2_combination(const std::array<double, kG2Dim>& coeffs, const G2Basis& basis) {
  Mat7R x = Mat7R::Zero();
  for (int i = 0; i < kG2Dim; ++i) x += coeffs[i] * basis[i];
  return x;
}

G2Element exp_g2(const std::array<double, kG2Dim>& coeffs, const G2Basis& basis) {
  const Mat7R g = expm(g2_combination(coeffs, basis));
  if (orthogonality_residual(g) > kOrthogonalityTol || cross_compat_residual(g) > kCrossCompatTol) {
    throw InvariantError("exp_g2: exponential left G2; the basis is not a cross-product derivation basis");
  }
  return G2Element::trusted(g);
}

G2Element random_element(std::uint64_t seed, const G2Basis& basis) {
  Sampler sampler(seed);
  const auto c1 = sampler.gaussian14();
  const auto c2 = sampler.gaussian14();
  return exp_g2(c1, basis) * exp_g2(c2, basis);
}

bool is_g2(const Mat7R& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_g2: tolerance must be positive");
  return orthogonality_residual(m) <= tol && cross_compat_residual(m) <= tol;
}

Mat7R random_rotation(std::uint64_t seed) {
  Sampler sampler(seed);
  Mat7R a = Mat7R::Zero();
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      a(i, j) = sampler.normal();
      a(j, i) = -a(i, j);
    }
  }
  return expm(a);
}

}  // namespace g2harm
