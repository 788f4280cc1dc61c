#include <doctest.h>

#include <stdexcept>

#include "g2harm/euclid7.hpp"
#include "g2harm/random.hpp"

using namespace g2harm;

namespace {

// Independent statement of the multiplication rule: e_i x e_{i+1} = e_{i+3}
// (1-based, mod 7) plus its cyclic consequences and antisymmetry.
Vec7R table_cross(int i, int j) {
  Vec7R out = Vec7R::Zero();
  for (int s = 0; s < 7; ++s) {
    const int a = s, b = (s + 1) % 7, c = (s + 3) % 7;
    const int trip[3] = {a, b, c};
    for (int r = 0; r < 3; ++r) {
      const int x = trip[r], y = trip[(r + 1) % 3], z = trip[(r + 2) % 3];
      if (i == x && j == y) out[z] += 1.0;
      if (i == y && j == x) out[z] -= 1.0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("dot is bilinear without conjugation") {
  CHECK(dot<cplx>(unit<cplx>(0), unit<cplx>(0)) == cplx(1.0));
  const Vec7C p = unit<cplx>(0) + cplx(0, 1) * unit<cplx>(1);
  CHECK(std::abs(dot(p, p)) == 0.0);

  Sampler s(11);
  for (int n = 0; n < 100; ++n) {
    const Vec7R u = s.real_vector(), v = s.real_vector();
    double oracle = 0.0;
    for (int i = 0; i < 7; ++i) oracle += u[i] * v[i];
    CHECK(dot(u, v) == doctest::Approx(oracle).epsilon(1e-14));
  }
}

TEST_CASE("cross product matches the cyclic table on every basis pair") {
  CHECK((cross<double>(unit(0), unit(1)) - unit(3)).norm() == 0.0);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      CHECK((cross<double>(unit(i), unit(j)) - table_cross(i, j)).norm() == 0.0);
    }
  }
}

TEST_CASE("cross product identities on random inputs") {
  Sampler s(12);
  for (int n = 0; n < 1000; ++n) {
    const Vec7R u = s.unit_real(), v = s.unit_real(), w = s.unit_real();
    CHECK(cross(u, u).cwiseAbs().maxCoeff() == 0.0);
    CHECK((cross(u, v) + cross(v, u)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(dot(cross(v, u), w) + dot(u, cross(v, w))) <= 1e-12);
    const Vec7R dbl = cross(u, cross(v, w)) + cross(v, cross(u, w)) -
                      (dot(u, w) * v + dot(v, w) * u - 2.0 * dot(u, v) * w);
    CHECK(dbl.cwiseAbs().maxCoeff() <= 1e-12);
    const Vec7R single = cross(u, cross(u, w)) - (dot(u, w) * u - dot(u, u) * w);
    CHECK(single.cwiseAbs().maxCoeff() <= 1e-12);
    const double uv = dot(u, v);
    CHECK(std::abs(cross(u, v).squaredNorm() - (u.squaredNorm() * v.squaredNorm() - uv * uv)) <= 1e-12);
  }
}

TEST_CASE("complex extension stays antisymmetric and bilinear") {
  Sampler s(13);
  for (int n = 0; n < 200; ++n) {
    const Vec7C u = s.unit_complex(), v = s.unit_complex(), w = s.unit_complex();
    const cplx c(s.normal(), s.normal());
    CHECK((cross(u, v) + cross(v, u)).cwiseAbs().maxCoeff() <= 1e-13);
    const Vec7C lin = cross<cplx>(u + c * w, v) - cross(u, v) - c * cross(w, v);
    CHECK(lin.cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("isotropy") {
  CHECK(is_isotropic(unit<cplx>(0) + cplx(0, 1) * unit<cplx>(1), 1e-12));
  CHECK_FALSE(is_isotropic(unit<cplx>(0), 1e-12));
  CHECK_THROWS_AS(is_isotropic(unit<cplx>(0), 0.0), std::invalid_argument);

  Sampler s(14);
  for (int n = 0; n < 100; ++n) {
    const Vec7C p = isotropic_vector(s.real_vector(), s.real_vector());
    cplx pp(0.0);
    for (int i = 0; i < 7; ++i) pp += p[i] * p[i];
    CHECK(std::abs(pp) <= 1e-10);
    CHECK(is_isotropic(p, 1e-10));
  }
  CHECK_THROWS_AS(isotropic_vector(unit(0), 2.0 * unit(0)), std::invalid_argument);
}
