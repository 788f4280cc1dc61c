#include "g2harm/euclid7.hpp"

#include <cmath>
#include <stdexcept>

namespace g2harm {

bool is_isotropic(const Vec7C& p, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_isotropic: tolerance must be positive");
  return std::abs(dot(p, p)) <= tol;
}

Vec7C isotropic_vector(const Vec7R& u, const Vec7R& v) {
  const double nu = u.norm();
  if (nu == 0.0) throw std::invalid_argument("isotropic_vector: u is zero");
  const Vec7R e1 = u / nu;
  Vec7R w = v - e1.dot(v) * e1;
  w -= e1.dot(w) * e1;
  const double nw = w.norm();
  if (nw < 1e-9 * v.norm() || nw == 0.0) {
    throw std::invalid_argument("isotropic_vector: u and v are linearly dependent");
  }
  const Vec7R e2 = w / nw;
  return complexify(e1) + cplx(0.0, 1.0) * complexify(e2);
}

}  // namespace g2harm
