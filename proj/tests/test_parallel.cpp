#include <doctest.h>

#include <omp.h>

#include "g2harm/harmonic.hpp"
#include "g2harm/serialize.hpp"

using namespace g2harm;

namespace {

void check_identical(const QReport& a, const QReport& b) {
  CHECK(a.check == b.check);
  CHECK(a.sample_count == b.sample_count);
  CHECK(a.admitted == b.admitted);
  CHECK(a.verdict == b.verdict);
  // bitwise, not approximate: maxima are order independent
  CHECK(a.max_abs_error == b.max_abs_error);
  CHECK(a.laplacian_error == b.laplacian_error);
  CHECK(a.conformality_error == b.conformality_error);
  CHECK(dump17(to_json(a)) == dump17(to_json(b)));
}

}  // namespace

TEST_CASE("parallel eigenfamily check matches the serial reference") {
  const G2Basis& basis = default_basis();
  const EigenFamily fam = make_eigenfamily(unit<cplx>(2) + cplx(0, 1) * unit<cplx>(5), basis);
  for (const std::uint64_t seed : {1ull, 77ull, 0xDEADBEEFull}) {
    check_identical(check_eigenfamily(fam, basis, 64, seed, 1e-9),
                    serial::check_eigenfamily(fam, basis, 64, seed, 1e-9));
  }
  EigenFamily corrupt = fam;
  corrupt.mu = 0.1;
  check_identical(check_eigenfamily(corrupt, basis, 32, 5, 1e-9), serial::check_eigenfamily(corrupt, basis, 32, 5, 1e-9));
}

TEST_CASE("parallel morphism check matches the serial reference") {
  const G2Basis& basis = default_basis();
  const EigenFamily fam = make_eigenfamily(unit<cplx>(0) + cplx(0, 1) * unit<cplx>(1), basis);
  const RationalMap m = RationalMap::make(PolyFn::parse("z1^2+z2*z3"), PolyFn::parse("z4^2"));
  check_identical(check_harmonic_morphism(m, fam, basis, 80, 11, 1e-7),
                  serial::check_harmonic_morphism(m, fam, basis, 80, 11, 1e-7));
}

TEST_CASE("thread count does not change results") {
  const G2Basis& basis = default_basis();
  const EigenFamily fam = make_eigenfamily(unit<cplx>(0) + cplx(0, 1) * unit<cplx>(1), basis);
  const RationalMap m = RationalMap::make(PolyFn::parse("z1"), PolyFn::parse("z2"));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const QReport one = check_harmonic_morphism(m, fam, basis, 40, 3, 1e-7);
  omp_set_num_threads(4);
  const QReport four = check_harmonic_morphism(m, fam, basis, 40, 3, 1e-7);
  omp_set_num_threads(saved);
  check_identical(one, four);
}

TEST_CASE("exceptions inside the parallel loop reach the caller") {
  const G2Basis& basis = default_basis();
  const EigenFamily fam = make_eigenfamily(unit<cplx>(0) + cplx(0, 1) * unit<cplx>(1), basis);
  // a polynomial in more variables than the family has members
  EigenFamily small = fam;
  small.members.resize(2);
  const RationalMap m = RationalMap::make(PolyFn::parse("z1"), PolyFn::parse("z5"));
  CHECK_THROWS(check_harmonic_morphism(m, small, basis, 16, 1, 1e-7));
  CHECK_THROWS(serial::check_harmonic_morphism(m, small, basis, 16, 1, 1e-7));
}
