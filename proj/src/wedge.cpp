#include "g2harm/wedge.hpp"

#include <cassert>

namespace g2harm {

namespace {

struct PairTable {
  std::array<std::array<int, 7>, 7> index{};
  std::array<std::array<int, 2>, Wedge2::kDim> pairs{};

  constexpr PairTable() {
    int n = 0;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) index[i][j] = -1;
    }
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) {
        index[i][j] = n;
        pairs[n] = {i, j};
        ++n;
      }
    }
  }
};

constexpr PairTable kPairs{};

}  // namespace

int Wedge2::index(int i, int j) {
  assert(0 <= i && i < j && j < 7);
  return kPairs.index[i][j];
}

std::array<int, 2> Wedge2::pair(int idx) { return kPairs.pairs[idx]; }

Wedge2 wedge(const Vec7C& a, const Vec7C& b) {
  Wedge2 w;
  for (int n = 0; n < Wedge2::kDim; ++n) {
    const auto [i, j] = kPairs.pairs[n];
    w.coeffs()[n] = a[i] * b[j] - a[j] * b[i];
  }
  return w;
}

cplx wedge_inner(const Wedge2& w1, const Wedge2& w2) {
  return (w1.coeffs().array() * w2.coeffs().array()).sum();
}

SkewMat7 rho_iso(const Wedge2& w) {
  // R(e_i ^ e_j) sends e_i to e_j and e_j to -e_i.
  SkewMat7 m = SkewMat7::Zero();
  for (int n = 0; n < Wedge2::kDim; ++n) {
    const auto [i, j] = kPairs.pairs[n];
    m(j, i) += w.coeffs()[n];
    m(i, j) -= w.coeffs()[n];
  }
  return m;
}

Wedge2 rho_iso_inverse(const SkewMat7& a) {
  Wedge2 w;
  for (int n = 0; n < Wedge2::kDim; ++n) {
    const auto [i, j] = kPairs.pairs[n];
    w.coeffs()[n] = 0.5 * (a(j, i) - a(i, j));
  }
  return w;
}

}  // namespace g2harm
