#include "g2harm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "g2harm/euclid7.hpp"
#include "g2harm/group.hpp"
#include "g2harm/harmonic.hpp"
#include "g2harm/random.hpp"
#include "g2harm/wedge.hpp"

namespace g2harm {

bool CheckResult::pass() const {
  switch (bound) {
    case Bound::upper:
      return value <= hi;
    case Bound::lower:
      return value > lo;
    case Bound::window:
      return lo <= value && value <= hi;
  }
  return false;
}

namespace {

CheckResult upper(std::string name, std::string identity, double value, double tol, const VerifyConfig& config,
                  int samples) {
  CheckResult r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.value = value;
  r.bound = CheckResult::Bound::upper;
  r.hi = config.tol.value_or(tol);
  r.samples = samples;
  return r;
}

CheckResult lower(std::string name, std::string identity, double value, double lo, int samples) {
  CheckResult r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.value = value;
  r.bound = CheckResult::Bound::lower;
  r.lo = lo;
  r.samples = samples;
  return r;
}

CheckResult window(std::string name, std::string identity, double value, double lo, double hi, int samples) {
  CheckResult r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.value = value;
  r.bound = CheckResult::Bound::window;
  r.lo = lo;
  r.hi = hi;
  r.samples = samples;
  return r;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

int numerical_rank(const Eigen::MatrixXd& columns, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) rank += s[i] > tol ? 1 : 0;
  return rank;
}

Eigen::Matrix<double, 49, 1> flatten(const Mat7R& m) { return Eigen::Map<const Eigen::Matrix<double, 49, 1>>(m.data()); }

Mat7R r_basis(int n) {
  const auto [i, j] = Wedge2::pair(n);
  Wedge2 w;
  w(i, j) = 1.0;
  return rho_iso(w).real();
}

}  // namespace

std::vector<CheckResult> verify_euclid7(const VerifyConfig& config) {
  constexpr int n = 1000;
  Sampler s(sample_seed(config.seed, 1));
  double anti = 0.0, skew = 0.0, dbl = 0.0, norm = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec7R u = s.unit_real(), v = s.unit_real(), w = s.unit_real();
    const Vec7C uc = s.unit_complex(), vc = s.unit_complex();
    anti = std::max(anti, max_abs(cross(uc, vc) + cross(vc, uc)));
    skew = std::max(skew, std::abs(dot(cross(v, u), w) + dot(u, cross(v, w))));
    const Vec7R lhs = cross(u, cross(v, w)) + cross(v, cross(u, w));
    const Vec7R rhs = dot(u, w) * v + dot(v, w) * u - 2.0 * dot(u, v) * w;
    dbl = std::max(dbl, max_abs(lhs - rhs));
    const double uv = dot(u, v);
    norm = std::max(norm, std::abs(cross(u, v).squaredNorm() - (u.squaredNorm() * v.squaredNorm() - uv * uv)));
  }
  return {
      upper("cross.antisymmetry", "u x v + v x u = 0", anti, 1e-13, config, n),
      upper("cross.skew_adjoint", "<v x u, w> = -<u, v x w>", skew, 1e-12, config, n),
      upper("cross.double_product", "u x (v x w) + v x (u x w) = <u,w>v + <v,w>u - 2<u,v>w", dbl, 1e-12, config, n),
      upper("cross.norm", "|u x v|^2 = |u|^2 |v|^2 - <u,v>^2", norm, 1e-12, config, n),
  };
}

std::vector<CheckResult> verify_wedge(const VerifyConfig& config) {
  constexpr int n = 500;
  Sampler s(sample_seed(config.seed, 2));
  double inner = 0.0, pairing = 0.0, isometry = 0.0, polar = 0.0, skewness = 0.0, lgram = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec7C a = s.unit_complex(), b = s.unit_complex(), c = s.unit_complex(), d = s.unit_complex();
    inner = std::max(inner, std::abs(wedge_inner(wedge(a, b), wedge(c, d)) -
                                     (dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c))));
    const Mat7C A = complexify(s.unit_skew());
    const Mat7C Rab = rho_iso(wedge(a, b));
    skewness = std::max(skewness, skew_residual(Rab));
    pairing = std::max(pairing, std::abs(mat_inner(A, Rab) - 2.0 * dot<cplx>(A * a, b)));
    isometry = std::max(isometry, std::abs(mat_inner(Rab, rho_iso(wedge(c, d))) -
                                           2.0 * wedge_inner(wedge(a, b), wedge(c, d))));
    const Vec7R ar = s.unit_real(), br = s.unit_real(), ur = s.unit_real(), vr = s.unit_real();
    const Vec7C a7 = complexify(ar), b7 = complexify(br), u7 = complexify(ur), v7 = complexify(vr);
    const double lhs = dot(cross(ar, ur), cross(br, vr)) + dot(cross(ar, vr), cross(br, ur));
    const cplx rhs = wedge_inner(wedge(a7, u7), wedge(b7, v7)) + wedge_inner(wedge(a7, v7), wedge(b7, u7));
    polar = std::max(polar, std::abs(lhs - rhs));
    const Vec7R v = s.unit_real(), w = s.unit_real();
    lgram = std::max(lgram, std::abs(mat_inner<double>(lmap(v), lmap(w)) - 6.0 * dot(v, w)));
  }

  Eigen::MatrixXd cols(49, Wedge2::kDim);
  for (int m = 0; m < Wedge2::kDim; ++m) cols.col(m) = flatten(r_basis(m));
  const int rank = numerical_rank(cols, 1e-9);

  CheckResult r_rank = window("wedge.r_injective", "rank{R(e_i ^ e_j)} = 21", rank, 21, 21, Wedge2::kDim);
  return {
      upper("wedge.inner_decomposable", "<<a^b, c^d>> = <a,c><b,d> - <a,d><b,c>", inner, 1e-12, config, n),
      upper("wedge.r_skew", "R(a^b)^T = -R(a^b)", skewness, 1e-13, config, n),
      upper("wedge.skew_pairing", "<A, R(a^b)> = 2 <A a, b>", pairing, 1e-12, config, n),
      upper("wedge.r_isometry", "<R(a^b), R(c^d)> = 2 <<a^b, c^d>>", isometry, 1e-12, config, n),
      upper("wedge.cross_polarization",
            "<a x u, b x v> + <a x v, b x u> = <<a^u, b^v>> + <<a^v, b^u>>", polar, 1e-12, config, n),
      upper("wedge.lmap_gram", "<L_v, L_w> = 6 <v, w>", lgram, 1e-12, config, n),
      r_rank,
  };
}

std::vector<CheckResult> verify_g2alg(const G2Basis& basis, const VerifyConfig& config) {
  std::vector<CheckResult> out;
  const BasisDiagnostics diag = diagnose(basis, 200, sample_seed(config.seed, 3));
  out.push_back(upper("g2.gram", "<X_i, X_j> = delta_ij", diag.gram_residual, 1e-10, config, kG2Dim));
  out.push_back(upper("g2.derivation", "X(v x w) = (X v) x w + v x (X w)", diag.derivation_residual, 1e-10, config, 200));
  out.push_back(upper("g2.closure", "[X_i, X_j] in span{X_k}", diag.closure_residual, 1e-10, config, kG2Dim));
  out.push_back(upper("g2.orthogonal_to_lmap", "<X_i, L_{e_k}> = 0", diag.rw_overlap, 1e-12, config, kG2Dim));

  // span{L_{e_k}} is 7-dimensional and, with g2, spans all of so(7)
  Eigen::MatrixXd lcols(49, 7);
  for (int k = 0; k < 7; ++k) lcols.col(k) = flatten(lmap<double>(unit(k)));
  out.push_back(window("g2.lmap_rank", "dim span{L_{e_k}} = 7", numerical_rank(lcols, 1e-9), 7, 7, 7));
  double spanning = 0.0;
  Eigen::MatrixXd gcols(49, Wedge2::kDim);
  for (int m = 0; m < Wedge2::kDim; ++m) {
    const Mat7R r = r_basis(m);
    Mat7R rest = r;
    for (const Mat7R& x : basis) rest -= mat_inner<double>(x, r) * x;
    for (int k = 0; k < 7; ++k) {
      const Mat7R l = lmap<double>(unit(k));
      rest -= mat_inner<double>(l, r) / 6.0 * l;
    }
    spanning = std::max(spanning, max_abs(rest));
    gcols.col(m) = flatten(project_g2<double>(r));
  }
  out.push_back(upper("g2.complement", "so(7) = g2 (+) span{L_{e_k}}", spanning, 1e-12, config, Wedge2::kDim));
  out.push_back(window("g2.projection_rank", "rank P_g2 on R(Lambda^2) = 14", numerical_rank(gcols, 1e-9), 14, 14,
                       Wedge2::kDim));

  Sampler s(sample_seed(config.seed, 4));
  constexpr int n = 500;
  double third = 0.0, split = 0.0, idem = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec7R a = s.unit_real(), b = s.unit_real();
    const Mat7R r = rho_iso(wedge(complexify(a), complexify(b))).real();
    third = std::max(third, max_abs(project_rw<double>(r) - lmap<double>(cross(a, b)) / 3.0));
    const Mat7R A = s.unit_skew();
    const Mat7R pg = project_g2<double>(A), pr = project_rw<double>(A);
    split = std::max({split, max_abs(pg + pr - A), std::abs(mat_inner<double>(pg, pr))});
    idem = std::max({idem, max_abs(project_rw<double>(pr) - pr), max_abs(project_g2<double>(pg) - pg)});
  }
  out.push_back(upper("g2.projection_third", "P_RW(R(a^b)) = 1/3 L_{a x b}", third, 1e-12, config, n));
  out.push_back(upper("g2.projection_split", "P_g2 + P_RW = id, <P_g2 A, P_RW A> = 0", split, 1e-12, config, n));
  out.push_back(upper("g2.projection_idempotent", "P^2 = P", idem, 1e-12, config, n));

  const CasimirReport cas = casimir_report(basis);
  CheckResult c = upper("g2.casimir_scalar", "sum_i X_i^2 = -2 I", std::max({cas.off_diagonal, cas.diagonal_spread,
                                                                                std::abs(cas.scalar + 2.0)}),
                        1e-10, config, kG2Dim);
  c.details = {{"lambda", cas.scalar}, {"off_diagonal", cas.off_diagonal}, {"diagonal_spread", cas.diagonal_spread}};
  out.push_back(c);

  constexpr int nq = 1000;
  double qdiff = 0.0, iso = 0.0, factor_dev = 0.0;
  double ratio_num = 0.0, ratio_den = 0.0;
  for (int k = 0; k < nq; ++k) {
    const Vec7C a = s.unit_complex(), b = s.unit_complex(), cc = s.unit_complex(), d = s.unit_complex();
    const cplx qs = q_sum(a, b, cc, d, basis);
    qdiff = std::max(qdiff, std::abs(qs - q_closed(a, b, cc, d)));
    const cplx pp = projection_pairing(a, b, cc, d);
    factor_dev = std::max(factor_dev, std::abs(qs - 0.5 * pp));
    ratio_num += std::abs(qs);
    ratio_den += std::abs(pp);
    iso = std::max(iso, std::abs(q_closed(a, cc, b, cc) - kQMu * wedge_inner(wedge(a, cc), wedge(b, cc))));
  }
  out.push_back(upper("g2.q_sum_closed", "sum_i <X_i a,b><X_i c,d> = 1/2 <<a^b,c^d>> - 1/6 <a x b, c x d>", qdiff,
                      1e-10, config, nq));
  CheckResult f = upper("g2.q_projection_factor", "Q(a^b, c^d) = 1/2 <<P_g2(a^b), c^d>>", factor_dev, 1e-10, config, nq);
  f.details = {{"measured_factor", ratio_num / ratio_den}};
  out.push_back(f);
  out.push_back(upper("g2.q_decomposable_third", "Q(a^p, b^p) = 1/3 <<a^p, b^p>> for all complex a, b, p", iso,
                      1e-12, config, nq));
  return out;
}

std::vector<CheckResult> verify_group(const G2Basis& basis, const VerifyConfig& config) {
  const int n = config.samples;
  double orth = 0.0, compat = 0.0, rep = 0.0, frame = 0.0, expm_inv = 0.0;
  Sampler s(sample_seed(config.seed, 5));
  for (int k = 0; k < n; ++k) {
    const G2Element g = random_element(sample_seed(config.seed, 1000 + k), basis);
    orth = std::max(orth, orthogonality_residual(g.matrix()));
    compat = std::max(compat, cross_compat_residual(g.matrix()));
    const Vec7R v = s.unit_real();
    const Mat7R& m = g.matrix();
    rep = std::max(rep, max_abs(m * lmap(v) * m.transpose() - lmap<double>(m * v)));
    for (int i = 0; i < kG2Dim; ++i) {
      for (int j = i; j < kG2Dim; ++j) {
        const double target = i == j ? 1.0 : 0.0;
        const double ip = mat_inner<double>(m * basis[i] * m.transpose(), m * basis[j] * m.transpose());
        frame = std::max(frame, std::abs(ip - target));
      }
    }
    const Mat7R a = s.unit_skew() * 3.0;
    expm_inv = std::max(expm_inv, max_abs(expm(a) * expm(-a) - Mat7R::Identity()));
  }
  const double generic = cross_compat_residual(random_rotation(sample_seed(config.seed, 6)));
  return {
      upper("group.orthogonality", "g^T g = I", orth, kOrthogonalityTol, config, n),
      upper("group.cross_compatibility", "g(v x w) = (g v) x (g w)", compat, kCrossCompatTol, config, n),
      upper("group.adjoint_lmap", "g L_v g^-1 = L_{g v}", rep, 1e-9, config, n),
      upper("group.conjugated_frame", "<g X_i g^-1, g X_j g^-1> = delta_ij", frame, 1e-10, config, n),
      upper("group.expm_inverse", "expm(A) expm(-A) = I", expm_inv, 1e-12, config, n),
      lower("group.generic_rotation_rejected", "generic SO(7) rotation breaks the cross product", generic, 1e-6, 1),
  };
}

std::vector<CheckResult> verify_harmonic(const G2Basis& basis, const VerifyConfig& config) {
  std::vector<CheckResult> out;
  const int n = config.samples;
  const Vec7C p0 = unit<cplx>(0) + cplx(0.0, 1.0) * unit<cplx>(1);
  const EigenFamily fam = make_eigenfamily(p0, basis);

  auto from_report = [&](const std::string& name, const std::string& identity, const QReport& r, double tol) {
    CheckResult c = upper(name, identity, r.max_abs_error, tol, config, r.admitted);
    c.details = {{"lambda", r.lambda.value_or(0.0)},
                 {"mu", r.mu.value_or(0.0)},
                 {"laplacian_error", r.laplacian_error},
                 {"conformality_error", r.conformality_error}};
    return c;
  };

  out.push_back(from_report("harmonic.eigenfamily", "Delta phi = lambda phi, kappa(phi, psi) = mu phi psi on E_p",
                            check_eigenfamily(fam, basis, n, config.seed, 1e-9), 1e-9));
  out.push_back(from_report("harmonic.conjugate_family", "conj(E_p) is an eigenfamily",
                            check_eigenfamily(conjugate(fam, basis), basis, n, config.seed, 1e-9), 1e-9));
  Sampler s(sample_seed(config.seed, 7));
  const EigenFamily random_fam = make_eigenfamily(isotropic_vector(s.unit_real(), s.unit_real()), basis);
  out.push_back(from_report("harmonic.random_isotropic_family", "E_p is an eigenfamily for random isotropic p",
                            check_eigenfamily(random_fam, basis, n, config.seed + 1, 1e-9), 1e-9));
  out.push_back(lower("harmonic.eigenvalue_signs", "lambda < 0 and mu < 0 (value = -max(lambda, mu))",
                      -std::max(fam.lambda, fam.mu), 0.0, 1));

  double product = 0.0, polar = 0.0, adinv = 0.0, imag = 0.0;
  const PolyFn z1 = PolyFn::variable(0), z2 = PolyFn::variable(1);
  const Vec7C coeffs = s.unit_complex();
  for (int k = 0; k < n; ++k) {
    const G2Element g = random_element(sample_seed(config.seed, 2000 + k), basis);
    const auto jets = member_jets(fam, g, basis);
    const Jet& f = jets[0];
    const Jet& h = jets[1];
    const cplx lap = PolyComposite(z1 * z2).apply(jets).laplacian();
    product = std::max(product, std::abs(lap - (h.value * f.laplacian() + 2.0 * conformality(f, h) +
                                                f.value * h.laplacian())));
    const Jet sum = f + h;
    polar = std::max(polar, std::abs(conformality(f, h) - 0.5 * (conformality(sum, sum) - conformality(f, f) -
                                                                 conformality(h, h))));
    const Vec7C a = s.unit_complex(), b = s.unit_complex(), c = s.unit_complex(), d = s.unit_complex();
    const Vec7C ga = complexify(g.matrix()) * a, gc = complexify(g.matrix()) * c;
    adinv = std::max(adinv, std::abs(conformality(EigenFunction{a, b}, EigenFunction{c, d}, g, basis) -
                                     q_closed(ga, b, gc, d)));
    cplx combo(0.0);
    for (int m = 0; m < 7; ++m) combo += coeffs[m] * jets[m].value;
    imag = std::max(imag, std::abs(combo.imag()));
  }
  out.push_back(upper("harmonic.product_rule", "Delta(phi psi) = psi Delta phi + 2 kappa(phi, psi) + phi Delta psi",
                      product, 1e-9, config, n));
  out.push_back(upper("harmonic.polarization",
                      "kappa(phi, psi) = 1/2 (kappa(phi+psi, phi+psi) - kappa(phi, phi) - kappa(psi, psi))", polar,
                      1e-10, config, n));
  out.push_back(upper("harmonic.ad_invariance", "kappa(phi_ab, phi_cd)(g) = Q(g a, b, g c, d)", adinv, 1e-9, config, n));
  out.push_back(lower("harmonic.not_real_valued", "nonzero members of span E_p are not real-valued (max |Im|)", imag,
                      1e-6, n));

  // symmetric powers: random elements of the k-th power, k = 1..3
  std::array<PolyFn, 4> power_elems;
  for (int k = 1; k <= 3; ++k) {
    const SymmetricPower sp = sym_power(fam, k);
    PolyFn f;
    const double scale = 1.0 / std::sqrt(static_cast<double>(sp.monomials.size()));
    for (const PolyFn& mono : sp.monomials) f += cplx(s.normal() * scale, s.normal() * scale) * mono;
    power_elems[k] = f;
  }
  std::array<PolyComposite, 3> composites = {PolyComposite(power_elems[1]), PolyComposite(power_elems[2]),
                                             PolyComposite(power_elems[3])};
  const int n_sym = std::min(n, 50);
  double sym_lap = 0.0, sym_kappa = 0.0;
  for (int k = 0; k < n_sym; ++k) {
    const G2Element g = random_element(sample_seed(config.seed, 3000 + k), basis);
    const auto jets = member_jets(fam, g, basis);
    std::array<Jet, 3> fj = {composites[0].apply(jets), composites[1].apply(jets), composites[2].apply(jets)};
    for (int a = 1; a <= 3; ++a) {
      const Jet& fa = fj[a - 1];
      sym_lap = std::max(sym_lap, std::abs(fa.laplacian() - a * (fam.lambda + (a - 1) * fam.mu) * fa.value));
      for (int b = 1; b <= 3; ++b) {
        const Jet& fb = fj[b - 1];
        sym_kappa = std::max(sym_kappa, std::abs(conformality(fa, fb) - a * b * fam.mu * fa.value * fb.value));
      }
    }
  }
  out.push_back(upper("harmonic.sym_power_laplacian", "Delta phi = k(lambda + (k-1) mu) phi on the k-th power",
                      sym_lap, 1e-8, config, n_sym));
  out.push_back(upper("harmonic.sym_power_conformality", "kappa(phi, psi) = k l mu phi psi", sym_kappa, 1e-8, config,
                      n_sym));

  const RationalMap m1 = RationalMap::make(PolyFn::parse("z1"), PolyFn::parse("z2"));
  const RationalMap m2 = RationalMap::make(PolyFn::parse("z1^2 + z2*z3"), PolyFn::parse("z4^2"));
  out.push_back(from_report("harmonic.morphism_linear", "Delta(z1/z2) = 0 and kappa(z1/z2, z1/z2) = 0",
                            check_harmonic_morphism(m1, fam, basis, n, config.seed, 1e-7), 1e-7));
  out.push_back(from_report("harmonic.morphism_quadratic",
                            "Delta(F) = 0 and kappa(F, F) = 0 for F = (z1^2 + z2 z3)/z4^2",
                            check_harmonic_morphism(m2, fam, basis, n, config.seed, 1e-7), 1e-7));
  const EigenFamily bad = make_trial_family(unit<cplx>(0), basis);
  const QReport neg = check_harmonic_morphism(m1, bad, basis, n, config.seed, 1e-7);
  out.push_back(lower("harmonic.morphism_negative_control", "non-isotropic b breaks kappa(z1/z2, z1/z2) = 0",
                      neg.conformality_error, 1e-3, neg.admitted));

  // exact derivatives against central differences
  const double h1 = config.h;
  const double h2 = 10.0 * config.h;
  const int n_fd = std::min(n, 20);
  double e1 = 0.0, e2 = 0.0;
  double r1[2] = {0.0, 0.0}, r2[2] = {0.0, 0.0};
  for (int k = 0; k < n_fd; ++k) {
    const G2Element g = random_element(sample_seed(config.seed, 4000 + k), basis);
    const EigenFunction phi{s.unit_complex(), s.unit_complex()};
    const GroupFunction fn = [&phi](const G2Element& x) { return eval(phi, x); };
    for (const Mat7R& x : basis) {
      const cplx d1 = deriv(phi, g, x);
      const cplx d2 = deriv2(phi, g, x);
      e1 = std::max(e1, std::abs(d1 - fd_deriv(fn, g, x, h1, 1)));
      e2 = std::max(e2, std::abs(d2 - fd_deriv(fn, g, x, h2, 2)));
      for (int half = 0; half < 2; ++half) {
        const double scale = half == 0 ? 1.0 : 0.5;
        r1[half] += std::abs(d1 - fd_deriv(fn, g, x, 10.0 * h1 * scale, 1));
        r2[half] += std::abs(d2 - fd_deriv(fn, g, x, 10.0 * h2 * scale, 2));
      }
    }
  }
  out.push_back(upper("harmonic.fd_first", "X phi = central difference, step h", e1, 1e-7, config, n_fd));
  out.push_back(upper("harmonic.fd_second", "X X phi = central second difference, step 10 h", e2, 1e-5, config, n_fd));
  out.push_back(window("harmonic.fd_first_convergence", "error(H)/error(H/2) ~ 4, H = 10 h", r1[0] / r1[1], 3.5, 4.5,
                       n_fd));
  out.push_back(window("harmonic.fd_second_convergence", "error(H)/error(H/2) ~ 4, H = 100 h", r2[0] / r2[1], 3.5,
                       4.5, n_fd));
  return out;
}

std::vector<CheckResult> verify_all(const G2Basis& basis, const VerifyConfig& config) {
  std::vector<CheckResult> all;
  for (auto part : {verify_euclid7(config), verify_wedge(config), verify_g2alg(basis, config),
                    verify_group(basis, config), verify_harmonic(basis, config)}) {
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace g2harm
