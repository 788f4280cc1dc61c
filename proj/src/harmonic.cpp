#include "g2harm/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "detail.hpp"
#include "g2harm/errors.hpp"
#include "g2harm/euclid7.hpp"
#include "g2harm/random.hpp"

namespace g2harm {

cplx Jet::laplacian() const {
  cplx s(0.0);
  for (const cplx& v : d2) s += v;
  return s;
}

Jet operator+(const Jet& f, const Jet& g) {
  Jet r;
  r.value = f.value + g.value;
  for (int i = 0; i < kG2Dim; ++i) {
    r.d1[i] = f.d1[i] + g.d1[i];
    r.d2[i] = f.d2[i] + g.d2[i];
  }
  return r;
}

Jet operator*(cplx s, const Jet& f) {
  Jet r;
  r.value = s * f.value;
  for (int i = 0; i < kG2Dim; ++i) {
    r.d1[i] = s * f.d1[i];
    r.d2[i] = s * f.d2[i];
  }
  return r;
}

Jet operator*(const Jet& f, const Jet& g) {
  Jet r;
  r.value = f.value * g.value;
  for (int i = 0; i < kG2Dim; ++i) {
    r.d1[i] = f.d1[i] * g.value + f.value * g.d1[i];
    r.d2[i] = f.d2[i] * g.value + 2.0 * f.d1[i] * g.d1[i] + f.value * g.d2[i];
  }
  return r;
}

Jet operator/(const Jet& f, const Jet& g) {
  // 1/g: X(1/g) = -Xg/g^2, XX(1/g) = -XXg/g^2 + 2(Xg)^2/g^3
  const cplx inv = 1.0 / g.value;
  Jet recip;
  recip.value = inv;
  for (int i = 0; i < kG2Dim; ++i) {
    recip.d1[i] = -g.d1[i] * inv * inv;
    recip.d2[i] = -g.d2[i] * inv * inv + 2.0 * g.d1[i] * g.d1[i] * inv * inv * inv;
  }
  return f * recip;
}

cplx conformality(const Jet& f, const Jet& h) {
  cplx s(0.0);
  for (int i = 0; i < kG2Dim; ++i) s += f.d1[i] * h.d1[i];
  return s;
}

cplx eval(const EigenFunction& f, const G2Element& g) {
  return dot<cplx>(complexify(g.matrix()) * f.a, f.b);
}

cplx deriv(const EigenFunction& f, const G2Element& g, const Mat7R& x) {
  return dot<cplx>(complexify(g.matrix()) * (complexify(x) * f.a), f.b);
}

cplx deriv2(const EigenFunction& f, const G2Element& g, const Mat7R& x) {
  const Mat7C xc = complexify(x);
  return dot<cplx>(complexify(g.matrix()) * (xc * (xc * f.a)), f.b);
}

Jet jet(const EigenFunction& f, const G2Element& g, const G2Basis& basis) {
  // <g M a, b> = <M a, g^T b>
  const Vec7C gtb = complexify(g.matrix()).transpose() * f.b;
  Jet j;
  j.value = dot(f.a, gtb);
  for (int i = 0; i < kG2Dim; ++i) {
    const Mat7C x = complexify(basis[i]);
    const Vec7C xa = x * f.a;
    j.d1[i] = dot(xa, gtb);
    j.d2[i] = dot<cplx>(x * xa, gtb);
  }
  return j;
}

cplx fd_deriv(const GroupFunction& fn, const G2Element& g, const Mat7R& x, double h, int order) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_deriv: step must be positive");
  const G2Element plus = g * G2Element::trusted(expm(h * x));
  const G2Element minus = g * G2Element::trusted(expm(-h * x));
  switch (order) {
    case 1:
      return (fn(plus) - fn(minus)) / (2.0 * h);
    case 2:
      return (fn(plus) - 2.0 * fn(g) + fn(minus)) / (h * h);
    default:
      throw std::invalid_argument("fd_deriv: order must be 1 or 2");
  }
}

EigenFamily make_trial_family(const Vec7C& p, const G2Basis& basis) {
  EigenFamily fam;
  fam.p = p;
  for (int k = 0; k < 7; ++k) fam.members.push_back({unit<cplx>(k), p});
  fam.lambda = casimir_scalar(basis);
  fam.mu = kFamilyMu;
  return fam;
}

EigenFamily make_eigenfamily(const Vec7C& p, const G2Basis& basis) {
  if (!is_isotropic(p, 1e-12)) throw IsotropyError(std::abs(dot(p, p)));
  return make_trial_family(p, basis);
}

EigenFamily conjugate(const EigenFamily& fam, const G2Basis& basis) {
  return make_eigenfamily(fam.p.conjugate(), basis);
}

std::vector<Jet> member_jets(const EigenFamily& fam, const G2Element& g, const G2Basis& basis) {
  std::vector<Jet> jets;
  jets.reserve(fam.members.size());
  for (const EigenFunction& f : fam.members) jets.push_back(jet(f, g, basis));
  return jets;
}

PolyComposite::PolyComposite(PolyFn f) : f_(std::move(f)) {
  for (int k = 0; k < PolyFn::kVars; ++k) {
    grad_[k] = f_.partial(k);
    if (!grad_[k].is_zero()) arity_ = k + 1;
    for (int l = 0; l < PolyFn::kVars; ++l) hess_[k][l] = grad_[k].partial(l);
  }
}

namespace {

void require_members(int arity, std::size_t members) {
  if (static_cast<std::size_t>(arity) > members)
    throw std::out_of_range("polynomial uses more variables than the family has members");
}

}  // namespace

Jet PolyComposite::apply(std::span<const Jet> members) const {
  require_members(arity_, members.size());
  std::array<cplx, PolyFn::kVars> z{};
  const int n = static_cast<int>(std::min<std::size_t>(members.size(), PolyFn::kVars));
  for (int k = 0; k < n; ++k) z[k] = members[k].value;

  Jet out;
  out.value = f_.evaluate(z);
  for (int k = 0; k < PolyFn::kVars; ++k) {
    if (grad_[k].is_zero()) continue;
    const cplx dk = grad_[k].evaluate(z);
    for (int i = 0; i < kG2Dim; ++i) {
      out.d1[i] += dk * members[k].d1[i];
      out.d2[i] += dk * members[k].d2[i];
    }
    for (int l = 0; l < n; ++l) {
      if (hess_[k][l].is_zero()) continue;
      const cplx dkl = hess_[k][l].evaluate(z);
      for (int i = 0; i < kG2Dim; ++i) out.d2[i] += dkl * members[k].d1[i] * members[l].d1[i];
    }
  }
  return out;
}

RationalMap RationalMap::make(PolyFn p, PolyFn q) {
  if (!p.is_homogeneous() || !q.is_homogeneous()) {
    throw RationalMapError(RationalMapFault::inhomogeneous, "numerator and denominator must be homogeneous");
  }
  if (p.is_zero() || q.is_zero() || p.degree() == 0 || q.degree() == 0) {
    throw RationalMapError(RationalMapFault::zero_degree, "numerator and denominator need positive degree");
  }
  if (p.degree() != q.degree()) {
    throw RationalMapError(RationalMapFault::degree_mismatch, "numerator and denominator degrees differ");
  }
  // Cauchy-Schwarz on coefficient vectors: equality iff dependent.
  cplx pq(0.0);
  double pp = 0.0;
  double qq = 0.0;
  for (const auto& [e, c] : p.terms()) {
    pp += std::norm(c);
    if (auto it = q.terms().find(e); it != q.terms().end()) pq += std::conj(c) * it->second;
  }
  for (const auto& [e, c] : q.terms()) qq += std::norm(c);
  if (pp * qq - std::norm(pq) <= 1e-12 * pp * qq) {
    throw RationalMapError(RationalMapFault::linearly_dependent, "numerator and denominator are linearly dependent");
  }
  return RationalMap(std::move(p), std::move(q));
}

cplx RationalMap::denominator_value(std::span<const Jet> members) const {
  require_members(std::max(p_.arity(), q_.arity()), members.size());
  std::array<cplx, PolyFn::kVars> z{};
  for (std::size_t k = 0; k < std::min<std::size_t>(members.size(), PolyFn::kVars); ++k) z[k] = members[k].value;
  return q_.poly().evaluate(z);
}

Jet RationalMap::apply(std::span<const Jet> members, double pole_floor) const {
  const Jet q = q_.apply(members);
  if (!(std::abs(q.value) >= pole_floor)) throw PoleError("rational map evaluated inside the pole guard");
  return p_.apply(members) / q;
}

cplx laplacian(const EigenFunction& f, const G2Element& g, const G2Basis& basis) {
  cplx s(0.0);
  for (const Mat7R& x : basis) s += deriv2(f, g, x);
  return s;
}

cplx laplacian(const PolyFn& f, const EigenFamily& fam, const G2Element& g, const G2Basis& basis) {
  const auto jets = member_jets(fam, g, basis);
  return PolyComposite(f).apply(jets).laplacian();
}

cplx laplacian(const RationalMap& m, const EigenFamily& fam, const G2Element& g, const G2Basis& basis,
               double pole_floor) {
  const auto jets = member_jets(fam, g, basis);
  return m.apply(jets, pole_floor).laplacian();
}

cplx conformality(const EigenFunction& f1, const EigenFunction& f2, const G2Element& g, const G2Basis& basis) {
  cplx s(0.0);
  for (const Mat7R& x : basis) s += deriv(f1, g, x) * deriv(f2, g, x);
  return s;
}

cplx conformality(const PolyFn& f1, const PolyFn& f2, const EigenFamily& fam, const G2Element& g,
                  const G2Basis& basis) {
  const auto jets = member_jets(fam, g, basis);
  return conformality(PolyComposite(f1).apply(jets), PolyComposite(f2).apply(jets));
}

cplx conformality(const RationalMap& m1, const RationalMap& m2, const EigenFamily& fam, const G2Element& g,
                  const G2Basis& basis, double pole_floor) {
  const auto jets = member_jets(fam, g, basis);
  return conformality(m1.apply(jets, pole_floor), m2.apply(jets, pole_floor));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

SampleResidual eigenfamily_sample(const EigenFamily& fam, const G2Basis& basis, std::uint64_t seed,
                                  std::uint64_t index) {
  SampleResidual r;
  if (fam.members.empty()) return r;
  const G2Element g = random_element(sample_seed(seed, index), basis);
  const auto jets = member_jets(fam, g, basis);
  for (std::size_t i = 0; i < jets.size(); ++i) {
    r.laplacian = std::max(r.laplacian, std::abs(jets[i].laplacian() - fam.lambda * jets[i].value));
    for (std::size_t j = i; j < jets.size(); ++j) {
      const cplx k = conformality(jets[i], jets[j]);
      r.conformality = std::max(r.conformality, std::abs(k - fam.mu * jets[i].value * jets[j].value));
    }
  }
  return r;
}

namespace {

/// Runs body(k) for k in [0, n) under OpenMP, rethrowing the first exception.
template <typename Body>
void parallel_samples(int n, Body body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(g2harm_sample_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

QReport check_eigenfamily(const EigenFamily& fam, const G2Basis& basis, int n_samples, std::uint64_t seed,
                          double tol) {
  if (n_samples < 1) throw std::invalid_argument("check_eigenfamily: need at least one sample");
  std::vector<SampleResidual> residuals(n_samples);
  parallel_samples(n_samples, [&](int k) { residuals[k] = eigenfamily_sample(fam, basis, seed, k); });
  return detail::eigenfamily_report(fam, n_samples, seed, tol, residuals);
}

SymmetricPower sym_power(const EigenFamily& fam, int n) {
  if (n < 1) throw std::invalid_argument("sym_power: degree must be at least 1");
  SymmetricPower out;
  out.degree = n;
  out.laplacian_eigenvalue = n * (fam.lambda + (n - 1) * fam.mu);
  out.conformality_eigenvalue = static_cast<double>(n) * n * fam.mu;
  const int vars = static_cast<int>(std::min<std::size_t>(fam.members.size(), PolyFn::kVars));
  // exponent vectors of total degree n in lexicographically decreasing order
  PolyFn::Exponents e{};
  auto emit = [&](auto&& self, int var, int remaining) -> void {
    if (var == vars - 1) {
      e[var] = remaining;
      out.monomials.push_back(PolyFn::monomial(e));
      e[var] = 0;
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[var] = a;
      self(self, var + 1, remaining - a);
    }
    e[var] = 0;
  };
  if (vars > 0) emit(emit, 0, n);
  return out;
}

QReport check_harmonic_morphism(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis, int n_samples,
                                std::uint64_t seed, double tol) {
  if (n_samples < 1) throw std::invalid_argument("check_harmonic_morphism: need at least one sample");
  std::vector<double> denominators(n_samples);
  parallel_samples(n_samples,
                   [&](int k) { denominators[k] = detail::morphism_denominator(m, fam, basis, seed, k); });
  const double floor = detail::pole_floor(m, denominators);

  std::vector<std::optional<SampleResidual>> per_sample(n_samples);
  parallel_samples(n_samples, [&](int k) {
    if (denominators[k] >= floor) per_sample[k] = detail::morphism_sample(m, fam, basis, seed, k, floor);
  });
  std::vector<SampleResidual> admitted;
  for (const auto& r : per_sample) {
    if (r) admitted.push_back(*r);
  }
  return detail::morphism_report(fam, n_samples, seed, tol, admitted);
}

namespace detail {

double morphism_denominator(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis,
                            std::uint64_t seed, std::uint64_t index) {
  const G2Element g = random_element(sample_seed(seed, index), basis);
  std::vector<Jet> values;
  values.reserve(fam.members.size());
  for (const EigenFunction& f : fam.members) values.push_back(Jet::constant(eval(f, g)));
  return std::abs(m.denominator_value(values));
}

SampleResidual morphism_sample(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis,
                               std::uint64_t seed, std::uint64_t index, double pole_floor) {
  const G2Element g = random_element(sample_seed(seed, index), basis);
  const auto jets = member_jets(fam, g, basis);
  const Jet f = m.apply(jets, pole_floor);
  return {std::abs(f.laplacian()), std::abs(conformality(f, f))};
}

double pole_floor(const RationalMap& m, std::vector<double> denominators) {
  const auto mid = denominators.begin() + static_cast<std::ptrdiff_t>((denominators.size() - 1) / 2);
  std::nth_element(denominators.begin(), mid, denominators.end());
  // Absolute floor separates a denominator that vanishes on the whole family
  // (roundoff-sized values) from a genuine pole.
  double scale = 0.0;
  for (const auto& [e, c] : m.denominator().terms()) scale += std::abs(c);
  return std::max(kPoleGuardFraction * *mid, 1e-8 * scale);
}

QReport eigenfamily_report(const EigenFamily& fam, int n_samples, std::uint64_t seed, double tol,
                           const std::vector<SampleResidual>& residuals) {
  QReport r;
  r.check = "eigenfamily";
  r.sample_count = n_samples;
  r.admitted = n_samples;
  r.seed = seed;
  r.tol = tol;
  for (const SampleResidual& s : residuals) {
    r.laplacian_error = std::max(r.laplacian_error, s.laplacian);
    r.conformality_error = std::max(r.conformality_error, s.conformality);
  }
  r.max_abs_error = std::max(r.laplacian_error, r.conformality_error);
  r.verdict = r.max_abs_error <= tol ? Verdict::pass : Verdict::fail;
  r.lambda = fam.lambda;
  r.mu = fam.mu;
  return r;
}

QReport morphism_report(const EigenFamily& fam, int n_samples, std::uint64_t seed, double tol,
                        const std::vector<SampleResidual>& admitted) {
  QReport r;
  r.check = "harmonic_morphism";
  r.sample_count = n_samples;
  r.admitted = static_cast<int>(admitted.size());
  r.seed = seed;
  r.tol = tol;
  for (const SampleResidual& s : admitted) {
    r.laplacian_error = std::max(r.laplacian_error, s.laplacian);
    r.conformality_error = std::max(r.conformality_error, s.conformality);
  }
  r.max_abs_error = std::max(r.laplacian_error, r.conformality_error);
  if (admitted.empty()) {
    r.verdict = Verdict::inconclusive;
  } else {
    r.verdict = r.max_abs_error <= tol ? Verdict::pass : Verdict::fail;
  }
  r.lambda = fam.lambda;
  r.mu = fam.mu;
  return r;
}

}  // namespace detail

}  // namespace g2harm
