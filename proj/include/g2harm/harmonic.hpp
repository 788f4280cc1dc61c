#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g2harm/g2alg.hpp"
#include "g2harm/group.hpp"
#include "g2harm/polyfn.hpp"
#include "g2harm/types.hpp"

namespace g2harm {

/// Family-level conformality eigenvalue: kappa(phi, psi) = -1/3 phi psi on E_p.
inline constexpr double kFamilyMu = -kQMu;

/// phi_ab(g) = <g a, b>.
struct EigenFunction {
  Vec7C a;
  Vec7C b;
};

/// Value and derivatives of a function along the basis directions at one
/// point g: d1[i] = X_i f (g), d2[i] = X_i X_i f (g).
struct Jet {
  cplx value{0.0};
  std::array<cplx, kG2Dim> d1{};
  std::array<cplx, kG2Dim> d2{};

  static Jet constant(cplx c) {
    Jet j;
    j.value = c;
    return j;
  }

  /// sum_i X_i X_i f.
  cplx laplacian() const;

  friend Jet operator+(const Jet& f, const Jet& g);
  friend Jet operator*(cplx s, const Jet& f);
  friend Jet operator*(const Jet& f, const Jet& g);
  /// Quotient rule; the caller guards against g.value == 0.
  friend Jet operator/(const Jet& f, const Jet& g);
};

/// sum_i (X_i f)(X_i h).
cplx conformality(const Jet& f, const Jet& h);

cplx eval(const EigenFunction& f, const G2Element& g);
/// Left-invariant derivative along X: <g X a, b>.
cplx deriv(const EigenFunction& f, const G2Element& g, const Mat7R& x);
/// <g X^2 a, b>.
cplx deriv2(const EigenFunction& f, const G2Element& g, const Mat7R& x);

Jet jet(const EigenFunction& f, const G2Element& g, const G2Basis& basis);

using GroupFunction = std::function<cplx(const G2Element&)>;

/// Central differences of fn along t -> g expm(tX).
///   order 1: (fn(g e^{hX}) - fn(g e^{-hX})) / 2h
///   order 2: (fn(g e^{hX}) - 2 fn(g) + fn(g e^{-hX})) / h^2
/// Throws std::invalid_argument unless h > 0 and order is 1 or 2.
cplx fd_deriv(const GroupFunction& fn, const G2Element& g, const Mat7R& x, double h, int order);

inline constexpr double kDefaultFdStep1 = 1e-4;
inline constexpr double kDefaultFdStep2 = 1e-3;

/// phi_{e_k p}, k = 1..7, with the eigenvalues they are expected to carry.
struct EigenFamily {
  Vec7C p;
  std::vector<EigenFunction> members;
  double lambda = 0.0;
  double mu = kFamilyMu;
};

/// Throws IsotropyError (carrying |<p,p>|) unless |<p,p>| <= 1e-12.
EigenFamily make_eigenfamily(const Vec7C& p, const G2Basis& basis);

/// Same construction without the isotropy requirement, for negative controls.
EigenFamily make_trial_family(const Vec7C& p, const G2Basis& basis);

/// Family built on conj(p); its members are the complex conjugates of the originals.
EigenFamily conjugate(const EigenFamily& fam, const G2Basis& basis);

std::vector<Jet> member_jets(const EigenFamily& fam, const G2Element& g, const G2Basis& basis);

/// Composite F(phi_1..phi_7) with exact symbolic first and second partials.
class PolyComposite {
 public:
  explicit PolyComposite(PolyFn f);

  const PolyFn& poly() const { return f_; }
  /// One past the highest variable index that actually occurs.
  int arity() const { return arity_; }
  /// Chain rule: X F = sum_k dF_k X phi_k,
  /// X X F = sum_k dF_k X X phi_k + sum_kl d2F_kl (X phi_k)(X phi_l).
  Jet apply(std::span<const Jet> members) const;

 private:
  PolyFn f_;
  int arity_ = 0;
  std::array<PolyFn, PolyFn::kVars> grad_;
  std::array<std::array<PolyFn, PolyFn::kVars>, PolyFn::kVars> hess_;
};

/// P/Q with P, Q homogeneous of the same positive degree and linearly independent.
class RationalMap {
 public:
  /// Throws RationalMapError naming the violated condition.
  static RationalMap make(PolyFn p, PolyFn q);

  const PolyFn& numerator() const { return p_.poly(); }
  const PolyFn& denominator() const { return q_.poly(); }
  int degree() const { return p_.poly().degree(); }

  /// Denominator value only. Like apply, throws std::out_of_range when the
  /// map uses more variables than there are members.
  cplx denominator_value(std::span<const Jet> members) const;
  /// Throws PoleError when |Q| < pole_floor.
  Jet apply(std::span<const Jet> members, double pole_floor) const;

 private:
  RationalMap(PolyFn p, PolyFn q) : p_(std::move(p)), q_(std::move(q)) {}
  PolyComposite p_;
  PolyComposite q_;
};

cplx laplacian(const EigenFunction& f, const G2Element& g, const G2Basis& basis);
cplx laplacian(const PolyFn& f, const EigenFamily& fam, const G2Element& g, const G2Basis& basis);
cplx laplacian(const RationalMap& m, const EigenFamily& fam, const G2Element& g, const G2Basis& basis,
               double pole_floor = 1e-12);

cplx conformality(const EigenFunction& f1, const EigenFunction& f2, const G2Element& g, const G2Basis& basis);
cplx conformality(const PolyFn& f1, const PolyFn& f2, const EigenFamily& fam, const G2Element& g,
                  const G2Basis& basis);
cplx conformality(const RationalMap& m1, const RationalMap& m2, const EigenFamily& fam, const G2Element& g,
                  const G2Basis& basis, double pole_floor = 1e-12);

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

struct QReport {
  std::string check;
  int sample_count = 0;  ///< samples requested
  int admitted = 0;      ///< samples actually evaluated (pole guard)
  std::uint64_t seed = 0;
  double tol = 0.0;
  double max_abs_error = 0.0;
  double laplacian_error = 0.0;
  double conformality_error = 0.0;
  Verdict verdict = Verdict::pass;
  std::optional<double> lambda;
  std::optional<double> mu;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Per-sample maxima, merged by taking maxima again.
struct SampleResidual {
  double laplacian = 0.0;
  double conformality = 0.0;
};

/// Residuals of one family at random_element(sample_seed(seed, index)):
/// max |Delta phi_i - lambda phi_i| and max |kappa(phi_i, phi_j) - mu phi_i phi_j|.
SampleResidual eigenfamily_sample(const EigenFamily& fam, const G2Basis& basis, std::uint64_t seed,
                                  std::uint64_t index);

/// Sample loop runs under OpenMP; the result is identical to
/// serial::check_eigenfamily for the same arguments.
QReport check_eigenfamily(const EigenFamily& fam, const G2Basis& basis, int n_samples, std::uint64_t seed,
                          double tol);

/// Monomials spanning the n-th symmetric power together with the eigenvalues
/// they carry: Delta = n(lambda + (n-1)mu), kappa within the power = n^2 mu.
struct SymmetricPower {
  int degree = 0;
  std::vector<PolyFn> monomials;
  double laplacian_eigenvalue = 0.0;
  double conformality_eigenvalue = 0.0;
};

SymmetricPower sym_power(const EigenFamily& fam, int n);

/// Relative pole guard: samples with |Q| < kPoleGuardFraction * median|Q| are skipped.
inline constexpr double kPoleGuardFraction = 0.05;

QReport check_harmonic_morphism(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis, int n_samples,
                                std::uint64_t seed, double tol);

/// Single-threaded reference loops for the sampled checks.
namespace serial {

QReport check_eigenfamily(const EigenFamily& fam, const G2Basis& basis, int n_samples, std::uint64_t seed,
                          double tol);

QReport check_harmonic_morphism(const RationalMap& m, const EigenFamily& fam, const G2Basis& basis, int n_samples,
                                std::uint64_t seed, double tol);

}  // namespace serial

}  // namespace g2harm
