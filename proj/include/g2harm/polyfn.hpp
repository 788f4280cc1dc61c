#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "g2harm/types.hpp"

namespace g2harm {

/// Sparse polynomial in z1..z7 with complex coefficients.
///
/// Text form: terms joined by '+' or '-', each term a '*'-separated product
/// of factors. A factor is a real number, an imaginary number ("2j", "i"),
/// a parenthesized complex number "(re+imj)", or a variable "zK" with an
/// optional "^n". to_string() writes "(re+imj) * z1^a1 * ... * z7^a7" with
/// 17 significant digits and zero exponents omitted.
class PolyFn {
 public:
  static constexpr int kVars = 7;
  using Exponents = std::array<int, kVars>;
  using Terms = std::map<Exponents, cplx>;

  PolyFn() = default;

  static PolyFn constant(cplx c);
  /// z_{k+1} for zero-based k.
  static PolyFn variable(int k);
  static PolyFn monomial(const Exponents& exponents, cplx coeff = 1.0);
  static PolyFn parse(std::string_view text);

  /// Adds c * z^exponents; terms that cancel to exactly zero are dropped.
  void add_term(const Exponents& exponents, cplx c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree of a stored term; 0 for the zero polynomial.
  int degree() const;
  /// Every stored term has the same total degree. The zero polynomial counts.
  bool is_homogeneous() const;

  /// Exact partial derivative with respect to z_{k+1}.
  PolyFn partial(int k) const;
  cplx evaluate(std::span<const cplx> z) const;

  std::string to_string() const;

  PolyFn& operator+=(const PolyFn& o);
  friend PolyFn operator+(PolyFn a, const PolyFn& b) { return a += b; }
  friend PolyFn operator-(const PolyFn& a, const PolyFn& b) { return a + (-1.0) * b; }
  friend PolyFn operator*(cplx s, const PolyFn& p);
  friend PolyFn operator*(const PolyFn& a, const PolyFn& b);
  friend bool operator==(const PolyFn& a, const PolyFn& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Total degree of a multi-index.
int total_degree(const PolyFn::Exponents& e);

/// Parses "a+bi" style complex numbers: "1", "-i", "2.5j", "1-2e-3i".
/// `offset` is added to reported error positions.
cplx parse_complex(std::string_view text, std::size_t offset = 0);

/// Seven comma-separated complex numbers.
Vec7C parse_vec7(std::string_view text);

/// "re+imj" with 17 significant digits.
std::string format_complex(cplx c);

}  // namespace g2harm
