#include "g2harm/polyfn.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <optional>

#include "g2harm/errors.hpp"

namespace g2harm {

int total_degree(const PolyFn::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

PolyFn PolyFn::constant(cplx c) {
  PolyFn p;
  p.add_term(Exponents{}, c);
  return p;
}

PolyFn PolyFn::variable(int k) {
  Exponents e{};
  e.at(k) = 1;
  return monomial(e);
}

PolyFn PolyFn::monomial(const Exponents& exponents, cplx coeff) {
  PolyFn p;
  p.add_term(exponents, coeff);
  return p;
}

void PolyFn::add_term(const Exponents& exponents, cplx c) {
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

int PolyFn::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool PolyFn::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

PolyFn PolyFn::partial(int k) const {
  PolyFn out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    out.add_term(d, c * static_cast<double>(e[k]));
  }
  return out;
}

cplx PolyFn::evaluate(std::span<const cplx> z) const {
  cplx sum(0.0);
  for (const auto& [e, c] : terms_) {
    cplx term = c;
    for (int k = 0; k < kVars; ++k) {
      for (int n = 0; n < e[k]; ++n) term *= z[k];
    }
    sum += term;
  }
  return sum;
}

std::string PolyFn::to_string() const {
  if (terms_.empty()) return "(" + format_complex(0.0) + ")";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + format_complex(c) + ")";
    for (int k = 0; k < kVars; ++k) {
      if (e[k] == 0) continue;
      out += " * z" + std::to_string(k + 1) + "^" + std::to_string(e[k]);
    }
  }
  return out;
}

PolyFn& PolyFn::operator+=(const PolyFn& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyFn operator*(cplx s, const PolyFn& p) {
  PolyFn out;
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

PolyFn operator*(const PolyFn& a, const PolyFn& b) {
  PolyFn out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      PolyFn::Exponents e;
      for (int k = 0; k < PolyFn::kVars; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string format_complex(cplx c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", c.real(), c.imag());
  return buf;
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t where() const { return offset_ + pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, where()); }

  /// Unsigned decimal number with optional fraction and exponent.
  std::optional<double> number() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    auto digits = [&] {
      const std::size_t s = p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      return p - s;
    };
    std::size_t n = digits();
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      n += digits();
    }
    if (n == 0) return std::nullopt;
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      const std::size_t s = q;
      while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
      if (q > s) p = q;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + p, value);
    if (ec != std::errc() || ptr != text_.data() + p) fail("malformed number");
    pos_ = p;
    return value;
  }

  bool imaginary_unit() { return accept('i') || accept('j'); }

  int integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    int value = 0;
    std::from_chars(text_.data() + start, text_.data() + pos_, value);
    return value;
  }

  /// Sum of signed real/imaginary parts, stopping at the first character
  /// that cannot continue a complex literal.
  cplx complex_literal() {
    cplx value(0.0);
    bool have_real = false;
    bool have_imag = false;
    bool first = true;
    for (;;) {
      skip_ws();
      double sign = 1.0;
      if (accept('+')) {
      } else if (accept('-')) {
        sign = -1.0;
      } else if (!first) {
        break;
      }
      skip_ws();
      const auto mag = number();
      const bool imag = imaginary_unit();
      if (!mag && !imag) fail("expected a number");
      const double v = sign * mag.value_or(1.0);
      if (imag) {
        if (have_imag) fail("duplicate imaginary part");
        have_imag = true;
        value += cplx(0.0, v);
      } else {
        if (have_real) fail("duplicate real part");
        have_real = true;
        value += v;
      }
      first = false;
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// factor := number [i|j] | i | j | '(' complex ')' | 'z' K ['^' n]
void parse_factor(Cursor& cur, cplx& coeff, PolyFn::Exponents& exponents) {
  cur.skip_ws();
  if (cur.accept('(')) {
    coeff *= cur.complex_literal();
    cur.skip_ws();
    if (!cur.accept(')')) cur.fail("expected ')'");
    return;
  }
  if (cur.accept('z')) {
    const std::size_t at = cur.where();
    const int k = cur.integer();
    if (k < 1 || k > PolyFn::kVars) throw ParseError("variable index out of range (z1..z7)", at);
    int power = 1;
    cur.skip_ws();
    if (cur.accept('^')) {
      cur.skip_ws();
      power = cur.integer();
    }
    exponents[k - 1] += power;
    return;
  }
  const auto mag = cur.number();
  const bool imag = cur.imaginary_unit();
  if (!mag && !imag) cur.fail("expected a coefficient or variable");
  const double v = mag.value_or(1.0);
  coeff *= imag ? cplx(0.0, v) : cplx(v);
}

}  // namespace

PolyFn PolyFn::parse(std::string_view text) {
  Cursor cur(text, 0);
  PolyFn out;
  cur.skip_ws();
  if (cur.done()) cur.fail("empty polynomial");
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    double sign = 1.0;
    if (cur.accept('-')) {
      sign = -1.0;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    cplx coeff = sign;
    Exponents exponents{};
    parse_factor(cur, coeff, exponents);
    for (;;) {
      cur.skip_ws();
      if (!cur.accept('*')) break;
      parse_factor(cur, coeff, exponents);
    }
    out.add_term(exponents, coeff);
    first = false;
  }
  return out;
}

cplx parse_complex(std::string_view text, std::size_t offset) {
  Cursor cur(text, offset);
  cur.skip_ws();
  if (cur.done()) cur.fail("empty complex number");
  const cplx value = cur.complex_literal();
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected character in complex number");
  return value;
}

Vec7C parse_vec7(std::string_view text) {
  Vec7C v;
  std::size_t start = 0;
  int n = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    if (n == 7) throw ParseError("expected 7 comma-separated components, found more", start);
    v[n++] = parse_complex(text.substr(start, end - start), start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (n != 7) {
    throw ParseError("expected 7 comma-separated components, found " + std::to_string(n), text.size());
  }
  return v;
}

}  // namespace g2harm
