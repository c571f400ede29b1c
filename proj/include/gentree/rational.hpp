#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentree/poly.hpp"

namespace gentree {

// Reduced fraction of integer polynomials: no common polynomial factor, no
// shared integer content, denominator nonzero with its lowest-degree
// nonzero coefficient positive. Zero is 0/1.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(IntPoly numerator)  // NOLINT: polynomials embed
      : num_(std::move(numerator)), den_(1) {}
  RationalFn(IntPoly numerator, IntPoly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == IntPoly(1); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a) {
    return RationalFn(-a.num_, a.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("division by zero function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }

  // Canonical forms are unique, so equality is componentwise.
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) {
    return !(a == b);
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    const IntPoly g = poly_gcd(num_, den_);
    if (g.degree() >= 1) {
      num_ = IntPoly::exact_div(num_, g);
      den_ = IntPoly::exact_div(den_, g);
    }
    const BigInt shared =
        boost::multiprecision::gcd(num_.content(), den_.content());
    if (shared > 1) {
      num_ = IntPoly::exact_div(num_, IntPoly(shared));
      den_ = IntPoly::exact_div(den_, IntPoly(shared));
    }
    if (den_.coeff(den_.valuation()) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPoly num_;
  IntPoly den_;
};

// Equality as functions, independent of any normalization convention.
inline bool gf_equal(const RationalFn& f, const RationalFn& g) {
  return f.num() * g.den() == g.num() * f.den();
}

// Power-series coefficients of x^1..x^N, exact, via the linear recurrence
// the denominator induces. Requires a denominator with nonzero constant
// term; throws std::domain_error if a coefficient comes out non-integral.
inline std::vector<BigInt> series(const RationalFn& f, int n_max) {
  const BigInt d0 = f.den().coeff(0);
  if (d0 == 0) {
    throw std::domain_error("denominator vanishes at 0; no expansion");
  }
  std::vector<BigInt> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigInt acc = f.num().coeff(n);
    const int reach = std::min(n, f.den().degree());
    for (int k = 1; k <= reach; ++k) {
      acc -= f.den().coeff(k) * c[n - k];
    }
    if (acc % d0 != 0) {
      throw std::domain_error("series coefficients are not integers");
    }
    c[n] = acc / d0;
  }
  return std::vector<BigInt>(c.begin() + 1, c.end());
}

namespace detail {

inline bool is_monomial(const IntPoly& p) {
  int nonzero = 0;
  for (const BigInt& c : p.coeffs()) {
    if (c != 0) ++nonzero;
  }
  return nonzero == 1;
}

// Numerator in pulled-out-x form: "x", "x^2*(1-x)", "2*x^3", "(1+x)", "3".
inline std::string numerator_text(const IntPoly& num, bool latex) {
  const int v = num.valuation();
  auto render = [&](const IntPoly& p) {
    return latex ? poly_to_latex(p) : poly_to_string(p);
  };
  if (v >= 1) {
    const IntPoly body(
        std::vector<BigInt>(num.coeffs().begin() + v, num.coeffs().end()));
    std::string xpow = "x";
    if (v > 1) {
      const std::string e = std::to_string(v);
      xpow += latex && e.size() > 1 ? "^{" + e + "}" : "^" + e;
    }
    if (body == IntPoly(1)) return xpow;
    if (body == IntPoly(-1)) return "-" + xpow;
    if (is_monomial(body)) return render(num);
    return latex ? xpow + "(" + render(body) + ")"
                 : xpow + "*(" + render(body) + ")";
  }
  if (is_monomial(num) || num.degree() == 0) return render(num);
  return "(" + render(num) + ")";
}

}  // namespace detail

// Plain-text rendering: "x*(1-x)/(1-3*x+x^2)"; a polynomial prints bare.
inline std::string gf_to_string(const RationalFn& f) {
  if (f.is_zero()) return "0";
  if (f.is_polynomial()) return poly_to_string(f.num());
  std::string den = f.den().degree() == 0 ? poly_to_string(f.den())
                                          : "(" + poly_to_string(f.den()) + ")";
  return detail::numerator_text(f.num(), /*latex=*/false) + "/" + den;
}

// LaTeX rendering: "\frac{x(1-x)}{1-3x+x^2}".
inline std::string gf_to_latex(const RationalFn& f) {
  if (f.is_zero()) return "0";
  if (f.is_polynomial()) return poly_to_latex(f.num());
  return "\\frac{" + detail::numerator_text(f.num(), /*latex=*/true) + "}{" +
         poly_to_latex(f.den()) + "}";
}

// ---------------------------------------------------------------------------
// Expression parser for rational functions in x. Accepts +, -, *, /, ^,
// parentheses, integer literals, and juxtaposition ("x(1-x)", "2x"), which
// covers both ascending and descending ways the expected tables are written.

namespace detail {

class GfParser {
 public:
  explicit GfParser(const std::string& text) : s_(text) {}

  RationalFn parse() {
    RationalFn value = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      throw std::invalid_argument("trailing input in expression");
    }
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    RationalFn value = term();
    if (negate) value = -value;
    while (true) {
      if (eat('+')) {
        value = value + term();
      } else if (eat('-')) {
        value = value - term();
      } else {
        break;
      }
    }
    return value;
  }

  RationalFn term() {
    RationalFn value = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * factor();
      } else if (c == '/') {
        ++pos_;
        value = value / factor();
      } else if (c == '(' || c == 'x' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        value = value * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return value;
  }

  RationalFn factor() {
    RationalFn base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() ||
          !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw std::invalid_argument("exponent must be a nonnegative integer");
      }
      int e = 0;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      RationalFn value{IntPoly(1)};
      for (int i = 0; i < e; ++i) value = value * base;
      return value;
    }
    return base;
  }

  RationalFn primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFn value = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')'");
      return value;
    }
    if (c == 'x') {
      ++pos_;
      return RationalFn{IntPoly::variable()};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      return RationalFn{IntPoly(v)};
    }
    throw std::invalid_argument("unexpected character in expression");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses expressions like "x*(1-3*x)/((x-1)*(4*x-1))" or the terser
// "x(1-x)/(1-3x+x^2)". Throws std::invalid_argument on malformed input.
inline RationalFn parse_gf(const std::string& text) {
  return detail::GfParser(text).parse();
}

}  // namespace gentree
