#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentree {

using BigInt = boost::multiprecision::cpp_int;

// Integer-coefficient polynomial in one variable, coefficients by ascending
// degree. Canonical form never stores a trailing zero; the zero polynomial
// is the empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long constant) {  // NOLINT: implicit constants are the point
    if (constant != 0) c_.emplace_back(constant);
  }
  IntPoly(const BigInt& constant) {  // NOLINT
    if (constant != 0) c_.push_back(constant);
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly monomial(const BigInt& coef, int deg) {
    if (coef == 0) return IntPoly();
    std::vector<BigInt> c(deg + 1);
    c[deg] = coef;
    return IntPoly(std::move(c));
  }

  static IntPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[d];
  }

  BigInt leading() const { return is_zero() ? BigInt(0) : c_.back(); }

  // Smallest degree with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (int d = 0; d < static_cast<int>(c_.size()); ++d) {
      if (c_[d] != 0) return d;
    }
    return -1;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a) { return IntPoly(0) - a; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) {
    return !(a == b);
  }

  // Quotient a/b in Z[x]; throws std::domain_error unless the division is
  // exact with integer coefficients.
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) {
      throw std::domain_error("inexact polynomial division");
    }
    std::vector<BigInt> rem = a.c_;
    std::vector<BigInt> quot(a.degree() - b.degree() + 1);
    const BigInt& lead = b.c_.back();
    for (int d = static_cast<int>(quot.size()) - 1; d >= 0; --d) {
      const BigInt& top = rem[d + b.degree()];
      if (top % lead != 0) {
        throw std::domain_error("inexact polynomial division");
      }
      const BigInt q = top / lead;
      quot[d] = q;
      if (q == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        rem[d + j] -= q * b.c_[j];
      }
    }
    for (const BigInt& r : rem) {
      if (r != 0) throw std::domain_error("inexact polynomial division");
    }
    return IntPoly(std::move(quot));
  }

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const BigInt& c : c_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  // The polynomial divided by its content; sign of the leading coefficient
  // is preserved. Zero stays zero.
  IntPoly primitive_part() const {
    if (is_zero()) return IntPoly();
    const BigInt g = content();
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / g;
    return IntPoly(std::move(c));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

namespace detail {

// Pseudo-remainder: the remainder of lc(b)^k * a by b for the k that keeps
// every step in integers. Only used inside the primitive remainder
// sequence, where the scaling is stripped right away.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const BigInt lead = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const IntPoly s = IntPoly::monomial(a.leading(), a.degree() - b.degree());
    a = IntPoly(lead) * a - s * b;
  }
  return a;
}

}  // namespace detail

// gcd over the rationals, returned as a primitive integer polynomial with
// positive leading coefficient (primitive remainder sequence).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = detail::pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

// Ascending-power rendering: "1-3*x+x^2". The zero polynomial prints "0".
inline std::string poly_to_string(const IntPoly& p,
                                  const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    const BigInt c = p.coeff(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = boost::multiprecision::abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string term;
    if (d == 0) {
      term = mag.str();
    } else {
      if (mag != 1) term = mag.str() + "*";
      term += var;
      if (d > 1) term += "^" + std::to_string(d);
    }
    out += term;
  }
  return out;
}

// LaTeX flavor of the same: implicit multiplication, braced exponents when
// needed ("1-3x+x^{12}").
inline std::string poly_to_latex(const IntPoly& p,
                                 const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    const BigInt c = p.coeff(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = boost::multiprecision::abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (d == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += var;
      if (d > 1) {
        const std::string e = std::to_string(d);
        out += e.size() == 1 ? "^" + e : "^{" + e + "}";
      }
    }
  }
  return out;
}

}  // namespace gentree
