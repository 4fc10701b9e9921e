#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lieq/error.hpp"

namespace lieq {

using Rational = mpq_class;

/// Complex number with exact rational real and imaginary parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static Gaussian i() { return Gaussian(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return Gaussian(re, -im); }
  Gaussian inverse() const;

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re + b.re, a.im + b.im);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re - b.re, a.im - b.im);
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Gaussian operator-() const { return Gaussian(-re, -im); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const Gaussian& g);

/// Power product of commuting symbols, sorted by symbol name, no zero exponents.
using Monomial = std::vector<std::pair<std::string, int>>;

/// Symbols that may carry negative exponents.
bool is_laurent_symbol(const std::string& name);

/// Exact Laurent polynomial over the Gaussian rationals in commuting symbols.
///
/// The representation is canonical: terms are keyed by sorted monomials and no
/// stored coefficient is zero, so structural equality is mathematical equality.
class Scalar {
 public:
  using Terms = std::map<Monomial, Gaussian>;

  Scalar() = default;
  Scalar(long n);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const Gaussian& g);  // NOLINT(google-explicit-constructor)

  static Scalar i() { return Scalar(Gaussian::i()); }
  static Scalar symbol(const std::string& name, int exponent = 1);
  static Scalar from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the scalar carries no symbols.
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Gaussian constant_term() const;
  /// Single-term scalar with an invertible monomial.
  bool is_unit() const;

  Scalar inverse() const;  // throws unless is_unit()
  Scalar pow(int exponent) const;

  /// Smallest exponent of `symbol` across all terms (0 when absent); nullopt if zero.
  std::optional<int> min_exponent(const std::string& symbol) const;
  /// Sum of terms whose `symbol` exponent equals `power`, with the symbol removed.
  Scalar coefficient(const std::string& symbol, int power) const;
  Scalar substitute(const std::string& symbol, const Scalar& value) const;
  std::vector<std::string> symbols() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Expression-grammar rendering, e.g. `1/2 - i*eps^2*m0`.
  std::string to_string() const;
  /// Single term whose printed coefficient starts with a minus sign.
  bool leading_negative() const;
  /// True when to_string() needs parentheses to be used as a product factor.
  bool needs_parens() const;

 private:
  void add_term(const Monomial& m, const Gaussian& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Renders `c1*body1 + c2*body2 ...`; an empty body stands for the unit.
std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace lieq
