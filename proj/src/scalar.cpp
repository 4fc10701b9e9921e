#include "lieq/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace lieq {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      int e = ia->second + ib->second;
      if (e != 0) out.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  return out;
}

void check_exponents(const Monomial& m) {
  for (const auto& [name, e] : m) {
    if (e < 0 && !is_laurent_symbol(name)) {
      throw ArithmeticError("negative power of symbol '" + name + "' is not allowed");
    }
  }
}

// Magnitude of a coefficient for printing after a separate sign.
std::string coefficient_str(const Gaussian& c, bool has_symbols, bool& negative) {
  negative = false;
  if (c.is_real()) {
    Rational r = c.re;
    if (sgn(r) < 0) {
      negative = true;
      r = -r;
    }
    if (has_symbols && r == 1) return "";
    return rational_str(r);
  }
  if (sgn(c.re) == 0) {
    Rational r = c.im;
    if (sgn(r) < 0) {
      negative = true;
      r = -r;
    }
    if (r == 1) return "i";
    return rational_str(r) + "*i";
  }
  std::string im = c.im < 0 ? " - " + rational_str(-c.im) : " + " + rational_str(c.im);
  if (abs(c.im) == 1) {
    im = c.im < 0 ? " - i" : " + i";
  } else {
    im += "*i";
  }
  return "(" + rational_str(c.re) + im + ")";
}

}  // namespace

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  Rational norm = re * re + im * im;
  return Gaussian(re / norm, -im / norm);
}

std::string to_string(const Gaussian& g) { return Scalar(g).to_string(); }

bool is_laurent_symbol(const std::string& name) { return name == "eps" || name == "m0"; }

Scalar::Scalar(long n) : Scalar(Gaussian(Rational(n))) {}

Scalar::Scalar(const Rational& q) : Scalar(Gaussian(q)) {}

Scalar::Scalar(const Gaussian& g) {
  if (!g.is_zero()) terms_.emplace(Monomial{}, g);
}

Scalar Scalar::symbol(const std::string& name, int exponent) {
  Scalar s;
  if (exponent == 0) return Scalar(1);
  Monomial m{{name, exponent}};
  check_exponents(m);
  s.terms_.emplace(std::move(m), Gaussian(1));
  return s;
}

Scalar Scalar::from_terms(Terms terms) {
  Scalar s;
  for (auto& [m, c] : terms) {
    Monomial sorted = m;
    std::sort(sorted.begin(), sorted.end());
    Monomial merged;
    for (const auto& p : sorted) {
      if (!merged.empty() && merged.back().first == p.first) {
        merged.back().second += p.second;
        if (merged.back().second == 0) merged.pop_back();
      } else if (p.second != 0) {
        merged.push_back(p);
      }
    }
    check_exponents(merged);
    s.add_term(merged, c);
  }
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == Gaussian(1);
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Gaussian Scalar::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Gaussian() : it->second;
}

bool Scalar::is_unit() const {
  if (terms_.size() != 1) return false;
  return std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](const auto& p) { return is_laurent_symbol(p.first); });
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw ArithmeticError("scalar " + to_string() + " is not invertible");
  const auto& [m, c] = *terms_.begin();
  Monomial inv;
  for (const auto& [name, e] : m) inv.emplace_back(name, -e);
  Scalar s;
  s.terms_.emplace(std::move(inv), c.inverse());
  return s;
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<int> Scalar::min_exponent(const std::string& symbol) const {
  if (terms_.empty()) return std::nullopt;
  int lo = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& [name, k] : m) {
      if (name == symbol) e = k;
    }
    lo = first ? e : std::min(lo, e);
    first = false;
  }
  return lo;
}

Scalar Scalar::coefficient(const std::string& symbol, int power) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    Monomial rest;
    for (const auto& p : m) {
      if (p.first == symbol) {
        e = p.second;
      } else {
        rest.push_back(p);
      }
    }
    if (e == power) out.add_term(rest, c);
  }
  return out;
}

Scalar Scalar::substitute(const std::string& symbol, const Scalar& value) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Scalar term;
    Monomial rest;
    int e = 0;
    for (const auto& p : m) {
      if (p.first == symbol) {
        e = p.second;
      } else {
        rest.push_back(p);
      }
    }
    term.terms_.emplace(rest, c);
    out += term * value.pow(e);
  }
  return out;
}

std::vector<std::string> Scalar::symbols() const {
  std::vector<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& p : m) names.push_back(p.first);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

void Scalar::add_term(const Monomial& m, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& [m, c] : s.terms_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = multiply(ma, mb);
      check_exponents(m);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool Scalar::needs_parens() const { return terms_.size() > 1; }

bool Scalar::leading_negative() const {
  if (terms_.size() != 1) return false;
  const Gaussian& c = terms_.begin()->second;
  return c.is_real() ? sgn(c.re) < 0 : (sgn(c.re) == 0 && sgn(c.im) < 0);
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coeff = coefficient_str(c, !m.empty(), negative);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = !coeff.empty();
    os << coeff;
    for (const auto& [name, e] : m) {
      if (need_star) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [coeff, body] : terms) {
    if (coeff.is_zero()) continue;
    Scalar c = coeff;
    bool negative = c.leading_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factor = c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string();
    if (body.empty()) {
      out += factor;
    } else if (c.is_one()) {
      out += body;
    } else {
      out += factor + "*" + body;
    }
  }
  return first ? "0" : out;
}

}  // namespace lieq
