#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieq/basis_change.hpp"
#include "lieq/lie_algebra.hpp"

namespace lieq {

using Word = std::vector<std::size_t>;

/// Graded order: shorter words first, then lexicographic by basis index.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Scalar-weighted sum of generator words. The empty word is the unit.
///
/// Arithmetic here is free (concatenation without relations); use
/// normal_form() / product() / commutator() to work modulo the algebra.
class Element {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  Element() = default;
  static Element unit() { return scalar(Scalar(1)); }
  static Element scalar(const Scalar& s);
  static Element generator(std::size_t index, const Scalar& coeff = Scalar(1));
  static Element word(Word w, const Scalar& coeff = Scalar(1));
  static Element from(const Combination& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;
  /// True when every word is nondecreasing.
  bool is_ordered() const;

  void add(const Word& w, const Scalar& coeff);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Scalar& s, const Element& e);
  /// Free (concatenation) product.
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Default cap on intermediate term counts; `LIEQ_TERM_CAP` overrides it.
std::size_t default_term_cap();

/// PBW normal form: every word nondecreasing in the algebra's basis order.
///
/// Rewrites the leftmost descent b*a (index b > index a) to a*b + [b,a]. Each
/// step either sorts a pair or shortens the word, so rewriting terminates.
Element normal_form(const LieAlgebra& algebra, const Element& e, std::size_t term_cap = default_term_cap());

Element product(const LieAlgebra& algebra, const Element& a, const Element& b);
Element commutator(const LieAlgebra& algebra, const Element& a, const Element& b);

struct CasimirCheck {
  bool is_casimir = true;
  std::optional<std::size_t> witness;  // first generator with a nonzero commutator
  Element residue;                     // normal form of [e, witness]
};

CasimirCheck is_casimir(const LieAlgebra& algebra, const Element& e);

/// Generator replacements applied term-by-term to a normal form.
///
/// Non-formal substitutions require every replaced generator to be central;
/// formal ones (rest-frame specializations) skip that check.
struct Substitution {
  std::map<std::size_t, Element> replacements;
  bool formal = false;

  static Substitution formal_values(const LieAlgebra& algebra, const std::map<std::string, Scalar>& values);
};

Element substitute(const LieAlgebra& algebra, const Element& e, const Substitution& s);
/// Replaces commuting scalar symbols in every coefficient.
Element substitute_symbols(const Element& e, const std::map<std::string, Scalar>& values);
Element map_coefficients(const Element& e, const std::function<Scalar(const Scalar&)>& f);

/// Moves an element to another algebra by generator name, then normalizes there.
/// Names absent from `renaming` keep their spelling.
Element transfer(const Element& e, const LieAlgebra& from, const LieAlgebra& to,
                 const std::map<std::string, std::string>& renaming = {});

/// Replaces generator g of the source by sum_j images[g][j] * target_j, then normalizes.
/// With a BasisChange matrix this rewrites an element given in the new basis in terms
/// of the old one; with its inverse, the other way round.
Element linear_substitute(const Element& e, const Matrix& images, const LieAlgebra& target);

/// Weyl ordering: each word replaced by the average of all its letter permutations.
Element symmetrize(const Element& e);

std::string to_string(const LieAlgebra& algebra, const Element& e);

}  // namespace lieq
