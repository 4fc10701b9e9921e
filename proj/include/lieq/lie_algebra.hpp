#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/scalar.hpp"

namespace lieq {

/// Scalar-weighted linear combination of generators, keyed by basis index.
class Combination {
 public:
  using Terms = std::map<std::size_t, Scalar>;

  Combination() = default;
  static Combination of(std::size_t generator, Scalar coeff = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(std::size_t generator) const;

  void add(std::size_t generator, const Scalar& coeff);
  Combination& operator+=(const Combination& o);
  Combination& operator-=(const Combination& o);
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  Combination operator-() const;
  friend Combination operator*(const Scalar& s, const Combination& c);
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

struct BracketEntry {
  std::size_t a;
  std::size_t b;
  Combination result;
};

/// A raw table entry that contradicts [b,a] = -[a,b] or [a,a] = 0.
struct AntisymmetryViolation {
  std::size_t a;
  std::size_t b;
  std::string reason;
};

/// Finite-dimensional Lie algebra given by structure constants over Scalar.
///
/// Only [a,b] with a < b is stored; the other triangle is derived by negation,
/// so a constructed algebra is antisymmetric by construction. Raw entries that
/// contradict antisymmetry are recorded (not stored) and surface in validate().
/// Instances are immutable.
class LieAlgebra {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Combination>;

  LieAlgebra(std::string name, std::vector<std::string> generators, std::vector<std::string> symbols,
             const std::vector<BracketEntry>& entries);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const Table& table() const { return table_; }
  const std::vector<AntisymmetryViolation>& antisymmetry_violations() const { return violations_; }

  std::optional<std::size_t> find(const std::string& generator) const;
  std::size_t index_of(const std::string& generator) const;  // throws UnknownName
  const std::string& generator_name(std::size_t index) const { return generators_.at(index); }

  Combination bracket(std::size_t a, std::size_t b) const;
  Combination bracket(const Combination& x, const Combination& y) const;
  bool is_central(std::size_t a) const;

  LieAlgebra with_name(std::string name) const;
  /// Copy with [a,b] replaced by `result` (a != b; orientation handled).
  LieAlgebra with_bracket(std::size_t a, std::size_t b, const Combination& result) const;
  std::vector<BracketEntry> entries() const;

 private:
  std::string name_;
  std::vector<std::string> generators_;
  std::vector<std::string> symbols_;
  Table table_;
  std::vector<AntisymmetryViolation> violations_;
};

struct JacobiViolation {
  std::size_t a;
  std::size_t b;
  std::size_t c;
  Combination residue;
};

struct ValidationReport {
  std::vector<AntisymmetryViolation> antisymmetry;
  std::vector<JacobiViolation> jacobi;

  bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
  std::vector<std::string> describe(const LieAlgebra& algebra) const;
};

/// Bracket of two combinations; the usual entry point for named generators.
Combination bracket(const LieAlgebra& algebra, const Combination& x, const Combination& y);
Combination bracket(const LieAlgebra& algebra, const std::string& x, const std::string& y);

ValidationReport validate(const LieAlgebra& algebra);

/// Cyclic Jacobi sum [[a,b],c] + [[b,c],a] + [[c,a],b].
Combination jacobi_sum(const LieAlgebra& algebra, std::size_t a, std::size_t b, std::size_t c);

LieAlgebra trivial_extension(const LieAlgebra& algebra, const std::string& name);

struct BracketOverride {
  std::string a;
  std::string b;
  /// Result over the extended algebra's generator names.
  std::vector<std::pair<std::string, Scalar>> result;
};

class JacobiFailure : public Error {
 public:
  JacobiFailure(const std::string& message, ValidationReport report)
      : Error(message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Appends a central generator and replaces the listed brackets; rejects
/// overrides that break Jacobi (the 2-cocycle condition).
LieAlgebra central_extension(const LieAlgebra& algebra, const std::string& central,
                             const std::vector<BracketOverride>& overrides);

LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b, std::string name = {});

/// Renames generators in place of basis order; `renaming` may be partial.
LieAlgebra rename_generators(const LieAlgebra& algebra, const std::map<std::string, std::string>& renaming,
                             std::string name = {});

std::string to_string(const LieAlgebra& algebra, const Combination& c);

}  // namespace lieq
