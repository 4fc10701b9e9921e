#pragma once

#include <string>
#include <vector>

#include "lieq/lie_algebra.hpp"

namespace lieq {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
/// Gauss-Jordan inverse; pivots must be invertible scalars. Throws SingularMatrix.
Matrix inverse(const Matrix& m);

/// New generators as linear combinations of old ones: new_i = sum_j matrix[i][j] old_j.
struct BasisChange {
  std::vector<std::string> new_names;
  Matrix matrix;

  static BasisChange identity(const LieAlgebra& algebra);
  /// Replaces one generator `old_name` by `new_name` = `definition` (over old generators).
  static BasisChange replace(const LieAlgebra& algebra, const std::string& old_name, const std::string& new_name,
                             const Combination& definition);

  BasisChange inverse(const LieAlgebra& algebra) const;
};

/// `second` applied after `first` (matrix product second * first, names of `second`).
BasisChange compose(const BasisChange& second, const BasisChange& first);

LieAlgebra change_basis(const LieAlgebra& algebra, const BasisChange& change, std::string name = {});

}  // namespace lieq
