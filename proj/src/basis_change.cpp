#include "lieq/basis_change.hpp"

namespace lieq {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b.front().size();
  Matrix out(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw Error("matrix dimensions do not match");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw SingularMatrix("basis change matrix is not square");
  }
  Matrix work = m;
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (work[r][col].is_unit()) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) {
      throw SingularMatrix("basis change matrix is singular (no invertible pivot in column " +
                           std::to_string(col) + ")");
    }
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Scalar scale = work[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] = scale * work[col][j];
      inv[col][j] = scale * inv[col][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      Scalar f = work[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

BasisChange BasisChange::identity(const LieAlgebra& algebra) {
  return {algebra.generators(), identity_matrix(algebra.dimension())};
}

BasisChange BasisChange::replace(const LieAlgebra& algebra, const std::string& old_name,
                                 const std::string& new_name, const Combination& definition) {
  BasisChange change = identity(algebra);
  std::size_t idx = algebra.index_of(old_name);
  change.new_names[idx] = new_name;
  std::vector<Scalar> row(algebra.dimension());
  for (const auto& [g, c] : definition.terms()) row.at(g) = c;
  change.matrix[idx] = std::move(row);
  return change;
}

BasisChange BasisChange::inverse(const LieAlgebra& algebra) const {
  return {algebra.generators(), lieq::inverse(matrix)};
}

BasisChange compose(const BasisChange& second, const BasisChange& first) {
  return {second.new_names, multiply(second.matrix, first.matrix)};
}

LieAlgebra change_basis(const LieAlgebra& algebra, const BasisChange& change, std::string name) {
  const std::size_t n = algebra.dimension();
  if (change.matrix.size() != n || change.new_names.size() != n) {
    throw Error("basis change dimension does not match algebra " + algebra.name());
  }
  Matrix inv = inverse(change.matrix);

  auto row_combination = [&](std::size_t i) {
    Combination c;
    for (std::size_t j = 0; j < n; ++j) c.add(j, change.matrix[i][j]);
    return c;
  };
  auto to_new_basis = [&](const Combination& old) {
    Combination out;
    for (const auto& [k, coeff] : old.terms()) {
      for (std::size_t l = 0; l < n; ++l) {
        if (!inv[k][l].is_zero()) out.add(l, coeff * inv[k][l]);
      }
    }
    return out;
  };

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a) {
    Combination na = row_combination(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      Combination value = to_new_basis(algebra.bracket(na, row_combination(b)));
      if (!value.is_zero()) entries.push_back({a, b, std::move(value)});
    }
  }
  if (name.empty()) name = algebra.name();
  return LieAlgebra(std::move(name), change.new_names, algebra.symbols(), entries);
}

}  // namespace lieq
