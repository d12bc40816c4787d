#pragma once

#include <optional>
#include <vector>

#include "hlift/scalars.hpp"

namespace hlift {

/// Dense matrix over an exact FieldSpec. Row-major storage; all entries
/// share the spec. Zero-row and zero-column shapes are allowed everywhere.
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, const FieldSpec& spec);
  static Matrix identity(size_t n, const FieldSpec& spec);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& spec() const { return spec_; }

  Scalar& at(size_t r, size_t c);
  const Scalar& at(size_t r, size_t c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  /// Kronecker product with lexicographic index (i,k): (A kron B)[(i,k),(j,l)] = A[i][j] B[k][l].
  Matrix kron(const Matrix& o) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// Row-major flattening as a column vector (rows*cols x 1).
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, size_t rows, size_t cols);

  std::string str() const;

 private:
  size_t rows_, cols_;
  FieldSpec spec_;
  std::vector<Scalar> a_;
};

/// Standard basis column vector e_i.
Matrix unit_vector(size_t i, size_t dim, const FieldSpec& spec);

struct Rref {
  Matrix r;
  std::vector<size_t> pivots;
};

struct RrefWithTransform {
  Matrix r;
  Matrix t;  // t * input == r, t invertible
  std::vector<size_t> pivots;
};

Rref rref(const Matrix& m);
RrefWithTransform rref_with_transform(const Matrix& m);
size_t rank(const Matrix& m);

/// Any particular solution X of M X = B, or nullopt iff the system is
/// inconsistent. The result is substituted back before returning.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Subspace of k^ambient held as a reduced-echelon row basis with strictly
/// increasing pivots.
class Subspace {
 public:
  Subspace(size_t ambient, const FieldSpec& spec);
  /// Subspace spanned by the rows of `vectors` (echelonized internally).
  static Subspace row_space(const Matrix& vectors);

  size_t dim() const { return basis_.rows(); }
  size_t ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }

  /// Membership of a column vector (exact reduction against the basis).
  bool contains(const Matrix& v) const;
  /// Coordinates c with basis()^T c = v, when v lies in the subspace.
  std::optional<Matrix> coordinates(const Matrix& v) const;

 private:
  size_t ambient_;
  Matrix basis_;
};

/// Right kernel {x : M x = 0}; ambient dimension = cols.
Subspace kernel(const Matrix& m);
/// Column space; ambient dimension = rows.
Subspace image(const Matrix& m);

}  // namespace hlift
