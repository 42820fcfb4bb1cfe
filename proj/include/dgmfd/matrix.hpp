#ifndef DGMFD_MATRIX_HPP
#define DGMFD_MATRIX_HPP

#include <optional>
#include <vector>

#include "dgmfd/scalar.hpp"

namespace dgmfd {

/// Dense matrix over the exact scalar ring. Sized for desk-scale instances;
/// no sparsity engineering beyond fraction-free elimination.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool isZero() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;
  Matrix transpose() const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  Matrix evaluated(const std::vector<Rational>& point) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  std::string str() const;

  /// Rank by fraction-free (Bareiss) Gaussian elimination. Exact over both
  /// rationals and polynomials; pivoting picks the first nonzero entry, so
  /// the computation is deterministic.
  int rank() const;

  /// Basis of the right kernel, as columns of the returned matrix. Requires
  /// rational (constant) entries.
  Matrix kernelBasis() const;

  /// Solve A x = b for one particular solution (free variables set to 0).
  /// Requires rational entries. Returns nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

  /// A right inverse R with A R = id, for a surjective rational matrix.
  std::optional<Matrix> rightInverse() const;

  /// Reduced row echelon form over the rationals, plus pivot columns.
  Matrix rref(std::vector<int>* pivotCols = nullptr) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Column span of `vecs` extended to a decision procedure: does v lie in the
/// span of the columns? Rational entries.
bool inColumnSpan(const Matrix& vecs, const Matrix& v);

}  // namespace dgmfd

#endif
