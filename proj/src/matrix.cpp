#include "dgmfd/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dgmfd {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::isZero() const {
  for (const auto& s : a_)
    if (!s.isZero()) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch in product");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  Matrix m(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  Matrix m(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::evaluated(const std::vector<Rational>& point) const {
  Matrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = Scalar(at(i, j).evaluate(point));
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? ", " : "");
    os << " ]\n";
  }
  return os.str();
}

int Matrix::rank() const {
  Matrix w = *this;
  int rank = 0;
  Scalar prevPivot(1);
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivotRow = -1;
    for (int r = rank; r < rows_; ++r)
      if (!w.at(r, col).isZero()) {
        pivotRow = r;
        break;
      }
    if (pivotRow < 0) continue;
    if (pivotRow != rank)
      for (int j = 0; j < cols_; ++j) std::swap(w.at(pivotRow, j), w.at(rank, j));
    const Scalar pivot = w.at(rank, col);
    for (int r = rank + 1; r < rows_; ++r) {
      // Bareiss step: exact division by the previous pivot keeps entries in
      // the ring (no rational-function entries over a polynomial base).
      for (int j = col + 1; j < cols_; ++j)
        w.at(r, j) = (pivot * w.at(r, j) - w.at(r, col) * w.at(rank, j)).dividedExactlyBy(prevPivot);
      w.at(r, col) = Scalar();
    }
    prevPivot = pivot;
    ++rank;
  }
  return rank;
}

Matrix Matrix::rref(std::vector<int>* pivotCols) const {
  Matrix w = *this;
  if (pivotCols) pivotCols->clear();
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivotRow = -1;
    for (int r = lead; r < rows_; ++r)
      if (!w.at(r, col).isZero()) {
        pivotRow = r;
        break;
      }
    if (pivotRow < 0) continue;
    if (pivotRow != lead)
      for (int j = 0; j < cols_; ++j) std::swap(w.at(pivotRow, j), w.at(lead, j));
    Rational inv = 1 / w.at(lead, col).asRational();
    for (int j = 0; j < cols_; ++j) w.at(lead, j) = w.at(lead, j) * Scalar(inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || w.at(r, col).isZero()) continue;
      Scalar f = w.at(r, col);
      for (int j = 0; j < cols_; ++j) w.at(r, j) -= f * w.at(lead, j);
    }
    if (pivotCols) pivotCols->push_back(col);
    ++lead;
  }
  return w;
}

Matrix Matrix::kernelBasis() const {
  std::vector<int> pivots;
  Matrix r = rref(&pivots);
  std::vector<bool> isPivot(cols_, false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<int> freeCols;
  for (int c = 0; c < cols_; ++c)
    if (!isPivot[c]) freeCols.push_back(c);
  Matrix k(cols_, static_cast<int>(freeCols.size()));
  for (size_t f = 0; f < freeCols.size(); ++f) {
    k.at(freeCols[f], static_cast<int>(f)) = Scalar(1);
    for (size_t p = 0; p < pivots.size(); ++p) {
      // Row p of rref reads: x_{pivots[p]} + sum over free cols = 0.
      k.at(pivots[p], static_cast<int>(f)) = -r.at(static_cast<int>(p), freeCols[f]);
    }
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows() != rows_) throw std::logic_error("solve: rhs shape mismatch");
  Matrix aug = hstack(b);
  std::vector<int> pivots;
  Matrix r = aug.rref(&pivots);
  for (int p : pivots)
    if (p >= cols_) return std::nullopt;  // a pivot in the rhs block: inconsistent
  Matrix x(cols_, b.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r.at(static_cast<int>(i), cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::rightInverse() const {
  return solve(identity(rows_));
}

bool inColumnSpan(const Matrix& vecs, const Matrix& v) {
  return vecs.solve(v).has_value();
}

}  // namespace dgmfd
