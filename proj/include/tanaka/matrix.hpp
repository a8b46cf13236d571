#ifndef TANAKA_MATRIX_HPP
#define TANAKA_MATRIX_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "tanaka/scalar.hpp"

namespace tanaka {

using Vec = std::vector<Scalar>;

/// Dense matrix over the Gaussian rationals. Row-major storage.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Scalar& c) const;
  Mat operator-() const { return *this * Scalar(-1); }
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool is_zero() const;
  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void set_col(int j, const Vec& v);

  /// Stacks rows of `o` below this matrix (column counts must agree).
  Mat vstack(const Mat& o) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form. Forward elimination is fraction-free (Bareiss) after
/// scaling each row to Gaussian-integer entries, which keeps intermediate entry
/// sizes polynomial; final normalization divides by pivots (exact).
/// Returns the RREF matrix and the list of pivot columns.
std::pair<Mat, std::vector<int>> rref(const Mat& m);

int rank(const Mat& m);

/// Basis of the right kernel {v : M v = 0}, one vector per free column, in
/// column order (deterministic).
std::vector<Vec> kernel_basis(const Mat& m);

/// One solution of M x = b, if consistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Solves M X = B column-by-column; nullopt if any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& b);

/// Determinant via fraction-free elimination.
Scalar det(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/// Signature (positive, negative, zero inertia) of a symmetric matrix with
/// rational entries, by exact symmetric congruence reduction.
/// Throws std::domain_error if the matrix is not symmetric or not rational.
std::tuple<int, int, int> signature(const Mat& sym);

/// Sparse vector: sorted (index, coefficient) pairs, no zero coefficients.
using SVec = std::vector<std::pair<int, Scalar>>;

SVec svec_from_dense(const Vec& v);
Vec svec_to_dense(const SVec& v, int n);
/// a + c*b, result normalized.
SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b);
SVec svec_scale(const SVec& a, const Scalar& c);
bool svec_is_zero(const SVec& a);

}  // namespace tanaka

#endif  // TANAKA_MATRIX_HPP
