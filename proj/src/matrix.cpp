#include "tanaka/matrix.hpp"

#include <stdexcept>

namespace tanaka {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        r(i, j) += aik * o(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Mat Mat::operator*(const Scalar& c) const {
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row shape mismatch");
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Mat::set_col(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_col shape mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
    throw std::invalid_argument("vstack shape mismatch");
  int c = rows_ ? cols_ : o.cols_;
  Mat r(rows_ + o.rows_, c);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < c; ++j) r(i, j) = (*this)(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < c; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

namespace {

// Scales each row by the lcm of the denominators of its entries (both real and
// imaginary parts), making every entry a Gaussian integer. Row scaling does not
// change row space, kernel, or pivot structure.
void scale_rows_to_integers(Mat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      mpz_class dr = m(i, j).re().get_den(), di = m(i, j).im().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dr.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), di.get_mpz_t());
    }
    if (l != 1) {
      Scalar c = Scalar(Rational(l));
      for (int j = 0; j < m.cols(); ++j) m(i, j) *= c;
    }
  }
}

// Fraction-free (Bareiss) forward elimination. Input rows must be Gaussian
// integers; the one-step Sylvester identity keeps all intermediate entries in
// Z[i], so the rational divisions below are exact and entry growth stays
// polynomial. Returns echelon matrix and pivot columns (row i has its pivot in
// pivot_cols[i]).
std::pair<Mat, std::vector<int>> bareiss_echelon(Mat m) {
  std::vector<int> pivot_cols;
  Scalar prev(1);
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m(i, c).is_zero()) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    }
    const Scalar p = m(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      const Scalar f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * p - f * m(r, j)) / prev;
      }
    }
    prev = p;
    pivot_cols.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivot_cols)};
}

}  // namespace

std::pair<Mat, std::vector<int>> rref(const Mat& input) {
  Mat m = input;
  scale_rows_to_integers(m);
  auto [e, pivots] = bareiss_echelon(std::move(m));
  // Back-substitution: normalize pivots to 1 and clear entries above them.
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int c = pivots[r];
    const Scalar p = e(r, c);
    for (int j = c; j < e.cols(); ++j) e(r, j) = e(r, j) / p;
    for (int i = 0; i < r; ++i) {
      const Scalar f = e(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < e.cols(); ++j) e(i, j) -= f * e(r, j);
    }
  }
  return {std::move(e), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).second.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  for (int c : pivots)
    if (c == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(static_cast<int>(i), m.cols());
  return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_matrix shape mismatch");
  Mat x(m.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto xs = solve(m, b.col(j));
    if (!xs) return std::nullopt;
    x.set_col(j, *xs);
  }
  return x;
}

Scalar det(const Mat& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = input.rows();
  if (n == 0) return Scalar(1);
  Mat m = input;
  // Track the row scalings so the determinant of the original matrix is recovered.
  Scalar scaling(1);
  for (int i = 0; i < n; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j) {
      mpz_class dr = m(i, j).re().get_den(), di = m(i, j).im().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dr.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), di.get_mpz_t());
    }
    if (l != 1) {
      Scalar c = Scalar(Rational(l));
      scaling *= c;
      for (int j = 0; j < n; ++j) m(i, j) *= c;
    }
  }
  Scalar prev(1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) return Scalar(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    const Scalar p = m(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Scalar f = m(i, k);
      for (int j = 0; j < n; ++j) m(i, j) = (m(i, j) * p - f * m(k, j)) / prev;
    }
    prev = p;
  }
  // After Bareiss elimination the last pivot equals det of the scaled matrix.
  Scalar d = m(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d / scaling;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto [r, pivots] = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

std::tuple<int, int, int> signature(const Mat& sym) {
  int n = sym.rows();
  if (sym.cols() != n) throw std::domain_error("signature of non-square matrix");
  Mat m = sym;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!m(i, j).is_rational()) throw std::domain_error("signature requires rational entries");
      if (m(i, j) != m(j, i)) throw std::domain_error("signature requires a symmetric matrix");
    }
  int pos = 0, neg = 0, zero = 0;
  // Lagrange symmetric reduction: repeatedly split off one square.
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  while (!live.empty()) {
    // Find a nonzero diagonal entry among live indices.
    int dpos = -1;
    for (std::size_t t = 0; t < live.size(); ++t)
      if (!m(live[t], live[t]).is_zero()) { dpos = static_cast<int>(t); break; }
    if (dpos < 0) {
      // All live diagonal entries are zero; find a nonzero off-diagonal pair.
      int ai = -1, aj = -1;
      for (std::size_t s = 0; s < live.size() && ai < 0; ++s)
        for (std::size_t t = s + 1; t < live.size(); ++t)
          if (!m(live[s], live[t]).is_zero()) { ai = live[s]; aj = live[t]; break; }
      if (ai < 0) { zero += static_cast<int>(live.size()); break; }
      // Replace basis vector e_ai by e_ai + e_aj to create a nonzero diagonal.
      for (int k = 0; k < n; ++k) m(ai, k) += m(aj, k);
      for (int k = 0; k < n; ++k) m(k, ai) += m(k, aj);
      continue;
    }
    int p = live[dpos];
    const Scalar d = m(p, p);
    if (d.as_rational() > 0) ++pos; else ++neg;
    live.erase(live.begin() + dpos);
    for (int u : live) {
      const Scalar f = m(u, p) / d;
      if (f.is_zero()) continue;
      for (int k = 0; k < n; ++k) m(u, k) -= f * m(p, k);
      for (int k = 0; k < n; ++k) m(k, u) -= f * m(k, p);
    }
  }
  return {pos, neg, zero};
}

SVec svec_from_dense(const Vec& v) {
  SVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s.emplace_back(static_cast<int>(k), v[k]);
  return s;
}

Vec svec_to_dense(const SVec& v, int n) {
  Vec d(n);
  for (const auto& [k, c] : v) d[k] = c;
  return d;
}

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b) {
  if (c.is_zero()) return a;
  SVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) r.emplace_back(b[j].first, v);
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, v);
      ++i; ++j;
    }
  }
  return r;
}

SVec svec_scale(const SVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SVec r;
  r.reserve(a.size());
  for (const auto& [k, v] : a) r.emplace_back(k, c * v);
  return r;
}

bool svec_is_zero(const SVec& a) { return a.empty(); }

}  // namespace tanaka
