#include "doctest.h"

#include "tanaka/matrix.hpp"

#include <cstdint>
#include <vector>

using tanaka::Mat;
using tanaka::Rational;
using tanaka::Scalar;
using tanaka::Vec;

namespace {

/// Textbook Gauss-Jordan elimination working directly over the field.
/// Slower than the fraction-free routine in the library; used here as an
/// independent oracle.
Mat naive_rref(Mat m, std::vector<int>* pivots = nullptr) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = Scalar(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

/// Deterministic xorshift so the cross-check corpus is reproducible.
struct Rng {
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long small(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
  Scalar scalar(bool complex_entries) {
    Rational re(small(-4, 4), small(1, 3));
    if (!complex_entries || small(0, 1) == 0) return Scalar(re);
    return Scalar(re, Rational(small(-4, 4), small(1, 3)));
  }
  Mat matrix(int rows, int cols, bool complex_entries) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = scalar(complex_entries);
    return m;
  }
};

}  // namespace

TEST_CASE("rref of a hand-picked matrix") {
  // [1 2 3; 2 4 8] -> [1 2 0; 0 0 1]
  Mat m(2, 3);
  m(0, 0) = Scalar(1);
  m(0, 1) = Scalar(2);
  m(0, 2) = Scalar(3);
  m(1, 0) = Scalar(2);
  m(1, 1) = Scalar(4);
  m(1, 2) = Scalar(8);
  auto [r, piv] = tanaka::rref(m);
  CHECK(piv == std::vector<int>{0, 2});
  CHECK(r(0, 0) == Scalar(1));
  CHECK(r(0, 1) == Scalar(2));
  CHECK(r(0, 2) == Scalar(0));
  CHECK(r(1, 2) == Scalar(1));
  CHECK(r(1, 0).is_zero());
  CHECK(r(1, 1).is_zero());
}

TEST_CASE("fraction-free rref agrees with naive field elimination") {
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    int rows = int(rng.small(1, 6));
    int cols = int(rng.small(1, 6));
    Mat m = rng.matrix(rows, cols, trial % 2 == 1);
    std::vector<int> naive_piv;
    Mat expect = naive_rref(m, &naive_piv);
    auto [got, piv] = tanaka::rref(m);
    CHECK(piv == naive_piv);
    bool same = got.rows() == expect.rows() && got.cols() == expect.cols();
    if (same) {
      for (int i = 0; i < got.rows() && same; ++i)
        for (int j = 0; j < got.cols() && same; ++j) same = got(i, j) == expect(i, j);
    }
    CHECK(same);
  }
}

TEST_CASE("kernel vectors are honest kernel elements of full dimension") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    int rows = int(rng.small(1, 5));
    int cols = int(rng.small(1, 6));
    Mat m = rng.matrix(rows, cols, trial % 2 == 0);
    auto ker = tanaka::kernel_basis(m);
    CHECK(int(ker.size()) == m.cols() - tanaka::rank(m));
    for (const auto& v : ker) {
      Vec image = m.apply(v);
      for (const auto& x : image) CHECK(x.is_zero());
    }
    if (!ker.empty()) {
      Mat stacked(int(ker.size()), m.cols());
      for (int i = 0; i < int(ker.size()); ++i) stacked.set_row(i, ker[size_t(i)]);
      CHECK(tanaka::rank(stacked) == int(ker.size()));
    }
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  Rng rng;
  int solved = 0, rejected = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int rows = int(rng.small(1, 5));
    int cols = int(rng.small(1, 5));
    Mat m = rng.matrix(rows, cols, trial % 3 == 0);
    Vec b(static_cast<size_t>(rows));
    if (trial % 2 == 0) {
      // Force consistency: b = m * x for a known x.
      Vec x(static_cast<size_t>(cols));
      for (auto& e : x) e = rng.scalar(trial % 3 == 0);
      b = m.apply(x);
    } else {
      for (auto& e : b) e = rng.scalar(trial % 3 == 0);
    }
    auto sol = tanaka::solve(m, b);
    if (sol) {
      ++solved;
      Vec image = m.apply(*sol);
      for (size_t i = 0; i < b.size(); ++i) CHECK(image[i] == b[i]);
    } else {
      ++rejected;
      // Inconsistency certificate: rank of augmented matrix must exceed rank(m).
      Mat aug(rows, cols + 1);
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = b[size_t(i)];
      }
      CHECK(tanaka::rank(aug) == tanaka::rank(m) + 1);
    }
  }
  CHECK(solved > 0);
  CHECK(rejected > 0);
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
  Rng rng;
  for (int trial = 0; trial < 30; ++trial) {
    int n = int(rng.small(1, 4));
    Mat m = rng.matrix(n, n, trial % 2 == 1);
    // Cofactor oracle.
    struct Cof {
      static Scalar det(const Mat& a) {
        int n = a.rows();
        if (n == 1) return a(0, 0);
        Scalar acc(0);
        Scalar sign(1);
        for (int j = 0; j < n; ++j) {
          Mat minor(n - 1, n - 1);
          for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
              if (c == j) continue;
              minor(r - 1, cc++) = a(r, c);
            }
          }
          acc = acc + sign * a(0, j) * det(minor);
          sign = -sign;
        }
        return acc;
      }
    };
    CHECK(tanaka::det(m) == Cof::det(m));
  }
}

TEST_CASE("inverse really inverts") {
  Mat m(3, 3);
  long entries[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Scalar(entries[i][j]);
  Mat inv = tanaka::inverse(m).value();
  CHECK((m * inv) == Mat::identity(3));
  CHECK((inv * m) == Mat::identity(3));

  Mat singular(2, 2);
  singular(0, 0) = Scalar(1);
  singular(0, 1) = Scalar(2);
  singular(1, 0) = Scalar(2);
  singular(1, 1) = Scalar(4);
  CHECK_FALSE(tanaka::inverse(singular).has_value());
}

TEST_CASE("signature of symmetric rational matrices") {
  SUBCASE("diagonal") {
    Mat d(3, 3);
    d(0, 0) = Scalar(2);
    d(1, 1) = Scalar(-5);
    // d(2,2) stays zero
    auto [pos, neg, zero] = tanaka::signature(d);
    CHECK(pos == 1);
    CHECK(neg == 1);
    CHECK(zero == 1);
  }
  SUBCASE("hyperbolic plane has signature (1,1)") {
    Mat h(2, 2);
    h(0, 1) = Scalar(1);
    h(1, 0) = Scalar(1);
    auto [pos, neg, zero] = tanaka::signature(h);
    CHECK(pos == 1);
    CHECK(neg == 1);
    CHECK(zero == 0);
  }
  SUBCASE("congruence invariance on random symmetric matrices") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
      int n = int(rng.small(2, 4));
      Mat a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Scalar v(Rational(rng.small(-3, 3)));
          a(i, j) = v;
          a(j, i) = v;
        }
      Mat p(n, n);
      do {
        p = rng.matrix(n, n, false);
      } while (tanaka::det(p).is_zero());
      Mat b = p.transpose() * a * p;
      CHECK(tanaka::signature(a) == tanaka::signature(b));
    }
  }
}

TEST_CASE("sparse vector helpers") {
  using tanaka::SVec;
  Vec d = {Scalar(0), Scalar(2), Scalar(0), Scalar(-1)};
  SVec s = tanaka::svec_from_dense(d);
  CHECK(s.size() == 2);
  CHECK(tanaka::svec_to_dense(s, 4) == d);

  SVec a = {{0, Scalar(1)}, {2, Scalar(3)}};
  SVec b = {{0, Scalar(-1)}, {1, Scalar(5)}};
  SVec sum = tanaka::svec_axpy(a, Scalar(1), b);
  CHECK(tanaka::svec_to_dense(sum, 3) == Vec{Scalar(0), Scalar(5), Scalar(3)});
  CHECK(tanaka::svec_is_zero(tanaka::svec_axpy(a, Scalar(-1), a)));
  SVec scaled = tanaka::svec_scale(a, Scalar(2));
  CHECK(tanaka::svec_to_dense(scaled, 3) == Vec{Scalar(2), Scalar(0), Scalar(6)});
}
