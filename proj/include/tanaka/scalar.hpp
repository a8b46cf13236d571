#ifndef TANAKA_SCALAR_HPP
#define TANAKA_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tanaka {

/// Exact rational number (arbitrary precision, always canonicalized).
using Rational = mpq_class;

/// Parses "p", "p/q", or "-p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

/// Renders as "p" or "p/q" with positive denominator. Never produces a float.
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);

/// Converts an integral rational to long. Throws if not integral or out of range.
long rational_to_long(const Rational& r);

/// Element of the Gaussian rationals Q(i): re + im*i with exact rational parts.
/// All arithmetic is exact; division by zero throws std::domain_error.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    // mpq_class(num, den) does not canonicalize; comparisons require canonical form.
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_rational() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  /// Rational part extraction; throws std::domain_error if im != 0.
  const Rational& as_rational() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
  Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Scalar operator/(const Scalar& o) const;

  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Deterministic total order (lexicographic on (re, im)); used for canonical maps.
  bool operator<(const Scalar& o) const {
    if (re_ != o.re_) return re_ < o.re_;
    return im_ < o.im_;
  }

  /// Renders as "a", "b*i", or "a+b*i" (exact rational components).
  std::string to_string() const;

  /// Parses the formats produced by to_string().
  static Scalar from_string(const std::string& s);

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tanaka

#endif  // TANAKA_SCALAR_HPP
