#include "tanaka/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace tanaka {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts "p/q" directly but silently tolerates some junk; validate first.
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    char c = s[k];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit && k + 1 < s.size()) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + s);
  Rational r(s[0] == '+' ? s.substr(1) : s);
  if (seen_slash && r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long rational_to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + rational_to_string(r));
  if (!r.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + rational_to_string(r));
  return r.get_num().get_si();
}

const Rational& Scalar::as_rational() const {
  if (im_ != 0) throw std::domain_error("scalar has nonzero imaginary part: " + to_string());
  return re_;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2), exact in Q(i).
  Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  return Scalar((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
}

std::string Scalar::to_string() const {
  if (im_ == 0) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rational_to_string(im_) + "*i";
  if (re_ == 0) return imag;
  if (im_ > 0) return rational_to_string(re_) + "+" + imag;
  return rational_to_string(re_) + imag;  // im < 0 carries its own sign
}

Scalar Scalar::from_string(const std::string& s) {
  // Accepted forms: "a", "i", "-i", "b*i", "a+i", "a-i", "a+b*i", "a-b*i"
  // with a, b rational literals.
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s.back() != 'i') return Scalar(rational_from_string(s));
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  auto parse_coeff = [&s](const std::string& t) -> Rational {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    if (t.back() == '+' || t.back() == '-')
      throw std::invalid_argument("malformed scalar literal: " + s);
    return rational_from_string(t);
  };
  // Split off the real part at the last sign that is not a leading sign and
  // does not follow '/', '*', or another sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] != '+' && body[k] != '-') continue;
    char prev = body[k - 1];
    if (prev == '/' || prev == '*' || prev == '+' || prev == '-') continue;
    Rational re = rational_from_string(body.substr(0, k));
    std::string imtxt = body.substr(k);
    if (imtxt == "+") imtxt.clear();
    return Scalar(re, parse_coeff(imtxt));
  }
  return Scalar(Rational(0), parse_coeff(body));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tanaka
