#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lierad {

using Rational = mpq_class;

/// Thrown when scalar or algebra text cannot be parsed.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both components are kept canonical (lowest terms, positive denominator),
/// so structural equality is field equality.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}
  GaussianRational(int re) : re_(re) {}
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_real()) {
      if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  /// this -= a * b, without a temporary when everything is real.
  void sub_mul(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real() && b.is_real()) {
      re_ -= a.re_ * b.re_;
      return;
    }
    re_ -= a.re_ * b.re_ - a.im_ * b.im_;
    im_ -= a.re_ * b.im_ + a.im_ * b.re_;
  }
  /// this += a * b
  void add_mul(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real() && b.is_real()) {
      re_ += a.re_ * b.re_;
      return;
    }
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text form "p/q", "p/q+r/s*i", "p/q-r/s*i"; "/1" is omitted.
  std::string to_string() const;
  static GaussianRational parse(std::string_view text);

  std::size_t hash() const {
    std::hash<std::string> h;
    return h(re_.get_str()) ^ (h(im_.get_str()) * 31u);
  }

private:
  Rational re_{0};
  Rational im_{0};
};

using Scalar = GaussianRational;

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

inline std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  Rational mag = abs(im_);
  std::string imag = mag == 1 ? std::string("i") : mag.get_str() + "*i";
  if (sgn(im_) < 0) {
    out += "-" + imag;
  } else {
    if (!out.empty()) out += "+";
    out += imag;
  }
  return out;
}

namespace detail {

inline Rational parse_rational(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty rational in scalar '" + std::string(whole) + "'");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    char c = s[k];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit && k + 1 < s.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError("bad character in scalar '" + std::string(whole) + "'");
    }
  }
  if (!seen_digit) throw ParseError("malformed rational in scalar '" + std::string(whole) + "'");
  std::string str(s[0] == '+' ? s.substr(1) : s);
  Rational q;
  if (q.set_str(str, 10) != 0) throw ParseError("malformed rational in scalar '" + std::string(whole) + "'");
  if (seen_slash && sgn(q.get_den()) == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

// Parses the imaginary coefficient written in front of "i" (may be empty, "+" or "-").
inline Rational parse_imag_coeff(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  if (s.back() == '*') s.remove_suffix(1);
  return parse_rational(s, whole);
}

}  // namespace detail

inline GaussianRational GaussianRational::parse(std::string_view text) {
  std::string buf;
  for (char c : text)
    if (c != ' ' && c != '\t') buf.push_back(c);
  std::string_view s(buf);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GaussianRational(detail::parse_rational(s, text));
  s.remove_suffix(1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), detail::parse_imag_coeff(s, text)};
  return {detail::parse_rational(s.substr(0, split), text), detail::parse_imag_coeff(s.substr(split), text)};
}

}  // namespace lierad
