#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace leibniz {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a position (1-based line, 0-based column offset).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Exact element of Q(i): real and imaginary parts are arbitrary-precision
/// rationals kept in canonical form (reduced, positive denominator, 0 == 0/1).
/// Immutable in spirit: all operations return fresh values.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Builds a value from raw numerator/denominator pairs and normalizes.
  /// Throws Error on a zero denominator.
  static GaussianRational from_fraction(const mpz_class& re_num, const mpz_class& re_den,
                                        const mpz_class& im_num = 0, const mpz_class& im_den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return im_ == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// Multiplicative inverse; throws Error on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

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
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical text form, e.g. "0", "1/2", "-1/3*i", "1/2+3/4*i", "2-1*i".
  std::string str() const;

  /// Parses the scalar grammar
  ///   S := R | R ('+'|'-') R '*i' | R '*i'
  ///   R := INT | INT '/' POSINT      (INT may carry a sign)
  /// Whitespace is ignored. A leading '-' binds to the first numeral, so
  /// "-1/2+3*i" reads as (-1/2) + 3i. Throws ParseError on violation.
  static GaussianRational parse(std::string_view text);

private:
  mpq_class re_;
  mpq_class im_;
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_one(const GaussianRational& x) { return x.is_one(); }

/// Shorthand constructors used throughout catalog tables and tests.
inline GaussianRational frac(long num, long den = 1) {
  return GaussianRational::from_fraction(num, den);
}
inline GaussianRational ifrac(long num, long den = 1) {
  return GaussianRational::from_fraction(0, 1, num, den);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace leibniz

namespace Eigen {

template <>
struct NumTraits<leibniz::GaussianRational> : GenericNumTraits<leibniz::GaussianRational> {
  typedef leibniz::GaussianRational Real;
  typedef leibniz::GaussianRational NonInteger;
  typedef leibniz::GaussianRational Nested;
  typedef leibniz::GaussianRational Literal;

  enum {
    IsComplex = 0,  // treated as an opaque exact field
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };

  static inline Real epsilon() { return leibniz::GaussianRational(0); }
  static inline Real dummy_precision() { return leibniz::GaussianRational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
