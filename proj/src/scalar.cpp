#include "leibniz/scalar.hpp"

#include <cctype>
#include <ostream>

namespace leibniz {

GaussianRational GaussianRational::from_fraction(const mpz_class& re_num, const mpz_class& re_den,
                                                 const mpz_class& im_num, const mpz_class& im_den) {
  if (sgn(re_den) == 0 || sgn(im_den) == 0) {
    throw Error("malformed scalar: zero denominator");
  }
  return GaussianRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) {
    throw Error("division by zero");
  }
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussianRational(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  if (is_real()) return re_.get_str();
  std::string imag = mpq_class(abs(im_)).get_str() + "*i";
  if (sgn(re_) == 0) {
    return (sgn(im_) < 0 ? "-" : "") + imag;
  }
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

namespace {

struct ScalarCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos); }

  mpz_class digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  // R := INT ['/' POSINT], INT optionally signed
  mpq_class rational() {
    bool neg = false;
    while (eat('-')) neg = !neg;
    mpz_class num = digits();
    mpz_class den = 1;
    if (eat('/')) {
      if (peek() == '-') fail("denominator must be positive");
      den = digits();
      if (sgn(den) == 0) fail("denominator must be positive");
    }
    mpq_class q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  // "*i" suffix following a rational
  bool imaginary_marker() {
    std::size_t save = pos;
    if (eat('*')) {
      if (eat('i')) return true;
      pos = save;
      fail("expected 'i' after '*'");
    }
    return false;
  }
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  ScalarCursor cur{text};
  if (cur.done()) cur.fail("empty scalar");

  mpq_class first = cur.rational();
  if (cur.imaginary_marker()) {
    if (!cur.done()) cur.fail("trailing characters after imaginary part");
    return GaussianRational(0, std::move(first));
  }
  char c = cur.peek();
  if (c == '+' || c == '-') {
    ++cur.pos;
    mpq_class second = cur.rational();
    if (!cur.imaginary_marker()) cur.fail("expected '*i' after imaginary coefficient");
    if (!cur.done()) cur.fail("trailing characters after imaginary part");
    if (c == '-') second = -second;
    return GaussianRational(std::move(first), std::move(second));
  }
  if (!cur.done()) cur.fail("trailing characters after scalar");
  return GaussianRational(std::move(first), 0);
}

}  // namespace leibniz
