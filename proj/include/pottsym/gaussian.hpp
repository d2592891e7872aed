#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pottsym {

// Error hierarchy shared across the library. The CLI maps these to exit codes.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// Parses "a" or "a/b" with optional leading sign. Denominator must be positive.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);

// Exact complex scalar with rational real and imaginary parts, kept canonical
// (reduced fractions, positive denominators).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool isReal() const { return sgn(im) == 0; }
  bool isOne() const { return re == 1 && sgn(im) == 0; }

  GaussianRational conj() const { return {re, Rational(-im)}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  // Lexicographic (re, im); used for deterministic maps, not a numeric order.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  // Canonical text form: "a", "a/b", "a+c/di", "c/di", "3+i", "-i", ...
  std::string str() const;
  static GaussianRational parse(const std::string& text);

  double reDouble() const { return re.get_d(); }
  double imDouble() const { return im.get_d(); }
};

}  // namespace pottsym
