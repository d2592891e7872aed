#include "pottsym/gaussian.hpp"

#include <cctype>

namespace pottsym {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw InputError("malformed rational: empty string");
  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  std::string num = body, den = "1";
  size_t slash = body.find('/');
  if (slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("malformed rational '" + text + "': zero denominator");
  Rational r(n, d);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string GaussianRational::str() const {
  if (isReal()) return rational_str(re);
  std::string out;
  bool haveRe = sgn(re) != 0;
  if (haveRe) out += rational_str(re);
  Rational mag = im;
  bool negIm = sgn(im) < 0;
  if (negIm) mag = -mag;
  if (haveRe)
    out += negIm ? "-" : "+";
  else if (negIm)
    out += "-";
  if (mag != 1) out += rational_str(mag);
  out += "i";
  return out;
}

GaussianRational GaussianRational::parse(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw InputError("malformed weight: empty string");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};
  std::string body = s.substr(0, s.size() - 1);
  // Split off a real part if a sign separates two terms.
  size_t split = std::string::npos;
  for (size_t k = 1; k < body.size(); ++k) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string rePart, imPart;
  if (split == std::string::npos) {
    imPart = body;
  } else {
    rePart = body.substr(0, split);
    imPart = body.substr(split);
  }
  Rational re(0), im;
  if (!rePart.empty()) re = parse_rational(rePart);
  if (imPart.empty() || imPart == "+")
    im = 1;
  else if (imPart == "-")
    im = -1;
  else
    im = parse_rational(imPart);
  return {re, im};
}

}  // namespace pottsym
