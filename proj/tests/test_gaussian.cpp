#include "doctest.h"
#include "testutil.hpp"

using namespace pottsym;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(parse_rational("+3/9") == Rational(1, 3));
  CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1//2"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("a/b"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("gaussian rational parsing covers the weight grammar") {
  CHECK(GaussianRational::parse("2") == GaussianRational(2));
  CHECK(GaussianRational::parse("1/2") == GaussianRational(Rational(1, 2)));
  CHECK(GaussianRational::parse("3+i") == GaussianRational(Rational(3), Rational(1)));
  CHECK(GaussianRational::parse("3-i") == GaussianRational(Rational(3), Rational(-1)));
  CHECK(GaussianRational::parse("3+1/2i") == GaussianRational(Rational(3), Rational(1, 2)));
  CHECK(GaussianRational::parse("1/2-3/4i") ==
        GaussianRational(Rational(1, 2), Rational(-3, 4)));
  CHECK(GaussianRational::parse("i") == GaussianRational(Rational(0), Rational(1)));
  CHECK(GaussianRational::parse("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(GaussianRational::parse("-1/2i") == GaussianRational(Rational(0), Rational(-1, 2)));
  CHECK_THROWS_AS(GaussianRational::parse("3+"), InputError);
  CHECK_THROWS_AS(GaussianRational::parse("1+2j"), InputError);
}

TEST_CASE("gaussian rational arithmetic is exact") {
  GaussianRational a(Rational(1, 2), Rational(1, 3));
  GaussianRational b(Rational(2), Rational(-1));
  CHECK((a + b) == GaussianRational(Rational(5, 2), Rational(-2, 3)));
  CHECK((a * b) == GaussianRational(Rational(4, 3), Rational(1, 6)));
  CHECK(a.conj() == GaussianRational(Rational(1, 2), Rational(-1, 3)));
  CHECK((a - a).isZero());
  CHECK((a * b).conj() == a.conj() * b.conj());
}

TEST_CASE("string round trip on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  for (int k = 0; k < 200; ++k) {
    Rational re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    GaussianRational g(re, im);
    CHECK(GaussianRational::parse(g.str()) == g);
  }
}
