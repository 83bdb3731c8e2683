#include <doctest.h>

#include "helpers.hpp"

using namespace qes;
using namespace qes::testing;

TEST_CASE("partial derivatives") {
  CHECK(partial(pxy(1, 2, 1), "x") == pxy(2, 1, 1));
  CHECK(partial(pxy(1, 0, 0), "x").is_zero());
  CHECK(partial(pxy(1, 2, 0) + pxy(3, 0, 2), "y") == pxy(6, 0, 1));
  CHECK_THROWS_AS(partial(pxy(1, 1, 1), "z"), UnknownVariable);
}

TEST_CASE("gauged partial") {
  const MultiPoly<Rational> one = pxy(1, 0, 0);
  GaugedPoly g1 = gauged_partial(GaugedPoly(Rational(1), one), "x").normalized();
  CHECK(g1 == GaugedPoly(Rational(0), one));
  GaugedPoly g2 = gauged_partial(GaugedPoly(Rational(1, 2), one), "y");
  CHECK(g2 == GaugedPoly(Rational(-1, 2), pxy(Rational(-1, 2), 0, 0)));
  // gamma = 0 reduces to the ordinary derivative
  MultiPoly<Rational> p = pxy(1, 2, 1) + pxy(3, 0, 2);
  CHECK(gauged_partial(GaugedPoly(Rational(0), p), "x") == GaugedPoly(Rational(0), partial(p, "x")));
}

TEST_CASE("q_dilate") {
  CHECK(q_dilate(qx(1, 3)) == qx(q_pow(3), 3));
  CHECK(q_dilate(qx(1, 0)) == qx(1, 0));
  CHECK(q_dilate(qx(1, 2) + qx(1, 1)) == qx(q_pow(2), 2) + qx(q_pow(1), 1));
  auto two = MultiPoly<QLaurent>::monomial(default_vars(2), {1, 1});
  CHECK_THROWS_AS(q_dilate(two), UnsupportedArity);
}

TEST_CASE("property: mixed partials commute") {
  for (int k = 0; k < 30; ++k) {
    auto p = rand_poly(2, 4);
    CHECK(partial(partial(p, 0), 1) == partial(partial(p, 1), 0));
  }
}

TEST_CASE("property: gauged partials commute") {
  for (int k = 0; k < 20; ++k) {
    GaugedPoly g(Rational(rand_int(-3, 3), 2), rand_poly(2, 3));
    CHECK(gauged_partial(gauged_partial(g, 0), 1).normalized() == gauged_partial(gauged_partial(g, 1), 0).normalized());
  }
}

TEST_CASE("property: q_dilate is a ring homomorphism") {
  for (int k = 0; k < 20; ++k) {
    MultiPoly<QLaurent> a(default_vars(1)), b(default_vars(1));
    for (int i = 0; i < 3; ++i) {
      a += qx(rand_laurent(), rand_int(0, 4));
      b += qx(rand_laurent(), rand_int(0, 4));
    }
    CHECK(q_dilate(a * b) == q_dilate(a) * q_dilate(b));
  }
}

TEST_CASE("division by x - y") {
  MultiPoly<Rational> q(default_vars(2));
  CHECK(divide_x_minus_y(pxy(1, 2, 0) - pxy(1, 0, 2), q));
  CHECK(q == pxy(1, 1, 0) + pxy(1, 0, 1));
  CHECK_FALSE(divide_x_minus_y(pxy(1, 1, 0), q));
}
