#include <doctest.h>

#include "helpers.hpp"

using namespace qes;
using namespace qes::testing;

TEST_CASE("qint expansions") {
  CHECK(qint(0).is_zero());
  CHECK(qint(3) == QLaurent::parse("1 + 1*s^2 + 1*s^4"));
  CHECK(eval_at(qint(3), Rational(2)) == Rational(21));
  CHECK_THROWS_AS(qint(-1), NegativeQInt);
}

TEST_CASE("s_pow and q_pow") {
  CHECK(s_pow(0) == QLaurent(1));
  CHECK(s_pow(-2) == q_pow(-1));
  CHECK(s_pow(3) * s_pow(-3) == QLaurent(1));
  CHECK(q_pow(2) == QLaurent::monomial(Rational(1), 4));
}

TEST_CASE("eval_at") {
  CHECK(eval_at(QLaurent(1), Rational(7, 3)) == Rational(1));
  CHECK(eval_at(s_pow(-2), Rational(1, 2)) == Rational(4));
  CHECK_THROWS_AS(eval_at(s_pow(-1), Rational(0)), EvalAtZero);
  CHECK_THROWS_AS(eval_at(QLaurent(5), Rational(0)), EvalAtZero);
}

TEST_CASE("rational canonical text") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("laurent canonical text") {
  CHECK(qint(3).str() == "1 + 1*s^2 + 1*s^4");
  CHECK(QLaurent::parse("q^-3") == q_pow(-3));
  CHECK(QLaurent::parse("0").is_zero());
}

TEST_CASE("property: qint recursion") {
  for (int n = 1; n <= 12; ++n) CHECK(qint(n) - q_pow(1) * qint(n - 1) == QLaurent(1));
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  for (int k = 0; k < 50; ++k) {
    QLaurent a = rand_laurent(), b = rand_laurent();
    Rational s0 = rand_rational();
    if (s0.is_zero()) s0 = Rational(3, 2);
    CHECK(eval_at(a * b, s0) == eval_at(a, s0) * eval_at(b, s0));
    CHECK(eval_at(a + b, s0) == eval_at(a, s0) + eval_at(b, s0));
  }
}

TEST_CASE("property: parse(print(p)) round trip") {
  for (int k = 0; k < 50; ++k) {
    QLaurent p = rand_laurent();
    CHECK(QLaurent::parse(p.str()) == p);
    Rational r = rand_rational();
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("monomial division") {
  QLaurent p = qint(3) * s_pow(5);
  CHECK(p / s_pow(5) == qint(3));
  CHECK_THROWS(p / QLaurent(0));
}
