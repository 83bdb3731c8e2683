#include <doctest.h>

#include "helpers.hpp"

using namespace qes;
using namespace qes::testing;

namespace {
const QDiffOp X = QDiffOp::x(), S = QDiffOp::S(), D = QDiffOp::D();
const QLaurent q = q_pow(1);
}  // namespace

TEST_CASE("q_apply examples") {
  CHECK(q_apply(D, qx(1, 3)) == qx(qint(3), 2));
  CHECK(q_apply(D, qx(1, 0)).is_zero());
  CHECK(q_apply(S, qx(1, 2)) == qx(q_pow(2), 2));
  CHECK(q_apply(q_delta(4), qx(1, 4)).is_zero());
}

TEST_CASE("composition rules in normal form") {
  CHECK(D * X == X * D + S);
  CHECK(S * X == q * (X * S));
  CHECK(S * D == q_pow(-1) * (D * S));
}

TEST_CASE("composition rules by action on x^k") {
  for (int k = 0; k <= 8; ++k) {
    const auto p = qx(1, k);
    CHECK(q_apply(D, q_apply(X, p)) == q_apply(X, q_apply(D, p)) + q_apply(S, p));
    CHECK(q_apply(S, q_apply(X, p)) == q_apply(q * X, q_apply(S, p)));
    CHECK(q_apply(S, q_apply(D, p)) == q_apply(q_pow(-1) * D, q_apply(S, p)));
    if (k > 0) CHECK(q_apply(S * D, p) == qx(q_pow(k - 1) * qint(k), k - 1));
  }
}

TEST_CASE("q brackets") {
  CHECK(q_bracket(D, X, 2) == (QLaurent(1) - q) * (X * D) + S);
  CHECK(q_antibracket(X * D, X * D, 0) == QLaurent(2) * (X * D * X * D));
  CHECK(q_bracket(S, S, 0).is_zero());
}

TEST_CASE("classical limit") {
  CHECK(classical_limit(D) == DOp::d(1, 0));
  CHECK(classical_limit(S) == DOp(1, Rational(1)));
  CHECK(classical_limit(q_delta(3)) == DOp::x(1, 0) * DOp::d(1, 0) - DOp(1, Rational(3)));
  CHECK(classical_limit(D * X - X * D) == DOp(1, Rational(1)));
}

TEST_CASE("property: action compatibility of composition") {
  for (int t = 0; t < 25; ++t) {
    QDiffOp a = rand_qop(), b = rand_qop();
    MultiPoly<QLaurent> p(default_vars(1));
    for (int i = 0; i < 3; ++i) p += qx(rand_laurent(), rand_int(0, 5));
    CHECK(q_apply(a * b, p) == q_apply(a, q_apply(b, p)));
  }
}

TEST_CASE("property: q -> 1 reproduces the classical action") {
  for (int t = 0; t < 25; ++t) {
    QDiffOp a = rand_qop();
    const DOp c = classical_limit(a);
    for (int k = 0; k <= 6; ++k) {
      auto img = q_apply(a, qx(1, k));
      MultiPoly<Rational> ev(default_vars(1));
      for (const auto& [e, v] : img.terms()) ev += px(classical(v), e[0]);
      CHECK(ev == apply(c, px(1, k)));
    }
  }
}

TEST_CASE("property: degree band of realized matrices") {
  for (int t = 0; t < 10; ++t) {
    const int a = rand_int(0, 2), k = rand_int(0, 2), i = rand_int(0, 2);
    const QDiffOp op = QDiffOp::term(a, k, i);
    const int n = 5;
    for (int j = 0; j <= n; ++j) {
      auto img = q_apply(op, qx(1, j));
      for (const auto& [e, v] : img.terms()) CHECK(e[0] == j + a - i);
    }
  }
}
