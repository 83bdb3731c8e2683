#include <doctest.h>

#include "helpers.hpp"

using namespace qes;
using namespace qes::testing;

namespace {
int binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}
Basis<Rational> span_of(const std::vector<MultiPoly<Rational>>& ps) { return echelonize(default_vars(2), ps); }
}  // namespace

TEST_CASE("basis_P") {
  CHECK(basis_P<Rational>(2, 2).dim() == 6);
  auto b0 = basis_P<Rational>(0, 3);
  REQUIRE(b0.dim() == 1);
  CHECK(b0[0].total_degree() == 0);
  auto b3 = basis_P<Rational>(3, 1);
  REQUIRE(b3.dim() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(b3.contains(px(1, k)));
}

TEST_CASE("property: dim P(m,M) = C(M+m, M)") {
  for (int M = 1; M <= 3; ++M)
    for (int m = 0; m <= 5; ++m) CHECK(basis_P<Rational>(m, M).dim() == binom(M + m, M));
}

TEST_CASE("basis_M") {
  auto M11 = basis_M(1, 1);
  CHECK(M11.dim() == 3);
  CHECK(same_span(M11, span_of({pxy(1, 1, 1), pxy(1, 1, 0) + pxy(1, 0, 1), pxy(1, 0, 0)})));
  CHECK(basis_M(2, 3).dim() == 6);
  auto M20 = basis_M(2, 0);
  CHECK(same_span(M20, span_of({pxy(1, 0, 0), pxy(1, 1, 0), pxy(1, 2, 0)})));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) CHECK(basis_M(m, n).dim() == m + n + 1);
}

TEST_CASE("kernel_of") {
  CHECK(same_span(kernel_of(op_K(1, 1), basis_P_bidegree<Rational>(1, 1)),
                  span_of({pxy(1, 0, 0), pxy(1, 1, 0) + pxy(1, 0, 1), pxy(1, 1, 1)})));
  auto k = kernel_of(DOp::d(1, 0), basis_P<Rational>(2, 1));
  REQUIRE(k.dim() == 1);
  CHECK(k[0].total_degree() == 0);
}

TEST_CASE("property: ker K on P(m;n) = M(m;n)") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) CHECK(same_span(kernel_of(op_K(m, n), basis_P_bidegree<Rational>(m, n)), basis_M(m, n)));
}

TEST_CASE("basis_olver") {
  CHECK(same_span(basis_olver(0, 1), span_of({pxy(1, 0, 1), pxy(1, 0, 0)})));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      CHECK(basis_olver(m, n).dim() == 2 * m + n + 1);
      CHECK(same_span(basis_olver(m, n), basis_M(m, m + n)));
    }
}

TEST_CASE("realize") {
  const DirectSum<Rational> P2({basis_P<Rational>(2, 1)});
  Mat<Rational> jm = realize(BlockOp<DOp>::scalar(1, j_minus(1, 0)), P2);
  Mat<Rational> want = zeros<Rational>(3, 3);
  want(0, 1) = Rational(1);
  want(1, 2) = Rational(2);
  CHECK(equal(jm, want));
  Mat<Rational> jp = realize(BlockOp<DOp>::scalar(1, j_plus(1, 0, 2)), P2);
  for (int i = 0; i < 3; ++i) CHECK(jp(i, 2).is_zero());
}

TEST_CASE("realize raises NotInvariant with the remainder") {
  const DirectSum<Rational> bad({monomial_basis<Rational>(default_vars(1), {{0}, {2}})});
  try {
    realize(BlockOp<DOp>::scalar(1, DOp::d(1, 0)), bad);
    FAIL("expected NotInvariant");
  } catch (const NotInvariant& e) {
    CHECK(e.component == 0);
    CHECK(e.remainder == px(2, 1).str());
  }
}

TEST_CASE("orbit_span") {
  auto sl2 = rep_sl2(3);
  Vec<Rational> top = Vec<Rational>::Zero(4);
  top(3) = Rational(1);
  std::vector<BlockOp<DOp>> ops;
  for (const auto& l : sl2.labels) ops.push_back(sl2.at(l));
  CHECK(orbit_span(ops, top, sl2.module) == 4);

  // the product action on P(1;1) is reducible: xy generates only M(1;1)
  const DirectSum<Rational> P11({basis_P_bidegree<Rational>(1, 1)});
  std::vector<BlockOp<DOp>> prod = {BlockOp<DOp>::scalar(1, j_plus(2, 0, 1) + j_plus(2, 1, 1)),
                                    BlockOp<DOp>::scalar(1, j_zero(2, 0, Rational(1)) + j_zero(2, 1, Rational(1))),
                                    BlockOp<DOp>::scalar(1, j_minus(2, 0) + j_minus(2, 1))};
  Vec<Rational> xy = Vec<Rational>::Zero(4);
  const auto& b = P11.components[0];
  std::vector<Rational> c = [&] {
    MultiPoly<Rational> rem;
    return b.coords(pxy(1, 1, 1), rem);
  }();
  for (int i = 0; i < 4; ++i) xy(i) = c[i];
  CHECK(orbit_span(prod, xy, P11) == 3);

  auto two = rep_spl21_2var(1, 1);
  Vec<Rational> seed = Vec<Rational>::Zero(two.dim());
  seed(0) = Rational(1);
  std::vector<BlockOp<DOp>> gs;
  for (const auto& l : two.labels) gs.push_back(two.at(l));
  CHECK(orbit_span(gs, seed, two.module) == 7);
}

TEST_CASE("enveloping_span") {
  auto sl2 = rep_sl2(1).matrices();
  std::vector<Mat<Rational>> g;
  for (const auto& [k, v] : sl2) g.push_back(v);
  auto r = enveloping_span(g, 2);
  CHECK(r.dimension == 4);
  CHECK(r.saturated());

  auto q2 = rep_qspl21_2(2).matrices();
  std::vector<Mat<Rational>> gq;
  for (const auto& l : {lbl_Q(0), lbl_Q(1), lbl_Qb(0), lbl_Qb(1)}) gq.push_back(eval_matrix(q2.at(l), Rational(2)));
  auto rq = enveloping_span(gq, 8);
  CHECK(rq.target == 25);
  CHECK(rq.dimension == 25);
}

TEST_CASE("property: realize is functorial") {
  auto rep = rep_spl21_2var(1, 2);
  auto g = rep.matrices();
  for (const auto& a : rep.labels)
    for (const auto& b : rep.labels) {
      Mat<Rational> ab = realize(rep.at(a) * rep.at(b), rep.module);
      CHECK(equal(ab, mul(g.at(a), g.at(b))));
    }
}

TEST_CASE("sparse product agrees with the dense product") {
  Mat<Rational> a = zeros<Rational>(3, 4), b = zeros<Rational>(4, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Rational((i * 7 + j * 3) % 5 - 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) b(i, j) = Rational((i + 2 * j) % 3 - 1, 2);
  CHECK(equal(mul(a, b), Mat<Rational>(a * b)));
  CHECK_THROWS_AS(mul(b, b), DimensionMismatch);
}

TEST_CASE("rank, nullspace and inverse") {
  Mat<Rational> m = zeros<Rational>(3, 3);
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(2);
  m(1, 0) = Rational(2);
  m(1, 1) = Rational(4);
  m(2, 2) = Rational(3);
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero_matrix(Mat<Rational>(m * ns[0])));
  CHECK_FALSE(inverse(m).has_value());
  m(1, 1) = Rational(5);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(equal(mul(m, *inv), identity<Rational>(3)));
}
