#pragma once

#include <random>

#include "qes/suites.hpp"

namespace qes::testing {

inline std::mt19937& rng() {
  static std::mt19937 g(20240611u);
  return g;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational rand_rational() {
  int d = rand_int(1, 4);
  return Rational(rand_int(-5, 5)) / Rational(d);
}

inline QLaurent rand_laurent() {
  QLaurent p;
  for (int k = 0; k < 3; ++k) p += QLaurent::monomial(rand_rational(), rand_int(-4, 4));
  return p;
}

inline MultiPoly<Rational> rand_poly(int nv, int deg) {
  MultiPoly<Rational> p(default_vars(nv));
  for (int k = 0; k < 4; ++k) {
    Exps e(nv);
    for (auto& v : e) v = rand_int(0, deg);
    p += MultiPoly<Rational>::monomial(default_vars(nv), e, rand_rational());
  }
  return p;
}

inline DOp rand_dop(int nv) {
  DOp r(nv);
  for (int k = 0; k < 3; ++k) {
    Exps a(nv), b(nv);
    for (auto& v : a) v = rand_int(0, 2);
    for (auto& v : b) v = rand_int(0, 2);
    r += DOp::term(nv, a, b, rand_rational());
  }
  return r;
}

inline QDiffOp rand_qop() {
  QDiffOp r;
  for (int k = 0; k < 3; ++k) r += QDiffOp::term(rand_int(0, 2), rand_int(0, 2), rand_int(0, 2), rand_laurent());
  return r;
}

inline MultiPoly<Rational> px(const Rational& c, int k) {
  return MultiPoly<Rational>::monomial(default_vars(1), {k}, c);
}

inline MultiPoly<QLaurent> qx(const QLaurent& c, int k) {
  return MultiPoly<QLaurent>::monomial(default_vars(1), {k}, c);
}

inline MultiPoly<Rational> pxy(const Rational& c, int a, int b) {
  return MultiPoly<Rational>::monomial(default_vars(2), {a, b}, c);
}

}  // namespace qes::testing
