#pragma once

#include <array>
#include <map>
#include <string>

#include "qes/diffop.hpp"

namespace qes {

// Normal-ordered finite-difference operator in one variable: sum of c * x^a S^k D^i,
// with D the q-derivative and S the dilation f(x) -> f(qx).
class QDiffOp {
 public:
  using Key = std::array<int, 3>;  // (a, k, i)
  using Terms = std::map<Key, QLaurent>;

  QDiffOp() = default;
  QDiffOp(const QLaurent& c);  // NOLINT: scalar operator
  static QDiffOp term(int a, int k, int i, const QLaurent& c = QLaurent(1));
  static QDiffOp x() { return term(1, 0, 0); }
  static QDiffOp S() { return term(0, 1, 0); }
  static QDiffOp D() { return term(0, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return 1; }
  void add_term(const Key& k, const QLaurent& c);

  QDiffOp operator-() const;
  QDiffOp& operator+=(const QDiffOp& o);
  QDiffOp& operator-=(const QDiffOp& o);
  QDiffOp& operator*=(const QLaurent& c);
  friend QDiffOp operator+(QDiffOp a, const QDiffOp& b) { return a += b; }
  friend QDiffOp operator-(QDiffOp a, const QDiffOp& b) { return a -= b; }
  friend QDiffOp operator*(QDiffOp a, const QLaurent& c) { return a *= c; }
  friend QDiffOp operator*(const QLaurent& c, QDiffOp a) { return a *= c; }
  friend QDiffOp operator*(const QDiffOp& a, const QDiffOp& b);
  friend bool operator==(const QDiffOp& a, const QDiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QDiffOp& a, const QDiffOp& b) { return !(a == b); }

  std::string str() const;

 private:
  Terms terms_;
};

QDiffOp q_compose(const QDiffOp& a, const QDiffOp& b);
inline QDiffOp compose(const QDiffOp& a, const QDiffOp& b) { return q_compose(a, b); }

// a b - s^k b a and a b + s^k b a (k is an s-exponent, so q^(k/2)).
QDiffOp q_bracket(const QDiffOp& a, const QDiffOp& b, int s_exp);
QDiffOp q_antibracket(const QDiffOp& a, const QDiffOp& b, int s_exp);

MultiPoly<QLaurent> q_apply(const QDiffOp& op, const MultiPoly<QLaurent>& p);

// s -> 1 with S -> identity and D -> d/dx: the classical operator.
DiffOp<Rational> classical_limit(const QDiffOp& op);

// x D - [n]_q
QDiffOp q_delta(int n);

}  // namespace qes
