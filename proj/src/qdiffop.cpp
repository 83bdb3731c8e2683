#include "qes/qdiffop.hpp"

namespace qes {

QDiffOp::QDiffOp(const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0, 0}, c);
}

QDiffOp QDiffOp::term(int a, int k, int i, const QLaurent& c) {
  QDiffOp r;
  r.add_term({a, k, i}, c);
  return r;
}

void QDiffOp::add_term(const Key& k, const QLaurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QDiffOp QDiffOp::operator-() const {
  QDiffOp r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

QDiffOp& QDiffOp::operator+=(const QDiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QDiffOp& QDiffOp::operator-=(const QDiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QDiffOp& QDiffOp::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string QDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string cs = c.str();
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    out += cs + " * x^" + std::to_string(k[0]) + " S^" + std::to_string(k[1]) + " D^" + std::to_string(k[2]);
  }
  return out;
}

namespace {

// D o (x^c S^m D^p) = q^m x^c S^m D^(p+1) + [c]_q x^(c-1) S^(m+1) D^p
QDiffOp left_D(const QDiffOp& b) {
  QDiffOp r;
  for (const auto& [k, c] : b.terms()) {
    r.add_term({k[0], k[1], k[2] + 1}, c * q_pow(k[1]));
    if (k[0] > 0) r.add_term({k[0] - 1, k[1] + 1, k[2]}, c * qint(k[0]));
  }
  return r;
}

// S o (x^c S^m D^p) = q^c x^c S^(m+1) D^p
QDiffOp left_S(const QDiffOp& b) {
  QDiffOp r;
  for (const auto& [k, c] : b.terms()) r.add_term({k[0], k[1] + 1, k[2]}, c * q_pow(k[0]));
  return r;
}

}  // namespace

QDiffOp q_compose(const QDiffOp& a, const QDiffOp& b) {
  QDiffOp r;
  for (const auto& [k, c] : a.terms()) {
    QDiffOp t = b;
    for (int i = 0; i < k[2]; ++i) t = left_D(t);
    for (int i = 0; i < k[1]; ++i) t = left_S(t);
    for (const auto& [kt, ct] : t.terms()) r.add_term({kt[0] + k[0], kt[1], kt[2]}, ct * c);
  }
  return r;
}

QDiffOp operator*(const QDiffOp& a, const QDiffOp& b) { return q_compose(a, b); }

QDiffOp q_bracket(const QDiffOp& a, const QDiffOp& b, int s_exp) {
  return q_compose(a, b) - s_pow(s_exp) * q_compose(b, a);
}

QDiffOp q_antibracket(const QDiffOp& a, const QDiffOp& b, int s_exp) {
  return q_compose(a, b) + s_pow(s_exp) * q_compose(b, a);
}

MultiPoly<QLaurent> q_apply(const QDiffOp& op, const MultiPoly<QLaurent>& p) {
  if (p.nvars() > 1) throw UnsupportedArity("finite-difference operators act on one variable");
  MultiPoly<QLaurent> r(p.vars().empty() ? default_vars(1) : p.vars());
  for (const auto& [k, c] : op.terms()) {
    for (const auto& [e, pc] : p.terms()) {
      int n = e[0];
      if (n < k[2]) continue;
      QLaurent w = c * pc;
      for (int t = 0; t < k[2]; ++t) w *= qint(n - t);
      w *= q_pow(k[1] * (n - k[2]));
      r.add_term({n - k[2] + k[0]}, w);
    }
  }
  return r;
}

DiffOp<Rational> classical_limit(const QDiffOp& op) {
  DiffOp<Rational> r(1);
  for (const auto& [k, c] : op.terms()) r.add_term({k[0]}, {k[2]}, eval_at(c, Rational(1)));
  return r;
}

QDiffOp q_delta(int n) { return QDiffOp::term(1, 0, 1) - QDiffOp(qint(n)); }

}  // namespace qes
