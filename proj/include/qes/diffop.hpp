#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qes/poly.hpp"

namespace qes {

// Normal-ordered differential operator: sum of c * x^alpha * d^beta.
template <class S>
class DiffOp {
 public:
  using Key = std::pair<Exps, Exps>;
  using Terms = std::map<Key, S>;

  DiffOp() = default;
  explicit DiffOp(int nvars) : nv_(nvars) {}
  DiffOp(int nvars, const S& c) : nv_(nvars) {
    if (!qes::is_zero(c)) terms_.emplace(Key{Exps(nvars, 0), Exps(nvars, 0)}, c);
  }

  static DiffOp term(int nvars, Exps alpha, Exps beta, const S& c = S(1)) {
    DiffOp r(nvars);
    r.add_term(alpha, beta, c);
    return r;
  }
  static DiffOp x(int nvars, int i) {
    Exps a(nvars, 0);
    a.at(i) = 1;
    return term(nvars, a, Exps(nvars, 0));
  }
  static DiffOp d(int nvars, int i) {
    Exps b(nvars, 0);
    b.at(i) = 1;
    return term(nvars, Exps(nvars, 0), b);
  }
  // Multiplication by a polynomial.
  static DiffOp mul(const MultiPoly<S>& p) {
    DiffOp r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Exps(p.nvars(), 0), c);
    return r;
  }

  int nvars() const { return nv_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& alpha, const Exps& beta, const S& c) {
    if (qes::is_zero(c)) return;
    if (nv_ == 0) nv_ = static_cast<int>(alpha.size());
    Key k{alpha, beta};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (qes::is_zero(it->second)) terms_.erase(it);
    }
  }

  DiffOp operator-() const {
    DiffOp r(nv_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  DiffOp& operator+=(const DiffOp& o) {
    if (nv_ == 0) nv_ = o.nv_;
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    if (nv_ == 0) nv_ = o.nv_;
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  DiffOp& operator*=(const S& c) {
    if (qes::is_zero(c)) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const S& c) { return a *= c; }
  friend DiffOp operator*(const S& c, DiffOp a) { return a *= c; }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) { return compose(a, b); }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  // a o b in normal form (Leibniz rule moved through each monomial).
  friend DiffOp compose(const DiffOp& a, const DiffOp& b) {
    DiffOp r(a.nv_ ? a.nv_ : b.nv_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) compose_terms(r, ka, kb, ca * cb);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    VarNames names = default_vars(nv_);
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string cs = to_string(c);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs + " *";
      bool any = false;
      for (int i = 0; i < nv_; ++i)
        if (k.first[i]) {
          out += " " + names[i] + "^" + std::to_string(k.first[i]);
          any = true;
        }
      for (int i = 0; i < nv_; ++i)
        if (k.second[i]) {
          out += " D" + names[i] + "^" + std::to_string(k.second[i]);
          any = true;
        }
      if (!any) out += " 1";
    }
    return out;
  }

 private:
  static void compose_terms(DiffOp& r, const Key& ka, const Key& kb, const S& c) {
    const Exps& alpha = ka.first;
    const Exps& beta = ka.second;
    const Exps& gamma = kb.first;
    const Exps& delta = kb.second;
    const int n = static_cast<int>(alpha.size());
    // enumerate k with 0 <= k_i <= min(beta_i, gamma_i)
    Exps k(n, 0);
    while (true) {
      Rational w(1);
      Exps xa(n), db(n);
      for (int i = 0; i < n; ++i) {
        w *= binom(beta[i], k[i]) * falling(gamma[i], k[i]);
        xa[i] = alpha[i] + gamma[i] - k[i];
        db[i] = beta[i] - k[i] + delta[i];
      }
      r.add_term(xa, db, c * S(w));
      int i = 0;
      for (; i < n; ++i) {
        if (k[i] < std::min(beta[i], gamma[i])) {
          ++k[i];
          break;
        }
        k[i] = 0;
      }
      if (i == n) break;
    }
  }
  static Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
  }
  static Rational falling(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(n - i);
    return r;
  }

  int nv_ = 0;
  Terms terms_;
};

template <class S>
DiffOp<S> commutator(const DiffOp<S>& a, const DiffOp<S>& b) {
  return compose(a, b) - compose(b, a);
}

template <class S>
DiffOp<S> anticommutator(const DiffOp<S>& a, const DiffOp<S>& b) {
  return compose(a, b) + compose(b, a);
}

template <class S>
MultiPoly<S> apply(const DiffOp<S>& op, const MultiPoly<S>& p) {
  if (!op.is_zero() && !p.is_zero() && op.nvars() != p.nvars())
    throw UnknownVariable("operator and polynomial use different variable sets");
  MultiPoly<S> r(p.vars());
  for (const auto& [k, c] : op.terms()) {
    const Exps& alpha = k.first;
    const Exps& beta = k.second;
    for (const auto& [e, pc] : p.terms()) {
      Rational w(1);
      Exps f(e.size());
      bool dead = false;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < beta[i]) {
          dead = true;
          break;
        }
        for (int t = 0; t < beta[i]; ++t) w *= Rational(e[i] - t);
        f[i] = e[i] - beta[i] + alpha[i];
      }
      if (!dead) r.add_term(f, c * pc * S(w));
    }
  }
  return r;
}

// Action on (x - y)^gamma * p through the gauged chain rule.
GaugedPoly apply_gauged(const DiffOp<Rational>& op, const GaugedPoly& g);

using DOp = DiffOp<Rational>;

// K x K matrix of operators; composition is the matrix product.
template <class Op>
class BlockOp {
 public:
  BlockOp() = default;
  explicit BlockOp(int k) : k_(k), e_(static_cast<size_t>(k) * k) {}

  static BlockOp diag(const std::vector<Op>& d) {
    BlockOp b(static_cast<int>(d.size()));
    for (int i = 0; i < b.k_; ++i) b(i, i) = d[i];
    return b;
  }
  static BlockOp scalar(int k, const Op& op) { return diag(std::vector<Op>(k, op)); }

  int size() const { return k_; }
  Op& operator()(int i, int j) { return e_.at(static_cast<size_t>(i) * k_ + j); }
  const Op& operator()(int i, int j) const { return e_.at(static_cast<size_t>(i) * k_ + j); }

  BlockOp operator-() const {
    BlockOp r(k_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  BlockOp& operator+=(const BlockOp& o) {
    check(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  BlockOp& operator-=(const BlockOp& o) {
    check(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  template <class C>
  BlockOp& operator*=(const C& c) {
    for (auto& x : e_) x *= c;
    return *this;
  }
  friend BlockOp operator+(BlockOp a, const BlockOp& b) { return a += b; }
  friend BlockOp operator-(BlockOp a, const BlockOp& b) { return a -= b; }
  friend BlockOp operator*(const BlockOp& a, const BlockOp& b) {
    a.check(b);
    BlockOp r(a.k_);
    for (int i = 0; i < a.k_; ++i)
      for (int j = 0; j < a.k_; ++j)
        for (int t = 0; t < a.k_; ++t) {
          const Op& x = a(i, t);
          const Op& y = b(t, j);
          if (x.is_zero() || y.is_zero()) continue;
          r(i, j) += compose(x, y);
        }
    return r;
  }
  friend bool operator==(const BlockOp& a, const BlockOp& b) { return a.k_ == b.k_ && a.e_ == b.e_; }
  friend bool operator!=(const BlockOp& a, const BlockOp& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  void check(const BlockOp& o) const {
    if (o.k_ != k_) throw DimensionMismatch("block sizes differ");
  }
  int k_ = 0;
  std::vector<Op> e_;
};

template <class Op>
BlockOp<Op> commutator(const BlockOp<Op>& a, const BlockOp<Op>& b) {
  return a * b - b * a;
}

template <class Op>
BlockOp<Op> anticommutator(const BlockOp<Op>& a, const BlockOp<Op>& b) {
  return a * b + b * a;
}

// Single nonzero entry at (i, j).
template <class Op>
BlockOp<Op> block_at(int k, int i, int j, const Op& op) {
  BlockOp<Op> b(k);
  b(i, j) = op;
  return b;
}

}  // namespace qes
