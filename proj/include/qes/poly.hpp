#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "qes/scalar.hpp"

namespace qes {

using Exps = std::vector<int>;
using VarNames = std::vector<std::string>;

// Graded lexicographic order, largest first; earlier variables dominate (x > y).
struct GrlexDesc {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

inline VarNames default_vars(int n) {
  if (n == 1) return {"x"};
  if (n == 2) return {"x", "y"};
  VarNames v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

template <class S>
class MultiPoly {
 public:
  using Terms = std::map<Exps, S, GrlexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(VarNames vars) : vars_(std::move(vars)) {}
  MultiPoly(VarNames vars, const S& c) : vars_(std::move(vars)) {
    if (!qes::is_zero(c)) terms_.emplace(Exps(vars_.size(), 0), c);
  }

  static MultiPoly monomial(const VarNames& vars, Exps e, const S& c = S(1)) {
    MultiPoly p(vars);
    if (e.size() != vars.size()) throw UnknownVariable("exponent length mismatch");
    if (!qes::is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }
  static MultiPoly variable(const VarNames& vars, int i) {
    Exps e(vars.size(), 0);
    e.at(i) = 1;
    return monomial(vars, e);
  }

  const VarNames& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Exps& leading_exps() const { return terms_.begin()->first; }
  const S& leading_coeff() const { return terms_.begin()->second; }
  S coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars_[i] == name) return i;
    throw UnknownVariable("unknown variable '" + name + "'");
  }

  void add_term(const Exps& e, const S& c) {
    if (qes::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (qes::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const S& c) {
    if (qes::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const S& c) { return a *= c; }
  friend MultiPoly operator*(const S& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string mono;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = to_string(c);
      bool compound = cs.find(' ') != std::string::npos;
      if (mono.empty()) out += compound ? "(" + cs + ")" : cs;
      else if (cs == "1") out += mono;
      else if (cs == "-1") out += "-" + mono;
      else out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
    return out;
  }

 private:
  void adopt(const MultiPoly& o) {
    if (vars_.empty()) vars_ = o.vars_;
    else if (!o.vars_.empty() && o.vars_ != vars_) throw UnknownVariable("variable sets differ");
  }
  VarNames vars_;
  Terms terms_;
};

template <class S>
MultiPoly<S> partial(const MultiPoly<S>& p, int var) {
  if (var < 0 || var >= p.nvars()) throw UnknownVariable("variable index out of range");
  MultiPoly<S> r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exps f = e;
    f[var] -= 1;
    r.add_term(f, c * S(e[var]));
  }
  return r;
}

template <class S>
MultiPoly<S> partial(const MultiPoly<S>& p, const std::string& var) {
  return partial(p, p.var_index(var));
}

// x -> q x on a one-variable polynomial.
MultiPoly<QLaurent> q_dilate(const MultiPoly<QLaurent>& p);

// Exact quotient p / (x - y) for a polynomial in two variables, if it exists.
bool divide_x_minus_y(const MultiPoly<Rational>& p, MultiPoly<Rational>& quotient);

// (x - y)^gamma * body, body a polynomial in x, y.
struct GaugedPoly {
  Rational gamma;
  MultiPoly<Rational> body;

  GaugedPoly() : body(default_vars(2)) {}
  GaugedPoly(Rational g, MultiPoly<Rational> b) : gamma(std::move(g)), body(std::move(b)) {}

  // Absorbs all (x - y) factors of the body into gamma.
  GaugedPoly normalized() const;
  // Rewrites at a smaller exponent g (gamma - g must be a nonnegative integer).
  GaugedPoly at_gamma(const Rational& g) const;
  std::string str() const;
};

bool operator==(const GaugedPoly& a, const GaugedPoly& b);
inline bool operator!=(const GaugedPoly& a, const GaugedPoly& b) { return !(a == b); }
GaugedPoly operator+(const GaugedPoly& a, const GaugedPoly& b);
GaugedPoly gauged_partial(const GaugedPoly& g, int var);
GaugedPoly gauged_partial(const GaugedPoly& g, const std::string& var);

}  // namespace qes
