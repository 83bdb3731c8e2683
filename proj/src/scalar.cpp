#include "qes/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qes {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string n = t.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d)) throw ParseError("bad rational '" + text + "'");
  if (n[0] == '+') n = n.substr(1);
  if (d[0] == '+') d = d.substr(1);
  mpz_class zn(n), zd(d);
  if (zd == 0) throw DivisionByZero();
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer()) throw Error("rational " + str() + " is not an integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, int e) {
  if (e < 0) return Rational(1) / pow(base, -e);
  Rational r(1), b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

QLaurent::QLaurent(const Rational& c) {
  if (!c.is_zero()) terms_[0] = c;
}

QLaurent QLaurent::monomial(const Rational& c, int k) {
  QLaurent p;
  if (!c.is_zero()) p.terms_[k] = c;
  return p;
}

void QLaurent::add_term(int k, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational QLaurent::constant() const { return coeff(0); }

Rational QLaurent::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QLaurent::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int QLaurent::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      first = false;
    } else if (a.sign() < 0) {
      out += " - ";
      a = -a;
    } else {
      out += " + ";
    }
    out += a.str();
    if (k != 0) out += "*s^" + std::to_string(k);
  }
  return out;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [i, ci] : a.terms_)
    for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = *this * o;
  return *this;
}

QLaurent& QLaurent::operator/=(const QLaurent& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.terms_.size() != 1) throw Error("QLaurent division by non-monomial " + o.str());
  const auto& [k, c] = *o.terms_.begin();
  Terms t;
  for (const auto& [i, ci] : terms_) t.emplace(i - k, ci / c);
  terms_ = std::move(t);
  return *this;
}

namespace {

// Parses one signed term: [coef][*](s|q)[^int], or a bare coefficient.
QLaurent parse_term(const std::string& term, const std::string& whole) {
  if (term.empty()) throw ParseError("bad Laurent polynomial '" + whole + "'");
  size_t var = term.find_first_of("sq");
  if (var == std::string::npos) return QLaurent(Rational::parse(term));
  std::string coef = term.substr(0, var);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Rational c(1);
  if (coef == "-") c = Rational(-1);
  else if (coef == "+" || coef.empty()) c = Rational(1);
  else c = Rational::parse(coef);
  char v = term[var];
  std::string rest = term.substr(var + 1);
  long e = 1;
  if (!rest.empty()) {
    if (rest[0] != '^') throw ParseError("bad Laurent polynomial '" + whole + "'");
    rest = rest.substr(1);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    Rational ex = Rational::parse(rest);
    if (v == 'q') ex *= Rational(2);
    if (!ex.is_integer()) throw ParseError("non-integer s exponent in '" + whole + "'");
    return QLaurent::monomial(c, static_cast<int>(ex.to_long()));
  }
  if (v == 'q') e = 2;
  return QLaurent::monomial(c, static_cast<int>(e));
}

}  // namespace

QLaurent QLaurent::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty Laurent polynomial");
  QLaurent r;
  size_t start = 0;
  for (size_t i = 1; i <= t.size(); ++i) {
    bool split = i == t.size();
    if (!split && (t[i] == '+' || t[i] == '-')) {
      char prev = t[i - 1];
      split = prev != '^' && prev != '(' && prev != '*' && prev != '/';
    }
    if (split) {
      std::string term = t.substr(start, i - start);
      if (!term.empty() && term[0] == '+') term = term.substr(1);
      r += parse_term(term, text);
      start = i;
    }
  }
  return r;
}

QLaurent qint(int n) {
  if (n < 0) throw NegativeQInt(n);
  QLaurent r;
  for (int i = 0; i < n; ++i) r += QLaurent::monomial(Rational(1), 2 * i);
  return r;
}

QLaurent s_pow(int k) { return QLaurent::monomial(Rational(1), k); }
QLaurent q_pow(int k) { return s_pow(2 * k); }

Rational eval_at(const QLaurent& p, const Rational& s0) {
  if (s0.is_zero()) throw EvalAtZero();
  Rational r(0);
  for (const auto& [k, c] : p.terms()) r += c * pow(s0, k);
  return r;
}

}  // namespace qes
