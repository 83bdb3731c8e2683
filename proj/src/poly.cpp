#include "qes/poly.hpp"

namespace qes {

MultiPoly<QLaurent> q_dilate(const MultiPoly<QLaurent>& p) {
  if (p.nvars() != 1) throw UnsupportedArity("q_dilate needs a one-variable polynomial");
  MultiPoly<QLaurent> r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * q_pow(e[0]));
  return r;
}

namespace {

MultiPoly<Rational> x_minus_y() {
  auto v = default_vars(2);
  return MultiPoly<Rational>::variable(v, 0) - MultiPoly<Rational>::variable(v, 1);
}

}  // namespace

bool divide_x_minus_y(const MultiPoly<Rational>& p, MultiPoly<Rational>& quotient) {
  if (p.nvars() != 2) throw UnsupportedArity("gauge factor needs polynomials in x, y");
  const auto& vars = p.vars();
  quotient = MultiPoly<Rational>(vars);
  if (p.is_zero()) return true;
  // Coefficients of powers of x, each a polynomial in y (stored with x-exponent 0).
  std::map<int, MultiPoly<Rational>> by_x;
  int top = 0;
  for (const auto& [e, c] : p.terms()) {
    auto it = by_x.try_emplace(e[0], MultiPoly<Rational>(vars)).first;
    it->second.add_term({0, e[1]}, c);
    top = std::max(top, e[0]);
  }
  auto coeff = [&](int k) {
    auto it = by_x.find(k);
    return it == by_x.end() ? MultiPoly<Rational>(vars) : it->second;
  };
  const auto y = MultiPoly<Rational>::variable(vars, 1);
  MultiPoly<Rational> b(vars);
  for (int k = top; k >= 1; --k) {
    b = coeff(k) + y * b;
    for (const auto& [e, c] : b.terms()) quotient.add_term({k - 1, e[1]}, c);
  }
  MultiPoly<Rational> rem = coeff(0) + y * b;
  return rem.is_zero();
}

GaugedPoly GaugedPoly::normalized() const {
  if (body.is_zero()) return GaugedPoly(Rational(0), MultiPoly<Rational>(default_vars(2)));
  GaugedPoly g = *this;
  MultiPoly<Rational> q;
  while (divide_x_minus_y(g.body, q)) {
    g.body = q;
    g.gamma += Rational(1);
  }
  return g;
}

GaugedPoly GaugedPoly::at_gamma(const Rational& g) const {
  Rational k = gamma - g;
  if (!k.is_integer() || k.sign() < 0) throw Error("gauge exponents not integrally related");
  GaugedPoly r(g, body);
  const auto f = x_minus_y();
  for (long i = 0; i < k.to_long(); ++i) r.body = r.body * f;
  return r;
}

std::string GaugedPoly::str() const {
  return "(x - y)^(" + gamma.str() + ") * (" + body.str() + ")";
}

bool operator==(const GaugedPoly& a, const GaugedPoly& b) {
  GaugedPoly na = a.normalized(), nb = b.normalized();
  if (na.body.is_zero() || nb.body.is_zero()) return na.body.is_zero() && nb.body.is_zero();
  return na.gamma == nb.gamma && na.body == nb.body;
}

GaugedPoly operator+(const GaugedPoly& a, const GaugedPoly& b) {
  if (a.body.is_zero()) return b;
  if (b.body.is_zero()) return a;
  Rational g = a.gamma < b.gamma ? a.gamma : b.gamma;
  GaugedPoly sa = a.at_gamma(g), sb = b.at_gamma(g);
  return GaugedPoly(g, sa.body + sb.body);
}

GaugedPoly gauged_partial(const GaugedPoly& g, int var) {
  if (var != 0 && var != 1) throw UnknownVariable("gauged polynomials use x, y only");
  const auto f = x_minus_y();
  Rational sign = var == 0 ? Rational(1) : Rational(-1);
  MultiPoly<Rational> body = g.body * (sign * g.gamma) + f * partial(g.body, var);
  return GaugedPoly(g.gamma - Rational(1), body);
}

GaugedPoly gauged_partial(const GaugedPoly& g, const std::string& var) {
  if (var == "x") return gauged_partial(g, 0);
  if (var == "y") return gauged_partial(g, 1);
  throw UnknownVariable("unknown variable '" + var + "'");
}

}  // namespace qes
