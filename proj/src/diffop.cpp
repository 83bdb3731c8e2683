#include "qes/diffop.hpp"

namespace qes {

GaugedPoly apply_gauged(const DiffOp<Rational>& op, const GaugedPoly& g) {
  if (!op.is_zero() && op.nvars() != 2) throw UnsupportedArity("gauged action needs operators in x, y");
  const auto vars = default_vars(2);
  GaugedPoly acc(Rational(0), MultiPoly<Rational>(vars));
  for (const auto& [k, c] : op.terms()) {
    GaugedPoly h = g;
    for (int v = 0; v < 2; ++v)
      for (int t = 0; t < k.second[v]; ++t) h = gauged_partial(h, v);
    h.body = h.body * MultiPoly<Rational>::monomial(vars, k.first, c);
    acc = acc + h;
  }
  return acc.normalized();
}

}  // namespace qes
