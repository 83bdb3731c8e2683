#include "qes/modspace.hpp"

namespace qes {

Mat<Rational> eval_matrix(const Mat<QLaurent>& m, const Rational& s0) {
  Mat<Rational> r = zeros<Rational>(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = eval_at(m(i, j), s0);
  return r;
}

Basis<Rational> echelonize(const VarNames& vars, const std::vector<MultiPoly<Rational>>& polys) {
  // leading monomial -> reduced element
  std::map<Exps, MultiPoly<Rational>, GrlexDesc> piv;
  for (const auto& p0 : polys) {
    MultiPoly<Rational> p = p0;
    // full reduction of p against current pivots
    while (!p.is_zero()) {
      auto it = piv.find(p.leading_exps());
      if (it == piv.end()) break;
      p -= it->second * p.leading_coeff();
    }
    if (p.is_zero()) continue;
    p *= Rational(1) / p.leading_coeff();
    // reduce lower terms of p against pivots
    MultiPoly<Rational> q(vars);
    for (const auto& [e, c] : p.terms()) q.add_term(e, c);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [e, c] : q.terms()) {
        if (e == q.leading_exps()) continue;
        auto it = piv.find(e);
        if (it != piv.end()) {
          q -= it->second * c;
          changed = true;
          break;
        }
      }
    }
    // clear the new pivot from existing elements
    const Exps lm = q.leading_exps();
    for (auto& [e, b] : piv) {
      Rational c = b.coeff(lm);
      if (!c.is_zero()) b -= q * c;
    }
    piv.emplace(lm, q);
  }
  std::vector<MultiPoly<Rational>> el;
  for (auto& [e, b] : piv) el.push_back(b);
  return Basis<Rational>(vars, el);
}

bool same_span(const Basis<Rational>& a, const Basis<Rational>& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& p : a.elements())
    if (!b.contains(p)) return false;
  return true;
}

namespace {

MultiPoly<Rational> pow_poly(const MultiPoly<Rational>& p, int k) {
  MultiPoly<Rational> r(p.vars(), Rational(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace

Basis<Rational> basis_M(int m, int n) {
  if (m < 0 || n < 0) throw Error("basis_M needs m, n >= 0");
  const auto vars = default_vars(2);
  MultiPoly<Rational> p = MultiPoly<Rational>::monomial(vars, {m, n});
  std::vector<MultiPoly<Rational>> gens;
  for (int k = 0; k <= m + n; ++k) {
    gens.push_back(p);
    p = partial(p, 0) + partial(p, 1);
  }
  return echelonize(vars, gens);
}

Basis<Rational> basis_olver(int m, int n) {
  if (m < 0 || n < 0) throw Error("basis_olver needs m, n >= 0");
  const auto vars = default_vars(2);
  const VarNames tv = {"t"};
  const int deg = 2 * m + n;
  // R_0(t) = (t-1)^(m+n) (t+1)^m
  MultiPoly<Rational> t = MultiPoly<Rational>::variable(tv, 0);
  MultiPoly<Rational> one(tv, Rational(1));
  MultiPoly<Rational> R = pow_poly(t - one, m + n) * pow_poly(t + one, m);
  const auto x = MultiPoly<Rational>::variable(vars, 0);
  const auto y = MultiPoly<Rational>::variable(vars, 1);
  const auto u = x + y;
  const auto v = x - y;
  std::vector<MultiPoly<Rational>> gens;
  for (int k = 0; k <= deg; ++k) {
    // v^(deg-k) R_k(u/v) = sum_j c_j u^j v^(deg-k-j)
    MultiPoly<Rational> h(vars);
    for (const auto& [e, c] : R.terms()) h += pow_poly(u, e[0]) * pow_poly(v, deg - k - e[0]) * c;
    gens.push_back(h);
    R = partial(R, 0);
  }
  return echelonize(vars, gens);
}

Basis<Rational> kernel_of(const DOp& op, const Basis<Rational>& domain) {
  // image coordinates over the monomials that occur
  std::map<Exps, int, GrlexDesc> idx;
  std::vector<MultiPoly<Rational>> imgs;
  for (const auto& b : domain.elements()) {
    imgs.push_back(apply(op, b));
    for (const auto& [e, c] : imgs.back().terms()) idx.emplace(e, 0);
  }
  int r = 0;
  for (auto& [e, i] : idx) i = r++;
  Mat<Rational> A = zeros<Rational>(r, domain.dim());
  for (int j = 0; j < domain.dim(); ++j)
    for (const auto& [e, c] : imgs[j].terms()) A(idx[e], j) = c;
  std::vector<MultiPoly<Rational>> ker;
  for (const auto& v : nullspace(A)) {
    MultiPoly<Rational> p(domain.vars());
    for (int j = 0; j < domain.dim(); ++j)
      if (!v(j).is_zero()) p += domain[j] * v(j);
    ker.push_back(p);
  }
  return echelonize(domain.vars(), ker);
}

void SpanBuilder::reduce(std::vector<Rational>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
  }
}

bool SpanBuilder::add(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("vector length differs from ambient dimension");
  reduce(v);
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  const Rational inv = Rational(1) / v[p];
  for (auto& c : v) c *= inv;
  for (auto& row : rows_) {
    const Rational c = row[p];
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      if (!v[j].is_zero()) row[j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Rational> flatten(const Mat<Rational>& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(m.rows() * m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::vector<Rational> to_std(const Vec<Rational>& v) {
  std::vector<Rational> r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = v(i);
  return r;
}

int rank(const Mat<Rational>& m) {
  SpanBuilder sb(static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) sb.add(to_std(m.row(i).transpose()));
  return sb.rank();
}

std::vector<Vec<Rational>> nullspace(const Mat<Rational>& m) {
  const int n = static_cast<int>(m.cols());
  SpanBuilder sb(n);
  for (int i = 0; i < m.rows(); ++i) sb.add(to_std(m.row(i).transpose()));
  std::vector<bool> is_piv(n, false);
  std::vector<int> piv_of_row;
  for (const auto& row : sb.rows()) {
    for (int j = 0; j < n; ++j)
      if (!row[j].is_zero()) {
        is_piv[j] = true;
        piv_of_row.push_back(j);
        break;
      }
  }
  std::vector<Vec<Rational>> out;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<Rational> v = Vec<Rational>::Constant(n, Rational(0));
    v(f) = Rational(1);
    for (size_t r = 0; r < sb.rows().size(); ++r) v(piv_of_row[r]) = -sb.rows()[r][f];
    out.push_back(v);
  }
  return out;
}

std::optional<Mat<Rational>> inverse(const Mat<Rational>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  Mat<Rational> a = m;
  Mat<Rational> inv = identity<Rational>(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    a.row(c).swap(a.row(p));
    inv.row(c).swap(inv.row(p));
    const Rational d = Rational(1) / a(c, c);
    a.row(c) *= d;
    inv.row(c) *= d;
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

int orbit_span(const std::vector<Mat<Rational>>& ops, const Vec<Rational>& seed) {
  const int n = static_cast<int>(seed.size());
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n) throw DimensionMismatch("operator and seed sizes differ");
  SpanBuilder sb(n);
  std::vector<Vec<Rational>> frontier;
  if (sb.add(to_std(seed))) frontier.push_back(seed);
  while (!frontier.empty()) {
    std::vector<Vec<Rational>> next;
    for (const auto& v : frontier)
      for (const auto& op : ops) {
        Vec<Rational> w = op * v;
        if (sb.add(to_std(w))) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return sb.rank();
}

EnvelopingResult enveloping_span(const std::vector<Mat<Rational>>& gens, int max_len) {
  EnvelopingResult res;
  if (gens.empty()) return res;
  const int n = static_cast<int>(gens.front().rows());
  res.target = n * n;
  SpanBuilder sb(n * n);
  std::vector<Mat<Rational>> frontier;
  Mat<Rational> id = identity<Rational>(n);
  sb.add(flatten(id));
  frontier.push_back(id);
  int len = 0;
  while (len < max_len && !frontier.empty() && sb.rank() < res.target) {
    ++len;
    std::vector<Mat<Rational>> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Mat<Rational> gw = g * w;
        if (sb.add(flatten(gw))) next.push_back(gw);
      }
    frontier = std::move(next);
  }
  res.dimension = sb.rank();
  res.words_length = len;
  return res;
}

}  // namespace qes
