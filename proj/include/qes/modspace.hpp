#pragma once

#include <Eigen/Core>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qes/diffop.hpp"
#include "qes/qdiffop.hpp"

namespace qes {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Mat<S> zeros(int r, int c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Mat<S> identity(int n) {
  Mat<S> m = zeros<S>(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Product that skips zero entries; exact scalars make dense products slow.
template <class S>
Mat<S> mul(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes differ");
  Mat<S> r = zeros<S>(a.rows(), b.cols());
  std::vector<std::vector<int>> nzb(static_cast<size_t>(b.rows()));
  for (int k = 0; k < b.rows(); ++k)
    for (int j = 0; j < b.cols(); ++j)
      if (!is_zero(b(k, j))) nzb[k].push_back(j);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const S& x = a(i, k);
      if (is_zero(x)) continue;
      for (int j : nzb[k]) r(i, j) += x * b(k, j);
    }
  return r;
}

Mat<Rational> eval_matrix(const Mat<QLaurent>& m, const Rational& s0);

// Echelonized list of polynomials: distinct leading monomials, unit leading coefficients,
// each leading monomial absent from every other element.
template <class S>
class Basis {
 public:
  Basis() = default;
  Basis(VarNames vars, std::vector<MultiPoly<S>> elems) : vars_(std::move(vars)), elems_(std::move(elems)) {
    for (int i = 0; i < dim(); ++i) lead_.emplace(elems_[i].leading_exps(), i);
  }

  const VarNames& vars() const { return vars_; }
  int dim() const { return static_cast<int>(elems_.size()); }
  const std::vector<MultiPoly<S>>& elements() const { return elems_; }
  const MultiPoly<S>& operator[](int i) const { return elems_.at(i); }

  // Coordinates of p; the unreduced part is left in remainder.
  std::vector<S> coords(const MultiPoly<S>& p, MultiPoly<S>& remainder) const {
    std::vector<S> c(dim(), S(0));
    MultiPoly<S> r = p;
    remainder = MultiPoly<S>(p.vars().empty() ? vars_ : p.vars());
    while (!r.is_zero()) {
      const Exps lm = r.leading_exps();
      const S lc = r.leading_coeff();
      auto it = lead_.find(lm);
      if (it == lead_.end()) {
        remainder.add_term(lm, lc);
        r.add_term(lm, -lc);
        continue;
      }
      c[it->second] += lc;
      r -= elems_[it->second] * lc;
    }
    return c;
  }
  bool contains(const MultiPoly<S>& p) const {
    MultiPoly<S> rem;
    coords(p, rem);
    return rem.is_zero();
  }

 private:
  VarNames vars_;
  std::vector<MultiPoly<S>> elems_;
  std::map<Exps, int, GrlexDesc> lead_;
};

Basis<Rational> echelonize(const VarNames& vars, const std::vector<MultiPoly<Rational>>& polys);
bool same_span(const Basis<Rational>& a, const Basis<Rational>& b);

template <class S>
Basis<S> monomial_basis(const VarNames& vars, const std::vector<Exps>& exps) {
  std::vector<MultiPoly<S>> el;
  for (const auto& e : exps) el.push_back(MultiPoly<S>::monomial(vars, e));
  return Basis<S>(vars, el);
}

// Total degree <= m in M variables.
template <class S>
Basis<S> basis_P_total(int m, int M) {
  std::vector<Exps> ex;
  Exps e(M, 0);
  while (true) {
    int d = 0;
    for (int v : e) d += v;
    if (d <= m) ex.push_back(e);
    int i = 0;
    for (; i < M; ++i) {
      if (e[i] < m) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == M) break;
  }
  return monomial_basis<S>(default_vars(M), ex);
}

template <class S>
Basis<S> basis_P(int m, int M = 1) {
  return basis_P_total<S>(m, M);
}

// Degree <= m in x and <= n in y.
template <class S>
Basis<S> basis_P_bidegree(int m, int n) {
  std::vector<Exps> ex;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) ex.push_back({i, j});
  return monomial_basis<S>(default_vars(2), ex);
}

Basis<Rational> basis_M(int m, int n);
Basis<Rational> basis_olver(int m, int n);
Basis<Rational> kernel_of(const DOp& op, const Basis<Rational>& domain);

template <class S>
struct DirectSum {
  std::vector<Basis<S>> components;

  DirectSum() = default;
  explicit DirectSum(std::vector<Basis<S>> c) : components(std::move(c)) {}
  int size() const { return static_cast<int>(components.size()); }
  int dim() const {
    int d = 0;
    for (const auto& b : components) d += b.dim();
    return d;
  }
  int offset(int comp) const {
    int d = 0;
    for (int i = 0; i < comp; ++i) d += components[i].dim();
    return d;
  }
  std::vector<int> dims() const {
    std::vector<int> d;
    for (const auto& b : components) d.push_back(b.dim());
    return d;
  }
};

inline MultiPoly<Rational> act(const DOp& op, const MultiPoly<Rational>& p) { return apply(op, p); }
inline MultiPoly<QLaurent> act(const QDiffOp& op, const MultiPoly<QLaurent>& p) { return q_apply(op, p); }

// Column j holds the codomain coordinates of the image of domain basis vector j.
template <class S, class Op>
Mat<S> realize(const BlockOp<Op>& op, const DirectSum<S>& dom, const DirectSum<S>& cod) {
  if (op.size() != dom.size() || op.size() != cod.size())
    throw DimensionMismatch("block size does not match the number of components");
  Mat<S> m = zeros<S>(cod.dim(), dom.dim());
  for (int cj = 0; cj < dom.size(); ++cj) {
    const auto& bj = dom.components[cj];
    for (int j = 0; j < bj.dim(); ++j) {
      for (int ci = 0; ci < cod.size(); ++ci) {
        const Op& entry = op(ci, cj);
        if (entry.is_zero()) continue;
        MultiPoly<S> img = act(entry, bj[j]);
        if (img.is_zero()) continue;
        MultiPoly<S> rem;
        auto c = cod.components[ci].coords(img, rem);
        if (!rem.is_zero()) throw NotInvariant(ci, j, rem.str());
        int off = cod.offset(ci);
        for (int i = 0; i < static_cast<int>(c.size()); ++i) m(off + i, dom.offset(cj) + j) = c[i];
      }
    }
  }
  return m;
}

template <class S, class Op>
Mat<S> realize(const BlockOp<Op>& op, const DirectSum<S>& ds) {
  return realize(op, ds, ds);
}

// Incrementally maintained reduced row echelon span over the rationals.
class SpanBuilder {
 public:
  explicit SpanBuilder(int n) : n_(n) {}
  // Returns true if v enlarged the span.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<Rational>& v) const;
  int n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

std::vector<Rational> flatten(const Mat<Rational>& m);
std::vector<Rational> to_std(const Vec<Rational>& v);
int rank(const Mat<Rational>& m);
std::vector<Vec<Rational>> nullspace(const Mat<Rational>& m);
// Inverse of a square matrix; nullopt when singular.
std::optional<Mat<Rational>> inverse(const Mat<Rational>& m);

int orbit_span(const std::vector<Mat<Rational>>& ops, const Vec<Rational>& seed);

template <class Op>
int orbit_span(const std::vector<BlockOp<Op>>& ops, const Vec<Rational>& seed, const DirectSum<Rational>& ds) {
  std::vector<Mat<Rational>> mats;
  for (const auto& op : ops) mats.push_back(realize(op, ds));
  return orbit_span(mats, seed);
}

struct EnvelopingResult {
  int dimension = 0;
  int target = 0;
  int words_length = 0;  // length at which the span stopped growing (or max_len)
  bool saturated() const { return dimension == target; }
};

// Span of all words of length <= max_len in gens (identity included).
EnvelopingResult enveloping_span(const std::vector<Mat<Rational>>& gens, int max_len);

template <class S>
nlohmann::json matrix_json(const Mat<S>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return {{"ring", ring_name<S>()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace qes
