#pragma once

#include <array>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "qes/algebra.hpp"

namespace qes {

// Generators (block operators) together with the module they preserve.
template <class S, class Op>
struct Rep {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  DirectSum<S> module;
  std::vector<std::string> labels;
  std::map<std::string, BlockOp<Op>> gens;

  void add(const std::string& l, BlockOp<Op> g) {
    if (!gens.count(l)) labels.push_back(l);
    gens[l] = std::move(g);
  }
  const BlockOp<Op>& at(const std::string& l) const { return gens.at(l); }
  int dim() const { return module.dim(); }

  // Realizes every generator; throws NotInvariant on the first failure.
  GenMatrices<S> matrices() const {
    GenMatrices<S> out;
    for (const auto& l : labels) out[l] = realize(gens.at(l), module);
    return out;
  }
};

using CRep = Rep<Rational, DOp>;
using QRep = Rep<QLaurent, QDiffOp>;
using DPair = std::array<DOp, 2>;

// Elementary operators in nv variables.
DOp cst(int nv, const Rational& c);
DOp var(int nv, int i);
DOp dvar(int nv, int i);

// gl(M+1) generator J^b_a on the variables vs (|vs| = M).
DOp gl_gen(int nv, const std::vector<int>& vs, int m, const Rational& gamma, int a, int b);
DOp gl_gen(int M, int m, const Rational& gamma, int a, int b);
// M = 1 generator in variable v, gamma = 0.
DOp gl1(int nv, int v, int m, int a, int b);

DOp j_plus(int nv, int v, int m);
DOp j_zero(int nv, int v, const Rational& m);
DOp j_minus(int nv, int v);

// q_a(X, m; Y, n) with X, Y variable indices in (x, y).
DPair tensor_q(int m, int n, int X = 0, int Y = 1);
// qbar_a(v, m) = (d_v, v d_v - m).
DPair tensor_qbar(int m, int nv = 1, int v = 0);
// One-variable q_a = (1, x).
DPair tensor_q1(int nv = 1, int v = 0);
// Indices raised with eps^{01} = 1: (o^0, o^1) = (o_1, -o_0).
DPair raise(const DPair& o);

// sl(2) Casimir for [j+, j-] = -2 j0: j0^2 - (j+ j- + j- j+)/2.
template <class Op>
BlockOp<Op> sl2_casimir(const BlockOp<Op>& jp, const BlockOp<Op>& j0, const BlockOp<Op>& jm) {
  BlockOp<Op> c = j0 * j0;
  BlockOp<Op> h = jp * jm + jm * jp;
  h *= Rational(1, 2);
  return c - h;
}

CRep rep_gl(int M, int m, const Rational& gamma);
CRep rep_sl2(int m);
CRep rep_gl_sum(int M, const std::vector<int>& ms, const std::vector<Rational>& gammas);
CRep rep_gl_product(int m, int n);
// K = (x-y) d_x d_y + n d_x - m d_y; its kernel on P(m;n) is M(m;n).
DOp op_K(int m, int n);

struct OlverRep {
  int m = 0, n = 0;
  DOp jp, j0, jm;  // tilde j_+, tilde j_0, tilde j_-
  Basis<Rational> basis;
  Rational gauge;  // -(m + n/2)
};
OlverRep rep_olver(int m, int n);
// Matrix of op on (x-y)^gauge * span(basis).
Mat<Rational> realize_gauged(const DOp& op, const Basis<Rational>& basis, const Rational& gauge);
Report check_olver_gauge(int m, int n);

struct Spl21Options {
  bool printed_coefficients = false;  // alpha/beta placement exactly as displayed
};
CRep rep_spl21_1var(int m, const Rational& t, Spl21Options opt = {});
CRep rep_spl21_1var_atypical(int m);
CRep rep_spl21_2var(int m, int n, bool swap = false);

// spl(2,2) atypical series; Y realized as zero.
CRep rep_spl22(int n);

// Ordered product q(x,[a];y,[b]) as a two-variable operator.
DOp graded_q(int m, int n, const std::vector<int>& a, const std::vector<int>& b);
BlockOp<DOp> graded_Q(int m, int n, const std::vector<int>& a, const std::vector<int>& b);
CRep rep_graded_diag(int m, int n, int dx, int dy);

struct RmodOps {
  CRep rep;  // J^b_a, R_a^b, Rb_a^b, T
  DOp trace_R, trace_Rb;
};
RmodOps rmod_ops(int m, int n);

QDiffOp qd_const(const QLaurent& c);
QRep rep_qspl21_2(int n);
// Q_1 carries the sign flip that makes the corrected table hold unless printed_sign is set.
QRep rep_qspl21_4(int n, const QLaurent& lambda, bool printed_sign = false);
// Adds J_mu^nu = {Q_mu, Qb^nu} to a deformed representation.
void add_deformed_bosons(QRep& r);

struct Casimirs {
  Mat<QLaurent> C1, C2;
};
Casimirs q_casimirs(const GenMatrices<QLaurent>& g);

}  // namespace qes
