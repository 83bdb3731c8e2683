#include "qes/reps.hpp"

namespace qes {

DOp cst(int nv, const Rational& c) { return DOp(nv, c); }
DOp var(int nv, int i) { return DOp::x(nv, i); }
DOp dvar(int nv, int i) { return DOp::d(nv, i); }

namespace {

DOp euler(int nv, const std::vector<int>& vs) {
  DOp d(nv);
  for (int v : vs) d += var(nv, v) * dvar(nv, v);
  return d;
}

template <class Op>
BlockOp<Op> negated_offdiag(BlockOp<Op> b, int a, int c) {
  if (a != c) b = -b;
  return b;
}

BlockOp<DOp> diag2(const DOp& a, const DOp& b) { return BlockOp<DOp>::diag({a, b}); }

}  // namespace

DOp gl_gen(int nv, const std::vector<int>& vs, int m, const Rational& gamma, int a, int b) {
  const int M = static_cast<int>(vs.size());
  if (a < 0 || b < 0 || a > M || b > M) throw Error("gl index out of range");
  const DOp D = euler(nv, vs);
  if (a == 0 && b == 0) return D - cst(nv, Rational(m)) + cst(nv, gamma);
  if (a == 0) return dvar(nv, vs[b - 1]);
  if (b == 0) return -(var(nv, vs[a - 1]) * (D - cst(nv, Rational(m))));
  DOp r = -(var(nv, vs[a - 1]) * dvar(nv, vs[b - 1]));
  if (a == b) r += cst(nv, gamma);
  return r;
}

DOp gl_gen(int M, int m, const Rational& gamma, int a, int b) {
  std::vector<int> vs(M);
  for (int i = 0; i < M; ++i) vs[i] = i;
  return gl_gen(M, vs, m, gamma, a, b);
}

DOp gl1(int nv, int v, int m, int a, int b) { return gl_gen(nv, std::vector<int>{v}, m, Rational(0), a, b); }

DOp j_plus(int nv, int v, int m) {
  return var(nv, v) * var(nv, v) * dvar(nv, v) - cst(nv, Rational(m)) * var(nv, v);
}
DOp j_zero(int nv, int v, const Rational& m) { return var(nv, v) * dvar(nv, v) - cst(nv, m / Rational(2)); }
DOp j_minus(int nv, int v) { return dvar(nv, v); }

DPair tensor_q(int m, int n, int X, int Y) {
  const int nv = 2;
  const Rational k = Rational(1) / Rational(m + 1);
  const DOp x = var(nv, X), y = var(nv, Y), dy = dvar(nv, Y);
  DOp q0 = (cst(nv, Rational(m + n + 1)) + (x - y) * dy) * k;
  DOp q1 = (cst(nv, Rational(m + 1)) * x + cst(nv, Rational(n)) * y + y * (x - y) * dy) * k;
  return {q0, q1};
}

DPair tensor_qbar(int m, int nv, int v) {
  return {dvar(nv, v), var(nv, v) * dvar(nv, v) - cst(nv, Rational(m))};
}

DPair tensor_q1(int nv, int v) { return {cst(nv, Rational(1)), var(nv, v)}; }

DPair raise(const DPair& o) { return {o[1], -o[0]}; }

CRep rep_gl(int M, int m, const Rational& gamma) {
  if (M < 1 || m < 0) throw Error("rep_gl needs M >= 1, m >= 0");
  CRep r;
  r.family = "gl";
  r.params = {{"M", M}, {"m", m}, {"gamma", gamma.str()}};
  r.module = DirectSum<Rational>({basis_P<Rational>(m, M)});
  for (int a = 0; a <= M; ++a)
    for (int b = 0; b <= M; ++b) r.add(lbl_J(a, b), BlockOp<DOp>::scalar(1, gl_gen(M, m, gamma, a, b)));
  return r;
}

CRep rep_sl2(int m) {
  if (m < 0) throw Error("rep_sl2 needs m >= 0");
  CRep r;
  r.family = "sl2";
  r.params = {{"m", m}};
  r.module = DirectSum<Rational>({basis_P<Rational>(m, 1)});
  r.add("j+", BlockOp<DOp>::scalar(1, j_plus(1, 0, m)));
  r.add("j0", BlockOp<DOp>::scalar(1, j_zero(1, 0, Rational(m))));
  r.add("j-", BlockOp<DOp>::scalar(1, j_minus(1, 0)));
  return r;
}

CRep rep_gl_sum(int M, const std::vector<int>& ms, const std::vector<Rational>& gammas) {
  if (ms.empty() || ms.size() != gammas.size()) throw Error("rep_gl_sum needs equal nonempty lists");
  CRep r;
  r.family = "gl_sum";
  nlohmann::json g = nlohmann::json::array();
  for (const auto& x : gammas) g.push_back(x.str());
  r.params = {{"M", M}, {"m", ms}, {"gamma", g}};
  std::vector<Basis<Rational>> comps;
  for (int m : ms) comps.push_back(basis_P<Rational>(m, M));
  r.module = DirectSum<Rational>(comps);
  const int k = static_cast<int>(ms.size());
  for (int a = 0; a <= M; ++a)
    for (int b = 0; b <= M; ++b) {
      std::vector<DOp> d;
      for (int i = 0; i < k; ++i) {
        DOp e = gl_gen(M, ms[i], Rational(0), a, b);
        if (a == b) e += cst(M, gammas[i]);
        d.push_back(e);
      }
      r.add(lbl_J(a, b), BlockOp<DOp>::diag(d));
    }
  return r;
}

CRep rep_gl_product(int m, int n) {
  if (m < 0 || n < 0) throw Error("rep_gl_product needs m, n >= 0");
  CRep r;
  r.family = "gl_product";
  r.params = {{"m", m}, {"n", n}};
  r.module = DirectSum<Rational>({basis_M(m, n)});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.add(lbl_J(a, b), BlockOp<DOp>::scalar(1, gl1(2, 0, m, a, b) + gl1(2, 1, n, a, b)));
  return r;
}

DOp op_K(int m, int n) {
  const DOp x = var(2, 0), y = var(2, 1), dx = dvar(2, 0), dy = dvar(2, 1);
  return (x - y) * dx * dy + dx * Rational(n) - dy * Rational(m);
}

OlverRep rep_olver(int m, int n) {
  if (m < 0 || n < 0) throw Error("rep_olver needs m, n >= 0");
  OlverRep o;
  o.m = m;
  o.n = n;
  const DOp x = var(2, 0), y = var(2, 1), dx = dvar(2, 0), dy = dvar(2, 1);
  o.jm = dx + dy;
  o.j0 = x * dx + y * dy;
  o.jp = x * x * dx + y * y * dy + (x - y) * Rational(n, 2);
  o.basis = basis_olver(m, n);
  o.gauge = -(Rational(m) + Rational(n, 2));
  return o;
}

Mat<Rational> realize_gauged(const DOp& op, const Basis<Rational>& basis, const Rational& gauge) {
  Mat<Rational> mat = zeros<Rational>(basis.dim(), basis.dim());
  for (int j = 0; j < basis.dim(); ++j) {
    GaugedPoly img = apply_gauged(op, GaugedPoly(gauge, basis[j]));
    if (img.body.is_zero()) continue;
    Rational k = img.gamma - gauge;
    if (!k.is_integer() || k.sign() < 0) throw NotInvariant(0, j, img.str());
    MultiPoly<Rational> rem;
    auto c = basis.coords(img.at_gamma(gauge).body, rem);
    if (!rem.is_zero()) throw NotInvariant(0, j, rem.str());
    for (int i = 0; i < basis.dim(); ++i) mat(i, j) = c[i];
  }
  return mat;
}

Report check_olver_gauge(int m, int n) {
  const OlverRep o = rep_olver(m, n);
  Report rep;
  rep.suite = "olver";
  rep.params = {{"m", m}, {"n", n}};
  const DOp jt[3] = {o.jp, o.j0, o.jm};
  const DOp jd[3] = {j_plus(2, 0, m) + j_plus(2, 1, m + n), j_zero(2, 0, Rational(m)) + j_zero(2, 1, Rational(m + n)),
                     j_minus(2, 0) + j_minus(2, 1)};
  const char* names[3] = {"j+", "j0", "j-"};
  const Basis<Rational> M = basis_M(m, m + n);
  for (int e = 0; e < 3; ++e)
    for (int k = 0; k < M.dim(); ++k) {
      GaugedPoly lhs = apply_gauged(jt[e], GaugedPoly(o.gauge, M[k]));
      GaugedPoly rhs = GaugedPoly(o.gauge, apply(jd[e], M[k])).normalized();
      rep.expect(lhs == rhs, std::string("gauge ") + names[e] + " on basis element " + std::to_string(k), lhs.str(),
                 rhs.str());
    }
  rep.expect(same_span(o.basis, M), "(x-y)^(m+n/2) Mtilde(m;n) = M(m;m+n)");
  rep.extra["dimension"] = o.basis.dim();
  return rep;
}

CRep rep_spl21_1var(int m, const Rational& t, Spl21Options opt) {
  if (m < 1) throw Error("rep_spl21_1var needs m >= 1");
  if (t == Rational(-(m + 1))) throw SingularParameter("t = -(m+1)");
  CRep r;
  r.family = "spl21_1var";
  r.params = {{"m", m}, {"t", t.str()}};
  r.module = DirectSum<Rational>(
      {basis_P<Rational>(m, 1), basis_P<Rational>(m + 1, 1), basis_P<Rational>(m - 1, 1), basis_P<Rational>(m, 1)});
  const Rational al = (Rational(m) - t) / Rational(2 * (m + 1));
  const Rational be = (Rational(m + 2) + t) / Rational(2 * (m + 1));
  const DPair q = tensor_q1(), qup = raise(q);
  const DPair qb_m = tensor_qbar(m), qb_m1 = tensor_qbar(m + 1);
  const DPair qbu_m = raise(qb_m), qbu_m1 = raise(qb_m1);
  std::vector<BlockOp<DOp>> Q, Qb;
  for (int a = 0; a < 2; ++a) {
    BlockOp<DOp> A(4);
    A(1, 0) = q[a];
    A(2, 0) = qb_m[a];
    A(3, 1) = qb_m1[a];
    A(3, 2) = -q[a];
    Q.push_back(A);
    BlockOp<DOp> B(4);
    B(0, 1) = qbu_m1[a] * al;
    B(0, 2) = qup[a] * be;
    if (opt.printed_coefficients) {
      B(1, 3) = qup[a] * al;
      B(2, 3) = -(qbu_m[a] * be);
    } else {
      B(1, 3) = qup[a] * be;
      B(2, 3) = -(qbu_m[a] * al);
    }
    Qb.push_back(B);
  }
  for (int a = 0; a < 2; ++a) r.add(lbl_Q(a), Q[a]);
  for (int a = 0; a < 2; ++a) r.add(lbl_Qb(a), Qb[a]);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.add(lbl_J(a, b), anticommutator(Q[a], Qb[b]));
  return r;
}

CRep rep_spl21_1var_atypical(int m) {
  CRep full = rep_spl21_1var(m, Rational(-(m + 2)));
  CRep r;
  r.family = "spl21_1var_atypical";
  r.params = {{"m", m}, {"t", std::to_string(-(m + 2))}};
  r.module = DirectSum<Rational>({full.module.components[0], full.module.components[1]});
  for (const auto& l : full.labels) {
    const auto& g = full.at(l);
    BlockOp<DOp> b(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b(i, j) = g(i, j);
    r.add(l, b);
  }
  return r;
}

CRep rep_spl21_2var(int m, int n, bool swap) {
  if (m < 0 || n < 0) throw Error("rep_spl21_2var needs m, n >= 0");
  const int X = swap ? 1 : 0, Y = swap ? 0 : 1;
  CRep r;
  r.family = "spl21_2var";
  r.params = {{"m", m}, {"n", n}, {"swap", swap}};
  if (swap) r.module = DirectSum<Rational>({basis_M(n, m), basis_M(n, m + 1)});
  else r.module = DirectSum<Rational>({basis_M(m, n), basis_M(m + 1, n)});
  const DPair q = tensor_q(m, n, X, Y);
  const DPair qbu = raise(tensor_qbar(m + 1, 2, X));
  std::vector<BlockOp<DOp>> Q, Qb;
  for (int a = 0; a < 2; ++a) {
    Q.push_back(block_at(2, 1, 0, q[a]));
    Qb.push_back(block_at(2, 0, 1, qbu[a]));
  }
  for (int a = 0; a < 2; ++a) r.add(lbl_Q(a), Q[a]);
  for (int a = 0; a < 2; ++a) r.add(lbl_Qb(a), Qb[a]);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.add(lbl_J(a, b), anticommutator(Q[a], Qb[b]));
  return r;
}

CRep rep_spl22(int n) {
  if (n < 1) throw Error("rep_spl22 needs n >= 1");
  CRep r;
  r.family = "spl22_atypical";
  r.params = {{"n", n}};
  r.module = DirectSum<Rational>({basis_P_bidegree<Rational>(n, n), basis_P_bidegree<Rational>(n + 1, n - 1),
                                  basis_P_bidegree<Rational>(n - 1, n + 1), basis_P_bidegree<Rational>(n, n)});
  const int xdeg[4] = {n, n + 1, n - 1, n};
  const int ydeg[4] = {n, n - 1, n + 1, n};
  auto bosons = [&](int v, const int* deg, auto lbl) {
    std::vector<DOp> jm(4), j0(4), jp(4);
    for (int i = 0; i < 4; ++i) {
      jm[i] = -j_minus(2, v);
      j0[i] = j_zero(2, v, Rational(deg[i]));
      jp[i] = j_plus(2, v, deg[i]);
    }
    const auto J00 = BlockOp<DOp>::diag(j0);
    r.add(lbl(0, 0), J00);
    r.add(lbl(0, 1), BlockOp<DOp>::diag(jm));
    r.add(lbl(1, 0), BlockOp<DOp>::diag(jp));
    r.add(lbl(1, 1), -J00);
  };
  bosons(0, xdeg, lbl_J);
  bosons(1, ydeg, lbl_Jt);
  r.add("Y", BlockOp<DOp>(4));
  const DPair qx = tensor_q1(2, 0), qy = tensor_q1(2, 1);
  auto qbx = [](int k) { return tensor_qbar(k, 2, 0); };
  auto qby = [](int k) { return tensor_qbar(k, 2, 1); };
  const Rational inv = Rational(1) / Rational(n + 1);
  BlockOp<DOp> V[2][2], Vb[2][2];
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      BlockOp<DOp> v(4), w(4);
      v(1, 0) = qx[a] * qby(n)[c];
      v(2, 0) = qbx(n)[a] * qy[c];
      v(3, 1) = qbx(n + 1)[a] * qy[c];
      v(3, 2) = -(qx[a] * qby(n + 1)[c]);
      w(0, 1) = -(qbx(n + 1)[a] * qy[c]) * inv;
      w(0, 2) = qx[a] * qby(n + 1)[c] * inv;
      w(1, 3) = qx[a] * qby(n)[c] * inv;
      w(2, 3) = qbx(n)[a] * qy[c] * inv;
      V[a][c] = v;
      Vb[a][c] = w;
    }
  // Q^b_a = eps^{bc} V_{ac}, Qb^b_a = eps^{bc} Vb_{ca}, eps^{01} = 1
  for (int a = 0; a < 2; ++a) {
    r.add(lbl_Q2(a, 0), V[a][1]);
    r.add(lbl_Q2(a, 1), -V[a][0]);
  }
  for (int a = 0; a < 2; ++a) {
    r.add(lbl_Qb2(a, 0), Vb[1][a]);
    r.add(lbl_Qb2(a, 1), -Vb[0][a]);
  }
  return r;
}

DOp graded_q(int m, int n, const std::vector<int>& a, const std::vector<int>& b) {
  const int dl = static_cast<int>(a.size());
  DOp op = cst(2, Rational(1));
  for (int k = 1; k <= dl; ++k) op = tensor_q(m + k - 1, n, 0, 1)[a[k - 1]] * op;
  for (int l = 1; l <= static_cast<int>(b.size()); ++l) op = tensor_q(n + l - 1, m + dl, 1, 0)[b[l - 1]] * op;
  return op;
}

BlockOp<DOp> graded_Q(int m, int n, const std::vector<int>& a, const std::vector<int>& b) {
  return block_at(2, 1, 0, graded_q(m, n, a, b));
}

CRep rep_graded_diag(int m, int n, int dx, int dy) {
  CRep r;
  r.family = "graded_delta";
  r.params = {{"m", m}, {"n", n}, {"dx", dx}, {"dy", dy}};
  r.module = DirectSum<Rational>({basis_M(m, n), basis_M(m + dx, n + dy)});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      DOp d0 = gl1(2, 0, m, a, b) + gl1(2, 1, n, a, b);
      DOp d1 = gl1(2, 0, m + dx, a, b) + gl1(2, 1, n + dy, a, b);
      if (a == b) {
        d0 -= cst(2, Rational(1 + dx + dy, 2));
        d1 -= cst(2, Rational(1 - dx - dy, 2));
      }
      r.add(lbl_J(a, b), diag2(d0, d1));
    }
  return r;
}

RmodOps rmod_ops(int m, int n) {
  if (m < 0 || n < 1) throw Error("rmod needs m >= 0, n >= 1");
  RmodOps out;
  CRep& r = out.rep;
  r.family = "rmod";
  r.params = {{"m", m}, {"n", n}};
  r.module = DirectSum<Rational>({basis_M(m, n), basis_M(m + 1, n - 1)});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto J = diag2(gl1(2, 0, m, a, b) + gl1(2, 1, n, a, b), gl1(2, 0, m + 1, a, b) + gl1(2, 1, n - 1, a, b));
      r.add(lbl_J(a, b), negated_offdiag(J, a, b));
    }
  const DPair qu = raise(tensor_q(m, n, 0, 1));
  const DPair qbu = raise(tensor_q(n - 1, m + 1, 1, 0));
  const DPair qby = tensor_qbar(n, 2, 1);
  const DPair qbx = tensor_qbar(m + 1, 2, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.add(lbl_R(a, b), block_at(2, 1, 0, qby[a] * qu[b]));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.add(lbl_Rb(a, b), block_at(2, 0, 1, qbx[a] * qbu[b]));
  r.add("T", diag2(cst(2, Rational(1)), cst(2, Rational(-1))));
  out.trace_R = qby[0] * qu[0] + qby[1] * qu[1];
  out.trace_Rb = qbx[0] * qbu[0] + qbx[1] * qbu[1];
  return out;
}

QDiffOp qd_const(const QLaurent& c) { return QDiffOp(c); }

void add_deformed_bosons(QRep& r) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.add(lbl_J(a, b), anticommutator(r.at(lbl_Q(a)), r.at(lbl_Qb(b))));
}

QRep rep_qspl21_2(int n) {
  if (n < 1) throw DegenerateModule("rep_qspl21_2 needs n >= 1");
  QRep r;
  r.family = "qspl21_2";
  r.params = {{"n", n}};
  r.module = DirectSum<QLaurent>({basis_P<QLaurent>(n - 1, 1), basis_P<QLaurent>(n, 1)});
  r.add(lbl_Q(0), block_at(2, 1, 0, qd_const(s_pow(-n))));
  r.add(lbl_Q(1), block_at(2, 1, 0, -QDiffOp::x()));
  r.add(lbl_Qb(0), block_at(2, 0, 1, s_pow(-n) * q_delta(n)));
  r.add(lbl_Qb(1), block_at(2, 0, 1, QDiffOp::D()));
  add_deformed_bosons(r);
  return r;
}

QRep rep_qspl21_4(int n, const QLaurent& lambda, bool printed_sign) {
  if (n < 1) throw DegenerateModule("rep_qspl21_4 needs n >= 1");
  QRep r;
  r.family = "qspl21_4";
  r.params = {{"n", n}, {"lambda", lambda.str()}, {"printed_sign", printed_sign}};
  r.module = DirectSum<QLaurent>({basis_P<QLaurent>(n, 1), basis_P<QLaurent>(n + 1, 1), basis_P<QLaurent>(n - 1, 1),
                                  basis_P<QLaurent>(n, 1)});
  const QLaurent L = lambda * q_pow(n + 1);
  const QLaurent one(1);
  const QDiffOp x = QDiffOp::x(), D = QDiffOp::D();
  BlockOp<QDiffOp> Q0(4), Q1(4), Qb0(4), Qb1(4);
  Q0(1, 0) = qd_const(one);
  Q0(2, 0) = D;
  Q0(3, 1) = -D;
  Q0(3, 2) = qd_const(one);
  Q1(1, 0) = x;
  Q1(2, 0) = q_pow(-n) * q_delta(n);
  Q1(3, 1) = -(q_pow(-n - 1) * q_delta(n + 1));
  Q1(3, 2) = x;
  if (!printed_sign) Q1 = -Q1;
  Qb0(0, 1) = lambda * q_delta(n + 1);
  Qb0(0, 2) = (one - L) * x;
  Qb0(1, 3) = (L - one) * x;
  Qb0(2, 3) = (q_pow(1) * lambda) * q_delta(n);
  Qb1(0, 1) = L * D;
  Qb1(0, 2) = qd_const(one - L);
  Qb1(1, 3) = qd_const(L - one);
  Qb1(2, 3) = L * D;
  r.add(lbl_Q(0), Q0);
  r.add(lbl_Q(1), Q1);
  r.add(lbl_Qb(0), Qb0);
  r.add(lbl_Qb(1), Qb1);
  add_deformed_bosons(r);
  return r;
}

Casimirs q_casimirs(const GenMatrices<QLaurent>& g) {
  const auto& Q0 = g.at(lbl_Q(0));
  const auto& Q1 = g.at(lbl_Q(1));
  const auto& Qb0 = g.at(lbl_Qb(0));
  const auto& Qb1 = g.at(lbl_Qb(1));
  const auto& J00 = g.at(lbl_J(0, 0));
  const auto& J11 = g.at(lbl_J(1, 1));
  const auto& J10 = g.at(lbl_J(1, 0));  // J_1^0
  const auto& J01 = g.at(lbl_J(0, 1));  // J_0^1
  const int N = static_cast<int>(Q0.rows());
  const QLaurent q = q_pow(1), qm1 = q_pow(1) - QLaurent(1);
  const Mat<QLaurent> F = Q0 * Qb0 + Q1 * Qb1;
  const Mat<QLaurent> JJ = J10 * J01;
  Casimirs c;
  c.C1 = F + JJ * q - J00 * J11 - J00;
  c.C2 = F * (qm1 * qm1) + JJ * (q * qm1 * qm1) + J11 * qm1 - J00 * (q * qm1) - identity<QLaurent>(N);
  return c;
}

}  // namespace qes
