// Prints one PASS/FAIL line per acceptance criterion.
// --expect-red a,b,...: exit 0 iff exactly the listed criteria fail.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qes/suites.hpp"

using namespace qes;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string P(int m, int n) { return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

bool has_discrepancy(const Report& r, const std::string& prefix) {
  if (!r.extra.contains("discrepancies")) return false;
  for (const auto& d : r.extra["discrepancies"])
    if (d["claim"].get<std::string>().rfind(prefix, 0) == 0) return true;
  return false;
}

bool variant_pass(const Report& r, const std::string& name) {
  for (const auto& v : r.extra["variants"])
    if (v["name"] == name) return v["pass"].get<bool>();
  throw Error("variant " + name + " missing");
}

Outcome c1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int n = 0;
  for (int M = 1; M <= 3; ++M)
    for (int m = 0; m <= 4; ++m)
      for (const Rational& g : {Rational(0), Rational(1, 2)}) {
        Report r = check(table_gl(M), rep_gl(M, m, g).matrices());
        const int want = (M + 1) * (M + 1) * (M + 1) * (M + 1);
        o.need(r.pass() && r.relations_total == want, "gl M=" + std::to_string(M) + " m=" + std::to_string(m));
        ++n;
      }
  const double secs = seconds_since(t0);
  o.need(secs < 60, "runtime " + std::to_string(secs) + " s");
  o.notes.push_back(std::to_string(n) + " configurations");
  return o;
}

Outcome c2() {
  Outcome o;
  for (int M = 1; M <= 3; ++M)
    for (int m = 0; m <= 5; ++m) o.need(basis_P<Rational>(m, M).dim() == binom(M + m, M), "P(m,M)");
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) o.need(basis_M(m, n).dim() == m + n + 1, "M" + P(m, n));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) o.need(rep_spl21_2var(m, n).dim() == 2 * m + 2 * n + 3, "spl21 2var " + P(m, n));
  return o;
}

Outcome c3() {
  Outcome o;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      o.need(same_span(kernel_of(op_K(m, n), basis_P_bidegree<Rational>(m, n)), basis_M(m, n)), "ker K " + P(m, n));
  return o;
}

Outcome c4() {
  Outcome o;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 3; ++n) {
      Report r = check_olver_gauge(m, n);
      o.need(r.pass() && r.checks_total == 3 * (2 * m + n + 1) + 1, "olver " + P(m, n));
      o.need(same_span(basis_olver(m, n), basis_M(m, m + n)), "olver span " + P(m, n));
    }
  return o;
}

Outcome c5() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    for (const Rational& t : {Rational(1, 3), Rational(-5, 2)})
      o.need(check(table_spl21(), rep_spl21_1var(m, t).matrices()).pass(), "table m=" + std::to_string(m) + " t=" + t.str());
    auto at = rep_spl21_1var_atypical(m);
    o.need(at.module.dims() == std::vector<int>{m + 1, m + 2}, "atypical module m=" + std::to_string(m));
    o.need(check(table_spl21(), at.matrices()).pass(), "atypical table m=" + std::to_string(m));
    o.need(suite_spl21_1var(m, Rational(-(m + 2))).pass(), "atypical suite m=" + std::to_string(m));
  }
  auto g = rep_spl21_1var(1, Rational(1, 3)).matrices();
  auto res = enveloping_span({g.at(lbl_Q(0)), g.at(lbl_Q(1)), g.at(lbl_Qb(0)), g.at(lbl_Qb(1))}, 6);
  o.need(res.saturated() && res.target == 64, "enveloping span " + std::to_string(res.dimension));
  o.notes.push_back("span 64 reached at word length " + std::to_string(res.words_length));
  return o;
}

Outcome c6() {
  Outcome o;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto rep = rep_spl21_2var(m, n);
      auto g = rep.matrices();
      o.need(check(table_spl21(), g).pass(), "table " + P(m, n));
      std::vector<Mat<Rational>> ops;
      for (const auto& l : rep.labels) ops.push_back(g.at(l));
      for (int k = 0; k < 3; ++k) {
        Vec<Rational> seed(rep.dim());
        for (int i = 0; i < rep.dim(); ++i) seed(i) = Rational(d(rng));
        if (is_zero_matrix(Mat<Rational>(seed))) seed(0) = Rational(1);
        o.need(orbit_span(ops, seed) == 2 * m + 2 * n + 3, "orbit " + P(m, n) + " seed " + std::to_string(k));
      }
    }
  return o;
}

Outcome c7() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    Report r = suite_spl22(n);
    auto rep = rep_spl22(n);
    const std::vector<int> want = {(n + 1) * (n + 1), (n + 2) * n, n * (n + 2), (n + 1) * (n + 1)};
    o.need(rep.module.dims() == want, "module n=" + std::to_string(n));
    o.need(r.pass(), "suite n=" + std::to_string(n));
    o.need(r.extra.contains("discrepancies") && !r.extra["discrepancies"].empty(),
           "printed discrepancies reported n=" + std::to_string(n));
  }
  return o;
}

Outcome c8() {
  Outcome o;
  int runs = 0, id2 = 0, id3 = 0, span = 0, trace = 0, corrected = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int dx = 0; dx <= 3; ++dx)
        for (int dy = 0; dx + dy <= 3; ++dy) {
          if (dx + dy < 1) continue;
          Report r = suite_graded(m, n, dx, dy);
          ++runs;
          if (r.pass()) ++corrected;
          if (!r.extra["identity2_operator_level"].get<bool>()) ++id2;
          if (has_discrepancy(r, "identity 3 last factor")) ++id3;
          if (r.extra["q_span_dimension"].get<int>() != 2 * (dx + dy) + 1) ++span;
          if (has_discrepancy(r, "J^a_a")) ++trace;
        }
  const auto of = [&](int k) { return std::to_string(k) + "/" + std::to_string(runs); };
  o.need(id2 == 0, "identity 2 fails as a normal-form operator identity in " + of(id2));
  o.need(id3 == 0, "identity 3 as printed fails in " + of(id3));
  o.need(span == 0, "Q-span dimension differs from 2(D+D')+1 in " + of(span));
  o.need(trace == 0, "printed trace J^a_a fails in " + of(trace));
  o.notes.push_back("symmetry, module mapping and corrected readings pass in " + of(corrected));
  return o;
}

Outcome c9() {
  Outcome o;
  int runs = 0, trR = 0, trRb = 0, reord = 0, corrbar = 0, corrected = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      Report r = suite_rmod(m, n);
      ++runs;
      if (r.pass()) ++corrected;
      if (has_discrepancy(r, "R^a_a")) ++trR;
      if (has_discrepancy(r, "Rb^a_a")) ++trRb;
      const auto& ro = r.extra["reordering"];
      if (!(ro["printed"].get<bool>() || ro["printed_with_delta"].get<bool>() || ro["m+1<->m"].get<bool>())) ++reord;
      if (!variant_pass(r, "printed {R,Rb}")) ++corrbar;
    }
  const auto of = [&](int k) { return std::to_string(k) + "/" + std::to_string(runs); };
  o.need(trR == 0, "printed R^a_a mismatches in " + of(trR));
  o.need(trRb == 0, "printed Rb^a_a mismatches in " + of(trRb));
  o.need(reord == 0, "reordering identity fails as printed and with the m+1<->m variant in " + of(reord));
  o.need(corrbar == 0, "printed {R,Rb} fails in " + of(corrbar));
  o.notes.push_back("commutation with J and the derived readings pass in " + of(corrected));
  return o;
}

Outcome c10() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int runs = 0, printed_fail = 0, sign_fail = 0, corrected = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<int, QLaurent>> cfg = {{2, QLaurent(1)}};
    for (const Rational& l : {Rational(1, 3), Rational(2)}) cfg.push_back({4, QLaurent(l)});
    for (const auto& [rep, lam] : cfg) {
      Report r = suite_qspl21(rep, n, lam, {});
      ++runs;
      if (r.pass()) ++corrected;
      if (!variant_pass(r, "printed table")) ++printed_fail;
      if (rep == 4 && !variant_pass(r, "printed sign of Q_1")) ++sign_fail;
      Report c = suite_qcasimir(rep, n, lam, {Rational(2), Rational(3)});
      o.need(c.failures.empty(), "q-Casimir quommutators rep " + std::to_string(rep) + " n=" + std::to_string(n));
    }
    Report red = suite_qspl21(4, n, q_pow(-n - 1), {});
    o.need(red.pass() && red.extra["reducibility"]["invariant_subspace_dimension"].get<int>() <
                             red.extra["reducibility"]["dimension"].get<int>(),
           "reducibility at lambda = q^(-n-1), n=" + std::to_string(n));
  }
  const auto of = [&](int k) { return std::to_string(k) + "/" + std::to_string(runs); };
  o.need(printed_fail == 0, "printed quommutator table fails in " + of(printed_fail));
  o.need(sign_fail == 0, "displayed four-component Q_1 fails in " + std::to_string(sign_fail) + " of 6 cases");
  o.notes.push_back("corrected table passes symbolically in " + of(corrected));
  const double secs = seconds_since(t0);
  o.need(secs < 120, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome c11() {
  Outcome o;
  const QDiffOp X = QDiffOp::x(), S = QDiffOp::S(), D = QDiffOp::D();
  const QLaurent q = q_pow(1);
  o.need(D * X - X * D == S, "D x - x D = S");
  o.need(S * X == q * (X * S), "S x = q x S");
  o.need(S * D == q_pow(-1) * (D * S), "S D = q^-1 D S");
  const auto mono = [](int k) { return MultiPoly<QLaurent>::monomial(default_vars(1), {k}); };
  for (int k = 0; k <= 8; ++k) {
    const auto p = mono(k);
    o.need(q_apply(D, q_apply(X, p)) - q_apply(X, q_apply(D, p)) == q_apply(S, p), "action D x on x^" + std::to_string(k));
    o.need(q_apply(S, q_apply(X, p)) == q_apply(q * X, q_apply(S, p)), "action S x on x^" + std::to_string(k));
    o.need(q_apply(S, q_apply(D, p)) == q_apply(q_pow(-1) * D, q_apply(S, p)), "action S D on x^" + std::to_string(k));
  }
  o.need(classical_limit(D) == DOp::d(1, 0) && classical_limit(S) == DOp(1, Rational(1)), "q -> 1 generators");
  const std::vector<QDiffOp> ops = {q_delta(3), X * D * D, S * D - X * S, D * X - X * D};
  for (const auto& op : ops) {
    const DOp c = classical_limit(op);
    for (int k = 0; k <= 8; ++k) {
      auto img = q_apply(op, mono(k));
      MultiPoly<Rational> ev(default_vars(1));
      for (const auto& [e, v] : img.terms()) ev += MultiPoly<Rational>::monomial(default_vars(1), e, classical(v));
      o.need(ev == apply(c, MultiPoly<Rational>::monomial(default_vars(1), {k})), "q -> 1 action " + op.str());
    }
  }
  return o;
}

Outcome c12() {
  Outcome o;
  int n = 0;
  for (const auto& name : suite_names()) {
    std::vector<int> reps = {0};
    if (name == "qspl21" || name == "qcasimir") reps = {2, 4};
    for (int rp : reps) {
      SuiteParams p;
      if (rp) p.rep = rp;
      const std::string tag = name + (rp ? " rep " + std::to_string(rp) : "");
      o.need(run_suite(name, p).pass(), "false positive in clean " + tag);
      o.need(negative_control(name, p).pass(), "corruption missed in " + tag);
      ++n;
    }
  }
  o.notes.push_back(std::to_string(n) + " suites");
  return o;
}

const char* kTitles[12] = {"gl(M+1) closure",
                           "module dimensions",
                           "kernel characterization",
                           "Olver equivalence",
                           "spl(2,1) one-variable",
                           "spl(2,1) two-variable",
                           "spl(2,2) atypical",
                           "graded operators",
                           "rmod suite",
                           "deformed spl(2,1)",
                           "q-calculus kernel",
                           "negative controls"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string expect_red;
  app.add_option("--expect-red", expect_red, "comma-separated criteria known to fail");
  CLI11_PARSE(app, argc, argv);
  std::set<int> red;
  {
    std::stringstream ss(expect_red);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) red.insert(std::stoi(item));
  }
  const std::vector<std::function<Outcome()>> crit = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  std::set<int> failed;
  for (int i = 0; i < 12; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(i + 1);
    std::printf("criterion %2d: %s  %s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", kTitles[i], seconds_since(t0));
    for (size_t k = 0; k < o.notes.size() && k < 8; ++k) std::printf("    %s\n", o.notes[k].c_str());
    if (o.notes.size() > 8) std::printf("    ... %zu more\n", o.notes.size() - 8);
    std::fflush(stdout);
  }
  if (failed == red) {
    if (!red.empty()) std::printf("failing criteria match the expected set\n");
    return 0;
  }
  std::printf("failing criteria differ from the expected set\n");
  return 1;
}
