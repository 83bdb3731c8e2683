#include "qes/algebra.hpp"

namespace qes {

namespace {

std::string ix(int i) { return std::to_string(i); }

Relation rel(Bracket k, const std::string& a, const std::string& b, const Rhs& rhs, int s_exp = 0) {
  Relation r;
  r.kind = k;
  r.s_exp = s_exp;
  r.a = a;
  r.b = b;
  r.rhs = rhs.terms();
  return r;
}

std::string sexp_str(int k) { return k == 0 ? "" : "_s^" + std::to_string(k); }

// (q - 1)/q^2
QLaurent corr_coeff() { return q_pow(-1) - q_pow(-2); }

void add_F(Rhs& r, const QLaurent& c) {
  r.add(c, {lbl_Q(0), lbl_Qb(0)});
  r.add(c, {lbl_Q(1), lbl_Qb(1)});
}

void add_q_generators(RelationTable& t) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_J(a, b), false);
  for (int a = 0; a < 2; ++a) t.add_label(lbl_Q(a), true);
  for (int a = 0; a < 2; ++a) t.add_label(lbl_Qb(a), true);
}

}  // namespace

std::string lbl_J(int a, int b) { return "J^" + ix(b) + "_" + ix(a); }
std::string lbl_Jt(int a, int b) { return "Jt^" + ix(b) + "_" + ix(a); }
std::string lbl_Q(int a) { return "Q_" + ix(a); }
std::string lbl_Qb(int a) { return "Qb^" + ix(a); }
std::string lbl_Q2(int a, int b) { return "Q^" + ix(b) + "_" + ix(a); }
std::string lbl_Qb2(int a, int b) { return "Qb^" + ix(b) + "_" + ix(a); }
std::string lbl_R(int a, int b) { return "R_" + ix(a) + "^" + ix(b); }
std::string lbl_Rb(int a, int b) { return "Rb_" + ix(a) + "^" + ix(b); }

std::string Relation::str() const {
  switch (kind) {
    case Bracket::Comm: return "[" + a + "," + b + "]";
    case Bracket::Anti: return "{" + a + "," + b + "}";
    case Bracket::QComm: return "[" + a + "," + b + "]" + sexp_str(s_exp);
    case Bracket::QAnti: return "{" + a + "," + b + "}" + sexp_str(s_exp);
  }
  return "?";
}

bool RelationTable::has_label(const std::string& n) const {
  for (const auto& l : labels)
    if (l.name == n) return true;
  return false;
}

void RelationTable::validate() const {
  for (const auto& r : relations) {
    if (!has_label(r.a) || !has_label(r.b)) throw Error("relation " + r.str() + " uses an undeclared label");
    for (const auto& t : r.rhs)
      for (const auto& f : t.factors)
        if (!has_label(f)) throw Error("relation " + r.str() + " uses undeclared label " + f);
  }
}

RelationTable table_gl(int M) {
  if (M < 1) throw Error("table_gl needs M >= 1");
  RelationTable t;
  t.name = "gl" + ix(M + 1);
  for (int a = 0; a <= M; ++a)
    for (int b = 0; b <= M; ++b) t.add_label(lbl_J(a, b), false);
  for (int a = 0; a <= M; ++a)
    for (int b = 0; b <= M; ++b)
      for (int c = 0; c <= M; ++c)
        for (int d = 0; d <= M; ++d) {
          Rhs r;
          r.add(kd(d, a), {lbl_J(c, b)}).add(-kd(b, c), {lbl_J(a, d)});
          t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_J(c, d), r));
        }
  return t;
}

RelationTable table_sl2() {
  RelationTable t;
  t.name = "sl2";
  for (const char* l : {"j+", "j0", "j-"}) t.add_label(l, false);
  t.relations.push_back(rel(Bracket::Comm, "j0", "j+", Rhs().add(1, {"j+"})));
  t.relations.push_back(rel(Bracket::Comm, "j0", "j-", Rhs().add(-1, {"j-"})));
  t.relations.push_back(rel(Bracket::Comm, "j+", "j-", Rhs().add(-2, {"j0"})));
  return t;
}

RelationTable table_spl21() {
  RelationTable t;
  t.name = "spl21";
  add_q_generators(t);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.relations.push_back(rel(Bracket::Anti, lbl_Q(a), lbl_Q(b), Rhs()));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.relations.push_back(rel(Bracket::Anti, lbl_Qb(a), lbl_Qb(b), Rhs()));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      t.relations.push_back(rel(Bracket::Anti, lbl_Q(a), lbl_Qb(b), Rhs().add(1, {lbl_J(a, b)})));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Rhs r;
        r.add(-kd(b, c), {lbl_Q(a)}).add(kd(b, a), {lbl_Q(c)});
        t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_Q(c), r));
      }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Rhs r;
        r.add(kd(c, a), {lbl_Qb(b)}).add(-kd(b, a), {lbl_Qb(c)});
        t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_Qb(c), r));
      }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Rhs r;
          r.add(kd(d, a), {lbl_J(c, b)}).add(-kd(b, c), {lbl_J(a, d)});
          t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_J(c, d), r));
        }
  return t;
}

std::string variant_name(Spl22Variant v) {
  switch (v) {
    case Spl22Variant::Printed: return "printed";
    case Spl22Variant::Suggested: return "suggested";
    case Spl22Variant::Derived: return "derived";
  }
  return "?";
}

RelationTable table_spl22(Spl22Variant v) {
  RelationTable t;
  t.name = "spl22-" + variant_name(v);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_J(a, b), false);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_Jt(a, b), false);
  t.add_label("Y", false);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_Q2(a, b), true);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_Qb2(a, b), true);
  const Rational h(1, 2);
  auto loop4 = [](auto f) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) f(a, b, c, d);
  };
  // the printed delta^b_e is read as delta^b_c
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(kd(d, a), {lbl_J(c, b)}).add(-kd(b, c), {lbl_J(a, d)});
    t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_J(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(kd(d, a), {lbl_Jt(c, b)}).add(-kd(b, c), {lbl_Jt(a, d)});
    t.relations.push_back(rel(Bracket::Comm, lbl_Jt(a, b), lbl_Jt(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_Jt(c, d), Rhs()));
  });
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), "Y", Rhs()));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.relations.push_back(rel(Bracket::Comm, lbl_Jt(a, b), "Y", Rhs()));
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(-kd(b, c), {lbl_Q2(a, d)}).add(h * kd(b, a), {lbl_Q2(c, d)});
    t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_Q2(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(kd(d, a), {lbl_Qb2(c, b)}).add(-h * kd(b, a), {lbl_Qb2(c, d)});
    t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_Qb2(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(kd(d, a), {lbl_Q2(c, b)}).add(-h * kd(b, a), {lbl_Q2(c, d)});
    t.relations.push_back(rel(Bracket::Comm, lbl_Jt(a, b), lbl_Q2(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(-kd(b, c), {lbl_Qb2(a, d)}).add(h * kd(b, a), {lbl_Qb2(c, d)});
    t.relations.push_back(rel(Bracket::Comm, lbl_Jt(a, b), lbl_Qb2(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    Rhs r;
    r.add(kd(b, c), {lbl_J(a, d)});
    switch (v) {
      case Spl22Variant::Printed: r.add(kd(d, a), {lbl_J(c, d)}); break;
      case Spl22Variant::Suggested: r.add(kd(d, a), {lbl_J(c, b)}); break;
      case Spl22Variant::Derived: r.add(kd(d, a), {lbl_Jt(c, b)}); break;
    }
    r.add(h * kd(d, a) * kd(b, c), {"Y"});
    t.relations.push_back(rel(Bracket::Anti, lbl_Q2(a, b), lbl_Qb2(c, d), r));
  });
  loop4([&](int a, int b, int c, int d) {
    t.relations.push_back(rel(Bracket::Anti, lbl_Q2(a, b), lbl_Q2(c, d), Rhs()));
  });
  loop4([&](int a, int b, int c, int d) {
    t.relations.push_back(rel(Bracket::Anti, lbl_Qb2(a, b), lbl_Qb2(c, d), Rhs()));
  });
  return t;
}

RelationTable table_qspl21(QVariant v) {
  const bool pr = v == QVariant::Printed;
  RelationTable t;
  t.name = pr ? "qspl21-printed" : "qspl21-corrected";
  add_q_generators(t);
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) t.relations.push_back(rel(Bracket::QAnti, lbl_Q(m), lbl_Q(n), Rhs(), 2 * (n - m)));
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      t.relations.push_back(rel(Bracket::QAnti, lbl_Qb(m), lbl_Qb(n), Rhs(), pr ? 2 * (n - m) : 2 * (m - n)));
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      t.relations.push_back(rel(Bracket::QAnti, lbl_Q(m), lbl_Qb(n), Rhs().add(1, {lbl_J(m, n)}), 0));
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int a = 0; a < 2; ++a) {
        const int e = pr ? a - n : a - m;
        Rhs r;
        r.add(s_pow(e - 1) * Rational(kd(m, n)), {lbl_Q(a)});
        r.add(s_pow(e - 1) * Rational(-kd(a, n)), {lbl_Q(m)});
        t.relations.push_back(rel(Bracket::QComm, lbl_J(m, n), lbl_Q(a), r, 2 * e));
      }
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int a = 0; a < 2; ++a) {
        const int e = pr ? m - a : n - a;
        Rhs r;
        r.add(s_pow(e - 1) * Rational(kd(a, m)), {lbl_Qb(n)});
        r.add(s_pow(e - 1) * Rational(-kd(m, n)), {lbl_Qb(a)});
        t.relations.push_back(rel(Bracket::QComm, lbl_J(m, n), lbl_Qb(a), r, 2 * e));
      }
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const int S = n + a - m - b;
          const int rr = (n - b) * (m - a);
          Rhs r;
          if (!pr && m == 0 && n == 1 && a == 1 && b == 0) {
            r.add(1, {lbl_J(1, 1)});
            r.add(-q_pow(1), {lbl_J(0, 0)});
            add_F(r, q_pow(1) - QLaurent(Rational(1)));
          } else if (!pr && m == 1 && n == 0 && a == 0 && b == 1) {
            r.add(q_pow(-1), {lbl_J(0, 0)});
            r.add(-q_pow(-2), {lbl_J(1, 1)});
            add_F(r, -corr_coeff());
          } else {
            r.add(s_pow(S - rr - 1) * Rational(kd(m, b)), {lbl_J(a, n)});
            r.add(-s_pow(S - rr - 1 + 2 * rr) * Rational(kd(a, n)), {lbl_J(m, b)});
            const int f = kd(a, n) * kd(m, b) * (1 - kd(m, n) * kd(a, b));
            if (f) add_F(r, corr_coeff());
          }
          t.relations.push_back(rel(Bracket::QComm, lbl_J(m, n), lbl_J(a, b), r, 2 * S));
        }
  return t;
}

RelationTable table_qcasimir() {
  RelationTable t;
  t.name = "qcasimir";
  add_q_generators(t);
  t.add_label("C1", false);
  t.add_label("C2", false);
  for (const std::string c : {"C1", "C2"}) {
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) t.relations.push_back(rel(Bracket::QComm, c, lbl_J(m, n), Rhs(), 4 * (m - n)));
    for (int m = 0; m < 2; ++m) t.relations.push_back(rel(Bracket::QComm, c, lbl_Q(m), Rhs(), 2 * (2 * m - 1)));
    for (int m = 0; m < 2; ++m) t.relations.push_back(rel(Bracket::QComm, c, lbl_Qb(m), Rhs(), 2 * (1 - 2 * m)));
  }
  return t;
}

RelationTable table_rmod(CorrbarVariant v, int m, int n) {
  RelationTable t;
  t.name = v == CorrbarVariant::Printed ? "rmod-printed" : "rmod-derived";
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_J(a, b), false);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_R(a, b), true);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.add_label(lbl_Rb(a, b), true);
  t.add_label("T", false);
  const Rational h(1, 2);
  const Rational s(m + n);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Rhs r;
          r.add(kd(a, d), {lbl_R(c, b)}).add(-kd(c, b), {lbl_R(a, d)});
          t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_R(c, d), r));
        }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Rhs r;
          r.add(kd(a, d), {lbl_Rb(c, b)}).add(-kd(c, b), {lbl_Rb(a, d)});
          t.relations.push_back(rel(Bracket::Comm, lbl_J(a, b), lbl_Rb(c, d), r));
        }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Rhs r;
          r.add(h, {lbl_J(a, d), lbl_J(c, b)}).add(h, {lbl_J(c, b), lbl_J(a, d)});
          if (v == CorrbarVariant::Printed) {
            r.add(h * kd(a, d), {"T", lbl_J(c, b)}).add(-h * kd(c, b), {"T", lbl_J(a, d)});
            r.add(-h * kd(a, b), {lbl_J(c, d)}).add(-h * kd(c, d), {lbl_J(a, b)});
            r.add(-h * (kd(a, b) * kd(c, d)));
          } else {
            r.add(-h * kd(a, d), {"T", lbl_J(c, b)}).add(h * kd(c, b), {"T", lbl_J(a, d)});
            r.add((s + 1) * kd(a, b), {lbl_J(c, d)}).add((s + 1) * kd(c, d), {lbl_J(a, b)});
            r.add((s * s + Rational(3, 2) * s + 1) * (kd(a, b) * kd(c, d)));
            r.add(h * s * (kd(a, d) * kd(c, b)));
          }
          t.relations.push_back(rel(Bracket::Anti, lbl_R(a, b), lbl_Rb(c, d), r));
        }
  return t;
}

void Report::expect(bool ok, const std::string& what, const std::string& lhs, const std::string& rhs) {
  ++checks_total;
  if (!ok) failures.push_back({what, -1, -1, lhs, rhs});
}

void Report::merge(const Report& r, const std::string& prefix) {
  relations_total += r.relations_total;
  checks_total += r.checks_total;
  for (auto f : r.failures) {
    f.relation = prefix + f.relation;
    failures.push_back(f);
  }
  extra_ok = extra_ok && r.extra_ok;
  if (r.extra.contains("discrepancies"))
    for (auto d : r.extra["discrepancies"]) {
      d["claim"] = prefix + d["claim"].get<std::string>();
      extra["discrepancies"].push_back(d);
    }
  nlohmann::json sec = {{"name", prefix.empty() ? r.suite : prefix}, {"relations_total", r.relations_total},
                        {"checks_total", r.checks_total}, {"failures", static_cast<int>(r.failures.size())}, {"pass", r.pass()}};
  extra["sections"].push_back(sec);
}

void Report::discrepancy(const std::string& claim, const std::string& printed, const std::string& found,
                         bool printed_holds) {
  extra["discrepancies"].push_back(
      {{"claim", claim}, {"printed", printed}, {"found", found}, {"printed_holds", printed_holds}});
}

nlohmann::json Report::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : failures) {
    nlohmann::json e = {{"relation", x.relation}, {"lhs", x.lhs}, {"rhs", x.rhs}};
    e["entry"] = x.i >= 0 ? nlohmann::json::array({x.i, x.j}) : nlohmann::json(nullptr);
    f.push_back(e);
  }
  nlohmann::json j = {{"suite", suite},
                      {"params", params},
                      {"relations_total", relations_total},
                      {"checks_total", checks_total},
                      {"failures", f},
                      {"pass", pass()}};
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace qes
