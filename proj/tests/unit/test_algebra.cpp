#include <doctest.h>

#include "helpers.hpp"

using namespace qes;
using namespace qes::testing;

namespace {
using Canon = std::map<std::vector<std::string>, QLaurent>;

Canon canon(const std::vector<Term>& ts, std::optional<Rational> s0 = std::nullopt) {
  Canon c;
  for (const auto& t : ts) c[t.factors] += s0 ? QLaurent(eval_at(t.coeff, *s0)) : t.coeff;
  for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
  return c;
}

const Relation& find(const RelationTable& t, Bracket k, const std::string& a, const std::string& b) {
  for (const auto& r : t.relations)
    if (r.kind == k && r.a == a && r.b == b) return r;
  throw Error("relation not found: " + a + ", " + b);
}

bool is_odd(const RelationTable& t, const std::string& n) {
  for (const auto& l : t.labels)
    if (l.name == n) return l.odd;
  throw Error("unknown label " + n);
}
}  // namespace

TEST_CASE("gl table") {
  auto t = table_gl(1);
  CHECK(t.relations.size() == 16);
  CHECK(canon(find(t, Bracket::Comm, lbl_J(1, 0), lbl_J(0, 1)).rhs) ==
        canon({{QLaurent(1), {lbl_J(0, 0)}}, {QLaurent(-1), {lbl_J(1, 1)}}}));
  CHECK(canon(find(t, Bracket::Comm, lbl_J(0, 0), lbl_J(0, 0)).rhs).empty());
  CHECK(table_gl(2).relations.size() == 81);
  CHECK(table_gl(3).relations.size() == 256);
}

TEST_CASE("spl21 table") {
  auto t = table_spl21();
  CHECK(canon(find(t, Bracket::Anti, lbl_Q(0), lbl_Qb(1)).rhs) == canon({{QLaurent(1), {lbl_J(0, 1)}}}));
  CHECK(find(t, Bracket::Anti, lbl_Q(0), lbl_Q(0)).rhs.empty());
  CHECK(canon(find(t, Bracket::Comm, lbl_J(0, 0), lbl_Qb(0)).rhs).empty());
  t.validate();
}

TEST_CASE("spl22 and deformed tables validate") {
  for (auto v : {Spl22Variant::Printed, Spl22Variant::Suggested, Spl22Variant::Derived}) table_spl22(v).validate();
  auto p = table_spl22(Spl22Variant::Printed);
  CHECK(canon(find(p, Bracket::Anti, lbl_Q2(0, 0), lbl_Q2(1, 1)).rhs).empty());
  auto q = table_qspl21(QVariant::Printed);
  q.validate();
  const auto& r = find(q, Bracket::QAnti, lbl_Q(0), lbl_Q(1));
  CHECK(r.s_exp == 2);
  CHECK(r.rhs.empty());
  CHECK(canon(find(q, Bracket::QAnti, lbl_Q(0), lbl_Qb(0)).rhs) == canon({{QLaurent(1), {lbl_J(0, 0)}}}));
  table_qcasimir().validate();
}

TEST_CASE("validate rejects undeclared labels") {
  RelationTable t;
  t.add_label("A", false);
  t.relations.push_back({Bracket::Comm, 0, "A", "B", {}});
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("check examples") {
  CHECK(check(table_gl(1), rep_gl(1, 3, Rational(0)).matrices()).pass());
  CHECK(check(table_gl(1), rep_gl(1, 3, Rational(0)).matrices()).relations_total == 16);
  CHECK(check(table_spl21(), rep_spl21_2var(2, 1).matrices()).pass());
  auto g = rep_spl21_2var(2, 1).matrices();
  corrupt_entry(g, lbl_Qb(0));
  Report bad = check(table_spl21(), g);
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.failures.front().i >= 0);
  CHECK(bad.failures.front().lhs != bad.failures.front().rhs);
}

TEST_CASE("check reports relations in table order and is deterministic") {
  auto g = rep_spl21_2var(1, 1).matrices();
  corrupt_entry(g, lbl_Qb(1));
  auto t = table_spl21();
  Report a = check(t, g), b = check(t, g);
  CHECK(a.to_json().dump() == b.to_json().dump());
  size_t pos = 0;
  for (const auto& f : a.failures) {
    while (pos < t.relations.size() && t.relations[pos].str() != f.relation) ++pos;
    CHECK(pos < t.relations.size());
  }
}

TEST_CASE("check rejects missing generators") {
  GenMatrices<Rational> g;
  g[lbl_J(0, 0)] = identity<Rational>(2);
  CHECK_THROWS_AS(check(table_gl(1), g), DimensionMismatch);
}

TEST_CASE("property: swapping an even-even bracket flips its sign") {
  struct Case {
    RelationTable t;
    GenMatrices<Rational> g;
  };
  std::vector<Case> cases = {{table_gl(2), rep_gl(2, 2, Rational(1, 2)).matrices()},
                             {table_spl21(), rep_spl21_2var(1, 1).matrices()},
                             {table_sl2(), rep_sl2(3).matrices()}};
  for (const auto& c : cases)
    for (const auto& r : c.t.relations) {
      if (is_odd(c.t, r.a) || is_odd(c.t, r.b)) continue;
      Relation sw = r;
      std::swap(sw.a, sw.b);
      CHECK(equal(eval_bracket(sw, c.g, std::nullopt), Mat<Rational>(-eval_bracket(r, c.g, std::nullopt))));
    }
}

TEST_CASE("property: deformed table at s = 1 degenerates to the classical table") {
  const auto q = table_qspl21(QVariant::Corrected);
  const auto c = table_spl21();
  const Rational one(1);
  for (const auto& r : q.relations) {
    const Bracket k = (r.kind == Bracket::QAnti || r.kind == Bracket::Anti) ? Bracket::Anti : Bracket::Comm;
    const Relation* match = nullptr;
    int sign = 1;
    for (const auto& cr : c.relations) {
      if (cr.kind != k) continue;
      if (cr.a == r.a && cr.b == r.b) match = &cr;
      else if (cr.a == r.b && cr.b == r.a) {
        match = &cr;
        sign = k == Bracket::Comm ? -1 : 1;
      }
      if (match) break;
    }
    REQUIRE_MESSAGE(match != nullptr, r.str());
    Canon want = canon(match->rhs);
    for (auto& [f, v] : want) v *= QLaurent(sign);
    CHECK_MESSAGE(canon(r.rhs, one) == want, r.str());
  }
}

TEST_CASE("report json") {
  Report r;
  r.suite = "x";
  r.expect(true, "a");
  r.expect(false, "b", "1", "2");
  r.discrepancy("claim", "printed", "found", false);
  auto j = r.to_json();
  CHECK(j["checks_total"] == 2);
  CHECK(j["relations_total"] == 0);
  CHECK(j["pass"] == false);
  CHECK(j["failures"].size() == 1);
  CHECK(j["discrepancies"].size() == 1);
}
