#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qes/modspace.hpp"

namespace qes {

struct GenLabel {
  std::string name;
  bool odd = false;
};

enum class Bracket { Comm, Anti, QComm, QAnti };

// coeff * (product of 0..2 labels); no labels means the identity.
struct Term {
  QLaurent coeff;
  std::vector<std::string> factors;
};

struct Relation {
  Bracket kind = Bracket::Comm;
  int s_exp = 0;  // only for QComm / QAnti
  std::string a, b;
  std::vector<Term> rhs;
  std::string str() const;
};

struct RelationTable {
  std::string name;
  std::vector<GenLabel> labels;
  std::vector<Relation> relations;

  void add_label(const std::string& n, bool odd) { labels.push_back({n, odd}); }
  bool has_label(const std::string& n) const;
  // Throws Error when a relation references an undeclared label.
  void validate() const;
};

// Sum builder for relation right-hand sides.
class Rhs {
 public:
  Rhs& add(const QLaurent& c, std::vector<std::string> f = {}) {
    if (!c.is_zero()) terms_.push_back({c, std::move(f)});
    return *this;
  }
  Rhs& add(const Rational& c, std::vector<std::string> f = {}) { return add(QLaurent(c), std::move(f)); }
  Rhs& add(int c, std::vector<std::string> f = {}) { return add(QLaurent(Rational(c)), std::move(f)); }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

// Label spellings shared by all tables.
std::string lbl_J(int a, int b);       // J^b_a = {Q_a, Qb^b}
std::string lbl_Jt(int a, int b);      // tilde J^b_a
std::string lbl_Q(int a);              // Q_a
std::string lbl_Qb(int a);             // Qb^a
std::string lbl_Q2(int a, int b);      // Q^b_a (spl(2,2))
std::string lbl_Qb2(int a, int b);     // Qb^b_a
std::string lbl_R(int a, int b);       // R_a^b
std::string lbl_Rb(int a, int b);      // Rb_a^b

inline int kd(int i, int j) { return i == j ? 1 : 0; }

RelationTable table_gl(int M);
// [j0, j+] = j+, [j0, j-] = -j-, [j+, j-] = -2 j0
RelationTable table_sl2();
RelationTable table_spl21();

enum class Spl22Variant { Printed, Suggested, Derived };
std::string variant_name(Spl22Variant v);
RelationTable table_spl22(Spl22Variant v);

enum class QVariant { Printed, Corrected };
RelationTable table_qspl21(QVariant v);
// q-commutation of the two q-Casimirs (labels C1, C2) with all generators.
RelationTable table_qcasimir();

enum class CorrbarVariant { Printed, Derived };
// J-R relations and the {R, Rb} anticommutator; labels J^b_a, R_a^b, Rb_a^b, T.
RelationTable table_rmod(CorrbarVariant v, int m, int n);

struct Failure {
  std::string relation;
  int i = -1, j = -1;
  std::string lhs, rhs;
};

struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  int relations_total = 0;  // table relations only
  int checks_total = 0;     // named checks recorded through expect
  std::vector<Failure> failures;
  nlohmann::json extra = nlohmann::json::object();
  bool extra_ok = true;

  bool pass() const { return failures.empty() && extra_ok; }
  // Record a named boolean check.
  void expect(bool ok, const std::string& what, const std::string& lhs = "", const std::string& rhs = "");
  // Append another report's relations under a prefix.
  void merge(const Report& r, const std::string& prefix);
  void discrepancy(const std::string& claim, const std::string& printed, const std::string& found, bool printed_holds);
  nlohmann::json to_json() const;
};

template <class S>
using GenMatrices = std::map<std::string, Mat<S>>;

namespace detail {

template <class S>
Mat<S> term_matrix(const Term& t, const GenMatrices<S>& rz, int n, const std::optional<Rational>& s0) {
  S c;
  if constexpr (std::is_same_v<S, QLaurent>) {
    c = t.coeff;
  } else {
    if (!s0 && !t.coeff.is_constant()) throw RingMismatch("q-dependent coefficient with a rational realization and no s");
    c = s0 ? lift<S>(t.coeff, *s0) : t.coeff.constant();
  }
  if (t.factors.empty()) return identity<S>(n) * c;
  Mat<S> m = rz.at(t.factors[0]);
  for (size_t k = 1; k < t.factors.size(); ++k) m = mul(m, rz.at(t.factors[k]));
  if (c == S(1)) return m;
  return m * c;
}

template <class S>
S bracket_coeff(int s_exp, const std::optional<Rational>& s0) {
  if constexpr (std::is_same_v<S, QLaurent>) {
    return s_pow(s_exp);
  } else {
    if (!s0) {
      if (s_exp != 0) throw RingMismatch("q-bracket with a rational realization and no s");
      return S(1);
    }
    return lift<S>(s_pow(s_exp), *s0);
  }
}

}  // namespace detail

template <class S>
Mat<S> eval_bracket(const Relation& r, const GenMatrices<S>& rz, const std::optional<Rational>& s0) {
  const Mat<S>& A = rz.at(r.a);
  const Mat<S>& B = rz.at(r.b);
  switch (r.kind) {
    case Bracket::Comm: return Mat<S>(mul(A, B) - mul(B, A));
    case Bracket::Anti: return Mat<S>(mul(A, B) + mul(B, A));
    case Bracket::QComm: return Mat<S>(mul(A, B) - mul(B, A) * detail::bracket_coeff<S>(r.s_exp, s0));
    case Bracket::QAnti: return Mat<S>(mul(A, B) + mul(B, A) * detail::bracket_coeff<S>(r.s_exp, s0));
  }
  throw Error("unknown bracket");
}

// Exact evaluation of every relation; s0 lifts q-dependent coefficients for rational realizations.
template <class S>
Report check(const RelationTable& table, const GenMatrices<S>& rz, const std::optional<Rational>& s0 = std::nullopt,
             const std::string& suite = "") {
  table.validate();
  int n = -1;
  for (const auto& l : table.labels) {
    auto it = rz.find(l.name);
    if (it == rz.end()) throw DimensionMismatch("realization lacks generator " + l.name);
    if (it->second.rows() != it->second.cols()) throw DimensionMismatch(l.name + " is not square");
    if (n < 0) n = static_cast<int>(it->second.rows());
    if (it->second.rows() != n) throw DimensionMismatch(l.name + " has a different size");
  }
  Report rep;
  rep.suite = suite.empty() ? table.name : suite;
  rep.relations_total = static_cast<int>(table.relations.size());
  for (const auto& rel : table.relations) {
    Mat<S> lhs = eval_bracket(rel, rz, s0);
    Mat<S> rhs = zeros<S>(n, n);
    for (const auto& t : rel.rhs) rhs += detail::term_matrix(t, rz, n, s0);
    bool done = false;
    for (int i = 0; i < n && !done; ++i)
      for (int j = 0; j < n && !done; ++j)
        if (lhs(i, j) != rhs(i, j)) {
          rep.failures.push_back({rel.str(), i, j, to_string(lhs(i, j)), to_string(rhs(i, j))});
          done = true;
        }
  }
  return rep;
}

}  // namespace qes
