#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/reps.hpp"

namespace qes {

// Unset fields fall back to the smallest nondegenerate values of each suite.
struct SuiteParams {
  std::optional<int> M, m, n, dx, dy, rep, max_words;
  std::optional<Rational> t;
  std::vector<Rational> gamma;
  std::optional<QLaurent> lambda;
  std::vector<Rational> s;
  // Flip the sign of one entry of one generator before the relation check.
  bool corrupt = false;
};

Report suite_gl(int M, int m, const std::vector<Rational>& gammas, bool corrupt = false);
Report suite_sl2(int m, bool corrupt = false);
Report suite_gl_product(int m, int n, bool corrupt = false);
Report suite_olver(int m, int n, bool corrupt = false);
Report suite_spl21_1var(int m, const Rational& t, bool corrupt = false);
Report suite_spl21_2var(int m, int n, bool corrupt = false);
Report suite_spl22(int n, bool corrupt = false);
Report suite_graded(int m, int n, int dx, int dy, bool corrupt = false);
Report suite_rmod(int m, int n, bool corrupt = false);
// s: optional evaluation points in addition to the symbolic check.
Report suite_qspl21(int rep, int n, const QLaurent& lambda, const std::vector<Rational>& s, bool corrupt = false);
Report suite_qcasimir(int rep, int n, const QLaurent& lambda, const std::vector<Rational>& s, bool corrupt = false);
Report suite_burnside(int m, const Rational& t, int max_words, bool corrupt = false);

const std::vector<std::string>& suite_names();
// Throws Error on an unknown suite name; "all" runs every suite.
Report run_suite(const std::string& name, const SuiteParams& p);
// Runs the suite with a corrupted generator; passes iff the suite fails with a matrix-entry witness.
Report negative_control(const std::string& name, const SuiteParams& p);

// Flips the sign of the first nonzero entry of g[label].
template <class S>
void corrupt_entry(GenMatrices<S>& g, const std::string& label) {
  Mat<S>& m = g.at(label);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) {
        m(i, j) = -m(i, j);
        return;
      }
  throw Error("cannot corrupt the zero generator " + label);
}

}  // namespace qes
