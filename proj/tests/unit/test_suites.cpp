#include <doctest.h>

#include "helpers.hpp"

using namespace qes;

TEST_CASE("every suite passes at default parameters") {
  for (const auto& name : suite_names()) {
    SuiteParams p;
    Report r = run_suite(name, p);
    CHECK_MESSAGE(r.pass(), name);
  }
}

TEST_CASE("negative controls detect a single corrupted sign") {
  for (const auto& name : suite_names()) {
    std::vector<int> reps = {0};
    if (name == "qspl21" || name == "qcasimir") reps = {2, 4};
    for (int rp : reps) {
      SuiteParams p;
      if (rp) p.rep = rp;
      Report r = negative_control(name, p);
      CHECK_MESSAGE(r.pass(), name, " rep ", rp);
      CHECK(r.extra.contains("witness"));
    }
  }
}

TEST_CASE("suite examples") {
  Report gl = suite_gl(2, 3, {Rational(1, 2)});
  CHECK(gl.pass());
  CHECK(gl.relations_total == 81);
  Report two = suite_spl21_2var(2, 2);
  CHECK(two.pass());
  CHECK(two.extra["dimension"] == 11);
  Report q4 = suite_qspl21(4, 2, q_pow(-3), {Rational(2)});
  CHECK(q4.pass());
  CHECK(q4.extra.contains("reducibility"));
  CHECK(q4.extra["reducibility"]["invariant_subspace_dimension"] == 5);
}

TEST_CASE("printed-formula discrepancies are reported, never silent") {
  for (auto r : {suite_spl22(1), suite_graded(1, 1, 1, 1), suite_rmod(1, 1), suite_spl21_1var(1, Rational(1, 3))}) {
    CHECK(r.pass());
    CHECK(r.extra.contains("discrepancies"));
    for (const auto& d : r.extra["discrepancies"]) {
      CHECK(d.contains("claim"));
      CHECK(d.contains("printed"));
      CHECK(d.contains("found"));
    }
  }
}

TEST_CASE("reports are deterministic") {
  SuiteParams p;
  CHECK(run_suite("spl21-2var", p).to_json().dump() == run_suite("spl21-2var", p).to_json().dump());
}

TEST_CASE("bad parameters are rejected") {
  SuiteParams p;
  CHECK_THROWS_AS(run_suite("nope", p), Error);
  CHECK_THROWS_AS(suite_graded(1, 1, 0, 0), Error);
  CHECK_THROWS_AS(suite_qspl21(3, 1, QLaurent(1), {}), Error);
}
