#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qes/suites.hpp"

using namespace qes;
using nlohmann::json;

namespace {

struct Flags {
  std::optional<int> M, m, n, dx, dy, rep, max_words;
  std::string t, gamma, lambda, s, out;
  bool small = false;
};

void add_flags(CLI::App* app, Flags& f) {
  app->add_option("--M", f.M, "number of variables");
  app->add_option("--m", f.m, "degree m");
  app->add_option("--n", f.n, "degree n");
  app->add_option("--t", f.t, "parameter t (rational)");
  app->add_option("--gamma", f.gamma, "comma-separated gamma list");
  app->add_option("--dx", f.dx, "Delta");
  app->add_option("--dy", f.dy, "Delta'");
  app->add_option("--lambda", f.lambda, "lambda (Laurent polynomial in s or q)");
  app->add_option("--s", f.s, "comma-separated evaluation points");
  app->add_option("--rep", f.rep, "deformed realization: 2 or 4");
  app->add_option("--max-words", f.max_words, "maximal word length");
  app->add_option("--out", f.out, "output file");
  app->add_flag("--small", f.small, "smallest nondegenerate parameters");
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

SuiteParams to_params(const Flags& f) {
  SuiteParams p;
  if (f.small) return p;
  p.M = f.M;
  p.m = f.m;
  p.n = f.n;
  p.dx = f.dx;
  p.dy = f.dy;
  p.rep = f.rep;
  p.max_words = f.max_words;
  if (!f.t.empty()) p.t = Rational::parse(f.t);
  if (!f.gamma.empty()) p.gamma = rational_list(f.gamma);
  if (!f.lambda.empty()) p.lambda = QLaurent::parse(f.lambda);
  p.s = rational_list(f.s);
  for (const auto& x : p.s)
    if (x.is_zero()) throw Error("--s must be nonzero");
  if (p.rep && *p.rep != 2 && *p.rep != 4) throw Error("--rep must be 2 or 4");
  if (p.max_words && *p.max_words < 0) throw Error("--max-words must be nonnegative");
  return p;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw Error("cannot write " + out);
  os << text;
}

template <class S, class Op>
json rep_json(const Rep<S, Op>& r) {
  json g = json::object();
  for (const auto& l : r.labels) g[l] = matrix_json(realize(r.at(l), r.module));
  json dims = json::array();
  for (const auto& c : r.module.components) dims.push_back(c.dim());
  return {{"family", r.family}, {"params", r.params}, {"dimension", r.dim()}, {"components", dims}, {"generators", g}};
}

json realize_family(const std::string& fam, const SuiteParams& p) {
  const int m = p.m.value_or(1), n = p.n.value_or(1);
  const QLaurent lam = p.lambda.value_or(QLaurent(Rational(1, 3)));
  if (fam == "gl") return rep_json(rep_gl(p.M.value_or(1), p.m.value_or(2), p.gamma.empty() ? Rational(0) : p.gamma[0]));
  if (fam == "sl2") return rep_json(rep_sl2(p.m.value_or(2)));
  if (fam == "gl_sum") {
    std::vector<Rational> gs = p.gamma.empty() ? std::vector<Rational>{0, 0} : p.gamma;
    std::vector<int> ms;
    for (size_t i = 0; i < gs.size(); ++i) ms.push_back(m + static_cast<int>(i));
    return rep_json(rep_gl_sum(p.M.value_or(1), ms, gs));
  }
  if (fam == "gl_product") return rep_json(rep_gl_product(m, n));
  if (fam == "olver") {
    OlverRep o = rep_olver(m, n);
    return {{"family", "olver"},
            {"params", {{"m", m}, {"n", n}, {"gauge", o.gauge.str()}}},
            {"dimension", o.basis.dim()},
            {"generators",
             {{"j+", matrix_json(realize_gauged(o.jp, o.basis, o.gauge))},
              {"j0", matrix_json(realize_gauged(o.j0, o.basis, o.gauge))},
              {"j-", matrix_json(realize_gauged(o.jm, o.basis, o.gauge))}}}};
  }
  if (fam == "spl21_1var") return rep_json(rep_spl21_1var(m, p.t.value_or(Rational(1, 3))));
  if (fam == "spl21_1var_atypical") return rep_json(rep_spl21_1var_atypical(m));
  if (fam == "spl21_2var") return rep_json(rep_spl21_2var(m, n));
  if (fam == "spl22_atypical") return rep_json(rep_spl22(n));
  if (fam == "graded_delta") {
    const int dx = p.dx.value_or(1), dy = p.dy.value_or(1);
    CRep r = rep_graded_diag(m, n, dx, dy);
    for (int a = 0; a < (1 << dx); ++a)
      for (int b = 0; b < (1 << dy); ++b) {
        std::vector<int> av(dx), bv(dy);
        std::string name = "Q[";
        for (int i = 0; i < dx; ++i) name += std::to_string(av[i] = (a >> i) & 1);
        name += "][";
        for (int i = 0; i < dy; ++i) name += std::to_string(bv[i] = (b >> i) & 1);
        r.add(name + "]", graded_Q(m, n, av, bv));
      }
    return rep_json(r);
  }
  if (fam == "rmod") return rep_json(rmod_ops(m, n).rep);
  if (fam == "qspl21_2") return rep_json(rep_qspl21_2(n));
  if (fam == "qspl21_4") return rep_json(rep_qspl21_4(n, lam));
  throw Error("unknown family " + fam);
}

json dims_json(const SuiteParams& p) {
  const int M = p.M.value_or(1), m = p.m.value_or(1), n = p.n.value_or(1);
  json j = {{"params", {{"M", M}, {"m", m}, {"n", n}}}};
  j["P(m,M)"] = basis_P<Rational>(m, M).dim();
  j["P(m;n)"] = basis_P_bidegree<Rational>(m, n).dim();
  j["M(m;n)"] = basis_M(m, n).dim();
  j["Mtilde(m;n)"] = basis_olver(m, n).dim();
  j["spl21_2var"] = rep_spl21_2var(m, n).dim();
  if (m >= 1) j["spl21_1var"] = rep_spl21_1var(m, Rational(1, 3)).dim();
  if (n >= 1) {
    j["spl22_atypical"] = rep_spl22(n).dim();
    j["rmod"] = rmod_ops(m, n).rep.dim();
    j["qspl21_2"] = rep_qspl21_2(n).dim();
    j["qspl21_4"] = rep_qspl21_4(n, QLaurent(Rational(1, 3))).dim();
  }
  return j;
}

json span_json(const std::string& fam, const SuiteParams& p) {
  const int max_words = p.max_words.value_or(6);
  json r = realize_family(fam, p);
  if (r.contains("generators") && !r["generators"].empty() &&
      r["generators"].begin().value()["ring"] != ring_name<Rational>())
    throw Error("span needs a rational realization");
  std::vector<Mat<Rational>> gens;
  for (auto it = r["generators"].begin(); it != r["generators"].end(); ++it) {
    const auto& e = it.value();
    const int N = e["rows"];
    Mat<Rational> mat(N, N);
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) mat(i, k) = Rational::parse(e["entries"][i][k].get<std::string>());
    gens.push_back(mat);
  }
  auto res = enveloping_span(gens, max_words);
  return {{"family", fam},
          {"params", r["params"]},
          {"dimension", res.dimension},
          {"target", res.target},
          {"words_length", res.words_length},
          {"saturated", res.saturated()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of differential-operator realizations of Lie (super)algebras"};
  app.require_subcommand(1);
  Flags f;
  std::string name;
  auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
  verify->add_option("suite", name, "suite name or 'all'")->required();
  add_flags(verify, f);
  auto* realize_cmd = app.add_subcommand("realize", "dump the matrices of a realization");
  realize_cmd->add_option("family", name, "representation family")->required();
  add_flags(realize_cmd, f);
  auto* dims = app.add_subcommand("dims", "module dimensions");
  add_flags(dims, f);
  auto* casimir = app.add_subcommand("casimir", "q-Casimir matrices and the ratio C1 C2^-1");
  add_flags(casimir, f);
  auto* span = app.add_subcommand("span", "enveloping span of a realization");
  span->add_option("family", name, "representation family (default spl21_1var)");
  add_flags(span, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const SuiteParams p = to_params(f);
    if (verify->parsed()) {
      if (name != "all") {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) throw Error("unknown suite " + name);
      }
      Report r = run_suite(name, p);
      emit(r.to_json(), f.out);
      return r.pass() ? 0 : 1;
    }
    if (realize_cmd->parsed()) {
      emit(realize_family(name, p), f.out);
      return 0;
    }
    if (dims->parsed()) {
      emit(dims_json(p), f.out);
      return 0;
    }
    if (casimir->parsed()) {
      const int which = p.rep.value_or(2), n = p.n.value_or(1);
      const QLaurent lam = p.lambda.value_or(QLaurent(Rational(1, 3)));
      QRep rep = which == 2 ? rep_qspl21_2(n) : rep_qspl21_4(n, lam);
      Casimirs c = q_casimirs(rep.matrices());
      Report r = suite_qcasimir(which, n, lam, p.s);
      json j = r.to_json();
      j["C1"] = matrix_json(c.C1);
      j["C2"] = matrix_json(c.C2);
      emit(j, f.out);
      return r.pass() ? 0 : 1;
    }
    if (span->parsed()) {
      json j = span_json(name.empty() ? "spl21_1var" : name, p);
      emit(j, f.out);
      return j["saturated"].get<bool>() ? 0 : 1;
    }
  } catch (const qes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
