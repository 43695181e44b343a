// Command-line front end: normal forms, degrees, products, adjoints,
// verification checks, confluence and the numeric oracle. Every command
// prints one JSON report; exit status 0 = pass, 1 = fail, 2 = usage or
// parse error.

#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "suq2/expr.hpp"
#include "suq2/numeric.hpp"
#include "suq2/verify.hpp"

using json = nlohmann::ordered_json;
using namespace suq2;

namespace {

struct Options {
  std::string algebra = "suq2";
  bool unicode = false;
  std::string out;
  std::vector<std::string> exprs;
  std::string check_id;
  int maxlen = 4;
  int trials = 500;
  std::uint64_t seed = 1;
  std::string mode;
  std::string q = "0.6,0.3";
  int N = 30;
  int M = 8;
  double tol = -1;
  int count = 200;
  int word_len = 6;
};

json base_report(const std::string& command, const std::string& algebra) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["algebra"] = algebra;
  return j;
}

int emit(const json& j, const Options& o, int code) {
  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    f << text << "\n";
  }
  return code;
}

std::complex<double> parse_q(const std::string& s) {
  auto comma = s.find(',');
  std::size_t used = 0;
  double re = std::stod(s.substr(0, comma), &used);
  if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument("bad --q");
  double im = 0;
  if (comma != std::string::npos) {
    const std::string tail = s.substr(comma + 1);
    im = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("bad --q");
  }
  return {re, im};
}

json result_of_check(const CheckResult& r) {
  json j;
  j["id"] = r.id;
  j["algebra"] = r.algebra;
  j["result"] = r.pass ? "pass" : "fail";
  j["residuals"] = r.residuals;
  j["paper_anchor"] = r.anchor;
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  return j;
}

int run_verify(const Options& o) {
  std::vector<std::string> ids;
  if (o.check_id == "all") {
    ids = check_ids();
  } else if (is_check_id(o.check_id)) {
    ids = {o.check_id};
  } else {
    json j = base_report("verify", "");
    j["error"] = "unknown check '" + o.check_id + "'";
    return emit(j, o, 2);
  }
  json checks = json::array();
  bool all = true;
  for (const auto& id : ids) {
    CheckResult r = run_check(id);
    all = all && r.pass;
    checks.push_back(result_of_check(r));
  }
  if (ids.size() == 1) {
    json j = base_report("verify", checks[0]["algebra"]);
    j["id"] = ids[0];
    j["result"] = checks[0]["result"];
    j["residuals"] = checks[0]["residuals"];
    j["paper_anchor"] = checks[0]["paper_anchor"];
    j["notes"] = checks[0]["notes"];
    return emit(j, o, all ? 0 : 1);
  }
  json j = base_report("verify", "all");
  j["result"] = all ? "pass" : "fail";
  j["residuals"] = json::array();
  j["paper_anchor"] = "";
  j["checks"] = checks;
  return emit(j, o, all ? 0 : 1);
}

int run_confluence(const Options& o) {
  auto p = algebra_by_selector(o.algebra);
  ConfluenceReport rep = confluence_check(p, o.maxlen, o.trials, o.seed);
  json j = base_report("confluence", o.algebra);
  j["result"] = rep.pass() ? "pass" : "fail";
  json res = json::array();
  for (const auto& d : rep.divergences) res.push_back(p->word_to_string(d.word) + ": " + d.detail);
  j["residuals"] = res;
  j["paper_anchor"] = "";
  j["critical_pairs"] = rep.critical_pairs;
  j["exhaustive_words"] = rep.exhaustive_words;
  j["random_trials"] = rep.random_trials;
  j["maxlen"] = o.maxlen;
  j["seed"] = o.seed;
  return emit(j, o, rep.pass() ? 0 : 1);
}

int run_numeric(const Options& o) {
  const auto qv = parse_q(o.q);
  TruncatedRep R = build_rep(qv, o.N, o.M);
  json j = base_report("numeric", "suq2");
  j["mode"] = o.mode;
  j["q"] = {qv.real(), qv.imag()};
  j["N"] = o.N;
  j["M"] = o.M;
  j["paper_anchor"] = "";
  bool pass = true;
  json res = json::array();
  if (o.mode == "relations") {
    const double tol = o.tol > 0 ? o.tol : 1e-12;
    RelationResiduals r = relation_residuals(R);
    json rel = json::array();
    for (std::size_t k = 0; k < r.names.size(); ++k) {
      rel.push_back({{"relation", r.names[k]}, {"interior", r.interior[k]}, {"full", r.full[k]}});
      res.push_back(r.interior[k]);
      pass = pass && r.interior[k] <= tol;
    }
    j["relations"] = rel;
    j["tolerance"] = tol;
  } else if (o.mode == "compare") {
    const double tol = o.tol > 0 ? o.tol : 1e-11;
    auto A = suq2_presentation();
    std::vector<std::pair<std::string, LinComb>> items;
    if (!o.exprs.empty()) {
      for (const auto& e : o.exprs) items.emplace_back(e, parse_raw(e, A));
    } else {
      std::mt19937_64 rng(o.seed);
      for (int t = 0; t < o.count; ++t) {
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.word_len));
        Word w;
        for (int k = 0; k < len; ++k) w.push_back(static_cast<Letter>(rng() % A->size()));
        LinComb raw;
        raw.emplace(w, Scalar(1));
        items.emplace_back(A->word_to_string(w), raw);
      }
    }
    json devs = json::array();
    double worst = 0;
    for (const auto& [label, raw] : items) {
      int d = 0;
      for (const auto& [w, c] : raw) d = std::max(d, static_cast<int>(w.size()));
      const double dev = oracle_compare(R, A, raw, d);
      worst = std::max(worst, dev);
      devs.push_back({{"expr", label}, {"deviation", dev}});
      res.push_back(dev);
    }
    pass = worst <= tol;
    j["max_deviation"] = worst;
    j["tolerance"] = tol;
    j["expressions"] = devs;
  } else if (o.mode == "spectrum") {
    const double tol = o.tol > 0 ? o.tol : 1e-12;
    std::vector<double> sv = gamma_singular_values(R);
    const double r = std::abs(R.transported ? 1.0 / qv : qv);
    std::vector<double> expected;
    for (int n = 0; n <= o.N; ++n)
      for (int k = 0; k < o.M; ++k) expected.push_back(std::pow(r, n) / (R.transported ? std::abs(qv) : 1.0));
    std::sort(expected.rbegin(), expected.rend());
    double worst = 0;
    for (std::size_t k = 0; k < sv.size(); ++k) worst = std::max(worst, std::abs(sv[k] - expected[k]));
    pass = worst <= tol;
    j["max_deviation"] = worst;
    j["tolerance"] = tol;
    j["singular_values"] = sv;
    res.push_back(worst);
  } else {
    json e = base_report("numeric", "suq2");
    e["error"] = "mode must be relations, compare or spectrum";
    return emit(e, o, 2);
  }
  j["result"] = pass ? "pass" : "fail";
  j["residuals"] = res;
  return emit(j, o, pass ? 0 : 1);
}

json degree_json(const Degree& d) {
  switch (d.kind) {
    case Degree::Kind::homogeneous: return d.value;
    case Degree::Kind::zero: return "zero";
    default: return "inhomogeneous";
  }
}

int run_algebraic(const std::string& cmd, const Options& o) {
  auto p = algebra_by_selector(o.algebra);
  const std::size_t need = cmd == "mul" ? 2 : 1;
  if (o.exprs.size() != need) {
    json e = base_report(cmd, o.algebra);
    e["error"] = cmd + " takes " + std::to_string(need) + " expression(s)";
    return emit(e, o, 2);
  }
  std::vector<Element> xs;
  for (const auto& e : o.exprs) xs.push_back(parse_element(e, p));
  json j = base_report(cmd, o.algebra);
  j["input"] = o.exprs;
  if (cmd == "nf") {
    j["result"] = xs[0].to_string(o.unicode);
  } else if (cmd == "deg") {
    j["result"] = degree_json(xs[0].degree());
  } else if (cmd == "mul") {
    j["result"] = (xs[0] * xs[1]).to_string(o.unicode);
  } else {
    j["result"] = xs[0].adjoint().to_string(o.unicode);
  }
  j["residuals"] = json::array();
  j["paper_anchor"] = "";
  return emit(j, o, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for the braided quantum group SU_q(2)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Also write the JSON report to this file");
  app.add_flag("--unicode", o.unicode, "Render with Greek letters");

  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "Algebra selector")
        ->check(CLI::IsMember(algebra_selectors()));
  };
  std::vector<CLI::App*> algebraic;
  const std::pair<const char*, const char*> algebraic_commands[] = {
      {"nf", "Normal form of each expression"},
      {"deg", "Degree of each expression"},
      {"mul", "Normal form of the product of the expressions"},
      {"adjoint", "Adjoint of each expression"}};
  for (const auto& [name, help] : algebraic_commands) {
    auto* sub = app.add_subcommand(name, help);
    add_algebra(sub);
    sub->add_option("expr", o.exprs, "Expression(s)")->required();
    algebraic.push_back(sub);
  }
  auto* verify = app.add_subcommand("verify", "Run a verification check (or all)");
  verify->add_option("id", o.check_id, "Check ID or 'all'")->required();

  auto* confl = app.add_subcommand("confluence", "Confluence check of a presentation");
  add_algebra(confl);
  confl->add_option("--maxlen", o.maxlen, "Maximum word length")->check(CLI::Range(3, 8));
  confl->add_option("--trials", o.trials, "Random words")->check(CLI::Range(0, 1000000));
  confl->add_option("--seed", o.seed, "Random seed");

  auto* numeric = app.add_subcommand("numeric", "Numeric truncated-operator oracle");
  numeric->add_option("mode", o.mode, "relations | compare | spectrum")->required();
  numeric->add_option("--q", o.q, "q as re or re,im");
  numeric->add_option("--N", o.N, "Radial cutoff")->check(CLI::Range(2, 400));
  numeric->add_option("--M", o.M, "Winding modulus")->check(CLI::Range(2, 64));
  numeric->add_option("--tol", o.tol, "Tolerance override");
  numeric->add_option("--seed", o.seed, "Random seed for compare");
  numeric->add_option("--count", o.count, "Random expressions for compare")->check(CLI::Range(0, 100000));
  numeric->add_option("--maxlen", o.word_len, "Maximum random word length")->check(CLI::Range(1, 12));
  numeric->add_option("--expr", o.exprs, "Explicit expression(s) for compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "verify") return run_verify(o);
    if (cmd == "confluence") return run_confluence(o);
    if (cmd == "numeric") return run_numeric(o);
    return run_algebraic(cmd, o);
  } catch (const ParseError& e) {
    json j = base_report(cmd, o.algebra);
    j["error"] = e.what();
    j["column"] = e.column();
    return emit(j, o, 2);
  } catch (const std::invalid_argument& e) {
    json j = base_report(cmd, o.algebra);
    j["error"] = e.what();
    return emit(j, o, 2);
  } catch (const std::exception& e) {
    json j = base_report(cmd, o.algebra);
    j["error"] = e.what();
    return emit(j, o, 2);
  }
}
