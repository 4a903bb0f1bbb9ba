// Command-line front end. Every command writes one JSON artifact (to --out,
// stdout by default) and a human rendering unless --quiet is given.
// Exit status: 0 success, 2 property-check failure, 1 usage or IO error.

#include "redpow/axioms.hpp"
#include "redpow/budget.hpp"
#include "redpow/dio_solver.hpp"
#include "redpow/embedding_countable.hpp"
#include "redpow/json_io.hpp"
#include "redpow/models.hpp"
#include "redpow/render.hpp"
#include "redpow/star.hpp"
#include "redpow/ufamily.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace redpow;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
json json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
  return read_json_file(arg);
}

struct Output {
  std::string out;
  bool quiet = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--out", out, "Artifact path (default: stdout)");
    cmd->add_flag("--quiet", quiet, "Suppress the human-readable rendering");
  }

  // The rendering goes to stderr when the artifact itself occupies stdout.
  std::ostream& human() const { return out.empty() ? std::cerr : std::cout; }

  void write(const json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }

  void say(const std::string& s) const {
    if (!quiet) human() << s;
  }
};

std::vector<PolyElem> parse_element_list(const std::string& text) {
  std::vector<PolyElem> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(PolyElem::parse(piece));
  return out;
}

void report_failures(const std::vector<std::string>& failures) {
  for (const auto& f : failures) std::cerr << "FAIL " << f << "\n";
}

// axioms ----------------------------------------------------------------

struct AxiomsArgs {
  std::string model = "all";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  Output io;
};

int cmd_axioms(const AxiomsArgs& a) {
  std::vector<ModelHandle> models;
  if (a.model == "nat" || a.model == "all") models.push_back(ModelHandle::standard_nat());
  if (a.model == "poly" || a.model == "all") models.push_back(ModelHandle::poly_semiring());
  json reports = json::array();
  bool ok = true;
  std::ostringstream human;
  for (const auto& m : models) {
    const AxiomReport r = check_axioms(m, a.samples, a.seed);
    ok = ok && r.all_passed();
    std::size_t passed = 0;
    for (const auto& ax : r.axioms) {
      if (ax.passed == ax.tested) {
        ++passed;
      } else {
        human << "  axiom " << ax.id << " " << ax.statement << " fails: " << ax.counterexample.value_or("") << "\n";
      }
    }
    human << r.model << ": " << passed << "/" << r.axioms.size() << " axioms pass on " << r.samples
          << " samples (seed " << r.seed << ")\n";
    reports.push_back(to_json(r));
  }
  a.io.write(json{{"reports", reports}, {"ok", ok}});
  a.io.say(human.str());
  return ok ? kOk : kFailed;
}

// solve -----------------------------------------------------------------

struct SolveArgs {
  std::string system;
  std::uint64_t bound = 30;
  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  std::string provenance;
  std::string point;
  Output io;
};

int cmd_solve(const SolveArgs& a) {
  const DioSystem sys = system_from_json(json_arg(a.system));
  json out{{"system", json_arg(a.system)}};
  std::optional<Assignment> sol;
  if (!a.provenance.empty()) {
    std::map<std::uint32_t, PolyElem> prov;
    for (const auto& [k, v] : json_arg(a.provenance).items()) {
      prov[static_cast<std::uint32_t>(std::stoul(k.substr(k[0] == 'x' ? 1 : 0)))] = poly_from_json(v);
    }
    std::vector<PolyElem> range;
    for (const auto& [k, v] : prov) range.push_back(v);
    const BigInt point = a.point.empty() ? nonneg_threshold(range) : parse_bigint(a.point);
    out["method"] = "evaluation";
    out["point"] = big_to_json(point);
    try {
      sol = solve_by_evaluation(sys, prov, point);
    } catch (const PreconditionViolation& e) {
      out["error"] = e.what();
      out["equation"] = e.equation();
      a.io.write(out);
      std::cerr << e.what() << "\n";
      return kFailed;
    }
  } else {
    out["method"] = "brute";
    out["bound"] = a.bound;
    sol = solve_brute(sys, a.bound, SearchLimits{a.max_nodes});
  }
  out["solution"] = sol ? assignment_to_json(*sol) : json(nullptr);
  const bool verified = sol && verify(sys, *sol);
  out["verified"] = sol ? json(verified) : json(nullptr);
  a.io.write(out);
  if (!sol) {
    a.io.say("no solution with every variable in [0, " + std::to_string(a.bound) + "]\n");
  } else {
    std::ostringstream s;
    for (const auto& [v, val] : *sol) s << "x" << v << " = " << val << "\n";
    s << (verified ? "verified\n" : "NOT verified\n");
    a.io.say(s.str());
  }
  return sol && !verified ? kFailed : kOk;
}

// embed / verify / render-table -------------------------------------------

struct EmbedArgs {
  std::string model = "poly";
  std::string elements_file;
  std::string elements;
  std::size_t depth = 40;
  std::size_t budget = 60;
  std::size_t filler_length = 15;
  std::string schedule = "quadratic";
  std::string bound = "1000";
  Output io;
};

json embed_reports(const EmbedArtifact& art, const BigInt& bound, std::vector<std::string>& failures) {
  const EmbeddingReport rep = verify_embedding(art.table, art.elements, art.stream);
  const GrowthReport r1 = check_growth(art.table, art.elements, bound);
  failures = rep.failures;
  failures.insert(failures.end(), r1.failures.begin(), r1.failures.end());
  return json{{"embedding", to_json(rep)}, {"growth", to_json(r1)}};
}

std::string summarize_embed(const json& reports) {
  std::ostringstream s;
  const auto& e = reports.at("embedding");
  std::size_t certified = 0;
  for (const auto& f : e.at("facts")) certified += !f.at("from_row").is_null();
  s << "facts certified: " << certified << "/" << e.at("facts").size() << "\n";
  s << "invalid rows: " << e.at("invalid_rows").size() << "\n";
  for (const auto& r : reports.at("growth").at("entries")) {
    s << "m" << r.at("i").get<std::size_t>() << (r.at("standard").get<bool>() ? " equals " : " exceeds ")
      << r.at("value").dump() << " from row " << r.at("from_row").dump() << "\n";
  }
  return s.str();
}

int cmd_embed(const EmbedArgs& a) {
  if (a.model != "poly") throw CLI::ValidationError("--model", "only the poly model has an embedding pipeline");
  std::vector<PolyElem> elems;
  if (!a.elements_file.empty()) {
    for (const auto& e : json_arg(a.elements_file)) elems.push_back(poly_from_json(e));
  } else {
    elems = parse_element_list(a.elements);
  }
  if (elems.empty()) throw CLI::ValidationError("--elements", "no elements given");
  EmbedArtifact art{ElementEnumeration(std::move(elems)), {}, {}};
  art.stream = generate_true_equations(art.elements, a.budget, a.filler_length);
  art.table = build_table(art.elements, art.stream, a.depth, parse_schedule(a.schedule));
  std::vector<std::string> failures;
  json out = to_json(art);
  out["reports"] = embed_reports(art, parse_bigint(a.bound), failures);
  out["ok"] = failures.empty();
  a.io.write(out);
  if (!a.io.quiet) a.io.human() << render_table_text(art) << summarize_embed(out["reports"]);
  report_failures(failures);
  return failures.empty() ? kOk : kFailed;
}

struct VerifyArgs {
  std::string table;
  std::string system;
  std::string assignment;
  std::string bound = "1000";
  Output io;
};

int cmd_verify(const VerifyArgs& a) {
  if (!a.system.empty()) {
    if (a.assignment.empty()) throw CLI::ValidationError("--assignment", "needed together with --system");
    const DioSystem sys = system_from_json(json_arg(a.system));
    const Assignment sigma = assignment_from_json(json_arg(a.assignment));
    const bool ok = verify(sys, sigma);
    a.io.write(json{{"verified", ok}});
    a.io.say(ok ? "verified\n" : "NOT verified\n");
    return ok ? kOk : kFailed;
  }
  if (a.table.empty()) throw CLI::ValidationError("verify", "give a table artifact or --system/--assignment");
  const EmbedArtifact art = embed_artifact_from_json(read_json_file(a.table));
  std::vector<std::string> failures;
  json out = embed_reports(art, parse_bigint(a.bound), failures);
  out["ok"] = failures.empty();
  a.io.write(out);
  a.io.say(summarize_embed(out));
  report_failures(failures);
  return failures.empty() ? kOk : kFailed;
}

struct RenderArgs {
  std::string table;
  bool csv = false;
  std::string out;
};

int cmd_render(const RenderArgs& a) {
  const EmbedArtifact art = embed_artifact_from_json(read_json_file(a.table));
  const std::string text = a.csv ? render_table_csv(art) : render_table_text(art);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << text;
  }
  return kOk;
}

// ufamily / budget / star -------------------------------------------------

struct UFamilyArgs {
  std::string alpha;
  std::size_t n_max = 64;
  std::size_t horizon = 1024;
  bool check = false;
  std::string betas;
  Output io;
};

int cmd_ufamily(const UFamilyArgs& a) {
  const OrdinalCNF alpha = OrdinalCNF::parse(a.alpha);
  if (a.horizon <= a.n_max) throw CLI::ValidationError("--horizon", "must exceed --n-max");
  UFamily fam(a.horizon);
  json sets = json::array();
  for (std::size_t n = 0; n <= a.n_max; ++n) {
    json s = json::array();
    for (const auto& b : fam.u(alpha, n)) s.push_back(b.to_string());
    sets.push_back(std::move(s));
  }
  json out{{"alpha", alpha.to_string()}, {"n_max", a.n_max}, {"horizon", a.horizon}, {"plan", to_json(fam.plan(alpha))},
           {"u", sets}};
  std::string human = render_ufamily(fam, alpha, a.n_max);
  bool ok = true;
  if (a.check) {
    const auto betas = a.betas.empty() ? standard_notation_set() : parse_ordinal_list(a.betas);
    const LemmaReport rep = check_lemma_clauses(fam, alpha, a.n_max, betas);
    out["check"] = to_json(rep);
    ok = rep.ok();
    std::ostringstream s;
    s << "clauses (i), (ii), (iv) for n <= " << a.n_max << ": "
      << (std::none_of(rep.violations.begin(), rep.violations.end(),
                       [](const ClauseViolation& v) { return v.clause != "iii" && v.clause != "v"; })
              ? "hold"
              : "VIOLATED")
      << "\n";
    for (const auto& e : rep.entries) {
      s << "(iii) " << e.beta.pretty() << " enters at n = " << (e.n ? std::to_string(*e.n) : "never") << "\n";
    }
    for (const auto& r : rep.ratios) {
      s << "(v) |u|/(n+1) < 1/" << r.denominator << " from n = " << (r.from_n ? std::to_string(*r.from_n) : "never")
        << "\n";
    }
    for (const auto& v : rep.violations) {
      s << "FAIL clause (" << v.clause << ") at n = " << v.n << (v.beta ? " beta = " + v.beta->to_string() : "")
        << ": " << v.detail << "\n";
    }
    human += s.str();
  }
  a.io.write(out);
  a.io.say(human);
  return ok ? kOk : kFailed;
}

struct BudgetArgs {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::string cap;
  std::uint64_t max_candidates = EnumerationLimits{}.max_candidates;
  Output io;
};

int cmd_budget(const BudgetArgs& a) {
  std::optional<BigInt> cap;
  if (!a.cap.empty()) cap = parse_bigint(a.cap);
  FormulaBudget b;
  try {
    b = compute_g(a.n, a.m, cap, EnumerationLimits{a.max_candidates});
  } catch (const InvalidArguments& e) {
    throw CLI::ValidationError("--m", e.what());
  }
  a.io.write(to_json(b));
  std::ostringstream s;
  s << "g(" << a.n << "," << a.m << ") = " << b.value << (b.capped ? " (capped)" : "") << "\n";
  for (const auto& c : b.h_calls) {
    s << "  h(" << c.length << "," << c.vars << ") = " << (c.value ? c.value->str() : "beyond the enumeration limit")
      << "\n";
  }
  a.io.say(s.str());
  return kOk;
}

struct StarArgs {
  std::string index;
  std::string assign;
  std::size_t n_max = 20;
  std::string cap;
  std::string family = "tails";
  std::string family_file;
  std::uint64_t box = 64;
  std::size_t horizon = 1024;
  Output io;
};

int cmd_star(const StarArgs& a) {
  StarConfig cfg;
  cfg.index = parse_ordinal_list(a.index);
  cfg.assignment = ordinal_assignment_from_json(json_arg(a.assign));
  cfg.n_max = a.n_max;
  if (!a.cap.empty()) cfg.cap = parse_bigint(a.cap);
  cfg.family = a.family_file.empty() ? RegularFamily::from_id(a.family) : family_from_json(json_arg(a.family_file));
  cfg.box = a.box;
  cfg.horizon = a.horizon;
  const StarRun run = run_star_construction(cfg);
  a.io.write(to_json(run));
  std::ostringstream s;
  s << "alpha";
  for (std::size_t n = 0; n <= run.config.n_max; ++n) s << '\t' << n;
  s << '\n';
  for (const auto& alpha : run.config.index) {
    s << alpha.pretty();
    for (std::size_t n = 0; n <= run.config.n_max; ++n) {
      auto v = run.value(alpha, n);
      s << '\t' << (v ? v->str() : "?");
    }
    s << '\n';
  }
  for (const auto& f : run.facts) {
    s << (f.certified() ? "certified " : "uncertified ") << f.alpha.pretty() << (f.op == StarFact::Op::Add ? " + " : " * ")
      << f.beta.pretty() << " = " << f.gamma.pretty();
    if (f.certified()) s << "  (n0 = " << *f.n0 << ", n1 = " << *f.regular->certificate->n1 << ")";
    s << '\n';
  }
  s << "(*) re-check: " << run.soundness_checked - run.soundness_failures.size() << "/" << run.soundness_checked
    << " cells pass\n";
  a.io.say(s.str());
  report_failures(run.failures);
  return run.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced powers of N and Diophantine-correct models: desk-scale pipelines"};
  app.require_subcommand(1);
  std::function<int()> action;

  AxiomsArgs ax;
  auto* c_ax = app.add_subcommand("axioms", "Check the 15 PA- axioms on sampled elements");
  c_ax->add_option("--model", ax.model, "nat, poly or all")->check(CLI::IsMember({"nat", "poly", "all"}));
  c_ax->add_option("--samples", ax.samples, "Sampled instances per axiom");
  c_ax->add_option("--seed", ax.seed, "Random seed")->required();
  ax.io.add_to(c_ax);
  c_ax->callback([&] { action = [&] { return cmd_axioms(ax); }; });

  SolveArgs so;
  auto* c_so = app.add_subcommand("solve", "Solve a system of equations in N");
  c_so->add_option("--system", so.system, "JSON list of formula strings (inline or file)")->required();
  c_so->add_option("--bound", so.bound, "Box bound for every variable");
  c_so->add_option("--max-nodes", so.max_nodes, "Search node limit");
  c_so->add_option("--provenance", so.provenance, "JSON object x-index -> element: solve by evaluation");
  c_so->add_option("--point", so.point, "Evaluation point (default: the nonnegativity threshold)");
  so.io.add_to(c_so);
  c_so->callback([&] { action = [&] { return cmd_solve(so); }; });

  EmbedArgs em;
  auto* c_em = app.add_subcommand("embed", "Build and certify the solution table for a countable model");
  c_em->add_option("--model", em.model, "Model (poly)");
  auto* el_file = c_em->add_option("--elements", em.elements_file, "JSON list of elements");
  auto* el_text = c_em->add_option("--elems", em.elements, "Comma-separated elements, e.g. 0,1,X,X+1");
  el_file->excludes(el_text);
  c_em->add_option("--depth", em.depth, "Number of rows");
  c_em->add_option("--budget", em.budget, "Number of equations in the stream");
  c_em->add_option("--filler-length", em.filler_length, "Longest filler equation in the stream");
  c_em->add_option("--schedule", em.schedule, "Evaluation point growth")->check(CLI::IsMember({"linear", "quadratic"}));
  c_em->add_option("--bound", em.bound, "Bound for the nonstandard-growth check");
  em.io.add_to(c_em);
  c_em->callback([&] { action = [&] { return cmd_embed(em); }; });

  VerifyArgs ve;
  auto* c_ve = app.add_subcommand("verify", "Re-verify a table artifact, or an assignment against a system");
  c_ve->add_option("table", ve.table, "Table artifact written by embed");
  c_ve->add_option("--system", ve.system, "JSON list of formula strings (inline or file)");
  c_ve->add_option("--assignment", ve.assignment, "JSON object {\"x0\": value, ...} (inline or file)");
  c_ve->add_option("--bound", ve.bound, "Bound for the nonstandard-growth check");
  ve.io.add_to(c_ve);
  c_ve->callback([&] { action = [&] { return cmd_verify(ve); }; });

  RenderArgs re;
  auto* c_re = app.add_subcommand("render-table", "Print a table artifact as a grid");
  c_re->add_option("table", re.table, "Table artifact written by embed")->required();
  c_re->add_flag("--csv", re.csv, "CSV instead of the text grid");
  c_re->add_option("--out", re.out, "Output path (default: stdout)");
  c_re->callback([&] { action = [&] { return cmd_render(re); }; });

  UFamilyArgs uf;
  auto* c_uf = app.add_subcommand("ufamily", "Materialize u^alpha_n and check the lemma clauses");
  c_uf->add_option("--alpha", uf.alpha, "Ordinal, e.g. w^2+w+1")->required();
  c_uf->add_option("--n-max", uf.n_max, "Largest n");
  c_uf->add_option("--horizon", uf.horizon, "Materialization horizon");
  c_uf->add_flag("--check", uf.check, "Check clauses (i)-(v)");
  c_uf->add_option("--betas", uf.betas, "Ordinals for clause (iii) (default: a standard notation set)");
  uf.io.add_to(c_uf);
  c_uf->callback([&] { action = [&] { return cmd_ufamily(uf); }; });

  BudgetArgs bu;
  auto* c_bu = app.add_subcommand("budget", "Compute the formula budget g(n,m)");
  c_bu->add_option("--n", bu.n, "n")->required();
  c_bu->add_option("--m", bu.m, "m")->required();
  c_bu->add_option("--cap", bu.cap, "Cap used when an h value is out of reach");
  c_bu->add_option("--max-candidates", bu.max_candidates, "Enumeration limit");
  bu.io.add_to(c_bu);
  c_bu->callback([&] { action = [&] { return cmd_budget(bu); }; });

  StarArgs st;
  auto* c_st = app.add_subcommand("star", "Run the componentwise construction over an ordinal index set");
  c_st->add_option("--index", st.index, "Comma-separated ordinals")->required();
  c_st->add_option("--assign", st.assign, "JSON object ordinal -> element (inline or file)")->required();
  c_st->add_option("--n-max", st.n_max, "Largest n");
  c_st->add_option("--cap", st.cap, "Budget cap");
  c_st->add_option("--family", st.family, "tails, diagonal, arithmetic:k or constant");
  c_st->add_option("--family-file", st.family_file, "Custom family JSON");
  c_st->add_option("--box", st.box, "Search box in N");
  c_st->add_option("--horizon", st.horizon, "u-family horizon");
  st.io.add_to(c_st);
  c_st->callback([&] { action = [&] { return cmd_star(st); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
