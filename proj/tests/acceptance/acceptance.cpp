// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracle.hpp"
#include "redpow/axioms.hpp"
#include "redpow/budget.hpp"
#include "redpow/dio_solver.hpp"
#include "redpow/embedding_countable.hpp"
#include "redpow/enumerate.hpp"
#include "redpow/json_io.hpp"
#include "redpow/star.hpp"
#include "redpow/ufamily.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace redpow;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome outcome() const { return out_; }

 private:
  Outcome out_;
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), s,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

ElementEnumeration desk_elements() {
  return ElementEnumeration({PolyElem::parse("0"), PolyElem::parse("1"), PolyElem::parse("2"), PolyElem::parse("X"),
                             PolyElem::parse("X+1"), PolyElem::parse("2X")});
}

EmbedArtifact desk_artifact() {
  auto elems = desk_elements();
  auto stream = generate_true_equations(elems, 60);
  auto table = build_table(elems, stream, 40);
  return {std::move(elems), std::move(stream), std::move(table)};
}

StarConfig desk_star_config() {
  StarConfig c;
  const char* idx[] = {"0", "1", "2", "w", "w+1"};
  const char* val[] = {"0", "1", "2", "X", "X+1"};
  for (int i = 0; i < 5; ++i) {
    c.index.push_back(OrdinalCNF::parse(idx[i]));
    c.assignment[OrdinalCNF::parse(idx[i])] = PolyElem::parse(val[i]);
  }
  c.n_max = 20;
  c.cap = BigInt(12);
  c.family = RegularFamily::tails();
  return c;
}

Outcome criterion1() {
  Check c;
  std::ostringstream note;
  for (const auto& model : {ModelHandle::standard_nat(), ModelHandle::poly_semiring()}) {
    const auto r = check_axioms(model, 1000, 20240601);
    int passed = 0;
    for (const auto& a : r.axioms) {
      const bool ok = a.tested >= 1000 && a.passed == a.tested && !a.counterexample;
      c.require(ok, model.name() + " axiom " + std::to_string(a.id) + " failed");
      passed += ok;
    }
    c.require(r.axioms.size() == 15, "expected 15 axioms");
    note << model.name() << " " << passed << "/15 ";
  }
  c.note(note.str() + "at 1000 samples");
  return c.outcome();
}

Outcome criterion2(const EmbedArtifact& a) {
  Check c;
  const auto r = verify_embedding(a.table, a.elements, a.stream);
  c.require(r.invalid_rows.empty(), "some rows do not solve their prefix");
  std::size_t worst = 0;
  for (const auto& f : r.facts) {
    c.require(f.from_row && *f.from_row <= 40, "a fact has no certificate within the table");
    if (f.from_row) worst = std::max(worst, *f.from_row - 1);
  }
  c.require(!r.facts.empty(), "no facts checked");
  c.require(r.injectivity.size() == 15, "expected 15 injectivity pairs");
  for (const auto& inj : r.injectivity) c.require(inj.from_row.has_value(), "columns coincide at the last row");
  std::size_t standard = 0;
  for (const auto& s : r.standard) {
    c.require(s.from_row.has_value(), "standard column does not stabilize");
    c.require(s.value == BigInt(static_cast<long>(s.i) - 1), "standard column has the wrong constant");
    ++standard;
  }
  c.require(standard == 3, "expected 3 standard columns");
  c.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
  c.note(std::to_string(r.facts.size()) + " facts certified, max n0 = " + std::to_string(worst) +
         "; 15/15 pairs injective; 0,1,2 stabilize");
  return c.outcome();
}

Outcome criterion3(const EmbedArtifact& a) {
  Check c;
  const auto r = check_growth(a.table, a.elements, 1000);
  std::ostringstream note;
  for (const auto& e : r.entries) {
    if (e.standard) continue;
    c.require(e.from_row.has_value(), "a nonstandard column ends below the bound");
    note << a.elements.at(e.i).to_string() << " > 1000 from row " << (e.from_row ? std::to_string(*e.from_row) : "-")
         << "; ";
  }
  c.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
  c.note(note.str());
  return c.outcome();
}

Outcome criterion4() {
  Check c;
  std::mt19937_64 rng(4);
  std::size_t solved = 0, evaluated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t vars = 1 + static_cast<std::uint32_t>(rng() % 3);
    const std::size_t count = 1 + rng() % 3;
    std::vector<std::string> texts;
    for (std::size_t e = 0; e < count; ++e) {
      texts.push_back(serialize(oracle::random_term(rng, vars, 2)) + "=" +
                      serialize(oracle::random_term(rng, vars, 2)));
    }
    const auto sys = DioSystem::parse(texts);
    if (const auto sol = solve_brute(sys, 30)) {
      ++solved;
      c.require(verify(sys, *sol), "brute-force solution rejected: " + texts.front());
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<PolyElem> picks;
    while (picks.size() < k) {
      auto p = oracle::random_poly(rng, 2, 3);
      if (std::find(picks.begin(), picks.end(), p) == picks.end()) picks.push_back(p);
    }
    const ElementEnumeration elems(picks);
    const auto stream = generate_true_equations(elems, 30);
    std::vector<DioFormula> chosen;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t e = 0; e < count; ++e) chosen.push_back(stream.entries[rng() % stream.entries.size()].equation.to_formula());
    const auto sys = DioSystem::from_formulas(chosen);
    std::map<std::uint32_t, PolyElem> prov;
    for (std::uint32_t i = 1; i <= k; ++i) prov[i] = elems.at(i);
    const BigInt point = nonneg_threshold(picks) + static_cast<long>(rng() % 20);
    const auto sigma = solve_by_evaluation(sys, prov, point);
    ++evaluated;
    c.require(verify(sys, sigma), "evaluation output rejected");
  }
  c.note(std::to_string(solved) + "/200 random systems solved in the box, all verified; " +
         std::to_string(evaluated) + "/200 evaluation outputs verified");
  return c.outcome();
}

Outcome criterion5() {
  Check c;
  std::size_t pairs = 0;
  for (std::uint32_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto oracle = oracle::all_strings_canonical(n, m);
      const BigInt h = count_h(n, m);
      c.require(h == BigInt(oracle.size()), "count_h(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                                                h.str() + " but the oracle finds " + std::to_string(oracle.size()));
      ++pairs;
    }
  }
  for (std::uint32_t m = 0; m <= 8; ++m) c.require(count_h(2, m) == 0, "count_h(2,m) must be 0");
  c.note(std::to_string(pairs) + " (n,m) pairs agree; count_h(2,m) = 0 for m <= 8");
  return c.outcome();
}

Outcome criterion6() {
  Check c;
  std::ostringstream note;
  for (std::uint32_t m = 0; m <= 3; ++m) {
    const auto b = compute_g(3, m, std::nullopt);
    c.require(!b.capped, "uncapped run flagged as capped");
    c.require(!b.chain.empty() && b.chain.front() == std::make_pair(3u, count_h(3, 0)), "g(3,3) != h(3,0)");
    for (std::size_t i = 1; i < b.chain.size(); ++i) {
      const auto& [j, gj] = b.chain[i - 1];
      const auto& [jm1, gjm1] = b.chain[i];
      c.require(jm1 + 1 == j, "chain is not consecutive");
      c.require(gjm1 == 2 + count_h(gj, j) * (gj + 3), "recurrence fails at g(3," + std::to_string(jm1) + ")");
    }
    c.require(b.chain.back().first == m && b.chain.back().second == b.value, "chain does not end at g(3,m)");
    note << "g(3," << m << ")=" << b.value << " ";
  }
  const auto capped = compute_g(5, 3, BigInt(1000));
  c.require(capped.capped && capped.value == 1000, "n=5 run is not flagged as capped");
  c.note(note.str() + "; g(5,3) capped at 1000");
  return c.outcome();
}

Outcome criterion7() {
  Check c;
  UFamily fam(1024);
  const auto set = standard_notation_set();
  std::ostringstream note;
  for (const auto& alpha : set) {
    const auto r = check_lemma_clauses(fam, alpha, 64, set);
    for (const auto& v : r.violations) {
      c.require(false, alpha.pretty() + " clause " + v.clause + " at n=" + std::to_string(v.n) + ": " + v.detail);
    }
    std::size_t betas = 0;
    for (const auto& b : set) betas += b <= alpha;
    c.require(r.entries.size() == betas, alpha.pretty() + ": missing entry thresholds");
    for (const auto& e : r.entries) c.require(e.n.has_value(), alpha.pretty() + ": no entry threshold");
    std::optional<std::size_t> quarter;
    for (const auto& q : r.ratios) {
      if (q.denominator == 4) quarter = q.from_n;
    }
    c.require(quarter.has_value(), alpha.pretty() + ": ratio never stays below 1/4");
    if (quarter) {
      for (std::size_t n = *quarter; n <= 1024; ++n) {
        if (4 * fam.u(alpha, n).size() > n + 1) {
          c.require(false, alpha.pretty() + ": ratio above 1/4 at n=" + std::to_string(n));
          break;
        }
      }
      note << alpha.pretty() << ":" << *quarter << " ";
    }
  }
  c.note("1/4-ratio thresholds " + note.str());
  return c.outcome();
}

const StarFact* find_fact(const StarRun& r, StarFact::Op op, const char* a, const char* b, const char* g) {
  for (const auto& f : r.facts) {
    if (f.op == op && f.alpha == OrdinalCNF::parse(a) && f.beta == OrdinalCNF::parse(b) &&
        f.gamma == OrdinalCNF::parse(g))
      return &f;
  }
  return nullptr;
}

Outcome criterion8(const StarRun& run) {
  Check c;
  c.require(run.soundness_failures.empty(),
            run.soundness_failures.empty() ? "" : "soundness: " + run.soundness_failures.front());
  c.require(run.soundness_checked == run.cells.size(), "not every cell was re-checked");
  struct Want {
    StarFact::Op op;
    const char *a, *b, *g, *name;
  };
  const Want wants[] = {{StarFact::Op::Add, "0", "1", "1", "0+1=1"},
                        {StarFact::Op::Add, "1", "1", "2", "1+1=2"},
                        {StarFact::Op::Mul, "1", "w", "w", "1*X=X"}};
  std::ostringstream note;
  for (const auto& w : wants) {
    const StarFact* f = find_fact(run, w.op, w.a, w.b, w.g);
    c.require(f != nullptr, std::string(w.name) + " not checked");
    if (!f) continue;
    c.require(f->certified(), std::string(w.name) + " not certified");
    if (!f->certified()) continue;
    const auto& cert = *f->regular->certificate;
    c.require(cert.n1.has_value(), std::string(w.name) + " has no family member");
    if (!cert.n1) continue;
    for (std::size_t k = 0; k <= cert.n0; ++k) {
      c.require(!run.config.family.contains(*cert.n1, k), std::string(w.name) + ": A_n1 meets {0..n0}");
    }
    note << w.name << " n0=" << cert.n0 << " n1=" << *cert.n1 << "; ";
  }
  c.note(note.str() + std::to_string(run.soundness_checked) + " cells re-checked");
  return c.outcome();
}

}  // namespace

int main() {
  run(1, "axioms hold in N and Z[X]+", 10, criterion1);

  std::optional<EmbedArtifact> desk;
  std::string desk_error = "the desk run did not complete";
  run(2, "countable embedding desk run", 30, [&] {
    desk = desk_artifact();
    return criterion2(*desk);
  });
  run(3, "nonstandard columns grow past 1000", 30, [&] {
    if (!desk) return Outcome{false, desk_error};
    return criterion3(*desk);
  });
  run(4, "solver outputs pass verify", 60, criterion4);
  run(5, "h cross-validation", 60, criterion5);
  run(6, "g recurrence audit", 30, criterion6);
  run(7, "u-family lemma clauses", 30, criterion7);

  std::optional<StarRun> star;
  run(8, "star construction run", 300, [&] {
    star = run_star_construction(desk_star_config());
    return criterion8(*star);
  });
  run(9, "byte-identical reruns", 330, [&] {
    Check c;
    c.require(desk.has_value() && star.has_value(), "earlier runs did not complete");
    if (!desk || !star) return c.outcome();
    const auto embed_a = to_json(*desk).dump(2);
    const auto embed_b = to_json(desk_artifact()).dump(2);
    c.require(embed_a == embed_b, "embedding artifacts differ");
    const auto star_a = to_json(*star).dump(2);
    const auto star_b = to_json(run_star_construction(desk_star_config())).dump(2);
    c.require(star_a == star_b, "star artifacts differ");
    c.note("embed " + std::to_string(embed_a.size()) + " bytes, star " + std::to_string(star_a.size()) +
           " bytes, identical");
    return c.outcome();
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
