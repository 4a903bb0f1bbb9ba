#include "redpow/star.hpp"

#include "redpow/dio_solver.hpp"

#include <algorithm>
#include <set>

namespace redpow {

EquationForm fact_formula(StarFact::Op op, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  const PolyForm a = PolyForm::variable(i), b = PolyForm::variable(j), c = PolyForm::variable(k);
  return canonical_form(0, op == StarFact::Op::Add ? a + b : a * b, c);
}

std::optional<BigInt> StarRun::value(const OrdinalCNF& alpha, std::size_t n) const {
  const StarCell* c = cell(alpha, n);
  if (!c) return std::nullopt;
  return c->value;
}

const StarCell* StarRun::cell(const OrdinalCNF& alpha, std::size_t n) const {
  // Cells are stored n-major, ordinals ascending within each n.
  const std::size_t width = config.index.size();
  const auto it = std::lower_bound(config.index.begin(), config.index.end(), alpha);
  if (it == config.index.end() || *it != alpha || n > config.n_max) return nullptr;
  const std::size_t at = n * width + static_cast<std::size_t>(it - config.index.begin());
  return at < cells.size() ? &cells[at] : nullptr;
}

namespace {

std::string cell_name(const OrdinalCNF& a, std::size_t n) { return "(" + a.to_string() + ", " + std::to_string(n) + ")"; }

bool holds_in_nat(const EquationForm& f, const std::vector<BigInt>& values, std::uint64_t box) {
  return find_nat_witness(f, values, box).has_value();
}

class Engine {
 public:
  explicit Engine(const StarConfig& cfg)
      : cfg_(cfg), family_(cfg.horizon), calc_(cfg.limits), model_(cfg.witness_space) {}

  UFamily& family() { return family_; }

  struct Phi {
    std::vector<EquationForm> formulas;
    std::size_t uncertified = 0;
  };

  CellBudget budget(std::size_t n, std::size_t m) {
    const auto key = std::make_pair(n, m);
    if (auto it = budgets_.find(key); it != budgets_.end()) return it->second;
    CellBudget b = compute_budget(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m));
    budgets_.emplace(key, b);
    return b;
  }

  std::optional<BigInt> h(const BigInt& len, std::uint32_t m) { return calc_.h(len, m); }

  /// Certified-true formulas of length <= budget over the given elements.
  const Phi& phi(const BigInt& budget, const std::vector<PolyElem>& elems) {
    auto key = std::make_pair(budget, elems);
    if (auto it = phis_.find(key); it != phis_.end()) return it->second;
    Phi out;
    for (const auto& f : formulas(budget, static_cast<std::uint32_t>(elems.size()))) {
      if (model_.certified_true(f, elems)) {
        out.formulas.push_back(f);
      } else if (!f.is_quantifier_free()) {
        ++out.uncertified;
      }
    }
    return phis_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const std::vector<EquationForm>& formulas(const BigInt& budget, std::uint32_t m) {
    auto key = std::make_pair(budget, m);
    if (auto it = enums_.find(key); it != enums_.end()) return it->second;
    return enums_.emplace(key, enumerate_formulas(static_cast<std::size_t>(budget), m, cfg_.limits)).first->second;
  }

  CellBudget compute_budget(std::uint32_t n, std::uint32_t m) {
    if (m > n) return {0, false, std::nullopt};
    if (!cfg_.cap) {
      const BigInt g = calc_.g(n, m, std::nullopt).value;
      return {g, false, g};
    }
    const BigInt& cap = *cfg_.cap;
    const CellBudget capped{cap, true, std::nullopt};
    // Once a value reaches 3 the chain only grows, and h grows with the
    // length, so reaching the cap early settles the answer.
    BigInt value = 0;
    for (std::uint32_t len = 1; len <= n; ++len) {
      auto hv = calc_.h(len, 0);
      if (!hv) return capped;
      value = *hv;
      if (value >= cap && value >= 3) return capped;
    }
    for (std::uint32_t j = n; j > m; --j) {
      if (value >= cap && value >= 3) return capped;
      auto hv = calc_.h(value, j);
      if (!hv) return capped;
      value = 2 + *hv * (value + 3);
    }
    if (value > cap) return capped;
    return {value, false, value};
  }

  const StarConfig& cfg_;
  UFamily family_;
  BudgetCalculator calc_;
  PolyModelEvaluator model_;
  std::map<std::pair<std::size_t, std::size_t>, CellBudget> budgets_;
  std::map<std::pair<BigInt, std::uint32_t>, std::vector<EquationForm>> enums_;
  std::map<std::pair<BigInt, std::vector<PolyElem>>, Phi> phis_;
};

std::vector<PolyElem> elements_of(const StarConfig& cfg, const std::vector<OrdinalCNF>& u) {
  std::vector<PolyElem> out;
  for (const auto& b : u) out.push_back(cfg.assignment.at(b));
  return out;
}

void choose(Engine& engine, const StarConfig& cfg, StarRun& run, StarCell& cell) {
  const std::size_t m = cell.u.size();
  std::vector<BigInt> values(m, 0);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    auto v = run.value(cell.u[j], cell.n);
    if (!v) {
      cell.error = "depends on the failed cell " + cell_name(cell.u[j], cell.n);
      return;
    }
    values[j] = *v;
  }
  cell.budget = engine.budget(cell.n, m);
  const Engine::Phi* phi = nullptr;
  try {
    phi = &engine.phi(cell.budget.used, elements_of(cfg, cell.u));
  } catch (const BudgetExceeded& e) {
    cell.error = e.what();
    return;
  }
  cell.phi_size = phi->formulas.size();
  cell.uncertified = phi->uncertified;
  cell.phi_prime_length = 2;
  for (const auto& f : phi->formulas) cell.phi_prime_length += f.length() + 3;
  if (cell.budget.exact) {
    const BigInt& g = *cell.budget.exact;
    if (auto hv = engine.h(g, static_cast<std::uint32_t>(m))) cell.g_next = 2 + *hv * (g + 3);
  }

  const auto x_alpha = static_cast<std::uint32_t>(m - 1);
  std::vector<const EquationForm*> plain, existential;
  for (const auto& f : phi->formulas) {
    if (!f.mentions_free(x_alpha)) {
      if (!holds_in_nat(f, values, cfg.box)) {
        cell.error = "formula without x_alpha fails in N: " + f.text();
        return;
      }
      continue;
    }
    ++cell.phi_alpha_size;
    (f.is_quantifier_free() ? plain : existential).push_back(&f);
  }
  for (std::uint64_t k = 0; k <= cfg.box; ++k) {
    values[x_alpha] = k;
    auto good = [&](const EquationForm* f) { return holds_in_nat(*f, values, cfg.box); };
    if (std::all_of(plain.begin(), plain.end(), good) && std::all_of(existential.begin(), existential.end(), good)) {
      cell.value = BigInt(k);
      return;
    }
  }
  cell.error = "no witness for x_alpha in [0, " + std::to_string(cfg.box) + "]";
}

void certify_facts(Engine& engine, const StarConfig& cfg, StarRun& run) {
  const auto& index = cfg.index;
  const RegularFamily& family = cfg.family;
  auto position = [](const std::vector<OrdinalCNF>& u, const OrdinalCNF& a) {
    return static_cast<std::uint32_t>(std::lower_bound(u.begin(), u.end(), a) - u.begin());
  };
  for (auto op : {StarFact::Op::Add, StarFact::Op::Mul}) {
    for (std::size_t ia = 0; ia < index.size(); ++ia) {
      for (std::size_t ib = ia; ib < index.size(); ++ib) {
        const PolyElem& a = cfg.assignment.at(index[ia]);
        const PolyElem& b = cfg.assignment.at(index[ib]);
        const PolyElem res = op == StarFact::Op::Add ? a + b : a * b;
        for (const auto& gamma : index) {
          if (cfg.assignment.at(gamma) != res) continue;
          StarFact fact{op, index[ia], index[ib], gamma, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
          // A δ covering the fact at n, with the fact short enough for its budget.
          auto cover = [&](std::size_t n) -> std::optional<OrdinalCNF> {
            for (const auto& delta : index) {
              const auto& u = engine.family().u(delta, n);
              if (!contains(u, fact.alpha) || !contains(u, fact.beta) || !contains(u, gamma)) continue;
              const auto f = fact_formula(op, position(u, fact.alpha), position(u, fact.beta), position(u, gamma));
              if (BigInt(f.length()) <= engine.budget(n, u.size()).used) return delta;
            }
            return std::nullopt;
          };
          for (std::size_t n = cfg.n_max + 1; n-- > 0;) {
            auto d = cover(n);
            if (!d) break;
            fact.n0 = n;
            fact.delta = d;
          }
          const std::string name = "fact " + a.to_string() +
                                   (op == StarFact::Op::Add ? " + " : " * ") + b.to_string() + " = " +
                                   res.to_string();
          if (!fact.n0) {
            run.failures.push_back(name + ": no covering delta within the budget at n_max");
            run.facts.push_back(std::move(fact));
            continue;
          }
          SeqPrefix lhs, rhs;
          bool complete = true;
          for (std::size_t n = 0; n <= cfg.n_max; ++n) {
            auto va = run.value(fact.alpha, n), vb = run.value(fact.beta, n), vg = run.value(gamma, n);
            if (!va || !vb || !vg) {
              complete = false;
              break;
            }
            lhs.values.push_back(op == StarFact::Op::Add ? BigInt(*va + *vb) : BigInt(*va * *vb));
            rhs.values.push_back(*vg);
          }
          if (!complete) {
            run.failures.push_back(name + ": some value is missing");
            run.facts.push_back(std::move(fact));
            continue;
          }
          for (std::size_t n = *fact.n0; n <= cfg.n_max; ++n) {
            if (lhs[n] != rhs[n]) {
              fact.pointwise_failure = n;
              run.failures.push_back(name + ": fails pointwise at n = " + std::to_string(n));
              break;
            }
          }
          fact.regular = eq_mod_regular(lhs, rhs, family, *fact.n0);
          if (fact.regular->status != RegularCheck::Status::Certified) {
            run.failures.push_back(name + ": no regular-family certificate");
          }
          run.facts.push_back(std::move(fact));
        }
      }
    }
  }
}

// Fresh enumeration and evaluation, independent of the construction's caches.
void recheck_soundness(const StarConfig& cfg, StarRun& run) {
  Engine fresh(cfg);
  for (const auto& cell : run.cells) {
    if (!cell.value) continue;
    std::vector<BigInt> values;
    for (const auto& b : cell.u) values.push_back(*run.value(b, cell.n));
    ++run.soundness_checked;
    try {
      const auto& phi = fresh.phi(cell.budget.used, elements_of(cfg, cell.u));
      for (const auto& f : phi.formulas) {
        if (!holds_in_nat(f, values, cfg.box)) {
          run.soundness_failures.push_back(cell_name(cell.alpha, cell.n) + ": " + f.text());
          break;
        }
      }
    } catch (const BudgetExceeded& e) {
      run.soundness_failures.push_back(cell_name(cell.alpha, cell.n) + ": " + e.what());
    }
  }
}

}  // namespace

StarRun run_star_construction(const StarConfig& config) {
  StarRun run;
  run.config = config;
  auto& cfg = run.config;
  std::sort(cfg.index.begin(), cfg.index.end());
  cfg.index.erase(std::unique(cfg.index.begin(), cfg.index.end()), cfg.index.end());
  if (cfg.index.empty()) throw std::invalid_argument("empty index set");
  if (cfg.n_max + 1 > cfg.horizon) throw std::invalid_argument("n_max must be below the horizon");
  for (const auto& a : cfg.index) {
    if (!cfg.assignment.count(a)) throw std::invalid_argument("no element assigned to " + a.to_string());
  }

  Engine engine(cfg);
  for (const auto& a : cfg.index) {
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
      for (const auto& b : engine.family().u(a, n)) {
        if (!std::binary_search(cfg.index.begin(), cfg.index.end(), b)) {
          throw std::invalid_argument("index set is not closed: " + b.to_string() + " belongs to u^" + a.to_string() +
                                      "_" + std::to_string(n));
        }
      }
    }
  }

  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    for (const auto& a : cfg.index) {
      StarCell cell;
      cell.alpha = a;
      cell.n = n;
      cell.u = engine.family().u(a, n);
      run.cells.push_back(std::move(cell));
      choose(engine, cfg, run, run.cells.back());
      const StarCell& c = run.cells.back();
      if (!c.error.empty()) run.failures.push_back("cell " + cell_name(a, n) + ": " + c.error);

      if (c.u.size() >= 2) {
        const OrdinalCNF& gamma = c.u[c.u.size() - 2];
        const std::vector<OrdinalCNF> rest(c.u.begin(), c.u.end() - 1);
        if (engine.family().u(gamma, n) != rest) {
          run.coherence_failures.push_back(cell_name(a, n) + ": u^gamma_n differs for gamma = " + gamma.to_string());
        }
      }
      if (c.g_next) {
        ++run.audits;
        if (c.phi_prime_length > *c.g_next) {
          run.audit_failures.push_back(cell_name(a, n) + ": |phi'| = " + c.phi_prime_length.str() + " > " +
                                       c.g_next->str());
        }
      }
    }
  }

  certify_facts(engine, cfg, run);
  recheck_soundness(cfg, run);
  for (const auto& s : run.soundness_failures) run.failures.push_back("soundness " + s);
  for (const auto& s : run.coherence_failures) run.failures.push_back("coherence " + s);
  for (const auto& s : run.audit_failures) run.failures.push_back("budget audit " + s);
  return run;
}

}  // namespace redpow
