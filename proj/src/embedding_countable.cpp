#include "redpow/embedding_countable.hpp"

#include "redpow/reduced_power.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace redpow {

ElementEnumeration::ElementEnumeration(std::vector<PolyElem> e) : elems(std::move(e)) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i] == elems[j]) {
        throw std::invalid_argument("element enumeration repeats " + elems[i].to_string());
      }
    }
  }
}

ElementEnumeration ElementEnumeration::default_order(std::vector<PolyElem> e) {
  std::sort(e.begin(), e.end(), [](const PolyElem& a, const PolyElem& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return ElementEnumeration(std::move(e));
}

std::vector<PolyElem> ElementEnumeration::as_free_values() const {
  std::vector<PolyElem> v{PolyElem{}};
  v.insert(v.end(), elems.begin(), elems.end());
  return v;
}

std::string origin_name(StreamEntry::Origin o) {
  switch (o) {
    case StreamEntry::Origin::Constant: return "constant";
    case StreamEntry::Origin::Addition: return "addition";
    case StreamEntry::Origin::Multiplication: return "multiplication";
    case StreamEntry::Origin::Other: return "other";
  }
  return "?";
}

DioSystem TrueEquationStream::prefix_system(std::size_t n) const {
  std::vector<DioFormula> fs;
  for (std::size_t i = 0; i < std::min(n, entries.size()); ++i) fs.push_back(entries[i].equation.to_formula());
  return DioSystem::from_formulas(std::move(fs));
}

namespace {

PolyElem evaluate_in_model(const PolyForm& p, const std::vector<PolyElem>& values) {
  PolyElem acc;
  for (const auto& [mono, coeff] : p.entries()) {
    PolyElem prod = PolyElem::constant(coeff);
    for (auto v : mono) prod = prod * values[v];
    acc = acc + prod;
  }
  return acc;
}

}  // namespace

TrueEquationStream generate_true_equations(const ElementEnumeration& elems, std::size_t budget,
                                           std::size_t max_filler_length, const EnumerationLimits& limits) {
  const std::size_t K = elems.size();
  const auto var = [](std::size_t i) { return PolyForm::variable(static_cast<std::uint32_t>(i)); };

  std::vector<StreamEntry> guaranteed;
  std::set<EquationForm> seen;
  auto add = [&](EquationForm f, StreamEntry::Origin o) {
    if (seen.insert(f).second) guaranteed.push_back({std::move(f), o});
  };
  for (std::size_t i = 1; i <= K; ++i) {
    if (elems.at(i).is_standard()) {
      add(canonical_form(0, var(i), PolyForm::constant(elems.at(i).constant_value())), StreamEntry::Origin::Constant);
    }
  }
  for (std::size_t i = 1; i <= K; ++i) {
    for (std::size_t j = i; j <= K; ++j) {
      const PolyElem sum = poly_add(elems.at(i), elems.at(j));
      for (std::size_t k = 1; k <= K; ++k) {
        if (elems.at(k) == sum) add(canonical_form(0, var(i) + var(j), var(k)), StreamEntry::Origin::Addition);
      }
    }
  }
  for (std::size_t i = 1; i <= K; ++i) {
    for (std::size_t j = i; j <= K; ++j) {
      const PolyElem prod = poly_mul(elems.at(i), elems.at(j));
      for (std::size_t k = 1; k <= K; ++k) {
        if (elems.at(k) == prod) add(canonical_form(0, var(i) * var(j), var(k)), StreamEntry::Origin::Multiplication);
      }
    }
  }
  if (guaranteed.size() > budget) {
    throw BudgetExceeded("the " + std::to_string(guaranteed.size()) +
                         " atomic facts do not fit in an equation budget of " + std::to_string(budget));
  }
  std::stable_sort(guaranteed.begin(), guaranteed.end(),
                   [](const StreamEntry& a, const StreamEntry& b) { return a.equation < b.equation; });

  TrueEquationStream stream{std::move(guaranteed)};
  const auto values = elems.as_free_values();
  // Fill up with further true equations, shortest first. Both sides of a
  // canonical equation are enumerated polynomial forms, so group the forms by
  // their value in the model and pair up equal ones. x0 is not an element.
  for (std::size_t len = 3; stream.entries.size() < budget && len <= max_filler_length; len += 2) {
    std::vector<PolyForm> sides;
    std::uint64_t candidates = 0;
    try {
      sides = enumerate_polys(len - 2, static_cast<std::uint32_t>(K + 1), candidates, limits);
    } catch (const BudgetExceeded&) {
      break;
    }
    std::map<PolyElem, std::vector<const PolyForm*>> by_value;
    for (const auto& p : sides) {
      if (!p.mentions(0)) by_value[evaluate_in_model(p, values)].push_back(&p);
    }
    std::vector<EquationForm> batch;
    for (const auto& [value, group] : by_value) {
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i; j < group.size(); ++j) {
          if (i == j && !group[i]->is_zero()) continue;
          if (group[i]->length() + group[j]->length() + 1 > len) continue;
          EquationForm f = canonical_form(0, *group[i], *group[j]);
          if (f.length() + 2 <= len || seen.count(f)) continue;
          batch.push_back(std::move(f));
        }
      }
    }
    std::sort(batch.begin(), batch.end());
    batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
    for (auto& f : batch) {
      if (stream.entries.size() >= budget) break;
      seen.insert(f);
      stream.entries.push_back({std::move(f), StreamEntry::Origin::Other});
    }
  }
  return stream;
}

std::string schedule_name(Schedule s) { return s == Schedule::Linear ? "linear" : "quadratic"; }

Schedule parse_schedule(const std::string& s) {
  if (s == "linear") return Schedule::Linear;
  if (s == "quadratic") return Schedule::Quadratic;
  throw std::invalid_argument("unknown schedule '" + s + "' (expected linear or quadratic)");
}

std::vector<BigInt> SolutionTable::column(std::size_t i) const {
  std::vector<BigInt> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(i - 1));
  return out;
}

SolutionTable build_table(const ElementEnumeration& elems, const TrueEquationStream& stream, std::size_t depth,
                          Schedule schedule) {
  SolutionTable t;
  t.depth = depth;
  t.width = elems.size();
  t.schedule = schedule;
  t.threshold = nonneg_threshold(elems.elems);
  std::map<std::uint32_t, PolyElem> provenance;
  for (std::size_t i = 1; i <= elems.size(); ++i) provenance.emplace(static_cast<std::uint32_t>(i), elems.at(i));
  for (std::size_t n = 1; n <= depth; ++n) {
    const BigInt grow = schedule == Schedule::Linear ? BigInt(n) : BigInt(n) * n;
    const BigInt point = std::max(t.threshold, grow);
    const Assignment sigma = solve_by_evaluation(stream.prefix_system(n), provenance, point);
    std::vector<BigInt> row;
    row.reserve(elems.size());
    for (std::size_t i = 1; i <= elems.size(); ++i) row.push_back(sigma.at(static_cast<std::uint32_t>(i)));
    t.eval_points.push_back(point);
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::optional<std::size_t> to_row(const std::optional<std::size_t>& index) {
  if (!index) return std::nullopt;
  return *index + 1;
}

std::string fact_text(const FactCertificate& f, const ElementEnumeration& e) {
  return e.at(f.i).to_string() + (f.op == FactCertificate::Op::Add ? " + " : " * ") + e.at(f.j).to_string() + " = " +
         e.at(f.k).to_string();
}

}  // namespace

EmbeddingReport verify_embedding(const SolutionTable& table, const ElementEnumeration& elems,
                                 const TrueEquationStream& stream) {
  EmbeddingReport r;
  const std::size_t K = elems.size();
  if (table.width != K) throw std::invalid_argument("table width does not match the element enumeration");
  for (std::size_t n = 1; n <= table.depth; ++n) {
    Assignment sigma;
    for (std::size_t i = 1; i <= K; ++i) sigma.emplace(static_cast<std::uint32_t>(i), table.value(n, i));
    if (!verify(stream.prefix_system(n), sigma)) {
      r.invalid_rows.push_back(n);
      r.failures.push_back("row " + std::to_string(n) + " does not solve P1..P" + std::to_string(n));
    }
  }
  std::vector<SeqPrefix> cols;
  for (std::size_t i = 1; i <= K; ++i) cols.push_back(SeqPrefix{table.column(i)});

  for (auto op : {FactCertificate::Op::Add, FactCertificate::Op::Mul}) {
    for (std::size_t i = 1; i <= K; ++i) {
      for (std::size_t j = i; j <= K; ++j) {
        const PolyElem res = op == FactCertificate::Op::Add ? poly_add(elems.at(i), elems.at(j))
                                                            : poly_mul(elems.at(i), elems.at(j));
        for (std::size_t k = 1; k <= K; ++k) {
          if (elems.at(k) != res) continue;
          SeqPrefix combined;
          for (std::size_t n = 0; n < table.depth; ++n) {
            combined.values.push_back(op == FactCertificate::Op::Add ? BigInt(cols[i - 1][n] + cols[j - 1][n])
                                                                     : BigInt(cols[i - 1][n] * cols[j - 1][n]));
          }
          FactCertificate fc{op, i, j, k, std::nullopt};
          if (auto cert = eq_mod_cofinite(combined, cols[k - 1])) fc.from_row = cert->n0 + 1;
          if (!fc.from_row) r.failures.push_back("fact " + fact_text(fc, elems) + " fails at the last row");
          r.facts.push_back(fc);
        }
      }
    }
  }
  for (std::size_t i = 1; i <= K; ++i) {
    for (std::size_t j = 1; j <= K; ++j) {
      if (i == j || !poly_le(elems.at(i), elems.at(j))) continue;
      OrderCertificate oc{i, j, to_row(le_mod_cofinite(cols[i - 1], cols[j - 1]))};
      if (!oc.from_row) {
        r.failures.push_back("order " + elems.at(i).to_string() + " <= " + elems.at(j).to_string() +
                             " fails at the last row");
      }
      r.order.push_back(oc);
    }
  }
  for (std::size_t i = 1; i <= K; ++i) {
    for (std::size_t j = i + 1; j <= K; ++j) {
      InjectivityCertificate ic{i, j, std::nullopt};
      std::size_t from = table.depth;
      while (from > 0 && cols[i - 1][from - 1] != cols[j - 1][from - 1]) --from;
      if (from < table.depth) ic.from_row = from + 1;
      if (!ic.from_row) {
        r.failures.push_back("columns of " + elems.at(i).to_string() + " and " + elems.at(j).to_string() +
                             " agree at the last row");
      }
      r.injectivity.push_back(ic);
    }
  }
  for (std::size_t i = 1; i <= K; ++i) {
    if (!elems.at(i).is_standard()) continue;
    StandardCertificate sc{i, elems.at(i).constant_value(), std::nullopt};
    std::size_t from = table.depth;
    while (from > 0 && cols[i - 1][from - 1] == sc.value) --from;
    if (from < table.depth) sc.from_row = from + 1;
    if (!sc.from_row) r.failures.push_back("column of standard element " + sc.value.str() + " does not stabilize");
    r.standard.push_back(sc);
  }
  return r;
}

GrowthReport check_growth(const SolutionTable& table, const ElementEnumeration& elems, const BigInt& bound) {
  GrowthReport r{bound, {}, {}};
  for (std::size_t i = 1; i <= elems.size(); ++i) {
    const auto col = table.column(i);
    GrowthEntry e{i, elems.at(i).is_standard(), std::nullopt, 0};
    std::size_t from = col.size();
    if (e.standard) {
      e.value = elems.at(i).constant_value();
      while (from > 0 && col[from - 1] == e.value) --from;
    } else {
      e.value = bound;
      while (from > 0 && col[from - 1] > bound) --from;
    }
    if (from < col.size()) e.from_row = from + 1;
    if (!e.from_row) {
      r.failures.push_back(e.standard ? "column of " + elems.at(i).to_string() + " does not stabilize"
                                      : "column of " + elems.at(i).to_string() + " never exceeds " + bound.str());
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace redpow
