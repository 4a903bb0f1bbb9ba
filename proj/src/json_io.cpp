#include "redpow/json_io.hpp"

#include <fstream>
#include <limits>

namespace redpow {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json poly_to_json(const PolyElem& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(big_to_json(c));
  return out;
}

PolyElem poly_from_json(const json& j) {
  if (j.is_string()) return PolyElem::parse(j.get<std::string>());
  if (j.is_number_integer()) return PolyElem::constant(big_from_json(j));
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient list, got " + j.dump());
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(big_from_json(c));
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return PolyElem::from_coeffs(std::move(coeffs));
}

DioSystem system_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("a system is a JSON list of formula strings");
  return DioSystem::parse(j.get<std::vector<std::string>>());
}

json assignment_to_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [v, value] : a) out["x" + std::to_string(v)] = big_to_json(value);
  return out;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("an assignment is an object {\"x0\": value, ...}");
  Assignment a;
  for (const auto& [key, value] : j.items()) {
    if (key.size() < 2 || key[0] != 'x') throw std::invalid_argument("bad variable name '" + key + "'");
    a[static_cast<std::uint32_t>(std::stoul(key.substr(1)))] = big_from_json(value);
  }
  return a;
}

namespace {

RegularFamily::Kind tail_kind(const std::string& s) {
  if (s == "tails") return RegularFamily::Kind::Tails;
  if (s == "diagonal") return RegularFamily::Kind::Diagonal;
  if (s == "constant") return RegularFamily::Kind::Constant;
  throw std::invalid_argument("unknown tail rule '" + s + "'");
}

std::string tail_name(RegularFamily::Kind k) {
  switch (k) {
    case RegularFamily::Kind::Tails: return "tails";
    case RegularFamily::Kind::Diagonal: return "diagonal";
    case RegularFamily::Kind::Constant: return "constant";
    default: return "?";
  }
}

json opt_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json certificate_json(const EqCertificate& c) {
  json out{{"kind", c.kind == EqCertificate::Kind::CofiniteTail ? "cofinite" : "regular"},
           {"n0", c.n0},
           {"prefix_length", c.prefix_length}};
  if (c.n1) out["n1"] = *c.n1;
  return out;
}

std::string regular_status(RegularCheck::Status s) {
  switch (s) {
    case RegularCheck::Status::Certified: return "certified";
    case RegularCheck::Status::NoMemberWithinLimit: return "no_member_within_limit";
    case RegularCheck::Status::Refuted: return "refuted";
  }
  return "?";
}

json ordinal_list(const std::vector<OrdinalCNF>& v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

}  // namespace

RegularFamily family_from_json(const json& j) {
  std::vector<RegularFamily::ExplicitSet> sets;
  for (const auto& s : j.at("sets")) {
    RegularFamily::ExplicitSet e;
    if (s.contains("elements")) e.elements = s.at("elements").get<std::vector<std::uint64_t>>();
    if (s.contains("from") && !s.at("from").is_null()) e.from = s.at("from").get<std::uint64_t>();
    sets.push_back(std::move(e));
  }
  std::optional<RegularFamily::Kind> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) tail = tail_kind(j.at("tail").get<std::string>());
  return RegularFamily::custom(std::move(sets), tail);
}

json family_to_json(const RegularFamily& f) {
  if (f.kind() != RegularFamily::Kind::Custom) return f.id();
  json sets = json::array();
  for (const auto& s : f.sets()) {
    json e{{"elements", s.elements}};
    e["from"] = s.from ? json(*s.from) : json(nullptr);
    sets.push_back(std::move(e));
  }
  return json{{"sets", sets}, {"tail", f.tail() ? json(tail_name(*f.tail())) : json(nullptr)}};
}

std::map<OrdinalCNF, PolyElem> ordinal_assignment_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("an element assignment is an object {\"w\": \"X\", ...}");
  std::map<OrdinalCNF, PolyElem> out;
  for (const auto& [key, value] : j.items()) out[OrdinalCNF::parse(key)] = poly_from_json(value);
  return out;
}

json to_json(const AxiomReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json e{{"id", a.id},
           {"statement", a.statement},
           {"tested", a.tested},
           {"passed", a.passed},
           {"vacuous", a.vacuous}};
    e["counterexample"] = a.counterexample ? json(*a.counterexample) : json(nullptr);
    axioms.push_back(std::move(e));
  }
  return json{{"model", r.model}, {"samples", r.samples}, {"seed", r.seed}, {"all_passed", r.all_passed()},
              {"axioms", axioms}};
}

json to_json(const FormulaBudget& b) {
  json calls = json::array();
  for (const auto& c : b.h_calls) {
    calls.push_back(json{{"length", big_to_json(c.length)},
                         {"vars", c.vars},
                         {"value", c.value ? big_to_json(*c.value) : json(nullptr)}});
  }
  json chain = json::array();
  for (const auto& [m, v] : b.chain) chain.push_back(json{{"m", m}, {"g", big_to_json(v)}});
  return json{{"n", b.n}, {"m", b.m}, {"g", big_to_json(b.value)}, {"capped", b.capped}, {"h_calls", calls},
              {"chain", chain}};
}

json to_json(const UPlan& p) {
  switch (p.kind) {
    case UPlan::Case::Zero: return json{{"case", "zero"}};
    case UPlan::Case::Successor: return json{{"case", "successor"}, {"threshold", opt_size(p.threshold)}};
    case UPlan::Case::Limit: return json{{"case", "limit"}, {"deltas", ordinal_list(p.deltas)}, {"starts", p.starts}};
  }
  return nullptr;
}

json to_json(const LemmaReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(json{{"beta", e.beta.to_string()}, {"n", opt_size(e.n)}});
  json ratios = json::array();
  for (const auto& t : r.ratios) {
    ratios.push_back(json{{"epsilon", "1/" + std::to_string(t.denominator)}, {"from_n", opt_size(t.from_n)}});
  }
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"clause", v.clause},
                              {"n", v.n},
                              {"beta", v.beta ? json(v.beta->to_string()) : json(nullptr)},
                              {"detail", v.detail}});
  }
  return json{{"alpha", r.alpha.to_string()},
              {"n_max", r.n_max},
              {"horizon", r.horizon},
              {"ok", r.ok()},
              {"clause_iii_entries", entries},
              {"clause_v_thresholds", ratios},
              {"violations", violations}};
}

json to_json(const StarRun& r) {
  const auto& c = r.config;
  json assignment = json::object();
  for (const auto& [a, p] : c.assignment) assignment[a.to_string()] = poly_to_json(p);
  json config{{"index", ordinal_list(c.index)},
              {"assignment", assignment},
              {"n_max", c.n_max},
              {"cap", c.cap ? big_to_json(*c.cap) : json(nullptr)},
              {"family", family_to_json(c.family)},
              {"box", c.box},
              {"horizon", c.horizon}};
  json cells = json::array();
  for (const auto& cell : r.cells) {
    json e{{"alpha", cell.alpha.to_string()},
           {"n", cell.n},
           {"u", ordinal_list(cell.u)},
           {"budget", big_to_json(cell.budget.used)},
           {"budget_capped", cell.budget.capped},
           {"phi", cell.phi_size},
           {"phi_alpha", cell.phi_alpha_size},
           {"uncertified", cell.uncertified},
           {"phi_prime_length", big_to_json(cell.phi_prime_length)}};
    e["g_exact"] = cell.budget.exact ? big_to_json(*cell.budget.exact) : json(nullptr);
    e["g_next"] = cell.g_next ? big_to_json(*cell.g_next) : json(nullptr);
    e["value"] = cell.value ? big_to_json(*cell.value) : json(nullptr);
    if (!cell.error.empty()) e["error"] = cell.error;
    cells.push_back(std::move(e));
  }
  json facts = json::array();
  for (const auto& f : r.facts) {
    json e{{"op", f.op == StarFact::Op::Add ? "+" : "*"},
           {"alpha", f.alpha.to_string()},
           {"beta", f.beta.to_string()},
           {"gamma", f.gamma.to_string()},
           {"n0", opt_size(f.n0)},
           {"delta", f.delta ? json(f.delta->to_string()) : json(nullptr)},
           {"pointwise_failure", opt_size(f.pointwise_failure)},
           {"certified", f.certified()}};
    if (f.regular) {
      json reg{{"status", regular_status(f.regular->status)}};
      if (f.regular->certificate) reg["certificate"] = certificate_json(*f.regular->certificate);
      if (f.regular->disagreement) reg["disagreement"] = *f.regular->disagreement;
      e["regular"] = reg;
    } else {
      e["regular"] = nullptr;
    }
    facts.push_back(std::move(e));
  }
  return json{{"config", config},
              {"cells", cells},
              {"facts", facts},
              {"soundness", {{"checked", r.soundness_checked}, {"failures", r.soundness_failures}}},
              {"coherence_failures", r.coherence_failures},
              {"budget_audit", {{"audited", r.audits}, {"failures", r.audit_failures}}},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

json to_json(const EmbeddingReport& r) {
  json facts = json::array();
  for (const auto& f : r.facts) {
    facts.push_back(json{{"op", f.op == FactCertificate::Op::Add ? "+" : "*"},
                         {"i", f.i},
                         {"j", f.j},
                         {"k", f.k},
                         {"from_row", opt_size(f.from_row)}});
  }
  json order = json::array();
  for (const auto& o : r.order) order.push_back(json{{"i", o.i}, {"j", o.j}, {"from_row", opt_size(o.from_row)}});
  json inj = json::array();
  for (const auto& o : r.injectivity) inj.push_back(json{{"i", o.i}, {"j", o.j}, {"from_row", opt_size(o.from_row)}});
  json standard = json::array();
  for (const auto& s : r.standard) {
    standard.push_back(json{{"i", s.i}, {"value", big_to_json(s.value)}, {"from_row", opt_size(s.from_row)}});
  }
  return json{{"ok", r.ok()},         {"invalid_rows", r.invalid_rows}, {"facts", facts},
              {"order", order},       {"injectivity", inj},             {"standard", standard},
              {"failures", r.failures}};
}

json to_json(const GrowthReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(json{{"i", e.i},
                           {"standard", e.standard},
                           {"value", big_to_json(e.value)},
                           {"from_row", opt_size(e.from_row)}});
  }
  return json{{"bound", big_to_json(r.bound)}, {"ok", r.ok()}, {"entries", entries}, {"failures", r.failures}};
}

json to_json(const EmbedArtifact& a) {
  json elements = json::array();
  for (std::size_t i = 1; i <= a.elements.size(); ++i) {
    elements.push_back(json{{"variable", "x" + std::to_string(i)},
                            {"element", poly_to_json(a.elements.at(i))},
                            {"text", a.elements.at(i).to_string()}});
  }
  json stream = json::array();
  for (const auto& e : a.stream.entries) {
    stream.push_back(json{{"formula", e.equation.text()}, {"origin", origin_name(e.origin)}});
  }
  json rows = json::array();
  for (std::size_t n = 0; n < a.table.rows.size(); ++n) {
    json row = json::array();
    for (const auto& v : a.table.rows[n]) row.push_back(big_to_json(v));
    rows.push_back(json{{"row", n + 1}, {"point", big_to_json(a.table.eval_points[n])}, {"values", row}});
  }
  return json{{"elements", elements},
              {"stream", stream},
              {"table",
               {{"depth", a.table.depth},
                {"width", a.table.width},
                {"schedule", schedule_name(a.table.schedule)},
                {"threshold", big_to_json(a.table.threshold)},
                {"rows", rows}}}};
}

EmbedArtifact embed_artifact_from_json(const json& j) {
  std::vector<PolyElem> elems;
  for (const auto& e : j.at("elements")) elems.push_back(poly_from_json(e.at("element")));
  TrueEquationStream stream;
  for (const auto& e : j.at("stream")) {
    const std::string origin = e.at("origin").get<std::string>();
    StreamEntry entry;
    entry.equation = canonical_form(parse_formula(e.at("formula").get<std::string>()));
    entry.origin = origin == "constant"         ? StreamEntry::Origin::Constant
                   : origin == "addition"       ? StreamEntry::Origin::Addition
                   : origin == "multiplication" ? StreamEntry::Origin::Multiplication
                                                : StreamEntry::Origin::Other;
    stream.entries.push_back(std::move(entry));
  }
  const json& t = j.at("table");
  SolutionTable table;
  table.depth = t.at("depth").get<std::size_t>();
  table.width = t.at("width").get<std::size_t>();
  table.schedule = parse_schedule(t.at("schedule").get<std::string>());
  table.threshold = big_from_json(t.at("threshold"));
  for (const auto& r : t.at("rows")) {
    table.eval_points.push_back(big_from_json(r.at("point")));
    std::vector<BigInt> row;
    for (const auto& v : r.at("values")) row.push_back(big_from_json(v));
    if (row.size() != table.width) throw std::invalid_argument("table row width does not match");
    table.rows.push_back(std::move(row));
  }
  if (table.rows.size() != table.depth) throw std::invalid_argument("table depth does not match its rows");
  return EmbedArtifact{ElementEnumeration(std::move(elems)), std::move(stream), std::move(table)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace redpow
