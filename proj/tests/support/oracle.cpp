#include "oracle.hpp"

namespace redpow::oracle {

namespace {

// True when toks[from, to) has an '=' outside every parenthesis and never
// closes more than it opens.
bool has_top_level_eq(const std::vector<std::string>& toks, std::size_t from, std::size_t to) {
  int depth = 0;
  bool eq = false;
  for (std::size_t i = from; i < to; ++i) {
    if (toks[i] == "(") ++depth;
    if (toks[i] == ")" && --depth < 0) return false;
    if (toks[i] == "=" && depth == 0) eq = true;
  }
  return eq;
}

// The official syntax: a quantified body is wrapped in one parenthesis pair,
// a quantifier-free one is not. The parser is lenient about both.
bool official_shape(const std::vector<std::string>& toks) {
  std::size_t q = 0;
  while (q + 1 < toks.size() && toks[q] == "E") q += 2;
  if (q == 0) return has_top_level_eq(toks, 0, toks.size());
  return toks.size() >= q + 2 && toks[q] == "(" && toks.back() == ")" && has_top_level_eq(toks, q + 1, toks.size() - 1);
}

}  // namespace

std::set<EquationForm> all_strings_canonical(std::size_t max_len, std::uint32_t m) {
  std::vector<std::string> alphabet{"0", "1", "+", "*", "=", "(", ")", "E", "y0"};
  for (std::uint32_t j = 0; j < m; ++j) alphabet.push_back("x" + std::to_string(j));
  std::set<EquationForm> out;
  std::vector<std::size_t> pick;
  for (std::size_t len = 1; len <= max_len; ++len) {
    pick.assign(len, 0);
    for (;;) {
      std::string text;
      std::vector<std::string> toks;
      for (auto i : pick) {
        text += alphabet[i];
        text += ' ';
        toks.push_back(alphabet[i]);
      }
      try {
        if (official_shape(toks)) out.insert(canonical_form(parse_formula(text)));
      } catch (const SyntaxError&) {
      }
      std::size_t i = len;
      while (i > 0 && ++pick[i - 1] == alphabet.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

Term random_term(std::mt19937_64& rng, std::uint32_t vars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 2);
  switch (pick(rng)) {
    case 0: return Term::zero();
    case 1: return Term::one();
    case 2: {
      if (vars == 0) return Term::one();
      std::uniform_int_distribution<std::uint32_t> v(0, vars - 1);
      return Term::var(v(rng));
    }
    case 3: return Term::plus(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
    default: return Term::times(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
  }
}

PolyElem random_poly(std::mt19937_64& rng, int max_degree, std::int64_t max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(-max_coeff, max_coeff);
  for (;;) {
    const int d = deg(rng);
    std::vector<BigInt> c;
    for (int i = 0; i <= d; ++i) c.push_back(coeff(rng));
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty() || c.back() > 0) return PolyElem::from_coeffs(std::move(c));
  }
}

namespace {

BigInt eval_term(const Term& t, std::uint32_t offset, const std::vector<std::uint64_t>& x) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Var: return BigInt(x.at(t.var_index() - offset));
    case Term::Kind::Plus: return eval_term(t.lhs(), offset, x) + eval_term(t.rhs(), offset, x);
    case Term::Kind::Times: return eval_term(t.lhs(), offset, x) * eval_term(t.rhs(), offset, x);
  }
  return 0;
}

}  // namespace

bool eval_qf(const DioFormula& f, const std::vector<std::uint64_t>& x) {
  return eval_term(f.lhs, f.bound_count, x) == eval_term(f.rhs, f.bound_count, x);
}

}  // namespace redpow::oracle
