#include "redpow/dio_solver.hpp"

#include <algorithm>
#include <set>

namespace redpow {

Equation Equation::from_formula(DioFormula f) {
  if (f.bound_count != 0) {
    throw std::invalid_argument("system equations must be quantifier-free: " + serialize(f));
  }
  PolyForm l = PolyForm::from_term(f.lhs);
  PolyForm r = PolyForm::from_term(f.rhs);
  return Equation{std::move(f), std::move(l), std::move(r)};
}

DioSystem DioSystem::from_formulas(std::vector<DioFormula> formulas) {
  DioSystem s;
  std::set<std::uint32_t> vars;
  for (auto& f : formulas) {
    vars.insert(f.free_vars.begin(), f.free_vars.end());
    s.equations.push_back(Equation::from_formula(std::move(f)));
  }
  s.var_map.assign(vars.begin(), vars.end());
  return s;
}

DioSystem DioSystem::parse(const std::vector<std::string>& texts) {
  std::vector<DioFormula> fs;
  fs.reserve(texts.size());
  for (const auto& t : texts) fs.push_back(parse_formula(t));
  return from_formulas(std::move(fs));
}

BigInt evaluate_nat(const PolyForm& p, const std::function<const BigInt&(std::uint32_t)>& value_of) {
  BigInt acc = 0;
  for (const auto& [mono, coeff] : p.entries()) {
    BigInt prod = coeff;
    for (auto v : mono) prod *= value_of(v);
    acc += prod;
  }
  return acc;
}

namespace {

bool holds(const Equation& e, const std::function<const BigInt&(std::uint32_t)>& value_of) {
  return evaluate_nat(e.lhs, value_of) == evaluate_nat(e.rhs, value_of);
}

}  // namespace

bool verify(const DioSystem& system, const Assignment& sigma) {
  auto value_of = [&](std::uint32_t v) -> const BigInt& {
    auto it = sigma.find(v);
    if (it == sigma.end()) throw std::invalid_argument("assignment misses x" + std::to_string(v));
    return it->second;
  };
  return std::all_of(system.equations.begin(), system.equations.end(),
                     [&](const Equation& e) { return holds(e, value_of); });
}

std::optional<Assignment> solve_brute(const DioSystem& system, std::uint64_t bound, const SearchLimits& limits) {
  const auto& vars = system.var_map;
  const std::size_t n = vars.size();
  // Check each equation as soon as its last variable (in search order) is set.
  std::vector<std::vector<const Equation*>> ready(n + 1);
  for (const auto& e : system.equations) {
    std::size_t last = 0;
    for (auto v : e.formula.free_vars) {
      last = std::max(last, static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()) + 1);
    }
    ready[last].push_back(&e);
  }
  std::uint32_t max_var = vars.empty() ? 0 : vars.back() + 1;
  std::vector<BigInt> values(max_var, 0);
  auto value_of = [&](std::uint32_t v) -> const BigInt& { return values[v]; };

  for (const Equation* e : ready[0]) {
    if (!holds(*e, value_of)) return std::nullopt;
  }
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    for (std::uint64_t v = 0; v <= bound; ++v) {
      if (++nodes > limits.max_nodes) {
        throw SearchTimeout("box search exceeded " + std::to_string(limits.max_nodes) + " nodes");
      }
      values[vars[depth]] = v;
      bool ok = true;
      for (const Equation* e : ready[depth + 1]) {
        if (!holds(*e, value_of)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  Assignment out;
  for (auto v : vars) out.emplace(v, values[v]);
  return out;
}

Assignment solve_by_evaluation(const DioSystem& system, const std::map<std::uint32_t, PolyElem>& provenance,
                               const BigInt& point) {
  for (auto v : system.var_map) {
    if (!provenance.count(v)) {
      throw PreconditionViolation("no provenance for x" + std::to_string(v), "");
    }
  }
  std::vector<PolyElem> range;
  for (const auto& [v, p] : provenance) range.push_back(p);
  const BigInt threshold = nonneg_threshold(range);
  if (point < threshold) {
    throw PreconditionViolation("evaluation point " + point.str() + " is below the nonnegativity threshold " +
                                    threshold.str(),
                                "");
  }
  for (const auto& e : system.equations) {
    auto eval_side = [&](const PolyForm& side) {
      PolyElem acc;
      for (const auto& [mono, coeff] : side.entries()) {
        PolyElem prod = PolyElem::constant(coeff);
        for (auto v : mono) prod = poly_mul(prod, provenance.at(v));
        acc = poly_add(acc, prod);
      }
      return acc;
    };
    if (eval_side(e.lhs) != eval_side(e.rhs)) {
      throw PreconditionViolation("equation does not hold identically under the provenance: " + e.text(), e.text());
    }
  }
  Assignment out;
  for (const auto& [v, p] : provenance) out.emplace(v, eval_at(p, point));
  return out;
}

std::optional<BigInt> least_nat_root(const std::vector<BigInt>& coeffs, std::uint64_t scan_fallback) {
  auto horner = [&](const BigInt& y) {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
    return acc;
  };
  if (coeffs.empty() || coeffs[0] == 0) return BigInt(0);
  // A positive integer root divides the constant term.
  const BigInt c0 = abs(coeffs[0]);
  if (c0 > BigInt(1'000'000'000'000LL)) {
    for (std::uint64_t y = 1; y <= scan_fallback; ++y) {
      if (horner(y) == 0) return BigInt(y);
    }
    return std::nullopt;
  }
  const auto c = static_cast<std::uint64_t>(c0);
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= c; ++d) {
    if (c % d == 0) {
      small.push_back(d);
      if (d != c / d) large.push_back(c / d);
    }
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  for (auto d : small) {
    if (horner(d) == 0) return BigInt(d);
  }
  return std::nullopt;
}

std::optional<std::vector<BigInt>> find_nat_witness(const EquationForm& f, const std::vector<BigInt>& free_values,
                                                    std::uint64_t box) {
  const std::uint32_t k = f.bound_count;
  std::vector<BigInt> bound_vals(k, 0);
  auto value_of = [&](std::uint32_t v) -> const BigInt& {
    if (v < k) return bound_vals[v];
    const std::uint32_t x = v - k;
    if (x >= free_values.size()) throw std::invalid_argument("no value for free variable x" + std::to_string(x));
    return free_values[x];
  };
  if (k == 0) {
    if (evaluate_nat(f.lhs, value_of) == evaluate_nat(f.rhs, value_of)) return std::vector<BigInt>{};
    return std::nullopt;
  }
  const std::uint32_t last = k - 1;
  // Coefficients of lhs - rhs as a polynomial in the last bound variable.
  auto univariate = [&]() {
    std::vector<BigInt> c;
    auto add = [&](const PolyForm& p, int sign) {
      for (const auto& [mono, coeff] : p.entries()) {
        BigInt prod = coeff;
        std::size_t deg = 0;
        for (auto v : mono) {
          if (v == last) {
            ++deg;
          } else {
            prod *= value_of(v);
          }
        }
        if (c.size() <= deg) c.resize(deg + 1, 0);
        c[deg] += sign * prod;
      }
    };
    add(f.lhs, 1);
    add(f.rhs, -1);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
  };
  auto rec = [&](auto&& self, std::uint32_t idx) -> bool {
    if (idx == last) {
      auto root = least_nat_root(univariate(), box);
      if (!root) return false;
      bound_vals[last] = *root;
      return true;
    }
    for (std::uint64_t v = 0; v <= box; ++v) {
      bound_vals[idx] = v;
      if (self(self, idx + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return bound_vals;
}

}  // namespace redpow
