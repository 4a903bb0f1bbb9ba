#pragma once

#include "redpow/bigint.hpp"
#include "redpow/formula.hpp"
#include "redpow/poly_elem.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace redpow {

/// Quantifier-free equation kept together with its uncancelled polynomial
/// sides, so variables that cancel still belong to the system.
struct Equation {
  DioFormula formula;
  PolyForm lhs;
  PolyForm rhs;

  static Equation from_formula(DioFormula f);
  static Equation parse(std::string_view text) { return from_formula(parse_formula(text)); }
  std::string text() const { return serialize(formula); }
};

/// Finite conjunction of quantifier-free equations over x-variables.
struct DioSystem {
  std::vector<Equation> equations;
  /// Sorted x-indices occurring in any equation.
  std::vector<std::uint32_t> var_map;

  /// Throws std::invalid_argument for quantified formulas.
  static DioSystem from_formulas(std::vector<DioFormula> formulas);
  static DioSystem parse(const std::vector<std::string>& texts);
};

/// Finite map from x-index to a natural number.
using Assignment = std::map<std::uint32_t, BigInt>;

struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;
};

class SearchTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::runtime_error {
 public:
  PreconditionViolation(const std::string& what, std::string equation)
      : std::runtime_error(what), equation_(std::move(equation)) {}
  const std::string& equation() const { return equation_; }

 private:
  std::string equation_;
};

/// Lexicographically least solution with every variable in [0, bound],
/// variables ordered by index. nullopt means "none in the box", not
/// unsolvability. Throws SearchTimeout past `limits.max_nodes`.
std::optional<Assignment> solve_brute(const DioSystem& system, std::uint64_t bound, const SearchLimits& limits = {});

/// Evaluates the provenance polynomials at N. Requires every equation to hold
/// identically in Z[X] under the provenance and N >= their nonnegativity
/// threshold; throws PreconditionViolation naming the equation otherwise.
Assignment solve_by_evaluation(const DioSystem& system, const std::map<std::uint32_t, PolyElem>& provenance,
                               const BigInt& point);

/// True iff every equation holds in N under `sigma`. Throws
/// std::invalid_argument if `sigma` misses a variable.
bool verify(const DioSystem& system, const Assignment& sigma);

/// Evaluates a polynomial form over N; `value_of` maps internal indices.
BigInt evaluate_nat(const PolyForm& p, const std::function<const BigInt&(std::uint32_t)>& value_of);

/// Searches for values of the bound variables of `f` making its body true in
/// N, given values of its free variables (indexed by x-index). All but the
/// last bound variable range over [0, box]; the last one is solved exactly
/// through the integer roots of the remaining univariate polynomial. Returns
/// the witnesses (empty vector for quantifier-free truths) or nullopt.
std::optional<std::vector<BigInt>> find_nat_witness(const EquationForm& f, const std::vector<BigInt>& free_values,
                                                    std::uint64_t box);

/// Least nonnegative integer root of the integer polynomial sum c_i y^i
/// (coefficients by degree). The zero polynomial has root 0.
std::optional<BigInt> least_nat_root(const std::vector<BigInt>& coeffs, std::uint64_t scan_fallback);

}  // namespace redpow
