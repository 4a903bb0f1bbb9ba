#pragma once

#include "redpow/formula.hpp"
#include "redpow/poly_elem.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace redpow {

/// Truth of formulas in the polynomial model Z[X]+ under an assignment of
/// its free variables (`free_values[j]` interprets xj).
///
/// Quantifier-free formulas are decided exactly. Existential ones are
/// semi-decided: a witness is searched among the elements of degree
/// <= max_degree with coefficients in [-max_coeff, max_coeff].
struct PolyWitnessSpace {
  int max_degree = 2;
  std::int64_t max_coeff = 3;
  /// Upper limit on witness tuples tried per formula.
  std::uint64_t max_tuples = 2'000'000;
};

/// All elements of Z[X]+ inside the witness space, in PolyElem order.
std::vector<PolyElem> witness_candidates(const PolyWitnessSpace& space);

/// Exact substitution; the formula's bound variables take `bound_values`.
bool holds_in_poly_exact(const EquationForm& f, const std::vector<PolyElem>& free_values,
                         const std::vector<PolyElem>& bound_values = {});

/// Decides quantifier-free formulas; for quantified ones returns the first
/// witness tuple found (lexicographic over the candidate order) or nullopt.
class PolyModelEvaluator {
 public:
  explicit PolyModelEvaluator(PolyWitnessSpace space = {});

  /// Quantifier-free formulas only.
  bool holds(const EquationForm& f, const std::vector<PolyElem>& free_values) const;
  std::optional<std::vector<PolyElem>> witness(const EquationForm& f, const std::vector<PolyElem>& free_values) const;
  /// holds() for quantifier-free formulas, witness().has_value() otherwise.
  bool certified_true(const EquationForm& f, const std::vector<PolyElem>& free_values) const;

  const PolyWitnessSpace& space() const { return space_; }

 private:
  PolyWitnessSpace space_;
  std::vector<PolyElem> candidates_;
  std::vector<std::vector<std::uint64_t>> candidate_residues_;
};

}  // namespace redpow
