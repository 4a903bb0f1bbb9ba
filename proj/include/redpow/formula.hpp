#pragma once

#include "redpow/poly_form.hpp"
#include "redpow/term.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace redpow {

/// Diophantine formula `∃y0…∃y(k-1) (lhs = rhs)`. Inside the terms, indices
/// below `bound_count` are the bound variables y0.., and index
/// `bound_count + j` is the free variable xj.
struct DioFormula {
  std::uint32_t bound_count = 0;
  Term lhs;
  Term rhs;
  /// Sorted x-indices of the free variables that occur.
  std::vector<std::uint32_t> free_vars;

  friend bool operator==(const DioFormula&, const DioFormula&) = default;
};

/// Canonical polynomial-equation form of a Diophantine formula. Instances
/// produced by `canonical_form` or the enumerator satisfy: sides share no
/// monomial, lhs < rhs (or both zero), every bound variable occurs, and the
/// bound variables are numbered so that the form is least among all
/// renumberings.
struct EquationForm {
  std::uint32_t bound_count = 0;
  PolyForm lhs;
  PolyForm rhs;

  /// Token count of `text()`.
  std::size_t length() const;
  std::vector<std::uint32_t> free_vars() const;
  bool mentions_free(std::uint32_t x_index) const;
  bool is_quantifier_free() const { return bound_count == 0; }

  DioFormula to_formula() const;
  std::string text() const;

  friend bool operator==(const EquationForm&, const EquationForm&) = default;
};

/// Enumeration order: length, then quantifier count, then the sides.
std::strong_ordering operator<=>(const EquationForm& a, const EquationForm& b);

/// Normalizes raw polynomial sides (indices below `bound_count` are bound).
EquationForm canonical_form(std::uint32_t bound_count, PolyForm lhs, PolyForm rhs);
EquationForm canonical_form(const DioFormula& f);

/// Idempotent; cancels shared monomials, drops unused quantifiers,
/// renumbers bound variables and orders the sides.
DioFormula canonicalize(const DioFormula& f);

/// `∃y0 ∃y1 (lhs=rhs)` or `lhs=rhs` without quantifiers.
std::string serialize(const DioFormula& f);

/// Token count of `serialize(f)`. Tokens: ∃, each variable occurrence, 0, 1,
/// +, *, =, ( and ).
std::size_t length(const DioFormula& f);

/// Accepts `∃`, `E` or `exists` as the quantifier; quantified names must be
/// `y<i>`, free names `x<j>`.
DioFormula parse_formula(std::string_view text);

/// Token count of an arbitrary serialized formula or term.
std::size_t token_count(std::string_view text);

}  // namespace redpow
