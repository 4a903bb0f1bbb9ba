#pragma once

#include "redpow/bigint.hpp"
#include "redpow/term.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace redpow {

/// Multiset of variable indices, kept sorted. Empty = the constant monomial 1.
using Monomial = std::vector<std::uint32_t>;

/// Degree first, then lexicographic on the sorted index list.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) < 0; }
};

/// Token count of a monomial written as `v*v*...` (or `1`).
inline std::size_t monomial_length(const Monomial& m) { return m.empty() ? 1 : 2 * m.size() - 1; }

/// Polynomial with positive integer coefficients over variable indices: the
/// canonical form of an LA term. Terms are sorted ascending by monomial order;
/// the empty form is 0.
class PolyForm {
 public:
  using Entry = std::pair<Monomial, BigInt>;

  PolyForm() = default;
  static PolyForm constant(const BigInt& c);
  static PolyForm variable(std::uint32_t index);
  static PolyForm from_term(const Term& t);
  /// Entries need not be sorted or merged; non-positive coefficients are rejected.
  static PolyForm from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator*(const PolyForm& o) const;

  /// Coefficient of `m`, 0 if absent.
  BigInt coefficient(const Monomial& m) const;
  bool mentions(std::uint32_t var) const;
  std::uint32_t max_var_plus_one() const;

  /// Token count of the canonical rendering: each monomial repeated by its
  /// coefficient and joined with `+`; `0` for the empty form.
  std::size_t length() const;

  /// Left-associated sum of left-associated products, highest monomial first.
  Term to_term() const;

  /// Applies `rename` to every variable index.
  PolyForm renamed(const std::function<std::uint32_t(std::uint32_t)>& rename) const;

  /// Evaluates with values supplied per variable index.
  template <typename Value, typename Lookup>
  Value evaluate(Lookup&& value_of) const {
    Value acc(0);
    for (const auto& [mono, coeff] : entries_) {
      Value prod(coeff);
      for (auto v : mono) prod = prod * value_of(v);
      acc = acc + prod;
    }
    return acc;
  }

  friend bool operator==(const PolyForm&, const PolyForm&) = default;
  friend std::strong_ordering operator<=>(const PolyForm& a, const PolyForm& b);

 private:
  void normalize();
  std::vector<Entry> entries_;
};

/// Removes from both sides the part they share: for each common monomial the
/// smaller coefficient is subtracted from both.
void cancel_common(PolyForm& lhs, PolyForm& rhs);

}  // namespace redpow
