#pragma once

#include "redpow/bigint.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redpow {

/// Element of the nonnegative part of Z[X] under the leading-coefficient
/// order: the zero polynomial or one with positive leading coefficient.
/// Coefficients are indexed by degree with no trailing zeros.
class PolyElem {
 public:
  PolyElem() = default;  // 0

  /// Throws std::invalid_argument if the leading coefficient is negative.
  static PolyElem from_coeffs(std::vector<BigInt> coeffs);
  static PolyElem constant(const BigInt& c) { return from_coeffs({c}); }
  static PolyElem x() { return from_coeffs({0, 1}); }

  /// Accepts `3*X^2+X+1`, `X^2-X`, `2X+1`, `7`.
  static PolyElem parse(std::string_view text);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Degree 0 (or zero): the element is a standard natural number.
  bool is_standard() const { return coeffs_.size() <= 1; }
  BigInt constant_value() const { return coeffs_.empty() ? BigInt(0) : coeffs_[0]; }

  std::string to_string() const;

  friend bool operator==(const PolyElem&, const PolyElem&) = default;
  friend std::strong_ordering operator<=>(const PolyElem& a, const PolyElem& b);

 private:
  std::vector<BigInt> coeffs_;
};

PolyElem poly_add(const PolyElem& a, const PolyElem& b);
PolyElem poly_mul(const PolyElem& a, const PolyElem& b);
bool poly_le(const PolyElem& a, const PolyElem& b);
/// The z with a + z = b, present iff a <= b.
std::optional<PolyElem> poly_minus(const PolyElem& a, const PolyElem& b);

inline PolyElem operator+(const PolyElem& a, const PolyElem& b) { return poly_add(a, b); }
inline PolyElem operator*(const PolyElem& a, const PolyElem& b) { return poly_mul(a, b); }

BigInt eval_at(const PolyElem& p, const BigInt& point);

/// N0 such that every p in `elems` evaluates to a nonnegative integer at all
/// N >= N0 (Cauchy root bound; 0 when all coefficients are nonnegative).
BigInt nonneg_threshold(std::span<const PolyElem> elems);

/// Signed coefficient-list difference b - a, trailing zeros removed.
std::vector<BigInt> coeff_difference(const PolyElem& b, const PolyElem& a);

}  // namespace redpow
