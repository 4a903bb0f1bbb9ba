#pragma once

#include "redpow/bigint.hpp"
#include "redpow/enumerate.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace redpow {

/// One evaluation of h(length, vars) made while computing g.
struct HCall {
  BigInt length;
  std::uint32_t vars = 0;
  std::optional<BigInt> value;  // empty: enumeration limit exceeded
};

/// g(n, m) from the recurrence g(n,n) = h(n,0),
/// g(n,m-1) = 2 + h(g(n,m), m) * (g(n,m) + 3).
struct FormulaBudget {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  BigInt value;
  /// Set when some h call exceeded the enumeration limit and `value` is the cap.
  bool capped = false;
  std::vector<HCall> h_calls;
  /// g(n, j) for j = n down to m, as far as it was computed exactly.
  std::vector<std::pair<std::uint32_t, BigInt>> chain;
};

class InvalidArguments : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Memoizing h/g evaluator. Exceeding the limit at (L, m) implies exceeding it
/// for every (L', m') >= (L, m), which short-circuits hopeless calls.
class BudgetCalculator {
 public:
  explicit BudgetCalculator(EnumerationLimits limits = {}) : limits_(limits) {}

  /// nullopt when the enumeration limit is exceeded.
  std::optional<BigInt> h(const BigInt& length, std::uint32_t vars);

  /// Throws InvalidArguments if m > n, and BudgetExceeded if the limit is hit
  /// without a cap.
  FormulaBudget g(std::uint32_t n, std::uint32_t m, const std::optional<BigInt>& cap);

 private:
  EnumerationLimits limits_;
  std::map<std::pair<BigInt, std::uint32_t>, BigInt> known_;
  std::vector<std::pair<BigInt, std::uint32_t>> exceeded_;
};

/// Stand-alone wrapper around a fresh BudgetCalculator.
FormulaBudget compute_g(std::uint32_t n, std::uint32_t m, const std::optional<BigInt>& cap,
                        const EnumerationLimits& limits = {});

}  // namespace redpow
