#include "redpow/budget.hpp"

#include <string>

namespace redpow {

std::optional<BigInt> BudgetCalculator::h(const BigInt& length, std::uint32_t vars) {
  const auto key = std::make_pair(length, vars);
  if (auto it = known_.find(key); it != known_.end()) return it->second;
  for (const auto& [l, v] : exceeded_) {
    if (length >= l && vars >= v) return std::nullopt;
  }
  try {
    BigInt value = count_h(length, vars, limits_);
    known_.emplace(key, value);
    return value;
  } catch (const BudgetExceeded&) {
    exceeded_.push_back(key);
    return std::nullopt;
  }
}

FormulaBudget BudgetCalculator::g(std::uint32_t n, std::uint32_t m, const std::optional<BigInt>& cap) {
  if (m > n) {
    throw InvalidArguments("g(n, m) needs m <= n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  FormulaBudget out{n, m, 0, false, {}, {}};
  auto fail = [&]() -> FormulaBudget& {
    if (!cap) throw BudgetExceeded("g(" + std::to_string(n) + "," + std::to_string(m) + ") needs an h value beyond the enumeration limit");
    out.value = *cap;
    out.capped = true;
    return out;
  };

  auto base = h(n, 0);
  out.h_calls.push_back({BigInt(n), 0, base});
  if (!base) return fail();
  BigInt value = *base;
  out.chain.emplace_back(n, value);
  for (std::uint32_t j = n; j > m; --j) {
    auto hv = h(value, j);
    out.h_calls.push_back({value, j, hv});
    if (!hv) return fail();
    value = 2 + *hv * (value + 3);
    out.chain.emplace_back(j - 1, value);
  }
  out.value = value;
  return out;
}

FormulaBudget compute_g(std::uint32_t n, std::uint32_t m, const std::optional<BigInt>& cap,
                        const EnumerationLimits& limits) {
  BudgetCalculator calc(limits);
  return calc.g(n, m, cap);
}

}  // namespace redpow
