#pragma once

#include "redpow/bigint.hpp"
#include "redpow/formula.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace redpow {

/// Thrown when an enumeration would examine more candidates than allowed.
/// Never a silent truncation.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  /// Candidate forms = polynomial sides generated plus side pairs examined.
  std::uint64_t max_candidates = 10'000'000;
};

/// Upper estimate of the candidate forms `enumerate_formulas(max_len, free_vars)`
/// examines, computed by counting polynomial forms per length. Saturates at
/// `cutoff` (returns a value > cutoff as soon as that is certain).
long double estimate_candidates(const BigInt& max_len, std::uint32_t free_vars, long double cutoff);

/// All canonical Diophantine formulas of length <= max_len whose free
/// variables lie among x0..x(free_vars-1), sorted by formula order.
/// Generated directly in canonical shape: sides are sums of monomials, and
/// only pairs that are already canonical are kept.
std::vector<EquationForm> enumerate_formulas(std::size_t max_len, std::uint32_t free_vars,
                                             const EnumerationLimits& limits = {});

/// |enumerate_formulas(n, m)|; throws BudgetExceeded.
BigInt count_h(const BigInt& n, std::uint32_t m, const EnumerationLimits& limits = {});

/// All polynomial forms with canonical length <= max_len whose variables are
/// below `num_vars`. Bumps `candidates`; throws once it passes the limit.
std::vector<PolyForm> enumerate_polys(std::size_t max_len, std::uint32_t num_vars, std::uint64_t& candidates,
                                      const EnumerationLimits& limits = {});

}  // namespace redpow
