#pragma once

#include "redpow/ordinal.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace redpow {

/// Sorted finite set of ordinals.
using OrdinalSet = std::vector<OrdinalCNF>;

/// How u^α was built.
struct UPlan {
  enum class Case { Zero, Successor, Limit };
  Case kind = Case::Zero;
  /// Successor: u^α_n = {α} for n < threshold, u^β_n ∪ {α} from there on.
  std::optional<std::size_t> threshold;
  /// Limit: δ_i and n_i for every i with n_i within the horizon.
  std::vector<OrdinalCNF> deltas;
  std::vector<std::size_t> starts;
};

class HorizonExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The family u^α_n, materialized for n <= horizon. Conditions of the form
/// "for all n >= t" are decided on [t, horizon] only.
///
/// Successor α = β+1: the threshold is the least t with 2|u^β_n| < n on
/// [t, horizon]. Limit α with fundamental sequence δ_i: n_0 is the least n
/// with δ_0 ∈ u^{δ_1}_n, and n_{i+1} the least n > n_i with
/// δ_{i+1} ∈ u^{δ_{i+2}}_n and n_i·|u^{δ_{i+1}}_{n'}| < n' on [n, horizon].
/// Then u^α_n = u^{δ_i}_n ∪ {α} on [n_i, n_{i+1}) and {α} below n_0.
class UFamily {
 public:
  explicit UFamily(std::size_t horizon = 1024) : horizon_(horizon) {}

  std::size_t horizon() const { return horizon_; }
  /// Throws HorizonExceeded for n > horizon.
  const OrdinalSet& u(const OrdinalCNF& alpha, std::size_t n);
  const UPlan& plan(const OrdinalCNF& alpha);
  /// Least n <= horizon with beta ∈ u^α_n.
  std::optional<std::size_t> entry_point(const OrdinalCNF& alpha, const OrdinalCNF& beta);
  /// Ordinals whose family has been materialized.
  std::vector<OrdinalCNF> materialized() const;

 private:
  struct Entry {
    UPlan plan;
    std::vector<OrdinalSet> sets;  // index n
  };
  const Entry& entry(const OrdinalCNF& alpha);
  Entry build(const OrdinalCNF& alpha);

  std::size_t horizon_;
  std::map<OrdinalCNF, Entry> memo_;
};

bool contains(const OrdinalSet& s, const OrdinalCNF& a);

struct ClauseViolation {
  std::string clause;  // "i", "ii", "iii", "iv", "v"
  std::size_t n = 0;
  std::optional<OrdinalCNF> beta;
  std::string detail;
};

struct EntryThreshold {
  OrdinalCNF beta;
  /// Least n with β ∈ u^α_n, searched up to the horizon.
  std::optional<std::size_t> n;
};

struct RatioThreshold {
  /// ε = 1/denominator.
  std::size_t denominator = 0;
  /// Least t with |u^α_n|/(n+1) < ε for all n in [t, horizon].
  std::optional<std::size_t> from_n;
};

struct LemmaReport {
  OrdinalCNF alpha;
  std::size_t n_max = 0;
  std::size_t horizon = 0;
  std::vector<EntryThreshold> entries;
  std::vector<RatioThreshold> ratios;
  std::vector<ClauseViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Clauses (i), (ii) and (iv) verbatim for n <= n_max. Clause (iii): every
/// β <= α in `betas` enters u^α_n at some n <= horizon. Clause (v): the
/// ratio |u^α_n|/(n+1) falls below 1/2, 1/4 and 1/8 and stays there up to
/// the horizon.
LemmaReport check_lemma_clauses(UFamily& family, const OrdinalCNF& alpha, std::size_t n_max,
                                const std::vector<OrdinalCNF>& betas);

/// 0, 1, 2, 3, ω, ω+1, ω·2, ω², ω²+ω+1.
std::vector<OrdinalCNF> standard_notation_set();

}  // namespace redpow
