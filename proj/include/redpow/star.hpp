#pragma once

#include "redpow/bigint.hpp"
#include "redpow/budget.hpp"
#include "redpow/enumerate.hpp"
#include "redpow/model_eval.hpp"
#include "redpow/ordinal.hpp"
#include "redpow/poly_elem.hpp"
#include "redpow/reduced_power.hpp"
#include "redpow/ufamily.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace redpow {

struct StarConfig {
  /// Sorted on construction of the run; must be closed under u^α_n for n <= n_max.
  std::vector<OrdinalCNF> index;
  std::map<OrdinalCNF, PolyElem> assignment;
  std::size_t n_max = 20;
  /// Budget actually used is min(g(n,m), cap); no cap means exact g.
  std::optional<BigInt> cap;
  RegularFamily family = RegularFamily::tails();
  /// Search box in N for f_α(n) and for existential witnesses.
  std::uint64_t box = 64;
  std::size_t horizon = 1024;
  PolyWitnessSpace witness_space{};
  EnumerationLimits limits{};
};

/// Budget of a cell: min(g(n,m), cap), or 0 when m > n (g is undefined).
struct CellBudget {
  BigInt used;
  bool capped = false;
  /// g(n,m) when it was computed exactly.
  std::optional<BigInt> exact;
};

/// One (α, n) cell of the construction.
struct StarCell {
  OrdinalCNF alpha;
  std::size_t n = 0;
  /// u^α_n; free variable x_j is the j-th element.
  std::vector<OrdinalCNF> u;
  CellBudget budget;
  /// |Φ|, and how many of those mention x_α.
  std::size_t phi_size = 0;
  std::size_t phi_alpha_size = 0;
  /// Existential formulas with no witness in the M search space (left out of Φ).
  std::size_t uncertified = 0;
  /// |φ′| = 2 + Σ(|φ| + 3), and g(n, m-1) when exact.
  BigInt phi_prime_length;
  std::optional<BigInt> g_next;
  std::optional<BigInt> value;  // f_α(n)
  std::string error;
};

struct StarFact {
  enum class Op { Add, Mul };
  Op op = Op::Add;
  OrdinalCNF alpha, beta, gamma;  // a_α op a_β = a_γ
  /// Least n0 from which some δ has {α,β,γ} ⊆ u^δ_n with the fact inside the budget.
  std::optional<std::size_t> n0;
  std::optional<OrdinalCNF> delta;
  /// First n >= n0 where the fact fails pointwise, if any.
  std::optional<std::size_t> pointwise_failure;
  std::optional<RegularCheck> regular;

  bool certified() const {
    return n0 && !pointwise_failure && regular && regular->status == RegularCheck::Status::Certified;
  }
};

struct StarRun {
  StarConfig config;
  std::vector<StarCell> cells;
  std::vector<StarFact> facts;
  /// "alpha n: detail" for each cell failing the re-check.
  std::vector<std::string> soundness_failures;
  std::size_t soundness_checked = 0;
  std::vector<std::string> coherence_failures;
  std::vector<std::string> audit_failures;
  std::size_t audits = 0;
  std::vector<std::string> failures;

  /// f_α(n) if chosen.
  std::optional<BigInt> value(const OrdinalCNF& alpha, std::size_t n) const;
  const StarCell* cell(const OrdinalCNF& alpha, std::size_t n) const;
  bool ok() const { return failures.empty(); }
};

/// Runs the construction over every cell, then the preservation
/// certificates, the (*) re-check, max-γ coherence and the budget audit.
/// Throws std::invalid_argument for an incomplete assignment or an index set
/// not closed under the u-family.
StarRun run_star_construction(const StarConfig& config);

/// The canonical formula `x_i op x_j = x_k` over positions.
EquationForm fact_formula(StarFact::Op op, std::uint32_t i, std::uint32_t j, std::uint32_t k);

}  // namespace redpow
