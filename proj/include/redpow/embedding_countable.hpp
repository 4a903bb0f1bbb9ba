#pragma once

#include "redpow/bigint.hpp"
#include "redpow/dio_solver.hpp"
#include "redpow/enumerate.hpp"
#include "redpow/formula.hpp"
#include "redpow/poly_elem.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace redpow {

/// Finite prefix m1, m2, ... of an enumeration of the model. Element m_i is
/// named by the variable x_i (indices start at 1; x0 is unused).
struct ElementEnumeration {
  std::vector<PolyElem> elems;

  /// Throws std::invalid_argument on repeated elements.
  explicit ElementEnumeration(std::vector<PolyElem> e);
  /// Sorted by degree, then coefficient list.
  static ElementEnumeration default_order(std::vector<PolyElem> e);

  std::size_t size() const { return elems.size(); }
  const PolyElem& at(std::size_t i) const { return elems.at(i - 1); }  // 1-based
  /// x-index -> element, x0 excluded.
  std::vector<PolyElem> as_free_values() const;
};

struct StreamEntry {
  enum class Origin { Constant, Addition, Multiplication, Other };
  EquationForm equation;
  Origin origin = Origin::Other;
};

std::string origin_name(StreamEntry::Origin o);

/// P1, P2, ... : quantifier-free equations over x1..xK true of (m1..mK).
struct TrueEquationStream {
  std::vector<StreamEntry> entries;

  /// P1 ∧ ... ∧ Pn as a system.
  DioSystem prefix_system(std::size_t n) const;
};

/// The standard elements' value equations and every atomic addition and
/// multiplication fact among the elements, together in formula order, then
/// further true equations in formula order until `budget` entries. Fillers
/// are no longer than `max_filler_length`, so the stream can come out short
/// (a lone nonstandard element satisfies no nontrivial equation).
/// BudgetExceeded if the guaranteed facts alone exceed `budget`.
TrueEquationStream generate_true_equations(const ElementEnumeration& elems, std::size_t budget,
                                           std::size_t max_filler_length = 15, const EnumerationLimits& limits = {});

/// How the evaluation point grows with the row index.
enum class Schedule { Linear, Quadratic };
std::string schedule_name(Schedule s);
Schedule parse_schedule(const std::string& s);

/// Row n (1..depth) solves P1 ∧ ... ∧ Pn in N; column i is the image of m_i.
struct SolutionTable {
  std::size_t depth = 0;
  std::size_t width = 0;
  Schedule schedule = Schedule::Quadratic;
  BigInt threshold;
  /// N_n for each row.
  std::vector<BigInt> eval_points;
  /// rows[n-1][i-1] = v_i(n).
  std::vector<std::vector<BigInt>> rows;

  const BigInt& value(std::size_t row, std::size_t column) const { return rows.at(row - 1).at(column - 1); }
  /// Column i as a sequence over rows 1..depth (prefix index = row - 1).
  std::vector<BigInt> column(std::size_t i) const;
};

/// Row n evaluates every element at N_n = max(threshold, n) (Linear) or
/// max(threshold, n^2) (Quadratic), via solve_by_evaluation on P1..Pn.
SolutionTable build_table(const ElementEnumeration& elems, const TrueEquationStream& stream, std::size_t depth,
                          Schedule schedule = Schedule::Quadratic);

struct FactCertificate {
  enum class Op { Add, Mul };
  Op op = Op::Add;
  std::size_t i = 0, j = 0, k = 0;  // m_i op m_j = m_k
  std::optional<std::size_t> from_row;
};

struct OrderCertificate {
  std::size_t i = 0, j = 0;  // m_i <= m_j
  std::optional<std::size_t> from_row;
};

struct InjectivityCertificate {
  std::size_t i = 0, j = 0;
  /// Columns differ at every row >= this one.
  std::optional<std::size_t> from_row;
};

struct StandardCertificate {
  std::size_t i = 0;
  BigInt value;
  std::optional<std::size_t> from_row;
};

struct EmbeddingReport {
  std::vector<std::size_t> invalid_rows;
  std::vector<FactCertificate> facts;
  std::vector<OrderCertificate> order;
  std::vector<InjectivityCertificate> injectivity;
  std::vector<StandardCertificate> standard;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks row validity, homomorphism and order facts modulo the cofinite
/// filter, injectivity and standardness, all relative to the table prefix.
EmbeddingReport verify_embedding(const SolutionTable& table, const ElementEnumeration& elems,
                                 const TrueEquationStream& stream);

struct GrowthEntry {
  std::size_t i = 0;
  bool standard = false;
  /// Nonstandard: first row from which the column stays above the bound.
  /// Standard: first row from which the column equals `value`.
  std::optional<std::size_t> from_row;
  BigInt value;
};

struct GrowthReport {
  BigInt bound;
  std::vector<GrowthEntry> entries;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Nonstandard columns must tend to infinity; standard ones stabilize.
GrowthReport check_growth(const SolutionTable& table, const ElementEnumeration& elems, const BigInt& bound);

}  // namespace redpow
