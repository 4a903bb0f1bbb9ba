#pragma once

#include "redpow/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace redpow {

/// Values f(0..L-1) of a sequence of naturals. Every judgment made on a
/// prefix is relative to that prefix, never a claim about the full sequence.
struct SeqPrefix {
  std::vector<BigInt> values;

  std::size_t length() const { return values.size(); }
  const BigInt& operator[](std::size_t i) const { return values[i]; }
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EqCertificate {
  enum class Kind { CofiniteTail, RegularFamily };
  Kind kind = Kind::CofiniteTail;
  /// Agreement holds at every index >= n0 of the prefix.
  std::size_t n0 = 0;
  /// Family member with A_{n1} ∩ {0..n0} = ∅ (regular-family certificates).
  std::optional<std::size_t> n1;
  std::size_t prefix_length = 0;
};

/// Least n0 such that f and g agree on [n0, L); nullopt if they differ at L-1.
std::optional<EqCertificate> eq_mod_cofinite(const SeqPrefix& f, const SeqPrefix& g);

/// Least n0 with f <= g pointwise on [n0, L); nullopt if f > g at L-1.
std::optional<std::size_t> le_mod_cofinite(const SeqPrefix& f, const SeqPrefix& g);

/// A family {A_n} witnessing regularity of a filter on ω, given by a
/// membership predicate from a fixed catalog.
class RegularFamily {
 public:
  enum class Kind { Tails, Diagonal, Arithmetic, Constant, Custom };

  /// A_n = elements ∪ [from, ∞), or just `elements` when `from` is empty.
  struct ExplicitSet {
    std::vector<std::uint64_t> elements;
    std::optional<std::uint64_t> from;
  };

  /// A_n = [n, ∞)
  static RegularFamily tails();
  /// A_n = {n} ∪ [2n, ∞)
  static RegularFamily diagonal();
  /// A_n = {m > 0 : p_{n+offset} | m}, p_0 = 2.
  static RegularFamily arithmetic(std::uint32_t offset);
  /// A_n = ω for every n. Not point-finite; kept as a negative example.
  static RegularFamily constant();
  /// Explicit members for n < sets.size(); `tail` (Tails, Diagonal or
  /// Constant, or nullopt for empty sets) beyond.
  static RegularFamily custom(std::vector<ExplicitSet> sets, std::optional<Kind> tail);

  /// Catalog ids: `tails`, `diagonal`, `arithmetic:k`, `constant`.
  /// `custom` families come from JSON (see json_io).
  static RegularFamily from_id(const std::string& id);

  bool contains(std::size_t n, std::uint64_t k) const;
  /// Bitmap of A_n on [0, L).
  std::vector<bool> materialize(std::size_t n, std::size_t length) const;
  Kind kind() const { return kind_; }
  std::string id() const;
  /// Custom families only.
  const std::vector<ExplicitSet>& sets() const { return sets_; }
  std::optional<Kind> tail() const { return tail_; }

 private:
  Kind kind_ = Kind::Tails;
  std::uint32_t offset_ = 0;
  std::vector<ExplicitSet> sets_;
  std::optional<Kind> tail_;
};

struct RegularCheck {
  enum class Status {
    Certified,
    /// No n1 <= limit with A_{n1} ∩ {0..n0} = ∅; not a refutation.
    NoMemberWithinLimit,
    /// f and g disagree somewhere the certificate needs them to agree.
    Refuted,
  };
  Status status = Status::Refuted;
  std::optional<EqCertificate> certificate;
  std::optional<std::size_t> disagreement;
};

/// Looks for the least n1 <= n1_limit with A_{n1} ∩ {0..n0} = ∅ and checks
/// that f and g agree on A_{n1} ∩ [0, L).
RegularCheck eq_mod_regular(const SeqPrefix& f, const SeqPrefix& g, const RegularFamily& family, std::size_t n0,
                            std::size_t n1_limit = 10'000);

struct PointMembership {
  std::uint64_t point = 0;
  std::vector<std::size_t> members;  // n <= n_max with point ∈ A_n
  /// point ∈ A_{n_max}: membership may continue beyond the inspected range.
  bool still_growing = false;
};

struct PointFinitenessReport {
  std::size_t length = 0;
  std::size_t n_max = 0;
  std::vector<PointMembership> points;
  /// n <= n_max whose A_n has no element below `length`.
  std::vector<std::size_t> empty_on_prefix;

  bool point_finite() const {
    for (const auto& p : points) {
      if (p.still_growing) return false;
    }
    return true;
  }
};

PointFinitenessReport check_point_finiteness(const RegularFamily& family, std::size_t length, std::size_t n_max);

}  // namespace redpow
