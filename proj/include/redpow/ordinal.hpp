#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace redpow {

class NotALimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordinal below ω^ω in Cantor normal form: Σ ω^e·c with strictly
/// decreasing exponents and positive coefficients. Empty means 0.
class OrdinalCNF {
 public:
  struct Term {
    std::uint32_t exponent = 0;
    std::uint64_t coefficient = 1;
    friend bool operator==(const Term&, const Term&) = default;
  };

  OrdinalCNF() = default;
  /// Throws std::invalid_argument if the invariant fails.
  explicit OrdinalCNF(std::vector<Term> terms);

  static OrdinalCNF finite(std::uint64_t n);
  static OrdinalCNF omega_power(std::uint32_t e, std::uint64_t c = 1);
  /// `w^2*3+w*2+5`, `ω`, `0`. Exponents must decrease.
  static OrdinalCNF parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const { return !terms_.empty() && terms_.back().exponent == 0; }
  bool is_limit() const { return !terms_.empty() && terms_.back().exponent > 0; }

  OrdinalCNF successor() const;
  /// Throws std::invalid_argument unless this is a successor.
  OrdinalCNF predecessor() const;

  /// ASCII form accepted by parse().
  std::string to_string() const;
  /// Display form such as `ω^2·3+ω+5`.
  std::string pretty() const;

  friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;
  friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b);

 private:
  std::vector<Term> terms_;
};

/// δ[i]: the last term ω^e·c becomes ω^e·(c-1) + ω^(e-1)·(i+1).
OrdinalCNF fundamental_sequence(const OrdinalCNF& delta, std::uint64_t i);

/// Comma-separated list of ordinals.
std::vector<OrdinalCNF> parse_ordinal_list(std::string_view text);

}  // namespace redpow
