#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace redpow {

/// Raised by the term and formula parsers. `offset` is the byte offset of the
/// offending token in the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Immutable LA term: leaves 0, 1 and variables, binary + and *.
/// Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Zero, One, Var, Plus, Times };

  /// The constant 0.
  Term();

  static Term zero();
  static Term one();
  static Term var(std::uint32_t index);
  static Term plus(Term lhs, Term rhs);
  static Term times(Term lhs, Term rhs);

  Kind kind() const;
  std::uint32_t var_index() const;
  const Term& lhs() const;
  const Term& rhs() const;
  bool is_leaf() const { return kind() == Kind::Zero || kind() == Kind::One || kind() == Kind::Var; }

  /// Number of leaf and operator nodes.
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::vector<Term> children;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline std::uint32_t Term::var_index() const { return node_->index; }
inline const Term& Term::lhs() const { return node_->children[0]; }
inline const Term& Term::rhs() const { return node_->children[1]; }

/// How variables are spelled when printing; the formula layer maps bound
/// indices to `y<i>` and free ones to `x<j>`.
struct VarNaming {
  std::uint32_t bound_count = 0;

  std::string name(std::uint32_t index) const {
    return index < bound_count ? "y" + std::to_string(index)
                               : "x" + std::to_string(index - bound_count);
  }
};

/// Minimal-parenthesis rendering; `parse_term(serialize(t)) == t`.
std::string serialize(const Term& t, const VarNaming& naming = {});

/// Grammar: sum := prod ('+' prod)*, prod := atom ('*' atom)*,
/// atom := '0' | '1' | 'x' digits | '(' sum ')'. Whitespace is ignored.
Term parse_term(std::string_view text);

}  // namespace redpow
