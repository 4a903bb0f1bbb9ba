#pragma once

#include "redpow/term.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace redpow::detail {

enum class Tok : std::uint8_t { Zero, One, XVar, YVar, Plus, Times, Eq, LParen, RParen, Exists, End };

struct Token {
  Tok kind;
  std::uint32_t index = 0;  // for XVar / YVar
  std::size_t offset = 0;
};

/// Splits `text` into tokens; `∃`, `E` and `exists` all lex to Exists.
std::vector<Token> lex(std::string_view text);

/// Maps a lexed variable to an internal index, throwing SyntaxError if the
/// name is not admissible in the current context.
using VarResolver = std::function<std::uint32_t(const Token&)>;

class TermParser {
 public:
  TermParser(const std::vector<Token>& toks, std::size_t pos, VarResolver resolve)
      : toks_(toks), pos_(pos), resolve_(std::move(resolve)) {}

  Term parse_sum();
  std::size_t pos() const { return pos_; }

 private:
  Term parse_prod();
  Term parse_atom();
  const Token& peek() const { return toks_[pos_]; }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  VarResolver resolve_;
};

const char* describe(Tok t);

}  // namespace redpow::detail
