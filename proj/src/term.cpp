#include "redpow/term.hpp"
#include "redpow/bigint.hpp"

#include "lexer.hpp"

#include <cctype>

namespace redpow {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  BigInt v(text.substr(i));
  return text[0] == '-' ? BigInt(-v) : v;
}

Term::Term() : Term(zero()) {}

Term Term::zero() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Zero, 0, {}});
  return Term(node);
}
Term Term::one() { return Term(std::make_shared<const Node>(Node{Kind::One, 0, {}})); }
Term Term::var(std::uint32_t index) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, index, {}}));
}
Term Term::plus(Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(Node{Kind::Plus, 0, {std::move(lhs), std::move(rhs)}}));
}
Term Term::times(Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(Node{Kind::Times, 0, {std::move(lhs), std::move(rhs)}}));
}

std::size_t Term::size() const {
  if (is_leaf()) return 1;
  return 1 + lhs().size() + rhs().size();
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One:
      return true;
    case Term::Kind::Var:
      return a.var_index() == b.var_index();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

void render(const Term& t, const VarNaming& naming, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::One: out += '1'; return;
    case Term::Kind::Var: out += naming.name(t.var_index()); return;
    case Term::Kind::Plus:
      render(t.lhs(), naming, out);
      out += '+';
      // + is left-associative: a right operand that is itself a sum needs parens.
      if (t.rhs().kind() == Term::Kind::Plus) {
        out += '(';
        render(t.rhs(), naming, out);
        out += ')';
      } else {
        render(t.rhs(), naming, out);
      }
      return;
    case Term::Kind::Times: {
      const bool wrap_l = t.lhs().kind() == Term::Kind::Plus;
      const bool wrap_r = t.rhs().kind() == Term::Kind::Plus || t.rhs().kind() == Term::Kind::Times;
      if (wrap_l) out += '(';
      render(t.lhs(), naming, out);
      if (wrap_l) out += ')';
      out += '*';
      if (wrap_r) out += '(';
      render(t.rhs(), naming, out);
      if (wrap_r) out += ')';
      return;
    }
  }
}

}  // namespace

std::string serialize(const Term& t, const VarNaming& naming) {
  std::string out;
  render(t, naming, out);
  return out;
}

namespace detail {

const char* describe(Tok t) {
  switch (t) {
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::XVar: return "variable";
    case Tok::YVar: return "bound variable";
    case Tok::Plus: return "'+'";
    case Tok::Times: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Exists: return "quantifier";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  static constexpr std::string_view kExistsUtf8 = "\xE2\x88\x83";
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text.substr(i, kExistsUtf8.size()) == kExistsUtf8) {
      out.push_back({Tok::Exists, 0, start});
      i += kExistsUtf8.size();
      continue;
    }
    if (text.substr(i, 6) == "exists") {
      out.push_back({Tok::Exists, 0, start});
      i += 6;
      continue;
    }
    switch (c) {
      case 'E': out.push_back({Tok::Exists, 0, start}); ++i; continue;
      case '0': out.push_back({Tok::Zero, 0, start}); ++i; continue;
      case '1': out.push_back({Tok::One, 0, start}); ++i; continue;
      case '+': out.push_back({Tok::Plus, 0, start}); ++i; continue;
      case '*': out.push_back({Tok::Times, 0, start}); ++i; continue;
      case '=': out.push_back({Tok::Eq, 0, start}); ++i; continue;
      case '(': out.push_back({Tok::LParen, 0, start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, 0, start}); ++i; continue;
      case 'x':
      case 'y': {
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw SyntaxError(start, "variable name needs an index");
        if (j - i > 9) throw SyntaxError(start, "variable index too large");
        const auto idx = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(i, j - i))));
        out.push_back({c == 'x' ? Tok::XVar : Tok::YVar, idx, start});
        i = j;
        continue;
      }
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, 0, text.size()});
  return out;
}

Term TermParser::parse_sum() {
  Term acc = parse_prod();
  while (peek().kind == Tok::Plus) {
    ++pos_;
    acc = Term::plus(std::move(acc), parse_prod());
  }
  return acc;
}

Term TermParser::parse_prod() {
  Term acc = parse_atom();
  while (peek().kind == Tok::Times) {
    ++pos_;
    acc = Term::times(std::move(acc), parse_atom());
  }
  return acc;
}

Term TermParser::parse_atom() {
  const Token& t = peek();
  switch (t.kind) {
    case Tok::Zero: ++pos_; return Term::zero();
    case Tok::One: ++pos_; return Term::one();
    case Tok::XVar:
    case Tok::YVar: {
      const std::uint32_t idx = resolve_(t);
      ++pos_;
      return Term::var(idx);
    }
    case Tok::LParen: {
      ++pos_;
      Term inner = parse_sum();
      if (peek().kind != Tok::RParen) {
        throw SyntaxError(peek().offset, std::string("expected ')' but found ") + describe(peek().kind));
      }
      ++pos_;
      return inner;
    }
    default:
      throw SyntaxError(t.offset, std::string("expected a term but found ") + describe(t.kind));
  }
}

}  // namespace detail

Term parse_term(std::string_view text) {
  const auto toks = detail::lex(text);
  detail::TermParser p(toks, 0, [](const detail::Token& t) -> std::uint32_t {
    if (t.kind == detail::Tok::YVar) throw SyntaxError(t.offset, "bound variable outside a quantifier");
    return t.index;
  });
  Term t = p.parse_sum();
  const auto& rest = toks[p.pos()];
  if (rest.kind != detail::Tok::End) {
    throw SyntaxError(rest.offset, std::string("unexpected ") + detail::describe(rest.kind));
  }
  return t;
}

}  // namespace redpow
