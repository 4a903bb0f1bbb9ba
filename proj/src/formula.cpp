#include "redpow/formula.hpp"

#include "lexer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace redpow {

namespace {

constexpr std::uint32_t kMaxPermutedBound = 6;

void collect_vars(const Term& t, std::set<std::uint32_t>& out) {
  if (t.kind() == Term::Kind::Var) {
    out.insert(t.var_index());
  } else if (!t.is_leaf()) {
    collect_vars(t.lhs(), out);
    collect_vars(t.rhs(), out);
  }
}

EquationForm renumber(const PolyForm& lhs, const PolyForm& rhs, std::uint32_t old_bound,
                      const std::vector<std::uint32_t>& order) {
  const auto new_bound = static_cast<std::uint32_t>(order.size());
  std::vector<std::uint32_t> slot(old_bound, 0);
  for (std::uint32_t i = 0; i < new_bound; ++i) slot[order[i]] = i;
  auto rename = [&](std::uint32_t v) { return v < old_bound ? slot[v] : new_bound + (v - old_bound); };
  EquationForm f{new_bound, lhs.renamed(rename), rhs.renamed(rename)};
  if (f.rhs < f.lhs) std::swap(f.lhs, f.rhs);
  return f;
}

// Bound variables in order of first appearance in the printed form.
std::vector<std::uint32_t> first_use(const EquationForm& f) {
  std::vector<std::uint32_t> order;
  auto scan = [&](const PolyForm& p) {
    for (auto it = p.entries().rbegin(); it != p.entries().rend(); ++it) {
      for (auto v : it->first) {
        if (v < f.bound_count && std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
      }
    }
  };
  scan(f.lhs);
  scan(f.rhs);
  return order;
}

}  // namespace

std::strong_ordering operator<=>(const EquationForm& a, const EquationForm& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.bound_count <=> b.bound_count; c != 0) return c;
  if (auto c = a.lhs <=> b.lhs; c != 0) return c;
  return a.rhs <=> b.rhs;
}

std::size_t EquationForm::length() const {
  const std::size_t body = lhs.length() + 1 + rhs.length();
  return bound_count == 0 ? body : body + 2 * bound_count + 2;
}

std::vector<std::uint32_t> EquationForm::free_vars() const {
  std::set<std::uint32_t> vars;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& e : side->entries()) {
      for (auto v : e.first) {
        if (v >= bound_count) vars.insert(v - bound_count);
      }
    }
  }
  return {vars.begin(), vars.end()};
}

bool EquationForm::mentions_free(std::uint32_t x_index) const {
  return lhs.mentions(bound_count + x_index) || rhs.mentions(bound_count + x_index);
}

DioFormula EquationForm::to_formula() const {
  return DioFormula{bound_count, lhs.to_term(), rhs.to_term(), free_vars()};
}

std::string EquationForm::text() const { return serialize(to_formula()); }

EquationForm canonical_form(std::uint32_t bound_count, PolyForm lhs, PolyForm rhs) {
  cancel_common(lhs, rhs);
  std::vector<std::uint32_t> used;
  for (std::uint32_t b = 0; b < bound_count; ++b) {
    if (lhs.mentions(b) || rhs.mentions(b)) used.push_back(b);
  }
  if (used.size() <= kMaxPermutedBound) {
    std::optional<EquationForm> best;
    do {
      EquationForm cand = renumber(lhs, rhs, bound_count, used);
      if (!best || std::tie(cand.lhs, cand.rhs) < std::tie(best->lhs, best->rhs)) best = std::move(cand);
    } while (std::next_permutation(used.begin(), used.end()));
    return *best;
  }
  // Too many quantifiers to try every numbering: settle on first-use order.
  EquationForm cur = renumber(lhs, rhs, bound_count, used);
  for (int iter = 0; iter < 16; ++iter) {
    auto order = first_use(cur);
    bool identity = true;
    for (std::uint32_t i = 0; i < order.size(); ++i) identity = identity && order[i] == i;
    if (identity) break;
    cur = renumber(cur.lhs, cur.rhs, cur.bound_count, order);
  }
  return cur;
}

EquationForm canonical_form(const DioFormula& f) {
  return canonical_form(f.bound_count, PolyForm::from_term(f.lhs), PolyForm::from_term(f.rhs));
}

DioFormula canonicalize(const DioFormula& f) { return canonical_form(f).to_formula(); }

std::string serialize(const DioFormula& f) {
  const VarNaming naming{f.bound_count};
  std::string body = serialize(f.lhs, naming) + "=" + serialize(f.rhs, naming);
  if (f.bound_count == 0) return body;
  std::string out;
  for (std::uint32_t i = 0; i < f.bound_count; ++i) out += "\xE2\x88\x83y" + std::to_string(i) + " ";
  return out + "(" + body + ")";
}

std::size_t token_count(std::string_view text) { return detail::lex(text).size() - 1; }

std::size_t length(const DioFormula& f) { return token_count(serialize(f)); }

DioFormula parse_formula(std::string_view text) {
  using detail::Tok;
  const auto toks = detail::lex(text);
  std::size_t pos = 0;
  std::map<std::uint32_t, std::uint32_t> bound;  // y-name -> internal index
  while (toks[pos].kind == Tok::Exists) {
    const auto& v = toks[pos + 1];
    if (v.kind != Tok::YVar) throw SyntaxError(v.offset, "quantifier must bind a variable y<i>");
    if (bound.count(v.index)) throw SyntaxError(v.offset, "variable quantified twice");
    const auto slot = static_cast<std::uint32_t>(bound.size());
    bound.emplace(v.index, slot);
    pos += 2;
  }
  const auto k = static_cast<std::uint32_t>(bound.size());
  auto resolve = [&](const detail::Token& t) -> std::uint32_t {
    if (t.kind == Tok::XVar) return k + t.index;
    auto it = bound.find(t.index);
    if (it == bound.end()) throw SyntaxError(t.offset, "bound variable y" + std::to_string(t.index) + " is not quantified");
    return it->second;
  };

  // The body is either `lhs=rhs` or `(lhs=rhs)`; a leading '(' may also just
  // open a subterm, so look for '=' at depth one before the matching ')'.
  bool wrapped = false;
  if (toks[pos].kind == Tok::LParen) {
    int depth = 0;
    for (std::size_t i = pos; i < toks.size(); ++i) {
      if (toks[i].kind == Tok::LParen) ++depth;
      if (toks[i].kind == Tok::RParen && --depth == 0) break;
      if (toks[i].kind == Tok::Eq && depth == 1) {
        wrapped = true;
        break;
      }
    }
  }
  if (wrapped) ++pos;
  detail::TermParser lp(toks, pos, resolve);
  Term lhs = lp.parse_sum();
  pos = lp.pos();
  if (toks[pos].kind != Tok::Eq) {
    throw SyntaxError(toks[pos].offset, std::string("expected '=' but found ") + detail::describe(toks[pos].kind));
  }
  detail::TermParser rp(toks, pos + 1, resolve);
  Term rhs = rp.parse_sum();
  pos = rp.pos();
  if (wrapped) {
    if (toks[pos].kind != Tok::RParen) {
      throw SyntaxError(toks[pos].offset, std::string("expected ')' but found ") + detail::describe(toks[pos].kind));
    }
    ++pos;
  }
  if (toks[pos].kind != Tok::End) {
    throw SyntaxError(toks[pos].offset, std::string("unexpected ") + detail::describe(toks[pos].kind));
  }
  std::set<std::uint32_t> vars;
  collect_vars(lhs, vars);
  collect_vars(rhs, vars);
  std::vector<std::uint32_t> free;
  for (auto v : vars) {
    if (v >= k) free.push_back(v - k);
  }
  return DioFormula{k, std::move(lhs), std::move(rhs), std::move(free)};
}

}  // namespace redpow
