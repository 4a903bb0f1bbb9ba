#include "redpow/ordinal.hpp"

#include <cctype>
#include <charconv>

namespace redpow {

OrdinalCNF::OrdinalCNF(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) throw std::invalid_argument("ordinal coefficient must be positive");
    if (i > 0 && terms_[i].exponent >= terms_[i - 1].exponent) {
      throw std::invalid_argument("ordinal exponents must strictly decrease");
    }
  }
}

OrdinalCNF OrdinalCNF::finite(std::uint64_t n) {
  if (n == 0) return {};
  return OrdinalCNF({{0, n}});
}

OrdinalCNF OrdinalCNF::omega_power(std::uint32_t e, std::uint64_t c) { return OrdinalCNF({{e, c}}); }

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  OrdinalCNF run() {
    skip();
    std::vector<OrdinalCNF::Term> terms;
    if (at_end()) fail("empty ordinal");
    for (;;) {
      terms.push_back(term());
      skip();
      if (at_end()) break;
      expect('+');
    }
    // `0` alone is the zero ordinal; it may not appear as a summand.
    if (terms.size() == 1 && terms[0].coefficient == 0 && terms[0].exponent == 0) return {};
    for (const auto& t : terms) {
      if (t.coefficient == 0) fail("zero summand");
    }
    try {
      return OrdinalCNF(std::move(terms));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

 private:
  OrdinalCNF::Term term() {
    skip();
    if (omega()) {
      std::uint32_t e = 1;
      std::uint64_t c = 1;
      skip();
      if (peek('^')) {
        ++pos_;
        e = static_cast<std::uint32_t>(number());
        if (e == 0) fail("exponent 0 is written as a plain number");
      }
      skip();
      if (peek('*')) {
        ++pos_;
        c = number();
      }
      return {e, c};
    }
    return {0, number()};
  }

  bool omega() {
    if (peek('w')) {
      ++pos_;
      return true;
    }
    constexpr std::string_view kOmega = "\xcf\x89";  // ω
    if (s_.substr(pos_, kOmega.size()) == kOmega) {
      pos_ += kOmega.size();
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

  void expect(char c) {
    skip();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad ordinal '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " +
                                what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string render(const OrdinalCNF& a, const std::string& omega, const std::string& times) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += "+";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += omega;
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += times + std::to_string(t.coefficient);
  }
  return out;
}

}  // namespace

OrdinalCNF OrdinalCNF::parse(std::string_view text) { return OrdinalParser(text).run(); }

OrdinalCNF OrdinalCNF::successor() const {
  auto t = terms_;
  if (is_successor()) {
    ++t.back().coefficient;
  } else {
    t.push_back({0, 1});
  }
  return OrdinalCNF(std::move(t));
}

OrdinalCNF OrdinalCNF::predecessor() const {
  if (!is_successor()) throw std::invalid_argument(to_string() + " has no predecessor");
  auto t = terms_;
  if (--t.back().coefficient == 0) t.pop_back();
  return OrdinalCNF(std::move(t));
}

std::string OrdinalCNF::to_string() const { return render(*this, "w", "*"); }
std::string OrdinalCNF::pretty() const { return render(*this, "\xcf\x89", "\xc2\xb7"); }

std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].exponent != y[i].exponent) return x[i].exponent <=> y[i].exponent;
    if (x[i].coefficient != y[i].coefficient) return x[i].coefficient <=> y[i].coefficient;
  }
  return x.size() <=> y.size();
}

OrdinalCNF fundamental_sequence(const OrdinalCNF& delta, std::uint64_t i) {
  if (!delta.is_limit()) throw NotALimit(delta.to_string() + " is not a limit ordinal");
  auto t = delta.terms();
  const auto last = t.back();
  t.pop_back();
  if (last.coefficient > 1) t.push_back({last.exponent, last.coefficient - 1});
  t.push_back({last.exponent - 1, i + 1});
  return OrdinalCNF(std::move(t));
}

std::vector<OrdinalCNF> parse_ordinal_list(std::string_view text) {
  std::vector<OrdinalCNF> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(OrdinalCNF::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace redpow
