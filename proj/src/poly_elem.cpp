#include "redpow/poly_elem.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace redpow {

namespace {

void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int sign_of_leading(const std::vector<BigInt>& c) {
  if (c.empty()) return 0;
  return c.back() > 0 ? 1 : -1;
}

}  // namespace

PolyElem PolyElem::from_coeffs(std::vector<BigInt> coeffs) {
  trim(coeffs);
  if (sign_of_leading(coeffs) < 0) {
    throw std::invalid_argument("polynomial has a negative leading coefficient and is not in Z[X]+");
  }
  PolyElem p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

std::vector<BigInt> coeff_difference(const PolyElem& b, const PolyElem& a) {
  std::vector<BigInt> d(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) d[i] += b.coeffs()[i];
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) d[i] -= a.coeffs()[i];
  trim(d);
  return d;
}

std::strong_ordering operator<=>(const PolyElem& a, const PolyElem& b) {
  const int s = sign_of_leading(coeff_difference(a, b));
  if (s == 0) return std::strong_ordering::equal;
  return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

PolyElem poly_add(const PolyElem& a, const PolyElem& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return PolyElem::from_coeffs(std::move(c));
}

PolyElem poly_mul(const PolyElem& a, const PolyElem& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return PolyElem::from_coeffs(std::move(c));
}

bool poly_le(const PolyElem& a, const PolyElem& b) { return sign_of_leading(coeff_difference(b, a)) >= 0; }

std::optional<PolyElem> poly_minus(const PolyElem& a, const PolyElem& b) {
  auto d = coeff_difference(b, a);
  if (sign_of_leading(d) < 0) return std::nullopt;
  return PolyElem::from_coeffs(std::move(d));
}

BigInt eval_at(const PolyElem& p, const BigInt& point) {
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * point + *it;
  return acc;
}

BigInt nonneg_threshold(std::span<const PolyElem> elems) {
  BigInt bound = 0;
  for (const auto& p : elems) {
    const auto& c = p.coeffs();
    if (std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v >= 0; })) continue;
    const BigInt& lead = c.back();
    BigInt max_abs = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) max_abs = std::max(max_abs, BigInt(abs(c[i])));
    // Every real root lies below 1 + max|c_i| / c_lead.
    const BigInt ratio_ceil = (max_abs + lead - 1) / lead;
    bound = std::max(bound, BigInt(1 + ratio_ceil));
  }
  return bound;
}

std::string PolyElem::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "X";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

PolyElem PolyElem::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<BigInt> coeffs;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "': " + why);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    BigInt coeff = 1;
    const bool has_digits = j > i;
    if (has_digits) coeff = BigInt(s.substr(i, j - i));
    i = j;
    std::size_t degree = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_digits) fail("'*' without a coefficient");
      ++i;
      if (i >= s.size() || (s[i] != 'X' && s[i] != 'x')) fail("expected X after '*'");
    }
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail("expected exponent");
        degree = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_digits) {
      fail("expected a coefficient or X");
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] += sign * coeff;
  }
  return from_coeffs(std::move(coeffs));
}

}  // namespace redpow
