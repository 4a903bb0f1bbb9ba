#include "redpow/poly_form.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace redpow {

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering operator<=>(const PolyForm& a, const PolyForm& b) {
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_monomials(x[i].first, y[i].first); c != 0) return c;
    if (x[i].second != y[i].second) {
      return x[i].second < y[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

PolyForm PolyForm::constant(const BigInt& c) {
  if (c < 0) throw std::invalid_argument("negative constant in polynomial form");
  PolyForm p;
  if (c > 0) p.entries_.push_back({Monomial{}, c});
  return p;
}

PolyForm PolyForm::variable(std::uint32_t index) {
  PolyForm p;
  p.entries_.push_back({Monomial{index}, BigInt(1)});
  return p;
}

PolyForm PolyForm::from_entries(std::vector<Entry> entries) {
  PolyForm p;
  for (auto& e : entries) {
    if (e.second <= 0) throw std::invalid_argument("non-positive coefficient in polynomial form");
    std::sort(e.first.begin(), e.first.end());
  }
  p.entries_ = std::move(entries);
  p.normalize();
  return p;
}

void PolyForm::normalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return compare_monomials(a.first, b.first) < 0; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  entries_ = std::move(merged);
}

PolyForm PolyForm::from_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return {};
    case Term::Kind::One: return constant(1);
    case Term::Kind::Var: return variable(t.var_index());
    case Term::Kind::Plus: return from_term(t.lhs()) + from_term(t.rhs());
    case Term::Kind::Times: return from_term(t.lhs()) * from_term(t.rhs());
  }
  return {};
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  PolyForm r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() ||
        (i < entries_.size() && compare_monomials(entries_[i].first, o.entries_[j].first) < 0)) {
      r.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || compare_monomials(entries_[i].first, o.entries_[j].first) > 0) {
      r.entries_.push_back(o.entries_[j++]);
    } else {
      r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

PolyForm PolyForm::operator*(const PolyForm& o) const {
  PolyForm r;
  r.entries_.reserve(entries_.size() * o.entries_.size());
  for (const auto& [ma, ca] : entries_) {
    for (const auto& [mb, cb] : o.entries_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.entries_.push_back({std::move(m), ca * cb});
    }
  }
  r.normalize();
  return r;
}

BigInt PolyForm::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), m, [](const Entry& e, const Monomial& key) {
    return compare_monomials(e.first, key) < 0;
  });
  if (it != entries_.end() && it->first == m) return it->second;
  return 0;
}

bool PolyForm::mentions(std::uint32_t var) const {
  for (const auto& e : entries_) {
    if (std::binary_search(e.first.begin(), e.first.end(), var)) return true;
  }
  return false;
}

std::uint32_t PolyForm::max_var_plus_one() const {
  std::uint32_t r = 0;
  for (const auto& e : entries_) {
    if (!e.first.empty()) r = std::max(r, e.first.back() + 1);
  }
  return r;
}

std::size_t PolyForm::length() const {
  if (entries_.empty()) return 1;
  std::size_t copies = 0;
  std::size_t tokens = 0;
  for (const auto& [mono, coeff] : entries_) {
    const auto c = static_cast<std::size_t>(coeff);
    copies += c;
    tokens += c * monomial_length(mono);
  }
  return tokens + copies - 1;
}

Term PolyForm::to_term() const {
  if (entries_.empty()) return Term::zero();
  auto mono_term = [](const Monomial& m) {
    if (m.empty()) return Term::one();
    Term t = Term::var(m[0]);
    for (std::size_t i = 1; i < m.size(); ++i) t = Term::times(std::move(t), Term::var(m[i]));
    return t;
  };
  std::optional<Term> acc;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    const Term mt = mono_term(it->first);
    for (BigInt k = 0; k < it->second; ++k) {
      acc = acc ? Term::plus(std::move(*acc), mt) : mt;
    }
  }
  return *acc;
}

PolyForm PolyForm::renamed(const std::function<std::uint32_t(std::uint32_t)>& rename) const {
  PolyForm r;
  r.entries_.reserve(entries_.size());
  for (const auto& [mono, coeff] : entries_) {
    Monomial m;
    m.reserve(mono.size());
    for (auto v : mono) m.push_back(rename(v));
    std::sort(m.begin(), m.end());
    r.entries_.push_back({std::move(m), coeff});
  }
  r.normalize();
  return r;
}

void cancel_common(PolyForm& lhs, PolyForm& rhs) {
  std::vector<PolyForm::Entry> l, r;
  const auto& a = lhs.entries();
  const auto& b = rhs.entries();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && compare_monomials(a[i].first, b[j].first) < 0)) {
      l.push_back(a[i++]);
    } else if (i == a.size() || compare_monomials(a[i].first, b[j].first) > 0) {
      r.push_back(b[j++]);
    } else {
      if (a[i].second > b[j].second) l.push_back({a[i].first, a[i].second - b[j].second});
      if (b[j].second > a[i].second) r.push_back({b[j].first, b[j].second - a[i].second});
      ++i;
      ++j;
    }
  }
  lhs = PolyForm::from_entries(std::move(l));
  rhs = PolyForm::from_entries(std::move(r));
}

}  // namespace redpow
