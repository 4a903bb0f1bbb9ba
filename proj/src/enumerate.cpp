#include "redpow/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace redpow {

namespace {

// Smallest possible formula with k quantifiers: every bound variable occurs,
// so the body has at least max(3, 2k-1) tokens.
std::size_t min_length(std::uint32_t k) {
  if (k == 0) return 3;
  return 2 * k + 2 + std::max<std::size_t>(3, 2 * k - 1);
}

std::size_t prefix_length(std::uint32_t k) { return k == 0 ? 0 : 2 * k + 2; }

void throw_exceeded(std::uint64_t limit) {
  throw BudgetExceeded("formula enumeration exceeded the limit of " + std::to_string(limit) + " candidate forms");
}

// Number of polynomial forms of each exact length 0..max_len over `vars`
// variables. Multisets of monomials where a monomial of degree d costs 2d
// (the constant costs 2) and the total cost is length + 1.
std::vector<long double> poly_counts(std::size_t max_len, std::uint32_t vars, long double cutoff) {
  const std::size_t max_cost = max_len + 1;
  std::vector<long double> types(max_cost + 1, 0.0L);
  auto binom = [](long double n, std::size_t r) {
    long double v = 1.0L;
    for (std::size_t i = 1; i <= r; ++i) v = v * (n - r + i) / static_cast<long double>(i);
    return v;
  };
  if (max_cost >= 2) types[2] = 1.0L + vars;
  for (std::size_t d = 2; 2 * d <= max_cost; ++d) {
    types[2 * d] = vars == 0 ? 0.0L : binom(static_cast<long double>(vars + d - 1), d);
  }
  // Euler transform: s*M(s) = sum_j b(j) M(s-j), b(j) = sum_{c|j} c*types[c].
  std::vector<long double> b(max_cost + 1, 0.0L);
  for (std::size_t c = 1; c <= max_cost; ++c) {
    if (types[c] == 0.0L) continue;
    for (std::size_t j = c; j <= max_cost; j += c) b[j] += static_cast<long double>(c) * types[c];
  }
  std::vector<long double> multisets(max_cost + 1, 0.0L);
  multisets[0] = 1.0L;
  std::vector<long double> out(max_len + 1, 0.0L);
  long double total = 0.0L;
  for (std::size_t s = 1; s <= max_cost; ++s) {
    long double acc = 0.0L;
    for (std::size_t j = 1; j <= s; ++j) acc += b[j] * multisets[s - j];
    multisets[s] = acc / static_cast<long double>(s);
    const std::size_t len = s - 1;
    if (len >= 1) {
      out[len] = multisets[s] + (len == 1 ? 1.0L : 0.0L);
      total += out[len];
      if (total > cutoff) {
        out.resize(len + 1);
        out.back() = cutoff + 1.0L;
        return out;
      }
    }
  }
  return out;
}

}  // namespace

long double estimate_candidates(const BigInt& max_len_big, std::uint32_t free_vars, long double cutoff) {
  if (max_len_big > BigInt(100'000'000)) return cutoff + 1.0L;
  const auto max_len = static_cast<std::size_t>(max_len_big);
  long double total = 0.0L;
  for (std::uint32_t k = 0; min_length(k) <= max_len; ++k) {
    const std::size_t body = max_len - prefix_length(k);
    const std::size_t side_max = body - 2;
    const auto counts = poly_counts(side_max, k + free_vars, cutoff);
    if (counts.size() < side_max + 1) return cutoff + 1.0L;
    std::vector<long double> cumulative(counts.size(), 0.0L);
    for (std::size_t a = 1; a < counts.size(); ++a) {
      cumulative[a] = cumulative[a - 1] + counts[a];
      total += counts[a];
    }
    for (std::size_t a = 1; a <= side_max; ++a) {
      const std::size_t rest = body - 1 - a;
      if (rest >= 1) total += counts[a] * cumulative[std::min(rest, side_max)];
      if (total > cutoff) return total;
    }
  }
  return total;
}

std::vector<PolyForm> enumerate_polys(std::size_t max_len, std::uint32_t num_vars, std::uint64_t& candidates,
                                      const EnumerationLimits& limits) {
  std::vector<PolyForm> out;
  if (max_len == 0) return out;
  out.emplace_back();  // 0
  if (++candidates > limits.max_candidates) throw_exceeded(limits.max_candidates);

  // All monomials that fit, in ascending monomial order.
  std::vector<Monomial> monos{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  for (std::size_t d = 1; 2 * d - 1 <= max_len; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      const std::uint32_t lo = m.empty() ? 0 : m.back();
      for (std::uint32_t v = lo; v < num_vars; ++v) {
        Monomial e = m;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    }
    monos.insert(monos.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  // Depth-first over multisets of monomials, taken in nondecreasing order.
  std::vector<PolyForm::Entry> cur;
  auto rec = [&](auto&& self, std::size_t from, std::size_t len) -> void {
    for (std::size_t i = from; i < monos.size(); ++i) {
      const std::size_t ml = monomial_length(monos[i]);
      const std::size_t next_len = cur.empty() ? ml : len + 1 + ml;
      // Lengths are nondecreasing along `monos`, so nothing later fits either.
      if (next_len > max_len) break;
      const bool same = !cur.empty() && cur.back().first == monos[i];
      if (same) {
        cur.back().second += 1;
      } else {
        cur.push_back({monos[i], BigInt(1)});
      }
      out.push_back(PolyForm::from_entries(cur));
      if (++candidates > limits.max_candidates) throw_exceeded(limits.max_candidates);
      self(self, i, next_len);
      if (same) {
        cur.back().second -= 1;
      } else {
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<EquationForm> enumerate_formulas(std::size_t max_len, std::uint32_t free_vars,
                                             const EnumerationLimits& limits) {
  const auto limit = static_cast<long double>(limits.max_candidates);
  if (estimate_candidates(BigInt(max_len), free_vars, limit) > limit) throw_exceeded(limits.max_candidates);

  std::vector<EquationForm> out;
  std::uint64_t candidates = 0;
  for (std::uint32_t k = 0; min_length(k) <= max_len; ++k) {
    const std::size_t body = max_len - prefix_length(k);
    const std::size_t side_max = body - 2;
    auto polys = enumerate_polys(side_max, k + free_vars, candidates, limits);
    std::vector<std::vector<const PolyForm*>> by_len(side_max + 1);
    for (const auto& p : polys) by_len[p.length()].push_back(&p);

    for (std::size_t a = 1; a <= side_max; ++a) {
      for (std::size_t b = 1; a + b + 1 <= body; ++b) {
        for (const PolyForm* p : by_len[a]) {
          for (const PolyForm* q : by_len[b]) {
            if (++candidates > limits.max_candidates) throw_exceeded(limits.max_candidates);
            if (!(*p < *q) && !(p->is_zero() && q->is_zero())) continue;
            bool disjoint = true;
            for (const auto& e : p->entries()) {
              if (q->coefficient(e.first) != 0) {
                disjoint = false;
                break;
              }
            }
            if (!disjoint) continue;
            bool all_bound_used = true;
            for (std::uint32_t y = 0; y < k && all_bound_used; ++y) {
              all_bound_used = p->mentions(y) || q->mentions(y);
            }
            if (!all_bound_used) continue;
            EquationForm f{k, *p, *q};
            if (k >= 2 && canonical_form(k, f.lhs, f.rhs) != f) continue;
            out.push_back(std::move(f));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_h(const BigInt& n, std::uint32_t m, const EnumerationLimits& limits) {
  const auto limit = static_cast<long double>(limits.max_candidates);
  if (estimate_candidates(n, m, limit) > limit) throw_exceeded(limits.max_candidates);
  return BigInt(enumerate_formulas(static_cast<std::size_t>(n), m, limits).size());
}

}  // namespace redpow
