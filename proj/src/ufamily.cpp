#include "redpow/ufamily.hpp"

#include <algorithm>

namespace redpow {

bool contains(const OrdinalSet& s, const OrdinalCNF& a) { return std::binary_search(s.begin(), s.end(), a); }

namespace {

OrdinalSet with(OrdinalSet s, const OrdinalCNF& a) {
  s.insert(std::upper_bound(s.begin(), s.end(), a), a);
  return s;
}

}  // namespace

const UFamily::Entry& UFamily::entry(const OrdinalCNF& alpha) {
  auto it = memo_.find(alpha);
  if (it != memo_.end()) return it->second;
  Entry e = build(alpha);
  return memo_.emplace(alpha, std::move(e)).first->second;
}

UFamily::Entry UFamily::build(const OrdinalCNF& alpha) {
  Entry e;
  const std::size_t H = horizon_;
  e.sets.assign(H + 1, OrdinalSet{alpha});
  if (alpha.is_zero()) return e;

  if (alpha.is_successor()) {
    e.plan.kind = UPlan::Case::Successor;
    const OrdinalCNF beta = alpha.predecessor();
    const auto& below = entry(beta).sets;
    // Scan down from the horizon for the start of the final good run.
    std::optional<std::size_t> t;
    for (std::size_t n = H + 1; n-- > 0;) {
      if (2 * below[n].size() < n) {
        t = n;
      } else {
        break;
      }
    }
    e.plan.threshold = t;
    if (t) {
      for (std::size_t n = *t; n <= H; ++n) e.sets[n] = with(below[n], alpha);
    }
    return e;
  }

  e.plan.kind = UPlan::Case::Limit;
  // n_i for increasing i until it leaves the horizon.
  std::optional<std::size_t> start;
  for (std::uint64_t i = 0;; ++i) {
    const OrdinalCNF di = fundamental_sequence(alpha, i);
    const OrdinalCNF next = fundamental_sequence(alpha, i + 1);
    const auto& next_sets = entry(next).sets;
    std::optional<std::size_t> found;
    if (i == 0) {
      for (std::size_t n = 0; n <= H && !found; ++n) {
        if (contains(next_sets[n], di)) found = n;
      }
    } else {
      // Least n > n_{i-1} such that the size bound holds on all of [n, H].
      const std::size_t prev = *start;
      const auto& cur_sets = entry(di).sets;
      std::size_t good_from = H + 1;
      for (std::size_t n = H + 1; n-- > prev + 1;) {
        if (prev * cur_sets[n].size() < n) {
          good_from = n;
        } else {
          break;
        }
      }
      for (std::size_t n = std::max(good_from, prev + 1); n <= H && !found; ++n) {
        if (contains(next_sets[n], di)) found = n;
      }
    }
    if (!found) break;
    start = found;
    e.plan.deltas.push_back(di);
    e.plan.starts.push_back(*found);
  }
  for (std::size_t i = 0; i < e.plan.starts.size(); ++i) {
    const std::size_t lo = e.plan.starts[i];
    const std::size_t hi = i + 1 < e.plan.starts.size() ? e.plan.starts[i + 1] : H + 1;
    const auto& sets = entry(e.plan.deltas[i]).sets;
    for (std::size_t n = lo; n < hi; ++n) e.sets[n] = with(sets[n], alpha);
  }
  return e;
}

const OrdinalSet& UFamily::u(const OrdinalCNF& alpha, std::size_t n) {
  if (n > horizon_) {
    throw HorizonExceeded("n = " + std::to_string(n) + " is beyond the horizon " + std::to_string(horizon_));
  }
  return entry(alpha).sets[n];
}

const UPlan& UFamily::plan(const OrdinalCNF& alpha) { return entry(alpha).plan; }

std::optional<std::size_t> UFamily::entry_point(const OrdinalCNF& alpha, const OrdinalCNF& beta) {
  const auto& sets = entry(alpha).sets;
  for (std::size_t n = 0; n < sets.size(); ++n) {
    if (contains(sets[n], beta)) return n;
  }
  return std::nullopt;
}

std::vector<OrdinalCNF> UFamily::materialized() const {
  std::vector<OrdinalCNF> out;
  for (const auto& [a, e] : memo_) out.push_back(a);
  return out;
}

LemmaReport check_lemma_clauses(UFamily& family, const OrdinalCNF& alpha, std::size_t n_max,
                                const std::vector<OrdinalCNF>& betas) {
  LemmaReport r;
  r.alpha = alpha;
  r.n_max = n_max;
  r.horizon = family.horizon();
  if (n_max + 1 > family.horizon()) {
    throw HorizonExceeded("n_max " + std::to_string(n_max) + " needs a horizon above " + std::to_string(n_max));
  }
  auto violate = [&](std::string clause, std::size_t n, std::optional<OrdinalCNF> beta, std::string detail) {
    r.violations.push_back({std::move(clause), n, std::move(beta), std::move(detail)});
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    const OrdinalSet& s = family.u(alpha, n);
    // Clause (i) cannot hold at n = 0 together with α ∈ u^α_0, so it starts at 1.
    if (n >= 1 && !(s.size() < n + 1)) {
      violate("i", n, std::nullopt, "|u| = " + std::to_string(s.size()) + " is not < n+1");
    }
    if (!contains(s, alpha)) violate("ii", n, alpha, "alpha is missing from u^alpha_n");
    const OrdinalSet& next = family.u(alpha, n + 1);
    for (const auto& b : s) {
      if (!contains(next, b)) violate("ii", n, b, "element dropped between n and n+1");
    }
    for (const auto& b : s) {
      OrdinalSet cut;
      for (const auto& c : s) {
        if (c <= b) cut.push_back(c);
      }
      if (family.u(b, n) != cut) violate("iv", n, b, "u^beta_n differs from u^alpha_n cut at beta");
    }
  }

  for (const auto& b : betas) {
    if (b > alpha) continue;
    EntryThreshold et{b, family.entry_point(alpha, b)};
    if (!et.n) violate("iii", family.horizon(), b, "beta never enters u^alpha_n within the horizon");
    r.entries.push_back(std::move(et));
  }

  for (std::size_t d : {2u, 4u, 8u}) {
    RatioThreshold rt{d, std::nullopt};
    for (std::size_t n = family.horizon() + 1; n-- > 0;) {
      if (family.u(alpha, n).size() * d < n + 1) {
        rt.from_n = n;
      } else {
        break;
      }
    }
    if (!rt.from_n) {
      violate("v", family.horizon(), std::nullopt, "ratio never stays below 1/" + std::to_string(d));
    }
    r.ratios.push_back(rt);
  }
  return r;
}

std::vector<OrdinalCNF> standard_notation_set() {
  std::vector<OrdinalCNF> out;
  for (const char* s : {"0", "1", "2", "3", "w", "w+1", "w*2", "w^2", "w^2+w+1"}) out.push_back(OrdinalCNF::parse(s));
  return out;
}

}  // namespace redpow
