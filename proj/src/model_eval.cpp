#include "redpow/model_eval.hpp"

#include <algorithm>
#include <array>

namespace redpow {

namespace {

// Identity tests first compare values modulo a Mersenne prime at a few
// points; anything that survives is confirmed by exact arithmetic.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::array<std::uint64_t, 3> kPoints = {1'000'003, 998'244'353, 123'456'789'011};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t reduce(const BigInt& v) {
  BigInt r = v % BigInt(kPrime);
  if (r < 0) r += BigInt(kPrime);
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> residues(const PolyElem& p) {
  std::vector<std::uint64_t> out;
  out.reserve(kPoints.size());
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(reduce(c));
  for (auto x : kPoints) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = addmod(mulmod(acc, x), *it);
    out.push_back(acc);
  }
  return out;
}

// Side values at each point; `value_of(v)` gives residues of variable v.
template <typename Lookup>
bool sides_agree_mod(const EquationForm& f, Lookup&& value_of) {
  for (std::size_t pt = 0; pt < kPoints.size(); ++pt) {
    auto side = [&](const PolyForm& p) {
      std::uint64_t acc = 0;
      for (const auto& [mono, coeff] : p.entries()) {
        std::uint64_t prod = reduce(coeff);
        for (auto v : mono) prod = mulmod(prod, value_of(v)[pt]);
        acc = addmod(acc, prod);
      }
      return acc;
    };
    if (side(f.lhs) != side(f.rhs)) return false;
  }
  return true;
}

}  // namespace

std::vector<PolyElem> witness_candidates(const PolyWitnessSpace& space) {
  std::vector<PolyElem> out;
  for (int d = 0; d <= space.max_degree; ++d) {
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<std::int64_t> c(n, -space.max_coeff);
    for (;;) {
      const bool valid = d == 0 ? c[0] >= 0 : c.back() > 0;
      if (valid) {
        std::vector<BigInt> bc(c.begin(), c.end());
        out.push_back(PolyElem::from_coeffs(std::move(bc)));
      }
      std::size_t i = 0;
      while (i < n && c[i] == space.max_coeff) c[i++] = -space.max_coeff;
      if (i == n) break;
      ++c[i];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool holds_in_poly_exact(const EquationForm& f, const std::vector<PolyElem>& free_values,
                         const std::vector<PolyElem>& bound_values) {
  auto value_of = [&](std::uint32_t v) -> const PolyElem& {
    return v < f.bound_count ? bound_values.at(v) : free_values.at(v - f.bound_count);
  };
  auto side = [&](const PolyForm& p) {
    PolyElem acc;
    for (const auto& [mono, coeff] : p.entries()) {
      PolyElem prod = PolyElem::constant(coeff);
      for (auto v : mono) prod = poly_mul(prod, value_of(v));
      acc = poly_add(acc, prod);
    }
    return acc;
  };
  return side(f.lhs) == side(f.rhs);
}

PolyModelEvaluator::PolyModelEvaluator(PolyWitnessSpace space)
    : space_(space), candidates_(witness_candidates(space)) {
  for (const auto& c : candidates_) candidate_residues_.push_back(residues(c));
}

bool PolyModelEvaluator::holds(const EquationForm& f, const std::vector<PolyElem>& free_values) const {
  if (!f.is_quantifier_free()) throw std::invalid_argument("holds() needs a quantifier-free formula");
  std::vector<std::vector<std::uint64_t>> free_res;
  free_res.reserve(free_values.size());
  for (const auto& p : free_values) free_res.push_back(residues(p));
  auto value_of = [&](std::uint32_t v) -> const std::vector<std::uint64_t>& { return free_res.at(v); };
  if (!sides_agree_mod(f, value_of)) return false;
  return holds_in_poly_exact(f, free_values);
}

std::optional<std::vector<PolyElem>> PolyModelEvaluator::witness(const EquationForm& f,
                                                                 const std::vector<PolyElem>& free_values) const {
  const std::uint32_t k = f.bound_count;
  std::vector<std::vector<std::uint64_t>> free_res;
  free_res.reserve(free_values.size());
  for (const auto& p : free_values) free_res.push_back(residues(p));
  if (k == 0) {
    if (holds(f, free_values)) return std::vector<PolyElem>{};
    return std::nullopt;
  }
  std::vector<std::size_t> pick(k, 0);
  auto value_of = [&](std::uint32_t v) -> const std::vector<std::uint64_t>& {
    return v < k ? candidate_residues_[pick[v]] : free_res.at(v - k);
  };
  std::uint64_t tried = 0;
  for (;;) {
    if (++tried > space_.max_tuples) return std::nullopt;
    if (sides_agree_mod(f, value_of)) {
      std::vector<PolyElem> bound;
      for (auto i : pick) bound.push_back(candidates_[i]);
      if (holds_in_poly_exact(f, free_values, bound)) return bound;
    }
    std::uint32_t i = k;
    while (i > 0) {
      --i;
      if (++pick[i] < candidates_.size()) break;
      pick[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

bool PolyModelEvaluator::certified_true(const EquationForm& f, const std::vector<PolyElem>& free_values) const {
  return f.is_quantifier_free() ? holds(f, free_values) : witness(f, free_values).has_value();
}

}  // namespace redpow
