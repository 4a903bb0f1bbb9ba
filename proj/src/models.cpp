#include "redpow/models.hpp"

namespace redpow {

NatModel::Element NatModel::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (r == 0) return 0;
  if (r == 1) return 1;
  std::uniform_int_distribution<std::uint64_t> dist(0, max_sample);
  return BigInt(dist(rng));
}

PolySemiring::Element PolySemiring::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (r == 0) return {};
  if (r == 1) return PolyElem::constant(1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(-max_coeff, max_coeff);
  for (;;) {
    const int d = deg(rng);
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = coeff(rng);
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty() || c.back() > 0) return PolyElem::from_coeffs(std::move(c));
  }
}

}  // namespace redpow
