#pragma once

#include "redpow/bigint.hpp"
#include "redpow/poly_elem.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace redpow {

/// An LA structure the axiom checker can instantiate.
template <typename M>
concept ArithmeticModel = requires(const M& m, const typename M::Element& a, std::mt19937_64& rng) {
  { m.zero() } -> std::convertible_to<typename M::Element>;
  { m.one() } -> std::convertible_to<typename M::Element>;
  { m.add(a, a) } -> std::convertible_to<typename M::Element>;
  { m.mul(a, a) } -> std::convertible_to<typename M::Element>;
  { m.le(a, a) } -> std::convertible_to<bool>;
  { m.minus(a, a) } -> std::convertible_to<std::optional<typename M::Element>>;
  { m.sample(rng) } -> std::convertible_to<typename M::Element>;
  { m.show(a) } -> std::convertible_to<std::string>;
};

/// The standard model N. Samples are uniform on [0, max_sample], with 0 and 1
/// drawn more often.
struct NatModel {
  using Element = BigInt;
  std::uint64_t max_sample = 1000;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool le(const Element& a, const Element& b) const { return a <= b; }
  std::optional<Element> minus(const Element& a, const Element& b) const {
    if (a > b) return std::nullopt;
    return Element(b - a);
  }
  Element sample(std::mt19937_64& rng) const;
  std::string show(const Element& a) const { return a.str(); }
};

/// The nonnegative part of Z[X]. Samples: degree <= max_degree, coefficients
/// in [-max_coeff, max_coeff], rejection-sampled into Z[X]+.
struct PolySemiring {
  using Element = PolyElem;
  int max_degree = 4;
  std::int64_t max_coeff = 20;

  Element zero() const { return {}; }
  Element one() const { return PolyElem::constant(1); }
  Element add(const Element& a, const Element& b) const { return poly_add(a, b); }
  Element mul(const Element& a, const Element& b) const { return poly_mul(a, b); }
  bool le(const Element& a, const Element& b) const { return poly_le(a, b); }
  std::optional<Element> minus(const Element& a, const Element& b) const { return poly_minus(a, b); }
  Element sample(std::mt19937_64& rng) const;
  std::string show(const Element& a) const { return a.to_string(); }
};

enum class ModelKind { StandardNat, PolySemiring };

/// Runtime selection of a concrete model.
struct ModelHandle {
  ModelKind kind = ModelKind::StandardNat;
  std::variant<NatModel, PolySemiring> model;

  static ModelHandle standard_nat(NatModel m = {}) { return {ModelKind::StandardNat, m}; }
  static ModelHandle poly_semiring(PolySemiring m = {}) { return {ModelKind::PolySemiring, m}; }
  std::string name() const { return kind == ModelKind::StandardNat ? "nat" : "poly"; }
};

}  // namespace redpow
