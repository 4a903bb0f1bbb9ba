#pragma once

#include "redpow/models.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace redpow {

struct AxiomResult {
  int id = 0;
  std::string statement;
  std::uint64_t tested = 0;
  std::uint64_t passed = 0;
  /// Instances whose hypothesis was false (counted as passed).
  std::uint64_t vacuous = 0;
  /// First failing instantiation, if any.
  std::optional<std::string> counterexample;
};

struct AxiomReport {
  std::string model;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> axioms;

  bool all_passed() const {
    for (const auto& a : axioms) {
      if (a.passed != a.tested) return false;
    }
    return true;
  }
};

inline const std::array<const char*, 15>& axiom_statements() {
  static const std::array<const char*, 15> kStatements = {
      "(x+y)+z=x+(y+z)",
      "x+y=y+x",
      "(x*y)*z=x*(y*z)",
      "x*y=y*x",
      "x*(y+z)=x*y+x*z",
      "x+0=x and x*0=0",
      "x*1=x",
      "x<y and y<z -> x<z",
      "x<=x",
      "x<y or x=y or y<x (exactly one)",
      "x<y -> x+z<y+z",
      "0<z and x<y -> x*z<y*z",
      "x<y -> exists z (x+z=y)",
      "0<1 and (x>0 -> x>=1)",
      "x>=0",
  };
  return kStatements;
}

/// Samples `samples` instantiations per axiom. Order hypotheses are steered
/// toward being true by sorting the sampled values; instances whose hypothesis
/// still fails are counted as vacuous passes.
template <ArithmeticModel M>
AxiomReport check_axioms(const M& model, const std::string& name, std::uint64_t samples, std::uint64_t seed) {
  using E = typename M::Element;
  std::mt19937_64 rng(seed);
  AxiomReport report{name, samples, seed, {}};
  const auto& statements = axiom_statements();
  for (int i = 0; i < 15; ++i) report.axioms.push_back({i + 1, statements[static_cast<std::size_t>(i)], 0, 0, 0, {}});

  auto eq = [&](const E& a, const E& b) { return model.le(a, b) && model.le(b, a); };
  auto lt = [&](const E& a, const E& b) { return model.le(a, b) && !model.le(b, a); };
  auto sort_asc = [&](E& a, E& b) {
    if (lt(b, a)) std::swap(a, b);
  };
  const E zero = model.zero();
  const E one = model.one();

  for (std::uint64_t s = 0; s < samples; ++s) {
    E x = model.sample(rng);
    E y = model.sample(rng);
    E z = model.sample(rng);
    auto record = [&](int id, bool ok, bool vacuous = false) {
      auto& r = report.axioms[static_cast<std::size_t>(id - 1)];
      ++r.tested;
      if (vacuous) ++r.vacuous;
      if (ok) {
        ++r.passed;
      } else if (!r.counterexample) {
        r.counterexample = "x=" + model.show(x) + ", y=" + model.show(y) + ", z=" + model.show(z);
      }
    };
    record(1, eq(model.add(model.add(x, y), z), model.add(x, model.add(y, z))));
    record(2, eq(model.add(x, y), model.add(y, x)));
    record(3, eq(model.mul(model.mul(x, y), z), model.mul(x, model.mul(y, z))));
    record(4, eq(model.mul(x, y), model.mul(y, x)));
    record(5, eq(model.mul(x, model.add(y, z)), model.add(model.mul(x, y), model.mul(x, z))));
    record(6, eq(model.add(x, zero), x) && eq(model.mul(x, zero), zero));
    record(7, eq(model.mul(x, one), x));
    {
      E a = x, b = y, c = z;
      sort_asc(a, b);
      sort_asc(b, c);
      sort_asc(a, b);
      const bool hyp = lt(a, b) && lt(b, c);
      record(8, !hyp || lt(a, c), !hyp);
    }
    record(9, model.le(x, x));
    {
      const int holds = int(lt(x, y)) + int(eq(x, y)) + int(lt(y, x));
      record(10, holds == 1);
    }
    {
      E a = x, b = y;
      sort_asc(a, b);
      const bool hyp = lt(a, b);
      record(11, !hyp || lt(model.add(a, z), model.add(b, z)), !hyp);
      E c = lt(zero, z) ? z : model.add(z, one);
      const bool hyp12 = lt(zero, c) && hyp;
      record(12, !hyp12 || lt(model.mul(a, c), model.mul(b, c)), !hyp12);
      bool ok13 = true;
      if (hyp) {
        auto w = model.minus(a, b);
        ok13 = w.has_value() && eq(model.add(a, *w), b);
      }
      record(13, ok13, !hyp);
    }
    record(14, lt(zero, one) && (!lt(zero, x) || model.le(one, x)), !lt(zero, x));
    record(15, model.le(zero, x));
  }
  return report;
}

inline AxiomReport check_axioms(const ModelHandle& handle, std::uint64_t samples, std::uint64_t seed) {
  return std::visit([&](const auto& m) { return check_axioms(m, handle.name(), samples, seed); }, handle.model);
}

}  // namespace redpow
