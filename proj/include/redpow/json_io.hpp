#pragma once

#include "redpow/axioms.hpp"
#include "redpow/budget.hpp"
#include "redpow/dio_solver.hpp"
#include "redpow/embedding_countable.hpp"
#include "redpow/poly_elem.hpp"
#include "redpow/reduced_power.hpp"
#include "redpow/star.hpp"
#include "redpow/ufamily.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace redpow {

using nlohmann::json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
json big_to_json(const BigInt& v);
BigInt big_from_json(const json& j);

/// Coefficient list [c0, c1, ...]; reading also accepts human syntax strings.
json poly_to_json(const PolyElem& p);
PolyElem poly_from_json(const json& j);

/// List of formula strings.
DioSystem system_from_json(const json& j);
json assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const json& j);

/// {"sets": [{"elements": [..], "from": t}, ...], "tail": "tails" | "diagonal" | "constant" | null}
RegularFamily family_from_json(const json& j);
json family_to_json(const RegularFamily& f);

/// Object mapping ordinal text to element.
std::map<OrdinalCNF, PolyElem> ordinal_assignment_from_json(const json& j);

json to_json(const AxiomReport& r);
json to_json(const FormulaBudget& b);
json to_json(const LemmaReport& r);
json to_json(const UPlan& p);
json to_json(const StarRun& r);
json to_json(const EmbeddingReport& r);
json to_json(const GrowthReport& r);

/// Everything `embed` produces: elements with their provenance, the equation
/// stream and the table.
struct EmbedArtifact {
  ElementEnumeration elements;
  TrueEquationStream stream;
  SolutionTable table;
};

json to_json(const EmbedArtifact& a);
EmbedArtifact embed_artifact_from_json(const json& j);

/// Parses a file; throws std::runtime_error naming the path.
json read_json_file(const std::string& path);

}  // namespace redpow
