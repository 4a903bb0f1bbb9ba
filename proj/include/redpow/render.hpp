#pragma once

#include "redpow/json_io.hpp"

#include <string>

namespace redpow {

/// The solution-table figure: a header row naming m1, m2, ... with their
/// elements, then one row P1, P2, ... per prefix of the equation stream.
std::string render_table_text(const EmbedArtifact& a);
std::string render_table_csv(const EmbedArtifact& a);

/// One line per n: `n  {0, 1, w}`.
std::string render_ufamily(UFamily& family, const OrdinalCNF& alpha, std::size_t n_max);

}  // namespace redpow
