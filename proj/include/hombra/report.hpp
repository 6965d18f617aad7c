#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hombra/antipode.hpp"
#include "hombra/structures.hpp"

namespace hombra {

/// Everything one CLI run reports. Sections left empty are omitted.
struct Report {
  std::string source;
  std::string kind;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::optional<FlagSet> flags;
  AxiomReport axioms;
  std::optional<AxiomReport> strict;
  std::optional<RelativeAntipodeReport> relative;
  std::optional<PropositionSuite> propositions;
};

/// Key-sorted JSON, two-space indent, trailing newline.
std::string render_json(const Report& r);
/// Aligned plain-text tables.
std::string render_text(const Report& r);

/// "{0: 2, 1: -1}" style rendering of a sparse vector.
std::string describe(const SparseVec& v);

}  // namespace hombra
