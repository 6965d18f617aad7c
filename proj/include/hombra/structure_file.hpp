#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hombra/structures.hpp"

namespace hombra {

/// In-memory form of a structure file. The algebra and coalgebra halves are each
/// optional so that plain Hom-algebras and Hom-coalgebras can be stored too.
struct StructureFile {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::optional<HomAlgebra> algebra;
  std::optional<HomCoalgebra> coalgebra;
  std::optional<LinMap> antipode;
  std::optional<unsigned> antipode_exponent;
  std::map<std::string, Scalar> params;

  /// Throws DimensionMismatch naming the missing part.
  [[nodiscard]] HomBialgebra bialgebra() const;
  [[nodiscard]] HomHopfCandidate hopf() const;

  static StructureFile of(const HomBialgebra& b, std::vector<std::string> basis = {});
  static StructureFile of(const HomHopfCandidate& h, std::vector<std::string> basis = {});

  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

/// Throws ParseError (with a byte offset or a JSON pointer to the bad value),
/// DivisionByZero or DimensionMismatch.
StructureFile parse_structure(std::string_view text);
StructureFile load_structure(const std::string& path);

/// Canonical text: keys sorted, nested arrays one element per line. Parsing the
/// output and emitting again reproduces it byte for byte.
std::string emit_structure(const StructureFile& s);
void save_structure(const StructureFile& s, const std::string& path);

/// e1, e2, ... when no names are given.
std::vector<std::string> default_basis(std::size_t n);

}  // namespace hombra
