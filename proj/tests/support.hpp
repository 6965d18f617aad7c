#pragma once

#include <map>
#include <random>
#include <string>

#include "hombra/linalg.hpp"
#include "hombra/structure_file.hpp"
#include "hombra/structures.hpp"

namespace hombra::test {

inline std::string fixture_path(const std::string& name) { return std::string(HOMBRA_FIXTURES) + "/" + name + ".json"; }
inline StructureFile fixture(const std::string& name) { return load_structure(fixture_path(name)); }

inline Scalar small_scalar(std::mt19937& rng, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 3);
  return {num(rng), den(rng)};
}

inline LinMap random_map(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  LinMap f(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng)) f(r, c) = small_scalar(rng);
    }
  }
  return f;
}

inline Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = small_scalar(rng);
  return v;
}

// Whole-map oracle: every axiom as one equation between dense composites.
// Shares no code with the tuple-by-tuple checker beyond compose/kron.
inline std::map<std::string, bool> dense_algebra_axioms(const HomAlgebra& a) {
  const std::size_t n = a.dim;
  const LinMap id = LinMap::identity(n);
  const LinMap eta = LinMap::column_map(a.unit);
  return {
      {"hom_associativity", compose(a.mul, kron(a.alpha, a.mul)) == compose(a.mul, kron(a.mul, a.alpha))},
      {"unit_left", compose(a.mul, kron(eta, id)) == a.alpha},
      {"unit_right", compose(a.mul, kron(id, eta)) == a.alpha},
      {"unit_alpha", compose(a.alpha, eta) == eta},
  };
}

inline std::map<std::string, bool> dense_coalgebra_axioms(const HomCoalgebra& c) {
  const LinMap id = LinMap::identity(c.dim);
  return {
      {"hom_coassociativity", compose(kron(c.beta, c.comul), c.comul) == compose(kron(c.comul, c.beta), c.comul)},
      {"counit_left", compose(kron(c.counit, id), c.comul) == c.beta},
      {"counit_right", compose(kron(id, c.counit), c.comul) == c.beta},
      {"counit_beta", compose(c.counit, c.beta) == c.counit},
  };
}

inline std::map<std::string, bool> dense_bialgebra_axioms(const HomBialgebra& b) {
  const HomAlgebra& a = b.algebra;
  const HomCoalgebra& c = b.coalgebra;
  const std::size_t n = a.dim;
  const LinMap id = LinMap::identity(n);
  const LinMap eta = LinMap::column_map(a.unit);
  const LinMap middle = kron(kron(id, flip(n, n)), id);
  auto out = dense_algebra_axioms(a);
  out.merge(dense_coalgebra_axioms(c));
  out["comul_multiplicative"] = compose(c.comul, a.mul) == compose(kron(a.mul, a.mul), compose(middle, kron(c.comul, c.comul)));
  out["comul_unit"] = compose(c.comul, eta) == kron(eta, eta);
  out["counit_multiplicative"] = compose(c.counit, a.mul) == kron(c.counit, c.counit);
  out["counit_unit"] = compose(c.counit, eta) == LinMap::row(Vec{Scalar(1)});
  out["counit_alpha"] = compose(c.counit, a.alpha) == c.counit;
  return out;
}

inline std::map<std::string, bool> verdicts(const AxiomReport& r) {
  std::map<std::string, bool> out;
  for (const auto& e : r.entries) out[e.name] = e.verdict == Verdict::Pass;
  return out;
}

}  // namespace hombra::test
