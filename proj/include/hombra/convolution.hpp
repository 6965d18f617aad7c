#pragma once

#include <cstddef>
#include <optional>

#include "hombra/linalg.hpp"
#include "hombra/structures.hpp"

namespace hombra {

/// Hom(C, A) with the convolution product. Non-owning: the referenced
/// structures must outlive the context.
struct ConvContext {
  const HomCoalgebra& coalgebra;
  const HomAlgebra& algebra;

  static ConvContext of(const HomBialgebra& b) { return {b.coalgebra, b.algebra}; }
  [[nodiscard]] std::size_t source_dim() const { return coalgebra.dim; }
  [[nodiscard]] std::size_t target_dim() const { return algebra.dim; }
};

struct RelativeInverseResult {
  LinMap inverse;
  unsigned exponent = 0;
  std::size_t nullspace_dim = 0;
};

/// Every solution of the relative-inverse system at one exponent. Unknown g(j, b)
/// (row j, column b) is variable j * dim(C) + b.
struct RelativeInverseSolutions {
  unsigned exponent = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  SolutionSpace space;

  [[nodiscard]] LinMap particular() const;
  /// particular + nullspace generator i.
  [[nodiscard]] LinMap shifted(std::size_t i) const;
  [[nodiscard]] LinMap reshape(const Vec& v) const;
};

/// f * g = m o (f (x) g) o Delta.
LinMap convolve(const ConvContext& ctx, const LinMap& f, const LinMap& g);
/// gamma(f) = alpha o f o beta.
LinMap gamma(const ConvContext& ctx, const LinMap& f);
/// eta o epsilon, the unit of the convolution algebra.
LinMap convolution_unit(const ConvContext& ctx);

/// Both equations alpha^k o (f * g) = eta o epsilon and alpha^k o (g * f) = eta o epsilon,
/// linear in the entries of g.
SparseSystem relative_inverse_system(const ConvContext& ctx, const LinMap& f, unsigned k);
std::optional<RelativeInverseSolutions> solve_relative_inverse_at(const ConvContext& ctx, const LinMap& f,
                                                                  unsigned k);
/// Smallest k <= k_max admitting a two-sided relative inverse; canonical solution.
std::optional<RelativeInverseResult> solve_relative_inverse(const ConvContext& ctx, const LinMap& f,
                                                            unsigned k_max);

bool is_relative_inverse(const ConvContext& ctx, const LinMap& f, const LinMap& g, unsigned k);

/// Smallest k <= k_max with alpha^k((f * g)(x)) = alpha^k((g * f)(x)) = epsilon(x) 1.
std::optional<unsigned> pointwise_inverse_exponent(const ConvContext& ctx, const LinMap& f, const LinMap& g,
                                                   const Vec& x, unsigned k_max);

/// law_i: alpha^n o (f * g) = alpha^n f * alpha^n g (meaningful for multiplicative alpha);
/// law_ii: f * (eta o epsilon) = alpha o f o beta = (eta o epsilon) * f.
AxiomReport check_convolution_laws(const ConvContext& ctx, const LinMap& f, const LinMap& g, unsigned n);

}  // namespace hombra
