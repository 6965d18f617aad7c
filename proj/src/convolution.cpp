#include "hombra/convolution.hpp"

#include "hombra/errors.hpp"

namespace hombra {

namespace {

void require_hom(const ConvContext& ctx, const LinMap& f, const char* name) {
  if (f.rows() != ctx.target_dim() || f.cols() != ctx.source_dim()) {
    throw DimensionMismatch(std::string(name) + " must map C (dim " + std::to_string(ctx.source_dim()) +
                            ") to A (dim " + std::to_string(ctx.target_dim()) + ")");
  }
}

// (f * g)(x) for a sparse x in C.
SparseVec convolve_at(const AlgebraOps& alg, const CoalgebraOps& co, const SparseMap& f, const SparseMap& g,
                      const SparseVec& x) {
  const std::size_t nc = co.dim();
  SparseVec out;
  for (const auto& [idx, c] : co.coproduct(x)) {
    out.add_scaled(alg.product(f.column(idx / nc), g.column(idx % nc)), c);
  }
  return out;
}

LinMap columns_to_map(std::size_t rows, std::size_t cols, const std::function<SparseVec(std::size_t)>& col) {
  LinMap out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : col(j)) out(i, j) = v;
  }
  return out;
}

}  // namespace

LinMap RelativeInverseSolutions::reshape(const Vec& v) const {
  LinMap g(rows, cols);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t b = 0; b < cols; ++b) g(j, b) = v[j * cols + b];
  }
  return g;
}

LinMap RelativeInverseSolutions::particular() const { return reshape(space.particular); }

LinMap RelativeInverseSolutions::shifted(std::size_t i) const {
  return reshape(space.particular + space.nullspace_vector(i));
}

LinMap convolve(const ConvContext& ctx, const LinMap& f, const LinMap& g) {
  require_hom(ctx, f, "f");
  require_hom(ctx, g, "g");
  const AlgebraOps alg(ctx.algebra);
  const CoalgebraOps co(ctx.coalgebra);
  const SparseMap fs(f), gs(g);
  return columns_to_map(ctx.target_dim(), ctx.source_dim(),
                        [&](std::size_t x) { return convolve_at(alg, co, fs, gs, SparseVec::unit(x)); });
}

LinMap gamma(const ConvContext& ctx, const LinMap& f) {
  require_hom(ctx, f, "f");
  return compose(ctx.algebra.alpha, compose(f, ctx.coalgebra.beta));
}

LinMap convolution_unit(const ConvContext& ctx) {
  return compose(LinMap::column_map(ctx.algebra.unit), ctx.coalgebra.counit);
}

SparseSystem relative_inverse_system(const ConvContext& ctx, const LinMap& f, unsigned k) {
  require_hom(ctx, f, "f");
  ctx.algebra.validate();
  ctx.coalgebra.validate();
  const AlgebraOps alg(ctx.algebra);
  const CoalgebraOps co(ctx.coalgebra);
  const SparseMap fs(f);
  const std::size_t na = ctx.target_dim();
  const std::size_t nc = ctx.source_dim();

  // left[a * na + j]  = alpha^k(f(e_a) e_j)   multiplies g(j, b) for Delta-terms e_a (x) e_b
  // right[a * na + j] = alpha^k(e_j f(e_a))   multiplies g(j, b) for Delta-terms e_b (x) e_a
  std::vector<SparseVec> left(nc * na), right(nc * na);
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t j = 0; j < na; ++j) {
      left[a * na + j] = alg.alpha_pow(alg.product(fs.column(a), SparseVec::unit(j)), k);
      right[a * na + j] = alg.alpha_pow(alg.product(SparseVec::unit(j), fs.column(a)), k);
    }
  }

  SparseSystem system;
  system.num_vars = na * nc;
  for (int side = 0; side < 2; ++side) {
    const auto& table = side == 0 ? left : right;
    for (std::size_t x = 0; x < nc; ++x) {
      std::vector<SparseVec> rows(na);
      for (const auto& [idx, c] : co.coproduct_basis(x)) {
        const std::size_t a = side == 0 ? idx / nc : idx % nc;
        const std::size_t b = side == 0 ? idx % nc : idx / nc;
        for (std::size_t j = 0; j < na; ++j) {
          for (const auto& [i, v] : table[a * na + j]) rows[i].add(j * nc + b, c * v);
        }
      }
      const Scalar eps = co.counit(SparseVec::unit(x));
      for (std::size_t i = 0; i < na; ++i) system.add_equation(std::move(rows[i]), eps * ctx.algebra.unit[i]);
    }
  }
  return system;
}

std::optional<RelativeInverseSolutions> solve_relative_inverse_at(const ConvContext& ctx, const LinMap& f,
                                                                  unsigned k) {
  auto space = solve_affine(relative_inverse_system(ctx, f, k));
  if (!space) return std::nullopt;
  return RelativeInverseSolutions{k, ctx.target_dim(), ctx.source_dim(), std::move(*space)};
}

std::optional<RelativeInverseResult> solve_relative_inverse(const ConvContext& ctx, const LinMap& f,
                                                            unsigned k_max) {
  for (unsigned k = 0; k <= k_max; ++k) {
    if (auto sol = solve_relative_inverse_at(ctx, f, k)) {
      return RelativeInverseResult{sol->particular(), k, sol->space.nullspace_dim()};
    }
  }
  return std::nullopt;
}

bool is_relative_inverse(const ConvContext& ctx, const LinMap& f, const LinMap& g, unsigned k) {
  const LinMap ak = power(ctx.algebra.alpha, k);
  const LinMap unit = convolution_unit(ctx);
  return compose(ak, convolve(ctx, f, g)) == unit && compose(ak, convolve(ctx, g, f)) == unit;
}

std::optional<unsigned> pointwise_inverse_exponent(const ConvContext& ctx, const LinMap& f, const LinMap& g,
                                                   const Vec& x, unsigned k_max) {
  require_hom(ctx, f, "f");
  require_hom(ctx, g, "g");
  if (x.size() != ctx.source_dim()) throw DimensionMismatch("x must lie in C");
  const AlgebraOps alg(ctx.algebra);
  const CoalgebraOps co(ctx.coalgebra);
  const SparseMap fs(f), gs(g);
  const SparseVec xs = SparseVec::from_dense(x);
  SparseVec fg = convolve_at(alg, co, fs, gs, xs);
  SparseVec gf = convolve_at(alg, co, gs, fs, xs);
  SparseVec target = alg.unit();
  target *= co.counit(xs);
  for (unsigned k = 0; k <= k_max; ++k) {
    if (fg == target && gf == target) return k;
    fg = alg.alpha(fg);
    gf = alg.alpha(gf);
  }
  return std::nullopt;
}

AxiomReport check_convolution_laws(const ConvContext& ctx, const LinMap& f, const LinMap& g, unsigned n) {
  require_hom(ctx, f, "f");
  require_hom(ctx, g, "g");
  const std::size_t nc = ctx.source_dim();
  auto columns = [](const LinMap& m) {
    return [sm = SparseMap(m)](const std::vector<std::size_t>& t) { return sm.column(t[0]); };
  };
  const LinMap an = power(ctx.algebra.alpha, n);
  const LinMap unit = convolution_unit(ctx);
  const LinMap twisted = gamma(ctx, f);

  AxiomReport report;
  AxiomEntry law_i = compare_on_tuples("law_i_alpha_power", nc, 1, columns(compose(an, convolve(ctx, f, g))),
                                       columns(convolve(ctx, compose(an, f), compose(an, g))));
  law_i.hypothesis_met = is_alpha_multiplicative(ctx.algebra);
  if (!law_i.hypothesis_met) law_i.note = "hypothesis not met: alpha is not multiplicative";
  report.entries.push_back(std::move(law_i));
  report.entries.push_back(
      compare_on_tuples("law_ii_right_unit", nc, 1, columns(convolve(ctx, f, unit)), columns(twisted)));
  report.entries.push_back(
      compare_on_tuples("law_ii_left_unit", nc, 1, columns(convolve(ctx, unit, f)), columns(twisted)));
  return report;
}

}  // namespace hombra
