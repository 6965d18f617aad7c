#include "hombra/structures.hpp"

#include <algorithm>

#include "hombra/errors.hpp"

namespace hombra {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

void require_shape(const LinMap& f, std::size_t rows, std::size_t cols, const std::string& name) {
  require(f.rows() == rows && f.cols() == cols,
          name + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
              std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
}

}  // namespace

bool Truncation::within(std::initializer_list<std::size_t> basis_indices) const {
  unsigned total = 0;
  for (const auto i : basis_indices) total += degree.at(i);
  return total <= max_degree;
}

void HomAlgebra::validate() const {
  require(dim > 0, "dimension must be positive");
  require_shape(mul, dim, dim * dim, "mul");
  require(unit.size() == dim, "unit must have length " + std::to_string(dim));
  require_shape(alpha, dim, dim, "alpha");
  if (truncation) require(truncation->degree.size() == dim, "truncation degrees must have length dim");
}

void HomCoalgebra::validate() const {
  require(dim > 0, "dimension must be positive");
  require_shape(comul, dim * dim, dim, "comul");
  require_shape(counit, 1, dim, "counit");
  require_shape(beta, dim, dim, "beta");
}

void HomBialgebra::validate() const {
  algebra.validate();
  coalgebra.validate();
  require(algebra.dim == coalgebra.dim, "algebra and coalgebra dimensions differ");
}

void HomHopfCandidate::validate() const {
  bialgebra.validate();
  require_shape(antipode, dim(), dim(), "antipode");
}

bool AxiomReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const AxiomEntry& e) { return e.verdict == Verdict::Pass; });
}

const AxiomEntry* AxiomReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void AxiomReport::append(const AxiomReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::optional<Witness> first_mismatch(std::size_t dim, unsigned arity, const TupleFn& lhs, const TupleFn& rhs,
                                      const TupleFilter& keep, std::size_t* checked, std::size_t* skipped) {
  std::vector<std::size_t> idx(arity, 0);
  std::size_t n_checked = 0;
  std::size_t n_skipped = 0;
  std::optional<Witness> found;
  bool done = arity > 0 && dim == 0;
  while (!done) {
    if (keep && !keep(idx)) {
      ++n_skipped;
    } else {
      ++n_checked;
      SparseVec l = lhs(idx);
      SparseVec r = rhs(idx);
      if (!(l == r)) {
        found = Witness{idx, std::move(l), std::move(r)};
        break;
      }
    }
    // last index runs fastest
    done = true;
    for (std::size_t pos = arity; pos-- > 0;) {
      if (++idx[pos] < dim) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
  }
  if (checked) *checked = n_checked;
  if (skipped) *skipped = n_skipped;
  return found;
}

AxiomEntry compare_on_tuples(std::string name, std::size_t dim, unsigned arity, const TupleFn& lhs,
                             const TupleFn& rhs, const TupleFilter& keep) {
  AxiomEntry e;
  e.name = std::move(name);
  e.witness = first_mismatch(dim, arity, lhs, rhs, keep, &e.checked, &e.skipped);
  e.verdict = e.witness ? Verdict::Fail : Verdict::Pass;
  if (e.skipped > 0) e.note = "truncated: " + std::to_string(e.skipped) + " tuples above the degree cut skipped";
  return e;
}

AlgebraOps::AlgebraOps(const HomAlgebra& a)
    : dim_(a.dim), mul_(a.mul), unit_(SparseVec::from_dense(a.unit)), alpha_(a.alpha), truncation_(a.truncation) {}

SparseVec AlgebraOps::product(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) out.add_scaled(mul_.column(i * dim_ + j), a * b);
  }
  return out;
}

SparseVec AlgebraOps::alpha_pow(const SparseVec& x, unsigned k) const {
  SparseVec out = x;
  for (unsigned i = 0; i < k; ++i) out = alpha_.apply(out);
  return out;
}

SparseVec AlgebraOps::tensor_product(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [p, a] : x) {
    for (const auto& [q, b] : y) {
      const SparseVec left = product_basis(p / dim_, q / dim_);
      const SparseVec right = product_basis(p % dim_, q % dim_);
      out.add_scaled(tensor(left, right, dim_), a * b);
    }
  }
  return out;
}

CoalgebraOps::CoalgebraOps(const HomCoalgebra& c) : dim_(c.dim), comul_(c.comul), counit_(c.counit), beta_(c.beta) {}

Scalar CoalgebraOps::counit(const SparseVec& x) const { return counit_.apply(x).get(0); }

SparseVec scalar_vec(const Scalar& s) {
  SparseVec v;
  v.add(0, s);
  return v;
}

AxiomReport check_axioms(const HomAlgebra& a) {
  a.validate();
  const AlgebraOps ops(a);
  const std::size_t n = a.dim;
  auto e = [](std::size_t i) { return SparseVec::unit(i); };
  AxiomReport report;

  report.entries.push_back(compare_on_tuples(
      "hom_associativity", n, 3,
      [&](const auto& t) { return ops.product(ops.product_basis(t[0], t[1]), ops.alpha(e(t[2]))); },
      [&](const auto& t) { return ops.product(ops.alpha(e(t[0])), ops.product_basis(t[1], t[2])); },
      [&](const auto& t) { return ops.keeps({t[0], t[1], t[2]}); }));
  report.entries.push_back(compare_on_tuples(
      "unit_left", n, 1, [&](const auto& t) { return ops.product(ops.unit(), e(t[0])); },
      [&](const auto& t) { return ops.alpha(e(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "unit_right", n, 1, [&](const auto& t) { return ops.product(e(t[0]), ops.unit()); },
      [&](const auto& t) { return ops.alpha(e(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "unit_alpha", n, 0, [&](const auto&) { return ops.alpha(ops.unit()); },
      [&](const auto&) { return ops.unit(); }));
  return report;
}

AxiomReport check_axioms(const HomCoalgebra& c) {
  c.validate();
  const CoalgebraOps ops(c);
  const std::size_t n = c.dim;
  const SparseMap id(LinMap::identity(n));
  AxiomReport report;

  report.entries.push_back(compare_on_tuples(
      "hom_coassociativity", n, 1,
      [&](const auto& t) { return apply_kron(ops.comul_map(), ops.beta_map(), ops.coproduct_basis(t[0])); },
      [&](const auto& t) { return apply_kron(ops.beta_map(), ops.comul_map(), ops.coproduct_basis(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "counit_left", n, 1, [&](const auto& t) { return apply_left(ops.counit_map(), n, ops.coproduct_basis(t[0])); },
      [&](const auto& t) { return ops.beta(SparseVec::unit(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "counit_right", n, 1,
      [&](const auto& t) { return apply_right(n, ops.counit_map(), ops.coproduct_basis(t[0])); },
      [&](const auto& t) { return ops.beta(SparseVec::unit(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "counit_beta", n, 1, [&](const auto& t) { return scalar_vec(ops.counit(ops.beta(SparseVec::unit(t[0])))); },
      [&](const auto& t) { return scalar_vec(ops.counit(SparseVec::unit(t[0]))); }));
  return report;
}

AxiomReport check_axioms(const HomBialgebra& b) {
  b.validate();
  AxiomReport report = check_axioms(b.algebra);
  report.append(check_axioms(b.coalgebra));

  const AlgebraOps alg(b.algebra);
  const CoalgebraOps co(b.coalgebra);
  const std::size_t n = b.dim();
  auto e = [](std::size_t i) { return SparseVec::unit(i); };
  auto keep_pair = [&](const std::vector<std::size_t>& t) { return alg.keeps({t[0], t[1]}); };

  report.entries.push_back(compare_on_tuples(
      "comul_multiplicative", n, 2, [&](const auto& t) { return co.coproduct(alg.product_basis(t[0], t[1])); },
      [&](const auto& t) { return alg.tensor_product(co.coproduct_basis(t[0]), co.coproduct_basis(t[1])); },
      keep_pair));
  report.entries.push_back(compare_on_tuples(
      "comul_unit", n, 0, [&](const auto&) { return co.coproduct(alg.unit()); },
      [&](const auto&) { return tensor(alg.unit(), alg.unit(), n); }));
  report.entries.push_back(compare_on_tuples(
      "counit_multiplicative", n, 2,
      [&](const auto& t) { return scalar_vec(co.counit(alg.product_basis(t[0], t[1]))); },
      [&](const auto& t) { return scalar_vec(co.counit(e(t[0])) * co.counit(e(t[1]))); }, keep_pair));
  report.entries.push_back(compare_on_tuples(
      "counit_unit", n, 0, [&](const auto&) { return scalar_vec(co.counit(alg.unit())); },
      [&](const auto&) { return scalar_vec(Scalar(1)); }));
  report.entries.push_back(compare_on_tuples(
      "counit_alpha", n, 1, [&](const auto& t) { return scalar_vec(co.counit(alg.alpha(e(t[0])))); },
      [&](const auto& t) { return scalar_vec(co.counit(e(t[0]))); }));
  return report;
}

bool is_alpha_multiplicative(const HomAlgebra& a) {
  a.validate();
  const AlgebraOps alg(a);
  return !first_mismatch(
              a.dim, 2, [&](const auto& t) { return alg.alpha(alg.product_basis(t[0], t[1])); },
              [&](const auto& t) {
                return alg.product(alg.alpha(SparseVec::unit(t[0])), alg.alpha(SparseVec::unit(t[1])));
              },
              [&](const auto& t) { return alg.keeps({t[0], t[1]}); })
              .has_value();
}

FlagSet compute_flags(const HomBialgebra& b) {
  b.validate();
  const AlgebraOps alg(b.algebra);
  const CoalgebraOps co(b.coalgebra);
  const std::size_t n = b.dim();
  auto e = [](std::size_t i) { return SparseVec::unit(i); };
  auto holds = [&](unsigned arity, const TupleFn& l, const TupleFn& r, const TupleFilter& keep = {}) {
    return !first_mismatch(n, arity, l, r, keep).has_value();
  };

  FlagSet flags;
  flags.alpha_multiplicative = is_alpha_multiplicative(b.algebra);
  flags.beta_comultiplicative = holds(
      1, [&](const auto& t) { return co.coproduct(co.beta(e(t[0]))); },
      [&](const auto& t) { return apply_kron(co.beta_map(), co.beta_map(), co.coproduct_basis(t[0])); });
  flags.alpha_invertible = is_invertible(b.algebra.alpha);
  flags.beta_invertible = is_invertible(b.coalgebra.beta);
  flags.commutative = holds(
      2, [&](const auto& t) { return alg.product_basis(t[0], t[1]); },
      [&](const auto& t) { return alg.product_basis(t[1], t[0]); });
  flags.cocommutative = holds(
      1, [&](const auto& t) { return flip(co.coproduct_basis(t[0]), n, n); },
      [&](const auto& t) { return co.coproduct_basis(t[0]); });
  return flags;
}

AxiomReport is_hom_bialgebra_morphism(const LinMap& f, const HomBialgebra& src, const HomBialgebra& dst) {
  src.validate();
  dst.validate();
  require_shape(f, dst.dim(), src.dim(), "morphism");
  const AlgebraOps a_src(src.algebra), a_dst(dst.algebra);
  const CoalgebraOps c_src(src.coalgebra), c_dst(dst.coalgebra);
  const SparseMap fs(f);
  const std::size_t n = src.dim();
  auto e = [](std::size_t i) { return SparseVec::unit(i); };
  AxiomReport report;

  report.entries.push_back(compare_on_tuples(
      "multiplicative", n, 2, [&](const auto& t) { return fs.apply(a_src.product_basis(t[0], t[1])); },
      [&](const auto& t) { return a_dst.product(fs.column(t[0]), fs.column(t[1])); },
      [&](const auto& t) { return a_src.keeps({t[0], t[1]}); }));
  report.entries.push_back(compare_on_tuples(
      "unit", n, 0, [&](const auto&) { return fs.apply(a_src.unit()); }, [&](const auto&) { return a_dst.unit(); }));
  report.entries.push_back(compare_on_tuples(
      "commutes_alpha", n, 1, [&](const auto& t) { return fs.apply(a_src.alpha(e(t[0]))); },
      [&](const auto& t) { return a_dst.alpha(fs.column(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "comultiplicative", n, 1, [&](const auto& t) { return apply_kron(fs, fs, c_src.coproduct_basis(t[0])); },
      [&](const auto& t) { return c_dst.coproduct(fs.column(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "counit", n, 1, [&](const auto& t) { return scalar_vec(c_dst.counit(fs.column(t[0]))); },
      [&](const auto& t) { return scalar_vec(c_src.counit(e(t[0]))); }));
  report.entries.push_back(compare_on_tuples(
      "commutes_beta", n, 1, [&](const auto& t) { return fs.apply(c_src.beta(e(t[0]))); },
      [&](const auto& t) { return c_dst.beta(fs.column(t[0])); }));
  return report;
}

}  // namespace hombra
