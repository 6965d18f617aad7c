#include "hombra/antipode.hpp"

#include <algorithm>
#include <functional>

#include "hombra/errors.hpp"

namespace hombra {

namespace {

using Step = std::function<SparseVec(const SparseVec&)>;

// An identity lhs_k(t) = rhs_k(t) where lhs_{k+1} = step_lhs(lhs_k) and likewise
// for rhs; an empty step keeps that side fixed.
struct ExponentIdentity {
  std::size_t dim = 0;
  unsigned arity = 1;
  TupleFn lhs;
  TupleFn rhs;
  Step step_lhs;
  Step step_rhs;
  Step project;
  TupleFilter keep;
};

std::vector<std::vector<std::size_t>> tuples(std::size_t dim, unsigned arity, const TupleFilter& keep) {
  std::vector<std::vector<std::size_t>> out;
  first_mismatch(
      dim, arity,
      [&](const std::vector<std::size_t>& t) {
        out.push_back(t);
        return SparseVec();
      },
      [](const std::vector<std::size_t>&) { return SparseVec(); }, keep);
  return out;
}

void search_exponent(PropositionVerdict& v, const ExponentIdentity& id, unsigned k_max) {
  const auto all = tuples(id.dim, id.arity, id.keep);
  std::vector<SparseVec> lhs, rhs;
  lhs.reserve(all.size());
  rhs.reserve(all.size());
  for (const auto& t : all) {
    lhs.push_back(id.lhs(t));
    rhs.push_back(id.rhs(t));
  }
  auto proj = [&](const SparseVec& x) { return id.project ? id.project(x) : x; };
  for (unsigned k = 0; k <= k_max; ++k) {
    std::optional<Witness> bad;
    for (std::size_t i = 0; i < all.size() && !bad; ++i) {
      SparseVec l = proj(lhs[i]);
      SparseVec r = proj(rhs[i]);
      if (!(l == r)) bad = Witness{all[i], std::move(l), std::move(r)};
    }
    if (!bad) {
      v.min_exponent = k;
      return;
    }
    v.witness = std::move(bad);
    if (k == k_max) break;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (id.step_lhs) lhs[i] = id.step_lhs(lhs[i]);
      if (id.step_rhs) rhs[i] = id.step_rhs(rhs[i]);
    }
  }
  v.min_exponent.reset();
  v.note = "no exponent up to " + std::to_string(k_max);
}

// Everything a proposition records about its standing hypotheses.
struct Facts {
  FlagSet flags;
  bool bialgebra_axioms = false;
  bool relative_antipode = false;
  std::optional<unsigned> k_uniform;
};

Facts facts_of(const HomHopfCandidate& h, unsigned k_max) {
  h.validate();
  Facts f;
  f.flags = compute_flags(h.bialgebra);
  f.bialgebra_axioms = check_axioms(h.bialgebra).all_pass();
  const auto rel = verify_relative_antipode(h, k_max);
  f.relative_antipode = rel.all_pass();
  f.k_uniform = rel.k_uniform;
  return f;
}

std::map<std::string, bool> base_hypotheses(const Facts& f) {
  return {{"bialgebra_axioms", f.bialgebra_axioms}, {"relative_antipode", f.relative_antipode}};
}

void mark_hypotheses(PropositionVerdict& v) {
  if (v.hypotheses_met()) return;
  std::string missing;
  for (const auto& [name, met] : v.hypotheses) {
    if (!met) missing += (missing.empty() ? "" : ", ") + name;
  }
  const std::string label = "hypothesis not met: " + missing;
  v.note = v.note.empty() ? label : label + "; " + v.note;
}

// Sparse helpers shared by the checkers on one candidate.
struct Maps {
  explicit Maps(const HomHopfCandidate& h)
      : alg(h.bialgebra.algebra), co(h.bialgebra.coalgebra), s(h.antipode), n(h.dim()) {}

  SparseVec beta2(const SparseVec& x) const { return co.beta(co.beta(x)); }
  SparseVec alpha_tensor(const SparseVec& x) const { return apply_kron(alg.alpha_map(), alg.alpha_map(), x); }

  AlgebraOps alg;
  CoalgebraOps co;
  SparseMap s;
  std::size_t n;
};

SparseVec e(std::size_t i) { return SparseVec::unit(i); }

PropositionVerdict anti_algebra(const HomHopfCandidate& h, const Facts& f, unsigned k_max) {
  const Maps m(h);
  PropositionVerdict v;
  v.name = "anti_algebra";
  v.hypotheses = base_hypotheses(f);
  v.hypotheses["alpha_multiplicative"] = f.flags.alpha_multiplicative;
  auto keep = [&](const std::vector<std::size_t>& t) { return m.alg.keeps({t[0], t[1]}); };
  ExponentIdentity id;
  id.dim = m.n;
  id.arity = 2;
  id.lhs = [&](const auto& t) {
    return m.alg.alpha_pow(m.s.apply(m.alg.product(m.beta2(e(t[0])), m.beta2(e(t[1])))), 2);
  };
  id.rhs = [&](const auto& t) {
    return m.alg.alpha_pow(m.alg.product(m.s.apply(m.beta2(e(t[1]))), m.s.apply(m.beta2(e(t[0])))), 2);
  };
  id.step_lhs = id.step_rhs = [&](const SparseVec& x) { return m.alg.alpha(x); };
  id.keep = keep;
  search_exponent(v, id, k_max);
  if (f.flags.alpha_invertible && f.flags.beta_invertible) {
    v.strict.push_back(compare_on_tuples(
        "strict_anti_algebra", m.n, 2, [&](const auto& t) { return m.s.apply(m.alg.product_basis(t[0], t[1])); },
        [&](const auto& t) { return m.alg.product(m.s.column(t[1]), m.s.column(t[0])); }, keep));
  }
  mark_hypotheses(v);
  return v;
}

PropositionVerdict anti_coalgebra(const HomHopfCandidate& h, const Facts& f, unsigned k_max) {
  const Maps m(h);
  PropositionVerdict v;
  v.name = "anti_coalgebra";
  v.hypotheses = base_hypotheses(f);
  v.hypotheses["beta_comultiplicative"] = f.flags.beta_comultiplicative;
  // x |-> alpha^2 S beta^2 x, as a sparse map
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < m.n; ++i) cols.push_back(m.alg.alpha_pow(m.s.apply(m.beta2(e(i))), 2));
  const SparseMap twisted(m.n, std::move(cols));
  ExponentIdentity id;
  id.dim = m.n;
  id.arity = 1;
  id.lhs = [&](const auto& t) {
    return m.alpha_tensor(m.alpha_tensor(m.co.coproduct(m.s.apply(m.beta2(e(t[0]))))));
  };
  id.rhs = [&](const auto& t) { return apply_kron(twisted, twisted, flip(m.co.coproduct_basis(t[0]), m.n, m.n)); };
  id.step_lhs = id.step_rhs = [&](const SparseVec& x) { return m.alpha_tensor(x); };
  search_exponent(v, id, k_max);
  if (f.flags.alpha_invertible && f.flags.beta_invertible) {
    v.strict.push_back(compare_on_tuples(
        "strict_anti_coalgebra", m.n, 1, [&](const auto& t) { return m.co.coproduct(m.s.column(t[0])); },
        [&](const auto& t) { return apply_kron(m.s, m.s, flip(m.co.coproduct_basis(t[0]), m.n, m.n)); }));
  }
  mark_hypotheses(v);
  return v;
}

PropositionVerdict unitality(const HomHopfCandidate& h, const Facts& f, unsigned k_max) {
  const Maps m(h);
  PropositionVerdict v;
  v.name = "unitality";
  v.hypotheses = base_hypotheses(f);
  ExponentIdentity id;
  id.dim = m.n;
  id.arity = 0;
  id.lhs = [&](const auto&) { return m.alg.alpha(m.s.apply(m.alg.unit())); };
  id.rhs = [&](const auto&) { return m.alg.unit(); };
  id.step_lhs = [&](const SparseVec& x) { return m.alg.alpha(x); };
  search_exponent(v, id, k_max);
  mark_hypotheses(v);
  return v;
}

PropositionVerdict counitality(const HomHopfCandidate& h, const Facts& f, unsigned k_max) {
  const Maps m(h);
  PropositionVerdict v;
  v.name = "counitality";
  v.hypotheses = base_hypotheses(f);
  ExponentIdentity id;
  id.dim = m.n;
  id.arity = 1;
  id.lhs = [&](const auto& t) { return m.s.column(t[0]); };
  id.rhs = [&](const auto& t) { return e(t[0]); };
  id.step_lhs = [&](const SparseVec& x) { return m.alg.alpha(x); };
  id.project = [&](const SparseVec& x) { return scalar_vec(m.co.counit(x)); };
  search_exponent(v, id, k_max);
  mark_hypotheses(v);
  return v;
}

PropositionVerdict hopf_map(const std::string& name, const LinMap& f, const HomHopfCandidate& h,
                            const HomHopfCandidate& k, const Facts& facts_h, const Facts& facts_k,
                            unsigned k_max) {
  h.validate();
  k.validate();
  const AxiomReport morphism = is_hom_bialgebra_morphism(f, h.bialgebra, k.bialgebra);
  if (!morphism.all_pass()) {
    for (const auto& entry : morphism.entries) {
      if (entry.verdict == Verdict::Fail) {
        throw HypothesisFailed("not a Hom-bialgebra morphism: " + entry.name + " fails");
      }
    }
  }
  const Maps mh(h), mk(k);
  const SparseMap fs(f);
  PropositionVerdict v;
  v.name = name;
  v.hypotheses = {{"morphism", true},
                  {"bialgebra_axioms", facts_h.bialgebra_axioms && facts_k.bialgebra_axioms},
                  {"relative_antipode", facts_h.relative_antipode && facts_k.relative_antipode}};
  ExponentIdentity id;
  id.dim = mh.n;
  id.arity = 1;
  id.lhs = [&](const auto& t) { return fs.apply(mh.s.apply(mh.beta2(e(t[0])))); };
  id.rhs = [&](const auto& t) { return mk.s.apply(fs.apply(mh.beta2(e(t[0])))); };
  id.step_lhs = id.step_rhs = [&](const SparseVec& x) { return mk.alg.alpha(x); };
  search_exponent(v, id, k_max);
  if (facts_h.flags.alpha_invertible && facts_h.flags.beta_invertible && facts_k.flags.alpha_invertible &&
      facts_k.flags.beta_invertible) {
    v.strict.push_back(compare_on_tuples(
        "strict_hopf_map", mh.n, 1, [&](const auto& t) { return fs.apply(mh.s.column(t[0])); },
        [&](const auto& t) { return mk.s.apply(fs.column(t[0])); }));
  }
  mark_hypotheses(v);
  return v;
}

PropositionVerdict s_squared(const HomHopfCandidate& h, const Facts& f, unsigned k_max) {
  const Maps m(h);
  PropositionVerdict v;
  v.name = "s_squared";
  v.hypotheses = base_hypotheses(f);
  v.hypotheses["commutative_or_cocommutative"] = f.flags.commutative || f.flags.cocommutative;
  ExponentIdentity id;
  id.dim = m.n;
  id.arity = 1;
  id.lhs = [&](const auto& t) { return m.alg.alpha_pow(m.s.apply(m.s.apply(m.beta2(e(t[0])))), 2); };
  id.rhs = [&](const auto& t) { return m.alg.alpha_pow(m.beta2(e(t[0])), 2); };
  id.step_lhs = id.step_rhs = [&](const SparseVec& x) { return m.alg.alpha(x); };
  search_exponent(v, id, k_max);
  if (f.flags.alpha_invertible && f.flags.beta_invertible) {
    v.strict.push_back(compare_on_tuples(
        "strict_s_squared", m.n, 1, [&](const auto& t) { return m.s.apply(m.s.column(t[0])); },
        [&](const auto& t) { return e(t[0]); }));
  }
  mark_hypotheses(v);
  return v;
}

PropositionVerdict grouplike_inverse(const HomHopfCandidate& h, const Vec& g, const Facts& f, unsigned k_max,
                                     std::string name) {
  const GrouplikeCheck check = check_grouplike(h.bialgebra, g);
  if (!check.holds) throw HypothesisFailed("element is not group-like");
  const Maps m(h);
  const SparseVec gs = SparseVec::from_dense(g);
  const SparseVec sg = m.s.apply(gs);
  PropositionVerdict v;
  v.name = std::move(name);
  v.hypotheses = base_hypotheses(f);
  v.hypotheses["grouplike"] = true;
  ExponentIdentity id;
  id.dim = 2;
  id.arity = 1;
  // tuple (0) is S(g) g, tuple (1) is g S(g)
  id.lhs = [&](const auto& t) { return t[0] == 0 ? m.alg.product(sg, gs) : m.alg.product(gs, sg); };
  id.rhs = [&](const auto&) { return m.alg.unit(); };
  id.step_lhs = [&](const SparseVec& x) { return m.alg.alpha(x); };
  search_exponent(v, id, k_max);
  mark_hypotheses(v);
  return v;
}

PropositionVerdict primitive_image(const HomHopfCandidate& h, const Vec& p, const Facts& f, unsigned k_max,
                                   std::string name) {
  const PrimitiveCheck check = check_primitive(h.bialgebra, p);
  if (!check.holds) throw HypothesisFailed("element is not primitive");
  const Maps m(h);
  const SparseVec ps = SparseVec::from_dense(p);
  PropositionVerdict v;
  v.name = std::move(name);
  v.hypotheses = base_hypotheses(f);
  v.hypotheses["primitive"] = true;
  if (check.degenerate) v.note = "degenerate: h = 0";
  ExponentIdentity id;
  id.dim = m.n;
  id.arity = 0;
  id.lhs = [&](const auto&) { return m.alg.alpha(m.s.apply(ps)); };
  id.rhs = [&](const auto&) { return -m.alg.alpha(ps); };
  id.step_lhs = id.step_rhs = [&](const SparseVec& x) { return m.alg.alpha(x); };
  search_exponent(v, id, k_max);
  mark_hypotheses(v);
  return v;
}

}  // namespace

bool PropositionVerdict::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& kv) { return kv.second; });
}

AxiomReport verify_strict_antipode(const HomHopfCandidate& h) {
  h.validate();
  const Maps m(h);
  const ConvContext ctx = ConvContext::of(h.bialgebra);
  const LinMap id = LinMap::identity(m.n);
  const SparseMap left(convolve(ctx, h.antipode, id));
  const SparseMap right(convolve(ctx, id, h.antipode));
  auto unit_times_counit = [&](const auto& t) {
    SparseVec out = m.alg.unit();
    out *= m.co.counit(e(t[0]));
    return out;
  };
  AxiomReport report;
  report.entries.push_back(compare_on_tuples(
      "convolution_left", m.n, 1, [&](const auto& t) { return left.column(t[0]); }, unit_times_counit));
  report.entries.push_back(compare_on_tuples(
      "convolution_right", m.n, 1, [&](const auto& t) { return right.column(t[0]); }, unit_times_counit));
  report.entries.push_back(compare_on_tuples(
      "anti_algebra", m.n, 2, [&](const auto& t) { return m.s.apply(m.alg.product_basis(t[0], t[1])); },
      [&](const auto& t) { return m.alg.product(m.s.column(t[1]), m.s.column(t[0])); },
      [&](const auto& t) { return m.alg.keeps({t[0], t[1]}); }));
  report.entries.push_back(compare_on_tuples(
      "anti_coalgebra", m.n, 1, [&](const auto& t) { return m.co.coproduct(m.s.column(t[0])); },
      [&](const auto& t) { return apply_kron(m.s, m.s, flip(m.co.coproduct_basis(t[0]), m.n, m.n)); }));
  report.entries.push_back(compare_on_tuples(
      "unital", m.n, 0, [&](const auto&) { return m.s.apply(m.alg.unit()); },
      [&](const auto&) { return m.alg.unit(); }));
  report.entries.push_back(compare_on_tuples(
      "counital", m.n, 1, [&](const auto& t) { return scalar_vec(m.co.counit(m.s.column(t[0]))); },
      [&](const auto& t) { return scalar_vec(m.co.counit(e(t[0]))); }));
  return report;
}

RelativeAntipodeReport verify_relative_antipode(const HomHopfCandidate& h, unsigned k_max) {
  h.validate();
  const Maps m(h);
  const ConvContext ctx = ConvContext::of(h.bialgebra);
  const LinMap id = LinMap::identity(m.n);
  RelativeAntipodeReport out;
  AxiomReport& report = out.report;

  report.entries.push_back(compare_on_tuples(
      "a_commutes_with_alpha", m.n, 1, [&](const auto& t) { return m.s.apply(m.alg.alpha(e(t[0]))); },
      [&](const auto& t) { return m.alg.alpha(m.s.column(t[0])); }));
  report.entries.push_back(compare_on_tuples(
      "b_unit", m.n, 0, [&](const auto&) { return m.s.apply(m.alg.unit()); },
      [&](const auto&) { return m.alg.unit(); }));
  report.entries.push_back(compare_on_tuples(
      "b_counit", m.n, 1, [&](const auto& t) { return scalar_vec(m.co.counit(m.s.column(t[0]))); },
      [&](const auto& t) { return scalar_vec(m.co.counit(e(t[0]))); }));

  for (std::size_t x = 0; x < m.n; ++x) {
    out.k_per_basis.push_back(pointwise_inverse_exponent(ctx, id, h.antipode, Vec::basis(m.n, x), k_max));
  }

  // The uniform exponent is scanned directly: alpha o eta may differ from eta, so
  // the per-element exponents need not persist at larger k.
  const SparseMap left0(convolve(ctx, h.antipode, id));
  const SparseMap right0(convolve(ctx, id, h.antipode));
  std::vector<SparseVec> left, right, target;
  for (std::size_t x = 0; x < m.n; ++x) {
    left.push_back(left0.column(x));
    right.push_back(right0.column(x));
    SparseVec t = m.alg.unit();
    t *= m.co.counit(e(x));
    target.push_back(std::move(t));
  }
  AxiomEntry c;
  c.name = "c_relative_inverse";
  for (unsigned k = 0; k <= k_max; ++k) {
    std::optional<Witness> bad;
    for (std::size_t x = 0; x < m.n && !bad; ++x) {
      if (!(left[x] == target[x])) {
        bad = Witness{{x}, left[x], target[x]};
      } else if (!(right[x] == target[x])) {
        bad = Witness{{x}, right[x], target[x]};
      }
    }
    if (!bad) {
      out.k_uniform = k;
      break;
    }
    c.witness = std::move(bad);
    for (std::size_t x = 0; x < m.n; ++x) {
      left[x] = m.alg.alpha(left[x]);
      right[x] = m.alg.alpha(right[x]);
    }
  }
  c.checked = m.n;
  if (out.k_uniform) {
    c.verdict = Verdict::Pass;
    c.witness.reset();
    c.note = "k_uniform = " + std::to_string(*out.k_uniform);
  } else {
    c.verdict = Verdict::Fail;
    c.note = "no uniform exponent up to " + std::to_string(k_max);
  }
  report.entries.push_back(std::move(c));
  return out;
}

PropositionVerdict prop_anti_algebra(const HomHopfCandidate& h, unsigned k_max) {
  return anti_algebra(h, facts_of(h, k_max), k_max);
}

PropositionVerdict prop_anti_coalgebra(const HomHopfCandidate& h, unsigned k_max) {
  return anti_coalgebra(h, facts_of(h, k_max), k_max);
}

PropositionVerdict prop_unitality(const HomHopfCandidate& h, unsigned k_max) {
  return unitality(h, facts_of(h, k_max), k_max);
}

PropositionVerdict prop_counitality(const HomHopfCandidate& h, unsigned k_max) {
  return counitality(h, facts_of(h, k_max), k_max);
}

PropositionVerdict prop_hopf_map(const LinMap& f, const HomHopfCandidate& h, const HomHopfCandidate& k,
                                 unsigned k_max) {
  const Facts fh = facts_of(h, k_max);
  const Facts fk = &h == &k ? fh : facts_of(k, k_max);
  return hopf_map("hopf_map", f, h, k, fh, fk, k_max);
}

PropositionVerdict prop_s_squared(const HomHopfCandidate& h, unsigned k_max) {
  return s_squared(h, facts_of(h, k_max), k_max);
}

GrouplikeCheck check_grouplike(const HomBialgebra& b, const Vec& h) {
  b.validate();
  if (h.size() != b.dim()) throw DimensionMismatch("element has the wrong dimension");
  const CoalgebraOps co(b.coalgebra);
  const SparseVec hs = SparseVec::from_dense(h);
  GrouplikeCheck out;
  out.counit = co.counit(hs);
  out.holds = !hs.empty() && co.coproduct(hs) == tensor(hs, hs, b.dim()) && co.beta(hs) == hs;
  return out;
}

PrimitiveCheck check_primitive(const HomBialgebra& b, const Vec& h) {
  b.validate();
  if (h.size() != b.dim()) throw DimensionMismatch("element has the wrong dimension");
  const AlgebraOps alg(b.algebra);
  const CoalgebraOps co(b.coalgebra);
  const SparseVec hs = SparseVec::from_dense(h);
  SparseVec expected = tensor(alg.unit(), hs, b.dim());
  expected.add_scaled(tensor(hs, alg.unit(), b.dim()), Scalar(1));
  return {co.coproduct(hs) == expected, hs.empty()};
}

PropositionVerdict prop_grouplike_inverse(const HomHopfCandidate& h, const Vec& g, unsigned k_max) {
  return grouplike_inverse(h, g, facts_of(h, k_max), k_max, "grouplike_inverse");
}

PropositionVerdict prop_primitive_image(const HomHopfCandidate& h, const Vec& p, unsigned k_max) {
  return primitive_image(h, p, facts_of(h, k_max), k_max, "primitive_image");
}

const PropositionVerdict* PropositionSuite::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

PropositionSuite run_proposition_suite(const HomHopfCandidate& h, unsigned k_max) {
  const Facts f = facts_of(h, k_max);
  PropositionSuite suite;
  suite.flags = f.flags;
  suite.bialgebra_axioms = f.bialgebra_axioms;
  suite.k_uniform = f.k_uniform;
  const std::size_t n = h.dim();

  suite.verdicts.push_back(anti_algebra(h, f, k_max));
  suite.verdicts.push_back(anti_coalgebra(h, f, k_max));
  suite.verdicts.push_back(unitality(h, f, k_max));
  suite.verdicts.push_back(counitality(h, f, k_max));
  suite.verdicts.push_back(hopf_map("hopf_map_identity", LinMap::identity(n), h, h, f, f, k_max));
  const LinMap& alpha = h.bialgebra.algebra.alpha;
  if (alpha == h.bialgebra.coalgebra.beta && is_hom_bialgebra_morphism(alpha, h.bialgebra, h.bialgebra).all_pass()) {
    suite.verdicts.push_back(hopf_map("hopf_map_alpha", alpha, h, h, f, f, k_max));
  }
  suite.verdicts.push_back(s_squared(h, f, k_max));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec basis = Vec::basis(n, i);
    if (check_grouplike(h.bialgebra, basis).holds) {
      suite.verdicts.push_back(grouplike_inverse(h, basis, f, k_max, "grouplike_inverse[" + std::to_string(i) + "]"));
    }
    if (check_primitive(h.bialgebra, basis).holds) {
      suite.verdicts.push_back(primitive_image(h, basis, f, k_max, "primitive_image[" + std::to_string(i) + "]"));
    }
  }
  return suite;
}

void add_antipode_constraints(const HomBialgebra& b, SparseSystem& system) {
  const std::size_t n = b.algebra.dim;
  const LinMap& alpha = b.algebra.alpha;
  if (system.num_vars != n * n) throw DimensionMismatch("antipode system must have n * n unknowns");
  // (S alpha - alpha S)(i, c) = 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      SparseVec row;
      for (std::size_t j = 0; j < n; ++j) {
        row.add(i * n + j, alpha(j, c));
        row.add(j * n + c, -alpha(i, j));
      }
      system.add_equation(std::move(row), Scalar(0));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec row;
    for (std::size_t c = 0; c < n; ++c) row.add(i * n + c, b.algebra.unit[c]);
    system.add_equation(std::move(row), b.algebra.unit[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    SparseVec row;
    for (std::size_t j = 0; j < n; ++j) row.add(j * n + c, b.coalgebra.counit(0, j));
    system.add_equation(std::move(row), b.coalgebra.counit(0, c));
  }
}

std::optional<RelativeInverseSolutions> antipode_solutions_at(const HomBialgebra& b, unsigned k) {
  const ConvContext ctx = ConvContext::of(b);
  SparseSystem system = relative_inverse_system(ctx, LinMap::identity(b.algebra.dim), k);
  add_antipode_constraints(b, system);
  auto space = solve_affine(system);
  if (!space) return std::nullopt;
  return RelativeInverseSolutions{k, b.algebra.dim, b.algebra.dim, std::move(*space)};
}

std::optional<RelativeInverseResult> find_antipode(const HomBialgebra& b, unsigned k_max) {
  for (unsigned k = 0; k <= k_max; ++k) {
    if (auto sol = antipode_solutions_at(b, k)) {
      return RelativeInverseResult{sol->particular(), k, sol->space.nullspace_dim()};
    }
  }
  return std::nullopt;
}

}  // namespace hombra
