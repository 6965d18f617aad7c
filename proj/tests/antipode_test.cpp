#include <gtest/gtest.h>

#include <functional>

#include "hombra/antipode.hpp"
#include "hombra/constructions.hpp"
#include "hombra/errors.hpp"
#include "support.hpp"

using namespace hombra;
using hombra::test::fixture;

namespace {

const std::vector<std::string> kHopf{"example_2dbi",      "c2_classical", "c3_classical",      "c3_twist",
                                     "homgroup_c4",       "homgroup_collapse", "primitive_2d", "c2_collapse_twist",
                                     "tensor_2dbi_c2"};

// Smallest k in [0, k_max] with holds(k), computed from dense matrix powers.
std::optional<unsigned> dense_min(const std::function<bool(unsigned)>& holds, unsigned k_max) {
  for (unsigned k = 0; k <= k_max; ++k) {
    if (holds(k)) return k;
  }
  return std::nullopt;
}

struct Dense {
  explicit Dense(const HomHopfCandidate& h)
      : n(h.dim()),
        m(h.bialgebra.algebra.mul),
        a(h.bialgebra.algebra.alpha),
        d(h.bialgebra.coalgebra.comul),
        eps(h.bialgebra.coalgebra.counit),
        eta(LinMap::column_map(h.bialgebra.algebra.unit)),
        s(h.antipode),
        b2(power(h.bialgebra.coalgebra.beta, 2)),
        tau(flip(n, n)) {}

  std::size_t n;
  LinMap m, a, d, eps, eta, s, b2, tau;

  bool anti_algebra(unsigned k) const {
    const LinMap ak = power(a, k + 2);
    return compose(ak, compose(s, compose(m, kron(b2, b2)))) ==
           compose(ak, compose(m, compose(kron(s, s), compose(tau, kron(b2, b2)))));
  }
  bool anti_coalgebra(unsigned k) const {
    const LinMap ak = power(a, k + 2);
    const LinMap t = compose(ak, compose(s, b2));
    return compose(kron(ak, ak), compose(d, compose(s, b2))) == compose(kron(t, t), compose(tau, d));
  }
  bool unitality(unsigned k) const { return compose(power(a, k + 1), compose(s, eta)) == eta; }
  bool counitality(unsigned k) const { return compose(eps, compose(power(a, k), s)) == eps; }
  bool s_squared(unsigned k) const {
    const LinMap ak = power(a, k + 2);
    return compose(ak, compose(s, compose(s, b2))) == compose(ak, b2);
  }
};

HomHopfCandidate with_antipode(HomHopfCandidate h, LinMap s) {
  h.antipode = std::move(s);
  return h;
}

}  // namespace

TEST(StrictAntipode, ClassicalC2) {
  EXPECT_TRUE(verify_strict_antipode(fixture("c2_classical").hopf()).all_pass());
}

TEST(StrictAntipode, Example2dbiConvolutionIdentity) {
  const AxiomReport r = verify_strict_antipode(fixture("example_2dbi").hopf());
  EXPECT_EQ(r.find("convolution_left")->verdict, Verdict::Pass);
  EXPECT_EQ(r.find("convolution_right")->verdict, Verdict::Pass);
}

TEST(StrictAntipode, ZeroMapFailsAtUnit) {
  const AxiomReport r = verify_strict_antipode(with_antipode(fixture("c2_classical").hopf(), LinMap::zero(2, 2)));
  const AxiomEntry* e = r.find("convolution_left");
  ASSERT_EQ(e->verdict, Verdict::Fail);
  EXPECT_EQ(e->witness->indices, std::vector<std::size_t>{0});
}

TEST(RelativeAntipode, Example2dbi) {
  const RelativeAntipodeReport r = verify_relative_antipode(fixture("example_2dbi").hopf(), 8);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.k_uniform, 0u);
  EXPECT_EQ(r.k_per_basis, (std::vector<std::optional<unsigned>>{0u, 0u}));
}

TEST(RelativeAntipode, UnitNotPreserved) {
  const RelativeAntipodeReport r =
      verify_relative_antipode(with_antipode(fixture("c2_classical").hopf(), LinMap{{0, 1}, {1, 0}}), 8);
  EXPECT_EQ(r.report.find("b_unit")->verdict, Verdict::Fail);
}

TEST(RelativeAntipode, HomGroupIndices) {
  // collapse: x x = x, every other product 1, alpha = 1; x needs one twist
  const HomGroup g = make_hom_group({"1", "x"}, {{0, 0}, {0, 1}}, {0, 0}, 0, {0, 1});
  EXPECT_EQ(g.index, (std::vector<unsigned>{0, 1}));
  const RelativeAntipodeReport r = verify_relative_antipode(hom_group_algebra(g), 8);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.k_per_basis, (std::vector<std::optional<unsigned>>{0u, 1u}));
  EXPECT_EQ(r.k_uniform, 1u);
  EXPECT_EQ(hom_group_algebra(g), fixture("homgroup_collapse").hopf());
}

TEST(FindAntipode, SatisfiesAllThreeConditions) {
  for (const auto& name : kHopf) {
    const HomBialgebra b = fixture(name).bialgebra();
    const auto r = find_antipode(b, 8);
    ASSERT_TRUE(r) << name;
    const RelativeAntipodeReport rep = verify_relative_antipode({b, r->inverse}, 8);
    EXPECT_TRUE(rep.all_pass()) << name;
    EXPECT_EQ(rep.k_uniform, r->exponent) << name;
  }
}

TEST(FindAntipode, ClassicalIsGroupInversion) {
  const HomHopfCandidate c3 = fixture("c3_classical").hopf();
  const auto r = find_antipode(c3.bialgebra, 8);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->exponent, 0u);
  EXPECT_EQ(r->inverse, element_map(3, {0, 2, 1}));
  EXPECT_EQ(r->inverse, c3.antipode);
}

TEST(Propositions, MatchDenseOracle) {
  for (const auto& name : kHopf) {
    const HomHopfCandidate h = fixture(name).hopf();
    const Dense d(h);
    EXPECT_EQ(prop_anti_algebra(h, 8).min_exponent, dense_min([&](unsigned k) { return d.anti_algebra(k); }, 8))
        << name;
    EXPECT_EQ(prop_anti_coalgebra(h, 8).min_exponent, dense_min([&](unsigned k) { return d.anti_coalgebra(k); }, 8))
        << name;
    EXPECT_EQ(prop_unitality(h, 8).min_exponent, dense_min([&](unsigned k) { return d.unitality(k); }, 8)) << name;
    EXPECT_EQ(prop_counitality(h, 8).min_exponent, dense_min([&](unsigned k) { return d.counitality(k); }, 8))
        << name;
    EXPECT_EQ(prop_s_squared(h, 8).min_exponent, dense_min([&](unsigned k) { return d.s_squared(k); }, 8)) << name;
  }
}

TEST(Propositions, ClassicalAllZero) {
  for (const char* name : {"c2_classical", "c3_classical"}) {
    const PropositionSuite suite = run_proposition_suite(fixture(name).hopf(), 8);
    for (const auto& v : suite.verdicts) {
      EXPECT_TRUE(v.hypotheses_met()) << v.name;
      EXPECT_EQ(v.min_exponent, 0u) << name << " " << v.name;
    }
    const PropositionVerdict* s2 = suite.find("s_squared");
    ASSERT_FALSE(s2->strict.empty());
    EXPECT_EQ(s2->strict[0].verdict, Verdict::Pass);
  }
}

TEST(Propositions, ReproducibleWitness) {
  // min_exponent K > 0 must fail at K - 1 on the recorded tuple
  const HomHopfCandidate h = fixture("homgroup_collapse").hopf();
  const PropositionSuite suite = run_proposition_suite(h, 8);
  const PropositionVerdict* v = suite.find("grouplike_inverse[1]");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->min_exponent, 1u);
  ASSERT_TRUE(v->witness);
  EXPECT_NE(v->witness->lhs, v->witness->rhs);
  // x S(x) = x x = x, and x != 1
  EXPECT_EQ(v->witness->lhs, SparseVec::unit(1));
  EXPECT_EQ(v->witness->rhs, SparseVec::unit(0));
}

TEST(Propositions, HopfMap) {
  const HomHopfCandidate c3 = fixture("c3_twist").hopf();
  const PropositionVerdict id = prop_hopf_map(LinMap::identity(3), c3, c3, 8);
  EXPECT_EQ(id.min_exponent, 0u);

  const LinMap& a = c3.bialgebra.algebra.alpha;
  const PropositionVerdict al = prop_hopf_map(a, c3, c3, 8);
  EXPECT_EQ(al.min_exponent, 0u);
  ASSERT_FALSE(al.strict.empty());
  EXPECT_EQ(al.strict[0].verdict, Verdict::Pass);
  EXPECT_EQ(compose(a, c3.antipode), compose(c3.antipode, a));

  // fixes the unit but t t = t2 is sent to 1 while t goes to t
  const HomHopfCandidate classical = fixture("c3_classical").hopf();
  const LinMap bad = element_map(3, {0, 1, 0});
  EXPECT_THROW(prop_hopf_map(bad, classical, classical, 8), HypothesisFailed);
}

TEST(Propositions, SSquaredIdentityWhenTwistsInvertible) {
  for (const char* name : {"c3_twist", "homgroup_c4", "example_2dbi"}) {
    const HomHopfCandidate h = fixture(name).hopf();
    EXPECT_EQ(compose(h.antipode, h.antipode), LinMap::identity(h.dim())) << name;
    const PropositionVerdict v = prop_s_squared(h, 8);
    ASSERT_FALSE(v.strict.empty()) << name;
    EXPECT_EQ(v.strict[0].verdict, Verdict::Pass) << name;
  }
}

TEST(Propositions, GroupLikeAndPrimitive) {
  const HomHopfCandidate p = fixture("primitive_2d").hopf();
  EXPECT_TRUE(check_primitive(p.bialgebra, Vec{0, 1}).holds);
  EXPECT_FALSE(check_primitive(p.bialgebra, Vec{0, 1}).degenerate);
  EXPECT_TRUE(check_primitive(p.bialgebra, Vec{0, 0}).degenerate);
  EXPECT_FALSE(check_grouplike(p.bialgebra, Vec{0, 0}).holds);
  EXPECT_TRUE(check_grouplike(p.bialgebra, Vec{1, 0}).holds);
  EXPECT_THROW(prop_grouplike_inverse(p, Vec{0, 1}, 8), HypothesisFailed);
  EXPECT_THROW(prop_primitive_image(p, Vec{1, 0}, 8), HypothesisFailed);

  const PropositionVerdict v = prop_primitive_image(p, Vec{0, 1}, 8);
  ASSERT_TRUE(v.min_exponent);
  const LinMap ak = power(p.bialgebra.algebra.alpha, *v.min_exponent + 1);
  EXPECT_EQ(ak.apply(p.antipode.apply(Vec{0, 1})), Scalar(-1) * ak.apply(Vec{0, 1}));

  const HomHopfCandidate c4 = fixture("homgroup_c4").hopf();
  for (std::size_t g = 0; g < 4; ++g) EXPECT_TRUE(check_grouplike(c4.bialgebra, Vec::basis(4, g)).holds);
}

TEST(Propositions, HypothesesRecorded) {
  const PropositionSuite suite = run_proposition_suite(fixture("example_2dbi").hopf(), 8);
  EXPECT_FALSE(suite.bialgebra_axioms);
  const PropositionVerdict* aa = suite.find("anti_algebra");
  EXPECT_FALSE(aa->hypotheses.at("alpha_multiplicative"));
  EXPECT_NE(aa->note.find("hypothesis not met"), std::string::npos);
}
