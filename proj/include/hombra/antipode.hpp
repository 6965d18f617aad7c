#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hombra/convolution.hpp"
#include "hombra/structures.hpp"

namespace hombra {

/// Outcome of one exponent search. When min_exponent = K > 0 the witness is the
/// first basis tuple on which the identity fails at K - 1; when the search runs
/// out it is the first failing tuple at k_max.
struct PropositionVerdict {
  std::string name;
  std::map<std::string, bool> hypotheses;
  std::optional<unsigned> min_exponent;
  std::optional<Witness> witness;
  /// Exact (untwisted) forms, evaluated when the relevant twists are invertible.
  std::vector<AxiomEntry> strict;
  std::string note;

  [[nodiscard]] bool hypotheses_met() const;
};

/// S * Id = Id * S = eta o epsilon at k = 0, then S anti-algebra, anti-coalgebra,
/// unital and counital as separate entries.
AxiomReport verify_strict_antipode(const HomHopfCandidate& h);

struct RelativeAntipodeReport {
  /// a_commutes_with_alpha, b_unit, b_counit, c_relative_inverse.
  AxiomReport report;
  std::vector<std::optional<unsigned>> k_per_basis;
  std::optional<unsigned> k_uniform;

  [[nodiscard]] bool all_pass() const { return report.all_pass(); }
};

RelativeAntipodeReport verify_relative_antipode(const HomHopfCandidate& h, unsigned k_max);

/// Conditions (a) S o alpha = alpha o S and (b) S o eta = eta, epsilon o S = epsilon
/// as rows over the unknown S(j, b) = variable j * n + b.
void add_antipode_constraints(const HomBialgebra& b, SparseSystem& system);
/// Solutions of (a), (b) and the relative-inverse system of Id at exponent k.
std::optional<RelativeInverseSolutions> antipode_solutions_at(const HomBialgebra& b, unsigned k);
/// Smallest k <= k_max with an antipode satisfying (a), (b), (c) at uniform k.
std::optional<RelativeInverseResult> find_antipode(const HomBialgebra& b, unsigned k_max);

/// alpha^(K+2)(S(b2(x) b2(y))) = alpha^(K+2)(S(b2(y)) S(b2(x))), b2 = beta^2.
PropositionVerdict prop_anti_algebra(const HomHopfCandidate& h, unsigned k_max);
/// (a^(k+2) (x) a^(k+2)) Delta(S b2(x)) = (a^(k+2) S b2 (x) a^(k+2) S b2)(tau Delta(x)).
PropositionVerdict prop_anti_coalgebra(const HomHopfCandidate& h, unsigned k_max);
/// alpha^(k+1)(S(1)) = 1.
PropositionVerdict prop_unitality(const HomHopfCandidate& h, unsigned k_max);
/// epsilon o alpha^k o S = epsilon.
PropositionVerdict prop_counitality(const HomHopfCandidate& h, unsigned k_max);
/// alpha'^K o f o S o beta^2 = alpha'^K o S' o f o beta^2. Throws HypothesisFailed
/// unless f is a Hom-bialgebra morphism.
PropositionVerdict prop_hopf_map(const LinMap& f, const HomHopfCandidate& h, const HomHopfCandidate& k,
                                 unsigned k_max);
/// alpha^(k+2) o S^2 o beta^2 = alpha^(k+2) o beta^2.
PropositionVerdict prop_s_squared(const HomHopfCandidate& h, unsigned k_max);

struct GrouplikeCheck {
  bool holds = false;
  Scalar counit;
};

struct PrimitiveCheck {
  bool holds = false;
  bool degenerate = false;  // h = 0
};

/// Delta(h) = h (x) h and beta(h) = h, h != 0.
GrouplikeCheck check_grouplike(const HomBialgebra& b, const Vec& h);
/// Delta(h) = 1 (x) h + h (x) 1.
PrimitiveCheck check_primitive(const HomBialgebra& b, const Vec& h);

/// alpha^k(S(h) h) = alpha^k(h S(h)) = 1. Throws HypothesisFailed unless h is group-like.
PropositionVerdict prop_grouplike_inverse(const HomHopfCandidate& h, const Vec& g, unsigned k_max);
/// alpha^(k+1)(S(h)) = -alpha^(k+1)(h). Throws HypothesisFailed unless h is primitive.
PropositionVerdict prop_primitive_image(const HomHopfCandidate& h, const Vec& p, unsigned k_max);

struct PropositionSuite {
  FlagSet flags;
  bool bialgebra_axioms = false;
  std::optional<unsigned> k_uniform;
  std::vector<PropositionVerdict> verdicts;

  [[nodiscard]] const PropositionVerdict* find(const std::string& name) const;
};

/// Every proposition on one candidate: the morphism checks use f = Id, and f = alpha
/// when alpha = beta; group-like and primitive checks run on each basis element
/// that qualifies.
PropositionSuite run_proposition_suite(const HomHopfCandidate& h, unsigned k_max);

}  // namespace hombra
