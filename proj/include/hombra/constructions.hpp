#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hombra/structures.hpp"

namespace hombra {

/// A finite group given by its multiplication table on elements 0..order-1.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  [[nodiscard]] std::size_t order() const { return table.size(); }
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  [[nodiscard]] std::size_t inverse(std::size_t a) const;
  /// Throws HypothesisFailed unless the table is a group with the given identity.
  void validate() const;
  [[nodiscard]] bool is_homomorphism(const std::vector<std::size_t>& phi) const;
  [[nodiscard]] bool is_automorphism(const std::vector<std::size_t>& phi) const;
};

/// C_n with element i = t^i.
FiniteGroup cyclic_group(std::size_t n);
/// Symmetric group on three letters.
FiniteGroup symmetric_group_3();
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Permutation-style matrix e_g -> e_phi(g).
LinMap element_map(std::size_t n, const std::vector<std::size_t>& phi);

/// The classical Hopf algebra QG: Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1.
HomHopfCandidate group_algebra(const FiniteGroup& g);
/// Functions on G with delta_g delta_h = [g = h] delta_g and Delta(delta_g) = sum over ab = g.
HomHopfCandidate function_algebra(const FiniteGroup& g);
/// Pullback of a group endomorphism onto the function algebra.
LinMap function_algebra_map(const FiniteGroup& g, const std::vector<std::size_t>& phi);

/// Throws HypothesisFailed unless both twists are the identity and every axiom holds.
void require_classical(const HomBialgebra& b);

/// (B, phi o m, eta, Delta o phi, epsilon) with alpha = beta = phi. Throws
/// HypothesisFailed unless b is classical and phi is a bialgebra endomorphism.
HomBialgebra yau_twist(const HomBialgebra& b, const LinMap& phi);
HomHopfCandidate yau_twist(const HomHopfCandidate& h, const LinMap& phi);

/// H (x) K with every structure map taken factorwise; basis e_i (x) f_j is i * dim(K) + j.
HomHopfCandidate tensor_hopf(const HomHopfCandidate& h, const HomHopfCandidate& k);

struct HomGroup {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> alpha;
  std::size_t unit = 0;
  std::vector<std::size_t> inv;
  std::vector<unsigned> index;  // invertibility index of each element
  bool alpha_multiplicative = false;

  [[nodiscard]] std::size_t order() const { return table.size(); }
};

/// Validates the Hom-group axioms (Hom-associativity, a1 = 1a = alpha(a), alpha(1) = 1,
/// relative inverses, alpha(inv g) = inv(alpha g)) and computes the indices.
/// Throws HypothesisFailed when an axiom fails.
HomGroup make_hom_group(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                        std::vector<std::size_t> alpha, std::size_t unit, std::vector<std::size_t> inv);

/// a * b = phi(ab), alpha = phi, group inverses. phi must be an automorphism.
HomGroup twist_group(const FiniteGroup& g, const std::vector<std::size_t>& phi);

/// QG for a Hom-group: alpha linearized, beta = Id, Delta(g) = g (x) g, epsilon(g) = 1,
/// S(g) = inv(g). With alpha_comul the coproduct is alpha(g) (x) alpha(g) and beta = alpha.
HomHopfCandidate hom_group_algebra(const HomGroup& g, bool alpha_comul = false);

}  // namespace hombra
