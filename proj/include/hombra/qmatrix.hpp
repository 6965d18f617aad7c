#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hombra/structures.hpp"

namespace hombra {

struct QParams {
  Scalar q{2};
  Scalar lambda{3};

  /// Throws HypothesisFailed when q or lambda is zero.
  void validate() const;
};

/// a^i b^j c^k d^l.
struct QMonomial {
  std::array<unsigned, 4> exp{0, 0, 0, 0};

  [[nodiscard]] unsigned degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  /// "1", "a", "a^2bd", ...
  [[nodiscard]] std::string to_string() const;
  /// The word aa..bb..cc..dd.. of the monomial.
  [[nodiscard]] std::string word() const;
  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

/// Normal-form polynomial; zero coefficients are never stored.
using QPoly = std::map<QMonomial, Scalar>;
/// Finite sum of x (x) y over monomial pairs.
using QTensor = std::map<std::pair<QMonomial, QMonomial>, Scalar>;

enum class RewriteStrategy { Leftmost, Rightmost, Random };

/// Rewrites a word in a, b, c, d to the order a <= b <= c <= d using
/// ba -> q ab, ca -> q ac, db -> q bd, dc -> q cd, cb -> bc, da -> ad - (q^-1 - q) bc.
QPoly normal_form(std::string_view word, const QParams& p, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                  std::uint64_t seed = 0);

QPoly qpoly_from(const QMonomial& m, const Scalar& c = Scalar(1));
QPoly generator(char name);
unsigned degree(const QPoly& x);
std::string to_string(const QPoly& x);
void add_to(QPoly& acc, const QPoly& x, const Scalar& factor = Scalar(1));

/// The untwisted product of the quantum-matrix algebra.
QPoly classical_product(const QPoly& x, const QPoly& y, const QParams& p);
/// m_alpha = alpha o m. Throws TruncationExceeded when deg x + deg y > max_degree.
QPoly multiply(const QPoly& x, const QPoly& y, const QParams& p, unsigned max_degree);
/// Multiplicative extension of the generator table Delta(a) = a (x) a + b (x) c, ...
QTensor classical_coproduct(const QPoly& x, const QParams& p);
/// Delta_alpha = Delta o alpha. Throws TruncationExceeded when deg x > max_degree.
QTensor coproduct(const QPoly& x, const QParams& p, unsigned max_degree);
Scalar counit(const QPoly& x);
/// alpha(a) = a, alpha(b) = lambda b, alpha(c) = lambda^-1 c, alpha(d) = d.
QPoly alpha_map(const QPoly& x, const QParams& p);
/// ad - q^-1 bc.
QPoly det_q(const QParams& p);

/// Monomials of degree <= max_degree, by degree and then by exponent tuple descending.
std::vector<QMonomial> qmatrix_basis(unsigned max_degree);
Vec to_vector(const QPoly& x, const std::vector<QMonomial>& basis);
Vec to_vector(const QTensor& x, const std::vector<QMonomial>& basis);

/// The twisted structure on the monomials of degree <= max_degree; products above
/// the cut are stored as zero and recorded in the truncation.
HomBialgebra to_hom_bialgebra(const QParams& p, unsigned max_degree);

}  // namespace hombra
