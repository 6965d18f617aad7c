#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hombra/linalg.hpp"

namespace hombra {

/// Degree bookkeeping for a graded algebra cut off above max_degree. Products
/// landing above the cut are stored as zero, so identities are only asserted on
/// basis tuples whose total degree stays within the cut.
struct Truncation {
  std::vector<unsigned> degree;
  unsigned max_degree = 0;

  [[nodiscard]] bool within(std::initializer_list<std::size_t> basis_indices) const;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// (A, m, eta, alpha). mul is n x n^2 on the flattened tensor basis.
struct HomAlgebra {
  std::size_t dim = 0;
  LinMap mul;
  Vec unit;
  LinMap alpha;
  std::optional<Truncation> truncation;

  void validate() const;
  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;
};

/// (C, Delta, epsilon, beta). comul is n^2 x n, counit is 1 x n.
struct HomCoalgebra {
  std::size_t dim = 0;
  LinMap comul;
  LinMap counit;
  LinMap beta;

  void validate() const;
  friend bool operator==(const HomCoalgebra&, const HomCoalgebra&) = default;
};

struct HomBialgebra {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;

  [[nodiscard]] std::size_t dim() const { return algebra.dim; }
  void validate() const;
  friend bool operator==(const HomBialgebra&, const HomBialgebra&) = default;
};

struct HomHopfCandidate {
  HomBialgebra bialgebra;
  LinMap antipode;

  [[nodiscard]] std::size_t dim() const { return bialgebra.dim(); }
  void validate() const;
  friend bool operator==(const HomHopfCandidate&, const HomHopfCandidate&) = default;
};

enum class Verdict { Pass, Fail };

struct Witness {
  std::vector<std::size_t> indices;  // basis tuple; empty for identities without arguments
  SparseVec lhs;
  SparseVec rhs;
};

struct AxiomEntry {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  bool hypothesis_met = true;
  std::string note;
  std::size_t checked = 0;
  std::size_t skipped = 0;
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] const AxiomEntry* find(const std::string& name) const;
  void append(const AxiomReport& other);
};

struct FlagSet {
  bool alpha_multiplicative = false;
  bool beta_comultiplicative = false;
  bool alpha_invertible = false;
  bool beta_invertible = false;
  bool commutative = false;
  bool cocommutative = false;

  friend bool operator==(const FlagSet&, const FlagSet&) = default;
};

using TupleFn = std::function<SparseVec(const std::vector<std::size_t>&)>;
using TupleFilter = std::function<bool(const std::vector<std::size_t>&)>;

/// First basis tuple (lexicographic over [0, dim)^arity) on which lhs and rhs
/// differ, skipping tuples rejected by keep.
std::optional<Witness> first_mismatch(std::size_t dim, unsigned arity, const TupleFn& lhs, const TupleFn& rhs,
                                      const TupleFilter& keep = {}, std::size_t* checked = nullptr,
                                      std::size_t* skipped = nullptr);

AxiomEntry compare_on_tuples(std::string name, std::size_t dim, unsigned arity, const TupleFn& lhs,
                             const TupleFn& rhs, const TupleFilter& keep = {});

/// Sparse copies of the structure maps with the element-level operations the
/// checkers are phrased in.
class AlgebraOps {
 public:
  explicit AlgebraOps(const HomAlgebra& a);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] SparseVec product(const SparseVec& x, const SparseVec& y) const;
  [[nodiscard]] SparseVec product_basis(std::size_t i, std::size_t j) const { return mul_.column(i * dim_ + j); }
  [[nodiscard]] const SparseVec& unit() const { return unit_; }
  [[nodiscard]] SparseVec alpha(const SparseVec& x) const { return alpha_.apply(x); }
  [[nodiscard]] SparseVec alpha_pow(const SparseVec& x, unsigned k) const;
  [[nodiscard]] const SparseMap& alpha_map() const { return alpha_; }
  [[nodiscard]] const SparseMap& mul_map() const { return mul_; }
  /// Componentwise product on A (x) A: (a (x) b)(c (x) d) = ac (x) bd.
  [[nodiscard]] SparseVec tensor_product(const SparseVec& x, const SparseVec& y) const;
  [[nodiscard]] bool keeps(std::initializer_list<std::size_t> idx) const {
    return !truncation_ || truncation_->within(idx);
  }

 private:
  std::size_t dim_;
  SparseMap mul_;
  SparseVec unit_;
  SparseMap alpha_;
  std::optional<Truncation> truncation_;
};

class CoalgebraOps {
 public:
  explicit CoalgebraOps(const HomCoalgebra& c);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] SparseVec coproduct(const SparseVec& x) const { return comul_.apply(x); }
  [[nodiscard]] const SparseVec& coproduct_basis(std::size_t i) const { return comul_.column(i); }
  [[nodiscard]] Scalar counit(const SparseVec& x) const;
  [[nodiscard]] SparseVec beta(const SparseVec& x) const { return beta_.apply(x); }
  [[nodiscard]] const SparseMap& comul_map() const { return comul_; }
  [[nodiscard]] const SparseMap& counit_map() const { return counit_; }
  [[nodiscard]] const SparseMap& beta_map() const { return beta_; }

 private:
  std::size_t dim_;
  SparseMap comul_;
  SparseMap counit_;
  SparseMap beta_;
};

/// A scalar as a vector of the 1-dimensional space.
SparseVec scalar_vec(const Scalar& s);

AxiomReport check_axioms(const HomAlgebra& a);
AxiomReport check_axioms(const HomCoalgebra& c);
/// Algebra axioms, coalgebra axioms, then the five compatibility conditions.
AxiomReport check_axioms(const HomBialgebra& b);

/// alpha(xy) = alpha(x) alpha(y) on every basis pair inside the degree cut.
bool is_alpha_multiplicative(const HomAlgebra& a);

FlagSet compute_flags(const HomBialgebra& b);

AxiomReport is_hom_bialgebra_morphism(const LinMap& f, const HomBialgebra& src, const HomBialgebra& dst);

}  // namespace hombra
