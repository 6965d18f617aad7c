#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "hombra/scalar.hpp"

namespace hombra {

// Tensor legs are flattened row-major everywhere: e_i (x) e_j  ->  i * n_right + j.

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim) {}
  Vec(std::initializer_list<Scalar> coords) : coords_(coords) {}
  explicit Vec(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static Vec basis(std::size_t dim, std::size_t i);

  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] auto begin() const { return coords_.begin(); }
  [[nodiscard]] auto end() const { return coords_.end(); }
  [[nodiscard]] bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<Scalar> coords_;
};

/// Flattened u (x) v.
Vec tensor(const Vec& u, const Vec& v);

/// Dense matrix of a linear map; column j is the image of e_j.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-by-row literal, as a matrix is written on paper.
  LinMap(std::initializer_list<std::initializer_list<Scalar>> rows);

  static LinMap identity(std::size_t n);
  static LinMap zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static LinMap from_columns(std::size_t rows, const std::vector<Vec>& columns);
  /// 1 x n matrix (a linear form).
  static LinMap row(const Vec& v);
  /// n x 1 matrix (the map k -> V, 1 |-> v).
  static LinMap column_map(const Vec& v);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  [[nodiscard]] Vec apply(const Vec& v) const;
  [[nodiscard]] bool is_zero() const;

  LinMap& operator+=(const LinMap& o);
  LinMap& operator-=(const LinMap& o);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(const Scalar& s, LinMap f);
  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// f after g.
LinMap compose(const LinMap& f, const LinMap& g);
/// (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j).
LinMap kron(const LinMap& f, const LinMap& g);
LinMap power(const LinMap& f, unsigned k);
/// The flip tau on V (x) W, as a map V (x) W -> W (x) V.
LinMap flip(std::size_t n_left, std::size_t n_right);

std::size_t rank(const LinMap& f);
bool is_invertible(const LinMap& f);

/// Sparse vector: index -> nonzero coefficient, ordered by index.
class SparseVec {
 public:
  SparseVec() = default;
  static SparseVec from_dense(const Vec& v);
  static SparseVec unit(std::size_t i) {
    SparseVec v;
    v.add(i, Scalar(1));
    return v;
  }

  void add(std::size_t index, const Scalar& value);
  void add_scaled(const SparseVec& other, const Scalar& factor);
  [[nodiscard]] Scalar get(std::size_t index) const;
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nonzeros() const { return entries_.size(); }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }
  [[nodiscard]] Vec to_dense(std::size_t dim) const;
  SparseVec& operator*=(const Scalar& s);
  SparseVec operator-() const;
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::map<std::size_t, Scalar> entries_;
};

/// Column-sparse copy of a LinMap, used to evaluate composites on basis tensors
/// without materializing large Kronecker products.
class SparseMap {
 public:
  SparseMap() = default;
  explicit SparseMap(const LinMap& f);
  SparseMap(std::size_t rows, std::vector<SparseVec> columns);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] const SparseVec& column(std::size_t j) const { return columns_[j]; }
  [[nodiscard]] SparseVec apply(const SparseVec& v) const;
  [[nodiscard]] LinMap to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> columns_;
};

SparseVec tensor(const SparseVec& u, const SparseVec& v, std::size_t right_dim);
/// (f (x) g) applied to v, where v lives in dom(f) (x) dom(g).
SparseVec apply_kron(const SparseMap& f, const SparseMap& g, const SparseVec& v);
/// Identity on the left leg of size n_left, f on the right.
SparseVec apply_right(std::size_t n_left, const SparseMap& f, const SparseVec& v);
SparseVec apply_left(const SparseMap& f, std::size_t n_right, const SparseVec& v);
/// tau: index i * n_right + j  ->  j * n_left + i.
SparseVec flip(const SparseVec& v, std::size_t n_left, std::size_t n_right);

/// Sparse affine system rows[r] . x = rhs[r] in num_vars unknowns.
struct SparseSystem {
  std::size_t num_vars = 0;
  std::vector<SparseVec> rows;
  std::vector<Scalar> rhs;

  void add_equation(SparseVec row, Scalar value) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  }
};

/// Solution set of an affine system in canonical reduced-row-echelon form: the
/// particular solution has every free variable at zero, and nullspace vector i
/// sets free variable i to one and the other free variables to zero.
struct SolutionSpace {
  Vec particular;
  std::vector<std::size_t> free_variables;
  std::vector<SparseVec> nullspace;

  [[nodiscard]] std::size_t nullspace_dim() const { return nullspace.size(); }
  [[nodiscard]] Vec nullspace_vector(std::size_t i) const { return nullspace[i].to_dense(particular.size()); }
};

/// nullopt when the system is inconsistent. The system is split into independent
/// blocks of coupled unknowns first; the canonical form does not depend on the split.
std::optional<SolutionSpace> solve_affine(const SparseSystem& system);
std::optional<SolutionSpace> solve_affine(const LinMap& a, const Vec& b);

}  // namespace hombra
