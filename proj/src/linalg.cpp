#include "hombra/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hombra/errors.hpp"

namespace hombra {

Vec Vec::basis(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vec tensor(const Vec& u, const Vec& v) {
  Vec out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) out[i * v.size() + j] = u[i] * v[j];
    }
  }
  return out;
}

LinMap::LinMap(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

LinMap LinMap::identity(std::size_t n) {
  LinMap f(n, n);
  for (std::size_t i = 0; i < n; ++i) f(i, i) = Scalar(1);
  return f;
}

LinMap LinMap::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  LinMap f(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) f.set_column(j, columns[j]);
  return f;
}

LinMap LinMap::row(const Vec& v) {
  LinMap f(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) f(0, j) = v[j];
  return f;
}

LinMap LinMap::column_map(const Vec& v) { return from_columns(v.size(), {v}); }

Vec LinMap::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void LinMap::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length differs from row count");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vec LinMap::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

bool LinMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

LinMap& LinMap::operator+=(const LinMap& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionMismatch("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionMismatch("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

LinMap operator*(const Scalar& s, LinMap f) {
  for (auto& x : f.data_) x *= s;
  return f;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.cols() != g.rows()) throw DimensionMismatch("compose: inner dimensions differ");
  LinMap out(f.rows(), g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t l = 0; l < f.cols(); ++l) {
      const Scalar& a = f(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Scalar& b = g(l, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  LinMap out(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& b = g(k, l);
          if (!b.is_zero()) out(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
      }
    }
  }
  return out;
}

LinMap power(const LinMap& f, unsigned k) {
  if (f.rows() != f.cols()) throw DimensionMismatch("power of a non-square map");
  LinMap out = LinMap::identity(f.rows());
  for (unsigned i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

LinMap flip(std::size_t n_left, std::size_t n_right) {
  LinMap out(n_left * n_right, n_left * n_right);
  for (std::size_t i = 0; i < n_left; ++i) {
    for (std::size_t j = 0; j < n_right; ++j) out(j * n_left + i, i * n_right + j) = Scalar(1);
  }
  return out;
}

std::size_t rank(const LinMap& f) {
  std::vector<std::vector<Scalar>> m(f.rows(), std::vector<Scalar>(f.cols()));
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) m[i][j] = f(i, j);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < f.cols() && r < f.rows(); ++c) {
    std::size_t p = r;
    while (p < f.rows() && m[p][c].is_zero()) ++p;
    if (p == f.rows()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < f.rows(); ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar factor = m[i][c] * inv;
      for (std::size_t j = c; j < f.cols(); ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= factor * m[r][j];
      }
    }
    ++r;
  }
  return r;
}

bool is_invertible(const LinMap& f) { return f.rows() == f.cols() && rank(f) == f.rows(); }

SparseVec SparseVec::from_dense(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.entries_.emplace_hint(out.entries_.end(), i, v[i]);
  }
  return out;
}

void SparseVec::add(std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseVec::add_scaled(const SparseVec& other, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [i, v] : other.entries_) add(i, v * factor);
}

Scalar SparseVec::get(std::size_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Scalar() : it->second;
}

Vec SparseVec::to_dense(std::size_t dim) const {
  Vec out(dim);
  for (const auto& [i, v] : entries_) {
    if (i >= dim) throw DimensionMismatch("sparse index outside dense dimension");
    out[i] = v;
  }
  return out;
}

SparseVec& SparseVec::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, v] : entries_) v *= s;
  return *this;
}

SparseVec SparseVec::operator-() const {
  SparseVec out = *this;
  out *= Scalar(-1);
  return out;
}

SparseMap::SparseMap(const LinMap& f) : rows_(f.rows()), columns_(f.cols()) {
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!f(i, j).is_zero()) columns_[j].add(i, f(i, j));
    }
  }
}

SparseMap::SparseMap(std::size_t rows, std::vector<SparseVec> columns) : rows_(rows), columns_(std::move(columns)) {}

SparseVec SparseMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) {
    if (j >= columns_.size()) throw DimensionMismatch("sparse map applied outside its domain");
    out.add_scaled(columns_[j], c);
  }
  return out;
}

LinMap SparseMap::to_dense() const {
  LinMap out(rows_, columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, v] : columns_[j]) out(i, j) = v;
  }
  return out;
}

SparseVec tensor(const SparseVec& u, const SparseVec& v, std::size_t right_dim) {
  SparseVec out;
  for (const auto& [i, a] : u) {
    for (const auto& [j, b] : v) out.add(i * right_dim + j, a * b);
  }
  return out;
}

SparseVec apply_kron(const SparseMap& f, const SparseMap& g, const SparseVec& v) {
  SparseVec out;
  const std::size_t gc = g.cols();
  for (const auto& [idx, c] : v) {
    SparseVec piece = tensor(f.column(idx / gc), g.column(idx % gc), g.rows());
    out.add_scaled(piece, c);
  }
  return out;
}

SparseVec apply_right(std::size_t n_left, const SparseMap& f, const SparseVec& v) {
  SparseVec out;
  const std::size_t fc = f.cols();
  for (const auto& [idx, c] : v) {
    const std::size_t i = idx / fc;
    if (i >= n_left) throw DimensionMismatch("left leg index out of range");
    for (const auto& [k, b] : f.column(idx % fc)) out.add(i * f.rows() + k, c * b);
  }
  return out;
}

SparseVec apply_left(const SparseMap& f, std::size_t n_right, const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, c] : v) {
    const std::size_t j = idx % n_right;
    for (const auto& [k, b] : f.column(idx / n_right)) out.add(k * n_right + j, c * b);
  }
  return out;
}

SparseVec flip(const SparseVec& v, std::size_t n_left, std::size_t n_right) {
  SparseVec out;
  for (const auto& [idx, c] : v) out.add((idx % n_right) * n_left + idx / n_right, c);
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::optional<SolutionSpace> solve_affine(const SparseSystem& system) {
  if (system.rows.size() != system.rhs.size()) throw DimensionMismatch("row count differs from rhs length");
  const std::size_t n = system.num_vars;
  DisjointSets sets(n);
  for (const auto& row : system.rows) {
    std::optional<std::size_t> first;
    for (const auto& [var, coef] : row) {
      if (var >= n) throw DimensionMismatch("equation references an unknown out of range");
      if (first) sets.unite(*first, var);
      else first = var;
    }
  }

  // Blocks keyed by representative; rows attached to the block of any of their unknowns.
  std::unordered_map<std::size_t, std::vector<std::size_t>> block_rows;
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    const auto& row = system.rows[r];
    if (row.empty()) {
      if (!system.rhs[r].is_zero()) return std::nullopt;
      continue;
    }
    block_rows[sets.find(row.begin()->first)].push_back(r);
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> block_vars;
  std::vector<bool> constrained(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (block_rows.count(root)) {
      block_vars[root].push_back(v);
      constrained[v] = true;
    }
  }

  SolutionSpace out;
  out.particular = Vec(n);
  // free variable -> (pivot variable, coefficient in its nullspace vector)
  std::map<std::size_t, SparseVec> null_vectors;
  for (std::size_t v = 0; v < n; ++v) {
    if (!constrained[v]) null_vectors[v] = SparseVec::unit(v);
  }

  std::vector<std::size_t> roots;
  roots.reserve(block_rows.size());
  for (const auto& [root, rows] : block_rows) roots.push_back(root);
  std::sort(roots.begin(), roots.end());

  for (const std::size_t root : roots) {
    const auto& rows = block_rows[root];
    const auto& vars = block_vars[root];
    const std::size_t nv = vars.size();
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < nv; ++i) local[vars[i]] = i;

    std::vector<std::vector<Scalar>> m(rows.size(), std::vector<Scalar>(nv + 1));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [var, coef] : system.rows[rows[r]]) m[r][local[var]] = coef;
      m[r][nv] = system.rhs[rows[r]];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < nv && pr < m.size(); ++c) {
      std::size_t p = pr;
      while (p < m.size() && m[p][c].is_zero()) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[pr]);
      const Scalar inv = m[pr][c].inverse();
      for (std::size_t j = c; j <= nv; ++j) {
        if (!m[pr][j].is_zero()) m[pr][j] *= inv;
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == pr || m[i][c].is_zero()) continue;
        const Scalar factor = m[i][c];
        for (std::size_t j = c; j <= nv; ++j) {
          if (!m[pr][j].is_zero()) m[i][j] -= factor * m[pr][j];
        }
      }
      pivot_cols.push_back(c);
      ++pr;
    }
    for (std::size_t i = pr; i < m.size(); ++i) {
      if (!m[i][nv].is_zero()) return std::nullopt;
    }

    std::vector<bool> is_pivot(nv, false);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      is_pivot[pivot_cols[i]] = true;
      out.particular[vars[pivot_cols[i]]] = m[i][nv];
    }
    for (std::size_t c = 0; c < nv; ++c) {
      if (is_pivot[c]) continue;
      SparseVec nv_vec = SparseVec::unit(vars[c]);
      for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        if (!m[i][c].is_zero()) nv_vec.add(vars[pivot_cols[i]], -m[i][c]);
      }
      null_vectors[vars[c]] = std::move(nv_vec);
    }
  }

  for (auto& [var, vec] : null_vectors) {
    out.free_variables.push_back(var);
    out.nullspace.push_back(std::move(vec));
  }
  return out;
}

std::optional<SolutionSpace> solve_affine(const LinMap& a, const Vec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_affine: rows(A) != length(b)");
  SparseSystem system;
  system.num_vars = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVec row;
    for (std::size_t j = 0; j < a.cols(); ++j) row.add(j, a(i, j));
    system.add_equation(std::move(row), b[i]);
  }
  return solve_affine(system);
}

}  // namespace hombra
