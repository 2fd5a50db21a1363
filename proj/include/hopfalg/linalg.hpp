#pragma once

// Exact linear algebra: sparse vectors, matrices with dense/sparse storage,
// 3-index tensors, reduced row echelon form, kernels and quotient spaces.
//
// Flattening convention everywhere: the pair (i, j) in a product of spaces of
// dimensions (m, n) is the index i * n + j.

#include "hopfalg/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace hopfalg {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sparse vector; entries sorted by index, zeros never stored.
class Vec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  Vec() = default;
  explicit Vec(std::size_t dim) : dim_(dim) {}

  static Vec basis(std::size_t dim, std::size_t i, const Scalar& one = Scalar(1)) {
    Vec v(dim);
    v.entries_.emplace_back(i, one);
    return v;
  }

  static Vec from_dense(const std::vector<Scalar>& xs) {
    Vec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!xs[i].is_zero()) v.entries_.emplace_back(i, xs[i]);
    return v;
  }

  /// Entries must be sorted by index and nonzero.
  static Vec from_sorted(std::size_t dim, std::vector<Entry> entries) {
    Vec v(dim);
    v.entries_ = std::move(entries);
    return v;
  }

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Scalar at(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    return (it != entries_.end() && it->first == i) ? it->second : Scalar(0);
  }

  void set(std::size_t i, const Scalar& v) {
    if (i >= dim_) throw DimensionError("Vec::set index out of range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    bool present = it != entries_.end() && it->first == i;
    if (v.is_zero()) {
      if (present) entries_.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      entries_.insert(it, {i, v});
    }
  }

  Vec scaled(const Scalar& c) const {
    Vec r(dim_);
    if (c.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& [i, v] : entries_) {
      Scalar w = v * c;
      if (!w.is_zero()) r.entries_.emplace_back(i, std::move(w));
    }
    return r;
  }

  friend Vec operator+(const Vec& a, const Vec& b) { return combine(a, b, false); }
  friend Vec operator-(const Vec& a, const Vec& b) { return combine(a, b, true); }
  friend Vec operator-(const Vec& a) { return a.scaled(Scalar(-1)); }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (a.entries_[k].first != b.entries_[k].first || !(a.entries_[k].second == b.entries_[k].second))
        return false;
    return true;
  }

  std::vector<Scalar> to_dense() const {
    std::vector<Scalar> out(dim_);
    for (const auto& [i, v] : entries_) out[i] = v;
    return out;
  }

 private:
  static Vec combine(const Vec& a, const Vec& b, bool subtract) {
    if (a.dim_ != b.dim_) throw DimensionError("Vec dimension mismatch");
    Vec r(a.dim_);
    r.entries_.reserve(a.entries_.size() + b.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        r.entries_.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        const auto& [k, v] = b.entries_[j++];
        r.entries_.emplace_back(k, subtract ? -v : v);
      } else {
        Scalar w = subtract ? a.entries_[i].second - b.entries_[j].second
                            : a.entries_[i].second + b.entries_[j].second;
        if (!w.is_zero()) r.entries_.emplace_back(a.entries_[i].first, std::move(w));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Kronecker product of vectors: (x ⊗ y)[i * dim(y) + j] = x[i] y[j].
inline Vec kron(const Vec& x, const Vec& y) {
  std::vector<Vec::Entry> out;
  out.reserve(x.nnz() * y.nnz());
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.emplace_back(i * y.dim() + j, a * b);
  return Vec::from_sorted(x.dim() * y.dim(), std::move(out));
}

/// Dense scratch buffer for summing many sparse contributions.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim = 0) : buf_(dim), used_(dim, 0) {}

  std::size_t dim() const { return buf_.size(); }

  void add(std::size_t i, const Scalar& c) {
    if (c.is_zero()) return;
    if (!used_[i]) {
      used_[i] = 1;
      touched_.push_back(i);
      buf_[i] = c;
    } else {
      buf_[i] += c;
    }
  }

  void axpy(const Scalar& c, const Vec& v) {
    if (c.is_zero()) return;
    if (c.is_one()) {
      for (const auto& [i, x] : v) add(i, x);
    } else {
      for (const auto& [i, x] : v) add(i, c * x);
    }
  }

  /// Returns the accumulated vector and resets the buffer.
  Vec take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<Vec::Entry> out;
    out.reserve(touched_.size());
    for (std::size_t i : touched_) {
      if (!buf_[i].is_zero()) out.emplace_back(i, std::move(buf_[i]));
      buf_[i] = Scalar(0);
      used_[i] = 0;
    }
    touched_.clear();
    return Vec::from_sorted(buf_.size(), std::move(out));
  }

 private:
  std::vector<Scalar> buf_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
};

/// Linear map as a matrix acting on column vectors: rows = target dimension,
/// cols = source dimension, column j = image of e_j. Small matrices are
/// stored densely (column-major); above the threshold, as sparse columns.
class Matrix {
 public:
  enum class Storage { Dense, Sparse };
  static constexpr std::size_t kDefaultDenseThreshold = 64;

  static Storage auto_storage(std::size_t rows, std::size_t cols,
                              std::size_t threshold = kDefaultDenseThreshold) {
    return std::max(rows, cols) <= threshold ? Storage::Dense : Storage::Sparse;
  }

  Matrix() : Matrix(0, 0) {}
  Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, auto_storage(rows, cols)) {}
  Matrix(std::size_t rows, std::size_t cols, Storage s) : rows_(rows), cols_(cols) {
    if (s == Storage::Dense)
      store_ = Dense(rows * cols);
    else
      store_ = Sparse(cols, Vec(rows));
  }

  static Matrix identity(std::size_t n, const Scalar& one = Scalar(1)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].dim() != cols) throw DimensionError("row length mismatch");
      for (const auto& [j, v] : rows[i]) m.set(i, j, v);
    }
    return m;
  }

  /// Nested initializer for tests and catalog data; entries are integers.
  static Matrix from_table(const std::vector<std::vector<Scalar>>& table) {
    std::size_t r = table.size(), c = r ? table[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (table[i].size() != c) throw DimensionError("ragged table");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, table[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Storage storage() const { return std::holds_alternative<Dense>(store_) ? Storage::Dense : Storage::Sparse; }

  Scalar at(std::size_t i, std::size_t j) const {
    check(i, j);
    if (auto* d = std::get_if<Dense>(&store_)) return (*d)[j * rows_ + i];
    return std::get<Sparse>(store_)[j].at(i);
  }

  void set(std::size_t i, std::size_t j, const Scalar& v) {
    check(i, j);
    if (auto* d = std::get_if<Dense>(&store_))
      (*d)[j * rows_ + i] = v;
    else
      std::get<Sparse>(store_)[j].set(i, v);
  }

  Vec column(std::size_t j) const {
    if (j >= cols_) throw DimensionError("column index out of range");
    if (auto* s = std::get_if<Sparse>(&store_)) return (*s)[j];
    const auto& d = std::get<Dense>(store_);
    std::vector<Vec::Entry> out;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!d[j * rows_ + i].is_zero()) out.emplace_back(i, d[j * rows_ + i]);
    return Vec::from_sorted(rows_, std::move(out));
  }

  void set_column(std::size_t j, const Vec& v) {
    if (v.dim() != rows_) throw DimensionError("column length mismatch");
    if (auto* s = std::get_if<Sparse>(&store_)) {
      (*s)[j] = v;
      return;
    }
    auto& d = std::get<Dense>(store_);
    for (std::size_t i = 0; i < rows_; ++i) d[j * rows_ + i] = Scalar(0);
    for (const auto& [i, x] : v) d[j * rows_ + i] = x;
  }

  std::vector<Vec> columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  std::vector<Vec> row_vectors() const {
    std::vector<std::vector<Vec::Entry>> rs(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : column(j)) rs[i].emplace_back(j, v);
    std::vector<Vec> out;
    out.reserve(rows_);
    for (auto& r : rs) out.push_back(Vec::from_sorted(cols_, std::move(r)));
    return out;
  }

  Vec apply(const Vec& x) const {
    if (x.dim() != cols_) throw DimensionError("Matrix::apply dimension mismatch");
    Accumulator acc(rows_);
    apply_into(x, acc);
    return acc.take();
  }

  /// acc += M x
  void apply_into(const Vec& x, Accumulator& acc, const Scalar& scale = Scalar(1)) const {
    if (auto* s = std::get_if<Sparse>(&store_)) {
      for (const auto& [j, c] : x) acc.axpy(c * scale, (*s)[j]);
      return;
    }
    const auto& d = std::get<Dense>(store_);
    for (const auto& [j, c] : x) {
      Scalar cs = c * scale;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!d[j * rows_ + i].is_zero()) acc.add(i, cs * d[j * rows_ + i]);
    }
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("Matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    Accumulator acc(a.rows_);
    for (std::size_t j = 0; j < b.cols_; ++j) {
      a.apply_into(b.column(j), acc);
      r.set_column(j, acc.take());
    }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) r.set_column(j, a.column(j) + b.column(j));
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) r.set_column(j, a.column(j) - b.column(j));
    return r;
  }

  Matrix transpose() const { return from_columns(cols_, row_vectors()); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!(a.column(j) == b.column(j))) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t j = 0; j < cols_; ++j) {
      Vec c = column(j);
      if (c.nnz() != 1 || c.entries()[0].first != j || !c.entries()[0].second.is_one()) return false;
    }
    return true;
  }

 private:
  using Dense = std::vector<Scalar>;
  using Sparse = std::vector<Vec>;

  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  }
  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::variant<Dense, Sparse> store_;
};

/// Three-index tensor t[i][j][k], stored as one sparse vector over k per
/// flattened (i, j).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), slices_(d0 * d1, Vec(d2)) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  const Vec& slice(std::size_t i, std::size_t j) const { return slices_.at(i * d1_ + j); }
  void set_slice(std::size_t i, std::size_t j, Vec v) {
    if (v.dim() != d2_) throw DimensionError("tensor slice length mismatch");
    slices_.at(i * d1_ + j) = std::move(v);
  }

  Scalar at(std::size_t i, std::size_t j, std::size_t k) const { return slice(i, j).at(k); }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { slices_.at(i * d1_ + j).set(k, v); }

  /// Σ x_i y_j t[i][j][·]
  Vec contract(const Vec& x, const Vec& y) const {
    Accumulator acc(d2_);
    contract_into(x, y, acc);
    return acc.take();
  }

  void contract_into(const Vec& x, const Vec& y, Accumulator& acc, const Scalar& scale = Scalar(1)) const {
    for (const auto& [i, a] : x) {
      Scalar as = a * scale;
      for (const auto& [j, b] : y) acc.axpy(as * b, slice(i, j));
    }
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& s : slices_) n += s.nnz();
    return n;
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Vec> slices_;
};

/// Reduced row echelon form of a list of row vectors. Pivots ascending; the
/// result is canonical (leftmost pivot, topmost row) and bit-identical for
/// identical input.
struct Rref {
  std::size_t ncols = 0;
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::vector<Vec> rows;            // pivot entry 1, zero at other pivots

  std::size_t rank() const { return rows.size(); }
};

inline Rref rref(const std::vector<Vec>& input, std::size_t ncols) {
  std::vector<Vec> basis;                                     // echelon rows
  std::vector<std::ptrdiff_t> pivot_row(ncols, -1);           // column -> basis index
  std::vector<Scalar> work(ncols);
  std::vector<char> live(ncols, 0);
  using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>;

  for (const Vec& v : input) {
    if (v.dim() != ncols) throw DimensionError("rref row length mismatch");
    if (v.is_zero()) continue;
    MinHeap heap;
    std::vector<std::size_t> touched;
    for (const auto& [c, x] : v) {
      work[c] = x;
      live[c] = 1;
      touched.push_back(c);
      heap.push(c);
    }
    std::vector<Vec::Entry> rest;
    std::ptrdiff_t last = -1;
    while (!heap.empty()) {
      std::size_t c = heap.top();
      heap.pop();
      if (std::ptrdiff_t(c) == last) continue;
      last = std::ptrdiff_t(c);
      if (work[c].is_zero()) continue;
      if (pivot_row[c] >= 0) {
        Scalar f = work[c];
        for (const auto& [k, y] : basis[pivot_row[c]]) {
          if (!live[k]) {
            live[k] = 1;
            touched.push_back(k);
            work[k] = Scalar(0);
            heap.push(k);
          }
          work[k] -= f * y;
        }
      } else {
        rest.emplace_back(c, work[c]);
      }
    }
    for (std::size_t c : touched) {
      live[c] = 0;
      work[c] = Scalar(0);
    }
    if (rest.empty()) continue;
    Scalar lead_inv = rest.front().second.inverse();
    for (auto& e : rest) e.second = e.second * lead_inv;
    pivot_row[rest.front().first] = std::ptrdiff_t(basis.size());
    basis.push_back(Vec::from_sorted(ncols, std::move(rest)));
  }

  Rref out;
  out.ncols = ncols;
  for (std::size_t c = 0; c < ncols; ++c)
    if (pivot_row[c] >= 0) out.pivots.push_back(c);
  std::vector<Vec> reduced(out.pivots.size());
  std::vector<std::ptrdiff_t> slot(ncols, -1);
  for (std::size_t r = 0; r < out.pivots.size(); ++r) slot[out.pivots[r]] = std::ptrdiff_t(r);
  Accumulator acc(ncols);
  // back substitution, bottom pivot first; lower rows are already fully reduced
  for (std::size_t r = out.pivots.size(); r-- > 0;) {
    const Vec& row = basis[pivot_row[out.pivots[r]]];
    acc.axpy(Scalar(1), row);
    for (const auto& [c, x] : row) {
      if (c == out.pivots[r] || slot[c] < 0) continue;
      acc.axpy(-x, reduced[slot[c]]);
    }
    reduced[r] = acc.take();
  }
  out.rows = std::move(reduced);
  return out;
}

inline std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim) { return rref(vectors, dim).rank(); }

struct KernelResult {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;
};

/// Rank and a kernel basis (one vector per free column, ascending).
inline KernelResult rref_kernel(const Matrix& m) {
  Rref r = rref(m.row_vectors(), m.cols());
  KernelResult out;
  out.rank = r.rank();
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Vec::Entry>> ker(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f)
    if (!is_pivot[f]) ker[f].emplace_back(f, Scalar(1));
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (const auto& [c, x] : r.rows[i])
      if (!is_pivot[c]) ker[c].emplace_back(r.pivots[i], -x);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    auto& e = ker[f];
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.kernel_basis.push_back(Vec::from_sorted(m.cols(), std::move(e)));
  }
  return out;
}

/// ambient / span(relations), with an explicit projection and section.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> relations;
  Matrix proj;     // quot_dim x ambient_dim
  Matrix section;  // ambient_dim x quot_dim

  std::size_t quot_dim() const { return proj.rows(); }
  Vec project(const Vec& v) const { return proj.apply(v); }
};

inline QuotientSpace build_quotient(std::size_t ambient_dim, std::vector<Vec> relations) {
  Rref r = rref(relations, ambient_dim);
  std::vector<std::ptrdiff_t> free_index(ambient_dim, -1);
  std::vector<char> is_pivot(ambient_dim, 0);
  for (std::size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) {
      free_index[c] = std::ptrdiff_t(free_cols.size());
      free_cols.push_back(c);
    }
  std::size_t q = free_cols.size();
  QuotientSpace out;
  out.ambient_dim = ambient_dim;
  out.proj = Matrix(q, ambient_dim);
  out.section = Matrix(ambient_dim, q);
  for (std::size_t k = 0; k < q; ++k) {
    out.proj.set_column(free_cols[k], Vec::basis(q, k));
    out.section.set_column(k, Vec::basis(ambient_dim, free_cols[k]));
  }
  // e_pivot ≡ -Σ_free row[f] e_f
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::vector<Vec::Entry> col;
    for (const auto& [c, x] : r.rows[i])
      if (!is_pivot[c]) col.emplace_back(std::size_t(free_index[c]), -x);
    out.proj.set_column(r.pivots[i], Vec::from_sorted(q, std::move(col)));
  }
  out.relations = std::move(relations);
  return out;
}

/// Kronecker product f ⊗ g: (f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j).
inline Matrix tensor_of_maps(const Matrix& f, const Matrix& g) {
  Matrix out(f.rows() * g.rows(), f.cols() * g.cols());
  std::vector<Vec> gcols = g.columns();
  for (std::size_t i = 0; i < f.cols(); ++i) {
    Vec fi = f.column(i);
    for (std::size_t j = 0; j < g.cols(); ++j) out.set_column(i * g.cols() + j, kron(fi, gcols[j]));
  }
  return out;
}

inline Matrix matrix_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("matrix_inverse: not square");
  std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0);
  std::vector<Vec> rows = m.row_vectors();
  std::vector<Vec> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec::Entry> e(rows[i].begin(), rows[i].end());
    e.emplace_back(n + i, Scalar(1));
    aug.push_back(Vec::from_sorted(2 * n, std::move(e)));
  }
  Rref r = rref(aug, 2 * n);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, x] : r.rows[i])
      if (c >= n) inv.set(i, c - n, x);
  return inv;
}

}  // namespace hopfalg
