#pragma once

// Dense matrices and subspaces over an exact field, with canonical reduced
// row-echelon representatives so that equal subspaces compare equal.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinor/error.hpp"
#include "spinor/field.hpp"

namespace spinor::iso {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
Vec<F> zero_vector(const F& field, int size) {
  return Vec<F>(static_cast<std::size_t>(size), field.zero());
}

template <class F>
Vec<F> add(const F& field, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

template <class F>
Vec<F> scale(const F& field, const typename F::Element& c, const Vec<F>& a) {
  Vec<F> out = a;
  for (auto& x : out) x = field.mul(c, x);
  return out;
}

template <class F>
bool is_zero_vector(const F& field, const Vec<F>& a) {
  return std::all_of(a.begin(), a.end(), [&](const auto& x) { return field.is_zero(x); });
}

template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

  static Matrix from_rows(F field, int cols, const std::vector<Vec<F>>& rows) {
    Matrix m(std::move(field), static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw ArgumentError("row length mismatch");
      for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Element& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Element& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Vec<F> row(int i) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                  data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ArgumentError("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
      }
    return out;
  }

  // Gauss-Jordan to reduced row-echelon form in place; returns pivot columns.
  std::vector<int> reduce() {
    std::vector<int> pivots;
    int lead_row = 0;
    for (int col = 0; col < cols_ && lead_row < rows_; ++col) {
      int pivot = -1;
      for (int i = lead_row; i < rows_; ++i)
        if (!field_.is_zero((*this)(i, col))) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      swap_rows(pivot, lead_row);
      const auto inv = field_.inv((*this)(lead_row, col));
      for (int j = col; j < cols_; ++j) (*this)(lead_row, j) = field_.mul(inv, (*this)(lead_row, j));
      for (int i = 0; i < rows_; ++i) {
        if (i == lead_row || field_.is_zero((*this)(i, col))) continue;
        const auto factor = (*this)(i, col);
        for (int j = col; j < cols_; ++j)
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(factor, (*this)(lead_row, j)));
      }
      pivots.push_back(col);
      ++lead_row;
    }
    return pivots;
  }

  int rank() const {
    Matrix copy = *this;
    return static_cast<int>(copy.reduce().size());
  }

  // Basis of { v : M v = 0 }.
  std::vector<Vec<F>> right_kernel() const {
    Matrix r = *this;
    const auto pivots = r.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vec<F> v = zero_vector(field_, cols_);
      v[free] = field_.one();
      for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = field_.neg(r(static_cast<int>(t), free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Basis of { u : u M = 0 }.
  std::vector<Vec<F>> left_kernel() const { return transpose().right_kernel(); }

  bool is_square() const { return rows_ == cols_; }

  // A + A^T = 0 with zero diagonal (the diagonal condition matters in
  // characteristic 2).
  bool is_skew() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
      if (!field_.is_zero((*this)(i, i))) return false;
      for (int j = i + 1; j < cols_; ++j)
        if (!field_.is_zero(field_.add((*this)(i, j), (*this)(j, i)))) return false;
    }
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.equal(data_[i], o.data_[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) out << "; ";
      for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << field_.format((*this)(i, j));
    }
    out << "]";
    return out.str();
  }

 private:
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  F field_;
  int rows_;
  int cols_;
  std::vector<Element> data_;
};

template <class F>
class Subspace {
 public:
  static Subspace span(const F& field, int ambient, const std::vector<Vec<F>>& vectors) {
    Matrix<F> m = Matrix<F>::from_rows(field, ambient, vectors);
    const auto pivots = m.reduce();
    std::vector<Vec<F>> rows;
    rows.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) rows.push_back(m.row(static_cast<int>(i)));
    return Subspace(Matrix<F>::from_rows(field, ambient, rows));
  }

  static Subspace zero(const F& field, int ambient) { return span(field, ambient, {}); }

  static Subspace whole(const F& field, int ambient) {
    std::vector<Vec<F>> rows;
    for (int i = 0; i < ambient; ++i) {
      Vec<F> v = zero_vector(field, ambient);
      v[i] = field.one();
      rows.push_back(std::move(v));
    }
    return span(field, ambient, rows);
  }

  const F& field() const { return basis_.field(); }
  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  // Rows in reduced row-echelon form.
  const Matrix<F>& basis() const { return basis_; }
  std::vector<Vec<F>> vectors() const {
    std::vector<Vec<F>> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const Vec<F>& v) const {
    auto rows = vectors();
    rows.push_back(v);
    return Matrix<F>::from_rows(field(), ambient_dim(), rows).rank() == dim();
  }

  bool contains(const Subspace& other) const {
    require_same_ambient(other);
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  void require_same_ambient(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim() || !(field() == other.field()))
      throw ArgumentError("subspaces live in different ambient spaces");
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  std::string to_string() const { return basis_.to_string(); }

 private:
  explicit Subspace(Matrix<F> basis) : basis_(std::move(basis)) {}

  Matrix<F> basis_;
};

template <class F>
Subspace<F> join(const Subspace<F>& s, const Subspace<F>& t) {
  s.require_same_ambient(t);
  auto rows = s.vectors();
  for (auto& v : t.vectors()) rows.push_back(std::move(v));
  return Subspace<F>::span(s.field(), s.ambient_dim(), rows);
}

template <class F>
Subspace<F> meet(const Subspace<F>& s, const Subspace<F>& t) {
  s.require_same_ambient(t);
  const F& field = s.field();
  auto rows = s.vectors();
  for (auto& v : t.vectors()) rows.push_back(std::move(v));
  // (a, b) with a S + b T = 0 gives a S in the intersection.
  const auto stacked = Matrix<F>::from_rows(field, s.ambient_dim(), rows);
  std::vector<Vec<F>> common;
  for (const auto& u : stacked.left_kernel()) {
    Vec<F> v = zero_vector(field, s.ambient_dim());
    for (int i = 0; i < s.dim(); ++i)
      if (!field.is_zero(u[i])) v = add(field, v, scale(field, u[i], s.basis().row(i)));
    common.push_back(std::move(v));
  }
  return Subspace<F>::span(field, s.ambient_dim(), common);
}

}  // namespace spinor::iso
