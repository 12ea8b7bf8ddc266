#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chopf/scalar.hpp"

namespace chopf {

/// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::size_t index, const FieldSpec& field);
  static SparseVec single(std::size_t index, Scalar value);
  /// Sorts, merges duplicate indices and drops zeros.
  static SparseVec from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  std::size_t leading_index() const { return entries_.front().first; }
  const Scalar& leading_value() const { return entries_.front().second; }

  const Scalar* find(std::size_t index) const;
  Scalar coeff(std::size_t index, const FieldSpec& field) const;

  /// this += a * x
  void axpy(const Scalar& a, const SparseVec& x);
  SparseVec scaled(const Scalar& a) const;

  SparseVec& operator+=(const SparseVec& other);
  SparseVec& operator-=(const SparseVec& other);
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Tensor product of coordinate vectors: index (i, j) -> i * right_dim + j.
SparseVec kron(const SparseVec& left, const SparseVec& right, std::size_t right_dim);

/// Column-sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix identity(std::size_t n, const FieldSpec& field);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVec> columns);
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
  /// A 1 x n matrix from a row vector.
  static SparseMatrix row(const SparseVec& entries, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVec& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVec>& columns() const { return columns_; }
  void set_column(std::size_t j, SparseVec v);
  Scalar at(std::size_t i, std::size_t j, const FieldSpec& field) const;
  std::size_t nnz() const;

  SparseVec apply(const SparseVec& v) const;
  /// Row i as a sparse vector over columns.
  std::vector<SparseVec> row_vectors() const;
  SparseMatrix transpose() const;
  std::vector<std::vector<Scalar>> to_dense(const FieldSpec& field) const;

  SparseMatrix scaled(const Scalar& a) const;
  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  /// Composition: (a * b)(v) = a(b(v)).
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  /// First column where the matrices differ, if any.
  std::optional<std::size_t> first_difference(const SparseMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> columns_;
};

/// Kronecker product of maps with the i-major pair ordering used for tensor spaces.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Incrementally maintained reduced row echelon basis (first-nonzero-column pivots).
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Residual of v after reduction against the basis (zero iff v is in the span).
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  /// Adds v; returns false if it was already in the span.
  bool insert(const SparseVec& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  /// Rows ordered by pivot column.
  std::vector<SparseVec> rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t dim_ = 0;
  std::map<std::size_t, SparseVec> rows_;
};

/// Null space basis of a matrix (domain-side vectors), built from the RREF of its rows.
std::vector<SparseVec> null_space(const SparseMatrix& m, const FieldSpec& field);
std::size_t rank(const SparseMatrix& m);

}  // namespace chopf
