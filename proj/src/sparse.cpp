#include "chopf/sparse.hpp"

#include <algorithm>

#include "chopf/error.hpp"

namespace chopf {

SparseVec SparseVec::unit(std::size_t index, const FieldSpec& field) { return single(index, Scalar::one(field)); }

SparseVec SparseVec::single(std::size_t index, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && v.entries_.back().second.is_zero()) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().second.is_zero()) v.entries_.pop_back();
  return v;
}

const Scalar* SparseVec::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

Scalar SparseVec::coeff(std::size_t index, const FieldSpec& field) const {
  const Scalar* s = find(index);
  return s ? *s : Scalar::zero(field);
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + x.entries_.size());
  auto it = entries_.begin();
  auto jt = x.entries_.begin();
  while (it != entries_.end() || jt != x.entries_.end()) {
    if (jt == x.entries_.end() || (it != entries_.end() && it->first < jt->first)) {
      merged.push_back(std::move(*it));
      ++it;
    } else if (it == entries_.end() || jt->first < it->first) {
      merged.emplace_back(jt->first, a * jt->second);
      ++jt;
    } else {
      Scalar s = it->second + a * jt->second;
      if (!s.is_zero()) merged.emplace_back(it->first, std::move(s));
      ++it;
      ++jt;
    }
  }
  entries_ = std::move(merged);
}

SparseVec SparseVec::scaled(const Scalar& a) const {
  SparseVec out;
  if (a.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.entries_.emplace_back(i, v * a);
  return out;
}

SparseVec& SparseVec::operator+=(const SparseVec& other) {
  if (other.is_zero()) return *this;
  axpy(Scalar::one(other.entries_.front().second.field()), other);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& other) {
  if (other.is_zero()) return *this;
  axpy(Scalar(other.entries_.front().second.field(), -1), other);
  return *this;
}

SparseVec kron(const SparseVec& left, const SparseVec& right, std::size_t right_dim) {
  std::vector<SparseVec::Entry> out;
  out.reserve(left.nnz() * right.nnz());
  for (const auto& [i, a] : left.entries()) {
    for (const auto& [j, b] : right.entries()) out.emplace_back(i * right_dim + j, a * b);
  }
  // Already sorted: i-major with j ascending.
  return SparseVec::from_entries(std::move(out));
}

SparseMatrix SparseMatrix::identity(std::size_t n, const FieldSpec& field) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVec::unit(i, field);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVec> columns) {
  SparseMatrix m;
  m.rows_ = rows;
  for (const auto& c : columns) {
    if (!c.is_zero() && c.entries().back().first >= rows) {
      throw Error(ErrorCode::DimensionMismatch, "column entry outside matrix rows");
    }
  }
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  std::vector<std::vector<SparseVec::Entry>> cols_entries(cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!rows[i][j].is_zero()) cols_entries[j].emplace_back(i, rows[i][j]);
    }
  }
  for (std::size_t j = 0; j < cols; ++j) m.columns_[j] = SparseVec::from_entries(std::move(cols_entries[j]));
  return m;
}

SparseMatrix SparseMatrix::row(const SparseVec& entries, std::size_t cols) {
  SparseMatrix m(1, cols);
  for (const auto& [j, v] : entries.entries()) {
    if (j >= cols) throw Error(ErrorCode::DimensionMismatch, "row entry outside matrix columns");
    m.columns_[j] = SparseVec::single(0, v);
  }
  return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVec v) {
  if (!v.is_zero() && v.entries().back().first >= rows_) {
    throw Error(ErrorCode::DimensionMismatch, "column entry outside matrix rows");
  }
  columns_.at(j) = std::move(v);
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j, const FieldSpec& field) const {
  return columns_.at(j).coeff(i, field);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [j, a] : v.entries()) {
    if (j >= columns_.size()) throw Error(ErrorCode::DimensionMismatch, "vector index outside matrix domain");
    for (const auto& [i, b] : columns_[j].entries()) out.emplace_back(i, a * b);
  }
  return SparseVec::from_entries(std::move(out));
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
  std::vector<std::vector<SparseVec::Entry>> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, v] : columns_[j].entries()) rows[i].emplace_back(j, v);
  }
  std::vector<SparseVec> out;
  out.reserve(rows_);
  for (auto& r : rows) out.push_back(SparseVec::from_entries(std::move(r)));
  return out;
}

SparseMatrix SparseMatrix::transpose() const { return from_columns(cols(), row_vectors()); }

std::vector<std::vector<Scalar>> SparseMatrix::to_dense(const FieldSpec& field) const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols(), Scalar::zero(field)));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, v] : columns_[j].entries()) out[i][j] = v;
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& a) const {
  SparseMatrix m(rows_, cols());
  for (std::size_t j = 0; j < columns_.size(); ++j) m.columns_[j] = columns_[j].scaled(a);
  return m;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols() != other.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  for (std::size_t j = 0; j < columns_.size(); ++j) columns_[j] += other.columns_[j];
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols() != other.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  for (std::size_t j = 0; j < columns_.size(); ++j) columns_[j] -= other.columns_[j];
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compose " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " with " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
  }
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

std::optional<std::size_t> SparseMatrix::first_difference(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols() != other.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "comparing matrices of different shapes");
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!(columns_[j] == other.columns_[j])) return j;
  }
  return std::nullopt;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      out.set_column(i * b.cols() + j, kron(a.column(i), b.column(j), b.rows()));
    }
  }
  return out;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  if (rows_.empty()) return v;
  SparseVec out = v;
  // Full RREF: each row vanishes on the other pivots, so one pass with the original
  // coefficients clears every pivot column.
  for (const auto& [i, a] : v.entries()) {
    auto it = rows_.find(i);
    if (it != rows_.end()) out.axpy(-a, it->second);
  }
  return out;
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.is_zero()) return false;
  if (dim_ != 0 && r.entries().back().first >= dim_) throw Error(ErrorCode::DimensionMismatch, "vector outside ambient");
  r = r.scaled(r.leading_value().inverse());
  const std::size_t pivot = r.leading_index();
  for (auto& [p, row] : rows_) {
    if (const Scalar* c = row.find(pivot)) row.axpy(-*c, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVec> EchelonBasis::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVec> null_space(const SparseMatrix& m, const FieldSpec& field) {
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_vectors()) basis.insert(r);
  const auto rows = basis.rows();
  const auto pivots = basis.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<SparseVec::Entry> entries{{f, Scalar::one(field)}};
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (const Scalar* c = rows[k].find(f)) entries.emplace_back(pivots[k], -*c);
    }
    out.push_back(SparseVec::from_entries(std::move(entries)));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_vectors()) basis.insert(r);
  return basis.rank();
}

}  // namespace chopf
