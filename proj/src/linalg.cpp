#include "chopf/linalg.hpp"

#include <map>
#include <sstream>

#include "chopf/error.hpp"

namespace chopf {

GradedVectorSpace::GradedVectorSpace(FieldSpec field, FgAbGroup group, std::vector<GroupElement> degrees,
                                     std::vector<std::string> names)
    : field_(field), group_(std::move(group)), names_(std::move(names)) {
  degrees_.reserve(degrees.size());
  for (const auto& d : degrees) degrees_.push_back(group_.canonicalize(d));
  if (names_.empty()) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) names_.push_back("e" + std::to_string(i));
  }
  if (names_.size() != degrees_.size()) throw Error(ErrorCode::DimensionMismatch, "one name per basis vector");
}

GradedVectorSpace GradedVectorSpace::unit(const FieldSpec& field, const FgAbGroup& group) {
  return GradedVectorSpace(field, group, {group.identity()}, {"1"});
}

bool GradedVectorSpace::same_grading(const GradedVectorSpace& other) const {
  return field_ == other.field_ && group_ == other.group_ && degrees_ == other.degrees_;
}

void GradedVectorSpace::require_compatible(const GradedVectorSpace& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  if (!(group_ == other.group_)) throw Error(ErrorCode::GroupMismatch, group_.to_string() + " vs " + other.group_.to_string());
}

std::vector<SparseVec> GradedVectorSpace::homogeneous_components(const SparseVec& v) const {
  std::map<GroupElement, std::vector<SparseVec::Entry>> parts;
  for (const auto& e : v.entries()) parts[degrees_.at(e.first)].push_back(e);
  std::vector<SparseVec> out;
  for (auto& [d, entries] : parts) out.push_back(SparseVec::from_entries(std::move(entries)));
  return out;
}

std::optional<GroupElement> GradedVectorSpace::degree_of(const SparseVec& v) const {
  if (v.is_zero()) return std::nullopt;
  const GroupElement& d = degrees_.at(v.leading_index());
  for (const auto& e : v.entries()) {
    if (!(degrees_.at(e.first) == d)) return std::nullopt;
  }
  return d;
}

std::string GradedVectorSpace::format(const SparseVec& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    std::string coeff = c.to_string();
    if (!first) os << " + ";
    if (c.is_one()) {
      os << names_.at(i);
    } else {
      os << coeff << "*" << names_.at(i);
    }
    first = false;
  }
  return os.str();
}

GradedVectorSpace tensor_space(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  v.require_compatible(w);
  std::vector<GroupElement> degrees;
  std::vector<std::string> names;
  degrees.reserve(v.dim() * w.dim());
  names.reserve(v.dim() * w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      degrees.push_back(v.group().add(v.degree(i), w.degree(j)));
      names.push_back(v.name(i) + "⊗" + w.name(j));
    }
  }
  return GradedVectorSpace(v.field(), v.group(), std::move(degrees), std::move(names));
}

std::optional<std::pair<std::size_t, std::size_t>> degree_violation(const GradedVectorSpace& domain,
                                                                    const GradedVectorSpace& codomain,
                                                                    const SparseMatrix& matrix) {
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    for (const auto& e : matrix.column(j).entries()) {
      if (!(codomain.degree(e.first) == domain.degree(j))) return std::make_pair(e.first, j);
    }
  }
  return std::nullopt;
}

GradedLinearMap::GradedLinearMap(GradedVectorSpace domain, GradedVectorSpace codomain, SparseMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  domain_.require_compatible(codomain_);
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(matrix_.rows()) + "x" +
                                                  std::to_string(matrix_.cols()) + ", map needs " +
                                                  std::to_string(codomain_.dim()) + "x" + std::to_string(domain_.dim()));
  }
  if (auto bad = degree_violation(domain_, codomain_, matrix_)) {
    throw Error(ErrorCode::NotGraded, "entry (" + std::to_string(bad->first) + "," + std::to_string(bad->second) +
                                          ") maps degree " + domain_.degree(bad->second).to_string() + " to " +
                                          codomain_.degree(bad->first).to_string());
  }
}

GradedLinearMap GradedLinearMap::identity(const GradedVectorSpace& v) {
  return GradedLinearMap(v, v, SparseMatrix::identity(v.dim(), v.field()));
}

GradedLinearMap GradedLinearMap::zero(const GradedVectorSpace& domain, const GradedVectorSpace& codomain) {
  return GradedLinearMap(domain, codomain, SparseMatrix(codomain.dim(), domain.dim()));
}

GradedLinearMap compose(const GradedLinearMap& g, const GradedLinearMap& f) {
  if (!g.domain().same_grading(f.codomain())) {
    throw Error(ErrorCode::DimensionMismatch, "composition of maps with mismatched spaces");
  }
  return GradedLinearMap(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

GradedLinearMap tensor_maps(const GradedLinearMap& f, const GradedLinearMap& g) {
  return GradedLinearMap(tensor_space(f.domain(), g.domain()), tensor_space(f.codomain(), g.codomain()),
                         kron(f.matrix(), g.matrix()));
}

GradedLinearMap braiding_map(const Bicharacter& phi, const GradedVectorSpace& v, const GradedVectorSpace& w) {
  v.require_compatible(w);
  if (!(phi.group() == v.group())) throw Error(ErrorCode::GroupMismatch, "braiding bicharacter on another group");
  if (!(phi.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "braiding bicharacter over another field");
  SparseMatrix m(v.dim() * w.dim(), v.dim() * w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      m.set_column(i * w.dim() + j, SparseVec::single(j * v.dim() + i, phi.eval(v.degree(i), w.degree(j))));
    }
  }
  return GradedLinearMap(tensor_space(v, w), tensor_space(w, v), std::move(m));
}

GradedSubspace::GradedSubspace(GradedVectorSpace ambient, EchelonBasis basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)), rows_(basis_.rows()), pivots_(basis_.pivots()) {}

GradedSubspace GradedSubspace::span(const GradedVectorSpace& ambient, const std::vector<SparseVec>& vectors) {
  EchelonBasis basis(ambient.dim());
  for (const auto& v : vectors) {
    for (const auto& part : ambient.homogeneous_components(v)) basis.insert(part);
  }
  return GradedSubspace(ambient, std::move(basis));
}

GradedSubspace GradedSubspace::from_homogeneous(const GradedVectorSpace& ambient,
                                                const std::vector<SparseVec>& vectors) {
  for (const auto& v : vectors) {
    if (!v.is_zero() && !ambient.degree_of(v)) {
      throw Error(ErrorCode::NotGraded, "spanning vector " + ambient.format(v) + " mixes degrees");
    }
  }
  return span(ambient, vectors);
}

GradedSubspace GradedSubspace::zero(const GradedVectorSpace& ambient) { return span(ambient, {}); }

GradedSubspace GradedSubspace::whole(const GradedVectorSpace& ambient) {
  std::vector<SparseVec> basis;
  for (std::size_t i = 0; i < ambient.dim(); ++i) basis.push_back(SparseVec::unit(i, ambient.field()));
  return span(ambient, basis);
}

std::optional<SparseVec> GradedSubspace::coordinates(const SparseVec& v) const {
  std::vector<SparseVec::Entry> coords;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (const Scalar* c = v.find(pivots_[k])) coords.emplace_back(k, *c);
  }
  SparseVec residual = v;
  for (const auto& [k, c] : coords) residual.axpy(-c, rows_[k]);
  if (!residual.is_zero()) return std::nullopt;
  return SparseVec::from_entries(std::move(coords));
}

GradedVectorSpace GradedSubspace::as_space() const {
  std::vector<GroupElement> degrees;
  std::vector<std::string> names;
  for (const auto& r : rows_) {
    degrees.push_back(*ambient_.degree_of(r));
    if (r.nnz() == 1 && r.leading_value().is_one()) {
      names.push_back(ambient_.name(r.leading_index()));
    } else {
      names.push_back(ambient_.format(r));
    }
  }
  return GradedVectorSpace(ambient_.field(), ambient_.group(), std::move(degrees), std::move(names));
}

SparseMatrix GradedSubspace::inclusion_matrix() const { return SparseMatrix::from_columns(ambient_.dim(), rows_); }

std::optional<SparseVec> tensor_coordinates(const GradedSubspace& left, const GradedSubspace& right,
                                            const SparseVec& v) {
  const std::size_t rdim = right.ambient().dim();
  std::map<std::size_t, std::size_t> left_pivot;
  std::map<std::size_t, std::size_t> right_pivot;
  for (std::size_t k = 0; k < left.pivots().size(); ++k) left_pivot[left.pivots()[k]] = k;
  for (std::size_t k = 0; k < right.pivots().size(); ++k) right_pivot[right.pivots()[k]] = k;
  std::vector<SparseVec::Entry> coords;
  for (const auto& [idx, c] : v.entries()) {
    auto a = left_pivot.find(idx / rdim);
    auto b = right_pivot.find(idx % rdim);
    if (a != left_pivot.end() && b != right_pivot.end()) coords.emplace_back(a->second * right.dim() + b->second, c);
  }
  SparseVec residual = v;
  for (const auto& [k, c] : coords) {
    residual.axpy(-c, kron(left.rows()[k / right.dim()], right.rows()[k % right.dim()], rdim));
  }
  if (!residual.is_zero()) return std::nullopt;
  return SparseVec::from_entries(std::move(coords));
}

GradedSubspace map_kernel(const GradedLinearMap& f) {
  return GradedSubspace::span(f.domain(), null_space(f.matrix(), f.domain().field()));
}

GradedSubspace map_image(const GradedLinearMap& f) {
  return GradedSubspace::span(f.codomain(), f.matrix().columns());
}

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
  if (!a.ambient().same_grading(b.ambient())) throw Error(ErrorCode::AmbientMismatch, "sum of subspaces");
  std::vector<SparseVec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return GradedSubspace::span(a.ambient(), rows);
}

GradedSubspace subspace_intersection(const GradedSubspace& a, const GradedSubspace& b) {
  if (!a.ambient().same_grading(b.ambient())) throw Error(ErrorCode::AmbientMismatch, "intersection of subspaces");
  // Pairs (x, y) with sum x_i a_i = sum y_j b_j: kernel of [A | -B].
  const FieldSpec& f = a.ambient().field();
  std::vector<SparseVec> columns = a.rows();
  for (const auto& r : b.rows()) columns.push_back(r.scaled(Scalar(f, -1)));
  const SparseMatrix stacked = SparseMatrix::from_columns(a.ambient().dim(), std::move(columns));
  std::vector<SparseVec> common;
  for (const auto& solution : null_space(stacked, f)) {
    SparseVec x;
    for (const auto& [k, c] : solution.entries()) {
      if (k < a.dim()) x.axpy(c, a.rows()[k]);
    }
    common.push_back(std::move(x));
  }
  return GradedSubspace::span(a.ambient(), common);
}

bool subspace_contains(const GradedSubspace& a, const GradedSubspace& b) {
  if (!a.ambient().same_grading(b.ambient())) throw Error(ErrorCode::AmbientMismatch, "containment of subspaces");
  for (const auto& r : b.rows()) {
    if (!a.member(r)) return false;
  }
  return true;
}

bool subspace_member(const GradedSubspace& a, const SparseVec& v) { return a.member(v); }

GradedSubspace image_of(const GradedLinearMap& f, const GradedSubspace& s) {
  if (!f.domain().same_grading(s.ambient())) throw Error(ErrorCode::AmbientMismatch, "image of a foreign subspace");
  std::vector<SparseVec> images;
  for (const auto& r : s.rows()) images.push_back(f.apply(r));
  return GradedSubspace::span(f.codomain(), images);
}

QuotientPresentation quotient_space(const GradedVectorSpace& v, const GradedSubspace& u) {
  if (!v.same_grading(u.ambient())) throw Error(ErrorCode::AmbientMismatch, "quotient by a foreign subspace");
  for (const auto& r : u.rows()) {
    if (!v.degree_of(r)) throw Error(ErrorCode::NotGraded, "kernel row " + v.format(r) + " mixes degrees");
  }
  QuotientPresentation q;
  q.ambient = v;
  q.kernel = u;
  std::vector<long> rep_position(v.dim(), -1);
  std::vector<bool> is_pivot(v.dim(), false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<GroupElement> degrees;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (is_pivot[i]) continue;
    rep_position[i] = static_cast<long>(q.rep_indices.size());
    q.rep_indices.push_back(i);
    degrees.push_back(v.degree(i));
    names.push_back("[" + v.name(i) + "]");
  }
  q.quotient = GradedVectorSpace(v.field(), v.group(), std::move(degrees), std::move(names));
  const std::size_t qdim = q.rep_indices.size();
  q.projection = SparseMatrix(qdim, v.dim());
  q.section = SparseMatrix(v.dim(), qdim);
  for (std::size_t k = 0; k < qdim; ++k) {
    q.projection.set_column(q.rep_indices[k], SparseVec::unit(k, v.field()));
    q.section.set_column(k, SparseVec::unit(q.rep_indices[k], v.field()));
  }
  // A pivot vector e_p is congruent to e_p - row_p, which lives on representatives only.
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const auto& row = u.rows()[k];
    std::vector<SparseVec::Entry> entries;
    for (const auto& [c, val] : row.entries()) {
      if (c == u.pivots()[k]) continue;
      entries.emplace_back(static_cast<std::size_t>(rep_position[c]), -val);
    }
    q.projection.set_column(u.pivots()[k], SparseVec::from_entries(std::move(entries)));
  }
  return q;
}

}  // namespace chopf
