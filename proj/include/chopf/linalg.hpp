#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chopf/group.hpp"
#include "chopf/sparse.hpp"

namespace chopf {

/// A finite-dimensional G-graded vector space with a homogeneous basis.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  GradedVectorSpace(FieldSpec field, FgAbGroup group, std::vector<GroupElement> degrees,
                    std::vector<std::string> names = {});

  /// The unit object: one basis vector "1" in degree 1_G.
  static GradedVectorSpace unit(const FieldSpec& field, const FgAbGroup& group);

  const FieldSpec& field() const { return field_; }
  const FgAbGroup& group() const { return group_; }
  std::size_t dim() const { return degrees_.size(); }
  const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Same field, group and degree sequence (names are labels only).
  bool same_grading(const GradedVectorSpace& other) const;
  void require_compatible(const GradedVectorSpace& other) const;

  /// Splits v into its homogeneous components, ordered by degree.
  std::vector<SparseVec> homogeneous_components(const SparseVec& v) const;
  /// The degree of v if it is nonzero and homogeneous.
  std::optional<GroupElement> degree_of(const SparseVec& v) const;

  std::string format(const SparseVec& v) const;

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

 private:
  FieldSpec field_;
  FgAbGroup group_;
  std::vector<GroupElement> degrees_;
  std::vector<std::string> names_;
};

/// Basis of V (x) W indexed by pairs (i, j) at i * dim W + j.
GradedVectorSpace tensor_space(const GradedVectorSpace& v, const GradedVectorSpace& w);

/// A degree-preserving linear map.
class GradedLinearMap {
 public:
  GradedLinearMap() = default;
  /// Throws DimensionMismatch on shape errors and NotGraded if some entry connects different degrees.
  GradedLinearMap(GradedVectorSpace domain, GradedVectorSpace codomain, SparseMatrix matrix);

  static GradedLinearMap identity(const GradedVectorSpace& v);
  static GradedLinearMap zero(const GradedVectorSpace& domain, const GradedVectorSpace& codomain);

  const GradedVectorSpace& domain() const { return domain_; }
  const GradedVectorSpace& codomain() const { return codomain_; }
  const SparseMatrix& matrix() const { return matrix_; }

  SparseVec apply(const SparseVec& v) const { return matrix_.apply(v); }

  friend bool operator==(const GradedLinearMap&, const GradedLinearMap&) = default;

 private:
  GradedVectorSpace domain_;
  GradedVectorSpace codomain_;
  SparseMatrix matrix_;
};

/// (row, column) of the first entry joining different degrees, if any.
std::optional<std::pair<std::size_t, std::size_t>> degree_violation(const GradedVectorSpace& domain,
                                                                    const GradedVectorSpace& codomain,
                                                                    const SparseMatrix& matrix);

GradedLinearMap compose(const GradedLinearMap& g, const GradedLinearMap& f);
GradedLinearMap tensor_maps(const GradedLinearMap& f, const GradedLinearMap& g);

/// c_{V,W}: V (x) W -> W (x) V, (i, j) -> phi(|i|, |j|) (j, i).
GradedLinearMap braiding_map(const Bicharacter& phi, const GradedVectorSpace& v, const GradedVectorSpace& w);

/// A graded subspace kept in canonical RREF; every row is homogeneous.
class GradedSubspace {
 public:
  GradedSubspace() = default;

  /// Span of arbitrary vectors, split into homogeneous components first.
  static GradedSubspace span(const GradedVectorSpace& ambient, const std::vector<SparseVec>& vectors);
  /// Span of vectors that must already be homogeneous; throws NotGraded otherwise.
  static GradedSubspace from_homogeneous(const GradedVectorSpace& ambient, const std::vector<SparseVec>& vectors);
  static GradedSubspace zero(const GradedVectorSpace& ambient);
  static GradedSubspace whole(const GradedVectorSpace& ambient);

  const GradedVectorSpace& ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  SparseVec reduce(const SparseVec& v) const { return basis_.reduce(v); }
  bool member(const SparseVec& v) const { return basis_.contains(v); }
  /// Coordinates of a member in the row basis; nullopt if v is not in the subspace.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  /// The subspace as a space in its own right: one basis vector per row.
  GradedVectorSpace as_space() const;
  /// ambient x dim matrix whose columns are the rows.
  SparseMatrix inclusion_matrix() const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.ambient_.same_grading(b.ambient_) && a.rows_ == b.rows_;
  }

 private:
  GradedSubspace(GradedVectorSpace ambient, EchelonBasis basis);

  GradedVectorSpace ambient_;
  EchelonBasis basis_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Membership coordinates of a vector of V (x) V' in K (x) K', where K, K' are subspaces of V, V'.
std::optional<SparseVec> tensor_coordinates(const GradedSubspace& left, const GradedSubspace& right,
                                            const SparseVec& v);

GradedSubspace map_kernel(const GradedLinearMap& f);
GradedSubspace map_image(const GradedLinearMap& f);

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace subspace_intersection(const GradedSubspace& a, const GradedSubspace& b);
bool subspace_contains(const GradedSubspace& a, const GradedSubspace& b);
bool subspace_member(const GradedSubspace& a, const SparseVec& v);
/// Image of a subspace under a map, as a subspace of the codomain.
GradedSubspace image_of(const GradedLinearMap& f, const GradedSubspace& s);

/// V / U with the non-pivot basis vectors as coset representatives.
struct QuotientPresentation {
  GradedVectorSpace ambient;
  GradedSubspace kernel;
  std::vector<std::size_t> rep_indices;
  GradedVectorSpace quotient;
  SparseMatrix projection;  // quotient x ambient
  SparseMatrix section;     // ambient x quotient

  GradedLinearMap projection_map() const { return GradedLinearMap(ambient, quotient, projection); }
  GradedLinearMap section_map() const { return GradedLinearMap(quotient, ambient, section); }
};

QuotientPresentation quotient_space(const GradedVectorSpace& v, const GradedSubspace& u);

}  // namespace chopf
