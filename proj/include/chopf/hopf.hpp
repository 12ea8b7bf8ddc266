#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chopf/linalg.hpp"

namespace chopf {

/// Raw structure tensors over a fixed graded basis. Nothing here is checked.
struct HopfData {
  std::string name;
  GradedVectorSpace space;
  Bicharacter phi;
  SparseMatrix mult;      // n x n^2, column (i, j) at i * n + j
  SparseVec unit;         // image of 1
  SparseMatrix comult;    // n^2 x n
  SparseVec counit;       // row vector over the basis
  SparseMatrix antipode;  // n x n

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const HopfData&, const HopfData&) = default;
};

struct VerifyFlags {
  bool require_cocommutative = true;
  bool check_commutative = false;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  bool required = true;
  std::vector<std::size_t> witness;  // basis indices of the first failing input
  SparseVec residual;                // lhs - rhs at the witness
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const;
  /// Required checks that failed.
  std::vector<const CheckResult*> failures() const;
  const CheckResult* find(const std::string& name) const;
  bool failed(const std::string& name) const;
  std::string summary() const;
};

/// Runs every axiom check on raw data. Throws DimensionMismatch when shapes are inconsistent.
VerificationReport verify_hopf(const HopfData& data, const VerifyFlags& flags = {});

/// A verified color Hopf algebra. Only obtainable through ColorHopfAlgebra::verify.
class ColorHopfAlgebra {
 public:
  ColorHopfAlgebra() = default;

  /// Verifies and wraps; throws VerificationFailed with the report summary.
  static ColorHopfAlgebra verify(HopfData data, const VerifyFlags& flags = {});

  const HopfData& data() const { return impl_->data; }
  const std::string& name() const { return impl_->data.name; }
  const GradedVectorSpace& space() const { return impl_->data.space; }
  const Bicharacter& phi() const { return impl_->data.phi; }
  const FieldSpec& field() const { return impl_->data.space.field(); }
  const FgAbGroup& group() const { return impl_->data.space.group(); }
  std::size_t dim() const { return impl_->data.space.dim(); }
  bool is_cocommutative() const { return impl_->cocommutative; }
  bool is_commutative() const { return impl_->commutative; }
  bool valid() const { return impl_ != nullptr; }

  /// phi(|e_i|, |e_j|) from a per-degree cache.
  const Scalar& braid(std::size_t i, std::size_t j) const;

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  const SparseVec& multiply_basis(std::size_t i, std::size_t j) const { return data().mult.column(i * dim() + j); }
  SparseVec comultiply(const SparseVec& a) const { return data().comult.apply(a); }
  SparseVec antipode(const SparseVec& a) const { return data().antipode.apply(a); }
  Scalar counit(const SparseVec& a) const;
  const SparseVec& unit() const { return data().unit; }

  GradedLinearMap mult_map() const;
  GradedLinearMap comult_map() const;
  GradedLinearMap antipode_map() const;
  GradedLinearMap counit_map() const;
  GradedLinearMap unit_map() const;

  friend bool operator==(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b) {
    return a.impl_ == b.impl_ || (a.impl_ && b.impl_ && a.impl_->data == b.impl_->data);
  }

 private:
  struct Impl {
    HopfData data;
    bool cocommutative = false;
    bool commutative = false;
    std::vector<std::size_t> degree_class;
    std::vector<std::vector<Scalar>> braid_table;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Same field, group and commutation factor.
void require_same_setting(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b);

VerificationReport verify_morphism(const ColorHopfAlgebra& source, const ColorHopfAlgebra& target,
                                   const SparseMatrix& matrix);

/// A verified morphism of color Hopf algebras.
class HopfMorphism {
 public:
  HopfMorphism() = default;
  /// Verifies; throws VerificationFailed (or DimensionMismatch for wrong shapes).
  static HopfMorphism make(ColorHopfAlgebra source, ColorHopfAlgebra target, SparseMatrix matrix,
                           std::string name = {});

  const ColorHopfAlgebra& source() const { return source_; }
  const ColorHopfAlgebra& target() const { return target_; }
  const SparseMatrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }
  GradedLinearMap map() const { return GradedLinearMap(source_.space(), target_.space(), matrix_); }
  SparseVec apply(const SparseVec& v) const { return matrix_.apply(v); }

  bool is_injective() const;
  bool is_surjective() const;

 private:
  HopfMorphism(ColorHopfAlgebra s, ColorHopfAlgebra t, SparseMatrix m, std::string name)
      : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)), name_(std::move(name)) {}

  ColorHopfAlgebra source_;
  ColorHopfAlgebra target_;
  SparseMatrix matrix_;
  std::string name_;
};

/// The one-dimensional Hopf algebra k.
ColorHopfAlgebra trivial_hopf(const FieldSpec& field, const Bicharacter& phi);

HopfMorphism identity_morphism(const ColorHopfAlgebra& h);
/// epsilon viewed as H -> k.
HopfMorphism counit_morphism(const ColorHopfAlgebra& h);
/// u viewed as k -> H.
HopfMorphism unit_morphism(const ColorHopfAlgebra& h);
/// u_B o epsilon_A.
HopfMorphism zero_morphism(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b);
HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f);

/// Braided tensor product A (x) B with S = S_A (x) S_B.
ColorHopfAlgebra tensor_hopf(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b);

/// f * g = m_A o (f (x) g) o Delta_C for maps C -> A.
GradedLinearMap convolution(const ColorHopfAlgebra& c, const ColorHopfAlgebra& a, const GradedLinearMap& f,
                            const GradedLinearMap& g);

/// sum x_{(a,b)} f(e_a) (x) g(e_b) for x in the tensor of the domains.
SparseVec apply_tensor(const SparseMatrix& f, const SparseMatrix& g, const SparseVec& x);

}  // namespace chopf
