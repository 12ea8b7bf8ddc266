#pragma once

#include <optional>
#include <string>

#include "chopf/catops.hpp"

namespace chopf {

/// xi(a (x) x) = phi(|a_2|, |x|) a_1 x S(a_2), as a matrix A (x) A -> A.
GradedLinearMap xi_map(const ColorHopfAlgebra& a);
/// The same action evaluated term by term.
SparseVec xi_apply(const ColorHopfAlgebra& a, const SparseVec& left, const SparseVec& x);

struct NormalityResult {
  bool normal = true;
  std::size_t basis_index = 0;  // a
  std::size_t row_index = 0;    // k
  SparseVec image;              // xi(a (x) k), outside K
};

NormalityResult is_normal(const ColorHopfAlgebra& a, const SubHopfPresentation& k);

/// H/I for a left ideal and coideal I, with the induced coalgebra and left H-action.
struct ModuleCoalgebraQuotient {
  GradedSubspace ideal;
  QuotientPresentation presentation;
  SparseMatrix comult;  // q^2 x q
  SparseVec counit;
  SparseMatrix action;  // q x (n q), column (h, x) at h * q + x
};

struct ModuleCoalgebraReport {
  bool surjective = true;
  bool left_ideal = true;
  bool counit_vanishes = true;
  bool coideal = true;
  bool module_linear = true;
  std::string detail;

  bool ok() const { return surjective && left_ideal && counit_vanishes && coideal && module_linear; }
};

ModuleCoalgebraReport is_quotient_module_coalgebra(const ColorHopfAlgebra& h, const GradedLinearMap& pi);

struct NewmanPhiResult {
  ModuleCoalgebraQuotient module_quotient;
  std::optional<QuotientHopfPresentation> hopf_quotient;
};

/// K -> H / H K^+.
NewmanPhiResult newman_phi(const ColorHopfAlgebra& h, const SubHopfPresentation& k);

/// Q -> H^{co Q} = {x : (Id (x) pi) Delta(x) = x (x) pi(1)}. Throws NotModuleCoalgebra first if pi is not valid.
SubHopfPresentation newman_psi(const ColorHopfAlgebra& h, const GradedLinearMap& pi);

struct AbelianResult {
  bool commutative = false;
  bool diagonal_normal = false;
  bool agree() const { return commutative == diagonal_normal; }
  bool abelian() const { return commutative && diagonal_normal; }
};

AbelianResult is_abelian_object(const ColorHopfAlgebra& c);

}  // namespace chopf
