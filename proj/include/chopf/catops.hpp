#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chopf/hopf.hpp"

namespace chopf {

/// Closure of a subspace under the Hopf operations.
struct ClosureReport {
  bool contains_unit = true;
  bool mult_closed = true;
  bool comult_closed = true;
  bool antipode_closed = true;
  std::string detail;

  bool ok() const { return contains_unit && mult_closed && comult_closed && antipode_closed; }
};

ClosureReport sub_hopf_closure(const ColorHopfAlgebra& parent, const GradedSubspace& carrier);

/// A Hopf subalgebra with its induced structure on the RREF rows of the carrier.
struct SubHopfPresentation {
  ColorHopfAlgebra parent;
  GradedSubspace carrier;
  ColorHopfAlgebra sub;
  HopfMorphism inclusion;
};

/// Throws NotClosed if the carrier is not a Hopf subalgebra.
SubHopfPresentation make_sub_hopf(const ColorHopfAlgebra& parent, const GradedSubspace& carrier,
                                  const std::string& name = "");

struct IdealReport {
  bool left_ideal = true;
  bool right_ideal = true;
  bool counit_vanishes = true;
  bool coideal = true;
  bool antipode_stable = true;
  std::string detail;

  bool hopf_ideal() const { return left_ideal && right_ideal && counit_vanishes && coideal && antipode_stable; }
};

IdealReport hopf_ideal_report(const ColorHopfAlgebra& parent, const GradedSubspace& ideal);

struct QuotientHopfPresentation {
  ColorHopfAlgebra parent;
  GradedSubspace ideal;
  QuotientPresentation presentation;
  ColorHopfAlgebra quotient;
  HopfMorphism projection;
};

/// Throws NotClosed unless the ideal is a Hopf ideal.
QuotientHopfPresentation make_quotient_hopf(const ColorHopfAlgebra& parent, const GradedSubspace& ideal,
                                            const std::string& name = "");

enum class Sides { Left, Right, Two };

/// Smallest subspace containing the seed and closed under multiplication by basis elements on the given sides.
GradedSubspace ideal_closure(const ColorHopfAlgebra& b, const GradedSubspace& seed, Sides sides = Sides::Two);

void require_parallel(const HopfMorphism& f, const HopfMorphism& g);

SubHopfPresentation equalizer(const HopfMorphism& f, const HopfMorphism& g);
SubHopfPresentation hkernel(const HopfMorphism& f);

struct ProductPresentation {
  ColorHopfAlgebra product;
  HopfMorphism pi_a;
  HopfMorphism pi_b;
};

ProductPresentation binary_product(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b);
/// (g (x) h) o Delta_H into tensor_hopf(target g, target h).
HopfMorphism diagonal(const HopfMorphism& g, const HopfMorphism& h);

QuotientHopfPresentation cokernel(const HopfMorphism& f);
QuotientHopfPresentation coequalizer(const HopfMorphism& f, const HopfMorphism& g);

/// The augmentation ideal K^+ of a subspace containing 1: rows r - epsilon(r) 1.
std::vector<SparseVec> augmentation_vectors(const ColorHopfAlgebra& h, const GradedSubspace& k);

struct Factorization {
  SubHopfPresentation hker;
  GradedSubspace linear_kernel;
  GradedSubspace closure;  // A (Hker f)^+ A
  QuotientHopfPresentation image;
  HopfMorphism p;
  HopfMorphism i;
  bool kernel_matches = false;
  bool i_injective = false;
  bool p_surjective = false;
  bool composite_matches = false;

  bool ok() const { return kernel_matches && i_injective && p_surjective && composite_matches; }
};

Factorization factorize(const HopfMorphism& f);

struct Pullback {
  SubHopfPresentation sub;
  HopfMorphism restriction;  // p restricted to the pullback, landing in C
  bool image_inside = false;
  bool p_surjective = false;
  bool restriction_surjective = false;
};

/// p^{-1}(C) = {x : (p (x) Id) Delta(x) in C (x) A}.
Pullback pullback_inclusion(const HopfMorphism& p, const SubHopfPresentation& c);

/// The unique h' with inclusion o h' = h; throws DoesNotCommute if h does not land in the carrier.
HopfMorphism factor_through_sub(const SubHopfPresentation& sub, const HopfMorphism& h);
/// Equalizer mediation: checks f o h = g o h first.
HopfMorphism factor_through_equalizer(const SubHopfPresentation& eq, const HopfMorphism& f, const HopfMorphism& g,
                                      const HopfMorphism& h);
/// Product mediation: the diagonal, checked against both projections.
HopfMorphism factor_through_product(const ProductPresentation& p, const HopfMorphism& g, const HopfMorphism& h);
/// The unique h' with h' o projection = h; throws DoesNotCommute if h does not kill the ideal.
HopfMorphism factor_through_quotient(const QuotientHopfPresentation& q, const HopfMorphism& h);
/// Coequalizer mediation: checks h o f = h o g first.
HopfMorphism factor_through_coequalizer(const QuotientHopfPresentation& q, const HopfMorphism& f,
                                        const HopfMorphism& g, const HopfMorphism& h);

}  // namespace chopf
