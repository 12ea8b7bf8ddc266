#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chopf/catops.hpp"

namespace chopf {

/// H regraded by u_bar over Z/2 with m' = gamma^{-1} m and Delta' = gamma Delta.
struct TwistResult {
  ColorHopfAlgebra source;
  Cocycle2 gamma;
  ColorHopfAlgebra target;
};

/// The twisted structure before verification.
HopfData twist_data(const ColorHopfAlgebra& h, const Cocycle2& gamma);
TwistResult twist(const ColorHopfAlgebra& h);

VerificationReport twist_morphism_report(const HopfMorphism& f, const TwistResult& source, const TwistResult& target);
/// Same matrix between the twisted algebras; throws VerificationFailed if it does not verify.
HopfMorphism twist_morphism(const HopfMorphism& f, const TwistResult& source, const TwistResult& target);

/// The carrier re-read inside the twisted algebra (same rows, super grading).
GradedSubspace twisted_carrier(const TwistResult& t, const GradedSubspace& carrier);

struct PreservationLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PreservationReport {
  std::vector<PreservationLine> lines;
  bool ok() const;
};

/// Flags, optional subalgebra closure and optional equalizer comparison before and after twisting.
PreservationReport twist_preserves_structure_checks(const ColorHopfAlgebra& h,
                                                    const std::optional<GradedSubspace>& k = std::nullopt,
                                                    const std::optional<std::pair<HopfMorphism, HopfMorphism>>& pair =
                                                        std::nullopt);

}  // namespace chopf
