#include "chopf/twist.hpp"

#include "chopf/error.hpp"

namespace chopf {

HopfData twist_data(const ColorHopfAlgebra& h, const Cocycle2& gamma) {
  const std::size_t n = h.dim();
  const FgAbGroup z2 = FgAbGroup::cyclic(2);
  std::vector<GroupElement> degrees;
  for (const auto& d : h.space().degrees()) degrees.push_back(z2.element({u_bar(h.phi(), d)}));
  HopfData out = h.data();
  out.name = h.name() + "^F";
  out.space = GradedVectorSpace(h.field(), z2, std::move(degrees), h.space().names());
  out.phi = Bicharacter::eta(h.field());
  auto deg = [&](std::size_t i) -> const GroupElement& { return h.space().degree(i); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& col = h.multiply_basis(i, j);
      if (col.is_zero()) continue;
      out.mult.set_column(i * n + j, col.scaled(gamma.eval(deg(i), deg(j)).inverse()));
    }
    std::vector<SparseVec::Entry> entries;
    for (const auto& [p, c] : h.data().comult.column(i).entries()) {
      entries.emplace_back(p, c * gamma.eval(deg(p / n), deg(p % n)));
    }
    out.comult.set_column(i, SparseVec::from_entries(std::move(entries)));
  }
  return out;
}

TwistResult twist(const ColorHopfAlgebra& h) {
  if (!h.is_cocommutative()) throw Error(ErrorCode::NotCocommutative, h.name() + " is not cocommutative");
  TwistResult out;
  out.source = h;
  out.gamma = build_gamma(h.phi());
  out.target = ColorHopfAlgebra::verify(twist_data(h, out.gamma));
  return out;
}

VerificationReport twist_morphism_report(const HopfMorphism& f, const TwistResult& source, const TwistResult& target) {
  if (!(f.source() == source.source) || !(f.target() == target.source)) {
    throw Error(ErrorCode::AmbientMismatch, "twisted algebras do not match " + f.name());
  }
  return verify_morphism(source.target, target.target, f.matrix());
}

HopfMorphism twist_morphism(const HopfMorphism& f, const TwistResult& source, const TwistResult& target) {
  const VerificationReport report = twist_morphism_report(f, source, target);
  if (!report.ok()) throw Error(ErrorCode::VerificationFailed, report.summary());
  return HopfMorphism::make(source.target, target.target, f.matrix(), f.name().empty() ? "" : f.name() + "^F");
}

GradedSubspace twisted_carrier(const TwistResult& t, const GradedSubspace& carrier) {
  if (!carrier.ambient().same_grading(t.source.space())) {
    throw Error(ErrorCode::AmbientMismatch, "carrier does not live in " + t.source.name());
  }
  return GradedSubspace::span(t.target.space(), carrier.rows());
}

bool PreservationReport::ok() const {
  for (const auto& l : lines) {
    if (!l.passed) return false;
  }
  return true;
}

PreservationReport twist_preserves_structure_checks(const ColorHopfAlgebra& h, const std::optional<GradedSubspace>& k,
                                                    const std::optional<std::pair<HopfMorphism, HopfMorphism>>& pair) {
  PreservationReport report;
  auto line = [&](const std::string& name, bool passed, const std::string& detail = "") {
    report.lines.push_back(PreservationLine{name, passed, detail});
  };
  const TwistResult t = twist(h);
  line("cocommutative", h.is_cocommutative() == t.target.is_cocommutative());
  line("commutative", h.is_commutative() == t.target.is_commutative(),
       std::string(h.is_commutative() ? "commutative" : "not commutative") + " before, " +
           (t.target.is_commutative() ? "commutative" : "not commutative") + " after");
  bool all_even = true;
  for (const auto& d : t.target.space().degrees()) all_even = all_even && d.coords[0] == 0;
  if (all_even) {
    HopfData plain = t.target.data();
    plain.phi = Bicharacter::trivial(plain.space.group(), plain.space.field());
    line("trivially_braided", verify_hopf(plain).ok());
  }
  if (k) {
    const ClosureReport before = sub_hopf_closure(h, *k);
    const ClosureReport after = sub_hopf_closure(t.target, twisted_carrier(t, *k));
    line("subalgebra", (before.contains_unit && before.mult_closed) == (after.contains_unit && after.mult_closed));
    line("subcoalgebra", before.comult_closed == after.comult_closed);
    line("hopf_subalgebra", before.ok() == after.ok(), before.ok() ? "closed" : "not closed");
  }
  if (pair) {
    const auto& [f, g] = *pair;
    const TwistResult ts = f.source() == h ? t : twist(f.source());
    const TwistResult tt = twist(f.target());
    const HopfMorphism ff = twist_morphism(f, ts, tt);
    const HopfMorphism fg = twist_morphism(g, ts, tt);
    const auto before = equalizer(f, g).carrier.rows();
    const auto after = equalizer(ff, fg).carrier.rows();
    line("equalizer", before == after, "dim " + std::to_string(before.size()) + " vs " + std::to_string(after.size()));
    const auto hk_before = hkernel(f).carrier.rows();
    const auto hk_after = hkernel(ff).carrier.rows();
    line("hkernel", hk_before == hk_after,
         "dim " + std::to_string(hk_before.size()) + " vs " + std::to_string(hk_after.size()));
  }
  return report;
}

}  // namespace chopf
