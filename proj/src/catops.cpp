#include "chopf/catops.hpp"

#include "chopf/error.hpp"

namespace chopf {

namespace {

SparseVec basis(const ColorHopfAlgebra& h, std::size_t i) { return SparseVec::unit(i, h.field()); }

void require_ambient(const ColorHopfAlgebra& h, const GradedSubspace& s) {
  if (!h.space().same_grading(s.ambient())) {
    throw Error(ErrorCode::AmbientMismatch, "subspace does not live in " + h.name());
  }
}

std::string label(const std::string& name, const std::string& fallback) { return name.empty() ? fallback : name; }

}  // namespace

ClosureReport sub_hopf_closure(const ColorHopfAlgebra& parent, const GradedSubspace& carrier) {
  require_ambient(parent, carrier);
  ClosureReport r;
  const auto& rows = carrier.rows();
  if (!carrier.member(parent.unit())) {
    r.contains_unit = false;
    r.detail = "1 is not in the carrier";
  }
  for (std::size_t a = 0; a < rows.size() && r.mult_closed; ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (!carrier.member(parent.multiply(rows[a], rows[b]))) {
        r.mult_closed = false;
        if (r.detail.empty()) r.detail = "product of rows " + std::to_string(a) + "," + std::to_string(b) + " leaves";
        break;
      }
    }
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (r.comult_closed && !tensor_coordinates(carrier, carrier, parent.comultiply(rows[a]))) {
      r.comult_closed = false;
      if (r.detail.empty()) r.detail = "coproduct of row " + std::to_string(a) + " leaves K (x) K";
    }
    if (r.antipode_closed && !carrier.member(parent.antipode(rows[a]))) {
      r.antipode_closed = false;
      if (r.detail.empty()) r.detail = "antipode of row " + std::to_string(a) + " leaves";
    }
  }
  return r;
}

SubHopfPresentation make_sub_hopf(const ColorHopfAlgebra& parent, const GradedSubspace& carrier,
                                  const std::string& name) {
  const ClosureReport closure = sub_hopf_closure(parent, carrier);
  if (!closure.ok()) throw Error(ErrorCode::NotClosed, "not a Hopf subalgebra of " + parent.name() + ": " + closure.detail);
  const auto& rows = carrier.rows();
  const std::size_t k = rows.size();
  HopfData d;
  d.name = label(name, "sub(" + parent.name() + ")");
  d.space = carrier.as_space();
  d.phi = parent.phi();
  d.mult = SparseMatrix(k, k * k);
  d.comult = SparseMatrix(k * k, k);
  d.antipode = SparseMatrix(k, k);
  std::vector<SparseVec::Entry> eps;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) d.mult.set_column(a * k + b, *carrier.coordinates(parent.multiply(rows[a], rows[b])));
    d.comult.set_column(a, *tensor_coordinates(carrier, carrier, parent.comultiply(rows[a])));
    d.antipode.set_column(a, *carrier.coordinates(parent.antipode(rows[a])));
    eps.emplace_back(a, parent.counit(rows[a]));
  }
  d.unit = *carrier.coordinates(parent.unit());
  d.counit = SparseVec::from_entries(std::move(eps));
  VerifyFlags flags;
  flags.require_cocommutative = parent.is_cocommutative();
  SubHopfPresentation out;
  out.parent = parent;
  out.carrier = carrier;
  out.sub = ColorHopfAlgebra::verify(std::move(d), flags);
  out.inclusion = HopfMorphism::make(out.sub, parent, carrier.inclusion_matrix(), "incl_" + out.sub.name());
  return out;
}

IdealReport hopf_ideal_report(const ColorHopfAlgebra& parent, const GradedSubspace& ideal) {
  require_ambient(parent, ideal);
  IdealReport r;
  const QuotientPresentation qp = quotient_space(parent.space(), ideal);
  auto note = [&](const std::string& what) {
    if (r.detail.empty()) r.detail = what;
  };
  for (std::size_t a = 0; a < ideal.dim(); ++a) {
    const SparseVec& row = ideal.rows()[a];
    for (std::size_t i = 0; i < parent.dim(); ++i) {
      if (r.left_ideal && !ideal.member(parent.multiply(basis(parent, i), row))) {
        r.left_ideal = false;
        note(parent.space().name(i) + " * row " + std::to_string(a) + " leaves the ideal");
      }
      if (r.right_ideal && !ideal.member(parent.multiply(row, basis(parent, i)))) {
        r.right_ideal = false;
        note("row " + std::to_string(a) + " * " + parent.space().name(i) + " leaves the ideal");
      }
    }
    if (r.counit_vanishes && !parent.counit(row).is_zero()) {
      r.counit_vanishes = false;
      note("epsilon(row " + std::to_string(a) + ") != 0");
    }
    if (r.coideal && !apply_tensor(qp.projection, qp.projection, parent.comultiply(row)).is_zero()) {
      r.coideal = false;
      note("Delta(row " + std::to_string(a) + ") not in I (x) H + H (x) I");
    }
    if (r.antipode_stable && !ideal.member(parent.antipode(row))) {
      r.antipode_stable = false;
      note("S(row " + std::to_string(a) + ") leaves the ideal");
    }
  }
  return r;
}

QuotientHopfPresentation make_quotient_hopf(const ColorHopfAlgebra& parent, const GradedSubspace& ideal,
                                            const std::string& name) {
  const IdealReport report = hopf_ideal_report(parent, ideal);
  if (!report.hopf_ideal()) {
    throw Error(ErrorCode::NotClosed, "not a Hopf ideal of " + parent.name() + ": " + report.detail);
  }
  QuotientHopfPresentation out;
  out.parent = parent;
  out.ideal = ideal;
  out.presentation = quotient_space(parent.space(), ideal);
  const QuotientPresentation& qp = out.presentation;
  const std::size_t q = qp.rep_indices.size();
  HopfData d;
  d.name = label(name, parent.name() + "/I");
  d.space = qp.quotient;
  d.phi = parent.phi();
  d.mult = SparseMatrix(q, q * q);
  d.comult = SparseMatrix(q * q, q);
  d.antipode = SparseMatrix(q, q);
  std::vector<SparseVec::Entry> eps;
  for (std::size_t a = 0; a < q; ++a) {
    const std::size_t ra = qp.rep_indices[a];
    for (std::size_t b = 0; b < q; ++b) {
      d.mult.set_column(a * q + b, qp.projection.apply(parent.multiply_basis(ra, qp.rep_indices[b])));
    }
    d.comult.set_column(a, apply_tensor(qp.projection, qp.projection, parent.data().comult.column(ra)));
    d.antipode.set_column(a, qp.projection.apply(parent.data().antipode.column(ra)));
    eps.emplace_back(a, parent.counit(basis(parent, ra)));
  }
  d.unit = qp.projection.apply(parent.unit());
  d.counit = SparseVec::from_entries(std::move(eps));
  VerifyFlags flags;
  flags.require_cocommutative = parent.is_cocommutative();
  out.quotient = ColorHopfAlgebra::verify(std::move(d), flags);
  out.projection = HopfMorphism::make(parent, out.quotient, qp.projection, "proj_" + out.quotient.name());
  return out;
}

GradedSubspace ideal_closure(const ColorHopfAlgebra& b, const GradedSubspace& seed, Sides sides) {
  require_ambient(b, seed);
  EchelonBasis basis_rows(b.dim());
  std::vector<SparseVec> found;
  std::vector<SparseVec> work;
  for (const auto& r : seed.rows()) {
    if (basis_rows.insert(r)) {
      found.push_back(r);
      work.push_back(r);
    }
  }
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (int side = 0; side < 2; ++side) {
        if (side == 0 && sides == Sides::Right) continue;
        if (side == 1 && sides == Sides::Left) continue;
        SparseVec w = side == 0 ? b.multiply(basis(b, i), v) : b.multiply(v, basis(b, i));
        if (basis_rows.insert(w)) {
          found.push_back(w);
          work.push_back(std::move(w));
        }
      }
    }
  }
  return GradedSubspace::span(b.space(), found);
}

void require_parallel(const HopfMorphism& f, const HopfMorphism& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorCode::NotParallel, f.name() + " and " + g.name() + " do not share source and target");
  }
}

SubHopfPresentation equalizer(const HopfMorphism& f, const HopfMorphism& g) {
  require_parallel(f, g);
  const ColorHopfAlgebra& a = f.source();
  if (!a.is_cocommutative()) throw Error(ErrorCode::NotCocommutative, a.name() + " is not cocommutative");
  const SparseMatrix id = SparseMatrix::identity(a.dim(), a.field());
  SparseMatrix system(a.dim() * f.target().dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const SparseVec& delta = a.data().comult.column(i);
    system.set_column(i, apply_tensor(id, f.matrix(), delta) - apply_tensor(id, g.matrix(), delta));
  }
  const GradedSubspace carrier = GradedSubspace::span(a.space(), null_space(system, a.field()));
  return make_sub_hopf(a, carrier, "eq(" + f.name() + "," + g.name() + ")");
}

SubHopfPresentation hkernel(const HopfMorphism& f) {
  return equalizer(f, zero_morphism(f.source(), f.target()));
}

ProductPresentation binary_product(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b) {
  ProductPresentation out;
  out.product = tensor_hopf(a, b);
  const SparseMatrix ia = SparseMatrix::identity(a.dim(), a.field());
  const SparseMatrix ib = SparseMatrix::identity(b.dim(), b.field());
  out.pi_a = HopfMorphism::make(out.product, a, kron(ia, SparseMatrix::row(b.data().counit, b.dim())), "pi_" + a.name());
  out.pi_b = HopfMorphism::make(out.product, b, kron(SparseMatrix::row(a.data().counit, a.dim()), ib), "pi_" + b.name());
  return out;
}

HopfMorphism diagonal(const HopfMorphism& g, const HopfMorphism& h) {
  if (!(g.source() == h.source())) throw Error(ErrorCode::NotParallel, "diagonal needs a common source");
  const ColorHopfAlgebra& src = g.source();
  if (!src.is_cocommutative()) throw Error(ErrorCode::NotCocommutative, src.name() + " is not cocommutative");
  ColorHopfAlgebra target = tensor_hopf(g.target(), h.target());
  SparseMatrix m(target.dim(), src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) m.set_column(i, apply_tensor(g.matrix(), h.matrix(), src.data().comult.column(i)));
  return HopfMorphism::make(src, std::move(target), std::move(m), "<" + g.name() + "," + h.name() + ">");
}

QuotientHopfPresentation cokernel(const HopfMorphism& f) {
  const GradedSubspace plus = map_kernel(f.source().counit_map());
  std::vector<SparseVec> seed;
  for (const auto& r : plus.rows()) seed.push_back(f.apply(r));
  const GradedSubspace ideal = ideal_closure(f.target(), GradedSubspace::span(f.target().space(), seed));
  return make_quotient_hopf(f.target(), ideal, "coker(" + f.name() + ")");
}

QuotientHopfPresentation coequalizer(const HopfMorphism& f, const HopfMorphism& g) {
  require_parallel(f, g);
  const SparseMatrix diff = f.matrix() - g.matrix();
  const GradedSubspace ideal = ideal_closure(f.target(), GradedSubspace::span(f.target().space(), diff.columns()));
  return make_quotient_hopf(f.target(), ideal, "coeq(" + f.name() + "," + g.name() + ")");
}

std::vector<SparseVec> augmentation_vectors(const ColorHopfAlgebra& h, const GradedSubspace& k) {
  std::vector<SparseVec> out;
  for (const auto& r : k.rows()) {
    SparseVec v = r;
    v.axpy(-h.counit(r), h.unit());
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

Factorization factorize(const HopfMorphism& f) {
  const ColorHopfAlgebra& a = f.source();
  Factorization out;
  out.hker = hkernel(f);
  out.linear_kernel = map_kernel(f.map());
  out.closure = ideal_closure(a, GradedSubspace::span(a.space(), augmentation_vectors(a, out.hker.carrier)));
  out.kernel_matches = out.closure == out.linear_kernel;
  out.image = make_quotient_hopf(a, out.closure, "im(" + f.name() + ")");
  out.p = out.image.projection;
  out.i = HopfMorphism::make(out.image.quotient, f.target(), f.matrix() * out.image.presentation.section,
                             "incl_im(" + f.name() + ")");
  out.i_injective = out.i.is_injective();
  out.p_surjective = out.p.is_surjective();
  out.composite_matches = out.i.matrix() * out.p.matrix() == f.matrix();
  return out;
}

Pullback pullback_inclusion(const HopfMorphism& p, const SubHopfPresentation& c) {
  if (!(c.parent == p.target())) throw Error(ErrorCode::AmbientMismatch, "C is not a subalgebra of the target of " + p.name());
  const ColorHopfAlgebra& a = p.source();
  const QuotientPresentation qc = quotient_space(p.target().space(), c.carrier);
  const SparseMatrix qp = qc.projection * p.matrix();
  const SparseMatrix id = SparseMatrix::identity(a.dim(), a.field());
  SparseMatrix system(qc.rep_indices.size() * a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) system.set_column(i, apply_tensor(qp, id, a.data().comult.column(i)));
  Pullback out;
  out.sub = make_sub_hopf(a, GradedSubspace::span(a.space(), null_space(system, a.field())),
                          "pullback(" + p.name() + ")");
  SparseMatrix restricted(c.sub.dim(), out.sub.sub.dim());
  for (std::size_t k = 0; k < out.sub.carrier.dim(); ++k) {
    auto coords = c.carrier.coordinates(p.apply(out.sub.carrier.rows()[k]));
    if (!coords) throw Error(ErrorCode::NotClosed, "p maps the pullback outside C");
    restricted.set_column(k, std::move(*coords));
  }
  out.image_inside = true;
  out.restriction = HopfMorphism::make(out.sub.sub, c.sub, std::move(restricted), p.name() + "|pullback");
  out.p_surjective = p.is_surjective();
  out.restriction_surjective = out.restriction.is_surjective();
  return out;
}

HopfMorphism factor_through_sub(const SubHopfPresentation& sub, const HopfMorphism& h) {
  if (!(h.target() == sub.parent)) throw Error(ErrorCode::AmbientMismatch, h.name() + " does not land in the parent");
  SparseMatrix m(sub.sub.dim(), h.source().dim());
  for (std::size_t i = 0; i < h.source().dim(); ++i) {
    auto coords = sub.carrier.coordinates(h.matrix().column(i));
    if (!coords) {
      throw Error(ErrorCode::DoesNotCommute, h.name() + " sends " + h.source().space().name(i) + " outside the subalgebra");
    }
    m.set_column(i, std::move(*coords));
  }
  return HopfMorphism::make(h.source(), sub.sub, std::move(m), h.name() + "'");
}

HopfMorphism factor_through_equalizer(const SubHopfPresentation& eq, const HopfMorphism& f, const HopfMorphism& g,
                                      const HopfMorphism& h) {
  require_parallel(f, g);
  if (!(f.matrix() * h.matrix() == g.matrix() * h.matrix())) {
    throw Error(ErrorCode::DoesNotCommute, "f o h != g o h");
  }
  return factor_through_sub(eq, h);
}

HopfMorphism factor_through_product(const ProductPresentation& p, const HopfMorphism& g, const HopfMorphism& h) {
  if (!(g.target() == p.pi_a.target()) || !(h.target() == p.pi_b.target())) {
    throw Error(ErrorCode::DoesNotCommute, "cone legs do not match the product factors");
  }
  HopfMorphism d = diagonal(g, h);
  if (!(p.pi_a.matrix() * d.matrix() == g.matrix()) || !(p.pi_b.matrix() * d.matrix() == h.matrix())) {
    throw Error(ErrorCode::DoesNotCommute, "projections of the diagonal differ from the cone");
  }
  return d;
}

HopfMorphism factor_through_quotient(const QuotientHopfPresentation& q, const HopfMorphism& h) {
  if (!(h.source() == q.parent)) throw Error(ErrorCode::AmbientMismatch, h.name() + " does not start at the parent");
  for (const auto& r : q.ideal.rows()) {
    if (!h.apply(r).is_zero()) throw Error(ErrorCode::DoesNotCommute, h.name() + " does not vanish on the ideal");
  }
  return HopfMorphism::make(q.quotient, h.target(), h.matrix() * q.presentation.section, h.name() + "'");
}

HopfMorphism factor_through_coequalizer(const QuotientHopfPresentation& q, const HopfMorphism& f,
                                        const HopfMorphism& g, const HopfMorphism& h) {
  require_parallel(f, g);
  if (!(h.matrix() * f.matrix() == h.matrix() * g.matrix())) {
    throw Error(ErrorCode::DoesNotCommute, "h o f != h o g");
  }
  return factor_through_quotient(q, h);
}

}  // namespace chopf
