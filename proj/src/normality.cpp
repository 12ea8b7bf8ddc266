#include "chopf/normality.hpp"

#include "chopf/error.hpp"

namespace chopf {

namespace {

void require_cocommutative(const ColorHopfAlgebra& a) {
  if (!a.is_cocommutative()) throw Error(ErrorCode::NotCocommutative, a.name() + " is not cocommutative");
}

ModuleCoalgebraQuotient build_module_quotient(const ColorHopfAlgebra& h, const GradedSubspace& ideal) {
  ModuleCoalgebraQuotient out;
  out.ideal = ideal;
  out.presentation = quotient_space(h.space(), ideal);
  const auto& qp = out.presentation;
  const std::size_t q = qp.rep_indices.size();
  const std::size_t n = h.dim();
  out.comult = SparseMatrix(q * q, q);
  out.action = SparseMatrix(q, n * q);
  std::vector<SparseVec::Entry> eps;
  for (std::size_t x = 0; x < q; ++x) {
    const std::size_t rx = qp.rep_indices[x];
    out.comult.set_column(x, apply_tensor(qp.projection, qp.projection, h.data().comult.column(rx)));
    eps.emplace_back(x, h.counit(SparseVec::unit(rx, h.field())));
    for (std::size_t i = 0; i < n; ++i) out.action.set_column(i * q + x, qp.projection.apply(h.multiply_basis(i, rx)));
  }
  out.counit = SparseVec::from_entries(std::move(eps));
  return out;
}

}  // namespace

GradedLinearMap xi_map(const ColorHopfAlgebra& a) {
  require_cocommutative(a);
  const std::size_t n = a.dim();
  const SparseMatrix id = SparseMatrix::identity(n, a.field());
  const SparseMatrix c = braiding_map(a.phi(), a.space(), a.space()).matrix();
  const auto& d = a.data();
  SparseMatrix m = d.mult * kron(d.mult, d.antipode) * kron(id, c) * kron(d.comult, id);
  return GradedLinearMap(tensor_space(a.space(), a.space()), a.space(), std::move(m));
}

SparseVec xi_apply(const ColorHopfAlgebra& a, const SparseVec& left, const SparseVec& x) {
  const std::size_t n = a.dim();
  SparseVec out;
  for (const auto& [i, alpha] : left.entries()) {
    for (const auto& [p, c] : a.data().comult.column(i).entries()) {
      const std::size_t a1 = p / n, a2 = p % n;
      const SparseVec& s2 = a.data().antipode.column(a2);
      for (const auto& [b, beta] : x.entries()) {
        const Scalar coeff = alpha * beta * c * a.braid(a2, b);
        out.axpy(coeff, a.multiply(a.multiply_basis(a1, b), s2));
      }
    }
  }
  return out;
}

NormalityResult is_normal(const ColorHopfAlgebra& a, const SubHopfPresentation& k) {
  if (!(k.parent == a)) throw Error(ErrorCode::AmbientMismatch, "K is not a subalgebra of " + a.name());
  NormalityResult r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < k.carrier.dim(); ++j) {
      SparseVec image = xi_apply(a, SparseVec::unit(i, a.field()), k.carrier.rows()[j]);
      if (!k.carrier.member(image)) {
        r.normal = false;
        r.basis_index = i;
        r.row_index = j;
        r.image = std::move(image);
        return r;
      }
    }
  }
  return r;
}

ModuleCoalgebraReport is_quotient_module_coalgebra(const ColorHopfAlgebra& h, const GradedLinearMap& pi) {
  if (!pi.domain().same_grading(h.space())) throw Error(ErrorCode::AmbientMismatch, "projection does not start at " + h.name());
  ModuleCoalgebraReport r;
  auto note = [&](const std::string& what) {
    if (r.detail.empty()) r.detail = what;
  };
  if (rank(pi.matrix()) != pi.codomain().dim()) {
    r.surjective = false;
    note("projection is not surjective");
  }
  const GradedSubspace ideal = map_kernel(pi);
  const QuotientPresentation qp = quotient_space(h.space(), ideal);
  for (std::size_t a = 0; a < ideal.dim(); ++a) {
    const SparseVec& row = ideal.rows()[a];
    for (std::size_t i = 0; i < h.dim() && r.left_ideal; ++i) {
      if (!ideal.member(h.multiply(SparseVec::unit(i, h.field()), row))) {
        r.left_ideal = false;
        note("kernel is not a left ideal: " + h.space().name(i) + " * " + h.space().format(row));
      }
    }
    if (r.counit_vanishes && !h.counit(row).is_zero()) {
      r.counit_vanishes = false;
      note("counit does not vanish on " + h.space().format(row));
    }
    if (r.coideal && !apply_tensor(qp.projection, qp.projection, h.comultiply(row)).is_zero()) {
      r.coideal = false;
      note("kernel is not a coideal at " + h.space().format(row));
    }
  }
  if (!r.left_ideal || !r.coideal || !r.counit_vanishes) {
    r.module_linear = false;
    return r;
  }
  const ModuleCoalgebraQuotient mq = build_module_quotient(h, ideal);
  const std::size_t n = h.dim();
  const std::size_t q = qp.rep_indices.size();
  auto act = [&](std::size_t hi, std::size_t x) -> const SparseVec& { return mq.action.column(hi * q + x); };
  auto qdeg = [&](std::size_t x) { return qp.rep_indices[x]; };
  for (std::size_t hi = 0; hi < n && r.module_linear; ++hi) {
    for (std::size_t x = 0; x < q; ++x) {
      SparseVec lhs = mq.comult.apply(act(hi, x));
      SparseVec rhs;
      for (const auto& [p, c] : h.data().comult.column(hi).entries()) {
        const std::size_t h1 = p / n, h2 = p % n;
        for (const auto& [t, dcoef] : mq.comult.column(x).entries()) {
          const std::size_t q1 = t / q, q2 = t % q;
          const Scalar coeff = c * dcoef * h.braid(h2, qdeg(q1));
          rhs.axpy(coeff, kron(act(h1, q1), act(h2, q2), q));
        }
      }
      Scalar el = Scalar::zero(h.field());
      for (const auto& [y, v] : act(hi, x).entries()) {
        if (const Scalar* e = mq.counit.find(y)) el += v * *e;
      }
      const Scalar er = h.counit(SparseVec::unit(hi, h.field())) * mq.counit.coeff(x, h.field());
      if (!(lhs == rhs) || !(el == er)) {
        r.module_linear = false;
        note("induced coalgebra structure is not H-linear at " + h.space().name(hi));
        break;
      }
    }
  }
  return r;
}

NewmanPhiResult newman_phi(const ColorHopfAlgebra& h, const SubHopfPresentation& k) {
  require_cocommutative(h);
  if (!(k.parent == h)) throw Error(ErrorCode::AmbientMismatch, "K is not a subalgebra of " + h.name());
  const GradedSubspace ideal =
      ideal_closure(h, GradedSubspace::span(h.space(), augmentation_vectors(h, k.carrier)), Sides::Left);
  NewmanPhiResult out;
  out.module_quotient = build_module_quotient(h, ideal);
  if (hopf_ideal_report(h, ideal).hopf_ideal()) out.hopf_quotient = make_quotient_hopf(h, ideal, h.name() + "/H" + k.sub.name() + "+");
  return out;
}

SubHopfPresentation newman_psi(const ColorHopfAlgebra& h, const GradedLinearMap& pi) {
  const ModuleCoalgebraReport report = is_quotient_module_coalgebra(h, pi);
  if (!report.ok()) throw Error(ErrorCode::NotModuleCoalgebra, report.detail);
  const std::size_t n = h.dim();
  const std::size_t q = pi.codomain().dim();
  const SparseMatrix id = SparseMatrix::identity(n, h.field());
  const SparseVec pi_one = pi.apply(h.unit());
  SparseMatrix system(n * q, n);
  for (std::size_t i = 0; i < n; ++i) {
    system.set_column(i, apply_tensor(id, pi.matrix(), h.data().comult.column(i)) -
                             kron(SparseVec::unit(i, h.field()), pi_one, q));
  }
  return make_sub_hopf(h, GradedSubspace::span(h.space(), null_space(system, h.field())), h.name() + "^co");
}

AbelianResult is_abelian_object(const ColorHopfAlgebra& c) {
  require_cocommutative(c);
  AbelianResult r;
  r.commutative = c.is_commutative();
  const ColorHopfAlgebra square = tensor_hopf(c, c);
  const SubHopfPresentation image = make_sub_hopf(square, GradedSubspace::span(square.space(), c.data().comult.columns()),
                                                  "im_delta(" + c.name() + ")");
  r.diagonal_normal = is_normal(square, image).normal;
  return r;
}

}  // namespace chopf
