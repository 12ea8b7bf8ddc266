#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/normality.hpp"
#include "chopf/twist.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fx;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);

Bicharacter klein_phi() { return Bicharacter(FgAbGroup(0, {2, 2}), Q, {{s(-1), s(1)}, {s(1), s(-1)}}); }
Bicharacter z4_phi() { return Bicharacter(FgAbGroup::cyclic(4), Q, {{s(-1)}}); }
Bicharacter f5_phi() {
  return Bicharacter(FgAbGroup(0, {4, 4}), F5, {{Scalar(F5, -1), Scalar(F5, 2)}, {Scalar(F5, 3), Scalar(F5, -1)}});
}

ColorHopfAlgebra lambda_klein() {
  auto phi = klein_phi();
  return exterior_hopf(Q, phi, {phi.group().element({1, 0}), phi.group().element({0, 1})}, {"v", "w"}, "lambda_klein");
}
ColorHopfAlgebra lambda_z4() { return exterior_hopf(Q, z4_phi(), {GroupElement{{1}}}, {"v"}, "lambda_z4"); }
ColorHopfAlgebra lambda_z4_13() {
  return exterior_hopf(Q, z4_phi(), {GroupElement{{1}}, GroupElement{{3}}}, {"a", "b"}, "lambda_13");
}
ColorHopfAlgebra lambda_f5() {
  auto phi = f5_phi();
  return exterior_hopf(F5, phi, {phi.group().element({1, 0}), phi.group().element({0, 1})}, {"v", "w"}, "lambda_f5");
}

std::vector<ColorHopfAlgebra> algebras() {
  return {kz2(), kz4(), ks3(), lambda_v(), lambda_vw(), tensor_hopf(kz2(), lambda_v()), lambda_klein(),
          lambda_z4(), lambda_z4_13(), lambda_f5(),
          group_algebra(FiniteGroupTable::cyclic(2), F5, f5_phi(), {}, "kz2_f5")};
}

// Diagonal matrix on H (x) H with entries gamma(d_i, d_j), optionally inverted.
SparseMatrix gamma_diag(const ColorHopfAlgebra& h, const Cocycle2& gamma, bool inverse) {
  const std::size_t n = h.dim();
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = gamma.eval(h.space().degree(i), h.space().degree(j));
      cols.push_back(SparseVec::single(i * n + j, inverse ? v.inverse() : v));
    }
  }
  return SparseMatrix::from_columns(n * n, std::move(cols));
}

}  // namespace

TEST_CASE("twist matches the diagonal rescaling oracle and is a super Hopf algebra") {
  for (const auto& h : algebras()) {
    CAPTURE(h.name());
    auto t = twist(h);
    CHECK(t.target.dim() == h.dim());
    CHECK(t.target.phi() == Bicharacter::eta(h.field()));
    CHECK(t.target.data().mult == h.data().mult * gamma_diag(h, t.gamma, true));
    CHECK(t.target.data().comult == gamma_diag(h, t.gamma, false) * h.data().comult);
    CHECK(t.target.data().antipode == h.data().antipode);
    CHECK(t.target.data().counit == h.data().counit);
    CHECK(t.target.unit() == h.unit());
    for (std::size_t i = 0; i < h.dim(); ++i) {
      CHECK(t.target.space().degree(i).coords[0] == u_bar(h.phi(), h.space().degree(i)));
    }
    CHECK(oracle::all_axioms(t.target));
    CHECK(verify_hopf(t.target.data()).ok());
    CHECK_FALSE(check_cocycle(t.gamma, h.space().degrees()));
    CHECK_FALSE(check_braided_twist(h.phi(), t.gamma, h.space().degrees()));
  }
}

TEST_CASE("twist examples") {
  auto lv = lambda_vw();
  auto t = twist(lv);
  CHECK(t.target.data().mult == lv.data().mult);
  CHECK(t.target.data().comult == lv.data().comult);

  auto z4 = lambda_z4();
  auto tz = twist(z4);
  CHECK(tz.target.data().mult == z4.data().mult);
  CHECK(tz.target.data().comult == z4.data().comult);
  CHECK(tz.target.space().degree(1) == GroupElement{{1}});

  auto k = lambda_klein();
  // v and w commute before the twist.
  CHECK(k.multiply_basis(1, 2) == e(3));
  CHECK(k.multiply_basis(2, 1) == e(3));
  auto tk = twist(k);
  const auto& g = k.space().degrees();
  CHECK(tk.gamma.eval(g[1], g[2]) == s(-1));
  CHECK(tk.gamma.eval(g[2], g[1]) == s(1));
  CHECK(tk.target.multiply_basis(1, 2) == e(3).scaled(s(-1)));
  CHECK(tk.target.multiply_basis(2, 1) == e(3));
}

TEST_CASE("twist_morphism") {
  auto pi = pi_z4_z2();
  auto ts = twist(pi.source());
  auto tt = twist(pi.target());
  auto tpi = twist_morphism(pi, ts, tt);
  CHECK(tpi.matrix() == pi.matrix());
  auto id = twist_morphism(identity_morphism(kz4()), ts, ts);
  CHECK(id.matrix() == SparseMatrix::identity(4, Q));
  auto sig = twist_morphism(sigma_z4(), ts, ts);
  auto composite = twist_morphism(compose(pi, sigma_z4()), ts, tt);
  CHECK(composite.matrix() == tpi.matrix() * sig.matrix());

  auto tv = twist(lambda_vw());
  auto t1 = twist(lambda_v());
  CHECK(twist_morphism_report(fold_vw_v(), tv, t1).ok());
  CHECK_THROWS_AS(twist_morphism_report(fold_vw_v(), t1, t1), Error);
}

TEST_CASE("twist preserves and reflects structure") {
  auto z4 = kz4();
  auto r = twist_preserves_structure_checks(z4, GradedSubspace::span(z4.space(), {e(0), e(2)}),
                                            std::pair{pi_z4_z2(), zero_morphism(z4, kz2())});
  CHECK(r.ok());
  bool saw_trivial = false;
  for (const auto& l : r.lines) saw_trivial = saw_trivial || l.name == "trivially_braided";
  CHECK(saw_trivial);

  auto pi = pi_z4_z2();
  auto ts = twist(z4);
  auto tt = twist(kz2());
  CHECK(hkernel(pi).carrier.rows() == hkernel(twist_morphism(pi, ts, tt)).carrier.rows());
  CHECK(equalizer(pi, pi).carrier.dim() == 4);

  auto k = lambda_klein();
  auto rk = twist_preserves_structure_checks(k, GradedSubspace::span(k.space(), {e(0), e(3)}));
  CHECK(rk.ok());
  auto c = sub_hopf_closure(k, GradedSubspace::span(k.space(), {e(0), e(3)}));
  CHECK(c.mult_closed);
  CHECK_FALSE(c.comult_closed);

  auto lv = lambda_v();
  auto rl = twist_preserves_structure_checks(lv);
  CHECK(rl.ok());
  CHECK(twist(lv).target.is_commutative() == lv.is_commutative());

  for (const auto& f : sample_morphisms()) {
    CAPTURE(f.name());
    auto rep = twist_preserves_structure_checks(f.source(), hkernel(f).carrier,
                                                std::pair{f, zero_morphism(f.source(), f.target())});
    CHECK(rep.ok());
  }
  for (const auto& h : algebras()) {
    CHECK(twist_preserves_structure_checks(h).ok());
  }
}

TEST_CASE("module coalgebra quotients survive the twist") {
  auto f = incl_z2_z4();
  auto q = cokernel(f);
  auto t = twist(q.parent);
  auto proj = GradedLinearMap(t.target.space(), twist(q.quotient).target.space(), q.projection.matrix());
  CHECK(is_quotient_module_coalgebra(t.target, proj).ok());

  auto vw = lambda_vw();
  auto qv = cokernel(HopfMorphism::make(lambda_v(), vw, SparseMatrix::from_columns(4, {e(0), e(1)}), "iv"));
  auto tv = twist(vw);
  CHECK(is_quotient_module_coalgebra(tv.target,
                                     GradedLinearMap(tv.target.space(), twist(qv.quotient).target.space(),
                                                     qv.projection.matrix()))
            .ok());
}
