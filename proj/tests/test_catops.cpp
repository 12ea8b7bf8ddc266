#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/catops.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fx;

namespace {

// Two-sided ideal of a unital algebra generated by a subspace: span of e_i v e_j in one step.
GradedSubspace ideal_oracle(const ColorHopfAlgebra& b, const GradedSubspace& seed, Sides sides) {
  std::vector<SparseVec> out;
  for (const auto& v : seed.rows()) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) {
        SparseVec x = v;
        if (sides != Sides::Right) x = b.multiply(e(i), x);
        if (sides != Sides::Left) x = b.multiply(x, e(j));
        out.push_back(x);
      }
    }
  }
  return GradedSubspace::span(b.space(), out);
}

// Equalizer straight from the defining matrix identity (Id (x) f) Delta = (Id (x) g) Delta.
GradedSubspace equalizer_oracle(const HopfMorphism& f, const HopfMorphism& g) {
  const auto& a = f.source();
  const auto I = oracle::id(a.dim(), Q);
  const SparseMatrix sys = kron(I, f.matrix()) * a.data().comult - kron(I, g.matrix()) * a.data().comult;
  return GradedSubspace::span(a.space(), null_space(sys, Q));
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

GradedSubspace span(const ColorHopfAlgebra& h, std::vector<SparseVec> v) { return GradedSubspace::span(h.space(), v); }

}  // namespace

TEST_CASE("sub_hopf_closure") {
  auto a = kz4();
  CHECK(sub_hopf_closure(a, span(a, {e(0), e(2)})).ok());
  auto r = sub_hopf_closure(a, span(a, {e(0), e(1)}));
  CHECK_FALSE(r.mult_closed);
  CHECK_FALSE(r.antipode_closed);
  CHECK_FALSE(sub_hopf_closure(a, span(a, {e(1)})).contains_unit);
  CHECK_FALSE(sub_hopf_closure(a, span(a, {e(0), e(1) + e(3)})).comult_closed);
  auto lvw = lambda_vw();
  CHECK(sub_hopf_closure(lvw, span(lvw, {e(0), e(1)})).ok());
  CHECK_FALSE(sub_hopf_closure(lvw, span(lvw, {e(0), e(3)})).ok());
  CHECK(code_of([&] { make_sub_hopf(a, span(a, {e(0), e(1)})); }) == ErrorCode::NotClosed);
  auto sub = make_sub_hopf(a, span(a, {e(0), e(2)}), "k<g2>");
  CHECK(sub.sub.dim() == 2);
  CHECK(sub.inclusion.is_injective());
  CHECK(oracle::all_axioms(sub.sub));
}

TEST_CASE("ideal_closure examples") {
  auto b = kz4();
  CHECK(ideal_closure(b, GradedSubspace::zero(b.space())).dim() == 0);
  CHECK(ideal_closure(b, span(b, {e(0)})).dim() == 4);
  auto c = ideal_closure(b, span(b, {e(2) - e(0)}));
  CHECK(c == span(b, {e(2) - e(0), e(3) - e(1)}));
}

TEST_CASE("ideal_closure agrees with the one-step oracle") {
  for (const auto& b : {kz4(), ks3(), lambda_vw(), tensor_hopf(kz2(), lambda_v())}) {
    const std::size_t n = b.dim();
    std::vector<std::vector<SparseVec>> seeds = {{e(1)}, {e(n - 1)}, {e(1) - e(n - 1)}, {e(0) - e(1)}};
    for (const auto& seed : seeds) {
      auto sp = span(b, seed);
      for (auto sides : {Sides::Left, Sides::Right, Sides::Two}) {
        CHECK(ideal_closure(b, sp, sides) == ideal_oracle(b, sp, sides));
      }
    }
  }
}

TEST_CASE("hkernel and equalizer") {
  auto pi = pi_z4_z2();
  auto a = pi.source();
  CHECK(hkernel(pi).carrier == span(a, {e(0), e(2)}));
  CHECK(hkernel(identity_morphism(a)).carrier == span(a, {e(0)}));
  CHECK(hkernel(counit_morphism(a)).carrier.dim() == 4);
  CHECK(equalizer(pi, pi).carrier.dim() == 4);
  CHECK(equalizer(pi, compose(pi, sigma_z4())).carrier.dim() == 4);
  CHECK(equalizer(identity_morphism(a), sigma_z4()).carrier == span(a, {e(0), e(2)}));
  CHECK(hkernel(sign_s3()).carrier == span(ks3(), {e(0), e(4), e(5)}));
  CHECK(code_of([&] { equalizer(pi, identity_morphism(a)); }) == ErrorCode::NotParallel);

  for (const auto& f : sample_morphisms()) {
    auto k = hkernel(f);
    CHECK(k.carrier == equalizer_oracle(f, zero_morphism(f.source(), f.target())));
    CHECK(sub_hopf_closure(f.source(), k.carrier).ok());
    CHECK(oracle::all_axioms(k.sub));
    // Monomorphisms are injective.
    if (k.carrier.dim() == 1) CHECK(f.is_injective());
    if (f.is_injective()) CHECK(k.carrier.dim() == 1);
  }
}

TEST_CASE("cokernel and coequalizer") {
  auto b = kz4();
  CHECK(cokernel(unit_morphism(b)).quotient.dim() == 4);
  CHECK(cokernel(identity_morphism(b)).quotient.dim() == 1);
  auto c = cokernel(incl_z2_z4());
  CHECK(c.ideal == span(b, {e(2) - e(0), e(3) - e(1)}));
  CHECK(c.quotient.dim() == 2);
  CHECK(c.quotient.is_commutative());
  CHECK(c.projection.matrix() * incl_z2_z4().matrix() ==
        zero_morphism(kz2(), c.quotient).matrix());

  CHECK(coequalizer(sigma_z4(), sigma_z4()).ideal.dim() == 0);
  auto antipode = HopfMorphism::make(b, b, b.data().antipode, "S");
  auto q = coequalizer(identity_morphism(b), antipode);
  CHECK(q.ideal == span(b, {e(1) - e(3), e(2) - e(0)}));
  CHECK(q.quotient.dim() == 2);
  CHECK(oracle::all_axioms(q.quotient));
  CHECK(q.projection.matrix() == q.projection.matrix() * antipode.matrix());

  for (const auto& f : sample_morphisms()) {
    auto ck = cokernel(f);
    auto ce = coequalizer(f, zero_morphism(f.source(), f.target()));
    CHECK(ck.ideal == ce.ideal);
    CHECK(oracle::all_axioms(ck.quotient));
    CHECK(ck.quotient.is_cocommutative());
    CHECK(ck.projection.matrix() * f.matrix() == zero_morphism(f.source(), ck.quotient).matrix());
  }
}

TEST_CASE("factorize") {
  auto a = kz4();
  auto id = factorize(identity_morphism(a));
  CHECK(id.ok());
  CHECK(id.p.matrix() == SparseMatrix::identity(4, Q));
  auto z = factorize(zero_morphism(a, a));
  CHECK(z.ok());
  CHECK(z.image.quotient.dim() == 1);
  auto p = factorize(pi_z4_z2());
  CHECK(p.ok());
  CHECK(p.image.quotient.dim() == 2);
  CHECK(p.linear_kernel == span(a, {e(0) - e(2), e(1) - e(3)}));
  for (const auto& f : sample_morphisms()) {
    auto fz = factorize(f);
    CAPTURE(f.name());
    CHECK(fz.kernel_matches);
    CHECK(fz.linear_kernel == map_kernel(f.map()));
    CHECK(fz.i_injective);
    CHECK(rank(fz.i.matrix()) == fz.i.source().dim());
    CHECK(fz.p_surjective);
    CHECK(fz.i.matrix() * fz.p.matrix() == f.matrix());
  }
}

TEST_CASE("pullback_inclusion") {
  auto p = pi_z4_z2();
  auto whole = make_sub_hopf(p.target(), GradedSubspace::whole(p.target().space()));
  CHECK(pullback_inclusion(p, whole).sub.carrier.dim() == 4);
  auto unit = make_sub_hopf(p.target(), span(p.target(), {e(0)}));
  auto pb = pullback_inclusion(p, unit);
  CHECK(pb.sub.carrier == hkernel(p).carrier);
  CHECK(pb.image_inside);
  CHECK(pb.restriction_surjective);

  auto s = sign_s3();
  auto pb2 = pullback_inclusion(s, unit);
  CHECK(pb2.sub.carrier == hkernel(s).carrier);

  // Pullback along the inclusion of k<t^0> and of a non-trivial subalgebra of ks3.
  auto sub12 = make_sub_hopf(ks3(), span(ks3(), {e(0), e(1)}));
  auto id = identity_morphism(ks3());
  auto pb3 = pullback_inclusion(id, sub12);
  CHECK(pb3.sub.carrier == sub12.carrier);
  CHECK(pb3.restriction_surjective);
  CHECK(code_of([&] { pullback_inclusion(p, sub12); }) == ErrorCode::AmbientMismatch);
}

TEST_CASE("universal properties") {
  auto a = kz4();
  auto eq = equalizer(identity_morphism(a), sigma_z4());
  auto h = incl_z2_z4();
  auto h1 = factor_through_equalizer(eq, identity_morphism(a), sigma_z4(), h);
  CHECK(eq.inclusion.matrix() * h1.matrix() == h.matrix());
  CHECK(code_of([&] { factor_through_equalizer(eq, identity_morphism(a), sigma_z4(), identity_morphism(a)); }) ==
        ErrorCode::DoesNotCommute);

  auto prod = binary_product(kz2(), lambda_v());
  CHECK(oracle::all_axioms(prod.product));
  auto g = counit_morphism(kz2());
  auto g1 = HopfMorphism::make(kz2(), kz2(), SparseMatrix::identity(2, Q), "id");
  auto g2 = zero_morphism(kz2(), lambda_v());
  auto d = factor_through_product(prod, g1, g2);
  CHECK(prod.pi_a.matrix() * d.matrix() == g1.matrix());
  CHECK(prod.pi_b.matrix() * d.matrix() == g2.matrix());
  CHECK(d.matrix() == diagonal(g1, g2).matrix());
  (void)g;

  auto antipode = HopfMorphism::make(a, a, a.data().antipode, "S");
  auto q = coequalizer(identity_morphism(a), antipode);
  auto m = factor_through_coequalizer(q, identity_morphism(a), antipode, pi_z4_z2());
  CHECK(m.matrix() * q.projection.matrix() == pi_z4_z2().matrix());
  CHECK(code_of([&] { factor_through_coequalizer(q, identity_morphism(a), antipode, identity_morphism(a)); }) ==
        ErrorCode::DoesNotCommute);
}

TEST_CASE("binary products and diagonals") {
  auto lv = lambda_v();
  auto lw = exterior_hopf(Q, ETA, {odd()}, {"w"}, "lambda_w");
  auto prod = binary_product(lv, lw);
  // basis of the product is 1(x)1, 1(x)w, v(x)1, v(x)w
  CHECK(prod.pi_a.map().apply(e(2)) == e(1));
  CHECK(prod.pi_a.map().apply(e(1)).is_zero());
  CHECK(prod.pi_b.map().apply(e(1)) == e(1));
  const auto& p = prod.product;
  CHECK(kron(prod.pi_a.matrix(), prod.pi_b.matrix()) * p.data().comult == oracle::id(4, Q));

  auto k = trivial_hopf(Q, ETA);
  for (const auto& a : {kz4(), ks3(), lambda_vw()}) {
    auto ak = binary_product(a, k);
    CHECK(rank(ak.pi_a.matrix()) == a.dim());
    CHECK(ak.pi_a.matrix().rows() == ak.pi_a.matrix().cols());

    auto id = identity_morphism(a);
    CHECK(diagonal(id, id).matrix() == a.data().comult);
    auto ue = HopfMorphism::make(a, a, unit_morphism(a).matrix() * counit_morphism(a).matrix(), "u_eps");
    auto pa = binary_product(a, a);
    CHECK(pa.pi_a.matrix() * diagonal(id, ue).matrix() == id.matrix());

    auto eps = counit_morphism(a);
    auto ee = diagonal(eps, eps);
    CHECK(ee.matrix().rows() == 1);
    CHECK(ee.matrix() == eps.matrix());
  }
}
