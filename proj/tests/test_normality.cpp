#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/normality.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fx;

namespace {

GradedSubspace span(const ColorHopfAlgebra& h, std::vector<SparseVec> v) { return GradedSubspace::span(h.space(), v); }

struct Inventory {
  ColorHopfAlgebra h;
  std::vector<GradedSubspace> subs;
};

std::vector<Inventory> inventories() {
  auto z4 = kz4();
  auto s3 = ks3();
  auto vw = lambda_vw();
  auto lv = lambda_v();
  return {
      {z4, {span(z4, {e(0)}), span(z4, {e(0), e(2)}), GradedSubspace::whole(z4.space())}},
      {s3,
       {span(s3, {e(0)}), span(s3, {e(0), e(4), e(5)}), span(s3, {e(0), e(1)}), span(s3, {e(0), e(2)}),
        span(s3, {e(0), e(3)}), GradedSubspace::whole(s3.space())}},
      {vw,
       {span(vw, {e(0)}), span(vw, {e(0), e(1)}), span(vw, {e(0), e(2)}), span(vw, {e(0), e(1) + e(2)}),
        GradedSubspace::whole(vw.space())}},
      {lv, {span(lv, {e(0)}), GradedSubspace::whole(lv.space())}},
  };
}

std::vector<ColorHopfAlgebra> algebras() {
  return {trivial_hopf(Q, ETA), kz2(), kz3(), kz4(), ks3(), lambda_v(), lambda_vw(), tensor_hopf(kz2(), lambda_v())};
}

}  // namespace

TEST_CASE("xi map against the matrix oracle") {
  for (const auto& a : algebras()) {
    CAPTURE(a.name());
    const auto xi = xi_map(a);
    CHECK(xi.matrix() == oracle::xi(a));
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(xi_apply(a, e(i), e(j)) == xi.matrix().column(i * n + j));
    }
    // Coalgebra map.
    CHECK(a.data().comult * xi.matrix() == kron(xi.matrix(), xi.matrix()) * oracle::comult2(a));
    CHECK(oracle::counit_row(a) * xi.matrix() == kron(oracle::counit_row(a), oracle::counit_row(a)));
    if (a.is_commutative()) CHECK(xi.matrix() == kron(oracle::counit_row(a), oracle::id(n, Q)));
  }
}

TEST_CASE("xi examples") {
  auto lv = lambda_v();
  CHECK(xi_apply(lv, e(1), e(1)).is_zero());
  auto s3 = ks3();
  const auto table = FiniteGroupTable::s3();
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t x = 0; x < 6; ++x) {
      CHECK(xi_apply(s3, e(g), e(x)) == e(table.mul(table.mul(g, x), table.inverse[g])));
    }
  }
  CHECK(xi_apply(s3, e(table.index_of("(123)")), e(table.index_of("(12)"))) == e(table.index_of("(23)")));
}

TEST_CASE("xi naturality on surjections") {
  for (const auto& p : sample_morphisms()) {
    if (!p.is_surjective()) continue;
    CAPTURE(p.name());
    CHECK(xi_map(p.target()).matrix() * kron(p.matrix(), p.matrix()) == p.matrix() * xi_map(p.source()).matrix());
  }
}

TEST_CASE("is_normal") {
  auto s3 = ks3();
  auto a3 = make_sub_hopf(s3, span(s3, {e(0), e(4), e(5)}));
  CHECK(is_normal(s3, a3).normal);
  auto c2 = make_sub_hopf(s3, span(s3, {e(0), e(1)}));
  auto r = is_normal(s3, c2);
  CHECK_FALSE(r.normal);
  CHECK_FALSE(c2.carrier.member(r.image));
  CHECK(r.image == xi_apply(s3, e(r.basis_index), c2.carrier.rows()[r.row_index]));
  auto z4 = kz4();
  CHECK(is_normal(z4, make_sub_hopf(z4, span(z4, {e(0), e(2)}))).normal);
}

TEST_CASE("newman examples") {
  auto z4 = kz4();
  auto unit = make_sub_hopf(z4, span(z4, {e(0)}));
  auto whole = make_sub_hopf(z4, GradedSubspace::whole(z4.space()));
  auto half = make_sub_hopf(z4, span(z4, {e(0), e(2)}));
  CHECK(newman_phi(z4, unit).module_quotient.ideal.dim() == 0);
  REQUIRE(newman_phi(z4, whole).hopf_quotient);
  CHECK(newman_phi(z4, whole).hopf_quotient->quotient.dim() == 1);
  auto ph = newman_phi(z4, half);
  REQUIRE(ph.hopf_quotient);
  CHECK(ph.hopf_quotient->ideal == span(z4, {e(2) - e(0), e(3) - e(1)}));
  CHECK(ph.hopf_quotient->quotient.dim() == 2);

  auto to_k = counit_morphism(z4).map();
  CHECK(newman_psi(z4, to_k).carrier.dim() == 4);
  CHECK(newman_psi(z4, GradedLinearMap::identity(z4.space())).carrier == span(z4, {e(0)}));
  CHECK(newman_psi(z4, pi_z4_z2().map()).carrier == span(z4, {e(0), e(2)}));

  auto s3 = ks3();
  auto c2 = make_sub_hopf(s3, span(s3, {e(0), e(1)}));
  auto pc = newman_phi(s3, c2);
  CHECK_FALSE(pc.hopf_quotient);
  CHECK(pc.module_quotient.presentation.quotient.dim() == 3);
}

TEST_CASE("is_quotient_module_coalgebra") {
  auto z4 = kz4();
  CHECK(is_quotient_module_coalgebra(z4, cokernel(incl_z2_z4()).projection.map()).ok());
  CHECK(is_quotient_module_coalgebra(z4, GradedLinearMap::identity(z4.space())).ok());
  auto bad = quotient_space(z4.space(), span(z4, {e(1)}));
  auto r = is_quotient_module_coalgebra(z4, bad.projection_map());
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.left_ideal);
  try {
    newman_psi(z4, bad.projection_map());
    FAIL("expected NotModuleCoalgebra");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotModuleCoalgebra);
  }
}

TEST_CASE("newman round trips and the kernel equivalence") {
  for (const auto& inv : inventories()) {
    for (const auto& carrier : inv.subs) {
      CAPTURE(inv.h.space().format(carrier.rows().back()));
      auto k = make_sub_hopf(inv.h, carrier);
      auto ph = newman_phi(inv.h, k);
      auto back = newman_psi(inv.h, ph.module_quotient.presentation.projection_map());
      CHECK(back.carrier == carrier);

      const bool normal = is_normal(inv.h, k).normal;
      const bool quotient = ph.hopf_quotient.has_value();
      const bool kernel = quotient && hkernel(ph.hopf_quotient->projection).carrier == carrier;
      CHECK(normal == quotient);
      CHECK(normal == kernel);
    }
  }
  // phi o psi on constructed quotients.
  for (const auto& f : sample_morphisms()) {
    auto q = cokernel(f);
    auto psi = newman_psi(q.parent, q.projection.map());
    CHECK(newman_phi(q.parent, psi).module_quotient.ideal == q.ideal);
  }
}

TEST_CASE("kernels are normal and images of kernels under cokernels are kernels") {
  for (const auto& f : sample_morphisms()) {
    CHECK(is_normal(f.source(), hkernel(f)).normal);
  }
  for (const auto& f : sample_morphisms()) {
    for (const auto& g : sample_morphisms()) {
      if (!(f.target() == g.source())) continue;
      auto mu = cokernel(f);
      auto k = hkernel(g);
      auto image = make_sub_hopf(mu.quotient, image_of(mu.projection.map(), k.carrier));
      CHECK(is_normal(mu.quotient, image).normal);
    }
  }
}

TEST_CASE("abelian objects") {
  CHECK(is_abelian_object(lambda_v()).abelian());
  CHECK(is_abelian_object(trivial_hopf(Q, ETA)).abelian());
  auto s3 = is_abelian_object(ks3());
  CHECK_FALSE(s3.commutative);
  CHECK_FALSE(s3.diagonal_normal);
  for (const auto& a : algebras()) {
    CAPTURE(a.name());
    CHECK(is_abelian_object(a).agree());
  }
}
