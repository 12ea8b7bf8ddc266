#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chopf/error.hpp"
#include "chopf/linalg.hpp"

using namespace chopf;

namespace {

const FieldSpec Q = FieldSpec::rationals();
Scalar s(long v) { return Scalar(Q, v); }

using Dense = std::vector<std::vector<Scalar>>;

// Oracle: textbook dense Gauss-Jordan elimination returning the nonzero RREF rows.
Dense dense_rref(Dense m) {
  std::size_t lead = 0;
  const std::size_t rows = m.size();
  if (rows == 0) return m;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (; r < rows && lead < cols; ++lead) {
    std::size_t i = r;
    while (i < rows && m[i][lead].is_zero()) ++i;
    if (i == rows) continue;
    std::swap(m[i], m[r]);
    Scalar inv = m[r][lead].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][lead].is_zero()) continue;
      Scalar f = m[k][lead];
      for (std::size_t c = 0; c < cols; ++c) m[k][c] = m[k][c] - f * m[r][c];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

Dense to_dense_rows(const std::vector<SparseVec>& rows, std::size_t n) {
  Dense out;
  for (const auto& r : rows) {
    std::vector<Scalar> d(n, s(0));
    for (const auto& [i, c] : r.entries()) d[i] = c;
    out.push_back(d);
  }
  return out;
}

SparseVec vec(std::initializer_list<long> xs) {
  std::vector<SparseVec::Entry> e;
  std::size_t i = 0;
  for (long x : xs) e.emplace_back(i++, s(x));
  return SparseVec::from_entries(e);
}

FgAbGroup Z2 = FgAbGroup::cyclic(2);
GroupElement d(std::int64_t x) { return GroupElement{{x}}; }

GradedVectorSpace trivially_graded(std::size_t n, const FgAbGroup& g = Z2) {
  return GradedVectorSpace(Q, g, std::vector<GroupElement>(n, g.identity()));
}

SparseMatrix random_graded_matrix(std::mt19937& rng, const GradedVectorSpace& dom, const GradedVectorSpace& cod) {
  std::uniform_int_distribution<long> v(-2, 2);
  SparseMatrix m(cod.dim(), dom.dim());
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t i = 0; i < cod.dim(); ++i) {
      if (cod.degree(i) == dom.degree(j)) e.emplace_back(i, s(v(rng)));
    }
    m.set_column(j, SparseVec::from_entries(e));
  }
  return m;
}

GradedVectorSpace random_space(std::mt19937& rng, std::size_t n, const FgAbGroup& g) {
  std::vector<GroupElement> degs;
  std::uniform_int_distribution<std::int64_t> x(0, g.torsion()[0] - 1);
  for (std::size_t i = 0; i < n; ++i) degs.push_back(g.element({x(rng)}));
  return GradedVectorSpace(Q, g, degs);
}

}  // namespace

TEST_CASE("tensor_space") {
  GradedVectorSpace v(Q, Z2, {d(0), d(1)}, {"1", "v"});
  auto vv = tensor_space(v, v);
  CHECK(vv.dim() == 4);
  int even = 0;
  for (const auto& g : vv.degrees()) even += Z2.is_identity(g);
  CHECK(even == 2);
  CHECK(vv.name(2) == "v⊗1");
  auto w = trivially_graded(3);
  CHECK(tensor_space(v, w).dim() == 6);
  CHECK_THROWS_AS(tensor_space(v, trivially_graded(2, FgAbGroup::cyclic(3))), Error);
  GradedVectorSpace f5(FieldSpec::prime(5), Z2, {d(0)});
  CHECK_THROWS_AS(tensor_space(v, f5), Error);
  // strict associativity of the flattening
  auto left = tensor_space(tensor_space(v, w), v);
  auto right = tensor_space(v, tensor_space(w, v));
  CHECK(left.degrees() == right.degrees());
}

TEST_CASE("graded linear maps reject degree violations") {
  GradedVectorSpace v(Q, Z2, {d(0), d(1)});
  SparseMatrix bad(2, 2);
  bad.set_column(1, SparseVec::single(0, s(1)));
  try {
    GradedLinearMap(v, v, bad);
    FAIL("expected NotGraded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGraded);
  }
  CHECK_THROWS_AS(GradedLinearMap(v, v, SparseMatrix(3, 2)), Error);
}

TEST_CASE("braiding examples and inverse law") {
  const auto eta = Bicharacter::eta(Q);
  GradedVectorSpace v(Q, Z2, {d(0), d(1)}, {"1", "v"});
  auto c = braiding_map(eta, v, v);
  // v (x) v -> -(v (x) v)
  CHECK(c.apply(SparseVec::unit(3, Q)) == SparseVec::single(3, s(-1)));
  // v (x) 1 -> 1 (x) v
  CHECK(c.apply(SparseVec::unit(2, Q)) == SparseVec::single(1, s(1)));
  std::mt19937 rng(3);
  const FgAbGroup z4 = FgAbGroup::cyclic(4);
  const Bicharacter phi(z4, Q, {{s(-1)}});
  for (int it = 0; it < 5; ++it) {
    auto a = random_space(rng, 3, z4), b = random_space(rng, 2, z4);
    auto ab = braiding_map(phi, a, b), ba = braiding_map(phi, b, a);
    CHECK(compose(ba, ab) == GradedLinearMap::identity(tensor_space(a, b)));
  }
}

TEST_CASE("braiding naturality and hexagons") {
  std::mt19937 rng(5);
  const FgAbGroup z4 = FgAbGroup::cyclic(4);
  const Bicharacter phi(z4, Q, {{s(-1)}});
  for (int it = 0; it < 5; ++it) {
    auto a = random_space(rng, 3, z4), b = random_space(rng, 2, z4), c = random_space(rng, 2, z4);
    auto a2 = random_space(rng, 2, z4), b2 = random_space(rng, 3, z4);
    GradedLinearMap f(a, a2, random_graded_matrix(rng, a, a2));
    GradedLinearMap g(b, b2, random_graded_matrix(rng, b, b2));
    CHECK(compose(braiding_map(phi, a2, b2), tensor_maps(f, g)) == compose(tensor_maps(g, f), braiding_map(phi, a, b)));
    auto id = [](const GradedVectorSpace& x) { return GradedLinearMap::identity(x); };
    // c_{A,B(x)C} = (Id_B (x) c_{A,C}) o (c_{A,B} (x) Id_C)
    CHECK(braiding_map(phi, a, tensor_space(b, c)) ==
          compose(tensor_maps(id(b), braiding_map(phi, a, c)), tensor_maps(braiding_map(phi, a, b), id(c))));
    // c_{A(x)B,C} = (c_{A,C} (x) Id_B) o (Id_A (x) c_{B,C})
    CHECK(braiding_map(phi, tensor_space(a, b), c) ==
          compose(tensor_maps(braiding_map(phi, a, c), id(b)), tensor_maps(id(a), braiding_map(phi, b, c))));
  }
}

TEST_CASE("kernel and image") {
  auto v = trivially_graded(4);
  CHECK(map_kernel(GradedLinearMap::identity(v)).dim() == 0);
  CHECK(map_image(GradedLinearMap::zero(v, v)).dim() == 0);
  // k Z4 -> k Z2 induced by reduction mod 2
  auto w = trivially_graded(2);
  SparseMatrix pi(2, 4);
  for (std::size_t j = 0; j < 4; ++j) pi.set_column(j, SparseVec::unit(j % 2, Q));
  auto ker = map_kernel(GradedLinearMap(v, w, pi));
  CHECK(ker.dim() == 2);
  CHECK(ker.rows() == std::vector<SparseVec>{vec({1, 0, -1, 0}), vec({0, 1, 0, -1})});
}

TEST_CASE("rank-nullity and RREF against the dense oracle") {
  std::mt19937 rng(9);
  const FgAbGroup z4 = FgAbGroup::cyclic(4);
  for (int it = 0; it < 40; ++it) {
    auto a = random_space(rng, 2 + it % 5, z4), b = random_space(rng, 1 + it % 4, z4);
    GradedLinearMap f(a, b, random_graded_matrix(rng, a, b));
    auto ker = map_kernel(f);
    auto im = map_image(f);
    CHECK(ker.dim() + im.dim() == a.dim());
    for (const auto& r : ker.rows()) CHECK(f.apply(r).is_zero());
    CHECK(to_dense_rows(im.rows(), b.dim()) == dense_rref(f.matrix().transpose().to_dense(Q)));
    for (const auto& r : ker.rows()) CHECK(a.degree_of(r).has_value());
  }
}

TEST_CASE("subspace lattice") {
  auto v = trivially_graded(4);
  auto A = GradedSubspace::span(v, {vec({1, 0, 1, 0})});
  auto B = GradedSubspace::span(v, {vec({1, 0, 0, 0}), vec({0, 0, 1, 0})});
  CHECK(subspace_sum(A, A) == A);
  CHECK(subspace_intersection(A, GradedSubspace::zero(v)).dim() == 0);
  CHECK(subspace_intersection(A, B) == A);
  CHECK(subspace_contains(B, A));
  CHECK_FALSE(subspace_contains(A, B));
  CHECK(subspace_member(B, vec({2, 0, -3, 0})));
  CHECK_FALSE(subspace_member(B, vec({0, 1, 0, 0})));
  CHECK_THROWS_AS(subspace_sum(A, GradedSubspace::zero(trivially_graded(3))), Error);
  std::mt19937 rng(13);
  for (int it = 0; it < 20; ++it) {
    auto x = GradedSubspace::span(v, {vec({1, 1, 0, 0}), vec({0, it % 3, 1, 2})});
    auto y = GradedSubspace::span(v, {vec({1, 0, 0, 1}), vec({0, 1, it % 2, 0}), vec({0, 0, 1, 1})});
    auto meet = subspace_intersection(x, y);
    CHECK(subspace_contains(x, meet));
    CHECK(subspace_contains(y, meet));
    CHECK(meet.dim() + subspace_sum(x, y).dim() == x.dim() + y.dim());
  }
}

TEST_CASE("graded subspaces split mixed vectors") {
  GradedVectorSpace v(Q, Z2, {d(0), d(1), d(0)});
  auto sub = GradedSubspace::span(v, {vec({1, 1, 0})});
  CHECK(sub.dim() == 2);
  CHECK(sub.member(SparseVec::unit(0, Q)));
  CHECK(sub.member(SparseVec::unit(1, Q)));
  CHECK_THROWS_AS(GradedSubspace::from_homogeneous(v, {vec({1, 1, 0})}), Error);
  auto coords = sub.coordinates(vec({3, -2, 0}));
  REQUIRE(coords);
  CHECK(*coords == vec({3, -2}));
  CHECK_FALSE(sub.coordinates(vec({0, 0, 1})));
}

TEST_CASE("quotients") {
  auto v = trivially_graded(4);
  auto q0 = quotient_space(v, GradedSubspace::zero(v));
  CHECK(q0.quotient.dim() == 4);
  CHECK(quotient_space(v, GradedSubspace::whole(v)).quotient.dim() == 0);
  auto U = GradedSubspace::span(v, {vec({1, 0, -1, 0}), vec({0, 1, 0, -1})});
  auto q = quotient_space(v, U);
  CHECK(q.quotient.dim() == 2);
  CHECK(q.rep_indices == std::vector<std::size_t>{2, 3});
  CHECK(q.projection * q.section == SparseMatrix::identity(2, Q));
  for (const auto& r : U.rows()) CHECK(q.projection.apply(r).is_zero());
  CHECK(map_kernel(q.projection_map()) == U);
}

TEST_CASE("tensor coordinates") {
  auto v = trivially_graded(3);
  auto K = GradedSubspace::span(v, {vec({1, 1, 0})});
  auto L = GradedSubspace::span(v, {vec({0, 1, 0}), vec({0, 0, 1})});
  auto x = kron(vec({1, 1, 0}), vec({0, 2, 3}), 3);
  auto c = tensor_coordinates(K, L, x);
  REQUIRE(c);
  CHECK(*c == vec({2, 3}));
  CHECK_FALSE(tensor_coordinates(K, L, kron(vec({1, 0, 0}), vec({0, 2, 3}), 3)));
}
