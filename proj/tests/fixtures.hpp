#pragma once

// Small hand-built algebras and morphisms shared by the unit tests.

#include "chopf/corpus.hpp"
#include "chopf/error.hpp"

namespace fx {

using namespace chopf;

inline const FieldSpec Q = FieldSpec::rationals();
inline Scalar s(long v) { return Scalar(Q, v); }
inline const Bicharacter ETA = Bicharacter::eta(Q);
inline GroupElement odd() { return GroupElement{{1}}; }
inline SparseVec e(std::size_t i) { return SparseVec::unit(i, Q); }
inline SparseVec vec(std::vector<std::pair<std::size_t, long>> entries) {
  std::vector<SparseVec::Entry> out;
  for (auto [i, c] : entries) out.emplace_back(i, s(c));
  return SparseVec::from_entries(std::move(out));
}

inline ColorHopfAlgebra kz2() { return group_algebra(FiniteGroupTable::cyclic(2, "t"), Q, ETA, {}, "kz2"); }
inline ColorHopfAlgebra kz3() { return group_algebra(FiniteGroupTable::cyclic(3, "r"), Q, ETA, {}, "kz3"); }
inline ColorHopfAlgebra kz4() { return group_algebra(FiniteGroupTable::cyclic(4, "g"), Q, ETA, {}, "kz4"); }
inline ColorHopfAlgebra ks3() { return group_algebra(FiniteGroupTable::s3(), Q, ETA, {}, "ks3"); }
inline ColorHopfAlgebra lambda_v() { return exterior_hopf(Q, ETA, {odd()}, {"v"}, "lambda_v"); }
inline ColorHopfAlgebra lambda_vw() { return exterior_hopf(Q, ETA, {odd(), odd()}, {"v", "w"}, "lambda_vw"); }

/// Matrix sending basis vector j to basis vector images[j].
inline SparseMatrix basis_map(std::size_t rows, const std::vector<std::size_t>& images) {
  std::vector<SparseVec> cols;
  for (auto i : images) cols.push_back(e(i));
  return SparseMatrix::from_columns(rows, std::move(cols));
}

/// g^k -> t^(k mod 2)
inline HopfMorphism pi_z4_z2() { return HopfMorphism::make(kz4(), kz2(), basis_map(2, {0, 1, 0, 1}), "pi"); }
/// t -> g^2
inline HopfMorphism incl_z2_z4() { return HopfMorphism::make(kz2(), kz4(), basis_map(4, {0, 2}), "incl"); }
/// g -> g^3
inline HopfMorphism sigma_z4() { return HopfMorphism::make(kz4(), kz4(), basis_map(4, {0, 3, 2, 1}), "sigma"); }
/// Sign character of S3.
inline HopfMorphism sign_s3() { return HopfMorphism::make(ks3(), kz2(), basis_map(2, {0, 1, 1, 1, 0, 0}), "sign"); }
/// t -> (12)
inline HopfMorphism incl_z2_s3() { return HopfMorphism::make(kz2(), ks3(), basis_map(6, {0, 1}), "incl12"); }
/// r -> (123)
inline HopfMorphism incl_z3_s3() { return HopfMorphism::make(kz3(), ks3(), basis_map(6, {0, 4, 5}), "incl3"); }
/// v -> v, w -> 0
inline HopfMorphism proj_vw_v() {
  return HopfMorphism::make(lambda_vw(), lambda_v(), SparseMatrix::from_columns(2, {e(0), e(1), {}, {}}), "proj_v");
}
/// v -> v, w -> v (vw -> v^2 = 0)
inline HopfMorphism fold_vw_v() {
  return HopfMorphism::make(lambda_vw(), lambda_v(), SparseMatrix::from_columns(2, {e(0), e(1), e(1), {}}), "fold");
}

inline std::vector<HopfMorphism> sample_morphisms() {
  std::vector<HopfMorphism> out{pi_z4_z2(), incl_z2_z4(), sigma_z4(), sign_s3(), incl_z2_s3(), incl_z3_s3(),
                                proj_vw_v(), fold_vw_v()};
  for (auto h : {kz4(), ks3(), lambda_vw()}) {
    out.push_back(identity_morphism(h));
    out.push_back(counit_morphism(h));
    out.push_back(zero_morphism(h, h));
  }
  return out;
}

}  // namespace fx
