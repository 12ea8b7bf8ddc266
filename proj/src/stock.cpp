#include "chopf/corpus.hpp"
#include "chopf/error.hpp"
#include "chopf/workspace.hpp"

namespace chopf {

namespace {

SparseMatrix basis_map(const FieldSpec& f, std::size_t rows, const std::vector<long>& images) {
  std::vector<SparseVec> cols;
  for (long i : images) cols.push_back(i < 0 ? SparseVec{} : SparseVec::unit(static_cast<std::size_t>(i), f));
  return SparseMatrix::from_columns(rows, std::move(cols));
}

class Builder {
 public:
  Builder(FieldSpec f, FgAbGroup g, Bicharacter phi) {
    w_.field = f;
    w_.group = std::move(g);
    w_.phi = std::move(phi);
    algebra(trivial_hopf(w_.field, w_.phi), "k");
  }

  const ColorHopfAlgebra& algebra(ColorHopfAlgebra h, const std::string& name) {
    HopfData d = h.data();
    d.name = name;
    auto [it, _] = verified_.insert_or_assign(name, ColorHopfAlgebra::verify(d));
    w_.add(it->second);
    if (it->second.dim() > 1) sub(name, "unit", {it->second.unit()});
    sub(name, "whole", {});
    return it->second;
  }

  void morphism(const std::string& name, const std::string& src, const std::string& tgt, SparseMatrix m) {
    w_.add(name, HopfMorphism::make(verified_.at(src), verified_.at(tgt), std::move(m), name));
  }

  void basis_morphism(const std::string& name, const std::string& src, const std::string& tgt,
                      const std::vector<long>& images) {
    morphism(name, src, tgt, basis_map(w_.field, verified_.at(tgt).dim(), images));
  }

  /// Subalgebra spanned by the given vectors; an empty list means the whole algebra.
  void sub(const std::string& algebra, const std::string& label, std::vector<SparseVec> rows) {
    const ColorHopfAlgebra& h = verified_.at(algebra);
    GradedSubspace s = rows.empty() ? GradedSubspace::whole(h.space()) : GradedSubspace::span(h.space(), rows);
    w_.add(algebra + "/" + label, algebra, s);
  }

  void sub_basis(const std::string& algebra, const std::string& label, const std::vector<std::size_t>& indices) {
    std::vector<SparseVec> rows;
    for (auto i : indices) rows.push_back(SparseVec::unit(i, w_.field));
    sub(algebra, label, std::move(rows));
  }

  void standard_morphisms(const std::string& name) {
    const ColorHopfAlgebra& h = verified_.at(name);
    w_.add("id_" + name, identity_morphism(h));
    if (h.dim() > 1) {
      w_.morphisms["eps_" + name] = MorphismSpec{name, "k", counit_morphism(h).matrix()};
      w_.morphisms["unit_" + name] = MorphismSpec{"k", name, unit_morphism(h).matrix()};
    }
  }

  Workspace finish() {
    for (const auto& [name, h] : verified_) standard_morphisms(name);
    return w_;
  }

  const FieldSpec& field() const { return w_.field; }
  const Bicharacter& phi() const { return w_.phi; }

 private:
  Workspace w_;
  std::map<std::string, ColorHopfAlgebra> verified_;
};

GroupElement el(const FgAbGroup& g, std::vector<std::int64_t> c) { return g.element(std::move(c)); }

Workspace super_context() {
  const FieldSpec Q = FieldSpec::rationals();
  const Bicharacter eta = Bicharacter::eta(Q);
  const FgAbGroup z2 = FgAbGroup::cyclic(2);
  Builder b(Q, z2, eta);
  b.algebra(group_algebra(FiniteGroupTable::cyclic(2, "t"), Q, eta), "kz2");
  b.algebra(group_algebra(FiniteGroupTable::cyclic(3, "r"), Q, eta), "kz3");
  b.algebra(group_algebra(FiniteGroupTable::cyclic(4, "g"), Q, eta), "kz4");
  b.algebra(group_algebra(FiniteGroupTable::s3(), Q, eta), "ks3");
  b.algebra(exterior_hopf(Q, eta, {el(z2, {1})}, {"v"}), "lambda_v");
  b.algebra(exterior_hopf(Q, eta, {el(z2, {1}), el(z2, {1})}, {"v", "w"}), "lambda_vw");

  b.basis_morphism("pi_z4_z2", "kz4", "kz2", {0, 1, 0, 1});
  b.basis_morphism("incl_z2_z4", "kz2", "kz4", {0, 2});
  b.basis_morphism("antipode_z4", "kz4", "kz4", {0, 3, 2, 1});
  b.basis_morphism("sign_s3", "ks3", "kz2", {0, 1, 1, 1, 0, 0});
  b.basis_morphism("incl_z2_s3", "kz2", "ks3", {0, 1});
  b.basis_morphism("incl_z3_s3", "kz3", "ks3", {0, 4, 5});
  b.basis_morphism("proj_vw_v", "lambda_vw", "lambda_v", {0, 1, -1, -1});
  b.basis_morphism("incl_v_vw", "lambda_v", "lambda_vw", {0, 1});
  b.morphism("fold_vw_v", "lambda_vw", "lambda_v",
             SparseMatrix::from_columns(2, {SparseVec::unit(0, Q), SparseVec::unit(1, Q), SparseVec::unit(1, Q), {}}));

  b.sub_basis("kz4", "g2", {0, 2});
  b.sub_basis("ks3", "a3", {0, 4, 5});
  b.sub_basis("ks3", "c12", {0, 1});
  b.sub_basis("ks3", "c13", {0, 2});
  b.sub_basis("ks3", "c23", {0, 3});
  b.sub_basis("lambda_vw", "v", {0, 1});
  b.sub_basis("lambda_vw", "w", {0, 2});
  b.sub("lambda_vw", "v+w", {SparseVec::unit(0, Q), SparseVec::unit(1, Q) + SparseVec::unit(2, Q)});
  return b.finish();
}

Workspace z4_context() {
  const FieldSpec Q = FieldSpec::rationals();
  const FgAbGroup z4 = FgAbGroup::cyclic(4);
  const Bicharacter phi(z4, Q, {{Scalar(Q, -1)}});
  Builder b(Q, z4, phi);
  b.algebra(group_algebra(FiniteGroupTable::cyclic(2, "t"), Q, phi), "kz2");
  b.algebra(group_algebra(FiniteGroupTable::cyclic(4, "g"), Q, phi), "kz4");
  b.algebra(exterior_hopf(Q, phi, {el(z4, {1})}, {"v"}), "lambda_v1");
  b.algebra(exterior_hopf(Q, phi, {el(z4, {1}), el(z4, {3})}, {"a", "b"}), "lambda_13");
  b.basis_morphism("pi_z4_z2", "kz4", "kz2", {0, 1, 0, 1});
  b.basis_morphism("proj_13_1", "lambda_13", "lambda_v1", {0, 1, -1, -1});
  b.basis_morphism("incl_1_13", "lambda_v1", "lambda_13", {0, 1});
  b.sub_basis("kz4", "g2", {0, 2});
  b.sub_basis("lambda_13", "a", {0, 1});
  b.sub_basis("lambda_13", "b", {0, 2});
  return b.finish();
}

Workspace klein_context() {
  const FieldSpec Q = FieldSpec::rationals();
  const FgAbGroup k4(0, {2, 2});
  const Bicharacter phi(k4, Q, {{Scalar(Q, -1), Scalar(Q, 1)}, {Scalar(Q, 1), Scalar(Q, -1)}});
  Builder b(Q, k4, phi);
  b.algebra(group_algebra(FiniteGroupTable::cyclic(2, "t"), Q, phi), "kz2");
  b.algebra(exterior_hopf(Q, phi, {el(k4, {1, 0}), el(k4, {0, 1})}, {"v", "w"}), "lambda_e1e2");
  b.algebra(exterior_hopf(Q, phi, {el(k4, {1, 0})}, {"v"}), "lambda_e1");
  b.basis_morphism("proj_e1", "lambda_e1e2", "lambda_e1", {0, 1, -1, -1});
  b.basis_morphism("incl_e1", "lambda_e1", "lambda_e1e2", {0, 1});
  b.sub_basis("lambda_e1e2", "v", {0, 1});
  b.sub_basis("lambda_e1e2", "w", {0, 2});
  return b.finish();
}

Workspace f5_context() {
  const FieldSpec F5 = FieldSpec::prime(5);
  const FgAbGroup g44(0, {4, 4});
  const Bicharacter phi(g44, F5, {{Scalar(F5, -1), Scalar(F5, 2)}, {Scalar(F5, 3), Scalar(F5, -1)}});
  Builder b(F5, g44, phi);
  b.algebra(group_algebra(FiniteGroupTable::cyclic(2, "t"), F5, phi), "kz2");
  b.algebra(group_algebra(FiniteGroupTable::s3(), F5, phi), "ks3");
  b.algebra(exterior_hopf(F5, phi, {el(g44, {1, 0}), el(g44, {0, 1})}, {"v", "w"}), "lambda_q");
  b.algebra(exterior_hopf(F5, phi, {el(g44, {1, 0})}, {"v"}), "lambda_e1");
  b.basis_morphism("sign_s3", "ks3", "kz2", {0, 1, 1, 1, 0, 0});
  b.basis_morphism("proj_q_e1", "lambda_q", "lambda_e1", {0, 1, -1, -1});
  b.basis_morphism("incl_e1_q", "lambda_e1", "lambda_q", {0, 1});
  b.sub_basis("ks3", "a3", {0, 4, 5});
  b.sub_basis("ks3", "c12", {0, 1});
  b.sub_basis("lambda_q", "v", {0, 1});
  b.sub_basis("lambda_q", "w", {0, 2});
  return b.finish();
}

}  // namespace

std::vector<std::string> corpus_contexts() { return {"super", "z4", "klein", "f5"}; }

Workspace corpus_workspace(const std::string& context) {
  if (context == "super") return super_context();
  if (context == "z4") return z4_context();
  if (context == "klein") return klein_context();
  if (context == "f5") return f5_context();
  throw Error(ErrorCode::UnknownName, "unknown corpus context " + context);
}

}  // namespace chopf
